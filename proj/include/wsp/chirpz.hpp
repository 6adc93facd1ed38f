// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <span>
#include <vector>

namespace wsp {

/// Evaluates X_a = sum_k x_k exp(sign * i * (p0 + a dp) * (u0 + k du)) for
/// a = 0 .. m-1 with Bluestein's algorithm (three FFTs of a padded
/// power-of-two length). Costs O((K + m) log(K + m)) and places no
/// constraint on the product du * dp.
std::vector<std::complex<double>> chirp_z(std::span<const std::complex<double>> x, double u0, double du,
                                          double p0, double dp, std::size_t m, int sign);

}  // namespace wsp
