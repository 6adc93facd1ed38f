#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "wsp/grid.hpp"

using namespace wsp;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

SampledSignal sample(const GridPtr& g, auto&& fn) {
  std::vector<cplx> v(g->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(g->node(i));
  return SampledSignal(g, std::move(v));
}

}  // namespace

TEST_SUITE("grids") {
  TEST_CASE("uniform x grid") {
    const GridPtr g = uniform_x_grid(0.0, 1.0, 11);
    CHECK(g->size() == 11);
    CHECK(g->spacing() == doctest::Approx(0.1));
    CHECK(g->weight(0) == doctest::Approx(0.05));
    CHECK(g->weight(10) == doctest::Approx(0.05));
    CHECK(g->weight(5) == doctest::Approx(0.1));
    CHECK(g->rep() == Rep::x_domain);

    const GridPtr h = uniform_x_grid(-5.0, 5.0, 8);
    CHECK(h->size() == 8);
    CHECK(h->spacing() == doctest::Approx(10.0 / 7.0));

    CHECK(code_of([] { (void)uniform_x_grid(1.0, 1.0, 16); }) == ErrorCode::BadBounds);
    CHECK(code_of([] { (void)uniform_x_grid(2.0, 1.0, 16); }) == ErrorCode::BadBounds);
    CHECK(code_of([] { (void)uniform_x_grid(0.0, 1.0, 2); }) == ErrorCode::TooFewNodes);
  }

  TEST_CASE("grid invariants are enforced") {
    CHECK(code_of([] { Grid({0.0, 1.0, 1.0}, {0.5, 0.5, 0.0}, Rep::x_domain); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { Grid({0.0, 1.0, 2.0}, {0.5, 1.0, 0.6}, Rep::x_domain); }) == ErrorCode::InvalidArgument);
    const Grid t = Grid::trapezoid({0.0, 0.1, 0.5, 2.0}, Rep::x_domain);
    double sum = 0.0;
    for (double w : t.weights()) sum += w;
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
    CHECK_FALSE(t.is_uniform());
    CHECK(code_of([&] { (void)t.spacing(); }) == ErrorCode::NonUniformGrid);
  }

  TEST_CASE("uniform w grid") {
    const auto x = validate({1.0});
    const auto x3 = validate({0.0, 0.0, 1.0});
    const auto xx3 = validate({1.0, 0.0, 1.0});

    const GridPtr a = uniform_w_grid(x, -1.0, 1.0, 3);
    CHECK(a->node(0) == -1.0);
    CHECK(a->node(1) == 0.0);
    CHECK(a->node(2) == 1.0);
    CHECK(a->rep() == Rep::w_domain);

    const GridPtr b = uniform_w_grid(x3, 0.0, 8.0, 3);
    CHECK(b->node(1) == 4.0);
    const std::vector<double> xb = x_images(x3, *b);
    CHECK(xb[0] == doctest::Approx(0.0));
    CHECK(xb[1] == doctest::Approx(std::cbrt(4.0)).epsilon(1e-14));
    CHECK(xb[2] == doctest::Approx(2.0).epsilon(1e-14));

    const std::vector<double> xc = x_images(xx3, *uniform_w_grid(xx3, -2.0, 2.0, 5));
    for (std::size_t i = 0; i < 5; ++i) CHECK(xc[i] == doctest::Approx(-xc[4 - i]).epsilon(1e-14));
    CHECK(xc[0] == doctest::Approx(-1.0).epsilon(1e-14));
  }

  TEST_CASE("inner products") {
    const GridPtr unit = uniform_x_grid(0.0, 1.0, 101);
    const SampledSignal one = sample(unit, [](double) { return cplx(1.0); });
    CHECK(std::abs(inner_product(one, one, Measure::dx) - 1.0) <= 1e-12);

    // Analytic oracle: the integral of exp(-x^2)/sqrt(pi) over the line is 1.
    const GridPtr g = uniform_x_grid(-8.0, 8.0, 512);
    const SampledSignal gauss =
        sample(g, [](double x) { return cplx(std::exp(-x * x / 2.0) / std::pow(std::numbers::pi, 0.25)); });
    CHECK(std::abs(inner_product(gauss, gauss, Measure::dx) - 1.0) <= 1e-8);

    const auto x = validate({1.0});
    CHECK(inner_product(gauss, gauss, Measure::dW, &x) == inner_product(gauss, gauss, Measure::dx));
    CHECK(code_of([&] { (void)inner_product(gauss, one, Measure::dx); }) == ErrorCode::GridMismatch);
    CHECK(code_of([&] { (void)inner_product(gauss, gauss, Measure::dW); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("inner product symmetries") {
    const auto W = validate({1.0, 0.0, 1.0});
    const GridPtr g = uniform_x_grid(-3.0, 3.0, 301);
    const SampledSignal f = sample(g, [](double x) { return std::exp(cplx(-x * x, 0.7 * x)); });
    const SampledSignal h = sample(g, [](double x) { return std::exp(cplx(-0.5 * x * x, -1.3 * x * x)) * (1.0 + x); });
    for (Measure m : {Measure::dx, Measure::dW}) {
      const cplx fg = inner_product(f, h, m, &W);
      const cplx gf = inner_product(h, f, m, &W);
      CHECK(std::abs(fg - std::conj(gf)) <= 1e-15 * std::abs(fg));
    }
    // dW on an x grid is dx against W'-weighted samples.
    std::vector<cplx> hw(h.values().begin(), h.values().end());
    for (std::size_t i = 0; i < hw.size(); ++i) hw[i] *= W.derivative(g->node(i));
    const cplx lhs = inner_product(f, h, Measure::dW, &W);
    const cplx rhs = inner_product(f, SampledSignal(g, hw), Measure::dx);
    CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(lhs));
    CHECK(norm_squared(f, Measure::dW, &W) == doctest::Approx(inner_product(f, f, Measure::dW, &W).real()));
  }

  TEST_CASE("signals reject bad samples") {
    const GridPtr g = uniform_x_grid(0.0, 1.0, 5);
    CHECK(code_of([&] { SampledSignal(g, std::vector<cplx>(4)); }) == ErrorCode::GridMismatch);
    CHECK(code_of([&] { SampledSignal(g, std::vector<cplx>(5, cplx(NAN, 0.0))); }) == ErrorCode::InvalidArgument);
    CHECK(SampledSignal::zeros(g).size() == 5);
  }

  TEST_CASE("resample identity, constants and linear functions") {
    const auto x = validate({1.0});
    const auto W = validate({1.0, 0.0, 1.0});
    const GridPtr g = uniform_x_grid(-2.0, 2.0, 41);
    const SampledSignal f = sample(g, [](double v) { return std::exp(cplx(-v * v, v)); });
    for (int order : {1, 3, 5, 7}) {
      const ResampleResult r = resample(f, g, x, order);
      for (std::size_t i = 0; i < f.size(); ++i) CHECK(r.signal[i] == f[i]);
      CHECK(r.clipped_nodes == 0);
    }

    // x grid to a uniform u grid inside the same hull.
    const GridPtr target = uniform_u_grid(W.eval(-1.9), W.eval(1.9), 57);
    const SampledSignal c = sample(g, [](double) { return cplx(2.5, -1.0); });
    const SampledSignal lin = sample(g, [&](double v) { return cplx(3.0 * W.eval(v) - 1.0, 0.5); });
    for (int order : {1, 3, 5, 7}) {
      const ResampleResult rc = resample(c, target, W, order);
      const ResampleResult rl = resample(lin, target, W, order);
      for (std::size_t k = 0; k < target->size(); ++k) {
        CHECK(std::abs(rc.signal[k] - cplx(2.5, -1.0)) <= 1e-13);
        CHECK(std::abs(rl.signal[k] - cplx(3.0 * target->node(k) - 1.0, 0.5)) <= 1e-12 * (1.0 + std::abs(target->node(k))));
      }
    }
    CHECK_THROWS_AS((void)resample(c, target, W, 2), Error);
  }

  TEST_CASE("resample clips outside the source hull") {
    const auto x = validate({1.0});
    const GridPtr src = uniform_x_grid(-1.0, 1.0, 21);
    const SampledSignal f = sample(src, [](double) { return cplx(1.0); });
    const ResampleResult r = resample(f, uniform_x_grid(-2.0, 2.0, 41), x, 3);
    CHECK(r.clipped_nodes == 20);
    CHECK(r.signal[0] == cplx(0.0));
    CHECK(r.signal[20] == cplx(1.0));
    // Shrinking the target drops source energy.
    const ResampleResult s = resample(f, uniform_x_grid(-0.5, 0.5, 11), x, 3);
    CHECK(s.clipped_nodes == 0);
    CHECK(s.clipped_energy_fraction == doctest::Approx(0.45).epsilon(1e-12));
  }

  TEST_CASE("resample round trip converges at the interpolation order") {
    // Refinement oracle: x grid -> uniform u grid -> back, compared with the
    // analytic function. The error must fall at least like h^(order+1) / 2.
    const auto W = validate({1.0, 0.0, 1.0});
    auto fn = [&](double x) { return std::exp(cplx(-0.5 * W.eval(x) * W.eval(x), 0.8 * W.eval(x))); };
    for (int order : {1, 3}) {
      std::vector<double> errs;
      for (std::size_t n : {200, 400, 800}) {
        const GridPtr g = uniform_x_grid(-2.0, 2.0, n);
        const SampledSignal f = sample(g, fn);
        const GridPtr u = uniform_u_grid(W.eval(-2.0), W.eval(2.0), 4 * n);
        const ResampleResult there = resample(f, u, W, order);
        const GridPtr fine = uniform_x_grid(-1.5, 1.5, 301);
        const ResampleResult back = resample(there.signal, fine, W, order);
        double worst = 0.0;
        for (std::size_t i = 0; i < fine->size(); ++i) worst = std::max(worst, std::abs(back.signal[i] - fn(fine->node(i))));
        errs.push_back(worst);
      }
      for (std::size_t k = 0; k + 1 < errs.size(); ++k) {
        CHECK(errs[k + 1] < errs[k]);
        CHECK(errs[k] / errs[k + 1] > std::pow(2.0, order + 1) / 2.0);
      }
    }
  }

  TEST_CASE("coordinate helpers") {
    const auto W = validate({1.0, 0.0, 1.0});
    const GridPtr g = uniform_x_grid(-1.0, 1.0, 5);
    const std::vector<double> u = u_coordinates(W, *g);
    const std::vector<double> j = jacobian(W, *g);
    const std::vector<double> w = dw_weights(W, *g);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(u[i] == W.eval(g->node(i)));
      CHECK(j[i] == W.derivative(g->node(i)));
      CHECK(w[i] == g->weight(i) * j[i]);
    }
    const GridPtr ug = uniform_u_grid(-2.0, 2.0, 5);
    CHECK(u_coordinates(W, *ug)[3] == 1.0);
    CHECK(jacobian(W, *ug)[0] == doctest::Approx(4.0));
  }
}
