// SPDX-License-Identifier: Apache-2.0
#include "wsp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "wsp/bases.hpp"
#include "wsp/operators.hpp"
#include "wsp/phase_space.hpp"
#include "wsp/wtransform.hpp"

namespace wsp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using ForwardFn = std::function<Spectrum(const Superpotential&, const SampledSignal&, const GridPtr&)>;

class Runner {
 public:
  explicit Runner(const VerifyConfig& c) : cfg_(c), tol_(default_tolerances()) {
    for (const auto& [k, v] : c.tolerances) {
      if (!tol_.count(k)) throw Error(ErrorCode::InvalidArgument, "unknown tolerance '" + k + "'");
      tol_[k] = v;
    }
    for (const auto& coeffs : c.superpotentials) ws_.push_back(validate(std::span<const double>(coeffs)));
    if (ws_.empty()) throw Error(ErrorCode::InvalidArgument, "no superpotentials configured");
    for (std::size_t k = 0; k < ws_.size(); ++k) {
      if (!ws_[k].is_linear()) nonlinear_.push_back(k);
    }
    if (!c.transform_only.empty()) {
      transform_only_ = validate(std::span<const double>(c.transform_only));
    }
    if (c.refinement.size() < 2) throw Error(ErrorCode::InvalidArgument, "refinement needs at least two sizes");
    grid_ = uniform_x_grid(c.xmin, c.xmax, c.n);
    p_grid_ = uniform_p_grid(c.pmin, c.pmax, c.m);
    fwd_ = c.inject_kernel_sign_fault
               ? ForwardFn([](const Superpotential& W, const SampledSignal& f, const GridPtr& p) {
                   return detail::forward_with_sign(W, f, p, +1);
                 })
               : ForwardFn([](const Superpotential& W, const SampledSignal& f, const GridPtr& p) {
                   return forward(W, f, p);
                 });
  }

  VerifyReport run() {
    std::vector<int> which = cfg_.criteria;
    if (which.empty()) {
      for (int k = 1; k <= kCriterionCount; ++k) which.push_back(k);
    }
    for (int k : which) {
      switch (k) {
        case 1: commutator(); break;
        case 2: classification(); break;
        case 3: similarity(); break;
        case 4: symmetrized(); break;
        case 5: orthonormality(); break;
        case 6: spectrum(); break;
        case 7: invariance(); break;
        case 8: round_trip(); break;
        case 9: uncertainty(); break;
        case 10: unbiased(); break;
        case 11: coherent(); break;
        case 12: wigner_checks(); break;
        case 13: chirp(); break;
        default: throw Error(ErrorCode::InvalidArgument, "unknown criterion " + std::to_string(k));
      }
    }
    return std::move(report_);
  }

 private:
  double tol(const std::string& k) const { return tol_.at(k); }

  void add(int criterion, std::string name, double value, double lower, double upper) {
    const bool pass = std::isfinite(value) && value >= lower && value <= upper;
    report_.checks.push_back({criterion, std::move(name), value, lower, upper, pass});
  }

  std::string wname(const Superpotential& W) const { return describe(W.coeffs()); }

  static std::string fmt(double a) {
    std::ostringstream os;
    os << a;
    return os.str();
  }

  // 1: O(h^2) decay of the commutator defect.
  void commutator() {
    const double r = tol("commutator_ratio_halfwidth");
    for (const Superpotential& W : ws_) {
      std::vector<std::pair<std::string, double>> kinds;
      for (double a : cfg_.alphas) kinds.emplace_back("alpha=" + fmt(a), a);
      kinds.emplace_back("symmetrized", std::numeric_limits<double>::quiet_NaN());
      for (const auto& [label, alpha] : kinds) {
        std::vector<double> d;
        for (std::size_t n : cfg_.refinement) {
          const GridPtr g = uniform_x_grid(cfg_.xmin, cfg_.xmax, n);
          std::vector<cplx> fv(n);
          for (std::size_t i = 0; i < n; ++i) fv[i] = std::exp(-g->node(i) * g->node(i));
          const SampledSignal f(g, std::move(fv));
          const OperatorMatrix P = std::isnan(alpha) ? build_momentum_symmetrized(W, g, 0.5)
                                                     : build_momentum_alpha(W, g, alpha);
          d.push_back(commutator_defect(W, P, f));
          OperatorRecord rec;
          rec.w = wname(W);
          rec.kind = std::string(to_string(P.kind));
          rec.alpha = std::isnan(alpha) ? 0.5 : alpha;
          rec.n = n;
          rec.commutator_defect = d.back();
          report_.operators.push_back(rec);
        }
        for (std::size_t k = 0; k + 1 < d.size(); ++k) {
          add(1,
              "commutator ratio " + wname(W) + " " + label + " N=" + std::to_string(cfg_.refinement[k]) + "->" +
                  std::to_string(cfg_.refinement[k + 1]),
              d[k] / d[k + 1], 4.0 - r, 4.0 + r);
        }
      }
    }
  }

  // 2: which measure each ordering is self-adjoint under.
  void classification() {
    const double small = tol("self_adjoint_rel");
    const double large = tol("bounded_away_rel");
    for (std::size_t k : nonlinear_) {
      const Superpotential& W = ws_[k];
      auto record = [&](const OperatorMatrix& P, const std::string& label, bool dx_small, bool dw_small) {
        const AdjointReport a = adjoint_report(P, W);
        OperatorRecord rec;
        rec.w = wname(W);
        rec.kind = std::string(to_string(P.kind));
        rec.alpha = P.alpha;
        rec.n = cfg_.n;
        rec.defect_dx = a.defect_dx;
        rec.defect_dW = a.defect_dW;
        rec.norm = a.norm;
        rec.classification = std::string(to_string(a.classification));
        report_.operators.push_back(rec);
        const std::string base = wname(W) + " " + label + " ";
        add(2, base + "defect_dx/|P|", a.defect_dx / a.norm, dx_small ? 0.0 : large, dx_small ? small : kInf);
        add(2, base + "defect_dW/|P|", a.defect_dW / a.norm, dw_small ? 0.0 : large, dw_small ? small : kInf);
      };
      for (double a : cfg_.alphas) {
        record(build_momentum_alpha(W, grid_, a), "alpha=" + fmt(a), a == 0.5, a == 0.0);
      }
      record(build_momentum_symmetrized(W, grid_, 0.5), "symmetrized", true, false);
    }
  }

  // 3: S P_alpha S^-1 = P_0.
  void similarity() {
    for (std::size_t k : nonlinear_) {
      const Superpotential& W = ws_[k];
      for (double a : cfg_.alphas) {
        const SimilarityResult s = similarity_check(W, grid_, a);
        OperatorRecord rec;
        rec.w = wname(W);
        rec.kind = "similarity";
        rec.alpha = a;
        rec.n = cfg_.n;
        rec.similarity_residual = s.residual;
        rec.norm = s.reference_norm;
        report_.operators.push_back(rec);
        add(3, "similarity " + wname(W) + " alpha=" + fmt(a), s.residual / s.reference_norm, 0.0,
            tol("similarity_rel"));
      }
    }
  }

  // 4: the symmetrized operator does not depend on alpha.
  void symmetrized() {
    for (std::size_t k : nonlinear_) {
      const Superpotential& W = ws_[k];
      std::vector<DenseMatrix> blocks;
      for (double a : cfg_.alphas) blocks.push_back(interior_block(build_momentum_symmetrized(W, grid_, a).entries));
      const double ref = operator_norm(blocks.front());
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
          add(4,
              "symmetrized " + wname(W) + " alpha=" + fmt(cfg_.alphas[i]) + " vs " + fmt(cfg_.alphas[j]),
              operator_norm(blocks[i] - blocks[j]) / ref, 0.0, tol("symmetrized_rel"));
        }
      }
      // The literal ordering average converges to the same operator at O(h^2).
      const double a = cfg_.alphas.size() > 1 ? cfg_.alphas[1] : 0.3;
      std::vector<double> gap;
      for (std::size_t n : cfg_.refinement) {
        const GridPtr g = uniform_x_grid(cfg_.xmin, cfg_.xmax, n);
        const DenseMatrix red = interior_block(build_momentum_symmetrized(W, g, a).entries);
        const DenseMatrix avg = interior_block(build_momentum_ordered_average(W, g, a).entries);
        gap.push_back(operator_norm(avg - red) / operator_norm(red));
      }
      for (std::size_t i = 0; i + 1 < gap.size(); ++i) {
        const double r = tol("commutator_ratio_halfwidth");
        add(4,
            "ordering average convergence " + wname(W) + " alpha=" + fmt(a) + " N=" +
                std::to_string(cfg_.refinement[i]) + "->" + std::to_string(cfg_.refinement[i + 1]),
            gap[i] / gap[i + 1], 4.0 - r, 4.0 + r);
      }
    }
  }

  // 5: Gram matrix of the oscillator states under dW.
  void orthonormality() {
    constexpr int jmax = 12;
    for (const Superpotential& W : ws_) {
      std::vector<SampledSignal> psi;
      for (int j = 0; j <= jmax; ++j) psi.push_back(ho_eigenstate(W, grid_, j).signal);
      double worst = 0.0;
      for (int a = 0; a <= jmax; ++a) {
        for (int b = 0; b <= jmax; ++b) {
          const cplx g = inner_product(psi[a], psi[b], Measure::dW, &W);
          worst = std::max(worst, std::abs(g - (a == b ? 1.0 : 0.0)));
        }
      }
      add(5, "gram j<=12 " + wname(W), worst, 0.0, tol("gram"));
    }
  }

  // 6: forward(psi_j) = (-i)^j psi_j.
  void spectrum() {
    for (const Superpotential& W : ws_) {
      for (int j = 0; j <= 12; ++j) {
        const SampledSignal psi = ho_eigenstate(W, grid_, j).signal;
        const Spectrum F = fwd_(W, psi, p_grid_);
        std::vector<cplx> target(F.values.size());
        for (std::size_t a = 0; a < target.size(); ++a) {
          target[a] = hermite_functions(p_grid_->node(a), j)[static_cast<std::size_t>(j)];
        }
        cplx num{0.0, 0.0};
        double den = 0.0;
        double fn = 0.0;
        for (std::size_t a = 0; a < target.size(); ++a) {
          const double w = p_grid_->weight(a);
          num += w * std::conj(target[a]) * F.values[a];
          den += w * std::norm(target[a]);
          fn += w * std::norm(F.values[a]);
        }
        const cplx lambda = num / den;
        double res = 0.0;
        for (std::size_t a = 0; a < target.size(); ++a) {
          res += p_grid_->weight(a) * std::norm(F.values[a] - lambda * target[a]);
        }
        const cplx expected = std::pow(cplx(0.0, -1.0), j);
        const std::string base = wname(W) + " j=" + std::to_string(j);
        add(6, "eigenvalue " + base, std::abs(lambda - expected), 0.0, tol("eigen"));
        add(6, "eigen residual " + base, std::sqrt(res / fn), 0.0, tol("eigen"));
      }
    }
  }

  // 7: exp(-x^6/2) is invariant for W = x^3.
  void invariance() {
    if (!transform_only_) return;
    const Superpotential& W = *transform_only_;
    const SampledSignal f = ho_eigenstate(W, grid_, 0).signal;
    add(7, "dW norm of input " + wname(W), std::abs(norm_squared(f, Measure::dW, &W) - 1.0), 0.0,
        tol("invariance"));
    const Spectrum F = fwd_(W, f, p_grid_);
    std::vector<cplx> target(F.values.size());
    for (std::size_t a = 0; a < target.size(); ++a) target[a] = hermite_functions(p_grid_->node(a), 0)[0];
    add(7, "invariance rel L2 " + wname(W), relative_l2(F.values, target, *p_grid_), 0.0, tol("invariance"));
  }

  std::vector<const Superpotential*> transform_ws() const {
    std::vector<const Superpotential*> out;
    for (const Superpotential& W : ws_) out.push_back(&W);
    if (transform_only_) out.push_back(&*transform_only_);
    return out;
  }

  // 8: inverse(forward(f)) = f, and the fast path matches the direct one.
  void round_trip() {
    const double alias_period = 2.0 * std::numbers::pi / p_grid_->spacing();
    for (const Superpotential* Wp : transform_ws()) {
      const Superpotential& W = *Wp;
      const std::vector<double> u = u_coordinates(W, *grid_);
      const std::vector<double> wd = dw_weights(W, *grid_);
      for (int j = 0; j <= 4; ++j) {
        const SampledSignal f = ho_eigenstate(W, grid_, j).signal;
        const Spectrum F = fwd_(W, f, p_grid_);
        const SampledSignal back = inverse(W, F, grid_);

        // The sampled p axis makes the inverse periodic in u with period
        // 2 pi / dp; compare where no replica of the support reaches.
        double peak = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) peak = std::max(peak, std::abs(f[i]));
        double radius = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (std::abs(f[i]) > 1e-12 * peak) radius = std::max(radius, std::abs(u[i]));
        }
        double num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < f.size(); ++i) {
          if (std::abs(u[i]) >= alias_period - radius) continue;
          num += wd[i] * std::norm(back[i] - f[i]);
          den += wd[i] * std::norm(f[i]);
        }
        const std::string base = wname(W) + " j=" + std::to_string(j);
        add(8, "round trip rel L2 " + base, std::sqrt(num / den), 0.0, tol("round_trip"));

        const Spectrum Ff = forward_fast(W, f, p_grid_);
        add(8, "fast vs direct rel L2 " + base, relative_l2(Ff.values, F.values, *p_grid_), 0.0, tol("fast"));
      }
    }
  }

  static SampledSignal normalized(const SampledSignal& f, const Superpotential& W) {
    const double n2 = norm_squared(f, Measure::dW, &W);
    std::vector<cplx> v(f.values().begin(), f.values().end());
    for (cplx& c : v) c /= std::sqrt(n2);
    return SampledSignal(f.grid(), std::move(v));
  }

  UncertaintyResult uncertainty_of(const Superpotential& W, const SampledSignal& f) const {
    return uncertainty_from_spectrum(W, f, fwd_(W, f, p_grid_));
  }

  // 9: Delta W Delta p >= 1/2 with equality for the ground state.
  void uncertainty() {
    const double t = tol("uncertainty");
    std::mt19937_64 rng(cfg_.seed);
    std::normal_distribution<double> normal;
    for (const Superpotential& W : ws_) {
      const SampledSignal g0 = ho_eigenstate(W, grid_, 0).signal;
      const UncertaintyResult r0 = uncertainty_of(W, g0);
      add(9, "ground state product " + wname(W), r0.product, 0.5 - t, 0.5 + t);
      double lowest = kInf;
      for (int draw = 0; draw < 100; ++draw) {
        std::vector<cplx> c(17);
        double n2 = 0.0;
        for (cplx& v : c) {
          v = cplx(normal(rng), normal(rng));
          n2 += std::norm(v);
        }
        for (cplx& v : c) v /= std::sqrt(n2);
        const SampledSignal f = normalized(fock_to_signal(W, FockVector(c), grid_), W);
        lowest = std::min(lowest, uncertainty_of(W, f).product);
      }
      add(9, "min product over 100 random states " + wname(W), lowest, 0.5 - t, kInf);
    }
  }

  // 10: mutually unbiased bases.
  void unbiased() {
    const double inv = 1.0 / std::sqrt(2.0 * std::numbers::pi);
    for (const Superpotential& W : ws_) {
      double worst = 0.0;
      for (double p : {-2.7, -1.0, 0.0, 1.0, 2.7}) {
        const BasisVector a = mub_momentum_state(W, grid_, p);
        const BasisVector b = mub_chirp_state(W, grid_, p);
        for (std::size_t i = 0; i < grid_->size(); ++i) {
          worst = std::max(worst, std::abs(std::abs(a.signal[i]) - inv) / inv);
          worst = std::max(worst, std::abs(std::abs(b.signal[i]) - inv) / inv);
        }
      }
      add(10, "pointwise modulus " + wname(W), worst, 0.0, tol("mub_modulus"));
      const UnbiasednessReport r = unbiasedness_check(W, grid_);
      add(10, "overlap spread position-momentum " + wname(W), r.position_momentum, 0.0, tol("mub_overlap"));
      add(10, "overlap spread position-chirp " + wname(W), r.position_chirp, 0.0, tol("mub_overlap"));
      add(10, "overlap spread momentum-chirp " + wname(W), r.momentum_chirp, 0.0, tol("mub_overlap"));
    }
  }

  // 11: coherent states.
  void coherent() {
    const std::vector<cplx> zs{{0.0, 0.0}, {0.5, 0.0}, {1.0, 0.0}, {0.0, 2.0}, {-1.2, 1.6}, {2.0, 0.0}, {1.0, -1.0}};
    std::vector<CoherentState> states;
    for (const cplx& z : zs) {
      states.push_back(coherent_state(z, kMaxFockIndex));
      std::ostringstream os;
      os << "eigen residual z=" << z;
      add(11, os.str(), states.back().eigen_residual, 0.0, tol("coherent"));
    }
    double worst = 0.0;
    for (std::size_t a = 0; a < zs.size(); ++a) {
      for (std::size_t b = 0; b < zs.size(); ++b) {
        const cplx exact = std::exp(std::conj(zs[a]) * zs[b] - 0.5 * std::norm(zs[a]) - 0.5 * std::norm(zs[b]));
        worst = std::max(worst, std::abs(inner(states[a].state, states[b].state) - exact));
      }
    }
    add(11, "overlap formula max error", worst, 0.0, tol("coherent"));
  }

  // 12: Wigner function of the ground state.
  void wigner_checks() {
    const Superpotential& W = nonlinear_.empty() ? ws_.front() : ws_[nonlinear_.front()];
    const GridPtr ug = uniform_w_grid(W, cfg_.xmin, cfg_.xmax, cfg_.n);
    const GridPtr pa = uniform_p_grid(-6.0, 6.0, 241);
    const SampledSignal g = ho_eigenstate(W, ug, 0).signal;
    const WignerGrid wg = wigner(g, pa);
    double worst = 0.0;
    for (std::size_t k = 0; k < ug->size(); ++k) {
      const double u = ug->node(k);
      if (std::abs(u) > 6.0) continue;
      for (std::size_t a = 0; a < pa->size(); ++a) {
        const double p = pa->node(a);
        worst = std::max(worst, std::abs(wg(k, a) - std::exp(-u * u - p * p) / std::numbers::pi));
      }
    }
    add(12, "ground state max error on [-6,6]^2", worst, 0.0, tol("wigner_max"));
    double diff = 0.0, ref = 0.0, mass = 0.0;
    for (std::size_t k = 0; k < ug->size(); ++k) {
      double marg = 0.0;
      for (std::size_t a = 0; a < pa->size(); ++a) marg += pa->weight(a) * wg(k, a);
      diff += ug->weight(k) * std::abs(marg - std::norm(g[k]));
      ref += ug->weight(k) * std::norm(g[k]);
      mass += ug->weight(k) * marg;
    }
    add(12, "u-marginal rel L1", diff / ref, 0.0, tol("wigner_marginal"));
    add(12, "total mass", mass, 1.0 - tol("wigner_mass"), 1.0 + tol("wigner_mass"));
    add(12, "imaginary residue", wg.imag_residue, 0.0, tol("wigner_imag"));
  }

  // 13: spectrogram ridge of a W-tone.
  void chirp() {
    if (nonlinear_.empty()) return;
    const Superpotential& W = ws_[nonlinear_.front()];
    std::vector<double> centers;
    for (int k = 0; k <= 10; ++k) centers.push_back(-1.5 + 0.3 * k);
    for (double c : {1.0, 3.0}) {
      std::vector<cplx> v(grid_->size());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::polar(1.0, c * W.eval(grid_->node(i)));
      const SampledSignal f(grid_, std::move(v));
      const Spectrogram s = windowed(W, f, nullptr, centers, p_grid_);
      std::size_t expected = 0;
      for (std::size_t a = 1; a < p_grid_->size(); ++a) {
        if (std::abs(p_grid_->node(a) - c) < std::abs(p_grid_->node(expected) - c)) expected = a;
      }
      double misses = 0.0;
      for (std::size_t r = 0; r < s.rows(); ++r) {
        std::size_t best = 0;
        for (std::size_t a = 1; a < s.cols(); ++a) {
          if (s(r, a) > s(r, best)) best = a;
        }
        if (best != expected) misses += 1.0;
      }
      add(13, "ridge misses " + wname(W) + " c=" + fmt(c), misses, 0.0, 0.0);
    }
  }

  const VerifyConfig& cfg_;
  std::map<std::string, double> tol_;
  std::vector<Superpotential> ws_;
  std::vector<std::size_t> nonlinear_;
  std::optional<Superpotential> transform_only_;
  GridPtr grid_;
  GridPtr p_grid_;
  ForwardFn fwd_;
  VerifyReport report_;
};

}  // namespace

std::map<std::string, double> default_tolerances() {
  return {
      {"commutator_ratio_halfwidth", 0.5},
      {"self_adjoint_rel", 1e-8},
      {"bounded_away_rel", 1e-3},
      {"similarity_rel", 1e-12},
      {"symmetrized_rel", 1e-10},
      {"gram", 1e-8},
      {"eigen", 1e-5},
      {"invariance", 1e-6},
      {"round_trip", 1e-6},
      {"fast", 1e-6},
      {"uncertainty", 1e-6},
      {"mub_modulus", 1e-12},
      {"mub_overlap", 0.05},
      {"coherent", 1e-10},
      {"wigner_max", 1e-6},
      {"wigner_marginal", 1e-4},
      {"wigner_mass", 1e-4},
      {"wigner_imag", 1e-10},
  };
}

bool VerifyReport::all_pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

bool VerifyReport::criterion_pass(int criterion) const noexcept {
  bool any = false;
  for (const CheckResult& c : checks) {
    if (c.criterion != criterion) continue;
    any = true;
    if (!c.pass) return false;
  }
  return any;
}

std::string_view criterion_title(int criterion) noexcept {
  switch (criterion) {
    case 1: return "canonical commutator decays as O(h^2)";
    case 2: return "self-adjointness classification by measure";
    case 3: return "similarity equivalence to alpha = 0";
    case 4: return "symmetrized momentum is alpha-independent";
    case 5: return "oscillator states orthonormal under dW";
    case 6: return "transform eigenvalues (-i)^j";
    case 7: return "exp(-x^6/2) invariant for W = x^3";
    case 8: return "inverse round trip and fast path agreement";
    case 9: return "uncertainty product";
    case 10: return "mutually unbiased bases";
    case 11: return "coherent states";
    case 12: return "Wigner distribution of the ground state";
    case 13: return "spectrogram ridge of a W-tone";
    default: return "unknown";
  }
}

VerifyReport run_verification(const VerifyConfig& config) { return Runner(config).run(); }

std::string describe(const std::vector<double>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0.0) continue;
    if (!first) os << '+';
    first = false;
    if (coeffs[k] != 1.0) os << coeffs[k] << '*';
    os << 'x';
    if (k > 0) os << '^' << (k + 1);
  }
  return first ? "0" : os.str();
}

}  // namespace wsp
