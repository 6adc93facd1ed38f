// SPDX-License-Identifier: Apache-2.0
#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include "wsp/bases.hpp"
#include "wsp/io.hpp"
#include "wsp/phase_space.hpp"
#include "wsp/verify.hpp"
#include "wsp/wtransform.hpp"

namespace wsp::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

constexpr const char* kOutputDirEnv = "WSP_OUTPUT_DIR";

// Resolved run configuration: defaults, then the config file, then flags.
struct Settings {
  std::vector<double> coeffs{1.0};
  std::optional<std::vector<std::vector<double>>> verify_ws;
  double xmin = -8.0;
  double xmax = 8.0;
  std::size_t n = 1024;
  double pmin = -8.0;
  double pmax = 8.0;
  std::size_t m = 1024;
  std::vector<double> alphas{0.0, 0.3, 0.5, 1.0};
  std::map<std::string, double> tolerances;
  std::string output_dir = "wsp_out";
  bool inject_kernel_sign = false;

  json echo() const {
    json j;
    j["superpotential"] = {{"coeffs", coeffs}};
    j["grid"] = {{"xmin", xmin}, {"xmax", xmax}, {"N", n}};
    j["p_axis"] = {{"pmin", pmin}, {"pmax", pmax}, {"M", m}};
    j["alphas"] = alphas;
    j["tolerances"] = tolerances;
    j["output_dir"] = output_dir;
    if (verify_ws) j["superpotentials"] = *verify_ws;
    if (inject_kernel_sign) j["inject_fault"] = "kernel_sign";
    return j;
  }
};

// Values given on the command line; unset ones leave the config alone.
struct Flags {
  std::string config;
  std::vector<double> coeffs;
  std::optional<double> xmin, xmax, pmin, pmax;
  std::optional<std::size_t> n, m;
  std::vector<double> alphas;
  std::string output_dir;
  std::string inject_fault;
};

std::vector<double> coeff_list(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "coefficients must be a JSON array");
  return j.get<std::vector<double>>();
}

void apply_config_file(Settings& s, const std::string& path) {
  const std::string text = io::read_text(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "config must be a JSON object");
  try {
    if (j.contains("superpotential")) s.coeffs = coeff_list(j.at("superpotential").at("coeffs"));
    if (j.contains("superpotentials")) {
      std::vector<std::vector<double>> ws;
      for (const json& w : j.at("superpotentials")) ws.push_back(coeff_list(w.is_object() ? w.at("coeffs") : w));
      s.verify_ws = ws;
    }
    if (j.contains("grid")) {
      const json& g = j.at("grid");
      s.xmin = g.value("xmin", s.xmin);
      s.xmax = g.value("xmax", s.xmax);
      s.n = g.value("N", s.n);
    }
    if (j.contains("p_axis")) {
      const json& p = j.at("p_axis");
      s.pmin = p.value("pmin", s.pmin);
      s.pmax = p.value("pmax", s.pmax);
      s.m = p.value("M", s.m);
    }
    if (j.contains("alphas")) s.alphas = j.at("alphas").get<std::vector<double>>();
    if (j.contains("tolerances")) s.tolerances = j.at("tolerances").get<std::map<std::string, double>>();
    if (j.contains("output_dir")) s.output_dir = j.at("output_dir").get<std::string>();
    if (j.contains("inject_fault")) {
      const std::string f = j.at("inject_fault").get<std::string>();
      if (f != "kernel_sign") throw Error(ErrorCode::ParseError, "unknown fault '" + f + "'");
      s.inject_kernel_sign = true;
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad config field: ") + e.what());
  }
}

Settings resolve(const Flags& f) {
  Settings s;
  if (!f.config.empty()) apply_config_file(s, f.config);
  if (!f.coeffs.empty()) s.coeffs = f.coeffs;
  if (f.xmin) s.xmin = *f.xmin;
  if (f.xmax) s.xmax = *f.xmax;
  if (f.n) s.n = *f.n;
  if (f.pmin) s.pmin = *f.pmin;
  if (f.pmax) s.pmax = *f.pmax;
  if (f.m) s.m = *f.m;
  if (!f.alphas.empty()) s.alphas = f.alphas;
  if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') s.output_dir = env;
  if (!f.output_dir.empty()) s.output_dir = f.output_dir;
  if (!f.inject_fault.empty()) {
    if (f.inject_fault != "kernel_sign") throw Error(ErrorCode::InvalidArgument, "unknown fault '" + f.inject_fault + "'");
    s.inject_kernel_sign = true;
  }
  return s;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    if (cell.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(cell, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != cell.size()) throw Error(ErrorCode::ParseError, "cannot parse number '" + cell + "'");
    out.push_back(v);
  }
  return out;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// Collects written files and emits the metadata sidecar at the end.
class OutputSet {
 public:
  OutputSet(const Settings& s, std::string command) : dir_(s.output_dir), command_(std::move(command)), config_(s.echo()) {}

  fs::path path(const std::string& name) {
    ensure_dir();
    return dir_ / name;
  }

  void write(const fs::path& p, const std::string& content) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    io::write_atomic(p, content);
    files_.push_back(p.string());
  }

  void finish(int exit_code) {
    if (files_.empty()) return;
    json meta;
    meta["command"] = command_;
    meta["finished_utc"] = utc_now();
    meta["exit_code"] = exit_code;
    meta["outputs"] = files_;
    meta["config"] = config_;
    ensure_dir();
    io::write_atomic(dir_ / "run_metadata.json", meta.dump(2) + "\n");
  }

 private:
  void ensure_dir() {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create output directory " + dir_.string());
  }

  fs::path dir_;
  std::string command_;
  json config_;
  std::vector<std::string> files_;
};

GridPtr x_grid(const Settings& s) { return uniform_x_grid(s.xmin, s.xmax, s.n); }
GridPtr p_grid(const Settings& s) { return uniform_p_grid(s.pmin, s.pmax, s.m); }

json check_json(const CheckResult& c) {
  auto bound = [](double v) { return std::isfinite(v) ? json(v) : json(nullptr); };
  return {{"criterion", c.criterion}, {"name", c.name},          {"value", c.value},
          {"lower", bound(c.lower)},  {"upper", bound(c.upper)}, {"pass", c.pass}};
}

json operator_json(const OperatorRecord& r) {
  json j{{"w", r.w}, {"kind", r.kind}, {"alpha", r.alpha}, {"N", r.n}};
  auto opt = [&](const char* key, double v) {
    if (v >= 0.0) j[key] = v;
  };
  opt("defect_dx", r.defect_dx);
  opt("defect_dW", r.defect_dW);
  opt("norm", r.norm);
  opt("commutator_defect", r.commutator_defect);
  opt("similarity_residual", r.similarity_residual);
  if (!r.classification.empty()) j["classification"] = r.classification;
  return j;
}

int cmd_validate(const Settings& s, std::ostream& out) {
  json report{{"coeffs", s.coeffs}};
  try {
    const Superpotential W = validate(std::span<const double>(s.coeffs));
    report["valid"] = true;
    report["monotonicity"] = std::string(to_string(W.monotonicity().tag));
    report["critical_points"] = W.monotonicity().critical_points;
    out << report.dump(2) << "\n";
    return kOk;
  } catch (const Error& e) {
    if (!is_validation_rejection(e.code())) throw;
    report["valid"] = false;
    report["error"] = std::string(to_string(e.code()));
    report["message"] = e.what();
    out << report.dump(2) << "\n";
    return kRejected;
  }
}

int cmd_verify(const Settings& s, const std::vector<int>& criteria, OutputSet& outputs, std::ostream& out) {
  VerifyConfig c;
  if (s.verify_ws) c.superpotentials = *s.verify_ws;
  c.xmin = s.xmin;
  c.xmax = s.xmax;
  c.n = s.n;
  c.pmin = s.pmin;
  c.pmax = s.pmax;
  c.m = s.m;
  c.alphas = s.alphas;
  c.tolerances = s.tolerances;
  c.criteria = criteria;
  c.inject_kernel_sign_fault = s.inject_kernel_sign;
  if (c.n != c.refinement.back()) c.refinement.back() = c.n;

  const VerifyReport r = run_verification(c);
  json report;
  report["pass"] = r.all_pass();
  json crit = json::array();
  std::vector<int> ran;
  for (const CheckResult& k : r.checks) {
    if (ran.empty() || ran.back() != k.criterion) ran.push_back(k.criterion);
  }
  for (int k : ran) {
    crit.push_back({{"criterion", k}, {"title", std::string(criterion_title(k))}, {"pass", r.criterion_pass(k)}});
    out << (r.criterion_pass(k) ? "PASS" : "FAIL") << "  [" << k << "] " << criterion_title(k) << "\n";
  }
  report["criteria"] = crit;
  json checks = json::array();
  for (const CheckResult& k : r.checks) checks.push_back(check_json(k));
  report["checks"] = checks;
  json ops = json::array();
  for (const OperatorRecord& o : r.operators) ops.push_back(operator_json(o));
  report["operators"] = ops;
  outputs.write(outputs.path("verify_report.json"), report.dump(2) + "\n");
  for (const CheckResult& k : r.checks) {
    if (!k.pass) out << "  failed: [" << k.criterion << "] " << k.name << " = " << k.value << "\n";
  }
  return r.all_pass() ? kOk : kVerificationFailed;
}

bool power_of_two(std::size_t v) { return std::has_single_bit(v); }

int cmd_transform(const Settings& s, const std::string& input, const std::string& direction, const std::string& path,
                  const std::string& output, OutputSet& outputs, std::ostream& out) {
  const Superpotential W = validate(std::span<const double>(s.coeffs));
  const io::SignalTable t = io::read_signal_csv(input);
  if (direction == "forward") {
    if (t.axis == "p") throw Error(ErrorCode::GridMismatch, "forward expects an x or w signal, got a p spectrum");
    const GridPtr g = io::grid_from_table(t);
    const SampledSignal f(g, t.values);
    const GridPtr pg = p_grid(s);
    Spectrum F;
    if (path == "fast") {
      if (!power_of_two(g->size()) || !power_of_two(pg->size())) {
        throw Error(ErrorCode::InvalidArgument, "the fast path needs power-of-two N and M");
      }
      F = forward_fast(W, f, pg);
    } else {
      F = forward(W, f, pg);
    }
    double e_in = norm_squared(f, Measure::dW, &W);
    double e_out = 0.0;
    for (std::size_t a = 0; a < F.values.size(); ++a) e_out += pg->weight(a) * std::norm(F.values[a]);
    const fs::path dest = output.empty() ? outputs.path("spectrum.csv") : fs::path(output);
    outputs.write(dest, io::format_signal_csv("p", pg->nodes(), F.values));
    out << "parseval_ratio " << io::format_double(e_in > 0.0 ? e_out / e_in : 0.0) << "\n";
    return kOk;
  }
  if (t.axis != "p") throw Error(ErrorCode::GridMismatch, "inverse expects a p spectrum");
  if (path == "fast") throw Error(ErrorCode::InvalidArgument, "the inverse has only the direct path");
  const GridPtr pg = io::grid_from_table(t);
  const Spectrum F{t.values, pg};
  const GridPtr xg = x_grid(s);
  const SampledSignal f = inverse(W, F, xg);
  double e_in = 0.0;
  for (std::size_t a = 0; a < F.values.size(); ++a) e_in += pg->weight(a) * std::norm(F.values[a]);
  const double e_out = norm_squared(f, Measure::dW, &W);
  const fs::path dest = output.empty() ? outputs.path("signal.csv") : fs::path(output);
  outputs.write(dest, io::format_signal_csv("x", xg->nodes(), f.values()));
  out << "parseval_ratio " << io::format_double(e_in > 0.0 ? e_out / e_in : 0.0) << "\n";
  return kOk;
}

int cmd_spectrogram(const Settings& s, const std::string& input, const std::string& window_spec,
                    const std::vector<double>& centers_in, const std::string& output, OutputSet& outputs,
                    std::ostream& out, std::ostream& err) {
  const Superpotential W = validate(std::span<const double>(s.coeffs));
  const io::SignalTable t = io::read_signal_csv(input);
  GridPtr g;
  std::vector<cplx> values;
  if (t.nodes.empty()) {
    g = x_grid(s);
    values.assign(g->size(), cplx{});
  } else {
    if (t.axis == "p") throw Error(ErrorCode::GridMismatch, "spectrogram expects an x or w signal");
    g = io::grid_from_table(t);
    values = t.values;
  }
  const SampledSignal f(g, std::move(values));

  std::optional<SampledSignal> window;
  if (window_spec != "ho0") {
    const io::SignalTable wt = io::read_signal_csv(window_spec);
    if (wt.nodes != t.nodes || wt.axis != t.axis) throw Error(ErrorCode::GridMismatch, "window and signal nodes differ");
    SampledSignal w(g, wt.values);
    const double n2 = norm_squared(w, Measure::dW, &W);
    if (!(n2 > 0.0)) throw Error(ErrorCode::NotNormalized, "window is identically zero");
    if (std::abs(n2 - 1.0) > 1e-6) {
      err << "warning: window dW norm^2 is " << n2 << "; renormalizing\n";
      for (cplx& v : w.mutable_values()) v /= std::sqrt(n2);
    }
    window = std::move(w);
  }

  std::vector<double> centers = centers_in;
  if (centers.empty()) {
    for (int k = 0; k <= 10; ++k) centers.push_back(-1.5 + 0.3 * k);
  }
  const GridPtr pg = p_grid(s);
  const Spectrogram sg = windowed(W, f, window ? &*window : nullptr, centers, pg);
  const fs::path dest = output.empty() ? outputs.path("spectrogram.csv") : fs::path(output);
  outputs.write(dest, io::format_table_csv("center\\p", sg.centers, pg->nodes(), sg.magnitudes));
  out << "rows " << sg.rows() << " cols " << sg.cols() << "\n";
  return kOk;
}

std::string label_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

int cmd_basis(const Settings& s, const std::string& family, const std::vector<double>& indices, double alpha,
              OutputSet& outputs, std::ostream& out) {
  const Superpotential W = validate(std::span<const double>(s.coeffs));
  const GridPtr g = x_grid(s);
  if (family != "mub" && family != "chirp" && family != "ho" && family != "alpha") {
    throw Error(ErrorCode::InvalidArgument, "unknown basis family '" + family + "'");
  }
  std::vector<double> idx = indices;
  if (idx.empty()) idx.push_back(0.0);
  std::vector<SampledSignal> written;
  for (double v : idx) {
    std::string name;
    std::optional<BasisVector> b;
    if (family == "mub") {
      b = mub_momentum_state(W, g, v);
      name = "basis_mub_p" + label_number(v) + ".csv";
    } else if (family == "chirp") {
      b = mub_chirp_state(W, g, v);
      name = "basis_chirp_p" + label_number(v) + ".csv";
    } else if (family == "alpha") {
      b = alpha_eigenstate(W, g, v, alpha);
      name = "basis_alpha" + label_number(alpha) + "_p" + label_number(v) + ".csv";
    } else {
      if (v < 0.0 || v != std::floor(v)) throw Error(ErrorCode::InvalidArgument, "oscillator indices must be integers");
      b = ho_eigenstate(W, g, static_cast<int>(v));
      name = "basis_ho_j" + label_number(v) + ".csv";
    }
    outputs.write(outputs.path(name), io::format_signal_csv("x", g->nodes(), b->signal.values()));
    written.push_back(b->signal);
    out << name << "\n";
  }
  if (family == "ho") {
    double worst = 0.0;
    for (std::size_t a = 0; a < written.size(); ++a) {
      for (std::size_t c = 0; c < written.size(); ++c) {
        const cplx v = inner_product(written[a], written[c], Measure::dW, &W);
        const double expect = idx[a] == idx[c] ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(v - expect));
      }
    }
    out << "gram_max_deviation " << io::format_double(worst) << "\n";
  }
  return kOk;
}

json fock_json(const FockVector& v) {
  json arr = json::array();
  for (const cplx& c : v.coeffs()) arr.push_back({c.real(), c.imag()});
  return arr;
}

int cmd_coherent(const Settings& s, const std::vector<double>& z, int jmax, bool signal, OutputSet& outputs,
                 std::ostream& out) {
  if (z.size() != 2) throw Error(ErrorCode::InvalidArgument, "--z expects 're,im'");
  const CoherentState c = coherent_state(cplx(z[0], z[1]), jmax);
  json j{{"z", z}, {"jmax", jmax}, {"tail", c.tail}, {"eigen_residual", c.eigen_residual}, {"coeffs", fock_json(c.state)}};
  outputs.write(outputs.path("coherent.json"), j.dump(2) + "\n");
  if (signal) {
    const Superpotential W = validate(std::span<const double>(s.coeffs));
    const GridPtr g = x_grid(s);
    const SampledSignal f = fock_to_signal(W, c.state, g);
    outputs.write(outputs.path("coherent_signal.csv"), io::format_signal_csv("x", g->nodes(), f.values()));
  }
  out << "eigen_residual " << io::format_double(c.eigen_residual) << "\ntail " << io::format_double(c.tail) << "\n";
  return kOk;
}

int cmd_wigner(const Settings& s, const std::string& input, const std::string& state, double wpmin, double wpmax,
               std::size_t wm, OutputSet& outputs, std::ostream& out) {
  const Superpotential W = validate(std::span<const double>(s.coeffs));
  std::optional<SampledSignal> g;
  if (!input.empty()) {
    const io::SignalTable t = io::read_signal_csv(input);
    if (t.axis == "p") throw Error(ErrorCode::GridMismatch, "Wigner input must be an x or w signal");
    const GridPtr src = io::grid_from_table(t);
    const SampledSignal f(src, t.values);
    if (src->rep() == Rep::w_domain && src->is_uniform()) {
      g = f;
    } else {
      const std::vector<double> u = u_coordinates(W, *src);
      g = resample(f, uniform_u_grid(u.front(), u.back(), src->size()), W, 7).signal;
    }
  } else {
    const GridPtr ug = uniform_u_grid(s.xmin, s.xmax, s.n);
    const auto colon = state.find(':');
    const std::string kind = state.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : state.substr(colon + 1);
    if (kind == "ho") {
      const std::vector<double> j = parse_list(arg.empty() ? "0" : arg);
      if (j.size() != 1 || j[0] < 0 || j[0] != std::floor(j[0])) throw Error(ErrorCode::InvalidArgument, "bad state");
      g = ho_eigenstate(W, ug, static_cast<int>(j[0])).signal;
    } else if (kind == "coherent") {
      const std::vector<double> z = parse_list(arg);
      if (z.size() != 2) throw Error(ErrorCode::InvalidArgument, "coherent state expects 're,im'");
      g = fock_to_signal(W, coherent_state(cplx(z[0], z[1]), kMaxFockIndex).state, ug);
    } else {
      throw Error(ErrorCode::InvalidArgument, "unknown state '" + state + "'");
    }
  }
  const GridPtr pa = uniform_p_grid(wpmin, wpmax, wm);
  const WignerGrid wg = wigner(*g, pa);
  outputs.write(outputs.path("wigner.csv"), io::format_table_csv("u\\p", wg.u_axis->nodes(), pa->nodes(), wg.values));
  out << "imag_residue " << io::format_double(wg.imag_residue) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Superpotential coordinate toolkit: operators, bases, W-transforms and phase space"};
  app.name("wsp");
  app.require_subcommand(1);
  app.fallthrough();

  Flags f;
  app.add_option("-c,--config", f.config, "JSON run configuration");
  app.add_option("--coeffs", f.coeffs, "superpotential coefficients a1,a2,...")->delimiter(',');
  app.add_option("--xmin", f.xmin);
  app.add_option("--xmax", f.xmax);
  app.add_option("-N,--nodes", f.n, "x grid size");
  app.add_option("--pmin", f.pmin);
  app.add_option("--pmax", f.pmax);
  app.add_option("-M,--pnodes", f.m, "p axis size");
  app.add_option("--alphas", f.alphas, "ordering parameters")->delimiter(',');
  app.add_option("-o,--output-dir", f.output_dir, std::string("output directory (env ") + kOutputDirEnv + ")");

  auto* validate_cmd = app.add_subcommand("validate", "check a superpotential and classify it");

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
  std::vector<int> criteria;
  verify_cmd->add_option("--criteria", criteria, "subset of criteria (1-13)")->delimiter(',');
  verify_cmd->add_option("--inject-fault", f.inject_fault, "test fixture: kernel_sign");

  auto* transform_cmd = app.add_subcommand("transform", "forward or inverse W-transform of a CSV signal");
  std::string t_input, t_direction = "forward", t_path = "direct", t_output;
  transform_cmd->add_option("-i,--input", t_input, "signal CSV")->required();
  transform_cmd->add_option("--direction", t_direction)->check(CLI::IsMember({"forward", "inverse"}));
  transform_cmd->add_option("--path", t_path)->check(CLI::IsMember({"direct", "fast"}));
  transform_cmd->add_option("--output", t_output, "output CSV (default in the output directory)");

  auto* spectro_cmd = app.add_subcommand("spectrogram", "windowed W-transform of a CSV signal");
  std::string s_input, s_window = "ho0", s_output;
  std::vector<double> s_centers;
  spectro_cmd->add_option("-i,--input", s_input, "signal CSV")->required();
  spectro_cmd->add_option("--window", s_window, "'ho0' or a window CSV on the signal's nodes");
  spectro_cmd->add_option("--centers", s_centers, "window centers in x")->delimiter(',');
  spectro_cmd->add_option("--output", s_output, "output CSV (default in the output directory)");

  auto* basis_cmd = app.add_subcommand("basis", "write basis vectors as CSV");
  std::string b_family;
  std::vector<double> b_indices;
  double b_alpha = 0.5;
  basis_cmd->add_option("--family", b_family, "mub, chirp, alpha or ho")->required();
  basis_cmd->add_option("--indices", b_indices, "p values, or j for ho")->delimiter(',');
  basis_cmd->add_option("--alpha", b_alpha);

  auto* coherent_cmd = app.add_subcommand("coherent", "coherent state in the oscillator basis");
  std::vector<double> c_z;
  int c_jmax = kMaxFockIndex;
  bool c_signal = false;
  coherent_cmd->add_option("--z", c_z, "re,im")->delimiter(',')->required();
  coherent_cmd->add_option("--jmax", c_jmax);
  coherent_cmd->add_flag("--signal", c_signal, "also write the state sampled on the x grid");

  auto* wigner_cmd = app.add_subcommand("wigner", "Wigner distribution in (W, p_W)");
  std::string w_input, w_state = "ho:0";
  double w_pmin = -6.0, w_pmax = 6.0;
  std::size_t w_m = 241;
  wigner_cmd->add_option("-i,--input", w_input, "signal CSV (resampled to uniform u if needed)");
  wigner_cmd->add_option("--state", w_state, "ho:J or coherent:re,im when no input is given");
  wigner_cmd->add_option("--wpmin", w_pmin);
  wigner_cmd->add_option("--wpmax", w_pmax);
  wigner_cmd->add_option("--wm", w_m);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::optional<OutputSet> outputs;
  std::string command;
  for (const std::string& a : args) command += (command.empty() ? "" : " ") + a;
  int code = kUsage;
  try {
    const Settings s = resolve(f);
    outputs.emplace(s, command);
    if (validate_cmd->parsed()) {
      code = cmd_validate(s, out);
    } else if (verify_cmd->parsed()) {
      code = cmd_verify(s, criteria, *outputs, out);
    } else if (transform_cmd->parsed()) {
      code = cmd_transform(s, t_input, t_direction, t_path, t_output, *outputs, out);
    } else if (spectro_cmd->parsed()) {
      code = cmd_spectrogram(s, s_input, s_window, s_centers, s_output, *outputs, out, err);
    } else if (basis_cmd->parsed()) {
      code = cmd_basis(s, b_family, b_indices, b_alpha, *outputs, out);
    } else if (coherent_cmd->parsed()) {
      code = cmd_coherent(s, c_z, c_jmax, c_signal, *outputs, out);
    } else if (wigner_cmd->parsed()) {
      code = cmd_wigner(s, w_input, w_state, w_pmin, w_pmax, w_m, *outputs, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (is_validation_rejection(e.code())) {
      code = kRejected;
    } else if (is_numeric_guard(e.code())) {
      code = kNumericGuard;
    } else {
      code = kUsage;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    code = kUsage;
  }
  if (outputs) {
    try {
      outputs->finish(code);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      if (code == kOk) code = kUsage;
    }
  }
  return code;
}

}  // namespace wsp::cli
