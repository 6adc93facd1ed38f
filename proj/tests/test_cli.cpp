#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <numbers>
#include <sstream>

#include "cli.hpp"
#include "wsp/bases.hpp"
#include "wsp/io.hpp"

using namespace wsp;
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Fresh scratch directory per test case.
struct Scratch {
  fs::path dir;
  explicit Scratch(const std::string& name) : dir(fs::temp_directory_path() / ("wsp_cli_" + name)) {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string operator/(const std::string& f) const { return (dir / f).string(); }
};

std::string signal_csv(const std::string& axis, const GridPtr& g, auto&& fn) {
  std::vector<cplx> v(g->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = fn(g->node(i));
  return io::format_signal_csv(axis, g->nodes(), v);
}

double parseval(const std::string& out) {
  const auto pos = out.find("parseval_ratio ");
  REQUIRE(pos != std::string::npos);
  return std::stod(out.substr(pos + 15));
}

const double kQuarterPi = std::pow(std::numbers::pi, -0.25);

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("validate") {
    Scratch s("validate");
    Run r = run({"validate", "--coeffs", "0,0,1"});
    CHECK(r.code == cli::kOk);
    json j = json::parse(r.out);
    CHECK(j["valid"] == true);
    CHECK(j["monotonicity"] == "monotone_with_critical_points");

    r = run({"validate", "--coeffs", "0,1"});
    CHECK(r.code == cli::kRejected);
    CHECK(json::parse(r.out)["error"] == "RejectEvenLeadingPower");

    io::write_atomic(s / "bad.json", "{\"superpotential\": {\"coeffs\": [1, 0,");
    CHECK(run({"--config", s / "bad.json", "validate"}).code == cli::kUsage);
    CHECK(run({"--config", s / "missing.json", "validate"}).code == cli::kUsage);

    io::write_atomic(s / "cfg.json", R"({"superpotential": {"coeffs": [1, 2, 1]}})");
    CHECK(run({"--config", s / "cfg.json", "validate"}).code == cli::kRejected);
    // Flags override the config file.
    CHECK(run({"--config", s / "cfg.json", "validate", "--coeffs", "1,0,1"}).code == cli::kOk);

    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
  }

  TEST_CASE("verify subset and the kernel sign fault") {
    Scratch s("verify");
    Run r = run({"verify", "--criteria", "3,7", "-o", s.dir.string()});
    CHECK(r.code == cli::kOk);
    const json rep = json::parse(io::read_text(s / "verify_report.json"));
    CHECK(rep["pass"] == true);
    CHECK(rep["criteria"].size() == 2);
    CHECK(rep["checks"].size() >= 5);
    for (const json& c : rep["checks"]) CHECK(c.contains("value"));
    CHECK(fs::exists(s / "run_metadata.json"));

    // Odd eigenstates pick up the wrong phase under a flipped kernel.
    r = run({"verify", "--criteria", "6", "--inject-fault", "kernel_sign", "-o", s.dir.string()});
    CHECK(r.code == cli::kVerificationFailed);
    CHECK(json::parse(io::read_text(s / "verify_report.json"))["pass"] == false);

    io::write_atomic(s / "cfg.json", R"({"alphas": [0.5], "grid": {"N": 512}, "inject_fault": "kernel_sign"})");
    r = run({"--config", s / "cfg.json", "verify", "--criteria", "8", "-o", s.dir.string()});
    CHECK(r.code == cli::kVerificationFailed);

    io::write_atomic(s / "cfg2.json", R"({"alphas": [0.5], "grid": {"N": 512}})");
    r = run({"--config", s / "cfg2.json", "verify", "--criteria", "2", "-o", s.dir.string()});
    CHECK(r.code == cli::kOk);
    const json rep2 = json::parse(io::read_text(s / "verify_report.json"));
    bool saw_dx = false;
    for (const json& c : rep2["checks"]) {
      const std::string name = c["name"];
      if (name.find("alpha=0.5 defect_dx") != std::string::npos) {
        saw_dx = true;
        CHECK(c["pass"] == true);
      }
    }
    CHECK(saw_dx);

    CHECK(run({"verify", "--criteria", "99", "-o", s.dir.string()}).code == cli::kUsage);
    CHECK(run({"verify", "--inject-fault", "nope", "-o", s.dir.string()}).code == cli::kUsage);
  }

  TEST_CASE("transform") {
    Scratch s("transform");
    const GridPtr g = uniform_x_grid(-8.0, 8.0, 1024);
    io::write_atomic(s / "gauss.csv", signal_csv("x", g, [](double x) { return kQuarterPi * std::exp(-x * x / 2.0); }));

    Run r = run({"transform", "-i", s / "gauss.csv", "-o", s.dir.string()});
    CHECK(r.code == cli::kOk);
    CHECK(parseval(r.out) == doctest::Approx(1.0).epsilon(1e-6));
    r = run({"transform", "-i", s / "spectrum.csv", "--direction", "inverse", "-o", s.dir.string()});
    CHECK(r.code == cli::kOk);
    CHECK(parseval(r.out) == doctest::Approx(1.0).epsilon(1e-6));
    const io::SignalTable back = io::read_signal_csv(s / "signal.csv");
    for (std::size_t i = 0; i < back.nodes.size(); i += 17) {
      CHECK(std::abs(back.values[i] - kQuarterPi * std::exp(-back.nodes[i] * back.nodes[i] / 2.0)) <= 1e-10);
    }

    // W = x^3: the ground state keeps its profile.
    io::write_atomic(s / "x6.csv", signal_csv("x", g, [](double x) { return kQuarterPi * std::exp(-std::pow(x, 6) / 2.0); }));
    r = run({"--coeffs", "0,0,1", "transform", "-i", s / "x6.csv", "--output", s / "x6_spec.csv", "-o", s.dir.string()});
    CHECK(r.code == cli::kOk);
    const io::SignalTable spec = io::read_signal_csv(s / "x6_spec.csv");
    CHECK(spec.axis == "p");
    for (std::size_t a = 0; a < spec.nodes.size(); a += 13) {
      CHECK(std::abs(spec.values[a] - kQuarterPi * std::exp(-spec.nodes[a] * spec.nodes[a] / 2.0)) <= 1e-6);
    }

    // Fast and direct paths agree.
    io::write_atomic(s / "ho.csv", signal_csv("x", g, [](double x) {
                       const double u = x + x * x * x;
                       return kQuarterPi * std::exp(-u * u / 2.0);
                     }));
    CHECK(run({"--coeffs", "1,0,1", "transform", "-i", s / "ho.csv", "--output", s / "d.csv", "-o", s.dir.string()}).code ==
          cli::kOk);
    CHECK(run({"--coeffs", "1,0,1", "transform", "-i", s / "ho.csv", "--path", "fast", "--output", s / "f.csv", "-o",
               s.dir.string()})
              .code == cli::kOk);
    const io::SignalTable d = io::read_signal_csv(s / "d.csv");
    const io::SignalTable f = io::read_signal_csv(s / "f.csv");
    double worst = 0.0, norm = 0.0;
    for (std::size_t a = 0; a < d.values.size(); ++a) {
      worst = std::max(worst, std::abs(d.values[a] - f.values[a]));
      norm += std::norm(d.values[a]);
    }
    CHECK(worst <= 1e-6 * std::sqrt(norm));

    // Usage errors.
    CHECK(run({"transform", "-i", s / "spectrum.csv", "-o", s.dir.string()}).code == cli::kUsage);
    CHECK(run({"transform", "-i", s / "gauss.csv", "--direction", "inverse", "-o", s.dir.string()}).code == cli::kUsage);
    CHECK(run({"transform", "-i", s / "nope.csv", "-o", s.dir.string()}).code == cli::kUsage);
    CHECK(run({"-M", "1000", "transform", "-i", s / "gauss.csv", "--path", "fast", "-o", s.dir.string()}).code ==
          cli::kUsage);
    CHECK(run({"--coeffs", "0,1", "transform", "-i", s / "gauss.csv", "-o", s.dir.string()}).code == cli::kRejected);
  }

  TEST_CASE("spectrogram") {
    Scratch s("spectrogram");
    const auto W = validate({1.0, 0.0, 1.0});
    const GridPtr g = uniform_x_grid(-8.0, 8.0, 1024);
    io::write_atomic(s / "tone.csv", signal_csv("x", g, [&](double x) { return std::polar(1.0, 3.0 * W.eval(x)); }));
    Run r = run({"--coeffs", "1,0,1", "spectrogram", "-i", s / "tone.csv", "-o", s.dir.string()});
    CHECK(r.code == cli::kOk);
    std::istringstream table(io::read_text(s / "spectrogram.csv"));
    std::string line;
    std::getline(table, line);
    std::vector<double> p;
    {
      std::istringstream hs(line);
      std::string cell;
      std::getline(hs, cell, ',');
      while (std::getline(hs, cell, ',')) p.push_back(std::stod(cell));
    }
    CHECK(p.size() == 1024);
    std::size_t rows = 0;
    while (std::getline(table, line)) {
      std::istringstream rs(line);
      std::string cell;
      std::getline(rs, cell, ',');
      std::size_t best = 0, k = 0;
      double top = -1.0;
      while (std::getline(rs, cell, ',')) {
        const double v = std::stod(cell);
        if (v > top) {
          top = v;
          best = k;
        }
        ++k;
      }
      CHECK(p[best] == doctest::Approx(3.0).epsilon(0.01));
      ++rows;
    }
    CHECK(rows == 11);

    // Header-only input: all-zero spectrogram, success.
    io::write_atomic(s / "empty.csv", "x,re,im\n");
    r = run({"spectrogram", "-i", s / "empty.csv", "-M", "16", "-o", s.dir.string()});
    CHECK(r.code == cli::kOk);
    const std::string body = io::read_text(s / "spectrogram.csv");
    CHECK(body.find("e-") == std::string::npos);

    // A window with the wrong norm is rescaled, with a warning.
    const GridPtr small = uniform_x_grid(-4.0, 4.0, 256);
    io::write_atomic(s / "tone2.csv", signal_csv("x", small, [&](double x) { return std::polar(1.0, 2.0 * W.eval(x)); }));
    const SampledSignal h0 = ho_eigenstate(W, small, 0).signal;
    io::write_atomic(s / "win.csv", signal_csv("x", small, [&](double x) {
                       return 3.0 * kQuarterPi * std::exp(-W.eval(x) * W.eval(x) / 2.0);
                     }));
    r = run({"--coeffs", "1,0,1", "-M", "64", "spectrogram", "-i", s / "tone2.csv", "--window", s / "win.csv",
             "--centers", "-0.5,0,0.5", "-o", s.dir.string()});
    CHECK(r.code == cli::kOk);
    CHECK(r.err.find("renormalizing") != std::string::npos);

    // Centers outside the grid trip the numeric guard.
    r = run({"--coeffs", "1,0,1", "spectrogram", "-i", s / "tone2.csv", "--centers", "0,7", "-o", s.dir.string()});
    CHECK(r.code == cli::kNumericGuard);
    (void)h0;
  }

  TEST_CASE("basis") {
    Scratch s("basis");
    Run r = run({"--coeffs", "1,0,1", "basis", "--family", "ho", "--indices", "0,1,2,3", "-o", s.dir.string()});
    CHECK(r.code == cli::kOk);
    const auto W = validate({1.0, 0.0, 1.0});
    std::vector<SampledSignal> v;
    for (int j = 0; j <= 3; ++j) {
      const io::SignalTable t = io::read_signal_csv(s / ("basis_ho_j" + std::to_string(j) + ".csv"));
      v.emplace_back(io::grid_from_table(t), t.values);
    }
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; b <= 3; ++b) {
        const cplx ip = inner_product(v[a], SampledSignal(v[a].grid(), std::vector<cplx>(v[b].values().begin(), v[b].values().end())),
                                      Measure::dW, &W);
        CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) <= 1e-8);
      }
    }

    CHECK(run({"basis", "--family", "mub", "--indices", "0", "-o", s.dir.string()}).code == cli::kOk);
    const io::SignalTable m = io::read_signal_csv(s / "basis_mub_p0.csv");
    for (const cplx& c : m.values) CHECK(std::abs(std::abs(c) - 1.0 / std::sqrt(2.0 * std::numbers::pi)) <= 1e-15);

    CHECK(run({"--coeffs", "1,0,1", "basis", "--family", "alpha", "--alpha", "0.5", "--indices", "1.5", "-o", s.dir.string()})
              .code == cli::kOk);
    CHECK(run({"--coeffs", "1,0,1", "basis", "--family", "mub", "--indices", "1.5", "-o", s.dir.string()}).code == cli::kOk);
    const io::SignalTable al = io::read_signal_csv(s / "basis_alpha0.5_p1.5.csv");
    const io::SignalTable mu = io::read_signal_csv(s / "basis_mub_p1.5.csv");
    for (std::size_t i = 0; i < al.nodes.size(); ++i) {
      CHECK(std::abs(al.values[i] - mu.values[i] * std::sqrt(W.derivative(al.nodes[i]))) <= 1e-13);
    }

    CHECK(run({"basis", "--family", "nope", "-o", s.dir.string()}).code == cli::kUsage);
    CHECK(run({"basis", "--family", "ho", "--indices", "1.5", "-o", s.dir.string()}).code == cli::kUsage);
  }

  TEST_CASE("coherent and wigner") {
    Scratch s("coherent");
    Run r = run({"coherent", "--z", "1,0.5", "-o", s.dir.string()});
    CHECK(r.code == cli::kOk);
    const json c = json::parse(io::read_text(s / "coherent.json"));
    CHECK(c["coeffs"].size() == 65);
    CHECK(c["coeffs"][1][0].get<double>() == doctest::Approx(std::exp(-0.625)));
    CHECK(c["coeffs"][1][1].get<double>() == doctest::Approx(0.5 * std::exp(-0.625)));
    CHECK(c["eigen_residual"].get<double>() <= 1e-10);

    CHECK(run({"coherent", "--z", "3,0", "--jmax", "16", "-o", s.dir.string()}).code == cli::kNumericGuard);
    CHECK(run({"coherent", "--z", "1", "-o", s.dir.string()}).code == cli::kUsage);

    r = run({"wigner", "--xmin", "-10", "--xmax", "10", "-N", "1001", "-o", s.dir.string()});
    CHECK(r.code == cli::kOk);
    std::istringstream table(io::read_text(s / "wigner.csv"));
    std::string line;
    std::getline(table, line);
    CHECK(std::count(line.begin(), line.end(), ',') == 241);
    std::size_t rows = 0;
    while (std::getline(table, line)) ++rows;
    CHECK(rows == 1001);

    // x-sampled input is resampled onto a uniform u grid first.
    const GridPtr g = uniform_x_grid(-3.0, 3.0, 600);
    io::write_atomic(s / "g.csv", signal_csv("x", g, [](double x) {
                       const double u = x + x * x * x;
                       return kQuarterPi * std::exp(-u * u / 2.0);
                     }));
    r = run({"--coeffs", "1,0,1", "wigner", "-i", s / "g.csv", "-o", s.dir.string()});
    CHECK(r.code == cli::kOk);
    CHECK(run({"wigner", "--state", "bogus:1", "-o", s.dir.string()}).code == cli::kUsage);
  }

  TEST_CASE("outputs are deterministic and respect the output directory precedence") {
    Scratch s("determinism");
    CHECK(run({"--coeffs", "1,0,1", "basis", "--family", "ho", "--indices", "2", "-o", s / "a"}).code == cli::kOk);
    CHECK(run({"--coeffs", "1,0,1", "basis", "--family", "ho", "--indices", "2", "-o", s / "b"}).code == cli::kOk);
    CHECK(io::read_text(s / "a/basis_ho_j2.csv") == io::read_text(s / "b/basis_ho_j2.csv"));
    CHECK(run({"verify", "--criteria", "11", "-o", s / "a"}).code == cli::kOk);
    CHECK(run({"verify", "--criteria", "11", "-o", s / "b"}).code == cli::kOk);
    CHECK(io::read_text(s / "a/verify_report.json") == io::read_text(s / "b/verify_report.json"));

    io::write_atomic(s / "cfg.json", "{\"output_dir\": \"" + (s / "from_config") + "\"}");
    CHECK(run({"--config", s / "cfg.json", "coherent", "--z", "0,0"}).code == cli::kOk);
    CHECK(fs::exists(s / "from_config/coherent.json"));

    ::setenv("WSP_OUTPUT_DIR", (s / "from_env").c_str(), 1);
    CHECK(run({"--config", s / "cfg.json", "coherent", "--z", "0,0"}).code == cli::kOk);
    CHECK(fs::exists(s / "from_env/coherent.json"));
    CHECK(run({"--config", s / "cfg.json", "coherent", "--z", "0,0", "-o", s / "from_flag"}).code == cli::kOk);
    CHECK(fs::exists(s / "from_flag/coherent.json"));
    ::unsetenv("WSP_OUTPUT_DIR");

    const json meta = json::parse(io::read_text(s / "from_flag/run_metadata.json"));
    CHECK(meta["exit_code"] == 0);
    CHECK(meta["outputs"].size() == 1);
  }
}
