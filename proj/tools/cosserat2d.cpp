// cosserat2d: optimal planar Cosserat microrotations from the command line.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cosserat2d/optimizer.hpp"
#include "cosserat2d/report.hpp"
#include "cosserat2d/sweep.hpp"
#include "cosserat2d/verify.hpp"

namespace {

using namespace cosserat2d;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kInvalidInput = 2, kCertifyFailed = 3 };

struct Config {
  std::vector<double> f;
  double mu = 1.0;
  double muc = 0.0;
  double start = 0.0;
  double end = 0.0;
  double step = 0.0;
  std::size_t grid_n = kDefaultGridN;
  std::uint64_t seed = VerifyOptions{}.seed;
  std::size_t samples = VerifyOptions{}.samples;
  std::string output;
  std::string format;  // empty: per-command default
  bool certify = false;
  bool degrees = false;
  bool inject_fault = false;
};

Deformation deformation_of(const Config& c) {
  return Deformation(c.f.at(0), c.f.at(1), c.f.at(2), c.f.at(3));
}

void emit(const Config& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(c.output, std::ios::binary);
  if (!os) throw Error(ErrorKind::InvalidArgument, "cannot open " + c.output);
  os << text;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int run_minimize(const Config& c) {
  const Deformation f = deformation_of(c);
  const Weights w(c.mu, c.muc);
  const MinimizeReport report =
      minimize_report(f, w, MinimizeOptions{c.certify, c.grid_n, c.degrees, c.inject_fault});
  if (c.format == "csv") {
    const auto& j = report.json;
    const auto& angles = j.at("angles").at(c.degrees ? "deg" : "rad");
    std::ostringstream os;
    os << "branch,alpha_plus,alpha_minus,energy,beta,tr_u,rho\n";
    os << j.at("branch").get<std::string>() << ','
       << format_number(angles.front().get<double>()) << ','
       << format_number(angles.back().get<double>()) << ','
       << format_number(j.at("energy").get<double>()) << ','
       << format_number(j.at("beta").at(c.degrees ? "deg" : "rad").get<double>()) << ','
       << format_number(j.at("tr_u").get<double>()) << ','
       << (j.at("rho").is_null() ? "" : format_number(j.at("rho").get<double>())) << '\n';
    emit(c, os.str());
  } else {
    emit(c, json_text(report.json));
  }
  if (!report.certified) {
    std::cerr << "certification failed: closed form and oracle differ by more than "
              << kCertifyAngleTol << " rad\n";
    return kCertifyFailed;
  }
  return kOk;
}

int run_critical(const Config& c) {
  emit(c, json_text(critical_report(deformation_of(c), c.degrees)));
  return kOk;
}

int run_energy_levels(const Config& c) {
  const nlohmann::json j = energy_levels_report(deformation_of(c));
  if (c.format == "csv") {
    std::ostringstream os;
    os << "tr_u,W1,W2,W3\n"
       << format_number(j.at("tr_u").get<double>()) << ','
       << format_number(j.at("W1").get<double>()) << ','
       << format_number(j.at("W2").get<double>()) << ','
       << (j.at("W3").is_null() ? "" : format_number(j.at("W3").get<double>())) << '\n';
    emit(c, os.str());
  } else {
    emit(c, json_text(j));
  }
  return kOk;
}

int run_sweep_shear(const Config& c) {
  const auto rows = shear_sweep(Range{c.start, c.end, c.step});
  if (c.format == "json") {
    emit(c, json_text(shear_json(rows, c.degrees)));
  } else {
    std::ostringstream os;
    write_shear_csv(os, rows, c.degrees);
    emit(c, os.str());
  }
  return kOk;
}

int run_bifurcation(const Config& c) {
  const Weights w(c.mu, c.muc);
  const auto rows = bifurcation_table(Range{c.start, c.end, c.step}, w);
  if (c.format == "json") {
    emit(c, json_text(bifurcation_json(rows, w, c.degrees)));
  } else {
    std::ostringstream os;
    write_bifurcation_csv(os, rows, c.degrees);
    emit(c, os.str());
  }
  return kOk;
}

int run_verify(Config c) {
  if (const char* env = std::getenv("COSSERAT2D_SEED")) {
    try {
      c.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "COSSERAT2D_SEED is not an integer");
    }
  }
  const auto checks = run_verification(VerifyOptions{c.seed, c.samples, c.inject_fault});
  bool ok = true;
  std::ostringstream os;
  if (c.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : checks) {
      arr.push_back({{"name", p.name},
                     {"max_residual", p.max_residual},
                     {"tolerance", p.tolerance},
                     {"samples", p.samples},
                     {"passed", p.passed}});
      ok = ok && p.passed;
    }
    os << nlohmann::json{{"schema", "cosserat2d.verify/1"},
                         {"seed", c.seed},
                         {"samples", c.samples},
                         {"passed", ok},
                         {"properties", arr}}
              .dump(2)
       << '\n';
  } else {
    os << "seed " << c.seed << ", samples " << c.samples << '\n';
    for (const auto& p : checks) {
      os << (p.passed ? "PASS " : "FAIL ") << p.name << "  max_residual=" << p.max_residual
         << "  tol=" << p.tolerance << "  n=" << p.samples << '\n';
      ok = ok && p.passed;
    }
    os << (ok ? "all properties passed\n" : "verification FAILED\n");
  }
  emit(c, os.str());
  return ok ? kOk : kVerifyFailed;
}

void add_matrix_option(CLI::App* sub, Config& c) {
  sub->add_option("--f", c.f, "F entries, row-major: e11 e12 e21 e22")
      ->expected(4)
      ->required();
}

void add_output_options(CLI::App* sub, Config& c, const std::string& default_format,
                        std::vector<std::string> formats = {"json", "csv"}) {
  sub->add_option("-o,--output", c.output, "Write to this file instead of stdout");
  sub->add_option("--format", c.format, "Output format (default " + default_format + ")")
      ->check(CLI::IsMember(formats));
  sub->add_flag("--degrees", c.degrees, "Emit angles in degrees");
}

void add_range_options(CLI::App* sub, Config& c) {
  sub->add_option("--start", c.start)->required();
  sub->add_option("--end", c.end)->required();
  sub->add_option("--step", c.step)->required();
}

}  // namespace

int main(int argc, char** argv) {
  std::locale::global(std::locale::classic());
  CLI::App app{"Optimal planar Cosserat microrotations and reduced shear-stretch energies"};
  app.require_subcommand(1, 1);
  Config cfg;

  auto* minimize = app.add_subcommand("minimize", "Optimal rotation set for one F and (mu, muc)");
  add_matrix_option(minimize, cfg);
  minimize->add_option("--mu", cfg.mu)->capture_default_str();
  minimize->add_option("--muc", cfg.muc)->capture_default_str();
  minimize->add_flag("--certify", cfg.certify, "Cross-check against the brute-force oracle");
  minimize->add_option("--grid-n", cfg.grid_n)->check(CLI::Range(kMinGridN, std::size_t{1} << 26));
  minimize->add_flag("--inject-fault", cfg.inject_fault)->group("");
  add_output_options(minimize, cfg, "json");

  auto* critical = app.add_subcommand("critical", "Critical rotations of W_{1,0}(.;F)");
  add_matrix_option(critical, cfg);
  add_output_options(critical, cfg, "json");

  auto* levels = app.add_subcommand("energy-levels", "Critical energy levels W1, W2, W3");
  add_matrix_option(levels, cfg);
  add_output_options(levels, cfg, "json");

  auto* shear = app.add_subcommand("sweep-shear", "Simple-shear sweep over gamma");
  add_range_options(shear, cfg);
  add_output_options(shear, cfg, "csv");

  auto* bif = app.add_subcommand("bifurcation", "Relative rotation beta as a function of tr U");
  add_range_options(bif, cfg);
  bif->add_option("--mu", cfg.mu)->capture_default_str();
  bif->add_option("--muc", cfg.muc)->capture_default_str();
  add_output_options(bif, cfg, "csv");

  auto* verify = app.add_subcommand("verify", "Run the seeded invariant suite");
  verify->add_option("--seed", cfg.seed, "Seed (COSSERAT2D_SEED overrides)")->capture_default_str();
  verify->add_option("--samples", cfg.samples)->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_flag("--inject-fault", cfg.inject_fault)->group("");
  add_output_options(verify, cfg, "text", {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  }

  try {
    if (minimize->parsed()) return run_minimize(cfg);
    if (critical->parsed()) return run_critical(cfg);
    if (levels->parsed()) return run_energy_levels(cfg);
    if (shear->parsed()) return run_sweep_shear(cfg);
    if (bif->parsed()) return run_bifurcation(cfg);
    if (verify->parsed()) return run_verify(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}
