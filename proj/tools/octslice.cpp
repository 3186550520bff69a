// octslice: runs the verification suites and demos, writes a JSON or CSV report.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "octslice/suites.hpp"

namespace {

using octslice::SuiteConfig;
using octslice::SuiteResult;

std::string render(const std::string& command, const SuiteConfig& cfg, const std::vector<SuiteResult>& results,
                   const std::string& format) {
  std::ostringstream out;
  if (format == "csv") {
    out << "suite,cases,max_residual,tolerance,pass\n";
    for (const auto& r : results)
      out << r.suite << ',' << r.cases << ',' << nlohmann::json(r.max_residual).dump() << ','
          << nlohmann::json(r.tolerance).dump() << ',' << (r.pass ? "true" : "false") << '\n';
    return out.str();
  }
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& r : results) suites.push_back(octslice::to_json(r));
  const nlohmann::json report{{"command", command},
                              {"seed", cfg.seed},
                              {"pass", octslice::all_pass(results)},
                              {"suites", suites}};
  return report.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Octonionic slice analysis: verification suites and demos"};
  app.require_subcommand(1);
  app.fallthrough();

  SuiteConfig cfg;
  double tol = 0.0;
  std::string out_path;
  std::string format = "json";
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--probes", cfg.probes, "Probe count for every randomized suite (default: per suite)")
      ->check(CLI::PositiveNumber);
  auto* tol_opt = app.add_option("--tol", tol, "Tolerance applied to every suite")->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "Write the report to this file instead of stdout");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  auto* algebra = app.add_subcommand("verify-algebra", "Octonion table, algebra laws and operator identities");
  auto* slice = app.add_subcommand("verify-slice", "Representation formulas, stems, splitting, regularity");
  slice->add_flag("--inject-nonslice", cfg.inject_nonslice, "Add a function that is not slice (must fail)");
  auto* taylor = app.add_subcommand("taylor-demo", "Taylor reconstruction, star exponential, modulus bounds");
  auto* sqrt = app.add_subcommand("sqrt-example", "Weak square root that is not slice");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }
  if (*tol_opt) cfg.tol = tol;

  std::string command;
  std::vector<SuiteResult> results;
  try {
    if (*algebra) {
      command = "verify-algebra";
      results = octslice::run_verify_algebra(cfg);
    } else if (*slice) {
      command = "verify-slice";
      results = octslice::run_verify_slice(cfg);
    } else if (*taylor) {
      command = "taylor-demo";
      results = octslice::run_taylor_demo(cfg);
    } else if (*sqrt) {
      command = "sqrt-example";
      results = octslice::run_sqrt_example(cfg);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  const std::string text = render(command, cfg, results, format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    f << text;
    f.close();
    if (!f) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return 1;
    }
    for (const auto& r : results)
      std::cout << (r.pass ? "pass  " : "FAIL  ") << r.suite << "  max_residual=" << r.max_residual
                << "  tol=" << r.tolerance << '\n';
  }
  return octslice::all_pass(results) ? 0 : 1;
}
