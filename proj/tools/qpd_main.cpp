// qpd: decide positive (semi)definiteness of binary and ternary quartic tensors.
//
//   qpd tensor.json [--mode auto|binary|ternary|oracle-only] [--format text|json]
//   qpd --mode sweep
//   qpd --mode inequalities --samples 10000 --seed 1

#include <iostream>

#include <CLI11.hpp>

#include "qpd/error.hpp"
#include "qpd/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Positive definiteness of 4th-order symmetric tensors in dimension 2 and 3"};
  qpd::RunRequest req;
  std::string input;
  std::string mode = "auto";
  std::string format = "text";
  bool no_oracle = false;

  app.add_option("input", input, "tensor file (JSON)");
  app.add_option("--mode", mode, "auto, binary, ternary, oracle-only, inequalities or sweep")->capture_default_str();
  app.add_flag("--no-oracle", no_oracle, "skip numeric verification");
  app.add_option("--grid", req.oracle_cfg.grid_resolution, "hemisphere grid resolution")->capture_default_str();
  app.add_option("--starts", req.oracle_cfg.starts, "refined starting points")->capture_default_str();
  app.add_option("--refine-iters", req.oracle_cfg.refine_iters, "descent iterations per start")->capture_default_str();
  app.add_option("--tol", req.oracle_cfg.verdict_tol, "BoundaryPSD band half-width")->capture_default_str();
  app.add_option("--max-denominator", req.oracle_cfg.max_denominator, "rationalization bound")->capture_default_str();
  app.add_option("--format", format, "text or json")->capture_default_str();
  app.add_option("--samples", req.samples, "random points per inequality")->capture_default_str();
  app.add_option("--seed", req.seed, "random seed for the inequality checks")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : qpd::exit_code::kInputError;
  }

  try {
    req.mode = qpd::parse_mode(mode);
    if (format == "json") {
      req.output_format = qpd::OutputFormat::Json;
    } else if (format != "text") {
      throw qpd::Error(qpd::ErrorKind::InvalidConfig, "unknown format '" + format + "'");
    }
  } catch (const qpd::Error& e) {
    std::cerr << e.what() << "\n";
    return qpd::exit_code::kInputError;
  }
  req.use_oracle = !no_oracle;

  const bool needs_input = req.mode != qpd::Mode::Sweep && req.mode != qpd::Mode::Inequalities;
  if (needs_input && input.empty()) {
    std::cerr << "an input file is required in mode " << mode << "\n";
    return qpd::exit_code::kInputError;
  }
  req.input_path = input;

  const qpd::Report report = qpd::run(req);
  if (report.body.contains("error")) std::cerr << report.body["error"].get<std::string>() << "\n";
  for (const auto& notice : report.body.value("notices", nlohmann::ordered_json::array())) {
    std::cerr << "notice: " << notice.get<std::string>() << "\n";
  }
  std::cout << qpd::render(report, req.output_format);
  return report.exit_code;
}
