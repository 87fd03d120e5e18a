#include "qpd/report.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "qpd/binary_classifier.hpp"
#include "qpd/error.hpp"
#include "qpd/inequality_suite.hpp"
#include "qpd/tensor_io.hpp"
#include "qpd/ternary_classifier.hpp"

namespace qpd {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::array<std::pair<Mode, std::string_view>, 6> kModes{{
    {Mode::Auto, "auto"},
    {Mode::Binary, "binary"},
    {Mode::Ternary, "ternary"},
    {Mode::OracleOnly, "oracle-only"},
    {Mode::Inequalities, "inequalities"},
    {Mode::Sweep, "sweep"},
}};

Json rationals(std::span<const Rational> xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

template <std::size_t N>
Json rationals(const std::array<Rational, N>& xs) {
  return rationals(std::span<const Rational>(xs));
}

Json numbers(std::span<const double> xs) {
  Json out = Json::array();
  for (double x : xs) out.push_back(x);
  return out;
}

Json exact_point(const AnyQuartic& t, std::span<const Rational> x) {
  return Json{{"point", rationals(x)}, {"value", to_string(evaluate(t, x))}};
}

Json oracle_json(const OracleResult& r) {
  Json out;
  out["verdict"] = to_string(r.verdict);
  out["min_value"] = r.min_value;
  out["argmin"] = numbers(r.argmin);
  out["confirmed_point"] = rationals(r.confirmed_point);
  out["confirmed_value"] = r.confirmed_exact ? Json(to_string(*r.confirmed_exact)) : Json(nullptr);
  return out;
}

Json config_json(const OracleConfig& cfg) {
  return Json{{"grid_resolution", cfg.grid_resolution}, {"starts", cfg.starts},
              {"refine_iters", cfg.refine_iters},       {"refine_tol", cfg.refine_tol},
              {"verdict_tol", cfg.verdict_tol},         {"max_denominator", cfg.max_denominator}};
}

int exit_for(Agreement a) { return a == Agreement::Conflict ? exit_code::kConflict : exit_code::kOk; }

struct Analytic {
  Json body;
  Definiteness definiteness;
  std::optional<std::vector<Rational>> witness;
};

Analytic binary_analytic(const BinaryQuartic& t, const OracleConfig& cfg) {
  Json body;
  Verdict v;
  try {
    v = classify_sign_binary(t);
    body["path"] = "sign-class";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotInSignClass) throw;
    v = classify_binary(t, cfg);
    body["path"] = "general";
  }
  body["definiteness"] = to_string(v.definiteness);
  body["branch"] = v.branch;
  if (sgn(t.t("1111")) > 0 && sgn(t.t("2222")) > 0) {
    const InvariantPair ij = invariants_ij(t);
    body["invariants"] = Json{{"I", to_string(ij.I)}, {"J", to_string(ij.J)}, {"disc", to_string(ij.disc)}};
  }
  Analytic a{std::move(body), v.definiteness, std::nullopt};
  if (v.witness) a.witness = std::vector<Rational>(v.witness->begin(), v.witness->end());
  return a;
}

Analytic ternary_analytic(const TernaryQuartic& t, const OracleConfig* advisory) {
  const SignClassTensor s = validate_class(t);
  const ClassVerdict v = classify_ternary(t, advisory);
  Json body;
  body["path"] = "sign-class";
  body["definiteness"] = to_string(v.definiteness);
  body["regime"] = to_string(v.regime);
  body["b"] = to_string(s.b);
  body["signs"] = Json{{"t1112", s.t1112}, {"t1113", s.t1113}, {"t2223", s.t2223},
                       {"t1123", s.t1123}, {"t1223", s.t1223}, {"t1233", s.t1233}};
  body["condition_iii"] = Json{{"literal", v.condition_iii}, {"up_to_symmetry", v.condition_iii_symmetric}};
  body["condition_iv"] = Json{{"literal", v.condition_iv}, {"up_to_symmetry", v.condition_iv_symmetric}};
  if (v.witness) body["witness_source"] = v.witness_source;
  if (v.lower_bound) {
    body["lower_bound"] = Json{{"definiteness", to_string(*v.lower_bound)}, {"from_b", to_string(*v.lower_bound_from)}};
  }
  if (v.advisory) body["advisory_numeric"] = to_string(*v.advisory);
  Analytic a{std::move(body), v.definiteness, std::nullopt};
  if (v.witness) a.witness = std::vector<Rational>(v.witness->begin(), v.witness->end());
  return a;
}

Json error_body(const std::string& message) { return Json{{"error", message}}; }

Report tensor_report(const RunRequest& req) {
  const AnyQuartic tensor = load_tensor_file(req.input_path);
  const int dim = dimension_of(tensor);
  const OracleConfig& cfg = req.oracle_cfg;
  Json notices = Json::array();

  Mode mode = req.mode;
  if (mode == Mode::Auto) mode = dim == 2 ? Mode::Binary : Mode::Ternary;
  if ((mode == Mode::Binary && dim != 2) || (mode == Mode::Ternary && dim != 3)) {
    throw Error(ErrorKind::DimensionMismatch,
                "mode " + std::string(to_string(mode)) + " needs dim " + (mode == Mode::Binary ? "2" : "3") +
                    ", file has dim " + std::to_string(dim));
  }

  std::optional<Analytic> analytic;
  if (mode == Mode::Binary) {
    analytic = binary_analytic(std::get<BinaryQuartic>(tensor), cfg);
  } else if (mode == Mode::Ternary) {
    const auto& t = std::get<TernaryQuartic>(tensor);
    if (auto why = class_violation(t)) {
      notices.push_back("not in the sign class (" + *why + "); falling back to oracle-only");
      mode = Mode::OracleOnly;
    } else {
      analytic = ternary_analytic(t, req.use_oracle ? &cfg : nullptr);
    }
  }

  Report report;
  Json& body = report.body;
  body["mode"] = to_string(mode);
  body["input"] = req.input_path.string();
  body["tensor"] = Json::parse(tensor_to_json(tensor));
  body["notices"] = notices;
  body["analytic"] = analytic ? analytic->body : Json(nullptr);

  std::optional<OracleResult> numeric;
  if (req.use_oracle || mode == Mode::OracleOnly) numeric = min_on_sphere(tensor, cfg);
  body["numeric"] = numeric ? oracle_json(*numeric) : Json(nullptr);

  Agreement agreement = Agreement::NotApplicable;
  if (analytic && numeric) agreement = compare_verdicts(analytic->definiteness, *numeric, cfg.verdict_tol);
  body["agreement"] = to_string(agreement);

  if (analytic && analytic->witness) {
    body["witness_exact"] = exact_point(tensor, *analytic->witness);
  } else if (!analytic && numeric && !numeric->confirmed_point.empty() &&
             numeric->verdict != NumericVerdict::PositiveDefinite) {
    body["witness_exact"] = exact_point(tensor, numeric->confirmed_point);
  } else {
    body["witness_exact"] = nullptr;
  }

  if (agreement == Agreement::Conflict) {
    const auto at = rationalize(numeric->argmin, cfg.max_denominator);
    body["conflict"] = Json{{"analytic", to_string(analytic->definiteness)},
                            {"numeric", to_string(numeric->verdict)},
                            {"exact_at_argmin", exact_point(tensor, at)}};
  }
  body["oracle_config"] = config_json(cfg);
  report.exit_code = exit_for(agreement);
  return report;
}

Report sweep_report(const RunRequest& req) {
  const OracleConfig& cfg = req.oracle_cfg;
  Report report;
  Json rows = Json::array();
  Json summary = Json::array();
  int conflicts = 0;
  int inconclusive = 0;
  const std::array<Rational, 4> levels{Rational(11, 6), Rational(2), Rational(5, 2), Rational(8, 3)};
  for (const Rational& b : levels) {
    std::array<int, 4> counts{};  // PD, PSD-not-PD, NotPSD, undetermined
    int pattern = 0;
    for (const SignClassTensor& s : all_sign_patterns(b)) {
      const TernaryQuartic t = s.to_tensor();
      const ClassVerdict v = classify_ternary(t);
      Json row;
      row["b"] = to_string(b);
      row["pattern"] = pattern++;
      row["signs"] = Json::array({s.t1112, s.t1113, s.t2223, s.t1123, s.t1223, s.t1233});
      row["analytic"] = to_string(v.definiteness);
      row["condition_iii_literal"] = v.condition_iii;
      row["condition_iv_literal"] = v.condition_iv;
      switch (v.definiteness) {
        case Definiteness::PositiveDefinite: ++counts[0]; break;
        case Definiteness::PositiveSemidefiniteNotDefinite: ++counts[1]; break;
        case Definiteness::NotPositiveSemidefinite: ++counts[2]; break;
        case Definiteness::UndeterminedByTheory: ++counts[3]; break;
      }
      if (v.witness) {
        row["witness_exact"] = exact_point(AnyQuartic(t), std::vector<Rational>(v.witness->begin(), v.witness->end()));
        row["witness_source"] = v.witness_source;
      } else {
        row["witness_exact"] = nullptr;
      }
      Agreement agreement = Agreement::NotApplicable;
      if (req.use_oracle) {
        const OracleResult r = min_on_sphere(t, cfg);
        agreement = compare_verdicts(v.definiteness, r, cfg.verdict_tol);
        row["numeric"] = to_string(r.verdict);
        row["min_value"] = r.min_value;
      } else {
        row["numeric"] = nullptr;
        row["min_value"] = nullptr;
      }
      row["agreement"] = to_string(agreement);
      conflicts += agreement == Agreement::Conflict;
      inconclusive += agreement == Agreement::Inconclusive;
      rows.push_back(std::move(row));
    }
    summary.push_back(Json{{"b", to_string(b)},
                           {"PositiveDefinite", counts[0]},
                           {"PositiveSemidefiniteNotDefinite", counts[1]},
                           {"NotPositiveSemidefinite", counts[2]},
                           {"UndeterminedByTheory", counts[3]}});
  }
  report.body["mode"] = "sweep";
  report.body["summary"] = summary;
  report.body["conflicts"] = conflicts;
  report.body["inconclusive"] = inconclusive;
  report.body["rows"] = rows;
  report.body["oracle_config"] = config_json(cfg);
  report.exit_code = conflicts > 0 ? exit_code::kConflict : exit_code::kOk;
  return report;
}

Report inequalities_report(const RunRequest& req) {
  if (req.samples < 1) throw Error(ErrorKind::InvalidConfig, "--samples must be >= 1");
  Report report;
  Json rows = Json::array();
  int failures = 0;
  for (const InequalityId& id : all_inequality_variants()) {
    const InequalityReport r = check_inequality(id, req.samples, req.seed, req.oracle_cfg);
    Json row;
    row["id"] = to_string(id);
    row["strict"] = is_strict(id.kind);
    row["random_points"] = r.random_points;
    row["structured_points"] = r.structured_points;
    row["equality_points"] = r.equality_points;
    if (r.violation) {
      row["violation"] = Json{{"point", rationals(r.violation->point)},
                              {"residual", to_string(r.violation->residual)},
                              {"reason", r.violation->reason}};
    } else {
      row["violation"] = nullptr;
    }
    row["oracle_min"] = r.oracle_min;
    row["oracle_verdict"] = to_string(r.oracle_verdict);
    row["oracle_confirmed"] = r.oracle_confirmed ? Json(to_string(*r.oracle_confirmed)) : Json(nullptr);
    row["oracle_detail"] = r.oracle_detail;
    row["ok"] = r.ok();
    failures += !r.ok();
    rows.push_back(std::move(row));
  }
  report.body["mode"] = "inequalities";
  report.body["samples"] = req.samples;
  report.body["seed"] = req.seed;
  report.body["failures"] = failures;
  report.body["results"] = rows;
  report.exit_code = failures > 0 ? exit_code::kConflict : exit_code::kOk;
  return report;
}

}  // namespace

std::string_view to_string(Mode m) {
  for (const auto& [mode, name] : kModes) {
    if (mode == m) return name;
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  for (const auto& [mode, name] : kModes) {
    if (name == text) return mode;
  }
  throw Error(ErrorKind::InvalidConfig, "unknown mode '" + std::string(text) + "'");
}

Report run(const RunRequest& request) {
  try {
    request.oracle_cfg.validate();
    switch (request.mode) {
      case Mode::Sweep: return sweep_report(request);
      case Mode::Inequalities: return inequalities_report(request);
      default: return tensor_report(request);
    }
  } catch (const Error& e) {
    return {error_body(e.what()), exit_code::kInputError};
  } catch (const nlohmann::json::exception& e) {
    return {error_body(std::string("ParseError: ") + e.what()), exit_code::kInputError};
  }
}

namespace {

std::string text_tensor(const Json& b) {
  std::ostringstream out;
  out << "mode: " << b["mode"].get<std::string>() << "\n";
  out << "input: " << b["input"].get<std::string>() << "\n";
  for (const auto& n : b["notices"]) out << "notice: " << n.get<std::string>() << "\n";
  if (!b["analytic"].is_null()) {
    const Json& a = b["analytic"];
    out << "analytic: " << a["definiteness"].get<std::string>();
    if (a.contains("branch")) out << " (branch " << a["branch"].get<std::string>() << ")";
    if (a.contains("regime")) out << " (" << a["regime"].get<std::string>() << ")";
    out << "\n";
    if (a.contains("invariants")) {
      const Json& ij = a["invariants"];
      out << "  I = " << ij["I"].get<std::string>() << ", J = " << ij["J"].get<std::string>()
          << ", I^3 - 27 J^2 = " << ij["disc"].get<std::string>() << "\n";
    }
    if (a.contains("lower_bound")) {
      out << "  at least " << a["lower_bound"]["definiteness"].get<std::string>() << " (monotone from b = "
          << a["lower_bound"]["from_b"].get<std::string>() << ")\n";
    }
    if (a.contains("advisory_numeric")) out << "  advisory oracle: " << a["advisory_numeric"].get<std::string>() << "\n";
  }
  if (!b["numeric"].is_null()) {
    const Json& n = b["numeric"];
    out << "numeric: " << n["verdict"].get<std::string>() << " (sphere min " << n["min_value"].dump() << ")\n";
  }
  out << "agreement: " << b["agreement"].get<std::string>() << "\n";
  if (!b["witness_exact"].is_null()) {
    out << "witness: (";
    const Json& p = b["witness_exact"]["point"];
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? ", " : "") << p[i].get<std::string>();
    out << ") -> " << b["witness_exact"]["value"].get<std::string>() << "\n";
  }
  if (b.contains("conflict")) {
    out << "conflict: analytic " << b["conflict"]["analytic"].get<std::string>() << " vs numeric "
        << b["conflict"]["numeric"].get<std::string>() << ", exact value at argmin "
        << b["conflict"]["exact_at_argmin"]["value"].get<std::string>() << "\n";
  }
  return out.str();
}

std::string text_sweep(const Json& b) {
  std::ostringstream out;
  out << "b       PD  PSD  NotPSD  undetermined\n";
  for (const auto& s : b["summary"]) {
    char line[96];
    std::snprintf(line, sizeof line, "%-6s %3d %4d %7d %13d\n", s["b"].get<std::string>().c_str(),
                  s["PositiveDefinite"].get<int>(), s["PositiveSemidefiniteNotDefinite"].get<int>(),
                  s["NotPositiveSemidefinite"].get<int>(), s["UndeterminedByTheory"].get<int>());
    out << line;
  }
  out << "rows: " << b["rows"].size() << ", conflicts: " << b["conflicts"].get<int>()
      << ", inconclusive: " << b["inconclusive"].get<int>() << "\n";
  for (const auto& r : b["rows"]) {
    if (r["agreement"] == "conflict" || r["agreement"] == "inconclusive") {
      out << "  b=" << r["b"].get<std::string>() << " pattern " << r["pattern"].get<int>() << ": "
          << r["analytic"].get<std::string>() << " vs " << r["numeric"].get<std::string>() << " ("
          << r["agreement"].get<std::string>() << ")\n";
    }
  }
  return out.str();
}

std::string text_inequalities(const Json& b) {
  std::ostringstream out;
  for (const auto& r : b["results"]) {
    out << (r["ok"].get<bool>() ? "ok    " : "FAIL  ") << r["id"].get<std::string>() << "  "
        << r["oracle_detail"].get<std::string>();
    if (!r["violation"].is_null()) out << "  violation: " << r["violation"]["reason"].get<std::string>();
    out << "\n";
  }
  out << "failures: " << b["failures"].get<int>() << "\n";
  return out.str();
}

}  // namespace

std::string render(const Report& report, OutputFormat format) {
  const Json& b = report.body;
  if (format == OutputFormat::Json) return b.dump(2) + "\n";
  if (b.contains("error")) return "error: " + b["error"].get<std::string>() + "\n";
  const std::string mode = b["mode"].get<std::string>();
  if (mode == "sweep") return text_sweep(b);
  if (mode == "inequalities") return text_inequalities(b);
  return text_tensor(b);
}

}  // namespace qpd
