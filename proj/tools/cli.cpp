#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qcert/constants.hpp"
#include "qcert/cubic.hpp"
#include "qcert/errors.hpp"
#include "qcert/poly_io.hpp"
#include "qcert/rootlab.hpp"
#include "qcert/sampling.hpp"

namespace qcert::cli {
namespace {

using nlohmann::json;

std::string_view command_name(Command c) {
  switch (c) {
    case Command::kConstants: return "constants";
    case Command::kCertify: return "certify";
    case Command::kRoots: return "roots";
    case Command::kVerify: return "verify";
    case Command::kExtremal: return "extremal";
    case Command::kCubic: return "cubic";
    case Command::kSweep: return "sweep";
  }
  return "unknown";
}

json header(const RunConfig& cfg, const ThresholdTable& table) {
  return {
      {"tool", kToolName},
      {"version", kToolVersion},
      {"command", command_name(cfg.command)},
      {"thresholds",
       {{"b_inf", table.b_infinity()},
        {"cubic", table.cubic_constant()},
        {"tol", table.tolerance()}}},
  };
}

void emit(const json& doc, const RunConfig& cfg, std::ostream& out) {
  out << (cfg.json ? doc.dump() : doc.dump(2)) << '\n';
}

std::string read_file(const std::string& path) {
  if (path.empty()) throw InputError("--in is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::kCertified: return kExitOk;
    case Verdict::kConditionFails: return kExitConditionFails;
    case Verdict::kNotApplicable: return kExitNotApplicable;
  }
  return kExitNumericalFailure;
}

int annulus_exit(AnnulusVerdict v) {
  switch (v) {
    case AnnulusVerdict::kPass: return kExitOk;
    case AnnulusVerdict::kFail:
    case AnnulusVerdict::kMismatch: return kExitConditionFails;
    case AnnulusVerdict::kAbstain: return kExitNumericalFailure;
  }
  return kExitNumericalFailure;
}

json quotient_moduli(const ComplexPoly& p) {
  const QuotientSeq s = quotients(p);
  json out = json::array();
  for (const auto& q : s.q) out.push_back(std::abs(q));
  return out;
}

int run_constants(const RunConfig& cfg, const ThresholdTable& table, std::ostream& out) {
  if (cfg.upto < 2) throw InputError("--upto must be an even degree >= 2");
  json b = json::object();
  for (int deg = 2; deg <= cfg.upto; deg += 2) {
    b[std::to_string(deg)] = table.b(deg / 2);
  }
  json doc = header(cfg, table);
  doc["b"] = std::move(b);
  doc["b_inf"] = table.b_infinity();
  doc["cubic"] = table.cubic_constant();
  emit(doc, cfg, out);
  return kExitOk;
}

int run_certify(const RunConfig& cfg, const ThresholdTable& table, std::ostream& out) {
  const std::string text = read_file(cfg.input_path);
  json doc = header(cfg, table);
  Certificate cert;
  if (cfg.theorem == "entire") {
    const json j = [&] {
      try {
        return json::parse(text);
      } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
      }
    }();
    const QuotientSeq s = j.contains("q") ? quotients_from_json(j) : quotients(poly_from_json(j));
    cert = certify_truncated_entire(s, cfg.claimed_tail, table);
  } else {
    const auto choice = parse_theorem_choice(cfg.theorem);
    if (!choice) throw InputError("unknown --theorem '" + cfg.theorem + "'");
    cert = certify(parse_poly(text), *choice, table);
  }
  doc["certificate"] = certificate_to_json(cert);
  emit(doc, cfg, out);
  return verdict_exit(cert.verdict);
}

int run_roots(const RunConfig& cfg, const ThresholdTable& table, std::ostream& out) {
  const ComplexPoly p = parse_poly(read_file(cfg.input_path));
  const RootReport rep = find_roots(p, cfg.tol.value_or(kDefaultRootTol));
  json doc = header(cfg, table);
  doc["report"] = root_report_to_json(rep);
  emit(doc, cfg, out);
  return rep.converged ? kExitOk : kExitNumericalFailure;
}

int run_verify(const RunConfig& cfg, const ThresholdTable& table, std::ostream& out) {
  const ComplexPoly p = parse_poly(read_file(cfg.input_path));
  const Certificate cert = certify(p, TheoremChoice::kAuto, table);
  const RootReport rep = find_roots(p, cfg.tol.value_or(kDefaultRootTol));
  const AnnulusVerification ann = verify_annuli(p, rep);
  json doc = header(cfg, table);
  doc["certificate"] = certificate_to_json(cert);
  doc["roots"] = root_report_to_json(rep);
  doc["annuli"] = annulus_verification_to_json(ann);
  if (p.is_real()) doc["all_real"] = realness_check(p, rep);
  emit(doc, cfg, out);
  return annulus_exit(ann.verdict);
}

int run_extremal(const RunConfig& cfg, const ThresholdTable& table, std::ostream& out) {
  const ComplexPoly p = build_extremal(cfg.extremal, table);
  if (!cfg.output_path.empty()) {
    std::ofstream f(cfg.output_path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + cfg.output_path + "'");
    f << serialize_poly(p) << '\n';
  }
  json doc = header(cfg, table);
  doc["polynomial"] = poly_to_json(p);
  doc["quotient_moduli"] = quotient_moduli(p);
  doc["degree"] = p.degree();
  emit(doc, cfg, out);
  return kExitOk;
}

int run_cubic(const RunConfig& cfg, const ThresholdTable& table, std::ostream& out) {
  json doc = header(cfg, table);
  if (cfg.cubic_action == "scan") {
    const cubic::ScanResult r = cubic::max_modulus_scan(cfg.grid);
    doc["scan"] = {
        {"grid", cfg.grid},
        {"sup_modulus", r.sup_modulus},
        {"argmax_lambda", r.argmax_lambda},
        {"max_positive_real_root", r.max_positive_real_root},
        {"min_negative_real_root", r.min_negative_real_root},
        {"max_nonreal_modulus", r.max_nonreal_modulus},
        {"max_residual", r.max_residual},
    };
  } else if (cfg.cubic_action == "locus") {
    const Complex a = cfg.locus_a, b = cfg.locus_b;
    const Complex res = cubic::multiple_root_locus_residual(a, b);
    const double scale = 4 * std::abs(a) * std::norm(b) + std::norm(a) * std::norm(b) +
                         4 * std::norm(a) * std::abs(b) + 18 * std::abs(a) * std::abs(b) + 27;
    const ComplexPoly p = cubic::make_cubic({a, b});
    const RootReport rep = find_roots(p);
    json roots = json::array();
    for (const auto& z : rep.roots) roots.push_back(complex_to_json(z));
    doc["locus"] = {
        {"a", complex_to_json(a)},
        {"b", complex_to_json(b)},
        {"residual", complex_to_json(res)},
        {"on_locus", std::abs(res) <= 1e-9 * scale},
        {"discriminant", complex_to_json(cubic::discriminant3(p))},
        {"roots", std::move(roots)},
        {"multiple_root_detected", rep.any_multiple()},
    };
  } else {
    throw InputError("cubic action must be 'scan' or 'locus'");
  }
  emit(doc, cfg, out);
  return kExitOk;
}

int run_sweep(const RunConfig& cfg, const ThresholdTable& table, std::ostream& out) {
  SweepConfig sc = cfg.sweep;
  sc.seed = cfg.seed;
  const SweepSummary s = sweep(sc);
  json doc = header(cfg, table);
  doc["config"] = {{"degrees", sc.degrees},   {"trials", sc.trials},
                   {"margin_low", sc.margin_low}, {"margin_high", sc.margin_high},
                   {"seed", sc.seed}};
  doc["summary"] = sweep_summary_to_json(s);
  emit(doc, cfg, out);
  return (s.fail == 0 && s.mismatch == 0) ? kExitOk : kExitConditionFails;
}

double sweep_threshold(TheoremChoice choice, int degree, const ThresholdTable& table) {
  switch (choice) {
    case TheoremChoice::kAuto: return simplicity_threshold(degree, table);
    case TheoremChoice::kEven: return table.b(std::max(1, degree / 2));
    case TheoremChoice::kOdd: return table.b((degree + 1) / 2);
    case TheoremChoice::kUniform: return table.b_infinity();
    case TheoremChoice::kCubic: return table.cubic_constant();
    case TheoremChoice::kReal:
      return degree == 3 ? table.cubic_constant() : table.b((degree + 1) / 2);
    case TheoremChoice::kHutchinson: return 4.0;
  }
  return table.b_infinity();
}

Complex parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw InputError("expected RE,IM but got '" + text + "'");
  }
}

}  // namespace

SweepSummary sweep(const SweepConfig& config) {
  if (config.trials < 1) throw InputError("sweep: --trials must be >= 1");
  if (config.degrees.empty()) throw InputError("sweep: no degrees given");
  if (!(config.margin_low <= config.margin_high)) {
    throw InputError("sweep: margin_low must not exceed margin_high");
  }
  for (int d : config.degrees) {
    if (d < 2 || d > kDefaultMaxDegree) throw InputError("sweep: degree out of range");
  }
  const ThresholdTable& table = thresholds();
  const CoefficientField field =
      config.theorem == TheoremChoice::kReal         ? CoefficientField::kReal
      : config.theorem == TheoremChoice::kHutchinson ? CoefficientField::kPositive
                                                     : CoefficientField::kComplex;
  SweepSummary s;
  s.trials = config.trials;
  s.min_modulus_gap = std::numeric_limits<double>::infinity();
  s.min_margin = std::numeric_limits<double>::infinity();
  for (int t = 0; t < config.trials; ++t) {
    const int degree = config.degrees[static_cast<std::size_t>(t) % config.degrees.size()];
    const double thr = sweep_threshold(config.theorem, degree, table);
    const double lo = std::max(thr + config.margin_low, 1e-3);
    const double hi = std::max(thr + config.margin_high, lo);
    QuotientSampler sampler(trial_seed(config.seed, static_cast<std::uint64_t>(t)));
    const ComplexPoly p = from_quotients(sampler.sample(degree, lo, hi, field));
    const Certificate cert = certify(p, config.theorem, table);
    for (const auto& m : cert.margins) s.min_margin = std::min(s.min_margin, m.value);
    const RootReport rep = find_roots(p);
    if (cert.verdict == Verdict::kNotApplicable) {
      ++s.not_applicable;
      continue;
    }
    if (cert.verdict == Verdict::kConditionFails) {
      ++s.condition_fails;
      if (rep.converged && !rep.any_multiple()) ++s.uncertified_simple;
      continue;
    }
    ++s.certified;
    const bool realness_only = cert.theorem == Theorem::kRealEvenT4i ||
                               cert.theorem == Theorem::kRealOddT4iii ||
                               cert.theorem == Theorem::kRealCubicT4v;
    if (realness_only) {
      if (!rep.converged) {
        ++s.abstain;
      } else if (realness_check(p, rep)) {
        ++s.pass;
      } else {
        ++s.fail;
      }
      continue;
    }
    const AnnulusVerification ann = verify_annuli(p, rep);
    switch (ann.verdict) {
      case AnnulusVerdict::kPass:
        if (rep.any_multiple() || !(rep.min_modulus_gap > 0.0)) {
          ++s.fail;
        } else {
          ++s.pass;
          s.min_modulus_gap = std::min(s.min_modulus_gap, rep.min_modulus_gap);
        }
        break;
      case AnnulusVerdict::kFail: ++s.fail; break;
      case AnnulusVerdict::kMismatch: ++s.mismatch; break;
      case AnnulusVerdict::kAbstain: ++s.abstain; break;
    }
  }
  return s;
}

json sweep_summary_to_json(const SweepSummary& s) {
  auto finite_or_null = [](double v) -> json {
    return std::isfinite(v) ? json(v) : json(nullptr);
  };
  return {
      {"trials", s.trials},
      {"certified", s.certified},
      {"condition_fails", s.condition_fails},
      {"not_applicable", s.not_applicable},
      {"pass", s.pass},
      {"fail", s.fail},
      {"mismatch", s.mismatch},
      {"abstain", s.abstain},
      {"uncertified_simple", s.uncertified_simple},
      {"min_modulus_gap", finite_or_null(s.min_modulus_gap)},
      {"min_margin", finite_or_null(s.min_margin)},
  };
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const bool custom_tol = config.tol && config.command == Command::kConstants;
    std::optional<ThresholdTable> local;
    if (custom_tol) local.emplace(*config.tol);
    const ThresholdTable& table = custom_tol ? *local : thresholds();
    switch (config.command) {
      case Command::kConstants: return run_constants(config, table, out);
      case Command::kCertify: return run_certify(config, table, out);
      case Command::kRoots: return run_roots(config, table, out);
      case Command::kVerify: return run_verify(config, table, out);
      case Command::kExtremal: return run_extremal(config, table, out);
      case Command::kCubic: return run_cubic(config, table, out);
      case Command::kSweep: return run_sweep(config, table, out);
    }
    throw InputError("unknown command");
  } catch (const NumericalError& e) {
    err << json{{"error", "numerical"}, {"message", e.what()}}.dump() << '\n';
    return kExitNumericalFailure;
  } catch (const std::exception& e) {
    // InputError, DomainError, RangeError and I/O problems.
    err << json{{"error", "input"}, {"message", e.what()}}.dump() << '\n';
    return kExitInputError;
  }
}

int main_with_args(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Coefficient certificates for simple zeros with distinct moduli", kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::optional<double> tol;
  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", cfg.json, "Compact single-line JSON output");
  };

  auto* constants = app.add_subcommand("constants", "Threshold constants b_2n, b_inf, cubic");
  constants->add_option("--upto", cfg.upto, "Largest even degree 2n to tabulate");
  constants->add_option("--tol", tol, "Root-solve tolerance");
  common(constants);

  auto* certify_cmd = app.add_subcommand("certify", "Check the coefficient conditions");
  certify_cmd->add_option("--in", cfg.input_path, "Polynomial JSON")->required();
  certify_cmd->add_option("--theorem", cfg.theorem,
                          "auto|even|odd|uniform|cubic|real|hutchinson|entire");
  certify_cmd->add_flag("--claimed-tail", cfg.claimed_tail,
                        "With --theorem entire: assert |q_k| >= b_inf for all unseen k");
  common(certify_cmd);

  auto* roots = app.add_subcommand("roots", "Simultaneous root finding");
  roots->add_option("--in", cfg.input_path, "Polynomial JSON")->required();
  roots->add_option("--tol", tol, "Relative correction tolerance");
  common(roots);

  auto* verify = app.add_subcommand("verify", "Certify, find roots and count zeros per annulus");
  verify->add_option("--in", cfg.input_path, "Polynomial JSON")->required();
  verify->add_option("--tol", tol, "Relative correction tolerance");
  common(verify);

  std::string family = "even";
  auto* extremal = app.add_subcommand("extremal", "Build a sharpness witness");
  extremal->add_option("--family", family, "even|odd|entire|real|cubic");
  extremal->add_option("--n", cfg.extremal.n, "Half degree n (n0 for entire; 0 = minimal)");
  extremal->add_option("--c", cfg.extremal.c, "Quotient modulus c (even)");
  extremal->add_option("--d", cfg.extremal.d, "Linear factor scale d (odd)");
  extremal->add_option("--delta", cfg.extremal.delta, "Perturbation delta (real)");
  extremal->add_option("--eps", cfg.extremal.eps, "Target slack eps (entire)");
  extremal->add_option("--levels", cfg.extremal.levels, "Truncation level J (entire)");
  extremal->add_option("--out", cfg.output_path, "Write the polynomial JSON here");
  common(extremal);

  auto* cubic_cmd = app.add_subcommand("cubic", "Cubic multiple-root analysis");
  cubic_cmd->require_subcommand(1);
  auto* scan = cubic_cmd->add_subcommand("scan", "Max root modulus over the lambda grid");
  scan->add_option("--grid", cfg.grid, "Number of grid points");
  common(scan);
  std::string a_text = "4,0", b_text = "3.375,0";
  auto* locus = cubic_cmd->add_subcommand("locus", "Locus residual at (a, b)");
  locus->add_option("--a", a_text, "a as RE,IM");
  locus->add_option("--b", b_text, "b as RE,IM");
  common(locus);

  std::string sweep_theorem = "auto";
  auto* sweep_cmd = app.add_subcommand("sweep", "Randomized certify + verify study");
  sweep_cmd->add_option("--degree", cfg.sweep.degrees, "Degree(s), cycled over trials");
  sweep_cmd->add_option("--trials", cfg.sweep.trials, "Number of trials");
  sweep_cmd->add_option("--margin-low", cfg.sweep.margin_low, "Lower margin above threshold");
  sweep_cmd->add_option("--margin-high", cfg.sweep.margin_high, "Upper margin above threshold");
  sweep_cmd->add_option("--seed", cfg.seed, "RNG seed");
  sweep_cmd->add_option("--theorem", sweep_theorem, "auto|even|odd|uniform|cubic|real|hutchinson");
  common(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << nlohmann::json{{"error", "input"}, {"message", e.what()}}.dump() << '\n';
    return kExitInputError;
  }

  cfg.tol = tol;
  try {
    if (constants->parsed()) {
      cfg.command = Command::kConstants;
    } else if (certify_cmd->parsed()) {
      cfg.command = Command::kCertify;
    } else if (roots->parsed()) {
      cfg.command = Command::kRoots;
    } else if (verify->parsed()) {
      cfg.command = Command::kVerify;
    } else if (extremal->parsed()) {
      cfg.command = Command::kExtremal;
      const auto f = parse_extremal_family(family);
      if (!f) throw InputError("unknown --family '" + family + "'");
      cfg.extremal.family = *f;
    } else if (cubic_cmd->parsed()) {
      cfg.command = Command::kCubic;
      cfg.cubic_action = scan->parsed() ? "scan" : "locus";
      cfg.locus_a = parse_pair(a_text);
      cfg.locus_b = parse_pair(b_text);
    } else {
      cfg.command = Command::kSweep;
      const auto t = parse_theorem_choice(sweep_theorem);
      if (!t) throw InputError("unknown --theorem '" + sweep_theorem + "'");
      cfg.sweep.theorem = *t;
    }
  } catch (const InputError& e) {
    err << nlohmann::json{{"error", "input"}, {"message", e.what()}}.dump() << '\n';
    return kExitInputError;
  }
  return run(cfg, out, err);
}

}  // namespace qcert::cli
