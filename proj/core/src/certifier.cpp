#include "qcert/certifier.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qcert/errors.hpp"
#include "qcert/poly_io.hpp"

namespace qcert {
namespace {

Certificate not_applicable(Theorem t, Strictness s, std::string why) {
  Certificate c;
  c.theorem = t;
  c.strictness = s;
  c.verdict = Verdict::kNotApplicable;
  c.reason = std::move(why);
  return c;
}

bool passes(double margin, Strictness s) {
  return s == Strictness::kStrict ? margin > 0.0 : margin >= 0.0;
}

// Fills margins, failing and boundary indices; returns true iff all pass.
bool evaluate_margins(Certificate& c, const QuotientSeq& s, bool use_modulus) {
  c.margins.clear();
  c.failing_indices.clear();
  c.boundary_indices.clear();
  for (int k = 2; k <= s.degree(); ++k) {
    const Complex& q = s.at(k);
    const double value = use_modulus ? std::abs(q) : q.real();
    const double m = value - c.threshold;
    c.margins.push_back({k, m});
    if (!passes(m, c.strictness)) c.failing_indices.push_back(k);
    if (std::abs(m) < kBoundaryBand) c.boundary_indices.push_back(k);
  }
  return c.failing_indices.empty();
}

Certificate run_condition(Theorem t, Strictness strictness, double threshold,
                          const QuotientSeq& s, bool use_modulus = true) {
  Certificate c;
  c.theorem = t;
  c.strictness = strictness;
  c.threshold = threshold;
  if (evaluate_margins(c, s, use_modulus)) {
    c.verdict = Verdict::kCertified;
    c.radii = radii(s);
  } else {
    c.verdict = Verdict::kConditionFails;
  }
  return c;
}

bool is_simplicity_theorem(Theorem t) {
  switch (t) {
    case Theorem::kEvenT1i:
    case Theorem::kOddT1ii:
    case Theorem::kTruncatedEntireT1iii:
    case Theorem::kUniformCor1:
    case Theorem::kCubicT3i:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::kEvenT1i: return "EVEN_T1I";
    case Theorem::kOddT1ii: return "ODD_T1II";
    case Theorem::kTruncatedEntireT1iii: return "TRUNCATED_ENTIRE_T1III";
    case Theorem::kUniformCor1: return "UNIFORM_COR1";
    case Theorem::kCubicT3i: return "CUBIC_T3I";
    case Theorem::kRealEvenT4i: return "REAL_EVEN_T4I";
    case Theorem::kRealOddT4iii: return "REAL_ODD_T4III";
    case Theorem::kRealCubicT4v: return "REAL_CUBIC_T4V";
    case Theorem::kHutchinsonA: return "HUTCHINSON_A";
  }
  return "UNKNOWN";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kCertified: return "CERTIFIED";
    case Verdict::kNotApplicable: return "NOT_APPLICABLE";
    case Verdict::kConditionFails: return "CONDITION_FAILS";
  }
  return "UNKNOWN";
}

std::string_view to_string(Strictness s) {
  return s == Strictness::kStrict ? "STRICT" : "NON_STRICT";
}

std::string Certificate::conclusion() const {
  switch (verdict) {
    case Verdict::kNotApplicable:
      return "not applicable: " + reason +
             "; nothing is implied about the zeros";
    case Verdict::kConditionFails:
      return "condition fails; the condition is sufficient only, so this does "
             "not imply that the polynomial has multiple or nonreal zeros";
    case Verdict::kCertified:
      break;
  }
  if (is_simplicity_theorem(theorem)) {
    std::string s =
        "all zeros are simple and their moduli are pairwise distinct; exactly "
        "one zero lies in each annulus cut by the circles |z| = R_k";
    if (theorem == Theorem::kTruncatedEntireT1iii) {
      s += " (applies to the entire function under the claimed tail bound; "
           "numerical checks cover the supplied truncation only)";
    }
    return s;
  }
  if (theorem == Theorem::kHutchinsonA) {
    return "all zeros are real, simple and negative";
  }
  return "all zeros are real (multiplicities are not excluded)";
}

Certificate certify_even(const ComplexPoly& p, const ThresholdTable& table) {
  const int w = p.degree();
  if (w < 2 || w % 2 != 0) {
    return not_applicable(Theorem::kEvenT1i, Strictness::kStrict,
                          "degree " + std::to_string(w) + " is not even");
  }
  return run_condition(Theorem::kEvenT1i, Strictness::kStrict,
                       table.b(w / 2), quotients(p));
}

Certificate certify_odd(const ComplexPoly& p, const ThresholdTable& table) {
  const int w = p.degree();
  if (w < 3 || w % 2 != 1) {
    return not_applicable(Theorem::kOddT1ii, Strictness::kNonStrict,
                          "degree " + std::to_string(w) + " is not odd >= 3");
  }
  return run_condition(Theorem::kOddT1ii, Strictness::kNonStrict,
                       table.b((w + 1) / 2), quotients(p));
}

Certificate certify_uniform(const ComplexPoly& p, const ThresholdTable& table) {
  return run_condition(Theorem::kUniformCor1, Strictness::kNonStrict,
                       table.b_infinity(), quotients(p));
}

Certificate certify_truncated_entire(const QuotientSeq& s, bool claimed_tail,
                                     const ThresholdTable& table) {
  if (s.q.empty()) {
    return not_applicable(Theorem::kTruncatedEntireT1iii,
                          Strictness::kNonStrict, "empty quotient prefix");
  }
  Certificate c = run_condition(Theorem::kTruncatedEntireT1iii,
                                Strictness::kNonStrict, table.b_infinity(), s);
  c.tail_claimed = claimed_tail;
  if (c.certified() && !claimed_tail) {
    c.verdict = Verdict::kNotApplicable;
    c.radii.reset();
    c.reason =
        "no tail claim: a finite prefix of quotients says nothing about the "
        "entire function";
  }
  return c;
}

Certificate certify_cubic(const ComplexPoly& p, const ThresholdTable& table) {
  if (p.degree() != 3) {
    return not_applicable(Theorem::kCubicT3i, Strictness::kStrict,
                          "degree " + std::to_string(p.degree()) + " is not 3");
  }
  return run_condition(Theorem::kCubicT3i, Strictness::kStrict,
                       table.cubic_constant(), quotients(p));
}

Certificate certify_real(const ComplexPoly& p, const ThresholdTable& table) {
  const int w = p.degree();
  if (!p.is_real()) {
    return not_applicable(Theorem::kRealEvenT4i, Strictness::kNonStrict,
                          "some coefficient is nonreal");
  }
  if (w == 3) {
    return run_condition(Theorem::kRealCubicT4v, Strictness::kNonStrict,
                         table.cubic_constant(), quotients(p));
  }
  if (w % 2 == 0) {
    return run_condition(Theorem::kRealEvenT4i, Strictness::kNonStrict,
                         table.b(w / 2), quotients(p));
  }
  return run_condition(Theorem::kRealOddT4iii, Strictness::kNonStrict,
                       table.b((w + 1) / 2), quotients(p));
}

Certificate certify_hutchinson(const ComplexPoly& p) {
  if (!p.all_positive()) {
    return not_applicable(Theorem::kHutchinsonA, Strictness::kNonStrict,
                          "coefficients are not all positive reals");
  }
  return run_condition(Theorem::kHutchinsonA, Strictness::kNonStrict, 4.0,
                       quotients(p), /*use_modulus=*/false);
}

std::optional<TheoremChoice> parse_theorem_choice(std::string_view name) {
  if (name == "auto") return TheoremChoice::kAuto;
  if (name == "even") return TheoremChoice::kEven;
  if (name == "odd") return TheoremChoice::kOdd;
  if (name == "uniform") return TheoremChoice::kUniform;
  if (name == "cubic") return TheoremChoice::kCubic;
  if (name == "real") return TheoremChoice::kReal;
  if (name == "hutchinson") return TheoremChoice::kHutchinson;
  return std::nullopt;
}

double simplicity_threshold(int degree, const ThresholdTable& table) {
  if (degree < 2) throw InputError("degree must be >= 2");
  if (degree == 3) return table.cubic_constant();
  return table.b((degree + 1) / 2);
}

Certificate certify(const ComplexPoly& p, TheoremChoice choice,
                    const ThresholdTable& table) {
  switch (choice) {
    case TheoremChoice::kEven: return certify_even(p, table);
    case TheoremChoice::kOdd: return certify_odd(p, table);
    case TheoremChoice::kUniform: return certify_uniform(p, table);
    case TheoremChoice::kCubic: return certify_cubic(p, table);
    case TheoremChoice::kReal: return certify_real(p, table);
    case TheoremChoice::kHutchinson: return certify_hutchinson(p);
    case TheoremChoice::kAuto: break;
  }
  if (p.all_positive()) {
    Certificate h = certify_hutchinson(p);
    if (h.certified()) return h;
  }
  const int w = p.degree();
  Certificate primary = w == 3       ? certify_cubic(p, table)
                        : w % 2 == 0 ? certify_even(p, table)
                                     : certify_odd(p, table);
  return primary;
}

nlohmann::json certificate_to_json(const Certificate& c) {
  nlohmann::json margins = nlohmann::json::array();
  for (const auto& m : c.margins) {
    margins.push_back({{"k", m.k}, {"margin", m.value}});
  }
  nlohmann::json out = {
      {"theorem", to_string(c.theorem)},
      {"verdict", to_string(c.verdict)},
      {"strictness", to_string(c.strictness)},
      {"threshold", c.threshold},
      {"margins", std::move(margins)},
      {"failing_indices", c.failing_indices},
      {"boundary_indices", c.boundary_indices},
      {"conclusion", c.conclusion()},
  };
  if (c.theorem == Theorem::kTruncatedEntireT1iii) {
    out["tail_claimed"] = c.tail_claimed;
  }
  if (c.radii) {
    out["radii"] = c.radii->radii;
    out["zero_scale"] = c.radii->zero_scale;
  } else {
    out["radii"] = nullptr;
  }
  return out;
}

}  // namespace qcert
