#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcert/constants.hpp"
#include "qcert/polynomial.hpp"

namespace qcert {

enum class Theorem {
  kEvenT1i,               // even degree 2n, |q_k| > b_{2n}
  kOddT1ii,               // odd degree 2n+1, |q_k| >= b_{2n+2}
  kTruncatedEntireT1iii,  // entire function, |q_k| >= b_inf for all k
  kUniformCor1,           // any degree, |q_k| >= b_inf
  kCubicT3i,              // degree 3, |q_k| > sqrt(9 + 6 sqrt 3)
  kRealEvenT4i,           // real, even degree, |q_k| >= b_{2n}
  kRealOddT4iii,          // real, odd degree >= 5, |q_k| >= b_{2n+2}
  kRealCubicT4v,          // real cubic, |q_k| >= sqrt(9 + 6 sqrt 3)
  kHutchinsonA,           // positive coefficients, q_k >= 4
};

enum class Verdict { kCertified, kNotApplicable, kConditionFails };
enum class Strictness { kStrict, kNonStrict };

std::string_view to_string(Theorem t);
std::string_view to_string(Verdict v);
std::string_view to_string(Strictness s);

struct Margin {
  int k;         // quotient index, 2..w
  double value;  // |q_k| - threshold (q_k - 4 for Hutchinson)
};

/// Outcome of one sufficient condition.
///
/// Margins are exact IEEE differences; comparisons use the theorem's printed
/// strictness with no epsilon. Indices whose |margin| < 1e-12 are listed in
/// boundary_indices so callers can see that the verdict rests on the tie.
struct Certificate {
  Theorem theorem{};
  Verdict verdict = Verdict::kNotApplicable;
  Strictness strictness = Strictness::kStrict;
  double threshold = 0.0;
  std::vector<Margin> margins;
  std::vector<int> failing_indices;
  std::vector<int> boundary_indices;
  std::optional<AnnulusPartition> radii;  // set iff certified
  bool tail_claimed = false;              // truncated-entire only
  std::string reason;                     // set when not applicable

  bool certified() const { return verdict == Verdict::kCertified; }
  /// Human-readable statement of what the verdict does (and does not) imply.
  std::string conclusion() const;
};

inline constexpr double kBoundaryBand = 1e-12;

Certificate certify_even(const ComplexPoly& p,
                         const ThresholdTable& table = thresholds());
Certificate certify_odd(const ComplexPoly& p,
                        const ThresholdTable& table = thresholds());
Certificate certify_uniform(const ComplexPoly& p,
                            const ThresholdTable& table = thresholds());
/// s is a finite prefix of an entire function's quotient sequence;
/// claimed_tail is the caller's guarantee that every unseen |q_k| >= b_inf.
Certificate certify_truncated_entire(const QuotientSeq& s, bool claimed_tail,
                                     const ThresholdTable& table = thresholds());
Certificate certify_cubic(const ComplexPoly& p,
                          const ThresholdTable& table = thresholds());
Certificate certify_real(const ComplexPoly& p,
                         const ThresholdTable& table = thresholds());
Certificate certify_hutchinson(const ComplexPoly& p);

enum class TheoremChoice { kAuto, kEven, kOdd, kUniform, kCubic, kReal, kHutchinson };

std::optional<TheoremChoice> parse_theorem_choice(std::string_view name);

/// kAuto: Hutchinson when every coefficient is positive and it certifies,
/// otherwise the complex simplicity theorem for the degree (cubic-sharp for
/// degree 3). The realness-only variant is never chosen implicitly; ask for
/// kReal.
Certificate certify(const ComplexPoly& p, TheoremChoice choice,
                    const ThresholdTable& table = thresholds());

/// The complex simplicity threshold for a degree: b_{2n} for 2n, b_{2n+2}
/// for 2n+1, sqrt(9 + 6 sqrt 3) for 3.
double simplicity_threshold(int degree, const ThresholdTable& table = thresholds());

nlohmann::json certificate_to_json(const Certificate& c);

}  // namespace qcert
