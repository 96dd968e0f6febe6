#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcert/errors.hpp"
#include "qcert/polynomial.hpp"

namespace qcert {

inline constexpr double kDefaultRootTol = 1e-14;
inline constexpr double kResidualTol = 1e-9;
inline constexpr double kImagTol = 1e-8;
inline constexpr double kClusterRel = 1e-6;
inline constexpr int kMaxSweeps = 500;

struct RootReport {
  std::vector<Complex> roots;
  std::vector<double> residuals;       // |p(z)| / sum_k |a_k| |z|^k
  std::vector<double> moduli_sorted;
  double min_modulus_gap = 0.0;        // smallest gap between sorted moduli
  double min_pairwise_distance = 0.0;
  std::vector<bool> multiplicity_flags;  // closer than 1e-6 (1 + |z|) to another root
  std::vector<int> annulus;            // circles R_k (scaled) with R_k <= |z|
  bool all_real = false;               // every |Im z| < 1e-8
  bool converged = false;              // all roots settled and residuals < 1e-9
  int sweeps = 0;

  bool any_multiple() const;
};

/// Simultaneous Aberth-Ehrlich iteration on all deg(p) roots, no deflation.
///
/// Starting points: one per annulus of the quotient radii, at the annulus'
/// geometric centre (|a_{k-1}/a_k| in the original variable), rotated by a
/// fixed golden-angle jitter. A root is frozen once its correction is below
/// tol relative to its modulus or its backward error reaches rounding level,
/// which lets the members of a cluster settle. More than 500 sweeps leaves
/// converged = false.
RootReport find_roots(const ComplexPoly& p, double tol = kDefaultRootTol);

/// Raised when the winding number cannot be trusted: a zero sits too close
/// to the contour, or the accumulated argument is not an integer multiple
/// of 2 pi.
class ContourError : public NumericalError {
 public:
  enum class Kind { kTooClose, kNonInteger, kUnresolved };
  ContourError(Kind kind, const std::string& what)
      : NumericalError(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline constexpr double kContourGuard = 1e-8;

/// Number of zeros inside |z| = radius by the argument principle.
///
/// The polynomial is evaluated through coefficients a_k radius^k rescaled in
/// log space, so large radii do not overflow. Sampling is refined x4 while a
/// step's argument increment reaches pi/2 or min|p| on the circle is below
/// 1e-8 max|p|; after three refinements the guard raises ContourError.
int winding_count(const ComplexPoly& p, double radius, int samples = 256);

enum class AnnulusVerdict { kPass, kFail, kMismatch, kAbstain };
std::string_view to_string(AnnulusVerdict v);

struct AnnulusVerification {
  AnnulusVerdict verdict = AnnulusVerdict::kAbstain;
  std::vector<double> circles;     // radii in the original variable
  std::vector<int> winding_counts;
  std::vector<int> root_counts;    // find_roots roots strictly inside
  std::string detail;
};

/// Winding counts on every circle R_k; PASS iff the count at R_k is k for all
/// k and agrees with the root finder. Winding and root-finder disagreement is
/// MISMATCH; a contour-guard failure is ABSTAIN.
AnnulusVerification verify_annuli(const ComplexPoly& p);
AnnulusVerification verify_annuli(const ComplexPoly& p, const RootReport& report);

/// True iff every root is within im_tol of the real axis, after restarting
/// each root that is not at its real part and refining on the real line
/// (accepted when the backward error stays below 1e-9 and the refined point
/// stays near the original root). Only meaningful for real coefficients;
/// complex-coefficient input is judged on |Im| alone.
bool realness_check(const ComplexPoly& p, const RootReport& report,
                    double im_tol = kImagTol);

nlohmann::json root_report_to_json(const RootReport& r);
nlohmann::json annulus_verification_to_json(const AnnulusVerification& v);

}  // namespace qcert
