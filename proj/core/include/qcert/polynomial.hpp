#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qcert {

using Complex = std::complex<double>;

inline constexpr int kDefaultMaxDegree = 64;

/// Polynomial a_0 + a_1 z + ... + a_w z^w with every a_k != 0 and w >= 2.
///
/// The nonzero-coefficient invariant is checked on construction (InputError
/// naming the offending index); the degree cap guards against coefficients
/// that cannot be held in double precision.
class ComplexPoly {
 public:
  explicit ComplexPoly(std::vector<Complex> coeffs,
                       int max_degree = kDefaultMaxDegree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  const Complex& operator[](std::size_t k) const { return coeffs_[k]; }

  bool is_real() const;
  bool all_positive() const;
  double max_abs_coeff() const;

  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;
  /// sum_k |a_k| |z|^k: the natural scale for backward-error residuals.
  double abs_scale(Complex z) const;

  friend bool operator==(const ComplexPoly&, const ComplexPoly&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Anchors a_0, a_1 and the second quotients q_2..q_w,
/// q_n = a_{n-1}^2 / (a_{n-2} a_n).
struct QuotientSeq {
  Complex a0;
  Complex a1;
  std::vector<Complex> q;  // q[0] is q_2

  int degree() const { return static_cast<int>(q.size()) + 1; }
  /// q_k for k = 2..degree().
  const Complex& at(int k) const { return q[static_cast<std::size_t>(k - 2)]; }
};

/// Circles |z| = R_k, k = 1..w-1, with R_1 = sqrt|q_2| and
/// R_k = |q_2 ... q_k sqrt(q_{k+1})|.
///
/// The radii refer to the normalized polynomial (a_0 = a_1 = 1). Zeros of the
/// original polynomial are those of the normalized one scaled by
/// |a_0 / a_1|, stored as zero_scale.
struct AnnulusPartition {
  std::vector<double> log_radii;
  std::vector<double> radii;
  double zero_scale = 1.0;

  std::size_t size() const { return radii.size(); }
  /// Radius of the k-th circle (1-based) in the original variable.
  double circle(std::size_t k) const { return zero_scale * radii[k - 1]; }
  bool strictly_increasing() const;
};

QuotientSeq quotients(const ComplexPoly& p);

/// Rebuilds coefficients with a_n = a_{n-1}^2 / (a_{n-2} q_n). Throws
/// RangeError if some |a_n| leaves [1e-300, 1e300], InputError on a zero
/// entry.
ComplexPoly from_quotients(const QuotientSeq& s,
                           int max_degree = kDefaultMaxDegree);

/// a_0^{-1} p(a_0 a_1^{-1} z): same quotients, a_0 = a_1 = 1.
ComplexPoly normalize(const ComplexPoly& p);

/// Computed in log space; one radius per quotient.
AnnulusPartition radii(const QuotientSeq& s);

/// Product p(z) * (1 + z/d); throws InputError if a coefficient cancels.
ComplexPoly multiply_linear(const ComplexPoly& p, double d);

}  // namespace qcert
