#pragma once

#include <array>
#include <utility>

#include "qcert/polynomial.hpp"

namespace qcert::cubic {

/// Quotients (a, b) of P_{3,a,b}(z) = 1 + z + z^2/a + z^3/(a^2 b).
struct CubicParams {
  Complex a;
  Complex b;
};

/// P_{3,a,b}; throws InputError if a or b is zero.
ComplexPoly make_cubic(const CubicParams& params);

/// D = -4 beta^3 delta + beta^2 gamma^2 - 4 alpha gamma^3
///     + 18 alpha beta gamma delta - 27 alpha^2 delta^2
/// for alpha z^3 + beta z^2 + gamma z + delta. Zero iff a multiple zero.
Complex discriminant3(const ComplexPoly& p);

/// 4ab^2 - a^2 b^2 + 4a^2 b - 18ab + 27, which equals -a^4 b^2 D(P_{3,a,b}).
Complex multiple_root_locus_residual(Complex a, Complex b);

/// x^2 + linear x + constant.
struct RealQuadratic {
  double linear;
  double constant;
};

/// Ferrari split of x^4 - 8 lambda x^3 + 18 x^2 - 27 for lambda in [0, 1]:
/// with t = cbrt(1 - lambda^2) (the real branch, t in [0, 1]),
///   first  = x^2 - (4 lambda + 2 sqrt(1-t)(1+2t)) x + 3 + 6t + 6 sqrt(1+t+t^2)
///   second = x^2 - (4 lambda - 2 sqrt(1-t)(1+2t)) x + 3 + 6t - 6 sqrt(1+t+t^2)
/// Only the final quadratics are used, so t = 1 (lambda = 0) is regular.
struct QuarticFactorization {
  double lambda;
  double t;
  RealQuadratic first;
  RealQuadratic second;
};

QuarticFactorization factor_quartic(double lambda);

/// x^4 - 8 lambda x^3 + 18 x^2 - 27.
Complex quartic_value(double lambda, Complex x);

/// The two roots of a real monic quadratic; a real pair when the
/// discriminant is nonnegative (exactly zero imaginary parts).
std::array<Complex, 2> quadratic_roots(const RealQuadratic& q);

/// All four roots of the quartic for lambda in [0, 1] (InputError outside).
std::array<Complex, 4> ferrari_roots(double lambda);

struct ScanResult {
  double sup_modulus = 0.0;
  double argmax_lambda = 0.0;
  double max_positive_real_root = 0.0;
  double min_negative_real_root = 0.0;   // most negative real root
  double max_nonreal_modulus = 0.0;
  double max_residual = 0.0;             // worst |quartic(root)| on the grid
};

/// Uniform lambda-grid on [0, 1] with grid_points >= 2 nodes; the maximum
/// root modulus is reduced with a lowest-lambda tie-break.
ScanResult max_modulus_scan(int grid_points);

/// lambda = cos(gamma/2) for gamma in [-pi, pi].
double lambda_from_gamma(double gamma);

/// Back-substitution a = x e^{-i gamma/2}, b = a e^{i gamma}; |a| = |b| = |x|.
CubicParams modulus_equal_slice(Complex x, double gamma);

}  // namespace qcert::cubic
