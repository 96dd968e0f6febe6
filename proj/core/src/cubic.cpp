#include "qcert/cubic.hpp"

#include <cmath>
#include <numbers>

#include "qcert/errors.hpp"

namespace qcert::cubic {

ComplexPoly make_cubic(const CubicParams& params) {
  const auto& [a, b] = params;
  if (a == Complex{} || b == Complex{}) {
    throw InputError("cubic parameters a and b must be nonzero");
  }
  return ComplexPoly({{1.0, 0.0}, {1.0, 0.0}, 1.0 / a, 1.0 / (a * a * b)});
}

Complex discriminant3(const ComplexPoly& p) {
  if (p.degree() != 3) {
    throw InputError("discriminant3 expects a cubic");
  }
  const Complex alpha = p[3], beta = p[2], gamma = p[1], delta = p[0];
  return -4.0 * beta * beta * beta * delta + beta * beta * gamma * gamma -
         4.0 * alpha * gamma * gamma * gamma +
         18.0 * alpha * beta * gamma * delta - 27.0 * alpha * alpha * delta * delta;
}

Complex multiple_root_locus_residual(Complex a, Complex b) {
  return 4.0 * a * b * b - a * a * b * b + 4.0 * a * a * b - 18.0 * a * b + 27.0;
}

QuarticFactorization factor_quartic(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw InputError("lambda must lie in [0, 1]");
  }
  const double t = std::cbrt((1.0 - lambda) * (1.0 + lambda));
  const double split = 2.0 * std::sqrt(1.0 - t) * (1.0 + 2.0 * t);
  const double root = 6.0 * std::sqrt(1.0 + t + t * t);
  // sqrt(1 - t^3) is lambda itself; use it directly.
  return {lambda, t,
          {-(4.0 * lambda + split), 3.0 + 6.0 * t + root},
          {-(4.0 * lambda - split), 3.0 + 6.0 * t - root}};
}

Complex quartic_value(double lambda, Complex x) {
  const Complex x2 = x * x;
  return x2 * x2 - 8.0 * lambda * x2 * x + 18.0 * x2 - 27.0;
}

std::array<Complex, 2> quadratic_roots(const RealQuadratic& q) {
  const double p = q.linear;
  const double disc = p * p - 4.0 * q.constant;
  if (disc < 0.0) {
    const double im = 0.5 * std::sqrt(-disc);
    return {Complex{-0.5 * p, im}, Complex{-0.5 * p, -im}};
  }
  const double s = std::sqrt(disc);
  // Cancellation-free pair: the larger root first, then constant / larger.
  const double big = -0.5 * (p + std::copysign(s, p));
  if (big == 0.0) return {Complex{0.0, 0.0}, Complex{0.0, 0.0}};
  return {Complex{big, 0.0}, Complex{q.constant / big, 0.0}};
}

std::array<Complex, 4> ferrari_roots(double lambda) {
  const QuarticFactorization f = factor_quartic(lambda);
  const auto r1 = quadratic_roots(f.first);
  const auto r2 = quadratic_roots(f.second);
  return {r1[0], r1[1], r2[0], r2[1]};
}

ScanResult max_modulus_scan(int grid_points) {
  if (grid_points < 2) {
    throw InputError("max_modulus_scan needs at least 2 grid points");
  }
  ScanResult out;
  out.sup_modulus = -1.0;
  for (int i = 0; i < grid_points; ++i) {
    const double lambda = double(i) / double(grid_points - 1);
    double local = 0.0;
    for (const Complex& x : ferrari_roots(lambda)) {
      const double m = std::abs(x);
      local = std::max(local, m);
      out.max_residual = std::max(out.max_residual, std::abs(quartic_value(lambda, x)));
      if (x.imag() == 0.0) {
        out.max_positive_real_root = std::max(out.max_positive_real_root, x.real());
        out.min_negative_real_root = std::min(out.min_negative_real_root, x.real());
      } else {
        out.max_nonreal_modulus = std::max(out.max_nonreal_modulus, m);
      }
    }
    if (local > out.sup_modulus) {
      out.sup_modulus = local;
      out.argmax_lambda = lambda;
    }
  }
  return out;
}

double lambda_from_gamma(double gamma) {
  if (!(std::abs(gamma) <= std::numbers::pi)) {
    throw InputError("gamma must lie in [-pi, pi]");
  }
  return std::cos(0.5 * gamma);
}

CubicParams modulus_equal_slice(Complex x, double gamma) {
  const Complex a = x * std::polar(1.0, -0.5 * gamma);
  return {a, a * std::polar(1.0, gamma)};
}

}  // namespace qcert::cubic
