#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "qcert/constants.hpp"
#include "qcert/cubic.hpp"
#include "qcert/errors.hpp"
#include "qcert/extremal.hpp"
#include "qcert/sampling.hpp"

using namespace qcert;
using namespace qcert::cubic;
using C = Complex;

namespace {

std::vector<C> sorted(std::array<C, 4> r) {
  std::vector<C> v(r.begin(), r.end());
  std::sort(v.begin(), v.end(), [](C a, C b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return v;
}

}  // namespace

TEST_CASE("discriminant3 examples") {
  // z^3 - 3z + 2 has a zero coefficient, which ComplexPoly rejects;
  // (z - 1)^2 (z - 3) is the same kind of example.
  const ComplexPoly dbl({-3, 7, -5, 1});  // (z-1)^2 (z-3)
  CHECK(std::abs(discriminant3(dbl)) < 1e-12);
  const ComplexPoly simple({-6, 11, -6, 1});  // (z-1)(z-2)(z-3): D = 4
  CHECK(discriminant3(simple).real() == doctest::Approx(4.0));
  CHECK(std::abs(discriminant3(cubic_extremal())) < 1e-9);
  CHECK_THROWS_AS(discriminant3(ComplexPoly({1, 1, 1, 1, 1})), InputError);
}

TEST_CASE("multiple root locus examples") {
  CHECK(std::abs(multiple_root_locus_residual(4.0, 27.0 / 8.0)) < 1e-12);
  const double a = cubic_sharp_constant();
  CHECK(std::abs(multiple_root_locus_residual(a, -a)) < 1e-9);
  CHECK(std::abs(multiple_root_locus_residual(3.0, 3.0)) < 1e-12);
  CHECK(std::abs(multiple_root_locus_residual(10.0, 10.0)) > 1.0);
  const auto roots = testing::companion_roots(make_cubic({10.0, 10.0}));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) CHECK(std::abs(roots[i] - roots[j]) > 1e-3);
  }
  CHECK_THROWS_AS(make_cubic({0.0, 1.0}), InputError);
}

TEST_CASE("locus residual equals -a^4 b^2 D on random pairs") {
  QuotientSampler s(99);
  for (int trial = 0; trial < 500; ++trial) {
    const C a = s.uniform(0.5, 10.0) * s.unit(CoefficientField::kComplex);
    const C b = s.uniform(0.5, 10.0) * s.unit(CoefficientField::kComplex);
    const C lhs = multiple_root_locus_residual(a, b);
    const C rhs = -a * a * a * a * b * b * discriminant3(make_cubic({a, b}));
    CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("ferrari_roots at the ends of the range") {
  const auto one = sorted(ferrari_roots(1.0));
  CHECK(std::abs(one[0] - C(-1, 0)) < 1e-8);
  for (int i = 1; i < 4; ++i) CHECK(std::abs(one[static_cast<std::size_t>(i)] - C(3, 0)) < 1e-8);

  const double inner = std::sqrt(6.0 * std::sqrt(3.0) - 9.0);
  const double outer = std::sqrt(9.0 + 6.0 * std::sqrt(3.0));
  const auto zero = sorted(ferrari_roots(0.0));
  CHECK(std::abs(zero[0] - C(-inner, 0)) < 1e-12);
  CHECK(std::abs(zero[1] - C(0, -outer)) < 1e-12);
  CHECK(std::abs(zero[2] - C(0, outer)) < 1e-12);
  CHECK(std::abs(zero[3] - C(inner, 0)) < 1e-12);
  CHECK(inner == doctest::Approx(1.17997).epsilon(1e-5));

  for (const C& x : ferrari_roots(0.5)) CHECK(std::abs(quartic_value(0.5, x)) < 1e-8);
  CHECK_THROWS_AS(ferrari_roots(-0.1), InputError);
  CHECK_THROWS_AS(ferrari_roots(1.1), InputError);
}

TEST_CASE("factorization closure over t in [0, 1]") {
  for (int i = 0; i <= 1000; ++i) {
    const double t = i / 1000.0;
    const double lambda = std::sqrt(1.0 - t * t * t);
    const QuarticFactorization f = factor_quartic(lambda);
    const double p1 = f.first.linear, r1 = f.first.constant;
    const double p2 = f.second.linear, r2 = f.second.constant;
    CHECK(std::abs((p1 + p2) + 8.0 * lambda) < 1e-10);
    CHECK(std::abs(r1 + r2 + p1 * p2 - 18.0) < 1e-10);
    CHECK(std::abs(p1 * r2 + p2 * r1) < 1e-10);
    CHECK(std::abs(r1 * r2 + 27.0) < 1e-10);
  }
}

TEST_CASE("ferrari roots agree with the companion oracle") {
  for (int i = 0; i <= 100; ++i) {
    const double lambda = i / 100.0;
    const auto f = ferrari_roots(lambda);
    // The quartic has a zero x coefficient, so ComplexPoly cannot hold it;
    // compare against a hand-built companion matrix instead.
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(1, 0) = m(2, 1) = m(3, 2) = 1.0;
    m(0, 3) = 27.0;
    m(2, 3) = -18.0;
    m(3, 3) = 8.0 * lambda;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(m, false);
    std::vector<C> want(solver.eigenvalues().data(), solver.eigenvalues().data() + 4);
    // Triple root at lambda = 1 limits eigenvalue accuracy to eps^(1/3).
    CHECK(testing::max_nearest_distance(std::vector<C>(f.begin(), f.end()), want) <
          (lambda == 1.0 ? 1e-4 : 1e-6));
    for (const C& x : f) CHECK(std::abs(quartic_value(lambda, x)) < 1e-8 * (1 + std::pow(std::abs(x), 4)));
  }
}

TEST_CASE("max_modulus_scan") {
  const double c = cubic_sharp_constant();
  const ScanResult r = max_modulus_scan(10000);
  CHECK(std::abs(r.sup_modulus - c) < 1e-6);
  CHECK(r.argmax_lambda == 0.0);
  CHECK(r.sup_modulus <= c + 1e-9);
  CHECK(r.max_positive_real_root <= 3.0 + 1e-9);
  CHECK(r.min_negative_real_root >= -c - 1e-9);
  CHECK(r.max_nonreal_modulus <= c + 1e-9);
  CHECK(r.max_residual < 1e-8);
  CHECK_THROWS_AS(max_modulus_scan(1), InputError);
}

TEST_CASE("nonreal pairs have the predicted modulus") {
  for (int i = 0; i <= 200; ++i) {
    const double lambda = i / 200.0;
    const QuarticFactorization f = factor_quartic(lambda);
    const double t = f.t;
    const double predicted = std::sqrt(3.0 + 6.0 * t + 6.0 * std::sqrt(1.0 + t + t * t));
    for (const C& x : quadratic_roots(f.first)) {
      if (x.imag() != 0.0) CHECK(std::abs(x) == doctest::Approx(predicted).epsilon(1e-12));
    }
    CHECK(predicted <= cubic_sharp_constant() + 1e-12);
  }
}

TEST_CASE("modulus_equal_slice maps quartic roots onto the locus") {
  const double c = cubic_sharp_constant();
  const CubicParams at_pi = modulus_equal_slice(C(0, c), std::numbers::pi);
  CHECK(std::abs(at_pi.a) == doctest::Approx(c));
  CHECK(std::abs(at_pi.b) == doctest::Approx(c));
  CHECK(std::abs(multiple_root_locus_residual(at_pi.a, at_pi.b)) < 1e-7);

  const CubicParams three = modulus_equal_slice(3.0, 0.0);
  CHECK(std::abs(three.a - 3.0) < 1e-15);
  CHECK(std::abs(three.b - 3.0) < 1e-15);
  CHECK(std::abs(multiple_root_locus_residual(three.a, three.b)) < 1e-12);

  CHECK(lambda_from_gamma(0.0) == 1.0);
  CHECK(std::abs(lambda_from_gamma(std::numbers::pi)) < 1e-15);

  // With a = x e^{-i gamma/2}, b = a e^{i gamma} the locus residual is
  // exactly -quartic(cos(gamma/2), x), so every root lands on the locus.
  for (int i = 0; i <= 40; ++i) {
    const double gamma = i * (std::numbers::pi / 40);
    const double lambda = lambda_from_gamma(gamma);
    for (const C& x : ferrari_roots(lambda)) {
      const CubicParams ab = modulus_equal_slice(x, gamma);
      CHECK(std::abs(std::abs(ab.a) - std::abs(x)) < 1e-12);
      CHECK(std::abs(std::abs(ab.b) - std::abs(x)) < 1e-12);
      CHECK(std::abs(multiple_root_locus_residual(ab.a, ab.b)) < 1e-7);
    }
  }
}
