#include <doctest.h>

#include <cmath>
#include <string>

#include "oracles.hpp"
#include "qcert/errors.hpp"
#include "qcert/poly_io.hpp"
#include "qcert/polynomial.hpp"
#include "qcert/rootlab.hpp"
#include "qcert/sampling.hpp"

using namespace qcert;
using C = Complex;

namespace {

double rel_err(C got, C want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("construction enforces nonzero coefficients and degree >= 2") {
  CHECK_THROWS_WITH_AS(ComplexPoly({1, 1, 0}), "zero coefficient at index 2", InputError);
  CHECK_THROWS_AS(ComplexPoly({1, 1}), InputError);
  CHECK_THROWS_AS(ComplexPoly({1, C(0, 0), 1}), InputError);
  std::vector<C> big(70, C{1.0, 0.0});
  CHECK_THROWS_AS(ComplexPoly{big}, InputError);
  CHECK_NOTHROW(ComplexPoly{big, 80});
}

TEST_CASE("quotients of small examples") {
  const QuotientSeq s1 = quotients(ComplexPoly({1, 1, 0.25}));
  REQUIRE(s1.q.size() == 1);
  CHECK(s1.at(2) == C(4.0, 0.0));

  const QuotientSeq s2 = quotients(ComplexPoly({1, 1, 0.5, 1.0 / 12.0}));
  CHECK(std::abs(s2.at(2) - 2.0) < 1e-15);
  CHECK(std::abs(s2.at(3) - 3.0) < 1e-14);

  // Hand computation: (-4i)^2 / (2 * 8) = -1 and 8^2 / (-4i * 16i) = 64/64 = 1.
  const QuotientSeq s3 = quotients(ComplexPoly({C(2, 0), C(0, -4), C(8, 0), C(0, 16)}));
  CHECK(std::abs(s3.at(2) - C(-1, 0)) < 1e-15);
  CHECK(std::abs(s3.at(3) - C(1, 0)) < 1e-15);
  CHECK(s3.a0 == C(2, 0));
  CHECK(s3.a1 == C(0, -4));
}

TEST_CASE("from_quotients rebuilds coefficients") {
  const ComplexPoly p = from_quotients({1, 1, {2, 3}});
  CHECK(std::abs(p[2] - 0.5) < 1e-15);
  CHECK(std::abs(p[3] - 1.0 / 12.0) < 1e-15);
  const ComplexPoly p2 = from_quotients({1, 1, {4}});
  CHECK(p2 == ComplexPoly({1, 1, 0.25}));
  CHECK_THROWS_AS(from_quotients({1, 1, {}}), InputError);
  CHECK_THROWS_AS(from_quotients({0, 1, {4}}), InputError);
  CHECK_THROWS_AS(from_quotients({1, 1, {4, 0}}), InputError);
}

TEST_CASE("from_quotients guards the coefficient range") {
  // |a_n| ~ 1e-10^{n(n-1)/2} underflows quickly.
  QuotientSeq s{1, 1, std::vector<C>(20, C(1e10, 0))};
  CHECK_THROWS_AS(from_quotients(s), RangeError);
}

TEST_CASE("round trip: quotients(from_quotients(s)) = s on random sequences") {
  QuotientSampler sampler(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int degree = 2 + trial % 19;
    const QuotientSeq s = sampler.sample(degree, 2.0, 10.0);
    const QuotientSeq back = quotients(from_quotients(s));
    REQUIRE(back.q.size() == s.q.size());
    CHECK(back.a0 == s.a0);
    CHECK(back.a1 == s.a1);
    for (std::size_t i = 0; i < s.q.size(); ++i) CHECK(rel_err(back.q[i], s.q[i]) < 1e-12);
  }
}

TEST_CASE("round trip: coefficients survive quotients then from_quotients") {
  QuotientSampler sampler(11);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexPoly p = from_quotients(sampler.sample(2 + trial % 15, 2.0, 6.0));
    const ComplexPoly back = from_quotients(quotients(p));
    for (int k = 0; k <= p.degree(); ++k) {
      CHECK(rel_err(back[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(k)]) < 1e-12);
    }
  }
}

TEST_CASE("normalize") {
  const ComplexPoly p({3, 6, 3});
  const ComplexPoly n = normalize(p);
  CHECK(n == ComplexPoly({1, 1, 0.25}));
  CHECK(quotients(n).at(2) == C(4, 0));
  CHECK(normalize(n) == n);

  QuotientSampler sampler(3);
  for (int trial = 0; trial < 40; ++trial) {
    const ComplexPoly r = from_quotients(sampler.sample(2 + trial % 12, 1.5, 8.0));
    const ComplexPoly nr = normalize(r);
    CHECK(nr[0] == C(1, 0));
    CHECK(nr[1] == C(1, 0));
    const QuotientSeq a = quotients(r), b = quotients(nr);
    for (std::size_t i = 0; i < a.q.size(); ++i) CHECK(rel_err(b.q[i], a.q[i]) < 1e-12);
    const ComplexPoly nn = normalize(nr);
    for (int k = 0; k <= nr.degree(); ++k) {
      CHECK(nn[static_cast<std::size_t>(k)] == nr[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("zeros of normalize(p) are those of p scaled by a1/a0 (companion oracle)") {
  QuotientSampler sampler(19);
  for (int trial = 0; trial < 25; ++trial) {
    const ComplexPoly p = from_quotients(sampler.sample(3, 3.0, 9.0));
    const auto zp = testing::companion_roots(p);
    const auto zn = testing::companion_roots(normalize(p));
    const C scale = p[1] / p[0];
    std::vector<C> mapped;
    for (const auto& z : zp) mapped.push_back(z * scale);
    CHECK(testing::max_nearest_distance(zn, mapped) < 1e-9);
  }
}

TEST_CASE("radii") {
  const AnnulusPartition a = radii({1, 1, {9, 9}});
  REQUIRE(a.size() == 2);
  CHECK(a.radii[0] == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(a.radii[1] == doctest::Approx(27.0).epsilon(1e-14));
  const AnnulusPartition b = radii({1, 1, {4, 4, 4, 4}});
  REQUIRE(b.size() == 4);
  CHECK(b.radii[0] == doctest::Approx(2.0));
  CHECK(b.radii[1] == doctest::Approx(8.0));
  CHECK(b.radii[2] == doctest::Approx(32.0));
  CHECK(b.radii[3] == doctest::Approx(128.0));
  CHECK(b.strictly_increasing());
  // Rescaled anchors move the circles, not the normalized radii.
  const AnnulusPartition c = radii({2, 1, {9, 9}});
  CHECK(c.zero_scale == 2.0);
  CHECK(c.circle(1) == doctest::Approx(6.0));
}

TEST_CASE("radii are monotone with the ratio sqrt|q_k q_{k+1}| when |q| > 1") {
  QuotientSampler sampler(5);
  for (int trial = 0; trial < 50; ++trial) {
    const QuotientSeq s = sampler.sample(2 + trial % 20, 1.01, 12.0);
    const AnnulusPartition a = radii(s);
    CHECK(a.strictly_increasing());
    CHECK(a.radii[0] == doctest::Approx(std::sqrt(std::abs(s.at(2)))));
    for (std::size_t k = 2; k <= a.size(); ++k) {
      const double ratio = std::sqrt(std::abs(s.at(static_cast<int>(k)) * s.at(static_cast<int>(k) + 1)));
      CHECK(a.radii[k - 1] / a.radii[k - 2] == doctest::Approx(ratio).epsilon(1e-12));
    }
  }
}

TEST_CASE("multiply_linear") {
  const ComplexPoly p({1, 1, 1});
  const ComplexPoly q = multiply_linear(p, 2.0);
  CHECK(q == ComplexPoly({1, 1.5, 1.5, 0.5}));
  CHECK_THROWS_AS(multiply_linear(p, 0.0), InputError);
}

TEST_CASE("JSON parsing and serialization") {
  const ComplexPoly p = parse_poly(R"({"coeffs": [[1, 0], [0, -4], [8, 0]]})");
  CHECK(p[1] == C(0, -4));
  CHECK(parse_poly(serialize_poly(p)) == p);
  const ComplexPoly r = parse_poly(R"({"a0": [1, 0], "a1": [1, 0], "q": [[2, 0], [3, 0]]})");
  CHECK(std::abs(r[3] - 1.0 / 12.0) < 1e-15);
  const QuotientSeq s = parse_quotients(serialize_quotients(quotients(p)));
  CHECK(s.a0 == C(1, 0));
  CHECK_THROWS_AS(parse_poly("{not json"), InputError);
  CHECK_THROWS_WITH_AS(parse_poly(R"({"coeffs": [[1, 0], [0, 0], [1, 0]]})"),
                       doctest::Contains("index 1"), InputError);
  CHECK_THROWS_AS(parse_poly(R"({"coeffs": [1, 2, 3]})"), InputError);
  CHECK_THROWS_AS(parse_poly(R"({"coeffs": [[1, 0], [1, 0]]})"), InputError);
  CHECK_THROWS_AS(parse_poly(R"({"coeffs": [["x", 0], [1, 0], [1, 0]]})"), InputError);
  CHECK_THROWS_AS(parse_poly(R"({"nothing": 1})"), InputError);
}
