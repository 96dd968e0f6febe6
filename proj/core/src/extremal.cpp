#include "qcert/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qcert/errors.hpp"

namespace qcert {
namespace {

constexpr double kLogMaxCoeff = 690.0;  // ~ log(1e300)

double min_abs_quotient(const ComplexPoly& p, int* argmin = nullptr) {
  const QuotientSeq s = quotients(p);
  double best = std::numeric_limits<double>::infinity();
  for (int k = 2; k <= s.degree(); ++k) {
    const double m = std::abs(s.at(k));
    if (m < best) {
      best = m;
      if (argmin) *argmin = k;
    }
  }
  return best;
}

std::vector<Margin> margins_against(const ComplexPoly& p, double threshold) {
  const QuotientSeq s = quotients(p);
  std::vector<Margin> out;
  for (int k = 2; k <= s.degree(); ++k) {
    out.push_back({k, std::abs(s.at(k)) - threshold});
  }
  return out;
}

}  // namespace

ComplexPoly extremal_even(int n, double c) {
  if (n < 1) throw InputError("extremal_even: n must be >= 1");
  if (!(c > 1.0) || !std::isfinite(c)) {
    throw InputError("extremal_even: c must be > 1");
  }
  if (0.5 * double(n) * double(n) * std::log(c) > kLogMaxCoeff) {
    throw RangeError("extremal_even: c^{n^2/2} overflows for n = " +
                     std::to_string(n));
  }
  // c^{k(2n-k)/2} = sqrt(c)^{k(2n-k)}; integer powers keep c = 4 exact.
  const double root = std::sqrt(c);
  std::vector<Complex> a;
  a.reserve(static_cast<std::size_t>(2 * n + 1));
  for (int k = 0; k <= 2 * n; ++k) {
    const double value = std::pow(root, k * (2 * n - k));
    a.emplace_back(k == n ? -value : value, 0.0);
  }
  return ComplexPoly(std::move(a), std::max(kDefaultMaxDegree, 2 * n));
}

OddWitness extremal_odd(int n, double d, const ThresholdTable& table) {
  if (!(d > 0.0)) throw InputError("extremal_odd: d must be positive");
  const double b2n = table.b(n);
  ComplexPoly q = multiply_linear(extremal_even(n, b2n), d);
  OddWitness w{q, margins_against(q, b2n), margins_against(q, table.b(n + 1))};
  return w;
}

int minimal_entire_n0(double eps, const ThresholdTable& table) {
  if (!(eps > 0.0)) throw InputError("eps must be positive");
  const double target = table.b_infinity() - eps / 3.0;
  for (int n = 1; n <= 64; ++n) {
    if (table.b(n) > target) return n;
  }
  throw NumericalError("no n0 <= 64 with b_{2n0} > b_inf - eps/3; eps too small");
}

EntireTruncation extremal_entire_truncation(int n0, double eps, int levels,
                                            const ThresholdTable& table) {
  if (!(eps > 0.0)) throw InputError("eps must be positive");
  if (levels < 0) throw InputError("truncation level must be >= 0");
  const double b_inf = table.b_infinity();
  if (n0 == 0) {
    n0 = minimal_entire_n0(eps, table);
  } else if (n0 < 0 || !(table.b(n0) > b_inf - eps / 3.0)) {
    throw InputError("n0 = " + std::to_string(n0) +
                     " does not satisfy b_{2n0} > b_inf - eps/3");
  }

  EntireTruncation out{extremal_even(n0, table.b(n0)), n0, {}, {}};
  double bound = b_inf - eps / 3.0;
  out.level_thresholds.push_back(bound);
  double previous_d = 0.0;
  for (int j = 1; j <= levels; ++j) {
    bound -= eps / std::ldexp(1.0, j + 1);
    double d = std::max(std::ldexp(1.0, j) + 1.0, previous_d);
    bool found = false;
    int violated = 0;
    for (int attempt = 0; attempt <= 60; ++attempt, d *= 2.0) {
      ComplexPoly t = multiply_linear(out.poly, d);
      if (min_abs_quotient(t, &violated) > bound) {
        out.poly = std::move(t);
        found = true;
        break;
      }
    }
    if (!found) {
      throw NumericalError("d_" + std::to_string(j) +
                           " search exhausted 60 doublings; q_" +
                           std::to_string(violated) + " stays below " +
                           std::to_string(bound));
    }
    out.d.push_back(d);
    out.level_thresholds.push_back(bound);
    previous_d = d;
  }
  return out;
}

ComplexPoly real_counterexample(int n, double delta, const ThresholdTable& table) {
  const double b2n = table.b(n);
  const double central = std::pow(std::sqrt(b2n), n * n);
  if (!(delta > 0.0) || !(delta < central)) {
    throw InputError("real_counterexample: delta must lie in (0, b_{2n}^{n^2/2}) = (0, " +
                     std::to_string(central) + ")");
  }
  const ComplexPoly p = extremal_even(n, b2n);
  std::vector<Complex> a(p.coeffs().begin(), p.coeffs().end());
  a[static_cast<std::size_t>(n)] += delta;
  return ComplexPoly(std::move(a), std::max(kDefaultMaxDegree, 2 * n));
}

double counterexample_delta(int n, double eps, const ThresholdTable& table) {
  const double b2n = table.b(n);
  if (!(eps > 0.0) || !(eps < 2.0 * b2n)) {
    throw InputError("counterexample_delta: eps must lie in (0, 2 b_{2n})");
  }
  // |q_{n+1}| = b (1 - delta/B)^2 with B = b^{n^2/2}.
  const double central = std::pow(std::sqrt(b2n), n * n);
  return central * (1.0 - std::sqrt(1.0 - eps / (2.0 * b2n)));
}

ComplexPoly cubic_extremal() {
  const double a = cubic_sharp_constant();
  return ComplexPoly({{1.0, 0.0}, {1.0, 0.0}, {1.0 / a, 0.0}, {-1.0 / (a * a * a), 0.0}});
}

std::optional<ExtremalFamily> parse_extremal_family(std::string_view name) {
  if (name == "even") return ExtremalFamily::kEven;
  if (name == "odd") return ExtremalFamily::kOdd;
  if (name == "entire") return ExtremalFamily::kEntire;
  if (name == "real") return ExtremalFamily::kReal;
  if (name == "cubic") return ExtremalFamily::kCubic;
  return std::nullopt;
}

ComplexPoly build_extremal(const ExtremalSpec& spec, const ThresholdTable& table) {
  switch (spec.family) {
    case ExtremalFamily::kEven:
      return extremal_even(spec.n, spec.c.value_or(table.b(std::max(spec.n, 1))));
    case ExtremalFamily::kOdd:
      return extremal_odd(spec.n, spec.d.value_or(kDefaultOddD), table).poly;
    case ExtremalFamily::kEntire:
      return extremal_entire_truncation(spec.n, spec.eps.value_or(0.1),
                                        spec.levels, table)
          .poly;
    case ExtremalFamily::kReal:
      return real_counterexample(
          spec.n, spec.delta.value_or(counterexample_delta(std::max(spec.n, 1), 0.01, table)),
          table);
    case ExtremalFamily::kCubic:
      return cubic_extremal();
  }
  throw InputError("unknown extremal family");
}

}  // namespace qcert
