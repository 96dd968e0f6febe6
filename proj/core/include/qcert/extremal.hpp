#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qcert/certifier.hpp"
#include "qcert/constants.hpp"
#include "qcert/polynomial.hpp"

namespace qcert {

/// P_{2n,c}(z) = sum_k c^{k(2n-k)/2} z^k - 2 c^{n^2/2} z^n.
///
/// Self-reciprocal, every |q_k| = c; for c = b_{2n} it has a double zero at
/// z = 1. Requires n >= 1 and c > 1; throws RangeError when c^{n^2/2}
/// leaves double range.
ComplexPoly extremal_even(int n, double c);

struct OddWitness {
  ComplexPoly poly;
  std::vector<Margin> margins_vs_b2n;   // |q_k| - b_{2n},   k = 2..2n+1
  std::vector<Margin> margins_vs_b2n2;  // |q_k| - b_{2n+2}, k = 2..2n+1
};

inline constexpr double kDefaultOddD = 1e4;

/// P_{2n,b_{2n}}(z) * (1 + z/d): degree 2n+1, keeps the double zero at 1,
/// q_k -> q_k(P) for k <= 2n and |q_{2n+1}| -> inf as d grows.
OddWitness extremal_odd(int n, double d = kDefaultOddD,
                        const ThresholdTable& table = thresholds());

struct EntireTruncation {
  ComplexPoly poly;                      // T_J
  int n0 = 0;
  std::vector<double> d;                 // d_1..d_J
  std::vector<double> level_thresholds;  // bound met by |q_k(T_j)|, j = 0..J
};

/// Smallest n0 with b_{2n0} > b_inf - eps/3.
int minimal_entire_n0(double eps, const ThresholdTable& table = thresholds());

/// T_J = P_{2n0,b_{2n0}} * prod_{j=1..J} (1 + z/d_j). n0 = 0 picks the minimal
/// admissible n0. Each d_j is found by doubling from max(2^j + 1, d_{j-1})
/// until every |q_k(T_j)| > b_inf - eps/3 - sum_{l<=j} eps/2^{l+1}; more than
/// 60 doublings raises NumericalError naming the violated index.
EntireTruncation extremal_entire_truncation(int n0, double eps, int levels,
                                            const ThresholdTable& table = thresholds());

/// P_{2n,b_{2n}}(x) + delta x^n: positive on [0, inf) yet not real-rooted.
/// Requires 0 < delta < b_{2n}^{n^2/2} (the n-th coefficient stays negative).
ComplexPoly real_counterexample(int n, double delta,
                                const ThresholdTable& table = thresholds());

/// delta for which |q_{n+1}| of the counterexample equals b_{2n} - eps/2,
/// so every quotient modulus exceeds b_{2n} - eps.
double counterexample_delta(int n, double eps,
                            const ThresholdTable& table = thresholds());

/// Q_3 = 1 + z + z^2/a - z^3/a^3 with a = sqrt(9 + 6 sqrt 3): q_2 = a,
/// q_3 = -a, and Q_3 has a double zero.
ComplexPoly cubic_extremal();

enum class ExtremalFamily { kEven, kOdd, kEntire, kReal, kCubic };

std::optional<ExtremalFamily> parse_extremal_family(std::string_view name);

/// Parameters for one witness; only the fields of the chosen family are read.
struct ExtremalSpec {
  ExtremalFamily family = ExtremalFamily::kEven;
  int n = 1;
  std::optional<double> c;      // kEven; defaults to b_{2n}
  std::optional<double> d;      // kOdd; defaults to 1e4
  std::optional<double> delta;  // kReal; defaults to counterexample_delta(n, 0.01)
  std::optional<double> eps;    // kEntire; defaults to 0.1
  int levels = 0;               // kEntire (n is used as n0; 0 = minimal)
};

ComplexPoly build_extremal(const ExtremalSpec& spec,
                           const ThresholdTable& table = thresholds());

}  // namespace qcert
