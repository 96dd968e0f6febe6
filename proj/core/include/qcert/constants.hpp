#pragma once

#include <map>
#include <mutex>
#include <optional>

namespace qcert {

// Number of terms in the threshold series 1 - 2 * sum_k x^{-k^2/2}.
// A finite order n defines b_{2n}; the unbounded order defines b_infinity.
class SeriesOrder {
 public:
  static constexpr SeriesOrder finite(int n) { return SeriesOrder(n); }
  static constexpr SeriesOrder infinite() { return SeriesOrder(-1); }

  constexpr bool is_infinite() const { return n_ < 0; }
  // Precondition: !is_infinite().
  constexpr int terms() const { return n_; }

  friend constexpr bool operator==(SeriesOrder, SeriesOrder) = default;

 private:
  explicit constexpr SeriesOrder(int n) : n_(n) {}
  int n_;
};

inline constexpr double kDefaultThresholdTol = 1e-12;

/// phi_n(x) = 1 - 2 * sum_{k=1..n} x^{-k^2/2}; the infinite order sums until
/// the next term drops below 1e-18. Throws DomainError for x <= 1 and
/// InputError for a finite order n < 1.
double phi(double x, SeriesOrder order);

/// d/dx phi_n(x) = sum_k k^2 x^{-k^2/2 - 1}.
double phi_derivative(double x, SeriesOrder order);

/// Unique root of phi(., order) in (1, inf), bracketed on [1 + 1e-9, 16],
/// bisected to width tol and Newton-polished. Throws InputError if tol <= 0.
double solve_b(SeriesOrder order, double tol = kDefaultThresholdTol);

/// sqrt(9 + 6 sqrt(3)), the sharp constant for cubics.
double cubic_sharp_constant();

/// Memoized thresholds b_{2n}, b_infinity and the cubic constant.
///
/// Besides the value of each b_{2n}, the table keeps log(b_inf - b_{2n}).
/// For n >= 7 the difference is below one ulp of b_inf, so the doubles
/// saturate at b_inf; the log-gap, computed from the tail
/// 2 * sum_{k>n} b_inf^{-k^2/2}, keeps the strict ordering observable.
///
/// Thread-safe: lookups and lazy fills are serialized by an internal mutex.
class ThresholdTable {
 public:
  explicit ThresholdTable(double tol = kDefaultThresholdTol);

  ThresholdTable(const ThresholdTable&) = delete;
  ThresholdTable& operator=(const ThresholdTable&) = delete;

  double tolerance() const { return tol_; }

  /// b_{2n} for n >= 1.
  double b(int n) const;
  /// Threshold for a polynomial of the given even degree (= b(degree / 2)).
  double b_even_degree(int degree) const;
  double b_infinity() const { return b_inf_; }
  double cubic_constant() const { return cubic_; }

  /// log(b_inf - b_{2n}) without cancellation. Always finite.
  double log_gap_to_infinity(int n) const;

  /// Solves every n in [1, n_max] eagerly, e.g. before sharing across threads.
  void precompute(int n_max) const;

  /// Snapshot of the memoized finite thresholds, keyed by n.
  std::map<int, double> snapshot() const;

 private:
  double tol_;
  double b_inf_;
  double cubic_;
  mutable std::mutex mutex_;
  mutable std::map<int, double> by_n_;
};

/// Process-wide table at the default tolerance.
const ThresholdTable& thresholds();

}  // namespace qcert
