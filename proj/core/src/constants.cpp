#include "qcert/constants.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qcert/errors.hpp"

namespace qcert {
namespace {

constexpr double kSeriesCutoff = 1e-18;
constexpr double kBracketLow = 1.0 + 1e-9;
constexpr double kBracketHigh = 16.0;

void check_order(SeriesOrder order) {
  if (!order.is_infinite() && order.terms() < 1) {
    throw InputError("series order must be >= 1, got " +
                     std::to_string(order.terms()));
  }
}

void check_domain(double x) {
  if (!(x > 1.0)) {
    throw DomainError("phi is defined for x > 1, got " + std::to_string(x));
  }
}

// Calls visit(k, x^{-k^2/2}) for every term of the series.
template <typename Visit>
void for_each_term(double x, SeriesOrder order, Visit&& visit) {
  const double log_x = std::log(x);
  for (long k = 1;; ++k) {
    if (!order.is_infinite() && k > order.terms()) break;
    const double kk = static_cast<double>(k) * static_cast<double>(k);
    const double term = std::exp(-0.5 * kk * log_x);
    if (order.is_infinite() && term < kSeriesCutoff) break;
    visit(kk, term);
  }
}

// log(2 * sum_{k > n} x^{-k^2/2}) via log-sum-exp; the terms decay
// superexponentially, so a few dozen suffice at any useful precision.
double log_tail(double x, int n) {
  const double log_x = std::log(x);
  const double first = -0.5 * double(n + 1) * double(n + 1) * log_x;
  double acc = 0.0;
  for (int k = n + 1; k < n + 64; ++k) {
    const double e = -0.5 * double(k) * double(k) * log_x - first;
    if (e < -80.0) break;
    acc += std::exp(e);
  }
  return std::log(2.0) + first + std::log(acc);
}

}  // namespace

double phi(double x, SeriesOrder order) {
  check_order(order);
  check_domain(x);
  double sum = 0.0;
  for_each_term(x, order, [&](double, double term) { sum += term; });
  return 1.0 - 2.0 * sum;
}

double phi_derivative(double x, SeriesOrder order) {
  check_order(order);
  check_domain(x);
  double sum = 0.0;
  for_each_term(x, order, [&](double kk, double term) { sum += kk * term; });
  return sum / x;
}

double solve_b(SeriesOrder order, double tol) {
  check_order(order);
  if (!(tol > 0.0)) {
    throw InputError("solve_b: tolerance must be positive");
  }
  // phi < 0 at the lower end, phi(16) >= 1 - 2 * (1/4)/(1 - 1/4) > 0.
  double lo = kBracketLow;
  double hi = kBracketHigh;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (phi(mid, order) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  // Newton polish; phi is increasing and concave there, so a step that stays
  // inside the final bracket can only improve the estimate.
  for (int i = 0; i < 3; ++i) {
    const double step = phi(x, order) / phi_derivative(x, order);
    const double next = x - step;
    if (!(next >= lo && next <= hi)) break;
    x = next;
    if (std::abs(step) <= std::numeric_limits<double>::epsilon() * x) break;
  }
  return x;
}

double cubic_sharp_constant() { return std::sqrt(9.0 + 6.0 * std::sqrt(3.0)); }

ThresholdTable::ThresholdTable(double tol)
    : tol_(tol),
      b_inf_(solve_b(SeriesOrder::infinite(), tol)),
      cubic_(cubic_sharp_constant()) {}

double ThresholdTable::b(int n) const {
  if (n < 1) {
    throw InputError("threshold index must be >= 1, got " + std::to_string(n));
  }
  std::lock_guard lock(mutex_);
  auto it = by_n_.find(n);
  if (it != by_n_.end()) return it->second;
  const double value = solve_b(SeriesOrder::finite(n), tol_);
  by_n_.emplace(n, value);
  return value;
}

double ThresholdTable::b_even_degree(int degree) const {
  if (degree < 2 || degree % 2 != 0) {
    throw InputError("b_even_degree expects an even degree >= 2, got " +
                     std::to_string(degree));
  }
  return b(degree / 2);
}

double ThresholdTable::log_gap_to_infinity(int n) const {
  const double direct = b_inf_ - b(n);
  if (direct > 1e-6) return std::log(direct);
  // phi_n(b_inf) = 2 * tail_n and phi_n(b_{2n}) = 0; the gap is tiny here, so
  // the mean-value slope equals phi_n'(b_inf) to well below 1e-6 relative.
  return log_tail(b_inf_, n) -
         std::log(phi_derivative(b_inf_, SeriesOrder::finite(n)));
}

void ThresholdTable::precompute(int n_max) const {
  for (int n = 1; n <= n_max; ++n) b(n);
}

std::map<int, double> ThresholdTable::snapshot() const {
  std::lock_guard lock(mutex_);
  return by_n_;
}

const ThresholdTable& thresholds() {
  static const ThresholdTable table;
  return table;
}

}  // namespace qcert
