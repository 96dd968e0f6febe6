#include "qcert/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "qcert/errors.hpp"

namespace qcert {
namespace {

constexpr double kMinMagnitude = 1e-300;
constexpr double kMaxMagnitude = 1e300;

void check_magnitude(const Complex& a, std::size_t k) {
  const double m = std::abs(a);
  if (!(m >= kMinMagnitude && m <= kMaxMagnitude)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", m);
    throw RangeError("coefficient " + std::to_string(k) + " has modulus " + buf +
                     " outside [1e-300, 1e300]; rescale the quotients or "
                     "lower the degree");
  }
}

}  // namespace

ComplexPoly::ComplexPoly(std::vector<Complex> coeffs, int max_degree)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 3) {
    throw InputError("polynomial degree must be >= 2, got " +
                     std::to_string(static_cast<int>(coeffs_.size()) - 1));
  }
  if (degree() > max_degree) {
    throw InputError("polynomial degree " + std::to_string(degree()) +
                     " exceeds the cap " + std::to_string(max_degree));
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Complex& a = coeffs_[k];
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw InputError("non-finite coefficient at index " + std::to_string(k));
    }
    if (a == Complex(0.0, 0.0)) {
      throw InputError("zero coefficient at index " + std::to_string(k));
    }
  }
}

bool ComplexPoly::is_real() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Complex& a) { return a.imag() == 0.0; });
}

bool ComplexPoly::all_positive() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Complex& a) {
    return a.imag() == 0.0 && a.real() > 0.0;
  });
}

double ComplexPoly::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& a : coeffs_) m = std::max(m, std::abs(a));
  return m;
}

Complex ComplexPoly::operator()(Complex z) const {
  Complex acc = coeffs_.back();
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

Complex ComplexPoly::derivative(Complex z) const {
  const int w = degree();
  Complex acc = coeffs_.back() * double(w);
  for (int k = w - 1; k >= 1; --k) {
    acc = acc * z + coeffs_[static_cast<std::size_t>(k)] * double(k);
  }
  return acc;
}

double ComplexPoly::abs_scale(Complex z) const {
  const double r = std::abs(z);
  double acc = std::abs(coeffs_.back());
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) {
    acc = acc * r + std::abs(*it);
  }
  return acc;
}

bool AnnulusPartition::strictly_increasing() const {
  for (std::size_t k = 1; k < log_radii.size(); ++k) {
    if (!(log_radii[k] > log_radii[k - 1])) return false;
  }
  return true;
}

QuotientSeq quotients(const ComplexPoly& p) {
  QuotientSeq s{p[0], p[1], {}};
  s.q.reserve(static_cast<std::size_t>(p.degree() - 1));
  for (int n = 2; n <= p.degree(); ++n) {
    const auto i = static_cast<std::size_t>(n);
    s.q.push_back((p[i - 1] / p[i - 2]) * (p[i - 1] / p[i]));
  }
  return s;
}

ComplexPoly from_quotients(const QuotientSeq& s, int max_degree) {
  if (s.q.empty()) {
    throw InputError("quotient sequence needs at least q_2");
  }
  if (s.a0 == Complex{} || s.a1 == Complex{}) {
    throw InputError("anchors a0 and a1 must be nonzero");
  }
  std::vector<Complex> a{s.a0, s.a1};
  a.reserve(s.q.size() + 2);
  for (std::size_t i = 0; i < s.q.size(); ++i) {
    const Complex& qn = s.q[i];
    if (qn == Complex{}) {
      throw InputError("zero quotient q_" + std::to_string(i + 2));
    }
    const std::size_t n = i + 2;
    // Ratio form: squaring a_{n-1} first underflows long before a_n does.
    Complex next = (a[n - 1] / a[n - 2]) * (a[n - 1] / qn);
    check_magnitude(next, n);
    a.push_back(next);
  }
  return ComplexPoly(std::move(a), max_degree);
}

ComplexPoly normalize(const ComplexPoly& p) {
  const Complex s = p[0] / p[1];
  std::vector<Complex> b;
  b.reserve(static_cast<std::size_t>(p.degree() + 1));
  Complex power{1.0, 0.0};
  for (int k = 0; k <= p.degree(); ++k) {
    const auto i = static_cast<std::size_t>(k);
    // a_1 s / a_0 is exactly one; skip the arithmetic for the anchors.
    Complex bk = (k == 0 || k == 1) ? Complex{1.0, 0.0} : p[i] * power / p[0];
    check_magnitude(bk, i);
    b.push_back(bk);
    power *= s;
  }
  return ComplexPoly(std::move(b), std::max(kDefaultMaxDegree, p.degree()));
}

AnnulusPartition radii(const QuotientSeq& s) {
  if (s.q.empty()) {
    throw InputError("radii need at least q_2");
  }
  AnnulusPartition part;
  part.zero_scale = std::abs(s.a0 / s.a1);
  const std::size_t count = s.q.size();  // R_1..R_{w-1}
  part.log_radii.reserve(count);
  part.radii.reserve(count);
  double log_prefix = 0.0;  // log|q_2 ... q_k|
  for (std::size_t k = 1; k <= count; ++k) {
    if (k >= 2) log_prefix += std::log(std::abs(s.q[k - 2]));
    const double log_r = log_prefix + 0.5 * std::log(std::abs(s.q[k - 1]));
    part.log_radii.push_back(log_r);
    part.radii.push_back(std::exp(log_r));
  }
  return part;
}

ComplexPoly multiply_linear(const ComplexPoly& p, double d) {
  if (!(d > 0.0) || !std::isfinite(d)) {
    throw InputError("multiply_linear: d must be positive and finite");
  }
  const auto w = static_cast<std::size_t>(p.degree());
  std::vector<Complex> out(w + 2);
  out[0] = p[0];
  for (std::size_t k = 1; k <= w; ++k) out[k] = p[k] + p[k - 1] / d;
  out[w + 1] = p[w] / d;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k] == Complex{}) {
      throw InputError("coefficient " + std::to_string(k) +
                       " cancels in p(z)(1 + z/d); perturb d");
    }
  }
  return ComplexPoly(std::move(out), std::max(kDefaultMaxDegree, p.degree() + 1));
}

}  // namespace qcert
