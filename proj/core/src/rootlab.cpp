#include "qcert/rootlab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace qcert {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kGoldenAngle = 2.399963229728653;  // pi (3 - sqrt 5)
constexpr double kAngleOffset = 0.4;

struct NewtonStep {
  Complex ratio;    // p / p'
  double backward;  // |p| / sum |a_k| |z|^k
};

// For |z| > 1 the reversed polynomial in y = 1/z is evaluated instead, which
// keeps every intermediate bounded.
NewtonStep newton_step(std::span<const Complex> a, Complex z) {
  const int w = static_cast<int>(a.size()) - 1;
  if (std::abs(z) <= 1.0) {
    const double r = std::abs(z);
    Complex p = a.back();
    Complex dp{0.0, 0.0};
    double s = std::abs(a.back());
    for (int k = w - 1; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + a[static_cast<std::size_t>(k)];
      s = s * r + std::abs(a[static_cast<std::size_t>(k)]);
    }
    if (p == Complex{}) return {Complex{}, 0.0};
    const double be = std::abs(p) / s;
    if (dp == Complex{}) return {Complex{kEps * (1.0 + r), 0.0}, be};
    return {p / dp, be};
  }
  const Complex y = 1.0 / z;
  const double ry = std::abs(y);
  // r(y) = sum_k a_{w-k} y^k, evaluated from its leading coefficient a_0.
  Complex r = a.front();
  Complex dr{0.0, 0.0};
  double s = std::abs(a.front());
  for (int k = 1; k <= w; ++k) {
    dr = dr * y + r;
    r = r * y + a[static_cast<std::size_t>(k)];
    s = s * ry + std::abs(a[static_cast<std::size_t>(k)]);
  }
  if (r == Complex{}) return {Complex{}, 0.0};
  const double be = std::abs(r) / s;
  // p'/p = y (w - y r'/r)
  const Complex denom = double(w) - y * dr / r;
  if (denom == Complex{}) return {Complex{kEps * std::abs(z), 0.0}, be};
  return {z / denom, be};
}

double backward_error(const ComplexPoly& p, Complex z) {
  return newton_step(p.coeffs(), z).backward;
}

std::vector<Complex> initial_guesses(const ComplexPoly& p) {
  const int w = p.degree();
  std::vector<Complex> z;
  z.reserve(static_cast<std::size_t>(w));
  bool usable = true;
  for (int k = 1; k <= w; ++k) {
    const auto i = static_cast<std::size_t>(k);
    const double rho = std::abs(p[i - 1] / p[i]);
    if (!std::isfinite(rho) || rho == 0.0) {
      usable = false;
      break;
    }
    z.push_back(std::polar(rho, kAngleOffset + k * kGoldenAngle));
  }
  if (usable) return z;
  double bound = 0.0;
  for (const auto& a : p.coeffs()) bound = std::max(bound, std::abs(a / p[static_cast<std::size_t>(w)]));
  z.clear();
  for (int k = 0; k < w; ++k) {
    z.push_back(std::polar(1.0 + bound, kAngleOffset + 2.0 * std::numbers::pi * k / w));
  }
  return z;
}

}  // namespace

bool RootReport::any_multiple() const {
  return std::find(multiplicity_flags.begin(), multiplicity_flags.end(), true) !=
         multiplicity_flags.end();
}

RootReport find_roots(const ComplexPoly& p, double tol) {
  const int w = p.degree();
  const auto n = static_cast<std::size_t>(w);
  const auto a = p.coeffs();
  const double settle = (4.0 * w + 1.0) * kEps;

  RootReport rep;
  std::vector<Complex> z = initial_guesses(p);
  std::vector<bool> frozen(n, false);
  int sweep = 0;
  bool settled = false;
  while (sweep < kMaxSweeps && !settled) {
    ++sweep;
    settled = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (frozen[i]) continue;
      const NewtonStep step = newton_step(a, z[i]);
      if (step.backward <= settle) {
        frozen[i] = true;
        continue;
      }
      Complex sum{0.0, 0.0};
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const Complex diff = z[i] - z[j];
        if (diff != Complex{}) sum += 1.0 / diff;
      }
      const Complex correction = step.ratio / (1.0 - step.ratio * sum);
      z[i] -= correction;
      if (std::abs(correction) <= tol * std::abs(z[i])) {
        frozen[i] = true;
      } else {
        settled = false;
      }
    }
  }

  rep.roots = std::move(z);
  rep.sweeps = sweep;
  rep.residuals.reserve(n);
  double worst = 0.0;
  for (const auto& r : rep.roots) {
    rep.residuals.push_back(backward_error(p, r));
    worst = std::max(worst, rep.residuals.back());
  }
  rep.converged = settled && worst < kResidualTol;

  for (const auto& r : rep.roots) rep.moduli_sorted.push_back(std::abs(r));
  std::sort(rep.moduli_sorted.begin(), rep.moduli_sorted.end());
  rep.min_modulus_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < n; ++i) {
    rep.min_modulus_gap =
        std::min(rep.min_modulus_gap, rep.moduli_sorted[i] - rep.moduli_sorted[i - 1]);
  }
  rep.min_pairwise_distance = std::numeric_limits<double>::infinity();
  rep.multiplicity_flags.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dist = std::abs(rep.roots[i] - rep.roots[j]);
      rep.min_pairwise_distance = std::min(rep.min_pairwise_distance, dist);
      if (dist < kClusterRel * (1.0 + std::abs(rep.roots[i])) ||
          dist < kClusterRel * (1.0 + std::abs(rep.roots[j]))) {
        rep.multiplicity_flags[i] = true;
        rep.multiplicity_flags[j] = true;
      }
    }
  }
  rep.all_real = std::all_of(rep.roots.begin(), rep.roots.end(), [](const Complex& r) {
    return std::abs(r.imag()) < kImagTol;
  });

  const AnnulusPartition part = radii(quotients(p));
  for (const auto& r : rep.roots) {
    int idx = 0;
    for (std::size_t k = 1; k <= part.size(); ++k) {
      if (part.circle(k) <= std::abs(r)) ++idx;
    }
    rep.annulus.push_back(idx);
  }
  return rep;
}

int winding_count(const ComplexPoly& p, double radius, int samples) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw InputError("winding_count: radius must be positive and finite");
  }
  const int w = p.degree();
  const auto n = static_cast<std::size_t>(w) + 1;
  // c_k = a_k radius^k / max_j |a_j radius^j|, assembled in log space.
  std::vector<double> log_mag(n);
  const double log_r = std::log(radius);
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    log_mag[k] = std::log(std::abs(p[k])) + double(k) * log_r;
    top = std::max(top, log_mag[k]);
  }
  std::vector<Complex> c(n);
  for (std::size_t k = 0; k < n; ++k) {
    c[k] = p[k] / std::abs(p[k]) * std::exp(log_mag[k] - top);
  }

  int count = std::max(samples, 8 * (w + 1));
  int guard_refinements = 0;
  int step_refinements = 0;
  for (;;) {
    std::vector<Complex> f(static_cast<std::size_t>(count));
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int j = 0; j < count; ++j) {
      const Complex u = std::polar(1.0, 2.0 * std::numbers::pi * j / count);
      Complex acc = c.back();
      for (std::size_t k = n - 1; k-- > 0;) acc = acc * u + c[k];
      f[static_cast<std::size_t>(j)] = acc;
      lo = std::min(lo, std::abs(acc));
      hi = std::max(hi, std::abs(acc));
    }
    if (lo < kContourGuard * hi) {
      if (guard_refinements++ < 3) {
        count *= 4;
        continue;
      }
      throw ContourError(ContourError::Kind::kTooClose,
                         "zero too close to |z| = " + std::to_string(radius) +
                             " (min|p|/max|p| = " + std::to_string(lo / hi) + ")");
    }
    double total = 0.0;
    bool resolved = true;
    for (int j = 0; j < count; ++j) {
      const Complex& from = f[static_cast<std::size_t>(j)];
      const Complex& to = f[static_cast<std::size_t>((j + 1) % count)];
      const double inc = std::arg(to / from);
      if (std::abs(inc) >= 0.5 * std::numbers::pi) {
        resolved = false;
        break;
      }
      total += inc;
    }
    if (!resolved) {
      if (step_refinements++ < 3) {
        count *= 4;
        continue;
      }
      throw ContourError(ContourError::Kind::kUnresolved,
                         "argument steps stay >= pi/2 on |z| = " + std::to_string(radius));
    }
    const double turns = total / (2.0 * std::numbers::pi);
    const double rounded = std::round(turns);
    if (std::abs(turns - rounded) > 1e-6) {
      throw ContourError(ContourError::Kind::kNonInteger,
                         "non-integer winding " + std::to_string(turns));
    }
    return static_cast<int>(rounded);
  }
}

std::string_view to_string(AnnulusVerdict v) {
  switch (v) {
    case AnnulusVerdict::kPass: return "PASS";
    case AnnulusVerdict::kFail: return "FAIL";
    case AnnulusVerdict::kMismatch: return "MISMATCH";
    case AnnulusVerdict::kAbstain: return "ABSTAIN";
  }
  return "UNKNOWN";
}

AnnulusVerification verify_annuli(const ComplexPoly& p) {
  return verify_annuli(p, find_roots(p));
}

AnnulusVerification verify_annuli(const ComplexPoly& p, const RootReport& report) {
  AnnulusVerification out;
  const AnnulusPartition part = radii(quotients(p));
  for (std::size_t k = 1; k <= part.size(); ++k) {
    out.circles.push_back(part.circle(k));
  }
  if (!report.converged) {
    out.verdict = AnnulusVerdict::kAbstain;
    out.detail = "root finder did not converge";
    return out;
  }
  for (std::size_t k = 0; k < out.circles.size(); ++k) {
    const double r = out.circles[k];
    try {
      out.winding_counts.push_back(winding_count(p, r));
    } catch (const ContourError& e) {
      out.verdict = AnnulusVerdict::kAbstain;
      out.detail = "circle " + std::to_string(k + 1) + ": " + e.what();
      return out;
    }
    out.root_counts.push_back(static_cast<int>(
        std::count_if(report.roots.begin(), report.roots.end(),
                      [r](const Complex& z) { return std::abs(z) < r; })));
  }
  for (std::size_t k = 0; k < out.circles.size(); ++k) {
    if (out.winding_counts[k] != out.root_counts[k]) {
      out.verdict = AnnulusVerdict::kMismatch;
      out.detail = "circle " + std::to_string(k + 1) + ": winding " +
                   std::to_string(out.winding_counts[k]) + " vs " +
                   std::to_string(out.root_counts[k]) + " roots";
      return out;
    }
  }
  for (std::size_t k = 0; k < out.circles.size(); ++k) {
    if (out.winding_counts[k] != static_cast<int>(k + 1)) {
      out.verdict = AnnulusVerdict::kFail;
      out.detail = "circle " + std::to_string(k + 1) + " encloses " +
                   std::to_string(out.winding_counts[k]) + " zeros";
      return out;
    }
  }
  out.verdict = AnnulusVerdict::kPass;
  return out;
}

bool realness_check(const ComplexPoly& p, const RootReport& report, double im_tol) {
  const bool real_coeffs = p.is_real();
  for (const Complex& z : report.roots) {
    if (std::abs(z.imag()) < im_tol) continue;
    if (!real_coeffs) return false;
    // Restart at the real part and run Newton on the real line.
    double x = z.real();
    for (int it = 0; it < 100; ++it) {
      const NewtonStep step = newton_step(p.coeffs(), Complex{x, 0.0});
      if (step.backward == 0.0) break;
      const double dx = step.ratio.real();
      if (!std::isfinite(dx)) break;
      x -= dx;
      if (std::abs(dx) <= kEps * std::abs(x)) break;
    }
    const bool settled = backward_error(p, Complex{x, 0.0}) < kResidualTol;
    const bool nearby = std::abs(Complex{x, 0.0} - z) <= 1e-4 * (1.0 + std::abs(z));
    if (!(settled && nearby)) return false;
  }
  return true;
}

nlohmann::json root_report_to_json(const RootReport& r) {
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& z : r.roots) roots.push_back({z.real(), z.imag()});
  nlohmann::json flags = nlohmann::json::array();
  for (bool f : r.multiplicity_flags) flags.push_back(f);
  auto finite_or_null = [](double v) -> nlohmann::json {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
  };
  return {
      {"roots", std::move(roots)},
      {"residuals", r.residuals},
      {"moduli_sorted", r.moduli_sorted},
      {"min_modulus_gap", finite_or_null(r.min_modulus_gap)},
      {"min_pairwise_distance", finite_or_null(r.min_pairwise_distance)},
      {"multiplicity_flags", std::move(flags)},
      {"annulus", r.annulus},
      {"all_real", r.all_real},
      {"converged", r.converged},
      {"sweeps", r.sweeps},
  };
}

nlohmann::json annulus_verification_to_json(const AnnulusVerification& v) {
  return {
      {"verdict", to_string(v.verdict)},
      {"circles", v.circles},
      {"winding_counts", v.winding_counts},
      {"root_counts", v.root_counts},
      {"detail", v.detail},
  };
}

}  // namespace qcert
