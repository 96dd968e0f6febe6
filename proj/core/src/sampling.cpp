#include "qcert/sampling.hpp"

#include <numbers>

#include "qcert/errors.hpp"

namespace qcert {

double QuotientSampler::uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Complex QuotientSampler::unit(CoefficientField field) {
  switch (field) {
    case CoefficientField::kComplex:
      return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi));
    case CoefficientField::kReal:
      return (engine_() >> 63) ? Complex{-1.0, 0.0} : Complex{1.0, 0.0};
    case CoefficientField::kPositive:
      break;
  }
  return {1.0, 0.0};
}

QuotientSeq QuotientSampler::sample(int degree, double modulus_lo,
                                    double modulus_hi, CoefficientField field) {
  if (degree < 2) throw InputError("sample: degree must be >= 2");
  if (!(modulus_lo > 0.0) || !(modulus_hi >= modulus_lo)) {
    throw InputError("sample: need 0 < modulus_lo <= modulus_hi");
  }
  QuotientSeq s;
  s.a0 = uniform(0.5, 2.0) * unit(field);
  s.a1 = uniform(0.5, 2.0) * unit(field);
  for (int k = 2; k <= degree; ++k) {
    s.q.push_back(uniform(modulus_lo, modulus_hi) * unit(field));
  }
  return s;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace qcert
