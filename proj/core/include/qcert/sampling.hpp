#pragma once

#include <cstdint>
#include <random>

#include "qcert/polynomial.hpp"

namespace qcert {

enum class CoefficientField { kComplex, kReal, kPositive };

/// Deterministic generator of quotient sequences.
///
/// Uses std::mt19937_64, whose output sequence is fixed by the standard, and
/// maps 53-bit draws to [0, 1) by hand so results do not depend on the
/// standard library's distribution implementations.
class QuotientSampler {
 public:
  explicit QuotientSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform phase in [0, 2 pi) for kComplex, a random sign for kReal,
  /// +1 for kPositive.
  Complex unit(CoefficientField field);

  /// Degree-`degree` sequence with |q_k| uniform in [modulus_lo, modulus_hi)
  /// and anchors of modulus in [0.5, 2).
  QuotientSeq sample(int degree, double modulus_lo, double modulus_hi,
                     CoefficientField field = CoefficientField::kComplex);

 private:
  std::mt19937_64 engine_;
};

/// Per-trial seed so trials can be generated independently of order.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

}  // namespace qcert
