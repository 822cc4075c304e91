#pragma once

// Finite-field sampling oracle. Reduces j = 0 and j = 1728 models modulo
// small primes and compares the observed Frobenius behaviour with what a
// predicted Galois group forces. "consistent" is evidence, never proof.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "cmdiv/classifier.hpp"

namespace cmdiv {

enum class CubicPattern { split, linear_quadratic, irreducible };

// "1+1+1", "1+2", "3"
std::string_view to_string(CubicPattern pattern);

// y^2 = x^3 + a x + b over F_p, p > 3 prime with p not dividing 4a^3 + 27b^2.
class ReducedCurve {
 public:
  // Throws InvalidInput when p is not a prime > 3 or reduction is bad.
  ReducedCurve(std::int64_t a, std::int64_t b, std::int64_t p);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::int64_t p() const { return p_; }

 private:
  std::int64_t a_, b_, p_;
};

bool has_good_reduction(std::int64_t a, std::int64_t b, std::int64_t p);

struct TorsionProfile {
  std::int64_t p;
  bool full_two_torsion;
  bool full_three_torsion;
  std::int64_t three_torsion_points;  // 1, 3 or 9
  CubicPattern cubic_factor_pattern;
};

TorsionProfile profile(const ReducedCurve& curve);

// Throws InvalidInput for GeneralCM input, p <= 3, composite p, bad reduction.
TorsionProfile reduce_and_profile(const CurveInput& curve, std::int64_t p);

struct OracleVerdict {
  bool consistent;
  std::optional<std::int64_t> witness;  // first refuting prime, if any
  std::size_t primes_tested;
  std::size_t primes_skipped;  // 2, 3 and bad-reduction primes
};

// Tests the hypothesis Q(E[l]) = Q(zeta_l) for l in {2, 3} over all good
// primes p <= p_max. Throws InvalidInput for GeneralCM or another l.
OracleVerdict cyclotomic_consistency_test(const CurveInput& curve, int ell, std::int64_t p_max);

// Tests the 2-division field against the predicted level-2 structure:
// trivial forces complete splitting, Z/2 forces a rational root and
// splitting exactly when the quadratic cofactor's discriminant is a square,
// S3 requires some inert prime. An S3 prediction with no inert prime up to
// p_max is reported as refuted without a witness.
OracleVerdict structure_consistency_test(const CurveInput& curve, const ClassificationResult& predicted,
                                         std::int64_t p_max);

struct SplittingStatistics {
  std::size_t primes = 0;
  std::array<std::size_t, 3> counts{};  // indexed by CubicPattern

  std::size_t count(CubicPattern p) const { return counts[static_cast<std::size_t>(p)]; }
  double frequency(CubicPattern p) const;
};

// Factorization patterns of x^3 + d over good primes 3 < p <= p_max.
SplittingStatistics splitting_statistics(std::int64_t d, std::int64_t p_max);

}  // namespace cmdiv
