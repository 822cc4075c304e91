#pragma once

// Candidate images of the l-adic Galois representation of a CM curve,
// reduced to a finite level l^k, as explicit matrix groups.
//
// Families (level prime in brackets):
//   P42_*   j = 0, good primes p > 3        [p]   delta' = -3/4, phi = 0
//   P43_*   j = 0, the prime 3              [3]   H-groups adjoined with c_eps
//   P45_*   j != 0, 1728, index > 1         [2]   needs delta = disc/4
//   P46_*   j = 1728                        [2]   G-groups adjoined with gamma
//   P48_*   j = 0                           [2]   adjoined with c'_eps

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cmdiv/cartan.hpp"
#include "cmdiv/modmat.hpp"

namespace cmdiv {

enum class ImageLabel {
  P42_FULL,
  P42_CUBES,
  P42_SPLIT,
  P43_H1,
  P43_H2,
  P43_H3,
  P43_H1P,
  P43_H2P,
  P43_H3P,
  P45_H1,
  P45_H2,
  P46_G1,
  P46_G2A,
  P46_G2B,
  P46_G4A,
  P46_G4B,
  P46_G4C,
  P46_G4D,
  P48_INDEX3,
  P48_FULL,
};

std::string_view label_name(ImageLabel label);
std::optional<ImageLabel> parse_label(std::string_view name);

// An integer matrix, reduced to whatever level a group is built at.
struct IntMat2 {
  std::int64_t a11, a12, a21, a22;

  Mat2 at(Modulus n) const { return Mat2(a11, a12, a21, a22, n); }
  friend bool operator==(const IntMat2&, const IntMat2&) = default;
};

struct NamedImage {
  ImageLabel label;
  std::int64_t level;
  // The extra generator adjoined to the P43, P46 and P48 groups: c_eps for
  // P43, an element of Gamma' or Gamma'' for P46, c'_eps for P48.
  std::optional<IntMat2> gamma;
  // P45 only.
  Sign eps = Sign::plus;
  std::int64_t alpha = 3;
  std::int64_t delta = 0;
};

// Throws InvalidInput on a level incompatible with the label or a missing
// gamma, DenominatorNotInvertible if -3/4 cannot be resolved.
FiniteMatrixGroup build_named(const NamedImage& image);

// c_eps for phi = 0, as an integer matrix: [[-eps, 0], [0, eps]].
IntMat2 c_eps_phi0(Sign eps);

struct GammaLift {
  IntMat2 matrix;           // entries mod 8
  std::size_t prime_index;  // which element of gamma_prime it lifts
};

struct GammaSet {
  // c_1 = diag(1,-1), c_-1 = diag(-1,1), c'_1, c'_-1
  std::array<IntMat2, 4> gamma_prime;
  std::vector<GammaLift> gamma_double_prime;
};

// The sixteen mod-8 lifts of the j = 1728 complex-conjugation candidates,
// each checked to reduce to its designated element mod 4.
GammaSet gamma_lifts_mod8();

// {c'_1, c'_-1}, the j = 0 complex-conjugation candidates.
std::array<IntMat2, 2> gamma_prime_j0();

struct LevelVerdict {
  std::int64_t level;
  std::size_t order;
  bool abelian;
  std::optional<AbelianType> structure;
};

std::vector<LevelVerdict> enumerate_verdicts(NamedImage image, std::span<const std::int64_t> levels);

}  // namespace cmdiv
