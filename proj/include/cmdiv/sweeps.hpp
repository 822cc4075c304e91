#pragma once

// Exhaustive sweeps over levels n and parameters (delta, phi) in (Z/n)^2.
// Every sweep has a serial reference kernel and an OpenMP kernel; both run
// every case and report the lowest-indexed failure, so their outcomes are
// identical.

#include <cstdint>
#include <optional>
#include <string>

namespace cmdiv {

enum class Execution { serial, parallel };

struct SweepOutcome {
  std::size_t cases = 0;
  std::optional<std::string> first_failure;

  bool passed() const { return !first_failure.has_value(); }
  friend bool operator==(const SweepOutcome&, const SweepOutcome&) = default;
};

// c_1 (and c_-1 when phi = 0) commuting with c(a, b) forces b*phi = 0 and
// 2b = 0 mod n. Levels 2..n_max.
SweepOutcome sweep_c1_commutation(std::int64_t n_max, Execution ex);

// For n > 2 and b a unit, <c_1, c(a, b)> is non-abelian. Levels 3..n_max.
SweepOutcome sweep_unit_b_nonabelian(std::int64_t n_max, Execution ex);

// phi = 0: an element of {diag(1,-1), diag(-1,1), [[0,1],[1,0]], [[0,-1],[-1,0]]}
// commuting with c(a, b) forces 2b = 0 or b(delta - 1) = 0 mod n.
SweepOutcome sweep_gamma_prime_commutation(std::int64_t n_max, Execution ex);

// phi = 1: c'_eps commuting with c(a, b) forces b = 0 mod n.
SweepOutcome sweep_j0_gamma_commutation(std::int64_t n_max, Execution ex);

// C(n) is abelian for every (delta, phi).
SweepOutcome sweep_cartan_abelian(std::int64_t n_max, Execution ex);

// N(n) is abelian exactly when n = 2 and (phi even or (delta, phi) = (0, 1)
// mod 2).
SweepOutcome sweep_normalizer_abelian(std::int64_t n_max, Execution ex);

// <C(n), c_1> and <C(n), c_-1> are both abelian or both not. The groups
// themselves differ whenever 2 phi != 0 mod n.
SweepOutcome sweep_adjoin_sign(std::int64_t n_max, Execution ex);

// Reduction N(n) -> N(d) is onto for every divisor 1 < d < n.
SweepOutcome sweep_projection_surjective(std::int64_t n_max, Execution ex);

// Classifier against the finite-field oracle for every nonzero d and A in
// [-coef_max, coef_max] at levels 2 and 3: the cyclotomic test passes exactly
// for predicted-cyclotomic curves, and the level-2 structure test never
// refutes the classifier.
SweepOutcome sweep_oracle_agreement(std::int64_t coef_max, std::int64_t p_max, Execution ex);

}  // namespace cmdiv
