#include "cmdiv/oracle.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "cmdiv/errors.hpp"
#include "cmdiv/ntheory.hpp"

namespace cmdiv {

namespace {

std::int64_t eval_cubic(std::int64_t a, std::int64_t b, std::int64_t x, std::int64_t p) {
  return ((x * x % p) * x + a * x + b) % p;
}

// Euler's criterion; zero counts as a non-residue here.
bool is_nonzero_square(std::int64_t v, std::int64_t p) {
  v = mod_reduce(v, p);
  return v != 0 && pow_mod(v, static_cast<std::uint64_t>((p - 1) / 2), p) == 1;
}

CubicPattern pattern_from_roots(int roots) {
  switch (roots) {
    case 3:
      return CubicPattern::split;
    case 1:
      return CubicPattern::linear_quadratic;
    case 0:
      return CubicPattern::irreducible;
  }
  throw std::logic_error("separable cubic with " + std::to_string(roots) + " roots");
}

int count_cubic_roots(std::int64_t a, std::int64_t b, std::int64_t p) {
  int roots = 0;
  for (std::int64_t x = 0; x < p; ++x) {
    if (eval_cubic(a, b, x, p) == 0) ++roots;
  }
  return roots;
}

std::pair<std::int64_t, std::int64_t> model_of(const CurveInput& curve) {
  const auto w = curve.weierstrass();
  if (!w) throw InvalidInput("the oracle only handles j = 0 and j = 1728 models");
  return *w;
}

// Runs `refutes(p)` over good primes up to p_max, stopping at the first hit.
template <typename Pred>
OracleVerdict sweep_primes(std::int64_t a, std::int64_t b, std::int64_t p_max, Pred refutes) {
  OracleVerdict v{true, std::nullopt, 0, 0};
  for (std::int64_t p : primes_in_range(2, p_max)) {
    if (p <= 3 || !has_good_reduction(a, b, p)) {
      ++v.primes_skipped;
      continue;
    }
    ++v.primes_tested;
    if (refutes(ReducedCurve(a, b, p))) {
      v.consistent = false;
      v.witness = p;
      return v;
    }
  }
  return v;
}

}  // namespace

std::string_view to_string(CubicPattern pattern) {
  switch (pattern) {
    case CubicPattern::split:
      return "1+1+1";
    case CubicPattern::linear_quadratic:
      return "1+2";
    case CubicPattern::irreducible:
      break;
  }
  return "3";
}

bool has_good_reduction(std::int64_t a, std::int64_t b, std::int64_t p) {
  const std::int64_t ar = mod_reduce(a, p);
  const std::int64_t br = mod_reduce(b, p);
  return (4 * (ar * ar % p) % p * ar + 27 * (br * br % p)) % p != 0;
}

ReducedCurve::ReducedCurve(std::int64_t a, std::int64_t b, std::int64_t p) : p_(p) {
  if (p <= 3 || !is_prime(p)) throw InvalidInput("reduction needs a prime p > 3, got " + std::to_string(p));
  if (!has_good_reduction(a, b, p)) throw InvalidInput("bad reduction at p = " + std::to_string(p));
  a_ = mod_reduce(a, p);
  b_ = mod_reduce(b, p);
}

TorsionProfile profile(const ReducedCurve& curve) {
  const std::int64_t p = curve.p();
  const std::int64_t a = curve.a();
  const std::int64_t b = curve.b();
  const int roots = count_cubic_roots(a, b, p);

  // psi_3 = 3x^4 + 6a x^2 + 12b x - a^2; each root x0 with f(x0) a nonzero
  // square gives the two points (x0, +-y0).
  std::int64_t points = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t x2 = x * x % p;
    const std::int64_t psi = mod_reduce(3 * (x2 * x2 % p) + 6 * a % p * x2 + 12 * b % p * x - a * a % p, p);
    if (psi == 0 && is_nonzero_square(eval_cubic(a, b, x, p), p)) points += 2;
  }
  return TorsionProfile{p, roots == 3, points == 9, points, pattern_from_roots(roots)};
}

TorsionProfile reduce_and_profile(const CurveInput& curve, std::int64_t p) {
  const auto [a, b] = model_of(curve);
  return profile(ReducedCurve(a, b, p));
}

OracleVerdict cyclotomic_consistency_test(const CurveInput& curve, int ell, std::int64_t p_max) {
  const auto [a, b] = model_of(curve);
  if (ell == 2) {
    return sweep_primes(a, b, p_max, [](const ReducedCurve& c) { return !profile(c).full_two_torsion; });
  }
  if (ell == 3) {
    return sweep_primes(a, b, p_max, [](const ReducedCurve& c) {
      return profile(c).full_three_torsion != (c.p() % 3 == 1);
    });
  }
  throw InvalidInput("cyclotomic test supports l = 2 or 3, got " + std::to_string(ell));
}

OracleVerdict structure_consistency_test(const CurveInput& curve, const ClassificationResult& predicted,
                                         std::int64_t p_max) {
  const auto [a, b] = model_of(curve);
  if (predicted.n != 2) throw InvalidInput("structure test needs a level-2 prediction");

  if (!predicted.abelian) {
    // The S3 side: look for an inert prime. Nothing else is pinned down.
    OracleVerdict v = sweep_primes(a, b, p_max, [](const ReducedCurve& c) {
      return profile(c).cubic_factor_pattern == CubicPattern::irreducible;
    });
    return OracleVerdict{!v.consistent, std::nullopt, v.primes_tested, v.primes_skipped};
  }

  const auto& type = std::get<AbelianType>(predicted.structure);
  if (type.invariant_factors.empty()) {
    return sweep_primes(a, b, p_max, [](const ReducedCurve& c) { return !profile(c).full_two_torsion; });
  }

  // Z/2: a rational root r must exist; the cofactor x^2 + r x + (r^2 + a)
  // has discriminant -3r^2 - 4a.
  std::optional<std::int64_t> r;
  if (b == 0) r = 0;
  else if (a == 0 && is_perfect_cube(b)) r = -icbrt(b);
  if (!r) return OracleVerdict{false, std::nullopt, 0, 0};
  const std::int64_t root = *r;
  return sweep_primes(a, b, p_max, [root](const ReducedCurve& c) {
    const std::int64_t p = c.p();
    const std::int64_t rr = mod_reduce(root, p);
    const bool expect_split = is_nonzero_square(-3 * (rr * rr % p) - 4 * c.a(), p);
    const CubicPattern got = profile(c).cubic_factor_pattern;
    return got == CubicPattern::irreducible || (got == CubicPattern::split) != expect_split;
  });
}

double SplittingStatistics::frequency(CubicPattern p) const {
  return primes == 0 ? 0.0 : static_cast<double>(count(p)) / static_cast<double>(primes);
}

SplittingStatistics splitting_statistics(std::int64_t d, std::int64_t p_max) {
  if (d == 0) throw InvalidInput("splitting_statistics needs d != 0");
  SplittingStatistics s;
  for (std::int64_t p : primes_in_range(5, p_max)) {
    if (!has_good_reduction(0, d, p)) continue;
    ++s.primes;
    ++s.counts[static_cast<std::size_t>(pattern_from_roots(count_cubic_roots(0, mod_reduce(d, p), p)))];
  }
  return s;
}

}  // namespace cmdiv
