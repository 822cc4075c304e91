#pragma once

// Small integer helpers shared by the group engine, the classifier and the
// finite-field oracle. Everything here is exact 64-bit (or 128-bit internally)
// arithmetic.

#include <cstdint>
#include <optional>
#include <vector>

namespace cmdiv {

// Least non-negative residue of x modulo n (n >= 1).
constexpr std::int64_t mod_reduce(std::int64_t x, std::int64_t n) {
  const std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b);

// Inverse of a modulo n, if gcd(a, n) = 1.
std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t n);

// num/den as a residue mod n; throws DenominatorNotInvertible when
// gcd(den, n) != 1.
std::int64_t resolve_rational(std::int64_t num, std::int64_t den, std::int64_t n);

std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t n);

bool is_prime(std::int64_t n);

// All primes p with lo <= p <= hi, ascending.
std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi);

bool is_squarefree(std::int64_t m);

// n is a prime power p^k with k >= 1; returns p.
std::optional<std::int64_t> prime_power_base(std::int64_t n);

// Integer floor of the square root of a non-negative value.
std::int64_t isqrt(std::int64_t m);

// Integer cube root rounded towards zero.
std::int64_t icbrt(std::int64_t m);

}  // namespace cmdiv
