#include "cmdiv/ntheory.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "cmdiv/errors.hpp"

namespace cmdiv {

namespace {
__extension__ using i128 = __int128;
}  // namespace

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t old_r = mod_reduce(a, n), r = n;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) return std::nullopt;
  return mod_reduce(old_s, n);
}

std::int64_t resolve_rational(std::int64_t num, std::int64_t den, std::int64_t n) {
  const auto inv = mod_inverse(den, n);
  if (!inv) {
    throw DenominatorNotInvertible("denominator " + std::to_string(den) +
                                   " is not invertible modulo " + std::to_string(n));
  }
  const i128 v = static_cast<i128>(mod_reduce(num, n)) * *inv;
  return static_cast<std::int64_t>(v % n);
}

std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t n) {
  i128 result = 1 % n;
  i128 b = mod_reduce(base, n);
  while (exp > 0) {
    if (exp & 1U) result = result * b % n;
    b = b * b % n;
    exp >>= 1U;
  }
  return static_cast<std::int64_t>(result);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> primes_in_range(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  if (hi < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(hi) + 1, false);
  for (std::int64_t p = 2; p * p <= hi; ++p) {
    if (composite[p]) continue;
    for (std::int64_t m = p * p; m <= hi; m += p) composite[m] = true;
  }
  for (std::int64_t p = std::max<std::int64_t>(lo, 2); p <= hi; ++p) {
    if (!composite[p]) out.push_back(p);
  }
  return out;
}

bool is_squarefree(std::int64_t m) {
  if (m == 0) return false;
  std::uint64_t v = m < 0 ? static_cast<std::uint64_t>(-(m + 1)) + 1 : static_cast<std::uint64_t>(m);
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      v /= p;
      if (v % p == 0) return false;
    }
  }
  return true;
}

std::optional<std::int64_t> prime_power_base(std::int64_t n) {
  if (n < 2) return std::nullopt;
  std::int64_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  std::int64_t m = n;
  while (m % p == 0) m /= p;
  if (m != 1) return std::nullopt;
  return p;
}

std::int64_t isqrt(std::int64_t m) {
  if (m < 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(m)));
  while (r > 0 && static_cast<i128>(r) * r > m) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= m) ++r;
  return r;
}

std::int64_t icbrt(std::int64_t m) {
  const bool neg = m < 0;
  const i128 v = neg ? -static_cast<i128>(m) : static_cast<i128>(m);
  auto r = static_cast<std::int64_t>(std::cbrt(static_cast<long double>(v)));
  while (r > 0 && static_cast<i128>(r) * r * r > v) --r;
  while (static_cast<i128>(r + 1) * (r + 1) * (r + 1) <= v) ++r;
  return neg ? -r : r;
}

}  // namespace cmdiv
