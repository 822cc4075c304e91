#include <gtest/gtest.h>

#include <iostream>

#include "cmdiv/cartan.hpp"
#include "cmdiv/errors.hpp"
#include "cmdiv/ntheory.hpp"

using namespace cmdiv;

namespace {

// |(Z/p^k)[w]/(w^2 - phi w - delta)|^x from the splitting type at p.
std::int64_t unit_count_oracle(std::int64_t n, std::int64_t delta, std::int64_t phi) {
  std::int64_t total = 1;
  std::int64_t rest = n;
  for (std::int64_t p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    std::int64_t pk = 1;
    while (rest % p == 0) {
      rest /= p;
      pk *= p;
    }
    int roots = 0;
    for (std::int64_t x = 0; x < p; ++x) roots += mod_reduce(x * x - phi * x - delta, p) == 0;
    // A double root counts once; p = 2 with phi even is the ramified case.
    std::int64_t local = 0;
    if (roots == 2) local = (p - 1) * (p - 1);
    else if (roots == 1) local = p * (p - 1);
    else local = p * p - 1;
    total *= local * (pk / p) * (pk / p);
  }
  return total;
}

Mat2 brute_inverse(const Mat2& m) {
  const Modulus n = m.modulus();
  for (std::int64_t a = 0; a < n.value(); ++a)
    for (std::int64_t b = 0; b < n.value(); ++b)
      for (std::int64_t c = 0; c < n.value(); ++c)
        for (std::int64_t d = 0; d < n.value(); ++d) {
          const Mat2 x(a, b, c, d, n);
          if (m * x == Mat2::identity(n)) return x;
        }
  throw std::logic_error("no inverse");
}

}  // namespace

TEST(Cartan, FundamentalDiscriminants) {
  for (std::int64_t d : {-3, -4, -7, -8, -11, -15, -19, -20, -24, -43, -163}) {
    EXPECT_TRUE(is_fundamental_discriminant(d)) << d;
  }
  for (std::int64_t d : {-1, -2, -5, -12, -16, -27, -28, 0, 5, -9}) {
    EXPECT_FALSE(is_fundamental_discriminant(d)) << d;
  }
}

TEST(Cartan, OrderValidation) {
  EXPECT_THROW(CmOrder(-12, 1), InvalidInput);
  EXPECT_THROW(CmOrder(-7, 0), InvalidInput);
  EXPECT_EQ(CmOrder(-4, 4).discriminant(), -64);
}

TEST(Cartan, ParamsFromOrders) {
  EXPECT_EQ(cartan_params(CmOrder(-7, 1)), (CartanParams{-2, 1, 1}));
  EXPECT_EQ(cartan_params(CmOrder(-4, 4)), (CartanParams{-16, 1, 0}));
  EXPECT_EQ(cartan_params(CmOrder(-8, 1)), (CartanParams{-2, 1, 0}));
  EXPECT_EQ(cartan_params(CmOrder(-15, 1)), (CartanParams{-4, 1, 1}));
  EXPECT_EQ(cartan_params(CmOrder(-3, 1)), (CartanParams{-1, 1, 1}));
  EXPECT_EQ(cartan_params(CmOrder(-3, 3)), (CartanParams{-9, 1, 3}));
}

TEST(Cartan, ParamsRecoverDiscriminant) {
  // phi^2 + 4 delta is the discriminant of the order.
  for (std::int64_t dk : {-3, -4, -7, -8, -11, -15, -20, -23, -24}) {
    for (std::int64_t f = 1; f <= 6; ++f) {
      const CmOrder o(dk, f);
      const CartanParams p = cartan_params(o);
      EXPECT_EQ(p.phi * p.phi + 4 * p.delta_num, o.discriminant()) << dk << " " << f;
    }
  }
}

TEST(Cartan, CMatrixWithRationalDelta) {
  const CartanParams p{-3, 4, 0};
  const Modulus n(9);
  const Mat2 c = c_matrix(1, 6, p, n);
  // delta' = -3 * 4^-1 = -3 * 7 = 6 mod 9, so delta' * 6 = 36 = 0.
  EXPECT_EQ(c, Mat2(1, 6, 0, 1, n));
  EXPECT_EQ(c * brute_inverse(c), Mat2::identity(n));
  EXPECT_EQ(p.delta_mod(n), 6);
  EXPECT_THROW(c_matrix(1, 1, p, Modulus(8)), DenominatorNotInvertible);
}

TEST(Cartan, ConjugationMatrices) {
  const Modulus n(5);
  const CartanParams p{2, 1, 3};
  EXPECT_EQ(c_eps(Sign::plus, p, n), Mat2(-1, 0, 3, 1, n));
  EXPECT_EQ(c_eps(Sign::minus, p, n), Mat2(1, 0, 3, -1, n));
  EXPECT_EQ(c_eps_prime(Sign::minus, n), Mat2(0, -1, -1, 0, n));
  // c_1 is an involution for every phi.
  for (std::int64_t phi = 0; phi < 5; ++phi) {
    const Mat2 c1 = c_eps(Sign::plus, CartanParams{0, 1, phi}, n);
    EXPECT_EQ(c1 * c1, Mat2::identity(n));
  }
}

TEST(Cartan, SubgroupOrderMatchesUnitCount) {
  for (std::int64_t n = 2; n <= 20; ++n) {
    for (std::int64_t delta = 0; delta < n; ++delta) {
      for (std::int64_t phi = 0; phi < n; ++phi) {
        const auto c = cartan_subgroup(CartanParams{delta, 1, phi}, Modulus(n));
        ASSERT_EQ(static_cast<std::int64_t>(c.order()), unit_count_oracle(n, delta, phi))
            << "n=" << n << " delta=" << delta << " phi=" << phi;
      }
    }
  }
}

TEST(Cartan, NormalizerContainsCartanWithIndexTwo) {
  for (std::int64_t n = 3; n <= 12; ++n) {
    for (std::int64_t delta = 0; delta < n; ++delta) {
      for (std::int64_t phi = 0; phi < n; ++phi) {
        const CartanParams p{delta, 1, phi};
        const auto c = cartan_subgroup(p, Modulus(n));
        const auto g = normalizer_group(p, Modulus(n));
        EXPECT_EQ(g.order(), 2 * c.order()) << "n=" << n << " delta=" << delta << " phi=" << phi;
      }
    }
  }
}

TEST(Cartan, AdjoiningMinusSignGroupEquality) {
  // Informational: how often <C, c_-1> coincides with <C, c_1>. Equality is
  // observed exactly when 2 phi = 0 mod n.
  std::size_t equal = 0, total = 0;
  for (std::int64_t n = 2; n <= 10; ++n) {
    for (std::int64_t delta = 0; delta < n; ++delta) {
      for (std::int64_t phi = 0; phi < n; ++phi) {
        const CartanParams p{delta, 1, phi};
        const bool same = normalizer_group(p, Modulus(n), Sign::plus) == normalizer_group(p, Modulus(n), Sign::minus);
        equal += same;
        ++total;
        EXPECT_EQ(same, (2 * phi) % n == 0) << "n=" << n << " delta=" << delta << " phi=" << phi;
      }
    }
  }
  std::cout << "<C,c_1> == <C,c_-1> in " << equal << " of " << total << " cases with n <= 10\n";
}
