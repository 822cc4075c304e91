#pragma once

// CM parameters (delta, phi) of an imaginary quadratic order and the Cartan
// subgroup C(n) together with the group N(n) = <C(n), c_1> built from them.

#include <cstdint>

#include "cmdiv/modmat.hpp"

namespace cmdiv {

bool is_fundamental_discriminant(std::int64_t d);

// The order of conductor f in the imaginary quadratic field of fundamental
// discriminant delta_k.
class CmOrder {
 public:
  // Throws InvalidInput for a non-fundamental discriminant or f < 1.
  CmOrder(std::int64_t delta_k, std::int64_t f);

  std::int64_t delta_k() const { return delta_k_; }
  std::int64_t conductor() const { return f_; }
  std::int64_t discriminant() const { return delta_k_ * f_ * f_; }

  friend bool operator==(const CmOrder&, const CmOrder&) = default;

 private:
  std::int64_t delta_k_;
  std::int64_t f_;
};

// delta = delta_num / delta_den. Orders always give delta_den = 1; the 3-adic
// image groups use delta' = -3/4.
struct CartanParams {
  std::int64_t delta_num = 0;
  std::int64_t delta_den = 1;
  std::int64_t phi = 0;

  // delta as a residue mod n; throws DenominatorNotInvertible.
  std::int64_t delta_mod(Modulus n) const;

  friend bool operator==(const CartanParams&, const CartanParams&) = default;
};

enum class Sign : int { plus = 1, minus = -1 };

CartanParams cartan_params(const CmOrder& order);

// [[a + b*phi, b], [delta*b, a]]
Mat2 c_matrix(std::int64_t a, std::int64_t b, const CartanParams& p, Modulus n);

// [[-eps, 0], [phi, eps]]
Mat2 c_eps(Sign eps, const CartanParams& p, Modulus n);

// [[0, eps], [eps, 0]]
Mat2 c_eps_prime(Sign eps, Modulus n);

// All c(a, b) with unit determinant.
FiniteMatrixGroup cartan_subgroup(const CartanParams& p, Modulus n);

// <C(n), c_eps>; the standard group adjoins c_1.
FiniteMatrixGroup normalizer_group(const CartanParams& p, Modulus n, Sign adjoin = Sign::plus);

}  // namespace cmdiv
