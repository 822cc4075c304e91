#include "cmdiv/cartan.hpp"

#include <string>
#include <vector>

#include "cmdiv/errors.hpp"
#include "cmdiv/ntheory.hpp"

namespace cmdiv {

bool is_fundamental_discriminant(std::int64_t d) {
  if (d >= 0) return false;
  if (mod_reduce(d, 4) == 1) return is_squarefree(d);
  if (d % 4 != 0) return false;
  const std::int64_t m = d / 4;
  const std::int64_t r = mod_reduce(m, 4);
  return (r == 2 || r == 3) && is_squarefree(m);
}

CmOrder::CmOrder(std::int64_t delta_k, std::int64_t f) : delta_k_(delta_k), f_(f) {
  if (!is_fundamental_discriminant(delta_k)) {
    throw InvalidInput(std::to_string(delta_k) + " is not a negative fundamental discriminant");
  }
  if (f < 1) throw InvalidInput("conductor must be >= 1, got " + std::to_string(f));
  if (f > (std::int64_t{1} << 15) || delta_k < -(std::int64_t{1} << 30)) {
    throw InvalidInput("discriminant or conductor out of supported range");
  }
}

std::int64_t CartanParams::delta_mod(Modulus n) const {
  return resolve_rational(delta_num, delta_den, n.value());
}

CartanParams cartan_params(const CmOrder& order) {
  const std::int64_t disc = order.discriminant();
  const std::int64_t f = order.conductor();
  if (mod_reduce(disc, 4) == 0) return CartanParams{disc / 4, 1, 0};
  // disc = 1 mod 4, hence delta_k = 1 mod 4 and f odd.
  return CartanParams{(order.delta_k() - 1) / 4 * f * f, 1, f};
}

Mat2 c_matrix(std::int64_t a, std::int64_t b, const CartanParams& p, Modulus n) {
  const std::int64_t delta = p.delta_mod(n);
  const std::int64_t bn = n.reduce(b);
  const std::int64_t an = n.reduce(a);
  return Mat2(an + bn * n.reduce(p.phi), bn, delta * bn, an, n);
}

Mat2 c_eps(Sign eps, const CartanParams& p, Modulus n) {
  const std::int64_t e = static_cast<std::int64_t>(eps);
  return Mat2(-e, 0, n.reduce(p.phi), e, n);
}

Mat2 c_eps_prime(Sign eps, Modulus n) {
  const std::int64_t e = static_cast<std::int64_t>(eps);
  return Mat2(0, e, e, 0, n);
}

FiniteMatrixGroup cartan_subgroup(const CartanParams& p, Modulus n) {
  const std::int64_t nv = n.value();
  const std::int64_t delta = p.delta_mod(n);
  const std::int64_t phi = n.reduce(p.phi);
  std::vector<Mat2> elems;
  for (std::int64_t a = 0; a < nv; ++a) {
    for (std::int64_t b = 0; b < nv; ++b) {
      const std::int64_t det = mod_reduce(a * a + a * b * phi - delta * b * b % nv, nv);
      if (gcd64(det, nv) == 1) elems.emplace_back(a + b * phi, b, delta * b, a, n);
    }
  }
  return group_from_elements(n, elems);
}

FiniteMatrixGroup normalizer_group(const CartanParams& p, Modulus n, Sign adjoin) {
  const FiniteMatrixGroup cartan = cartan_subgroup(p, n);
  std::vector<Mat2> gens(cartan.generators().begin(), cartan.generators().end());
  gens.push_back(c_eps(adjoin, p, n));
  return group_closure(n, gens);
}

}  // namespace cmdiv
