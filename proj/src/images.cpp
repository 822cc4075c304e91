#include "cmdiv/images.hpp"

#include <algorithm>
#include <set>

#include "cmdiv/errors.hpp"
#include "cmdiv/ntheory.hpp"

namespace cmdiv {

namespace {

struct LabelInfo {
  ImageLabel label;
  std::string_view name;
};

constexpr std::array<LabelInfo, 20> kLabels{{
    {ImageLabel::P42_FULL, "P42_FULL"},     {ImageLabel::P42_CUBES, "P42_CUBES"},
    {ImageLabel::P42_SPLIT, "P42_SPLIT"},   {ImageLabel::P43_H1, "P43_H1"},
    {ImageLabel::P43_H2, "P43_H2"},         {ImageLabel::P43_H3, "P43_H3"},
    {ImageLabel::P43_H1P, "P43_H1P"},       {ImageLabel::P43_H2P, "P43_H2P"},
    {ImageLabel::P43_H3P, "P43_H3P"},       {ImageLabel::P45_H1, "P45_H1"},
    {ImageLabel::P45_H2, "P45_H2"},         {ImageLabel::P46_G1, "P46_G1"},
    {ImageLabel::P46_G2A, "P46_G2A"},       {ImageLabel::P46_G2B, "P46_G2B"},
    {ImageLabel::P46_G4A, "P46_G4A"},       {ImageLabel::P46_G4B, "P46_G4B"},
    {ImageLabel::P46_G4C, "P46_G4C"},       {ImageLabel::P46_G4D, "P46_G4D"},
    {ImageLabel::P48_INDEX3, "P48_INDEX3"}, {ImageLabel::P48_FULL, "P48_FULL"},
}};

enum class Family { p42, p43, p45, p46, p48 };

Family family_of(ImageLabel l) {
  switch (l) {
    case ImageLabel::P42_FULL:
    case ImageLabel::P42_CUBES:
    case ImageLabel::P42_SPLIT:
      return Family::p42;
    case ImageLabel::P43_H1:
    case ImageLabel::P43_H2:
    case ImageLabel::P43_H3:
    case ImageLabel::P43_H1P:
    case ImageLabel::P43_H2P:
    case ImageLabel::P43_H3P:
      return Family::p43;
    case ImageLabel::P45_H1:
    case ImageLabel::P45_H2:
      return Family::p45;
    case ImageLabel::P48_INDEX3:
    case ImageLabel::P48_FULL:
      return Family::p48;
    default:
      return Family::p46;
  }
}

const CartanParams kDeltaPrime{-3, 4, 0};

// A matrix whose entries are rationals with denominators prime to n.
struct Rational {
  std::int64_t num;
  std::int64_t den = 1;
};

Mat2 rational_mat(Rational a11, Rational a12, Rational a21, Rational a22, Modulus n) {
  const std::int64_t nv = n.value();
  return Mat2(resolve_rational(a11.num, a11.den, nv), resolve_rational(a12.num, a12.den, nv),
              resolve_rational(a21.num, a21.den, nv), resolve_rational(a22.num, a22.den, nv), n);
}

bool is_power_of(std::int64_t n, std::int64_t p, int max_exp) {
  std::int64_t q = 1;
  for (int k = 1; k <= max_exp; ++k) {
    q *= p;
    if (q == n) return true;
  }
  return false;
}

void check_level(const NamedImage& img) {
  const std::string name(label_name(img.label));
  switch (family_of(img.label)) {
    case Family::p42:
      if (img.level < 5 || !is_prime(img.level)) {
        throw InvalidInput(name + " needs a prime level p > 3, got " + std::to_string(img.level));
      }
      break;
    case Family::p43:
      if (!is_power_of(img.level, 3, 4)) {
        throw InvalidInput(name + " needs a level 3^k with 1 <= k <= 4, got " + std::to_string(img.level));
      }
      break;
    default:
      if (!is_power_of(img.level, 2, 6)) {
        throw InvalidInput(name + " needs a level 2^k with 1 <= k <= 6, got " + std::to_string(img.level));
      }
  }
  const Family f = family_of(img.label);
  if ((f == Family::p43 || f == Family::p46 || f == Family::p48) && !img.gamma) {
    throw InvalidInput(name + " needs an adjoined gamma element");
  }
}

FiniteMatrixGroup with_extra(const FiniteMatrixGroup& base, const Mat2& extra) {
  std::vector<Mat2> gens(base.generators().begin(), base.generators().end());
  gens.push_back(extra);
  return group_closure(base.modulus(), gens);
}

// {[[a, b], [-3b/4, a]] : b = 0 mod 3, a a unit (or a = 1 mod 3 when `a_one`)}
FiniteMatrixGroup three_adic_membership(Modulus n, bool a_one) {
  const std::int64_t nv = n.value();
  const std::int64_t delta = kDeltaPrime.delta_mod(n);
  std::vector<Mat2> elems;
  for (std::int64_t a = 0; a < nv; ++a) {
    if (a_one ? a % 3 != 1 : a % 3 == 0) continue;
    for (std::int64_t b = 0; b < nv; b += 3) elems.emplace_back(a, b, delta * b, a, n);
  }
  return group_from_elements(n, elems);
}

FiniteMatrixGroup build_p42(const NamedImage& img, Modulus n) {
  const Mat2 c1 = c_eps(Sign::plus, kDeltaPrime, n);
  switch (img.label) {
    case ImageLabel::P42_FULL:
      return normalizer_group(kDeltaPrime, n);
    case ImageLabel::P42_CUBES: {
      const FiniteMatrixGroup cartan = cartan_subgroup(kDeltaPrime, n);
      std::vector<Mat2> cubes;
      for (const Mat2& x : cartan.elements()) cubes.push_back(mat_pow(x, 3));
      return with_extra(group_from_elements(n, cubes), c1);
    }
    default: {
      const std::int64_t p = n.value();
      std::set<std::int64_t> cube_residues;
      for (std::int64_t x = 1; x < p; ++x) cube_residues.insert(x * x % p * x % p);
      std::vector<Mat2> diag;
      for (std::int64_t a = 1; a < p; ++a) {
        for (std::int64_t b = 1; b < p; ++b) {
          if (cube_residues.count(a * *mod_inverse(b, p) % p)) diag.emplace_back(a, 0, 0, b, n);
        }
      }
      return with_extra(group_from_elements(n, diag), Mat2(0, 1, 1, 0, n));
    }
  }
}

FiniteMatrixGroup build_p43(const NamedImage& img, Modulus n) {
  const Mat2 gamma = img.gamma->at(n);
  const Mat2 h2_gen = rational_mat({1}, {1}, {-3, 4}, {1}, n);
  const Mat2 h3_gen = rational_mat({-5, 4}, {1, 2}, {-3, 8}, {-5, 4}, n);
  switch (img.label) {
    case ImageLabel::P43_H1:
      return with_extra(three_adic_membership(n, false), gamma);
    case ImageLabel::P43_H1P:
      return with_extra(three_adic_membership(n, true), gamma);
    case ImageLabel::P43_H2:
      return group_closure(n, {Mat2::scalar(2, n), h2_gen, gamma});
    case ImageLabel::P43_H3:
      return group_closure(n, {Mat2::scalar(2, n), h3_gen, gamma});
    case ImageLabel::P43_H2P:
      return group_closure(n, {Mat2::scalar(4, n), h2_gen, gamma});
    default:
      return group_closure(n, {Mat2::scalar(4, n), h3_gen, gamma});
  }
}

FiniteMatrixGroup build_p45(const NamedImage& img, Modulus n) {
  if (img.alpha != 3 && img.alpha != 5) throw InvalidInput("alpha must be 3 or 5");
  const std::int64_t e = static_cast<std::int64_t>(img.eps);
  const Mat2 flip(e, 0, 0, -e, n);
  const Mat2 scal = Mat2::scalar(img.alpha, n);
  const Mat2 unip = img.label == ImageLabel::P45_H1 ? Mat2(1, 1, img.delta, 1, n)
                                                    : Mat2(-1, -1, -img.delta, -1, n);
  return group_closure(n, {flip, scal, unip});
}

FiniteMatrixGroup build_p46(const NamedImage& img, Modulus n) {
  const Mat2 gamma = img.gamma->at(n);
  const Mat2 minus_id = Mat2::scalar(-1, n);
  switch (img.label) {
    case ImageLabel::P46_G1: {
      const std::int64_t nv = n.value();
      std::vector<Mat2> elems;
      for (std::int64_t a = 0; a < nv; ++a) {
        for (std::int64_t b = 0; b < nv; ++b) {
          if ((a * a + b * b) % 2 == 1) elems.emplace_back(a, b, -b, a, n);
        }
      }
      return with_extra(group_from_elements(n, elems), gamma);
    }
    case ImageLabel::P46_G2A:
      return group_closure(n, {minus_id, Mat2::scalar(3, n), Mat2(1, 2, -2, 1, n), gamma});
    case ImageLabel::P46_G2B:
      return group_closure(n, {minus_id, Mat2::scalar(3, n), Mat2(2, 1, -1, 2, n), gamma});
    case ImageLabel::P46_G4A:
      return group_closure(n, {Mat2::scalar(5, n), Mat2(1, 2, -2, 1, n), gamma});
    case ImageLabel::P46_G4B:
      return group_closure(n, {Mat2::scalar(5, n), Mat2(-1, -2, 2, -1, n), gamma});
    case ImageLabel::P46_G4C:
      return group_closure(n, {Mat2::scalar(-3, n), Mat2(2, -1, 1, 2, n), gamma});
    default:
      return group_closure(n, {Mat2::scalar(-3, n), Mat2(-2, 1, -1, -2, n), gamma});
  }
}

FiniteMatrixGroup build_p48(const NamedImage& img, Modulus n) {
  const Mat2 gamma = img.gamma->at(n);
  const Mat2 last = img.label == ImageLabel::P48_INDEX3 ? Mat2(3, 6, -6, -3, n) : Mat2(2, 1, -1, 1, n);
  return group_closure(n, {gamma, Mat2::scalar(-1, n), Mat2(7, 4, -4, 3, n), last});
}

}  // namespace

std::string_view label_name(ImageLabel label) {
  for (const auto& info : kLabels) {
    if (info.label == label) return info.name;
  }
  return "?";
}

std::optional<ImageLabel> parse_label(std::string_view name) {
  for (const auto& info : kLabels) {
    if (info.name == name) return info.label;
  }
  return std::nullopt;
}

FiniteMatrixGroup build_named(const NamedImage& image) {
  check_level(image);
  const Modulus n(image.level);
  switch (family_of(image.label)) {
    case Family::p42:
      return build_p42(image, n);
    case Family::p43:
      return build_p43(image, n);
    case Family::p45:
      return build_p45(image, n);
    case Family::p46:
      return build_p46(image, n);
    case Family::p48:
      return build_p48(image, n);
  }
  throw InvalidInput("unknown image label");
}

IntMat2 c_eps_phi0(Sign eps) {
  const std::int64_t e = static_cast<std::int64_t>(eps);
  return {-e, 0, 0, e};
}

GammaSet gamma_lifts_mod8() {
  GammaSet set{
      {IntMat2{1, 0, 0, -1}, IntMat2{-1, 0, 0, 1}, IntMat2{0, 1, 1, 0}, IntMat2{0, -1, -1, 0}},
      {
          {{5, 4, 4, 3}, 0}, {{1, 4, 4, 7}, 0}, {{5, 0, 0, 3}, 0}, {{1, 0, 0, 7}, 0},
          {{7, 4, 4, 1}, 1}, {{7, 0, 0, 1}, 1}, {{3, 0, 0, 5}, 1}, {{3, 4, 4, 5}, 1},
          {{4, 1, 1, 4}, 2}, {{0, 1, 1, 0}, 2}, {{4, 5, 5, 4}, 2}, {{0, 5, 5, 0}, 2},
          {{4, 7, 7, 4}, 3}, {{0, 7, 7, 0}, 3}, {{0, 3, 3, 0}, 3}, {{4, 3, 3, 4}, 3},
      }};
  const Modulus four(4);
  for (const GammaLift& lift : set.gamma_double_prime) {
    if (lift.matrix.at(four) != set.gamma_prime[lift.prime_index].at(four)) {
      throw InvalidInput("gamma'' table entry does not reduce to its gamma' mod 4");
    }
  }
  return set;
}

std::array<IntMat2, 2> gamma_prime_j0() { return {IntMat2{0, 1, 1, 0}, IntMat2{0, -1, -1, 0}}; }

std::vector<LevelVerdict> enumerate_verdicts(NamedImage image, std::span<const std::int64_t> levels) {
  std::vector<LevelVerdict> out;
  out.reserve(levels.size());
  for (std::int64_t level : levels) {
    image.level = level;
    const FiniteMatrixGroup g = build_named(image);
    LevelVerdict v{level, g.order(), is_abelian(g), std::nullopt};
    if (v.abelian) v.structure = abelian_invariants(g);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace cmdiv
