#include "cmdiv/classifier.hpp"

#include <cstdlib>

#include "cmdiv/errors.hpp"
#include "cmdiv/ntheory.hpp"

namespace cmdiv {

namespace {

constexpr std::int64_t kCoefLimit = std::int64_t{1} << 60;

void check_coefficient(std::int64_t c, const char* what) {
  if (c == 0) throw InvalidInput(std::string(what) + " = 0 gives a singular curve");
  if (c > kCoefLimit || c < -kCoefLimit) {
    throw InvalidInput(std::string(what) + " exceeds 2^60 in absolute value");
  }
}

AbelianType elementary(std::size_t rank) { return AbelianType{std::vector<std::int64_t>(rank, 2)}; }

ClassificationResult nonabelian(std::int64_t n, NonAbelianKind kind) { return {n, false, kind, false}; }

ClassificationResult abelian(std::int64_t n, std::size_t rank, bool cyclotomic) {
  return {n, true, elementary(rank), cyclotomic};
}

ClassificationResult classify_level2(const CurveInput& curve) {
  if (const auto* j = std::get_if<J1728>(&curve.variant())) {
    const bool split = is_perfect_square(-j->a);
    return abelian(2, split ? 0 : 1, split);
  }
  if (const auto* z = std::get_if<JZero>(&curve.variant())) {
    if (is_perfect_cube(z->d)) return abelian(2, 1, false);
    return nonabelian(2, NonAbelianKind::S3);
  }
  const CmOrder& o = std::get<GeneralCM>(curve.variant()).order;
  const bool ok = mod_reduce(o.discriminant(), 4) == 0 ||
                  (mod_reduce(o.delta_k(), 8) == 1 && o.conductor() % 2 == 1);
  if (ok) return abelian(2, 1, false);
  return nonabelian(2, NonAbelianKind::S3);
}

ClassificationResult classify_level3(const CurveInput& curve) {
  const auto* z = std::get_if<JZero>(&curve.variant());
  if (z == nullptr || !is_perfect_cube(-4 * z->d)) return nonabelian(3, NonAbelianKind::Unspecified);
  const bool small = is_perfect_square(z->d) || is_perfect_square(-3 * z->d);
  return abelian(3, small ? 1 : 2, small);
}

ClassificationResult classify_level4(const CurveInput& curve) {
  const auto* j = std::get_if<J1728>(&curve.variant());
  if (j == nullptr) return nonabelian(4, NonAbelianKind::Unspecified);
  const std::int64_t s = fourth_power_free(j->a);
  const std::int64_t abs_s = std::llabs(s);
  if (abs_s == 1 || abs_s == 4) return abelian(4, 2, false);
  if (is_perfect_square(abs_s)) return abelian(4, 3, false);
  if (abs_s % 2 == 0 && is_perfect_square(abs_s / 2)) return nonabelian(4, NonAbelianKind::D4);
  return nonabelian(4, NonAbelianKind::D4xC2);
}

}  // namespace

bool is_perfect_square(std::int64_t m) {
  if (m < 0) return false;
  const std::int64_t r = isqrt(m);
  return r * r == m;
}

bool is_perfect_cube(std::int64_t m) {
  const std::int64_t r = icbrt(m);
  return r * r * r == m;
}

std::int64_t fourth_power_free(std::int64_t s) {
  if (s == 0) throw InvalidInput("fourth_power_free(0) is undefined");
  std::uint64_t m = s < 0 ? 0 - static_cast<std::uint64_t>(s) : static_cast<std::uint64_t>(s);
  for (std::uint64_t p = 2; p * p * p * p <= m; ++p) {
    const std::uint64_t q = p * p * p * p;
    while (m % q == 0) m /= q;
  }
  return s < 0 ? -static_cast<std::int64_t>(m) : static_cast<std::int64_t>(m);
}

std::int64_t squarefree_part(std::int64_t t) {
  if (t == 0) throw InvalidInput("squarefree_part(0) is undefined");
  const int sign = t < 0 ? -1 : 1;
  std::uint64_t m = t < 0 ? 0 - static_cast<std::uint64_t>(t) : static_cast<std::uint64_t>(t);
  std::uint64_t out = 1;
  for (std::uint64_t p = 2; p * p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2 == 1) out *= p;
  }
  // The cofactor has at most two prime factors, each above the cube root.
  const auto r = static_cast<std::uint64_t>(isqrt(static_cast<std::int64_t>(m)));
  if (r * r != m) out *= m;
  return sign * static_cast<std::int64_t>(out);
}

CurveInput CurveInput::jzero(std::int64_t d) {
  check_coefficient(d, "d");
  return CurveInput(JZero{d});
}

CurveInput CurveInput::j1728(std::int64_t a) {
  check_coefficient(a, "A");
  return CurveInput(J1728{a});
}

CurveInput CurveInput::general(std::int64_t delta_k, std::int64_t f) {
  CmOrder order(delta_k, f);
  if (f == 1 && (delta_k == -3 || delta_k == -4)) {
    throw InvalidInput("order (" + std::to_string(delta_k) +
                       ", 1) has j in {0, 1728}; use the jzero or j1728 model instead");
  }
  return CurveInput(GeneralCM{order});
}

std::optional<std::pair<std::int64_t, std::int64_t>> CurveInput::weierstrass() const {
  if (const auto* z = std::get_if<JZero>(&v_)) return std::pair<std::int64_t, std::int64_t>{0, z->d};
  if (const auto* j = std::get_if<J1728>(&v_)) return std::pair<std::int64_t, std::int64_t>{j->a, 0};
  return std::nullopt;
}

namespace {

std::string signed_term(std::int64_t c) {
  return (c < 0 ? " - " : " + ") + std::to_string(c < 0 ? -c : c);
}

}  // namespace

std::string CurveInput::describe() const {
  if (const auto* z = std::get_if<JZero>(&v_)) return "y^2 = x^3" + signed_term(z->d);
  if (const auto* j = std::get_if<J1728>(&v_)) return "y^2 = x^3" + signed_term(j->a) + "x";
  const CmOrder& o = std::get<GeneralCM>(v_).order;
  return "CM by order (disc_K=" + std::to_string(o.delta_k()) + ", f=" + std::to_string(o.conductor()) + ")";
}

std::string to_string(NonAbelianKind kind) {
  switch (kind) {
    case NonAbelianKind::S3:
      return "S3";
    case NonAbelianKind::D4:
      return "D4";
    case NonAbelianKind::D4xC2:
      return "D4xC2";
    case NonAbelianKind::Unspecified:
      break;
  }
  return "nonabelian";
}

std::string ClassificationResult::structure_code() const {
  if (const auto* k = std::get_if<NonAbelianKind>(&structure)) return to_string(*k);
  std::string out = "[";
  const auto& f = std::get<AbelianType>(structure).invariant_factors;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(f[i]);
  }
  return out + "]";
}

ClassificationResult classify(const CurveInput& curve, std::int64_t n) {
  if (n < 1) throw InvalidInput("level must be >= 1, got " + std::to_string(n));
  switch (n) {
    case 1:
      return abelian(1, 0, true);
    case 2:
      return classify_level2(curve);
    case 3:
      return classify_level3(curve);
    case 4:
      return classify_level4(curve);
    default:
      return nonabelian(n, NonAbelianKind::Unspecified);
  }
}

bool is_cyclotomic(const CurveInput& curve, std::int64_t n) {
  if (n == 1) return true;
  if (n == 2) {
    const auto* j = std::get_if<J1728>(&curve.variant());
    return j != nullptr && is_perfect_square(-j->a);
  }
  if (n == 3) {
    const auto* z = std::get_if<JZero>(&curve.variant());
    return z != nullptr && (is_perfect_square(z->d) || is_perfect_square(-3 * z->d)) &&
           is_perfect_cube(-4 * z->d);
  }
  return false;
}

}  // namespace cmdiv
