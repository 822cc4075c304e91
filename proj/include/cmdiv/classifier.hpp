#pragma once

// Abelian and cyclotomic division-field verdicts for CM curves, read off
// directly from curve data.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "cmdiv/cartan.hpp"
#include "cmdiv/modmat.hpp"

namespace cmdiv {

bool is_perfect_square(std::int64_t m);
bool is_perfect_cube(std::int64_t m);

// s with every fourth-power factor removed; throws InvalidInput for s = 0.
std::int64_t fourth_power_free(std::int64_t s);

// t with every square factor removed (sign kept); throws InvalidInput for 0.
std::int64_t squarefree_part(std::int64_t t);

// y^2 = x^3 + d
struct JZero {
  std::int64_t d;
};

// y^2 = x^3 + A x
struct J1728 {
  std::int64_t a;
};

// Some curve with CM by the given order, j not in {0, 1728}.
struct GeneralCM {
  CmOrder order;
};

class CurveInput {
 public:
  using Variant = std::variant<JZero, J1728, GeneralCM>;

  // Coefficients must be nonzero with |coef| <= 2^60.
  static CurveInput jzero(std::int64_t d);
  static CurveInput j1728(std::int64_t a);
  // Rejects the two orders with j = 0 or 1728.
  static CurveInput general(std::int64_t delta_k, std::int64_t f);

  const Variant& variant() const { return v_; }
  bool is_jzero() const { return std::holds_alternative<JZero>(v_); }
  bool is_j1728() const { return std::holds_alternative<J1728>(v_); }
  bool is_general() const { return std::holds_alternative<GeneralCM>(v_); }

  // (a, b) with y^2 = x^3 + a x + b; empty for GeneralCM.
  std::optional<std::pair<std::int64_t, std::int64_t>> weierstrass() const;

  std::string describe() const;

 private:
  explicit CurveInput(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

enum class NonAbelianKind { S3, D4, D4xC2, Unspecified };

std::string to_string(NonAbelianKind kind);

struct ClassificationResult {
  std::int64_t n;
  bool abelian;
  std::variant<AbelianType, NonAbelianKind> structure;
  bool cyclotomic;

  // "[2,2]", "[]", "S3", "D4", "D4xC2" or "nonabelian"
  std::string structure_code() const;
};

// Throws InvalidInput for n < 1.
ClassificationResult classify(const CurveInput& curve, std::int64_t n);

bool is_cyclotomic(const CurveInput& curve, std::int64_t n);

}  // namespace cmdiv
