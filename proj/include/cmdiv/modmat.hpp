#pragma once

// 2x2 matrices over Z/nZ and the finite matrix groups they generate.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace cmdiv {

// The level n. Group work needs n >= 2; n = 1 only appears as the target of a
// projection to the trivial level.
class Modulus {
 public:
  static constexpr std::int64_t kMax = std::int64_t{1} << 16;

  explicit Modulus(std::int64_t n);

  std::int64_t value() const { return n_; }
  std::int64_t reduce(std::int64_t x) const;

  friend bool operator==(Modulus, Modulus) = default;

 private:
  std::int64_t n_;
};

// Row-major packing of the four residues, 16 bits each.
using MatCode = std::uint64_t;

class Mat2 {
 public:
  Mat2(std::int64_t a11, std::int64_t a12, std::int64_t a21, std::int64_t a22, Modulus n);

  static Mat2 identity(Modulus n);
  static Mat2 scalar(std::int64_t s, Modulus n);
  static Mat2 decode(MatCode code, Modulus n);

  std::int64_t a11() const { return e_[0]; }
  std::int64_t a12() const { return e_[1]; }
  std::int64_t a21() const { return e_[2]; }
  std::int64_t a22() const { return e_[3]; }
  const std::array<std::int64_t, 4>& entries() const { return e_; }
  Modulus modulus() const { return Modulus(n_); }

  MatCode code() const;

  friend bool operator==(const Mat2&, const Mat2&) = default;

 private:
  std::array<std::int64_t, 4> e_;
  std::int64_t n_;
};

std::string to_string(const Mat2& m);

Mat2 mat_mul(const Mat2& x, const Mat2& y);
inline Mat2 operator*(const Mat2& x, const Mat2& y) { return mat_mul(x, y); }
std::int64_t mat_det(const Mat2& x);
bool is_invertible(const Mat2& x);
Mat2 mat_inv(const Mat2& x);
Mat2 mat_pow(const Mat2& x, std::uint64_t e);
bool commute(const Mat2& x, const Mat2& y);

// Entrywise reduction to a divisor d of the modulus.
Mat2 reduce_to(const Mat2& x, std::int64_t d);

// Multiplicative order of an invertible matrix.
std::uint64_t element_order(const Mat2& x);

// Invariant factors d1 | d2 | ... | dk, each >= 2. Empty means trivial.
struct AbelianType {
  std::vector<std::int64_t> invariant_factors;

  std::int64_t order() const;
  bool is_elementary_2() const;
  std::string to_string() const;

  friend bool operator==(const AbelianType&, const AbelianType&) = default;
};

class FiniteMatrixGroup {
 public:
  Modulus modulus() const { return modulus_; }

  // An irredundant generating set: each generator lies outside the group
  // generated by the ones before it.
  std::span<const Mat2> generators() const { return generators_; }

  // Sorted, deduplicated element codes.
  std::span<const MatCode> codes() const { return codes_; }

  std::size_t order() const { return codes_.size(); }
  bool contains(const Mat2& m) const;
  std::vector<Mat2> elements() const;

  friend bool operator==(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b) {
    return a.modulus_ == b.modulus_ && a.codes_ == b.codes_;
  }

 private:
  FiniteMatrixGroup(Modulus n, std::vector<Mat2> generators, std::vector<MatCode> codes)
      : modulus_(n), generators_(std::move(generators)), codes_(std::move(codes)) {}

  friend FiniteMatrixGroup group_closure(Modulus, std::span<const Mat2>, std::size_t);

  Modulus modulus_;
  std::vector<Mat2> generators_;
  std::vector<MatCode> codes_;
};

inline constexpr std::size_t kDefaultClosureCap = 10'000'000;

// Closure of the generators under multiplication. Throws GroupTooLarge past
// `cap` elements, NotInvertible on a singular generator and ModulusMismatch
// when a generator lives at another level.
FiniteMatrixGroup group_closure(Modulus n, std::span<const Mat2> generators,
                                std::size_t cap = kDefaultClosureCap);

inline FiniteMatrixGroup group_closure(Modulus n, std::initializer_list<Mat2> generators,
                                       std::size_t cap = kDefaultClosureCap) {
  return group_closure(n, std::span<const Mat2>(generators.begin(), generators.size()), cap);
}

// Wraps an explicitly enumerated element set, throwing InvalidInput unless it
// is already a group.
FiniteMatrixGroup group_from_elements(Modulus n, std::span<const Mat2> elements,
                                      std::size_t cap = kDefaultClosureCap);

bool is_abelian(const FiniteMatrixGroup& g);

// Invariant factors by repeatedly splitting off a cyclic factor of maximal
// order from successive quotients. Throws NotAbelian.
AbelianType abelian_invariants(const FiniteMatrixGroup& g);

// Image of g under reduction modulo d, for d | n.
FiniteMatrixGroup project_group(const FiniteMatrixGroup& g, std::int64_t d);

bool is_isomorphic_s3(const FiniteMatrixGroup& g);

// element order -> number of elements with that order
std::map<std::uint64_t, std::size_t> order_statistics(const FiniteMatrixGroup& g);

}  // namespace cmdiv
