#include "cmdiv/modmat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "cmdiv/errors.hpp"
#include "cmdiv/ntheory.hpp"

namespace cmdiv {

namespace {

using Raw = std::array<std::int64_t, 4>;

Raw mul_raw(const Raw& x, const Raw& y, std::int64_t n) {
  return {(x[0] * y[0] + x[1] * y[2]) % n, (x[0] * y[1] + x[1] * y[3]) % n,
          (x[2] * y[0] + x[3] * y[2]) % n, (x[2] * y[1] + x[3] * y[3]) % n};
}

MatCode pack(const Raw& r) {
  return (static_cast<MatCode>(r[0]) << 48) | (static_cast<MatCode>(r[1]) << 32) |
         (static_cast<MatCode>(r[2]) << 16) | static_cast<MatCode>(r[3]);
}

Raw unpack(MatCode c) {
  return {static_cast<std::int64_t>((c >> 48) & 0xFFFF), static_cast<std::int64_t>((c >> 32) & 0xFFFF),
          static_cast<std::int64_t>((c >> 16) & 0xFFFF), static_cast<std::int64_t>(c & 0xFFFF)};
}

void require_same_level(const Mat2& x, const Mat2& y) {
  if (x.modulus() != y.modulus()) {
    throw ModulusMismatch("matrices live modulo " + std::to_string(x.modulus().value()) + " and " +
                          std::to_string(y.modulus().value()));
  }
}

// Membership structure for closure. Small levels use a bitmap over all n^4
// matrices, reused per thread and cleared element by element afterwards.
class ClosureSet {
 public:
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 26;

  explicit ClosureSet(std::int64_t n) : n_(n) {
    const auto un = static_cast<std::uint64_t>(n);
    dense_ = un * un * un * un <= kDenseLimit;
    if (dense_) {
      const std::size_t words = static_cast<std::size_t>((un * un * un * un + 63) / 64);
      if (scratch().size() < words) scratch().resize(words, 0);
    }
  }

  ClosureSet(const ClosureSet&) = delete;
  ClosureSet& operator=(const ClosureSet&) = delete;

  ~ClosureSet() {
    if (dense_) {
      auto& bits = scratch();
      for (const Raw& r : list_) {
        const std::uint64_t i = index(r);
        bits[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
      }
    }
  }

  bool contains(const Raw& r) const {
    if (dense_) {
      const std::uint64_t i = index(r);
      return (scratch()[i >> 6] >> (i & 63)) & 1U;
    }
    return sparse_.count(pack(r)) != 0;
  }

  bool insert(const Raw& r) {
    if (dense_) {
      const std::uint64_t i = index(r);
      auto& word = scratch()[i >> 6];
      const std::uint64_t bit = std::uint64_t{1} << (i & 63);
      if (word & bit) return false;
      word |= bit;
    } else if (!sparse_.insert(pack(r)).second) {
      return false;
    }
    list_.push_back(r);
    return true;
  }

  const std::vector<Raw>& list() const { return list_; }

 private:
  static std::vector<std::uint64_t>& scratch() {
    thread_local std::vector<std::uint64_t> bits;
    return bits;
  }

  std::uint64_t index(const Raw& r) const {
    const auto un = static_cast<std::uint64_t>(n_);
    return ((static_cast<std::uint64_t>(r[0]) * un + static_cast<std::uint64_t>(r[1])) * un +
            static_cast<std::uint64_t>(r[2])) * un + static_cast<std::uint64_t>(r[3]);
  }

  std::int64_t n_;
  bool dense_ = false;
  std::unordered_set<MatCode> sparse_;
  std::vector<Raw> list_;
};

}  // namespace

Modulus::Modulus(std::int64_t n) : n_(n) {
  if (n < 1 || n > kMax) {
    throw InvalidInput("modulus must lie in [1, " + std::to_string(kMax) + "], got " + std::to_string(n));
  }
}

std::int64_t Modulus::reduce(std::int64_t x) const { return mod_reduce(x, n_); }

Mat2::Mat2(std::int64_t a11, std::int64_t a12, std::int64_t a21, std::int64_t a22, Modulus n)
    : e_{n.reduce(a11), n.reduce(a12), n.reduce(a21), n.reduce(a22)}, n_(n.value()) {}

Mat2 Mat2::identity(Modulus n) { return Mat2(1, 0, 0, 1, n); }

Mat2 Mat2::scalar(std::int64_t s, Modulus n) { return Mat2(s, 0, 0, s, n); }

Mat2 Mat2::decode(MatCode code, Modulus n) {
  const Raw r = unpack(code);
  return Mat2(r[0], r[1], r[2], r[3], n);
}

MatCode Mat2::code() const { return pack(e_); }

std::string to_string(const Mat2& m) {
  std::ostringstream os;
  os << "[[" << m.a11() << "," << m.a12() << "],[" << m.a21() << "," << m.a22() << "]] mod "
     << m.modulus().value();
  return os.str();
}

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  require_same_level(x, y);
  const Raw r = mul_raw(x.entries(), y.entries(), x.modulus().value());
  return Mat2(r[0], r[1], r[2], r[3], x.modulus());
}

std::int64_t mat_det(const Mat2& x) {
  return x.modulus().reduce(x.a11() * x.a22() - x.a12() * x.a21());
}

bool is_invertible(const Mat2& x) { return gcd64(mat_det(x), x.modulus().value()) == 1; }

Mat2 mat_inv(const Mat2& x) {
  const auto inv = mod_inverse(mat_det(x), x.modulus().value());
  if (!inv) throw NotInvertible("matrix " + to_string(x) + " is not invertible");
  const std::int64_t d = *inv;
  return Mat2(x.a22() * d, -x.a12() * d, -x.a21() * d, x.a11() * d, x.modulus());
}

Mat2 mat_pow(const Mat2& x, std::uint64_t e) {
  Mat2 result = Mat2::identity(x.modulus());
  Mat2 base = x;
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

bool commute(const Mat2& x, const Mat2& y) { return x * y == y * x; }

Mat2 reduce_to(const Mat2& x, std::int64_t d) {
  if (d < 1 || x.modulus().value() % d != 0) {
    throw InvalidInput(std::to_string(d) + " does not divide " + std::to_string(x.modulus().value()));
  }
  return Mat2(x.a11(), x.a12(), x.a21(), x.a22(), Modulus(d));
}

std::uint64_t element_order(const Mat2& x) {
  if (!is_invertible(x)) throw NotInvertible("element_order of singular " + to_string(x));
  const Mat2 id = Mat2::identity(x.modulus());
  Mat2 p = x;
  std::uint64_t k = 1;
  while (p != id) {
    p = p * x;
    ++k;
  }
  return k;
}

std::int64_t AbelianType::order() const {
  return std::accumulate(invariant_factors.begin(), invariant_factors.end(), std::int64_t{1},
                         std::multiplies<>());
}

bool AbelianType::is_elementary_2() const {
  return std::all_of(invariant_factors.begin(), invariant_factors.end(), [](auto d) { return d == 2; });
}

std::string AbelianType::to_string() const {
  if (invariant_factors.empty()) return "trivial";
  std::string out;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) out += " x ";
    out += "Z/" + std::to_string(invariant_factors[i]);
  }
  return out;
}

bool FiniteMatrixGroup::contains(const Mat2& m) const {
  if (m.modulus() != modulus_) return false;
  return std::binary_search(codes_.begin(), codes_.end(), m.code());
}

std::vector<Mat2> FiniteMatrixGroup::elements() const {
  std::vector<Mat2> out;
  out.reserve(codes_.size());
  for (MatCode c : codes_) out.push_back(Mat2::decode(c, modulus_));
  return out;
}

FiniteMatrixGroup group_closure(Modulus n, std::span<const Mat2> generators, std::size_t cap) {
  const std::int64_t nv = n.value();
  ClosureSet set(nv);
  set.insert(Mat2::identity(n).entries());

  std::vector<Mat2> kept;
  std::vector<Raw> gens;
  for (const Mat2& g : generators) {
    if (g.modulus() != n) {
      throw ModulusMismatch("generator " + to_string(g) + " does not live modulo " + std::to_string(nv));
    }
    if (!is_invertible(g)) throw NotInvertible("generator " + to_string(g) + " is not invertible");
    if (set.contains(g.entries())) continue;

    kept.push_back(g);
    gens.push_back(g.entries());
    // The old set is closed under the old generators, so only old * g and
    // products of new elements with every generator can be new.
    const std::size_t old_count = set.list().size();
    for (std::size_t i = 0; i < old_count; ++i) set.insert(mul_raw(set.list()[i], g.entries(), nv));
    for (std::size_t i = old_count; i < set.list().size(); ++i) {
      for (const Raw& h : gens) {
        set.insert(mul_raw(set.list()[i], h, nv));
      }
      if (set.list().size() > cap) {
        throw GroupTooLarge("closure exceeds cap of " + std::to_string(cap) + " elements");
      }
    }
  }

  std::vector<MatCode> codes;
  codes.reserve(set.list().size());
  for (const Raw& r : set.list()) codes.push_back(pack(r));
  std::sort(codes.begin(), codes.end());
  return FiniteMatrixGroup(n, std::move(kept), std::move(codes));
}

FiniteMatrixGroup group_from_elements(Modulus n, std::span<const Mat2> elements, std::size_t cap) {
  std::vector<MatCode> wanted;
  wanted.reserve(elements.size());
  for (const Mat2& m : elements) wanted.push_back(m.code());
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

  FiniteMatrixGroup g = group_closure(n, elements, cap);
  if (g.order() != wanted.size()) {
    throw InvalidInput("element set of size " + std::to_string(wanted.size()) +
                       " is not closed; it generates a group of order " + std::to_string(g.order()));
  }
  return g;
}

bool is_abelian(const FiniteMatrixGroup& g) {
  const auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commute(gens[i], gens[j])) return false;
    }
  }
  return true;
}

AbelianType abelian_invariants(const FiniteMatrixGroup& g) {
  if (!is_abelian(g)) throw NotAbelian("abelian_invariants called on a non-abelian group");
  const Modulus n = g.modulus();
  const std::vector<Mat2> elems = g.elements();

  std::vector<Mat2> split_gens;
  FiniteMatrixGroup sub = group_closure(n, std::span<const Mat2>{});
  std::vector<std::int64_t> factors;  // descending

  while (sub.order() < g.order()) {
    // Order of each element in G / sub; take one of maximal order.
    std::uint64_t best_order = 0;
    const Mat2* best = nullptr;
    for (const Mat2& x : elems) {
      std::uint64_t k = 1;
      Mat2 p = x;
      while (!sub.contains(p)) {
        p = p * x;
        ++k;
      }
      if (k > best_order) {
        best_order = k;
        best = &x;
      }
    }
    factors.push_back(static_cast<std::int64_t>(best_order));
    split_gens.push_back(*best);
    sub = group_closure(n, split_gens);
  }

  std::reverse(factors.begin(), factors.end());
  return AbelianType{std::move(factors)};
}

FiniteMatrixGroup project_group(const FiniteMatrixGroup& g, std::int64_t d) {
  const std::int64_t nv = g.modulus().value();
  if (d < 1 || nv % d != 0) {
    throw InvalidInput(std::to_string(d) + " does not divide the level " + std::to_string(nv));
  }
  if (d == nv) return g;
  const Modulus target(d);
  std::vector<Mat2> image;
  image.reserve(g.order());
  for (MatCode c : g.codes()) image.push_back(reduce_to(Mat2::decode(c, g.modulus()), d));
  return group_from_elements(target, image);
}

bool is_isomorphic_s3(const FiniteMatrixGroup& g) { return g.order() == 6 && !is_abelian(g); }

std::map<std::uint64_t, std::size_t> order_statistics(const FiniteMatrixGroup& g) {
  std::map<std::uint64_t, std::size_t> out;
  for (const Mat2& x : g.elements()) ++out[element_order(x)];
  return out;
}

}  // namespace cmdiv
