#pragma once
#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "fsig/errors.hpp"

namespace fsig {

// A monomial is its exponent vector; the ambient ring fixes the variable count.
struct Monomial {
  std::vector<std::uint32_t> e;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

  std::size_t nvars() const { return e.size(); }

  std::uint64_t degree() const {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
  }

  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  // this / o, defined only when o divides this.
  Monomial quotient(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = std::max(r.e[i], o.e[i]);
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }

  Monomial power(std::uint64_t n) const {
    Monomial r(*this);
    for (auto& x : r.e) {
      check_mul(x, n);
      x = static_cast<std::uint32_t>(std::uint64_t{x} * n);
    }
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  // Structural order (plain lexicographic on the exponent vector); used only
  // for canonical storage, not as a monomial order.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.e < b.e; }

 private:
  static void check_mul(std::uint64_t a, std::uint64_t n) {
    if (a && n > (0xffffffffull / a))
      throw resource_error("monomial exponent overflow", static_cast<long long>(a),
                           0xffffffffll);
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 14695981039346656037ull;  // FNV-1a
    for (auto x : m.e) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// Total, multiplicative monomial orders with 1 as the minimum.
// Supported kinds: graded reverse lexicographic, lexicographic, and a block
// elimination order whose first `block` variables dominate the rest (each
// block compared by grevlex).  `perm` lists variable indices from most to
// least significant; identity means declaration order.
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block_elim };

  static MonomialOrder grevlex(std::size_t nvars) {
    return MonomialOrder(Kind::grevlex, nvars, 0);
  }
  static MonomialOrder lex(std::size_t nvars) {
    return MonomialOrder(Kind::lex, nvars, 0);
  }
  static MonomialOrder block_elimination(std::size_t nvars, std::size_t block) {
    if (block == 0 || block >= nvars)
      throw usage_error("elimination block must satisfy 0 < block < nvars");
    return MonomialOrder(Kind::block_elim, nvars, block);
  }

  MonomialOrder with_permutation(std::vector<std::uint32_t> perm) const {
    if (perm.size() != perm_.size())
      throw usage_error("permutation size does not match variable count");
    MonomialOrder r(*this);
    r.perm_ = std::move(perm);
    return r;
  }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }
  std::size_t nvars() const { return perm_.size(); }
  const std::vector<std::uint32_t>& permutation() const { return perm_; }

  // -1, 0, +1 for a < b, a == b, a > b.
  int cmp(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::lex:
        return cmp_lex(a, b, 0, perm_.size());
      case Kind::grevlex:
        return cmp_grevlex(a, b, 0, perm_.size());
      case Kind::block_elim: {
        int c = cmp_grevlex(a, b, 0, block_);
        return c ? c : cmp_grevlex(a, b, block_, perm_.size());
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.block_ == b.block_ && a.perm_ == b.perm_;
  }
  friend bool operator<(const MonomialOrder& a, const MonomialOrder& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    if (a.block_ != b.block_) return a.block_ < b.block_;
    return a.perm_ < b.perm_;
  }

 private:
  MonomialOrder(Kind k, std::size_t nvars, std::size_t block)
      : kind_(k), block_(block), perm_(nvars) {
    for (std::size_t i = 0; i < nvars; ++i) perm_[i] = static_cast<std::uint32_t>(i);
  }

  int cmp_lex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) const {
    for (std::size_t i = lo; i < hi; ++i) {
      std::uint32_t ai = a.e[perm_[i]], bi = b.e[perm_[i]];
      if (ai != bi) return ai > bi ? 1 : -1;
    }
    return 0;
  }

  int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t lo,
                  std::size_t hi) const {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a.e[perm_[i]];
      db += b.e[perm_[i]];
    }
    if (da != db) return da > db ? 1 : -1;
    // Equal degree: the last variable where they differ decides, with the
    // smaller exponent winning (reverse lexicographic).
    for (std::size_t i = hi; i-- > lo;) {
      std::uint32_t ai = a.e[perm_[i]], bi = b.e[perm_[i]];
      if (ai != bi) return ai < bi ? 1 : -1;
    }
    return 0;
  }

  Kind kind_;
  std::size_t block_;
  std::vector<std::uint32_t> perm_;
};

}  // namespace fsig
