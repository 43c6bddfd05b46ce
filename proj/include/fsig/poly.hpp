#pragma once
#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fsig/errors.hpp"
#include "fsig/fp.hpp"
#include "fsig/monomial.hpp"

namespace fsig {

// Ambient polynomial ring F_p[x_1, ..., x_n].  Shared immutably by every
// polynomial built over it; the term budget caps intermediate term counts so
// runaway products fail fast instead of exhausting memory.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> var_names,
           long long term_budget = 2'000'000)
      : field_(field), vars_(std::move(var_names)), budget_(term_budget) {
    if (vars_.empty()) throw validation_error("polynomial ring needs at least one variable");
    if (budget_ <= 0) throw usage_error("term budget must be positive");
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!valid_identifier(vars_[i]))
        throw validation_error("invalid variable name: '" + vars_[i] + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (vars_[i] == vars_[j])
          throw validation_error("duplicate variable name: '" + vars_[i] + "'");
    }
  }

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& var_names() const { return vars_; }
  long long term_budget() const { return budget_; }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    return -1;
  }

  bool compatible(const PolyRing& o) const {
    return field_ == o.field_ && vars_ == o.vars_;
  }

  static bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return true;
  }

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  long long budget_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

struct Term {
  Monomial mono;
  std::uint32_t coeff;  // always in [1, p)

  friend bool operator==(const Term& a, const Term& b) {
    return a.coeff == b.coeff && a.mono == b.mono;
  }
};

// Immutable polynomial value.  Terms are kept sorted ascending by the
// structural monomial order, coefficients normalized to [1, p); this gives a
// unique representation so equality and hashing are structural.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) { require_ring(); }

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }

  static Poly constant(RingPtr ring, long long c) {
    Poly r(std::move(ring));
    std::uint32_t cc = r.ring_->field().reduce(c);
    if (cc) r.terms_.push_back(Term{Monomial(r.ring_->nvars()), cc});
    return r;
  }

  static Poly variable(RingPtr ring, std::size_t i) {
    Poly r(std::move(ring));
    if (i >= r.ring_->nvars()) throw usage_error("variable index out of range");
    Monomial m(r.ring_->nvars());
    m.e[i] = 1;
    r.terms_.push_back(Term{std::move(m), 1});
    return r;
  }

  static Poly monomial(RingPtr ring, Monomial m, long long c) {
    Poly r(std::move(ring));
    if (m.nvars() != r.ring_->nvars())
      throw usage_error("monomial arity does not match ring");
    std::uint32_t cc = r.ring_->field().reduce(c);
    if (cc) r.terms_.push_back(Term{std::move(m), cc});
    return r;
  }

  // Canonicalizes: folds duplicate monomials, drops zero coefficients, sorts.
  static Poly from_terms(RingPtr ring, std::vector<Term> terms) {
    Poly r(std::move(ring));
    const auto& fp = r.ring_->field();
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
    for (auto& t : terms) {
      if (t.mono.nvars() != r.ring_->nvars())
        throw usage_error("monomial arity does not match ring");
      std::uint32_t c = fp.reduce(static_cast<long long>(t.coeff));
      if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
        std::uint32_t s = fp.add(r.terms_.back().coeff, c);
        if (s)
          r.terms_.back().coeff = s;
        else
          r.terms_.pop_back();
      } else if (c) {
        r.terms_.push_back(Term{std::move(t.mono), c});
      }
    }
    return r;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  // Total degree; the zero polynomial reports -1.
  long long degree() const {
    long long d = -1;
    for (const auto& t : terms_)
      d = std::max(d, static_cast<long long>(t.mono.degree()));
    return d;
  }

  const Term& leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw usage_error("leading term of the zero polynomial");
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i)
      if (order.greater(terms_[i].mono, terms_[best].mono)) best = i;
    return terms_[best];
  }

  Poly operator+(const Poly& o) const { return merge(o, false); }
  Poly operator-(const Poly& o) const { return merge(o, true); }

  Poly operator-() const {
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    const auto& fp = ring_->field();
    for (const auto& t : terms_) r.terms_.push_back(Term{t.mono, fp.neg(t.coeff)});
    return r;
  }

  Poly scale(long long c) const {
    const auto& fp = ring_->field();
    std::uint32_t cc = fp.reduce(c);
    Poly r(ring_);
    if (!cc) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      r.terms_.push_back(Term{t.mono, fp.mul(t.coeff, cc)});
    return r;
  }

  // Multiply by a single term; cheap and term-count preserving.
  Poly times_term(const Monomial& m, std::uint32_t c) const {
    const auto& fp = ring_->field();
    std::uint32_t cc = fp.reduce(static_cast<long long>(c));
    Poly r(ring_);
    if (!cc) return r;
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(Term{t.mono * m, fp.mul(t.coeff, cc)});
    // Multiplying by a fixed monomial preserves the structural order.
    r.terms_ = std::move(out);
    return r;
  }

  Poly operator*(const Poly& o) const {
    check_ring(o);
    const auto& fp = ring_->field();
    Poly r(ring_);
    if (terms_.empty() || o.terms_.empty()) return r;
    const long long budget = ring_->term_budget();
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
    acc.reserve(terms_.size() + o.terms_.size());
    for (const auto& a : terms_) {
      for (const auto& b : o.terms_) {
        Monomial m = a.mono * b.mono;
        std::uint32_t c = fp.mul(a.coeff, b.coeff);
        auto it = acc.find(m);
        if (it == acc.end()) {
          if (static_cast<long long>(acc.size()) >= budget)
            throw resource_error("term budget exceeded during multiplication",
                                 static_cast<long long>(acc.size()), budget);
          acc.emplace(std::move(m), c);
        } else {
          it->second = fp.add(it->second, c);
          if (!it->second) acc.erase(it);
        }
      }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& kv : acc) out.push_back(Term{kv.first, kv.second});
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
    r.terms_ = std::move(out);
    return r;
  }

  // Binary powering; respects the ring's term budget through each product.
  Poly pow(std::uint64_t n) const {
    Poly base = *this;
    Poly acc = Poly::constant(ring_, 1);
    while (n) {
      if (n & 1) acc = acc * base;
      n >>= 1;
      if (n) base = base * base;
    }
    return acc;
  }

  // f |-> f^q for q a power of the characteristic: exponent vectors scale by
  // q and coefficients are fixed points of x -> x^p, so the term count is
  // preserved exactly.
  Poly frobenius_power(std::uint64_t q) const {
    require_prime_power(ring_->field().p(), q);
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back(Term{t.mono.power(q), t.coeff});
    return r;
  }

  static void require_prime_power(std::uint32_t p, std::uint64_t q) {
    if (q == 0) throw usage_error("Frobenius exponent must be a positive power of p");
    std::uint64_t v = q;
    while (v % p == 0) v /= p;
    if (v != 1)
      throw usage_error("Frobenius exponent " + std::to_string(q) +
                        " is not a power of p=" + std::to_string(p));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Rendering uses grevlex-descending term order and coefficients in [1, p).
  std::string to_string() const {
    if (terms_.empty()) return "0";
    MonomialOrder ord = MonomialOrder::grevlex(ring_->nvars());
    std::vector<const Term*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](const Term* a, const Term* b) {
      return ord.greater(a->mono, b->mono);
    });
    std::string out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (i) out += " + ";
      out += term_string(*ts[i]);
    }
    return out;
  }

 private:
  void require_ring() const {
    if (!ring_) throw usage_error("polynomial without an ambient ring");
  }

  void check_ring(const Poly& o) const {
    if (ring_.get() != o.ring_.get() && !ring_->compatible(*o.ring_))
      throw usage_error("polynomials from incompatible rings");
  }

  Poly merge(const Poly& o, bool subtract) const {
    check_ring(o);
    const auto& fp = ring_->field();
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
      if (terms_[i].mono < o.terms_[j].mono) {
        r.terms_.push_back(terms_[i++]);
      } else if (o.terms_[j].mono < terms_[i].mono) {
        std::uint32_t c = subtract ? fp.neg(o.terms_[j].coeff) : o.terms_[j].coeff;
        r.terms_.push_back(Term{o.terms_[j].mono, c});
        ++j;
      } else {
        std::uint32_t c = subtract ? fp.sub(terms_[i].coeff, o.terms_[j].coeff)
                                   : fp.add(terms_[i].coeff, o.terms_[j].coeff);
        if (c) r.terms_.push_back(Term{terms_[i].mono, c});
        ++i;
        ++j;
      }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) {
      std::uint32_t c = subtract ? fp.neg(o.terms_[j].coeff) : o.terms_[j].coeff;
      r.terms_.push_back(Term{o.terms_[j].mono, c});
    }
    return r;
  }

  std::string term_string(const Term& t) const {
    std::string out;
    bool coeff_shown = t.coeff != 1 || t.mono.is_one();
    if (coeff_shown) out += std::to_string(t.coeff);
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
      if (!t.mono.e[i]) continue;
      if (!out.empty()) out += "*";
      out += ring_->var_names()[i];
      if (t.mono.e[i] != 1) out += "^" + std::to_string(t.mono.e[i]);
    }
    return out;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace fsig
