#pragma once
#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fsig/errors.hpp"
#include "fsig/linalg.hpp"
#include "fsig/poly.hpp"

namespace fsig {

namespace detail {

// Working representation for reduction: terms sorted strictly descending in
// the active monomial order.
using TermVec = std::vector<Term>;

inline TermVec to_ordered(const Poly& p, const MonomialOrder& ord) {
  TermVec v(p.terms().begin(), p.terms().end());
  std::sort(v.begin(), v.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  return v;
}

inline Poly from_ordered(const RingPtr& ring, TermVec v) {
  return Poly::from_terms(ring, std::move(v));
}

// a + c * m * b, all descending-sorted; single linear merge.
inline TermVec axpy(const PrimeField& fp, const MonomialOrder& ord, const TermVec& a,
                    std::size_t a_from, std::uint32_t c, const Monomial& m,
                    const TermVec& b) {
  TermVec out;
  out.reserve(a.size() - a_from + b.size());
  std::size_t i = a_from, j = 0;
  while (i < a.size() && j < b.size()) {
    Monomial bm = b[j].mono * m;
    int cmp = ord.cmp(a[i].mono, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      std::uint32_t cc = fp.mul(c, b[j].coeff);
      if (cc) out.push_back(Term{std::move(bm), cc});
      ++j;
    } else {
      std::uint32_t cc = fp.add(a[i].coeff, fp.mul(c, b[j].coeff));
      if (cc) out.push_back(Term{std::move(bm), cc});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    std::uint32_t cc = fp.mul(c, b[j].coeff);
    if (cc) out.push_back(Term{b[j].mono * m, cc});
  }
  return out;
}

struct GBElem {
  TermVec terms;  // descending, monic (leading coefficient 1)
  Monomial lt;
};

inline GBElem make_elem(const PrimeField& fp, TermVec v) {
  std::uint32_t lc = v.front().coeff;
  if (lc != 1) {
    std::uint32_t inv = fp.inv(lc);
    for (auto& t : v) t.coeff = fp.mul(t.coeff, inv);
  }
  Monomial lt = v.front().mono;
  return GBElem{std::move(v), std::move(lt)};
}

// Full normal form of `f` against `basis`; reduces every term, not just the
// head.  Divisor search order is the basis order, which is fixed, so the
// reduction path (and hence every intermediate) is deterministic.
inline TermVec reduce_full(const PrimeField& fp, const MonomialOrder& ord, TermVec f,
                           const std::vector<GBElem>& basis) {
  TermVec out;
  std::size_t head = 0;
  while (head < f.size()) {
    const Term& t = f[head];
    const GBElem* divisor = nullptr;
    for (const auto& g : basis) {
      if (g.lt.divides(t.mono)) {
        divisor = &g;
        break;
      }
    }
    if (!divisor) {
      out.push_back(t);
      ++head;
      continue;
    }
    Monomial quot = t.mono.quotient(divisor->lt);
    std::uint32_t c = fp.neg(t.coeff);
    f = axpy(fp, ord, f, head, c, quot, divisor->terms);
    head = 0;
  }
  return out;
}

// S-polynomial of two monic elements.
inline TermVec spoly(const PrimeField& fp, const MonomialOrder& ord, const GBElem& f,
                     const GBElem& g) {
  Monomial l = f.lt.lcm(g.lt);
  Monomial mf = l.quotient(f.lt);
  Monomial mg = l.quotient(g.lt);
  TermVec a;
  a.reserve(f.terms.size());
  for (const auto& t : f.terms) a.push_back(Term{t.mono * mf, t.coeff});
  return axpy(fp, ord, a, 0, fp.neg(1), mg, g.terms);
}

// Inter-reduce a generating set: repeatedly replace each element by its normal
// form against the others until a full pass changes nothing.  Collapses
// redundant generators before any S-pairs are formed.
inline std::vector<GBElem> inter_reduce(const PrimeField& fp, const MonomialOrder& ord,
                                        std::vector<GBElem> g) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      GBElem cur = std::move(g[i]);
      g.erase(g.begin() + static_cast<long>(i));
      TermVec r = reduce_full(fp, ord, TermVec(cur.terms), g);
      if (r.empty()) {
        changed = true;
        --i;
        continue;
      }
      if (r != cur.terms) changed = true;
      g.insert(g.begin() + static_cast<long>(i), make_elem(fp, std::move(r)));
    }
  }
  return g;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

// Buchberger with the Gebauer–Möller pair-update criteria and normal
// selection (smallest lcm first).  Returns the reduced Gröbner basis sorted
// by ascending leading term; unique, hence deterministic.
inline std::vector<Poly> buchberger(const RingPtr& ring, const std::vector<Poly>& gens,
                                    const MonomialOrder& ord,
                                    long long pair_budget = 2'000'000) {
  const PrimeField& fp = ring->field();
  std::vector<GBElem> g;
  for (const auto& p : gens) {
    if (p.is_zero()) continue;
    g.push_back(make_elem(fp, to_ordered(p, ord)));
  }
  if (g.empty()) return {};
  // Deterministic starting order regardless of how callers assembled gens.
  auto term_vec_less = [&ord](const TermVec& a, const TermVec& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
      int c = ord.cmp(a[i].mono, b[i].mono);
      if (c) return c < 0;
      if (a[i].coeff != b[i].coeff) return a[i].coeff < b[i].coeff;
    }
    return a.size() < b.size();
  };
  std::sort(g.begin(), g.end(), [&](const GBElem& a, const GBElem& b) {
    if (!(a.lt == b.lt)) return ord.less(a.lt, b.lt);
    return term_vec_less(a.terms, b.terms);
  });
  g = inter_reduce(fp, ord, std::move(g));

  auto pair_less = [&ord](const Pair& a, const Pair& b) {
    int c = ord.cmp(a.lcm, b.lcm);
    if (c) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);
  long long processed = 0;

  // Gebauer–Möller update: install element `t` (already in g) against
  // predecessors, pruning the existing queue and the new candidates.
  auto gm_update = [&](std::size_t t) {
    const Monomial& lt_t = g[t].lt;
    for (auto it = queue.begin(); it != queue.end();) {
      const Pair& pr = *it;
      if (lt_t.divides(pr.lcm) && !(g[pr.i].lt.lcm(lt_t) == pr.lcm) &&
          !(g[pr.j].lt.lcm(lt_t) == pr.lcm))
        it = queue.erase(it);
      else
        ++it;
    }
    std::vector<Pair> cand;
    cand.reserve(t);
    for (std::size_t i = 0; i < t; ++i) cand.push_back(Pair{i, t, g[i].lt.lcm(lt_t)});
    // Drop candidates whose lcm is a proper multiple of another candidate's.
    std::vector<bool> dead(cand.size(), false);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (dead[a]) continue;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (a == b || dead[b]) continue;
        if (cand[b].lcm.divides(cand[a].lcm) && !(cand[b].lcm == cand[a].lcm)) {
          dead[a] = true;
          break;
        }
      }
    }
    // Group equal lcms: if any member has coprime leading terms the whole
    // group's S-polynomials reduce to zero; otherwise keep one representative.
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (dead[a]) continue;
      bool coprime_seen = g[cand[a].i].lt.coprime(lt_t);
      std::size_t keep = a;
      for (std::size_t b = a + 1; b < cand.size(); ++b) {
        if (dead[b] || !(cand[b].lcm == cand[a].lcm)) continue;
        dead[b] = true;
        if (g[cand[b].i].lt.coprime(lt_t)) coprime_seen = true;
        if (cand[b].i < cand[keep].i) keep = b;
      }
      if (coprime_seen) {
        dead[a] = true;
      } else if (keep != a) {
        std::swap(cand[a], cand[keep]);
      }
    }
    for (std::size_t a = 0; a < cand.size(); ++a)
      if (!dead[a]) queue.insert(cand[a]);
  };

  for (std::size_t t = 1; t < g.size(); ++t) gm_update(t);

  while (!queue.empty()) {
    if (++processed > pair_budget ||
        static_cast<long long>(queue.size()) > pair_budget)
      throw resource_error("S-pair budget exceeded in basis computation", processed,
                           pair_budget);
    Pair pr = *queue.begin();
    queue.erase(queue.begin());
    TermVec s = spoly(fp, ord, g[pr.i], g[pr.j]);
    TermVec r = reduce_full(fp, ord, std::move(s), g);
    if (r.empty()) continue;
    g.push_back(make_elem(fp, std::move(r)));
    gm_update(g.size() - 1);
  }

  // Minimalize: drop elements whose leading term is properly divisible by
  // another's (equal leading terms cannot occur after full reduction).
  std::vector<bool> redundant(g.size(), false);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      if (g[j].lt.divides(g[i].lt) && !(g[j].lt == g[i].lt)) {
        redundant[i] = true;
        break;
      }
    }
  std::vector<GBElem> minimal;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!redundant[i]) minimal.push_back(std::move(g[i]));
  std::sort(minimal.begin(), minimal.end(),
            [&](const GBElem& a, const GBElem& b) { return ord.less(a.lt, b.lt); });
  // Tail-reduce each element against the others for the reduced basis.
  std::vector<Poly> out;
  out.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<GBElem> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    TermVec r = reduce_full(fp, ord, minimal[i].terms, others);
    out.push_back(from_ordered(ring, std::move(r)));
  }
  return out;
}

}  // namespace detail

// Ideal in the ambient polynomial ring.  Value-semantic; the Gröbner cache is
// shared across copies and behaves as write-once per monomial order (the
// reduced basis is unique, so racing writers would store identical values).
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Poly> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)),
        cache_(std::make_shared<Cache>()) {
    if (!ring_) throw usage_error("ideal without an ambient ring");
    for (const auto& p : gens_)
      if (p.ring().get() != ring_.get() && !p.ring()->compatible(*ring_))
        throw usage_error("ideal generator from an incompatible ring");
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }

  std::shared_ptr<const std::vector<Poly>> basis(const MonomialOrder& ord) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->bases.find(ord);
    if (it != cache_->bases.end()) return it->second;
    auto gb = std::make_shared<const std::vector<Poly>>(
        detail::buchberger(ring_, gens_, ord, pair_budget_));
    cache_->bases.emplace(ord, gb);
    return gb;
  }

  MonomialOrder default_order() const { return MonomialOrder::grevlex(ring_->nvars()); }

  bool is_zero() const {
    for (const auto& g : gens_)
      if (!g.is_zero()) return false;
    return true;
  }

  bool is_unit(const MonomialOrder& ord) const {
    auto gb = basis(ord);
    return gb->size() == 1 && (*gb)[0].is_constant() && !(*gb)[0].is_zero();
  }

  void set_pair_budget(long long b) { pair_budget_ = b; }
  long long pair_budget() const { return pair_budget_; }

 private:
  struct Cache {
    std::mutex mu;
    std::map<MonomialOrder, std::shared_ptr<const std::vector<Poly>>> bases;
  };

  RingPtr ring_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
  long long pair_budget_ = 2'000'000;
};

namespace detail {

inline std::vector<GBElem> as_elems(const PrimeField& fp, const MonomialOrder& ord,
                                    const std::vector<Poly>& gb) {
  std::vector<GBElem> v;
  v.reserve(gb.size());
  for (const auto& p : gb) v.push_back(make_elem(fp, to_ordered(p, ord)));
  return v;
}

}  // namespace detail

inline Poly normal_form(const Poly& f, const Ideal& I, const MonomialOrder& ord) {
  auto gb = I.basis(ord);
  auto elems = detail::as_elems(I.ring()->field(), ord, *gb);
  detail::TermVec r = detail::reduce_full(I.ring()->field(), ord,
                                          detail::to_ordered(f, ord), elems);
  return detail::from_ordered(I.ring(), std::move(r));
}

inline Poly normal_form(const Poly& f, const Ideal& I) {
  return normal_form(f, I, I.default_order());
}

inline bool ideal_member(const Poly& f, const Ideal& I, const MonomialOrder& ord) {
  if (f.is_zero()) return true;
  return normal_form(f, I, ord).is_zero();
}

inline bool ideal_member(const Poly& f, const Ideal& I) {
  return ideal_member(f, I, I.default_order());
}

// I contains J, i.e. J is a subset of I.
inline bool ideal_contains(const Ideal& I, const Ideal& J, const MonomialOrder& ord) {
  if (I.ring().get() != J.ring().get() && !I.ring()->compatible(*J.ring()))
    throw usage_error("ideals from incompatible rings");
  for (const auto& g : J.generators())
    if (!ideal_member(g, I, ord)) return false;
  return true;
}

inline bool ideal_contains(const Ideal& I, const Ideal& J) {
  return ideal_contains(I, J, I.default_order());
}

inline bool ideal_equal(const Ideal& I, const Ideal& J) {
  return ideal_contains(I, J) && ideal_contains(J, I);
}

inline Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  std::vector<Poly> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

inline Ideal ideal_sum(const Ideal& I, const Poly& f) {
  std::vector<Poly> gens = I.generators();
  gens.push_back(f);
  return Ideal(I.ring(), std::move(gens));
}

inline Ideal bracket_power(const Ideal& I, std::uint64_t q) {
  std::vector<Poly> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(g.frobenius_power(q));
  return Ideal(I.ring(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Staircase machinery: counting and enumerating monomials outside the
// leading-term ideal.

namespace detail {

inline std::vector<Monomial> leading_monomials(const Ideal& I,
                                               const MonomialOrder& ord) {
  auto gb = I.basis(ord);
  std::vector<Monomial> lts;
  lts.reserve(gb->size());
  for (const auto& p : *gb) lts.push_back(p.leading_term(ord).mono);
  return lts;
}

// Requires every variable in [k, n) to carry a pure power among `gens`
// projected to those coordinates; verified by callers via
// require_zero_dimensional.  Counts lattice points under the staircase.
//
// Two-variable base case: sort the minimal staircase corners and sum the
// rectangular strips; general case: split on the distinct exponents of the
// first variable.
inline long long staircase_count_rec(std::vector<Monomial> gens, std::size_t k,
                                     std::size_t n) {
  for (const auto& m : gens) {
    bool one = true;
    for (std::size_t i = k; i < n; ++i)
      if (m.e[i]) {
        one = false;
        break;
      }
    if (one) return 0;  // unit ideal in the remaining variables
  }
  if (n - k == 1) {
    std::uint32_t mn = 0xffffffffu;
    for (const auto& m : gens) mn = std::min(mn, m.e[k]);
    return static_cast<long long>(mn);
  }
  if (n - k == 2) {
    // Minimal corners sorted by first exponent give a staircase with strictly
    // decreasing second exponents; sum the rectangular strips between corners.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pts;
    pts.reserve(gens.size());
    for (const auto& m : gens) pts.push_back({m.e[k], m.e[k + 1]});
    std::sort(pts.begin(), pts.end());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> stair;
    std::uint32_t best = 0xffffffffu;
    for (const auto& pc : pts) {
      if (pc.second < best) {
        stair.push_back(pc);
        best = pc.second;
      }
    }
    long long total = 0;
    for (std::size_t i = 0; i + 1 < stair.size(); ++i)
      total += static_cast<long long>(stair[i + 1].first - stair[i].first) *
               stair[i].second;
    // The first corner has first-exponent 0 and the last has second-exponent 0
    // (pure powers survive every projection), so the outer strips are empty.
    return total;
  }
  std::vector<std::uint32_t> cuts;
  cuts.push_back(0);
  for (const auto& m : gens) cuts.push_back(m.e[k]);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  long long total = 0;
  for (std::size_t ci = 0; ci + 1 < cuts.size(); ++ci) {
    std::vector<Monomial> sub;
    for (const auto& m : gens)
      if (m.e[k] <= cuts[ci]) sub.push_back(m);
    if (sub.empty()) continue;
    total += static_cast<long long>(cuts[ci + 1] - cuts[ci]) *
             staircase_count_rec(std::move(sub), k + 1, n);
  }
  // Exponents at or above the largest cut contribute nothing: by then the
  // pure power of variable k has entered the sub-list, emptying the strip.
  return total;
}

}  // namespace detail

// Throws when some variable has no pure power among the leading terms, naming
// the first offender in declaration order.  A basis containing a constant
// (the unit ideal) passes vacuously: the staircase is empty.
inline void require_zero_dimensional(const PolyRing& ring,
                                     const std::vector<Monomial>& lts) {
  for (const auto& m : lts)
    if (m.is_one()) return;
  for (std::size_t v = 0; v < ring.nvars(); ++v) {
    bool pure = false;
    for (const auto& m : lts) {
      if (m.e[v] == 0) continue;
      bool only_v = true;
      for (std::size_t w = 0; w < ring.nvars(); ++w)
        if (w != v && m.e[w]) {
          only_v = false;
          break;
        }
      if (only_v) {
        pure = true;
        break;
      }
    }
    if (!pure) throw dimension_error(ring.var_names()[v]);
  }
}

inline bool is_zero_dimensional(const Ideal& I, const MonomialOrder& ord) {
  try {
    require_zero_dimensional(*I.ring(), detail::leading_monomials(I, ord));
    return true;
  } catch (const dimension_error&) {
    return false;
  }
}

inline bool is_zero_dimensional(const Ideal& I) {
  return is_zero_dimensional(I, I.default_order());
}

// Number of standard monomials = length of the Artinian quotient.
inline long long staircase_length(const Ideal& I, const MonomialOrder& ord) {
  auto lts = detail::leading_monomials(I, ord);
  require_zero_dimensional(*I.ring(), lts);
  for (const auto& m : lts)
    if (m.is_one()) return 0;
  return detail::staircase_count_rec(lts, 0, I.ring()->nvars());
}

inline long long staircase_length(const Ideal& I) {
  return staircase_length(I, I.default_order());
}

namespace detail {

inline void enumerate_rec(const std::vector<Monomial>& lts, std::size_t k,
                          Monomial& cur, std::vector<Monomial>& out,
                          long long cap) {
  if (k == cur.nvars()) {
    out.push_back(cur);
    if (static_cast<long long>(out.size()) > cap)
      throw resource_error("standard-monomial basis too large to materialize",
                           static_cast<long long>(out.size()), cap);
    return;
  }
  for (std::uint32_t e = 0;; ++e) {
    cur.e[k] = e;
    // If the partial monomial (remaining exponents zero) is already divisible
    // by a leading term, every extension is too: stop raising this exponent.
    bool dead = false;
    for (const auto& m : lts) {
      bool div = true;
      for (std::size_t i = 0; i < cur.nvars(); ++i) {
        std::uint32_t have = i < k ? cur.e[i] : (i == k ? e : 0);
        if (m.e[i] > have) {
          div = false;
          break;
        }
      }
      if (div) {
        dead = true;
        break;
      }
    }
    if (dead) break;
    enumerate_rec(lts, k + 1, cur, out, cap);
  }
  cur.e[k] = 0;
}

}  // namespace detail

// Materialized standard monomials, sorted in the structural order (same order
// Poly uses for its terms).  See staircase_length for the count-only path.
inline std::vector<Monomial> standard_monomial_basis(const Ideal& I,
                                                     const MonomialOrder& ord,
                                                     long long cap = 1 << 20) {
  auto lts = detail::leading_monomials(I, ord);
  require_zero_dimensional(*I.ring(), lts);
  for (const auto& m : lts)
    if (m.is_one()) return {};
  std::vector<Monomial> out;
  Monomial cur(I.ring()->nvars());
  detail::enumerate_rec(lts, 0, cur, out, cap);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Krull dimension of S/I via the leading-term ideal: the largest number of
// variables meeting the support of no leading monomial.

inline int krull_dim(const Ideal& I, const MonomialOrder& ord) {
  auto lts = detail::leading_monomials(I, ord);
  if (lts.empty()) return static_cast<int>(I.ring()->nvars());
  for (const auto& m : lts)
    if (m.is_one()) return -1;  // unit ideal: empty spectrum
  std::size_t n = I.ring()->nvars();
  if (n > 24) throw resource_error("too many variables for dimension search",
                                   static_cast<long long>(n), 24);
  std::vector<std::uint32_t> supports;
  supports.reserve(lts.size());
  for (const auto& m : lts) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m.e[i]) s |= (1u << i);
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t u = 0; u < (1u << n); ++u) {
    bool hit = false;
    for (auto s : supports)
      if ((s & ~u) == 0) {
        hit = true;
        break;
      }
    if (!hit) best = std::max(best, __builtin_popcount(u));
  }
  return best;
}

inline int krull_dim(const Ideal& I) { return krull_dim(I, I.default_order()); }

// ---------------------------------------------------------------------------
// Elimination: extend the ring with one auxiliary variable, first in a block
// elimination order.

namespace detail {

struct ExtendedRing {
  RingPtr ring;        // aux variable at index 0, originals shifted by one
  MonomialOrder order; // block elimination, aux block first
};

inline ExtendedRing extend_with_aux(const RingPtr& base) {
  std::string aux = "t_";
  while (base->var_index(aux) >= 0) aux += "_";
  std::vector<std::string> vars;
  vars.reserve(base->nvars() + 1);
  vars.push_back(aux);
  for (const auto& v : base->var_names()) vars.push_back(v);
  auto ring = std::make_shared<const PolyRing>(base->field(), std::move(vars),
                                               base->term_budget());
  return ExtendedRing{ring, MonomialOrder::block_elimination(base->nvars() + 1, 1)};
}

inline Poly promote(const RingPtr& ext, const Poly& p) {
  std::vector<Term> terms;
  terms.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    Monomial m(ext->nvars());
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) m.e[i + 1] = t.mono.e[i];
    terms.push_back(Term{std::move(m), t.coeff});
  }
  return Poly::from_terms(ext, std::move(terms));
}

// Restrict an extended-ring polynomial with no aux occurrences back down.
inline Poly restrict_poly(const RingPtr& base, const Poly& p) {
  std::vector<Term> terms;
  terms.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    Monomial m(base->nvars());
    for (std::size_t i = 0; i < base->nvars(); ++i) m.e[i] = t.mono.e[i + 1];
    terms.push_back(Term{std::move(m), t.coeff});
  }
  return Poly::from_terms(base, std::move(terms));
}

inline bool uses_aux(const Poly& p) {
  for (const auto& t : p.terms())
    if (t.mono.e[0]) return true;
  return false;
}

}  // namespace detail

// I ∩ J by the single-auxiliary-variable trick: eliminate t from t·I + (1−t)·J.
inline Ideal intersect(const Ideal& I, const Ideal& J) {
  auto ext = detail::extend_with_aux(I.ring());
  Poly t = Poly::variable(ext.ring, 0);
  Poly one_minus_t = Poly::constant(ext.ring, 1) - t;
  std::vector<Poly> gens;
  for (const auto& g : I.generators()) gens.push_back(t * detail::promote(ext.ring, g));
  for (const auto& g : J.generators())
    gens.push_back(one_minus_t * detail::promote(ext.ring, g));
  Ideal E(ext.ring, std::move(gens));
  E.set_pair_budget(I.pair_budget());
  auto gb = E.basis(ext.order);
  std::vector<Poly> down;
  for (const auto& p : *gb)
    if (!detail::uses_aux(p)) down.push_back(detail::restrict_poly(I.ring(), p));
  return Ideal(I.ring(), std::move(down));
}

// Exact division g / f when f divides g; remainder must vanish.
inline Poly divide_exact(const Poly& g, const Poly& f) {
  if (f.is_zero()) throw usage_error("division by the zero polynomial");
  const RingPtr& ring = g.ring();
  const PrimeField& fp = ring->field();
  MonomialOrder ord = MonomialOrder::grevlex(ring->nvars());
  detail::TermVec work = detail::to_ordered(g, ord);
  detail::TermVec divisor = detail::to_ordered(f, ord);
  const Monomial& lt = divisor.front().mono;
  std::uint32_t lc_inv = fp.inv(divisor.front().coeff);
  std::vector<Term> quot;
  while (!work.empty()) {
    const Term& t = work.front();
    if (!lt.divides(t.mono))
      throw usage_error("inexact polynomial division");
    Monomial qm = t.mono.quotient(lt);
    std::uint32_t qc = fp.mul(t.coeff, lc_inv);
    quot.push_back(Term{qm, qc});
    work = detail::axpy(fp, ord, work, 0, fp.neg(qc), qm, divisor);
  }
  return Poly::from_terms(ring, std::move(quot));
}

// ---------------------------------------------------------------------------
// Colon ideals.  Zero-dimensional inputs use linear algebra over the
// standard-monomial basis; general inputs fall back to elimination.

namespace detail {

// Sparse columns of the multiplication-by-g map on S/I over `basis`.
inline std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>>
mult_columns(const Ideal& I, const MonomialOrder& ord,
             const std::vector<Monomial>& basis, const Poly& g) {
  const RingPtr& ring = I.ring();
  const PrimeField& fp = ring->field();
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  index.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  auto gb = I.basis(ord);
  auto elems = as_elems(fp, ord, *gb);
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> cols(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Poly prod = g.times_term(basis[j], 1);
    TermVec nf = reduce_full(fp, ord, to_ordered(prod, ord), elems);
    auto& col = cols[j];
    col.reserve(nf.size());
    for (const auto& t : nf) {
      auto it = index.find(t.mono);
      if (it == index.end())
        throw usage_error("normal form left the standard-monomial basis");
      col.push_back({it->second, t.coeff});
    }
    std::sort(col.begin(), col.end());
  }
  return cols;
}

// Kernel of a map whose columns each have at most one nonzero entry: group
// columns by target row; each group of size k contributes k−1 two-term kernel
// vectors, and empty columns contribute unit vectors.  Emitted in ascending
// column order of the vector's free coordinate.
inline std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>>
singleton_kernel(const PrimeField& fp,
                 const std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>>&
                     cols) {
  std::unordered_map<std::size_t, std::size_t> anchor;  // target row -> column
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> kernel;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].empty()) {
      kernel.push_back({{j, 1}});
      continue;
    }
    std::size_t row = cols[j][0].first;
    std::uint32_t c = cols[j][0].second;
    auto it = anchor.find(row);
    if (it == anchor.end()) {
      anchor.emplace(row, j);
      continue;
    }
    std::size_t a = it->second;
    std::uint32_t ca = cols[a][0].second;
    // c·e_j − (c/ca)·ca·e_a has image zero: coefficient on e_a is −c/ca.
    kernel.push_back({{a, fp.neg(fp.mul(c, fp.inv(ca)))}, {j, 1}});
  }
  return kernel;
}

inline Poly vector_to_poly(const RingPtr& ring, const std::vector<Monomial>& basis,
                           const std::vector<std::pair<std::size_t, std::uint32_t>>& v) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& [i, c] : v) terms.push_back(Term{basis[i], c});
  return Poly::from_terms(ring, std::move(terms));
}

constexpr std::size_t kDenseKernelCap = 2048;

// Kernel vectors of the stacked multiplication maps by each element of `gs`
// on S/I, as polynomials.  Used by both colon paths and the socle.
inline std::vector<Poly> annihilator_kernel(const Ideal& I, const MonomialOrder& ord,
                                            const std::vector<Monomial>& basis,
                                            const std::vector<Poly>& gs) {
  const RingPtr& ring = I.ring();
  const PrimeField& fp = ring->field();
  std::size_t n = basis.size();
  if (n == 0) return {};
  std::vector<std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>>> all;
  all.reserve(gs.size());
  bool singleton = gs.size() == 1;
  for (const auto& g : gs) {
    all.push_back(mult_columns(I, ord, basis, g));
    if (singleton)
      for (const auto& col : all.back())
        if (col.size() > 1) singleton = false;
  }
  std::vector<Poly> out;
  if (singleton) {
    auto kern = singleton_kernel(fp, all[0]);
    out.reserve(kern.size());
    for (const auto& v : kern) out.push_back(vector_to_poly(ring, basis, v));
    return out;
  }
  if (n > kDenseKernelCap)
    throw resource_error("quotient too large for dense kernel computation",
                         static_cast<long long>(n),
                         static_cast<long long>(kDenseKernelCap));
  DenseMatrix M(fp, n * gs.size(), n);
  for (std::size_t k = 0; k < all.size(); ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [i, c] : all[k][j]) M.set(k * n + i, j, c);
  auto kern = M.kernel_basis();
  out.reserve(kern.size());
  for (const auto& v : kern) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < n; ++i)
      if (v[i]) terms.push_back(Term{basis[i], v[i]});
    out.push_back(Poly::from_terms(ring, std::move(terms)));
  }
  return out;
}

}  // namespace detail

// (I : f) = { r : r·f ∈ I }.
inline Ideal colon(const Ideal& I, const Poly& f, const MonomialOrder& ord) {
  if (f.is_zero())
    throw usage_error("colon by the zero polynomial is undefined");
  if (f.is_constant()) return I;
  if (is_zero_dimensional(I, ord)) {
    auto basis = standard_monomial_basis(I, ord);
    auto kern = detail::annihilator_kernel(I, ord, basis, {f});
    std::vector<Poly> gens = I.generators();
    gens.insert(gens.end(), kern.begin(), kern.end());
    Ideal out(I.ring(), std::move(gens));
    out.set_pair_budget(I.pair_budget());
    return out;
  }
  // General path: (I : f) = (I ∩ (f)) / f, computed by elimination.
  Ideal F(I.ring(), {f});
  Ideal meet = intersect(I, F);
  std::vector<Poly> gens;
  gens.reserve(meet.generators().size());
  for (const auto& g : meet.generators())
    if (!g.is_zero()) gens.push_back(divide_exact(g, f));
  if (gens.empty()) gens.push_back(Poly::zero(I.ring()));
  Ideal out(I.ring(), std::move(gens));
  out.set_pair_budget(I.pair_budget());
  return out;
}

inline Ideal colon(const Ideal& I, const Poly& f) {
  return colon(I, f, I.default_order());
}

// (I : J) = ∩_{g ∈ gens(J)} (I : g); the empty generator list yields (1).
inline Ideal colon_ideal(const Ideal& I, const Ideal& J, const MonomialOrder& ord) {
  std::vector<Poly> gs;
  for (const auto& g : J.generators())
    if (!g.is_zero()) gs.push_back(g);
  if (gs.empty()) return Ideal(I.ring(), {Poly::constant(I.ring(), 1)});
  if (is_zero_dimensional(I, ord)) {
    auto basis = standard_monomial_basis(I, ord);
    auto kern = detail::annihilator_kernel(I, ord, basis, gs);
    std::vector<Poly> gens = I.generators();
    gens.insert(gens.end(), kern.begin(), kern.end());
    Ideal out(I.ring(), std::move(gens));
    out.set_pair_budget(I.pair_budget());
    return out;
  }
  Ideal acc = colon(I, gs[0], ord);
  for (std::size_t i = 1; i < gs.size(); ++i)
    acc = intersect(acc, colon(I, gs[i], ord));
  return acc;
}

inline Ideal colon_ideal(const Ideal& I, const Ideal& J) {
  return colon_ideal(I, J, I.default_order());
}

// (I : f^n) without materializing f^n: factor n in base p, so each colon step
// divides by (f^{p^i})^{d_i}; Frobenius powers keep the term count of f, and
// the digit powers stay small.  Colons compose: ((I:a):b) = (I:ab).
inline Ideal colon_by_factored_power(const Ideal& I, const Poly& f, long long n,
                                     const MonomialOrder& ord) {
  if (n < 0) throw usage_error("colon exponent must be non-negative");
  if (n == 0) return I;
  if (f.is_zero())
    throw usage_error("colon by the zero polynomial is undefined");
  const std::uint32_t p = I.ring()->field().p();
  Ideal acc = I;
  std::uint64_t q = 1;
  std::uint64_t rest = static_cast<std::uint64_t>(n);
  while (rest) {
    std::uint64_t digit = rest % p;
    if (digit) {
      Poly factor = f.frobenius_power(q).pow(digit);
      acc = colon(acc, factor, ord);
    }
    rest /= p;
    q *= p;
  }
  return acc;
}

inline Ideal colon_by_factored_power(const Ideal& I, const Poly& f, long long n) {
  return colon_by_factored_power(I, f, n, I.default_order());
}

}  // namespace fsig
