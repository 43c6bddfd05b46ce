#pragma once

#include <cstdint>
#include <vector>

#include "fsig/errors.hpp"
#include "fsig/ideal.hpp"

namespace fsig {

namespace detail {

// p^e as a long long with an overflow guard.
inline long long checked_prime_power(std::uint32_t p, long long e) {
  if (e < 0) throw usage_error("exponent of the characteristic must be non-negative");
  long long q = 1;
  for (long long i = 0; i < e; ++i) {
    if (q > (1LL << 40) / p)
      throw resource_error("prime power exceeds the supported range", e, 40);
    q *= p;
  }
  return q;
}

// Product with an overflow guard, for lengths and bounds.
inline long long checked_mul(long long a, long long b) {
  __int128 r = static_cast<__int128>(a) * b;
  if (r > (__int128)0x7fffffffffffffffLL || r < -(__int128)0x7fffffffffffffffLL)
    throw resource_error("length arithmetic overflowed", a, b);
  return static_cast<long long>(r);
}

// The normal form of f modulo the monomial ideal (x_1^q, ..., x_n^q): drop
// every term divisible by some x_i^q.
inline Poly drop_bracket_multiples(const Poly& f, long long q) {
  std::vector<Term> kept;
  for (const auto& t : f.terms()) {
    bool survives = true;
    for (std::uint32_t ei : t.mono.e)
      if (static_cast<long long>(ei) >= q) {
        survives = false;
        break;
      }
    if (survives) kept.push_back(t);
  }
  return Poly::from_terms(f.ring(), std::move(kept));
}

// f^m reduced modulo (x_1^q, ..., x_n^q).  The power is assembled from the
// base-p digits of m, so every factor is a Frobenius twist of a small power
// of f (term-count preserving) and each intermediate product is reduced
// before the next multiplication.  Reducing early is sound: a term divisible
// by x_i^q keeps that divisibility under multiplication by anything.
inline Poly power_mod_bracket(const Poly& f, long long m, long long q) {
  if (m < 0) throw usage_error("negative exponent in power computation");
  const std::uint32_t p = f.ring()->field().p();
  Poly acc = Poly::constant(f.ring(), 1);
  if (m == 0) return acc;
  long long rest = m;
  long long frob = 1;  // p^i for the current digit
  while (rest > 0) {
    long long digit = rest % p;
    if (digit > 0) {
      Poly factor = f.pow(digit).frobenius_power(frob);
      acc = drop_bracket_multiples(acc * factor, q);
      if (acc.is_zero()) return acc;
    }
    rest /= p;
    if (rest > 0) frob = checked_mul(frob, p);
  }
  return acc;
}

}  // namespace detail

// Splitting number of the hypersurface S/(f) at q = p^e, by the direct
// length formula a_q = λ(S/(m^[q] : f^{q-1})), evaluated as
// q^n − λ(S/(m^[q] + (f^{q-1}))).  This is an independent route to the same
// quantity the stabilized parameter-family computation produces; the two are
// cross-checked against each other.  The caller asserts that f is squarefree
// (the quotient is reduced).
inline long long hypersurface_splitting_number(const RingPtr& S, const Poly& f,
                                               int e) {
  if (e < 1) throw usage_error("Frobenius exponent e must be at least 1");
  if (f.is_zero()) throw usage_error("hypersurface relation must be nonzero");
  if (f.is_constant())
    throw usage_error("hypersurface relation must be nonconstant");
  const std::uint32_t p = S->field().p();
  long long q = detail::checked_prime_power(p, e);
  long long qn = 1;
  for (std::size_t i = 0; i < S->nvars(); ++i) qn = detail::checked_mul(qn, q);

  Poly g = detail::power_mod_bracket(f, q - 1, q);
  std::vector<Poly> gens;
  gens.reserve(S->nvars() + 1);
  for (std::size_t i = 0; i < S->nvars(); ++i)
    gens.push_back(Poly::variable(S, i).pow(q));
  if (!g.is_zero()) gens.push_back(g);
  long long len = staircase_length(Ideal(S, std::move(gens)));
  return qn - len;
}

}  // namespace fsig
