#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fsig/errors.hpp"
#include "fsig/ideal.hpp"

namespace fsig {

// Monomial basis of a finite-dimensional quotient S/I: exactly the monomials
// outside the leading-term ideal of a Groebner basis of I.  Finite, closed
// under divisibility, and of cardinality equal to the length of the quotient.
class ArtinianBasis {
 public:
  ArtinianBasis(RingPtr ring, MonomialOrder ord, std::vector<Monomial> monos,
                std::shared_ptr<const std::vector<Poly>> groebner)
      : ring_(std::move(ring)),
        ord_(std::move(ord)),
        monomials_(std::move(monos)),
        groebner_(std::move(groebner)) {
    index_.reserve(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i)
      index_.emplace(monomials_[i], i);
  }

  const RingPtr& ring() const { return ring_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const std::vector<Poly>& groebner() const { return *groebner_; }
  long long length() const { return static_cast<long long>(monomials_.size()); }

  // Position of a monomial in the basis, or -1 when it lies in the
  // leading-term ideal.
  long long index_of(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : static_cast<long long>(it->second);
  }

  // Coordinates of the normal form of f over this basis.
  std::vector<std::uint32_t> coordinates(const Poly& f) const {
    const PrimeField& fp = ring_->field();
    auto elems = detail::as_elems(fp, ord_, *groebner_);
    detail::TermVec r =
        detail::reduce_full(fp, ord_, detail::to_ordered(f, ord_), elems);
    Poly nf = detail::from_ordered(ring_, std::move(r));
    std::vector<std::uint32_t> v(monomials_.size(), 0);
    for (const auto& t : nf.terms()) {
      long long i = index_of(t.mono);
      if (i < 0) throw usage_error("normal form left the standard-monomial basis");
      v[static_cast<std::size_t>(i)] = t.coeff;
    }
    return v;
  }

 private:
  RingPtr ring_;
  MonomialOrder ord_;
  std::vector<Monomial> monomials_;
  std::shared_ptr<const std::vector<Poly>> groebner_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

inline ArtinianBasis standard_monomials(const Ideal& I, const MonomialOrder& ord) {
  auto monos = standard_monomial_basis(I, ord);
  return ArtinianBasis(I.ring(), ord, std::move(monos), I.basis(ord));
}

inline ArtinianBasis standard_monomials(const Ideal& I) {
  return standard_monomials(I, I.default_order());
}

// Basis representatives, in normal form, of the annihilator of the maximal
// ideal (x_1, ..., x_n) in the Artinian quotient S/I.  The count is the socle
// dimension (the Cohen-Macaulay type when I is a parameter ideal).
inline std::vector<Poly> socle_representatives(const Ideal& I,
                                               const MonomialOrder& ord) {
  const RingPtr& ring = I.ring();
  auto basis = standard_monomial_basis(I, ord);
  if (basis.empty()) return {};
  std::vector<Poly> vars;
  vars.reserve(ring->nvars());
  for (std::size_t i = 0; i < ring->nvars(); ++i)
    vars.push_back(Poly::variable(ring, i));
  return detail::annihilator_kernel(I, ord, basis, vars);
}

inline std::vector<Poly> socle_representatives(const Ideal& I) {
  return socle_representatives(I, I.default_order());
}

// The unique (up to scalar) socle representative of S/I when the socle is
// one-dimensional.  Deterministic normalization: among the kernel basis
// vectors, take the one whose leading monomial is grevlex-largest, made
// monic.  A socle of any other dimension means the ideal is not irreducible
// (the quotient is not Gorenstein at this ideal) and is rejected.
inline Poly socle_generator_of_quotient(const Ideal& I, const MonomialOrder& ord) {
  auto reps = socle_representatives(I, ord);
  if (reps.size() != 1) {
    std::string msg =
        "socle dimension is " + std::to_string(reps.size()) +
        ", not 1: the parameter ideal is not irreducible, so the quotient "
        "ring is not Gorenstein and the splitting-number family cannot be "
        "built from it";
    throw validation_error(msg);
  }
  MonomialOrder grevlex = MonomialOrder::grevlex(static_cast<std::uint32_t>(
      I.ring()->nvars()));
  const Term& lt = reps[0].leading_term(grevlex);
  if (lt.coeff == 1) return reps[0];
  return reps[0].scale(I.ring()->field().inv(lt.coeff));
}

inline Poly socle_generator_of_quotient(const Ideal& I) {
  return socle_generator_of_quotient(I, I.default_order());
}

}  // namespace fsig
