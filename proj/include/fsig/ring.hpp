#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsig/artinian.hpp"
#include "fsig/errors.hpp"
#include "fsig/expr.hpp"
#include "fsig/ideal.hpp"

namespace fsig {

// A graded quotient R = S/(relations) of a polynomial ring over F_p, treated
// as local at the irrelevant maximal ideal.  Lengths, socles, and splitting
// data for R are computed in the ambient ring S by lifting ideals across the
// presentation.  alpha is carried as a formal parameter: it is 0 for F_p
// coefficients, but the rescaling formulas downstream accept any value.
class RingPresentation {
 public:
  RingPresentation(RingPtr ambient, std::vector<Poly> relations, int d,
                   int alpha, MonomialOrder order, bool reduced)
      : ambient_(std::move(ambient)),
        relations_(std::move(relations)),
        rel_ideal_(ambient_, relations_),
        d_(d),
        alpha_(alpha),
        order_(std::move(order)),
        reduced_(reduced) {
    if (alpha_ < 0) throw validation_error("alpha must be non-negative");
    if (d_ < 0)
      throw validation_error("the presented ring is the zero ring: the "
                             "relations generate the unit ideal");
    if (order_.nvars() != ambient_->nvars())
      throw usage_error("monomial order arity does not match the ring");
  }

  const RingPtr& ambient() const { return ambient_; }
  const PrimeField& field() const { return ambient_->field(); }
  std::uint32_t p() const { return ambient_->field().p(); }
  std::size_t nvars() const { return ambient_->nvars(); }
  const std::vector<Poly>& relations() const { return relations_; }
  const Ideal& relation_ideal() const { return rel_ideal_; }
  int dim() const { return d_; }
  int alpha() const { return alpha_; }
  const MonomialOrder& order() const { return order_; }
  bool reduced() const { return reduced_; }
  bool gorenstein_checked() const { return gorenstein_checked_; }
  void mark_gorenstein_checked() { gorenstein_checked_ = true; }

  // The ideal (relations) + (gens) of the ambient ring, presenting gens·R.
  Ideal lift(std::vector<Poly> gens) const {
    for (const auto& r : relations_) gens.push_back(r);
    return Ideal(ambient_, std::move(gens));
  }

  Ideal lift(const Ideal& J) const { return lift(J.generators()); }

  // The irrelevant maximal ideal (x_1, ..., x_n) of the ambient ring.
  Ideal maximal_ideal() const {
    std::vector<Poly> vars;
    vars.reserve(ambient_->nvars());
    for (std::size_t i = 0; i < ambient_->nvars(); ++i)
      vars.push_back(Poly::variable(ambient_, i));
    return Ideal(ambient_, std::move(vars));
  }

 private:
  RingPtr ambient_;
  std::vector<Poly> relations_;
  Ideal rel_ideal_;
  int d_;
  int alpha_;
  MonomialOrder order_;
  bool reduced_;
  bool gorenstein_checked_ = false;
};

// Core constructor from parsed relations: drops zero relations, rejects the
// unit ideal, computes the Krull dimension, and checks it against a declared
// value when one is given.
inline RingPresentation build_ring(RingPtr ambient, std::vector<Poly> relations,
                                   std::optional<int> declared_d = std::nullopt,
                                   int alpha = 0,
                                   std::optional<MonomialOrder> order = std::nullopt,
                                   bool reduced = false) {
  std::vector<Poly> rels;
  rels.reserve(relations.size());
  for (auto& r : relations)
    if (!r.is_zero()) rels.push_back(std::move(r));
  MonomialOrder ord = order ? *order
                            : MonomialOrder::grevlex(
                                  static_cast<std::uint32_t>(ambient->nvars()));
  Ideal I(ambient, rels);
  int d = krull_dim(I, ord);
  if (d < 0)
    throw validation_error("the relations generate the unit ideal; the "
                           "presented ring is the zero ring");
  if (declared_d && *declared_d != d)
    throw validation_error("declared dimension " + std::to_string(*declared_d) +
                           " does not match the computed dimension " +
                           std::to_string(d));
  return RingPresentation(std::move(ambient), std::move(rels), d, alpha,
                          std::move(ord), reduced);
}

// Convenience constructor from expression strings.
inline RingPresentation build_ring(std::uint32_t p,
                                   const std::vector<std::string>& variables,
                                   const std::vector<std::string>& relation_exprs,
                                   std::optional<int> declared_d = std::nullopt,
                                   int alpha = 0, bool reduced = false,
                                   long long term_budget = 2'000'000) {
  auto ambient = std::make_shared<const PolyRing>(PrimeField(p), variables,
                                                  term_budget);
  std::vector<Poly> rels;
  rels.reserve(relation_exprs.size());
  for (const auto& s : relation_exprs) rels.push_back(parse_poly(ambient, s));
  return build_ring(std::move(ambient), std::move(rels), declared_d, alpha,
                    std::nullopt, reduced);
}

// λ(R/JR) for an ideal J of the ambient ring: the number of standard
// monomials of (relations) + J.
inline long long length(const RingPresentation& R, const Ideal& J) {
  return staircase_length(R.lift(J), R.order());
}

inline long long length(const RingPresentation& R, std::vector<Poly> gens) {
  return staircase_length(R.lift(std::move(gens)), R.order());
}

// Basis representatives, in normal form, of the socle (J :_R m)/J of the
// Artinian quotient R/JR.
inline std::vector<Poly> socle(const RingPresentation& R, const Ideal& J) {
  return socle_representatives(R.lift(J), R.order());
}

// The socle generator of R modulo a parameter ideal, when the socle is
// one-dimensional; rejects parameter ideals that are not irreducible.
inline Poly socle_generator(const RingPresentation& R, const Ideal& sop_ideal) {
  return socle_generator_of_quotient(R.lift(sop_ideal), R.order());
}

}  // namespace fsig
