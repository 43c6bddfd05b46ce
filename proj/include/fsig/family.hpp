#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fsig/errors.hpp"
#include "fsig/ring.hpp"

namespace fsig {

// The family of irreducible parameter ideals attached to a system of
// parameters x_1, ..., x_d of a Gorenstein quotient: I_t = (x_1^t, ..., x_d^t)
// together with socle representatives u_t = (x_1 ... x_d)^{t-1} * u_1, where
// u_1 generates the socle of R/I_1.  Multiplication by the parameter product
// carries the socle of R/I_1 into the socle of R/I_t, so each I_t stays
// irreducible and the quotients form a direct system cofinal with powers of
// the maximal ideal.
class IrreducibleFamily {
 public:
  IrreducibleFamily(std::vector<Poly> sop, Poly u1)
      : sop_(std::move(sop)), u1_(std::move(u1)) {}

  const std::vector<Poly>& sop() const { return sop_; }
  const Poly& u1() const { return u1_; }

  // Generators (x_1^t, ..., x_d^t) of I_t, not lifted across the presentation.
  std::vector<Poly> ideal_generators_at(long long t) const {
    if (t < 1) throw usage_error("family index t must be at least 1");
    std::vector<Poly> gens;
    gens.reserve(sop_.size());
    for (const auto& s : sop_) gens.push_back(s.pow(t));
    return gens;
  }

  // The socle representative u_t, materialized as a polynomial.
  Poly socle_rep_at(long long t) const {
    if (t < 1) throw usage_error("family index t must be at least 1");
    Poly u = u1_;
    for (long long i = 1; i < t; ++i)
      for (const auto& s : sop_) u = u * s;
    return u;
  }

 private:
  std::vector<Poly> sop_;
  Poly u1_;
};

// Checks the defining properties of the family at level t: the socle
// representative u_t avoids I_t·R while m·u_t falls inside it.  A failure
// here means the socle chain broke, which the construction rules out; it is
// surfaced as an error rather than silently producing wrong lengths.
inline void validate_family_at(const RingPresentation& R,
                               const IrreducibleFamily& fam, long long t) {
  Ideal It = R.lift(fam.ideal_generators_at(t));
  Poly ut = fam.socle_rep_at(t);
  if (ideal_member(ut, It, R.order()))
    throw validation_error(
        "family degenerates at t = " + std::to_string(t) +
        ": the socle representative lies in the parameter-power ideal");
  for (std::size_t i = 0; i < R.nvars(); ++i) {
    Poly xi = Poly::variable(R.ambient(), i);
    if (!ideal_member(xi * ut, It, R.order()))
      throw validation_error(
          "family socle chain broken at t = " + std::to_string(t) +
          ": the maximal ideal does not annihilate the socle representative");
  }
}

// Validates a system of parameters for R and produces the family: checks the
// element count against dim R, finite colength, and that R/I_1 has a
// one-dimensional socle (so I_1, and with it every I_t, is irreducible).
inline IrreducibleFamily build_family(RingPresentation& R,
                                      std::vector<Poly> sop) {
  if (static_cast<int>(sop.size()) != R.dim())
    throw validation_error(
        "a system of parameters for a ring of dimension " +
        std::to_string(R.dim()) + " must have exactly " +
        std::to_string(R.dim()) + " elements; got " +
        std::to_string(sop.size()));
  for (const auto& s : sop) {
    if (s.is_zero())
      throw validation_error("system of parameters contains the zero polynomial");
    for (const auto& term : s.terms())
      if (term.mono.is_one())
        throw validation_error(
            "parameters must lie in the maximal ideal (no constant terms)");
  }
  Ideal I1 = R.lift(sop);
  if (!is_zero_dimensional(I1, R.order()))
    throw validation_error(
        "the given elements are not a system of parameters: the quotient by "
        "them is not zero-dimensional");
  Poly u1 = socle_generator_of_quotient(I1, R.order());
  R.mark_gorenstein_checked();
  IrreducibleFamily fam(std::move(sop), std::move(u1));
  validate_family_at(R, fam, 1);
  return fam;
}

inline IrreducibleFamily build_family(RingPresentation& R,
                                      const std::vector<std::string>& sop_exprs) {
  std::vector<Poly> sop;
  sop.reserve(sop_exprs.size());
  for (const auto& s : sop_exprs) sop.push_back(parse_poly(R.ambient(), s));
  return build_family(R, std::move(sop));
}

}  // namespace fsig
