#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsig/errors.hpp"
#include "fsig/family.hpp"
#include "fsig/hypersurface_oracle.hpp"
#include "fsig/invariants.hpp"
#include "fsig/ring.hpp"

namespace fsig {

// Exact F-purity decision for R = S/I at the irrelevant maximal ideal:
// R is F-pure iff (I^[p] : I) is not contained in m^[p].  For principal
// I = (f) the colon collapses to (f^{p-1}) modulo I^[p], so the test becomes
// f^{p-1} not in m^[p] and no colon needs to be materialized.  A regular
// presentation (no relations) is F-pure outright.
inline bool fedder_fpure(const RingPresentation& R) {
  if (R.relations().empty()) return true;
  const std::uint32_t p = R.p();
  if (R.relations().size() == 1) {
    const Poly& f = R.relations()[0];
    return !detail::power_mod_bracket(f, p - 1, p).is_zero();
  }
  Ideal Ip = bracket_power(R.relation_ideal(), p);
  Ideal C = colon_ideal(Ip, R.relation_ideal(), R.order());
  auto gb = C.basis(R.order());
  for (const auto& g : *gb)
    if (!detail::drop_bracket_multiples(g, p).is_zero()) return true;
  return false;
}

// A strong F-regularity witness for a hypersurface R = S/(f): the smallest
// q = p^e, e <= e_max, with c * f^{q-1} outside m^[q].  Such a q certifies
// that the inclusion R c^{1/q} into R^{1/q} splits (for c not in any minimal
// prime, which the caller asserts beyond the c != 0 and c not in (f) checks
// performed here).  Membership is decided on the product side — the dual of
// asking whether c lies in (m^[q] : f^{q-1}) — so the colon is never built.
struct SfrWitness {
  int e = 0;
  long long q = 0;
};

inline std::optional<SfrWitness> glassbrenner_sfr(const RingPresentation& R,
                                                  const Poly& c, int e_max) {
  if (R.relations().size() != 1)
    throw validation_error(
        "the strong F-regularity witness search needs a hypersurface "
        "presentation (exactly one defining relation)");
  if (e_max < 1) throw usage_error("e_max must be at least 1");
  const Poly& f = R.relations()[0];
  if (c.is_zero()) throw usage_error("the witness candidate c must be nonzero");
  if (ideal_member(c, R.relation_ideal(), R.order()))
    throw usage_error("the witness candidate c lies in the ideal of the relation");
  const std::uint32_t p = R.p();
  for (int e = 1; e <= e_max; ++e) {
    long long q = detail::checked_prime_power(p, e);
    Poly g = detail::power_mod_bracket(f, q - 1, q);
    if (g.is_zero()) continue;
    if (!detail::drop_bracket_multiples(c * g, q).is_zero())
      return SfrWitness{e, q};
  }
  return std::nullopt;
}

// Joint run of the exact F-purity decision, the witness search (when a
// candidate is supplied), and the splitting-number sequence, with a coherence
// verdict across them.  The three routes are computed independently, so
// agreement is meaningful: a witness with collapsing s_e, positive s_e
// evidence without F-purity, or nonzero a_q in a non-F-pure ring would each
// expose a defect, and the verdict flags it.
struct Evidence {
  bool fpure = false;
  bool witness_searched = false;
  std::optional<SfrWitness> witness;
  bool have_report = false;
  FSignatureReport report;
  bool consistent = false;
  std::string verdict;  // "CONSISTENT" or "INCONSISTENT"
};

inline Evidence classify(RingPresentation& R,
                         const std::optional<std::vector<Poly>>& sop,
                         const std::optional<Poly>& c, int e_max,
                         const Rational& epsilon = Rational(1, 1000),
                         const SplittingPolicy& policy = {}) {
  Evidence ev;
  ev.fpure = fedder_fpure(R);
  if (c) {
    ev.witness = glassbrenner_sfr(R, *c, e_max);
    ev.witness_searched = true;
  }
  if (sop) {
    IrreducibleFamily fam = build_family(R, *sop);
    ev.report = fsignature_sequence(R, fam, e_max, epsilon, policy);
    ev.have_report = true;
  }

  bool witness_implies_evidence = true;
  bool evidence_implies_fpure = true;
  bool impure_implies_zero = true;
  if (ev.have_report) {
    if (ev.witness) witness_implies_evidence = ev.report.s_positive_evidence;
    if (ev.report.s_positive_evidence) evidence_implies_fpure = ev.fpure;
    if (!ev.fpure)
      for (const auto& row : ev.report.rows)
        if (row.sn.a_q != 0) impure_implies_zero = false;
  }
  ev.consistent =
      witness_implies_evidence && evidence_implies_fpure && impure_implies_zero;
  ev.verdict = ev.consistent ? "CONSISTENT" : "INCONSISTENT";
  return ev;
}

}  // namespace fsig
