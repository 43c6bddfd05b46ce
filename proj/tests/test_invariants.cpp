#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <string>
#include <vector>

#include "fsig/invariants.hpp"
#include "fsig/ring.hpp"

using namespace fsig;

namespace {

struct Fixture {
  RingPresentation R;
  IrreducibleFamily fam;
};

Fixture make(std::uint32_t p, std::vector<std::string> vars,
             std::vector<std::string> rels, std::vector<std::string> sop,
             int alpha = 0) {
  RingPresentation R =
      build_ring(p, vars, rels, std::nullopt, alpha, /*reduced=*/true);
  IrreducibleFamily fam = build_family(R, sop);
  return {std::move(R), std::move(fam)};
}

Fixture quadric_cone_p3() {
  return make(3, {"x", "y", "z"}, {"x*y - z^2"}, {"x", "y"});
}
Fixture quadric_cone_p5() {
  return make(5, {"x", "y", "z"}, {"x*y - z^2"}, {"x", "y"});
}
Fixture cubic_cone_p5() {
  return make(5, {"x", "y", "z"}, {"x*y - z^3"}, {"x", "y"});
}
Fixture node_p3() { return make(3, {"x", "y"}, {"x*y"}, {"x + y"}); }
Fixture fermat_p7() {
  return make(7, {"x", "y", "z"}, {"x^3 + y^3 + z^3"}, {"x", "y"});
}
Fixture fermat_p2() {
  return make(2, {"x", "y", "z"}, {"x^3 + y^3 + z^3"}, {"x", "y"});
}

}  // namespace

TEST_CASE("family construction validates its input") {
  RingPresentation R =
      build_ring(3, {"x", "y", "z"}, {"x*y - z^2"}, 2, 0, true);
  auto S = R.ambient();

  auto strs = [](std::vector<std::string> v) { return v; };
  // Wrong element count for a two-dimensional ring.
  CHECK_THROWS_AS(build_family(R, strs({"x"})), validation_error);
  CHECK_THROWS_AS(build_family(R, strs({"x", "y", "z"})), validation_error);
  // Right count but not zero-dimensional: (x, x) cuts out a curve.
  CHECK_THROWS_AS(build_family(R, strs({"x", "x"})), validation_error);
  // Zero polynomial and constant terms are rejected outright.
  CHECK_THROWS_AS(build_family(R, strs({"x", "0"})), validation_error);
  CHECK_THROWS_AS(build_family(R, strs({"x", "y + 1"})), validation_error);
  // (x, y, z) truncated to (x, z): R/(x, z) = k[y], not Artinian.
  CHECK_THROWS_AS(build_family(R, strs({"x", "z"})), validation_error);

  IrreducibleFamily fam = build_family(R, strs({"x", "y"}));
  CHECK(fam.u1() == parse_poly(S, "z"));
  CHECK(fam.ideal_generators_at(2) ==
        std::vector<Poly>{parse_poly(S, "x^2"), parse_poly(S, "y^2")});
  CHECK(fam.socle_rep_at(1) == parse_poly(S, "z"));
  CHECK(fam.socle_rep_at(3) == parse_poly(S, "x^2*y^2*z"));
  CHECK_THROWS_AS(fam.ideal_generators_at(0), usage_error);
  CHECK_THROWS_AS(fam.socle_rep_at(0), usage_error);
  for (long long t = 1; t <= 3; ++t)
    CHECK_NOTHROW(validate_family_at(R, fam, t));

  // Non-Gorenstein quotient: the three coordinate axes modulo x + y + z give
  // k[x, y]/(xy, x^2, y^2), whose socle is two-dimensional, so the parameter
  // ideal is not irreducible and the family cannot be built.
  RingPresentation axes =
      build_ring(3, {"x", "y", "z"}, {"x*y", "x*z", "y*z"}, 1, 0, true);
  CHECK_THROWS_AS(build_family(axes, strs({"x + y + z"})), validation_error);
}

TEST_CASE("splitting numbers match the direct hypersurface count") {
  struct Anchor {
    Fixture fx;
    std::vector<long long> a;  // a_{p^e} for e = 1, 2, ...
    bool has_oracle;
  };
  std::vector<Anchor> anchors;
  anchors.push_back({quadric_cone_p3(), {5, 41, 365}, true});
  anchors.push_back({quadric_cone_p5(), {13, 313}, true});
  anchors.push_back({cubic_cone_p5(), {9, 209}, true});
  anchors.push_back({node_p3(), {1, 1, 1}, true});
  anchors.push_back({fermat_p7(), {1, 1}, true});
  anchors.push_back({fermat_p2(), {0, 0}, true});
  // Polynomial rings split completely: a_q = q^d.
  anchors.push_back({make(5, {"x"}, {}, {"x"}), {5, 25, 125}, false});
  anchors.push_back({make(5, {"x", "y"}, {}, {"x", "y"}), {25, 625}, false});
  anchors.push_back(
      {make(3, {"x", "y", "z"}, {}, {"x", "y", "z"}), {27, 729}, false});

  for (const auto& an : anchors) {
    for (std::size_t i = 0; i < an.a.size(); ++i) {
      int e = static_cast<int>(i) + 1;
      SplittingNumber sn = splitting_number(an.fx.R, an.fx.fam, e);
      CAPTURE(an.fx.R.p(), an.fx.R.dim(), e);
      CHECK(sn.a_q == an.a[i]);
      CHECK(sn.stabilized);
      CHECK(sn.t_used == 2);  // flat from t = 1, confirmed at t = 2
      CHECK(sn.trace.size() == 2);
      CHECK(sn.trace[0].length == sn.trace[1].length);
      // Free rank is bounded by the generic rank q^(d + alpha).
      long long cap = 1;
      for (int k = 0; k < an.fx.R.dim() + an.fx.R.alpha(); ++k) cap *= sn.q;
      CHECK(sn.a_q >= 0);
      CHECK(sn.a_q <= cap);
      if (an.has_oracle) {
        REQUIRE(sn.oracle_a_q.has_value());
        CHECK(*sn.oracle_a_q == sn.a_q);
        CHECK(sn.oracle_agrees);
      } else {
        CHECK(!sn.oracle_a_q.has_value());
      }
    }
  }
}

TEST_CASE("splitting numbers ignore unit rescaling of the relation") {
  Fixture fx = make(3, {"x", "y", "z"}, {"2*x*y - 2*z^2"}, {"x", "y"});
  SplittingNumber sn = splitting_number(fx.R, fx.fam, 1);
  CHECK(sn.a_q == 5);
  REQUIRE(sn.oracle_a_q.has_value());
  CHECK(sn.oracle_agrees);
}

TEST_CASE("splitting numbers are supermultiplicative") {
  // a_{q q'} >= a_q * a_{q'}: a splitting of R^{1/q} composed with one of
  // R^{1/q'} stays a splitting.  Verified on exact values through e = 4.
  auto run = [](Fixture fx, int e_top) {
    std::map<int, long long> a;
    for (int e = 1; e <= e_top; ++e)
      a[e] = splitting_number(fx.R, fx.fam, e).a_q;
    for (int e = 1; e <= e_top / 2; ++e)
      for (int f = e; e + f <= e_top; ++f) {
        CAPTURE(fx.R.p(), e, f);
        CHECK(a[e + f] >= a[e] * a[f]);
      }
    return a;
  };
  auto cone = run(quadric_cone_p3(), 4);
  CHECK(cone[4] == 3281);  // (q^2 + 1)/2 at q = 81
  auto cubic = run(cubic_cone_p5(), 4);
  CHECK(cubic[3] == 5209);    // (q^2 + 2)/3 at q = 125
  CHECK(cubic[4] == 130209);  // (q^2 + 2)/3 at q = 625
  run(node_p3(), 4);
}

TEST_CASE("f-signature sequences report exact ratios and growth evidence") {
  SECTION("quadric cone, p = 3: strongly F-regular") {
    Fixture fx = quadric_cone_p3();
    FSignatureReport rep = fsignature_sequence(fx.R, fx.fam, 3);
    REQUIRE(rep.rows.size() == 3);
    CHECK(rep.d == 2);
    CHECK(rep.alpha == 0);
    CHECK(rep.p == 3);
    CHECK(rep.epsilon == Rational(1, 1000));
    CHECK(rep.rows[0].q_pow == 9);
    CHECK(rep.rows[1].q_pow == 81);
    CHECK(rep.rows[2].q_pow == 729);
    CHECK(rep.rows[0].s_e == Rational(5, 9));
    CHECK(rep.rows[1].s_e == Rational(41, 81));
    CHECK(rep.rows[2].s_e == Rational(365, 729));
    // Strictly decreasing toward the limit 1/2, never crossing it.
    CHECK(rep.rows[1].s_e < rep.rows[0].s_e);
    CHECK(rep.rows[2].s_e < rep.rows[1].s_e);
    CHECK(!(rep.rows[2].s_e < Rational(1, 2)));
    CHECK(rep.s_positive_evidence);
    REQUIRE(rep.sdim.has_value());
    CHECK(*rep.sdim == 2);

    REQUIRE(rep.hk.size() == 3);
    CHECK(rep.hk[0].len == 13);
    CHECK(rep.hk[1].len == 121);
    CHECK(rep.hk[2].len == 1093);
    CHECK(rep.hk[0].ratio == Rational(13, 9));
    CHECK(rep.hk[2].ratio == Rational(1093, 729));
  }

  SECTION("node: F-pure but not strongly F-regular") {
    Fixture fx = node_p3();
    FSignatureReport rep = fsignature_sequence(fx.R, fx.fam, 2);
    CHECK(rep.rows[0].s_e == Rational(1, 3));
    CHECK(rep.rows[1].s_e == Rational(1, 9));
    CHECK(!rep.s_positive_evidence);
    REQUIRE(rep.sdim.has_value());
    CHECK(*rep.sdim == 0);
    CHECK(rep.hk[0].len == 5);
    CHECK(rep.hk[1].len == 17);
  }

  SECTION("Fermat cubic, p = 7: F-pure, splitting numbers stay at 1") {
    Fixture fx = fermat_p7();
    FSignatureReport rep = fsignature_sequence(fx.R, fx.fam, 2);
    CHECK(rep.rows[0].s_e == Rational(1, 49));
    CHECK(rep.rows[1].s_e == Rational(1, 2401));
    CHECK(!rep.s_positive_evidence);
    CHECK(*rep.sdim == 0);
    CHECK(rep.hk[0].len == 109);
    CHECK(rep.hk[1].len == 5401);
  }

  SECTION("Fermat cubic, p = 2: not F-pure, nothing splits") {
    Fixture fx = fermat_p2();
    FSignatureReport rep = fsignature_sequence(fx.R, fx.fam, 2);
    CHECK(rep.rows[0].s_e == Rational(0, 1));
    CHECK(rep.rows[1].s_e == Rational(0, 1));
    CHECK(!rep.s_positive_evidence);
    CHECK(*rep.sdim == -1);
    CHECK(rep.hk[0].len == 8);
    CHECK(rep.hk[1].len == 36);
  }

  SECTION("polynomial ring: s_e = 1 identically") {
    Fixture fx = make(5, {"x"}, {}, {"x"});
    FSignatureReport rep = fsignature_sequence(fx.R, fx.fam, 2);
    CHECK(rep.rows[0].s_e == Rational(1, 1));
    CHECK(rep.rows[1].s_e == Rational(1, 1));
    CHECK(rep.s_positive_evidence);
    CHECK(*rep.sdim == 1);
    CHECK(rep.hk[0].ratio == Rational(1, 1));
  }

  SECTION("a single row yields no trend estimate") {
    Fixture fx = quadric_cone_p3();
    FSignatureReport rep = fsignature_sequence(fx.R, fx.fam, 1);
    CHECK(!rep.sdim.has_value());
    CHECK(rep.s_positive_evidence);  // 5/9 clears the default threshold
    CHECK_THROWS_AS(sdim_estimate(rep), usage_error);
  }

  SECTION("the positivity threshold is a parameter") {
    Fixture fx = quadric_cone_p3();
    FSignatureReport rep = fsignature_sequence(fx.R, fx.fam, 2, Rational(3, 5));
    CHECK(rep.epsilon == Rational(3, 5));
    CHECK(!rep.s_positive_evidence);  // 41/81 < 3/5
    CHECK(*rep.sdim == 2);            // the growth estimate is unaffected
  }

  SECTION("argument validation") {
    Fixture fx = quadric_cone_p3();
    CHECK_THROWS_AS(fsignature_sequence(fx.R, fx.fam, 0), usage_error);
    CHECK_THROWS_AS(hilbert_kunz_sequence(fx.R, 0), usage_error);
    CHECK_THROWS_AS(splitting_number(fx.R, fx.fam, 0), usage_error);
  }
}

TEST_CASE("alpha rescales counts without changing the growth estimate") {
  Fixture fx = make(3, {"x", "y", "z"}, {"x*y - z^2"}, {"x", "y"}, /*alpha=*/1);
  SplittingNumber sn = splitting_number(fx.R, fx.fam, 1);
  CHECK(sn.a_q == 15);  // q^alpha * 5
  CHECK(!sn.oracle_a_q.has_value());  // counts are no longer comparable

  FSignatureReport rep = fsignature_sequence(fx.R, fx.fam, 2);
  CHECK(rep.rows[0].q_pow == 27);  // q^(d + alpha)
  CHECK(rep.rows[1].q_pow == 729);
  CHECK(rep.rows[0].s_e == Rational(5, 9));  // the rescale cancels
  CHECK(rep.rows[1].s_e == Rational(41, 81));
  CHECK(rep.s_positive_evidence);
  CHECK(*rep.sdim == 2);
}

TEST_CASE("scans that exhaust t_max report unstabilized results") {
  Fixture fx = quadric_cone_p3();
  SplittingPolicy tight;
  tight.t_max = 1;
  tight.window = 2;
  SplittingNumber sn = splitting_number(fx.R, fx.fam, 1, tight);
  CHECK(!sn.stabilized);
  CHECK(sn.t_used == 1);
  CHECK(sn.trace.size() == 1);
  CHECK(sn.a_q == 5);  // still produced, from the deepest level scanned

  SplittingPolicy bad;
  bad.t_max = 0;
  CHECK_THROWS_AS(splitting_number(fx.R, fx.fam, 1, bad), usage_error);
  bad.t_max = 8;
  bad.window = 0;
  CHECK_THROWS_AS(splitting_number(fx.R, fx.fam, 1, bad), usage_error);
}

TEST_CASE("containment scans certify the uniform lower bound") {
  SECTION("quadric cone, p = 3") {
    Fixture fx = quadric_cone_p3();
    for (long long t : {2LL, 3LL}) {
      BigPowersCheck bp = big_powers_check(fx.R, fx.fam, 1, t);
      CAPTURE(t);
      REQUIRE(bp.j0.has_value());
      CHECK(*bp.j0 == 1);
      CHECK(bp.q0 == 3);
      CHECK(bp.implied_bound == 1);
      // The direct colon length equals the splitting count computed through
      // the length identity: the two routes agree.
      CHECK(bp.colon_length == 5);
      CHECK(bp.a_q == 5);
      CHECK(bp.bound_holds);
    }
    for (long long t : {2LL, 3LL}) {
      BigPowersCheck bp = big_powers_check(fx.R, fx.fam, 2, t);
      REQUIRE(bp.j0.has_value());
      CHECK(*bp.j0 == 2);
      CHECK(bp.q0 == 9);
      CHECK(bp.implied_bound == 1);
      CHECK(bp.colon_length == 41);
      CHECK(bp.a_q == 41);
      CHECK(bp.bound_holds);
    }
  }

  SECTION("node") {
    Fixture fx = node_p3();
    BigPowersCheck bp1 = big_powers_check(fx.R, fx.fam, 1, 2);
    REQUIRE(bp1.j0.has_value());
    CHECK(bp1.q0 == 3);
    CHECK(bp1.colon_length == 1);
    CHECK(bp1.a_q == 1);
    CHECK(bp1.bound_holds);
    BigPowersCheck bp2 = big_powers_check(fx.R, fx.fam, 2, 2);
    REQUIRE(bp2.j0.has_value());
    CHECK(bp2.q0 == 9);
    CHECK(bp2.bound_holds);
  }

  SECTION("non-F-pure ring: the colon swallows everything") {
    Fixture fx = fermat_p2();
    BigPowersCheck bp = big_powers_check(fx.R, fx.fam, 1, 2);
    CHECK(bp.colon_length == 0);  // the colon is the unit ideal
    CHECK(!bp.j0.has_value());    // contained in no proper bracket power
    CHECK(bp.a_q == 0);
    CHECK(!bp.bound_holds);
  }

  SECTION("argument validation") {
    Fixture fx = node_p3();
    CHECK_THROWS_AS(big_powers_check(fx.R, fx.fam, 0, 2), usage_error);
    CHECK_THROWS_AS(big_powers_check(fx.R, fx.fam, 1, 0), usage_error);
  }
}

TEST_CASE("alpha localization arithmetic") {
  CHECK(alpha_localize({0, 1}) == 1);
  CHECK(alpha_localize({2, 3}) == 5);
  CHECK(alpha_localize({0, 0}) == 0);
  CHECK_THROWS_AS(alpha_localize({-1, 0}), usage_error);
  CHECK_THROWS_AS(alpha_localize({0, -2}), usage_error);

  // Localizing the quadric cone at a non-maximal prime in the regular locus:
  // the localized ring is regular, b_q = 1 at rank q^0, and the normalized
  // count can only go up: 1/1 >= 5/9.
  CHECK(localization_bound_check(5, 2, 0, 1, 0, 0, 3));
  CHECK(!localization_bound_check(5, 2, 0, 0, 0, 0, 3));
  // Equality is allowed.
  CHECK(localization_bound_check(9, 2, 0, 1, 0, 0, 3));
  CHECK_THROWS_AS(localization_bound_check(-1, 2, 0, 1, 0, 0, 3), usage_error);
  CHECK_THROWS_AS(localization_bound_check(5, 2, 0, 1, 0, 0, 0), usage_error);
}
