#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "fsig/artinian.hpp"
#include "fsig/expr.hpp"
#include "fsig/ring.hpp"

using namespace fsig;

namespace {

RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars) {
  return std::make_shared<const PolyRing>(PrimeField(p), std::move(vars));
}

Ideal parse_ideal(const RingPtr& S, const std::vector<std::string>& gens) {
  std::vector<Poly> v;
  v.reserve(gens.size());
  for (const auto& s : gens) v.push_back(parse_poly(S, s));
  return Ideal(S, std::move(v));
}

}  // namespace

TEST_CASE("standard monomial bases give coordinates") {
  auto S = make_ring(5, {"x", "y"});
  MonomialOrder ord = MonomialOrder::grevlex(2);
  ArtinianBasis basis = standard_monomials(parse_ideal(S, {"x^2", "y^2"}), ord);
  REQUIRE(basis.length() == 4);

  Monomial one{std::vector<std::uint32_t>{0, 0}};
  Monomial x{std::vector<std::uint32_t>{1, 0}};
  Monomial xy{std::vector<std::uint32_t>{1, 1}};
  CHECK(basis.index_of(one) >= 0);
  CHECK(basis.index_of(Monomial{std::vector<std::uint32_t>{2, 0}}) == -1);

  // x^2 dies in the quotient; the rest reads off termwise.
  Poly f = parse_poly(S, "3 + 2*x + x*y + 4*x^2");
  auto v = basis.coordinates(f);
  CHECK(v[basis.index_of(one)] == 3);
  CHECK(v[basis.index_of(x)] == 2);
  CHECK(v[basis.index_of(xy)] == 1);
  CHECK(v[basis.index_of(Monomial{std::vector<std::uint32_t>{0, 1}})] == 0);

  // Coordinates are linear.
  Poly g = parse_poly(S, "x + y");
  auto vf = basis.coordinates(f), vg = basis.coordinates(g),
       vs = basis.coordinates(f + g);
  for (std::size_t i = 0; i < vf.size(); ++i)
    CHECK(vs[i] == S->field().add(vf[i], vg[i]));
}

TEST_CASE("socle representatives match the combinatorial answer on monomial ideals") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<std::uint32_t> cap(1, 4), mid(0, 3);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = trial % 2 ? 2 : 3;
    auto S = n == 2 ? make_ring(3, {"x", "y"}) : make_ring(5, {"x", "y", "z"});
    MonomialOrder ord = MonomialOrder::grevlex(n);
    std::vector<Monomial> gens;
    std::vector<Poly> pgens;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint32_t> e(n, 0);
      e[i] = cap(rng);
      gens.push_back(Monomial{std::vector<std::uint32_t>(e)});
      pgens.push_back(Poly::monomial(S, gens.back(), 1));
    }
    {
      std::vector<std::uint32_t> e(n);
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i) {
        e[i] = mid(rng) % gens[i].e[i];
        nonzero = nonzero || e[i];
      }
      if (nonzero) {
        gens.push_back(Monomial{std::vector<std::uint32_t>(e)});
        pgens.push_back(Poly::monomial(S, gens.back(), 1));
      }
    }
    Ideal I(S, pgens);
    ArtinianBasis basis = standard_monomials(I, ord);

    // For a monomial ideal the socle is spanned by the standard monomials all
    // of whose variable bumps leave the staircase.
    std::vector<Monomial> expect;
    for (const auto& m : basis.monomials()) {
      bool socle = true;
      for (std::size_t i = 0; i < n && socle; ++i) {
        Monomial up = m;
        up.e[i] += 1;
        bool in_ideal = false;
        for (const auto& g : gens)
          if (g.divides(up)) in_ideal = true;
        if (!in_ideal) socle = false;
      }
      if (socle) expect.push_back(m);
    }

    std::vector<Monomial> got;
    for (const auto& r : socle_representatives(I, ord)) {
      REQUIRE(r.term_count() == 1);  // monomial ideals have monomial socles
      got.push_back(r.terms()[0].mono);
    }
    std::sort(got.begin(), got.end());
    std::sort(expect.begin(), expect.end());
    CHECK(got == expect);
  }
}

TEST_CASE("socle hand anchors") {
  auto S = make_ring(5, {"x", "y"});
  MonomialOrder ord = MonomialOrder::grevlex(2);

  auto reps = socle_representatives(parse_ideal(S, {"x^2", "y^2"}), ord);
  REQUIRE(reps.size() == 1);
  CHECK(reps[0] == parse_poly(S, "x*y"));

  reps = socle_representatives(parse_ideal(S, {"x^2", "x*y", "y^2"}), ord);
  CHECK(reps.size() == 2);

  // One-variable quotient: the socle of k[x]/(x^3) sits in top degree.
  auto S1 = make_ring(3, {"x"});
  reps = socle_representatives(parse_ideal(S1, {"x^3"}), MonomialOrder::grevlex(1));
  REQUIRE(reps.size() == 1);
  CHECK(reps[0] == parse_poly(S1, "x^2"));

  // The unit ideal has an empty quotient and an empty socle.
  CHECK(socle_representatives(parse_ideal(S, {"x", "y", "1"}), ord).empty());
}

TEST_CASE("socle generators of irreducible quotients are monic and unique") {
  auto S = make_ring(5, {"x", "y"});
  MonomialOrder ord = MonomialOrder::grevlex(2);
  Poly u = socle_generator_of_quotient(parse_ideal(S, {"x^2", "y^3"}), ord);
  CHECK(u == parse_poly(S, "x*y^2"));

  // Scaled generators give the same monic representative.
  Poly u2 = socle_generator_of_quotient(parse_ideal(S, {"3*x^2", "2*y^3"}), ord);
  CHECK(u2 == u);

  CHECK_THROWS_AS(
      socle_generator_of_quotient(parse_ideal(S, {"x^2", "x*y", "y^2"}), ord),
      validation_error);
  CHECK_THROWS_WITH(
      socle_generator_of_quotient(parse_ideal(S, {"x^2", "x*y", "y^2"}), ord),
      Catch::Matchers::ContainsSubstring("not Gorenstein"));
}

TEST_CASE("socle generators through quotient ring presentations") {
  // Node: R = F_3[x,y]/(xy), parameters (x + y); R/(x+y) = k[y]/(y^2).
  RingPresentation node = build_ring(3, {"x", "y"}, {"x*y"}, 1, 0, true);
  Poly u = socle_generator(node, Ideal(node.ambient(), {parse_poly(node.ambient(), "x + y")}));
  CHECK(u == parse_poly(node.ambient(), "y"));

  // Quadric cone: R/(x, y) = k[z]/(z^2).
  RingPresentation cone = build_ring(3, {"x", "y", "z"}, {"x*y - z^2"}, 2, 0, true);
  Poly uc = socle_generator(
      cone, Ideal(cone.ambient(), {parse_poly(cone.ambient(), "x"),
                                   parse_poly(cone.ambient(), "y")}));
  CHECK(uc == parse_poly(cone.ambient(), "z"));

  // Regular in one variable: R/(x) = k, socle generated by 1.
  RingPresentation line = build_ring(5, {"x"}, {}, 1, 0, true);
  Poly ul = socle_generator(
      line, Ideal(line.ambient(), {parse_poly(line.ambient(), "x")}));
  CHECK(ul == Poly::constant(line.ambient(), 1));

  // Socle elements annihilate every variable.
  for (auto* R : {&node, &cone}) {
    Ideal sop = R == &node
                    ? Ideal(R->ambient(), {parse_poly(R->ambient(), "x + y")})
                    : Ideal(R->ambient(), {parse_poly(R->ambient(), "x"),
                                           parse_poly(R->ambient(), "y")});
    Poly s = socle_generator(*R, sop);
    Ideal lifted = R->lift(sop);
    CHECK(!ideal_member(s, lifted, R->order()));
    for (std::size_t i = 0; i < R->nvars(); ++i)
      CHECK(ideal_member(Poly::variable(R->ambient(), i) * s, lifted, R->order()));
  }
}

TEST_CASE("quotient ring length helpers") {
  RingPresentation cone = build_ring(3, {"x", "y", "z"}, {"x*y - z^2"}, 2, 0, true);
  auto S = cone.ambient();
  // R/(x, y) = k[z]/(z^2).
  CHECK(length(cone, {parse_poly(S, "x"), parse_poly(S, "y")}) == 2);
  // Standard monomials of (xy - z^2, x^3, y^3): z^c (c<6), x*z^c (c<4),
  // x^2*z^c (c<2), and the y-side mirror image: 6 + 6 + 6.
  CHECK(length(cone, {parse_poly(S, "x^3"), parse_poly(S, "y^3")}) == 18);
  // Adding z^3 gives the full bracket power of the maximal ideal.
  CHECK(length(cone, Ideal(S, {parse_poly(S, "x^3"), parse_poly(S, "y^3"),
                               parse_poly(S, "z^3")})) == 13);
}
