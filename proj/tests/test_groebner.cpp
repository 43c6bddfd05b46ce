#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "fsig/expr.hpp"
#include "fsig/ideal.hpp"

using namespace fsig;

namespace {

RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars) {
  return std::make_shared<const PolyRing>(PrimeField(p), std::move(vars));
}

// Test-local multivariate division: reduce f against a fixed finite set using
// only leading-term arithmetic.  Deliberately independent of the engine's
// reduction pipeline so Buchberger's criterion below is a real oracle.
Poly divide_by_set(Poly f, const std::vector<Poly>& basis, const MonomialOrder& ord) {
  const PrimeField& fp = f.ring()->field();
  Poly remainder = Poly::zero(f.ring());
  while (!f.is_zero()) {
    const Term lt = f.leading_term(ord);
    bool reduced = false;
    for (const auto& g : basis) {
      const Term& gl = g.leading_term(ord);
      if (!gl.mono.divides(lt.mono)) continue;
      Monomial m = lt.mono.quotient(gl.mono);
      std::uint32_t c = fp.div(lt.coeff, gl.coeff);
      f = f - g.times_term(m, c);
      reduced = true;
      break;
    }
    if (!reduced) {
      Poly head = Poly::monomial(f.ring(), lt.mono, lt.coeff);
      remainder = remainder + head;
      f = f - head;
    }
  }
  return remainder;
}

Poly spoly_of(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  const PrimeField& fp = f.ring()->field();
  const Term& lf = f.leading_term(ord);
  const Term& lg = g.leading_term(ord);
  Monomial l = lf.mono.lcm(lg.mono);
  return f.times_term(l.quotient(lf.mono), fp.inv(lf.coeff)) -
         g.times_term(l.quotient(lg.mono), fp.inv(lg.coeff));
}

// Brute-force length of a quotient by a monomial ideal: count the lattice
// points no generator divides, inside the box the pure powers cut out.
long long boxed_standard_count(const std::vector<Monomial>& gens,
                               const std::vector<std::uint32_t>& box) {
  std::vector<std::uint32_t> cur(box.size(), 0);
  long long count = 0;
  for (;;) {
    Monomial m{std::vector<std::uint32_t>(cur)};
    bool in_ideal = false;
    for (const auto& g : gens)
      if (g.divides(m)) {
        in_ideal = true;
        break;
      }
    if (!in_ideal) ++count;
    std::size_t i = 0;
    while (i < cur.size() && ++cur[i] >= box[i]) cur[i++] = 0;
    if (i == cur.size()) return count;
  }
}

Ideal parse_ideal(const RingPtr& S, const std::vector<std::string>& gens) {
  std::vector<Poly> v;
  v.reserve(gens.size());
  for (const auto& s : gens) v.push_back(parse_poly(S, s));
  return Ideal(S, std::move(v));
}

}  // namespace

TEST_CASE("groebner bases satisfy Buchberger's criterion and are reduced") {
  std::mt19937 rng(7251031);
  std::uniform_int_distribution<int> coeff(1, 4), pick(0, 2), expo(1, 3);
  auto S = make_ring(5, {"x", "y", "z"});
  auto random_poly = [&]() {
    Poly f = Poly::zero(S);
    int nterms = 1 + pick(rng);
    for (int t = 0; t < nterms; ++t) {
      Monomial m{std::vector<std::uint32_t>{
          static_cast<std::uint32_t>(pick(rng) == 0 ? expo(rng) : pick(rng)),
          static_cast<std::uint32_t>(pick(rng)),
          static_cast<std::uint32_t>(pick(rng))}};
      f = f + Poly::monomial(S, m, coeff(rng));
    }
    return f;
  };

  for (auto kind : {MonomialOrder::grevlex(3), MonomialOrder::lex(3)}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Poly> gens;
      for (int k = 0; k < 3; ++k) gens.push_back(random_poly());
      Ideal I(S, gens);
      auto gb = I.basis(kind);
      if (gb->empty()) continue;

      for (const auto& g : *gb) {
        CHECK(g.leading_term(kind).coeff == 1);  // monic
        for (const auto& h : *gb) {
          if (&g == &h) continue;
          // Reduced: no term of g is divisible by another leading term.
          for (const auto& t : g.terms())
            CHECK(!h.leading_term(kind).mono.divides(t.mono));
        }
      }
      for (const auto& f : gens)
        CHECK(divide_by_set(f, *gb, kind).is_zero());  // generators lie inside
      for (std::size_t i = 0; i < gb->size(); ++i)
        for (std::size_t j = i + 1; j < gb->size(); ++j)
          CHECK(divide_by_set(spoly_of((*gb)[i], (*gb)[j], kind), *gb, kind)
                    .is_zero());
    }
  }
}

TEST_CASE("groebner basis output is canonical across generator presentations") {
  auto S = make_ring(3, {"x", "y", "z"});
  Ideal I1 = parse_ideal(S, {"x*y - z^2", "x^3", "y^3"});
  Ideal I2 = parse_ideal(S, {"y^3", "2*x*y - 2*z^2", "x^3 + x*y - z^2"});
  MonomialOrder ord = MonomialOrder::grevlex(3);
  CHECK(*I1.basis(ord) == *I2.basis(ord));
  CHECK(ideal_equal(I1, I2));
}

TEST_CASE("hand-checked groebner bases") {
  auto S2 = make_ring(3, {"x", "y"});
  MonomialOrder g2 = MonomialOrder::grevlex(2);

  auto gb1 = parse_ideal(S2, {"x + y", "y"}).basis(g2);
  REQUIRE(gb1->size() == 2);
  CHECK((*gb1)[0] == parse_poly(S2, "y"));
  CHECK((*gb1)[1] == parse_poly(S2, "x"));

  auto gb2 = parse_ideal(S2, {"x*y", "x + y"}).basis(g2);
  REQUIRE(gb2->size() == 2);
  CHECK((*gb2)[0] == parse_poly(S2, "x + y"));
  CHECK((*gb2)[1] == parse_poly(S2, "y^2"));

  // Lex eliminates: the least block of (x - y^2, x - z^3) is y^2 - z^3.
  auto S3 = make_ring(5, {"x", "y", "z"});
  MonomialOrder l3 = MonomialOrder::lex(3);
  Ideal J = parse_ideal(S3, {"x - y^2", "x - z^3"});
  CHECK(ideal_member(parse_poly(S3, "y^2 - z^3"), J, l3));
  bool has_x_free = false;
  for (const auto& g : *J.basis(l3)) {
    bool uses_x = false;
    for (const auto& t : g.terms())
      if (t.mono.e[0]) uses_x = true;
    if (!uses_x && !g.is_zero()) has_x_free = true;
  }
  CHECK(has_x_free);
}

TEST_CASE("normal forms are linear and vanish exactly on members") {
  auto S = make_ring(5, {"x", "y"});
  MonomialOrder ord = MonomialOrder::grevlex(2);
  Ideal I = parse_ideal(S, {"x^2 - y", "y^2"});
  Poly f = parse_poly(S, "x^4");           // = y^2 = 0 mod I
  CHECK(normal_form(f, I, ord).is_zero());
  CHECK(ideal_member(f, I, ord));
  Poly g = parse_poly(S, "x^3 + x");       // = x*y + x mod I
  CHECK(normal_form(g, I, ord) == parse_poly(S, "x*y + x"));
  CHECK(!ideal_member(g, I, ord));
  Poly h = parse_poly(S, "x + 1");
  CHECK(normal_form(f + h, I, ord) == normal_form(f, I, ord) + normal_form(h, I, ord));
  CHECK(normal_form(normal_form(g, I, ord), I, ord) == normal_form(g, I, ord));
}

TEST_CASE("staircase length matches brute-force counts on monomial ideals") {
  std::mt19937 rng(90125);
  std::uniform_int_distribution<std::uint32_t> cap(1, 6), mid(1, 5);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = trial % 2 ? 2 : 3;
    auto S = n == 2 ? make_ring(3, {"x", "y"}) : make_ring(3, {"x", "y", "z"});
    std::vector<std::uint32_t> box(n);
    std::vector<Monomial> gens;
    std::vector<Poly> pgens;
    for (std::size_t i = 0; i < n; ++i) {
      box[i] = cap(rng);
      std::vector<std::uint32_t> e(n, 0);
      e[i] = box[i];
      gens.push_back(Monomial{std::vector<std::uint32_t>(e)});
      pgens.push_back(Poly::monomial(S, gens.back(), 1));
    }
    for (int extra = 0; extra < 2; ++extra) {
      std::vector<std::uint32_t> e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = mid(rng) % box[i];
      gens.push_back(Monomial{std::vector<std::uint32_t>(e)});
      pgens.push_back(Poly::monomial(S, gens.back(), 1));
    }
    Ideal I(S, pgens);
    CHECK(staircase_length(I, MonomialOrder::grevlex(n)) ==
          boxed_standard_count(gens, box));
    CHECK(staircase_length(I, MonomialOrder::lex(n)) ==
          boxed_standard_count(gens, box));
  }
}

TEST_CASE("standard monomial bases enumerate the staircase") {
  auto S = make_ring(5, {"x", "y"});
  MonomialOrder ord = MonomialOrder::grevlex(2);
  Ideal I = parse_ideal(S, {"x^2", "y^2"});
  auto basis = standard_monomial_basis(I, ord);
  REQUIRE(basis.size() == 4);
  std::vector<Monomial> want = {
      Monomial{std::vector<std::uint32_t>{0, 0}},
      Monomial{std::vector<std::uint32_t>{0, 1}},
      Monomial{std::vector<std::uint32_t>{1, 0}},
      Monomial{std::vector<std::uint32_t>{1, 1}}};
  std::sort(want.begin(), want.end());
  CHECK(basis == want);
  CHECK(staircase_length(I, ord) == 4);

  Ideal J = parse_ideal(S, {"x^2 - y", "y^2"});  // basis {1, x, y, xy}
  CHECK(staircase_length(J, ord) == 4);
}

TEST_CASE("krull dimension of coordinate-friendly ideals") {
  auto S3 = make_ring(3, {"x", "y", "z"});
  auto S2 = make_ring(3, {"x", "y"});
  MonomialOrder g3 = MonomialOrder::grevlex(3), g2 = MonomialOrder::grevlex(2);
  CHECK(krull_dim(Ideal(S3, {}), g3) == 3);
  CHECK(krull_dim(parse_ideal(S3, {"x"}), g3) == 2);
  CHECK(krull_dim(parse_ideal(S3, {"x*y - z^2"}), g3) == 2);
  CHECK(krull_dim(parse_ideal(S2, {"x*y"}), g2) == 1);
  CHECK(krull_dim(parse_ideal(S2, {"x", "y"}), g2) == 0);
  CHECK(krull_dim(parse_ideal(S3, {"x^2", "y^3", "z"}), g3) == 0);
  CHECK(krull_dim(parse_ideal(S2, {"x + 1", "x"}), g2) == -1);  // unit ideal
}

TEST_CASE("intersections agree with hand values and the length identity") {
  auto S = make_ring(5, {"x", "y"});
  MonomialOrder ord = MonomialOrder::grevlex(2);
  CHECK(ideal_equal(intersect(parse_ideal(S, {"x"}), parse_ideal(S, {"y"})),
                    parse_ideal(S, {"x*y"})));
  CHECK(ideal_equal(intersect(parse_ideal(S, {"x^2"}), parse_ideal(S, {"x"})),
                    parse_ideal(S, {"x^2"})));
  CHECK(ideal_equal(
      intersect(parse_ideal(S, {"x + y"}), parse_ideal(S, {"x - y"})),
      parse_ideal(S, {"x^2 - y^2"})));

  std::mt19937 rng(816243);
  std::uniform_int_distribution<int> cap(1, 4), coeff(0, 4);
  auto random_mprimary = [&]() {
    int a = cap(rng), b = cap(rng);
    std::vector<Poly> gens = {parse_poly(S, "x").pow(a), parse_poly(S, "y").pow(b)};
    Poly extra = Poly::constant(S, coeff(rng)) * parse_poly(S, "x*y") +
                 Poly::constant(S, coeff(rng)) * parse_poly(S, "x") +
                 Poly::constant(S, coeff(rng)) * parse_poly(S, "y");
    if (!extra.is_zero()) gens.push_back(extra);
    return Ideal(S, std::move(gens));
  };
  for (int trial = 0; trial < 15; ++trial) {
    Ideal I = random_mprimary(), J = random_mprimary();
    long long li = staircase_length(I, ord), lj = staircase_length(J, ord);
    long long lsum = staircase_length(ideal_sum(I, J), ord);
    long long lcap = staircase_length(intersect(I, J), ord);
    CHECK(li + lj == lsum + lcap);
  }
}

TEST_CASE("colon quotients match hand values and the length difference identity") {
  auto S = make_ring(5, {"x", "y"});
  MonomialOrder ord = MonomialOrder::grevlex(2);
  CHECK(ideal_equal(colon(parse_ideal(S, {"x^2*y"}), parse_poly(S, "y"), ord),
                    parse_ideal(S, {"x^2"})));
  CHECK(ideal_equal(colon(parse_ideal(S, {"x^2", "x*y"}), parse_poly(S, "x"), ord),
                    parse_ideal(S, {"x", "y"})));
  CHECK(ideal_equal(
      colon_ideal(parse_ideal(S, {"x^2", "x*y"}), parse_ideal(S, {"x"}), ord),
      parse_ideal(S, {"x", "y"})));
  // (I : f) == I when f is a unit; (I : f) == (1) when f lies in I.
  Ideal I = parse_ideal(S, {"x^2", "y^2"});
  CHECK(ideal_equal(colon(I, parse_poly(S, "2"), ord), I));
  CHECK(colon(I, parse_poly(S, "x^2*y"), ord).is_unit(ord));

  std::mt19937 rng(555001);
  std::uniform_int_distribution<int> cap(1, 4), coeff(0, 4);
  for (int trial = 0; trial < 20; ++trial) {
    int a = cap(rng), b = cap(rng);
    std::vector<Poly> gens = {parse_poly(S, "x").pow(a), parse_poly(S, "y").pow(b)};
    Poly extra = Poly::constant(S, coeff(rng)) * parse_poly(S, "x*y") +
                 Poly::constant(S, coeff(rng)) * parse_poly(S, "y^2");
    if (!extra.is_zero()) gens.push_back(extra);
    Ideal J(S, gens);
    Poly u = Poly::constant(S, coeff(rng)) +
             Poly::constant(S, coeff(rng)) * parse_poly(S, "x") +
             Poly::constant(S, coeff(rng)) * parse_poly(S, "y") +
             Poly::constant(S, coeff(rng)) * parse_poly(S, "x*y");
    if (u.is_zero()) u = parse_poly(S, "x");
    long long lhs = staircase_length(J, ord) -
                    staircase_length(ideal_sum(J, u), ord);
    long long rhs = staircase_length(colon(J, u, ord), ord);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("factored-power colon agrees with the direct colon") {
  auto S = make_ring(3, {"x", "y", "z"});
  MonomialOrder ord = MonomialOrder::grevlex(3);
  Ideal I = parse_ideal(S, {"x^9", "y^9", "x*y - z^2"});
  Poly u = parse_poly(S, "z");
  for (long long n : {1, 2, 3, 9}) {
    Ideal direct = colon(I, u.pow(n), ord);
    Ideal factored = colon_by_factored_power(I, u, n, ord);
    CHECK(ideal_equal(direct, factored));
  }
}

TEST_CASE("bracket powers scale lengths by q^n") {
  std::mt19937 rng(314159);
  std::uniform_int_distribution<int> cap(1, 3), coeff(0, 2);
  for (std::uint32_t p : {2u, 3u}) {
    auto S = make_ring(p, {"x", "y"});
    MonomialOrder ord = MonomialOrder::grevlex(2);
    for (int trial = 0; trial < 8; ++trial) {
      int a = cap(rng), b = cap(rng);
      std::vector<Poly> gens = {parse_poly(S, "x").pow(a), parse_poly(S, "y").pow(b)};
      Poly extra = Poly::constant(S, coeff(rng)) * parse_poly(S, "x*y") +
                   Poly::constant(S, coeff(rng)) * parse_poly(S, "x");
      if (!extra.is_zero()) gens.push_back(extra);
      Ideal J(S, gens);
      long long base = staircase_length(J, ord);
      long long q = p;
      CHECK(staircase_length(bracket_power(J, q), ord) == q * q * base);
      q = static_cast<long long>(p) * p;
      CHECK(staircase_length(bracket_power(J, q), ord) == q * q * base);
    }
  }
}

TEST_CASE("zero-dimensionality detection") {
  auto S = make_ring(3, {"x", "y"});
  MonomialOrder ord = MonomialOrder::grevlex(2);
  CHECK(is_zero_dimensional(parse_ideal(S, {"x^2", "y^3"}), ord));
  CHECK(is_zero_dimensional(parse_ideal(S, {"x^2 - y", "y^2"}), ord));
  CHECK(!is_zero_dimensional(parse_ideal(S, {"x*y"}), ord));
  CHECK(!is_zero_dimensional(parse_ideal(S, {"x"}), ord));
  CHECK_THROWS_AS(staircase_length(parse_ideal(S, {"x"}), ord), dimension_error);
}
