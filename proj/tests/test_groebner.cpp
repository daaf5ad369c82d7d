#include <algorithm>
#include <random>

#include "cuboid/groebner.hpp"
#include "doctest.h"

using namespace cuboid;
using Q = Rational;
using PolyQ = Polynomial<Q>;

namespace {

std::vector<PolyQ> parse_all(const std::vector<std::string>& src, const RingPtr<Q>& R) {
  std::vector<PolyQ> out;
  for (const auto& s : src) out.push_back(parse_poly(s, R));
  return out;
}

// Buchberger's criterion re-checked by hand: every S-polynomial, computed
// without the pair criteria, reduces to zero.
bool all_spolys_vanish(const std::vector<PolyQ>& G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      auto l = G[i].leading_monomial().lcm(G[j].leading_monomial());
      auto s = G[i].mul_term(G[i].leading_monomial().quotient_of(l), G[i].leading_coefficient().inverse()) -
               G[j].mul_term(G[j].leading_monomial().quotient_of(l), G[j].leading_coefficient().inverse());
      if (!normal_form(s, G).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("normal_form examples") {
  auto R = PolyRing<Q>::make({"x", "y"}, MonomialOrder::lex(2));
  CHECK(normal_form(parse_poly("x^2", R), parse_all({"x - y"}, R)) == parse_poly("y^2", R));
  auto f = parse_poly("x^3 + 2*y", R);
  CHECK(normal_form(f, std::vector<PolyQ>{}) == f);

  auto L = PolyRing<Q>::make({"x", "y"}, MonomialOrder::neg_deg_lex(2));
  try {
    normal_form(parse_poly("x", L), parse_all({"x"}, L));
    FAIL("expected LocalOrderRejected");
  } catch (const MathError& e) {
    CHECK(e.code() == ErrorCode::LocalOrderRejected);
  }
}

TEST_CASE("buchberger examples") {
  auto R = PolyRing<Q>::make({"x", "y"}, MonomialOrder::lex(2));
  auto G = buchberger(Ideal<Q>(R, parse_all({"x^2 - 1", "y - x"}, R)));
  CHECK(G.verified);
  CHECK(G.reduced);
  REQUIRE(G.elements.size() == 2);
  CHECK(G.elements[0] == parse_poly("x - y", R));
  CHECK(G.elements[1] == parse_poly("y^2 - 1", R));

  auto again = buchberger(Ideal<Q>(R, G.elements));
  CHECK(again.elements == G.elements);
  CHECK(again.stats.zero_reductions + again.stats.pairs_coprime + again.stats.pairs_chain ==
        again.stats.pairs_total);

  auto unit = buchberger(Ideal<Q>(R, parse_all({"x*y - 1", "x"}, R)));
  CHECK(unit.is_unit_ideal());
}

TEST_CASE("cuboid system and the corrected fourth generator") {
  auto R = PolyRing<Q>::make({"A", "B", "C", "X", "Y", "Z", "U"});
  auto eqs = parse_all({"A^2 + B^2 - Z^2", "B^2 + C^2 - X^2", "C^2 + A^2 - Y^2", "A^2 + X^2 - U^2"}, R);
  auto zyxu = MonomialOrder::lex(ranking_from_chain(R->names(), "Z>Y>X>U"));
  auto bad = is_groebner_basis(eqs, zyxu);
  CHECK_FALSE(bad.is_basis);
  REQUIRE(bad.failing_pair);
  CHECK(bad.failing_pair->first == 1);
  CHECK(bad.failing_pair->second == 3);

  auto fixed = eqs;
  fixed[3] = parse_poly("U^2 - A^2 - B^2 - C^2", R);
  auto good = is_groebner_basis(fixed, zyxu);
  CHECK(good.is_basis);
  CHECK(good.all_coprime);

  auto uxyz = MonomialOrder::lex(ranking_from_chain(R->names(), "U>X>Y>Z"));
  CHECK(is_groebner_basis(eqs, uxyz).is_basis);

  // Buchberger on the corrected system adds nothing
  auto G = buchberger(Ideal<Q>(R, fixed), zyxu);
  CHECK(G.elements.size() == 4);

  auto single = is_groebner_basis(parse_all({"x^3 - x + 1"}, PolyRing<Q>::make({"x"})));
  CHECK(single.is_basis);
}

TEST_CASE("buchberger output satisfies the criterion independently") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<int> c(-3, 3), e(0, 2);
  for (const auto& ord : {MonomialOrder::grevlex(3), MonomialOrder::lex(3)}) {
    auto R = PolyRing<Q>::make({"x", "y", "z"}, ord);
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<PolyQ> gens;
      for (int g = 0; g < 3; ++g) {
        std::vector<Term<Q>> ts;
        for (int t = 0; t < 3; ++t) ts.push_back({Monomial({e(rng), e(rng), e(rng)}), Q(c(rng))});
        gens.push_back(PolyQ::from_terms(R, ts));
      }
      auto G = buchberger(Ideal<Q>(R, gens));
      CHECK(G.verified);
      CHECK(all_spolys_vanish(G.elements));
      for (const auto& g : gens) CHECK(normal_form(g, G).is_zero());
    }
  }
}

TEST_CASE("reduced basis is canonical under generator rewrites") {
  std::mt19937_64 rng(55);
  std::uniform_int_distribution<int> c(-4, 4);
  auto R = PolyRing<Q>::make({"x", "y", "z"});
  auto base = parse_all({"x^2 - y*z", "y^2 - x + z", "z^2 - x*y + 1"}, R);
  auto G0 = buchberger(Ideal<Q>(R, base));
  auto rnd_lin = [&] {
    return parse_poly(std::to_string(c(rng)) + "*x + " + std::to_string(c(rng)) + "*z + " +
                          std::to_string(c(rng)),
                      R);
  };
  for (int trial = 0; trial < 8; ++trial) {
    // unipotent triangular rewrite plus a redundant multiple: same ideal
    std::vector<PolyQ> gens{base[0], base[1] + rnd_lin() * base[0], base[2] + rnd_lin() * base[0] + rnd_lin() * base[1]};
    gens.push_back(rnd_lin() * gens[1] + rnd_lin() * gens[2]);
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(buchberger(Ideal<Q>(R, gens)).elements == G0.elements);
  }
}

TEST_CASE("normal form modulo a reduced basis ignores element order") {
  std::mt19937_64 rng(77);
  auto R = PolyRing<Q>::make({"x", "y", "z"});
  auto G = buchberger(Ideal<Q>(R, parse_all({"x^2 + y - 1", "x*y - z", "z^2 - x"}, R)));
  std::uniform_int_distribution<int> c(-5, 5), e(0, 4);
  for (int i = 0; i < 30; ++i) {
    std::vector<Term<Q>> ts;
    for (int t = 0; t < 5; ++t) ts.push_back({Monomial({e(rng), e(rng), e(rng)}), Q(c(rng))});
    auto f = PolyQ::from_terms(R, ts);
    auto elems = G.elements;
    auto r1 = normal_form(f, elems);
    std::shuffle(elems.begin(), elems.end(), rng);
    CHECK(normal_form(f, elems) == r1);
  }
}

TEST_CASE("eliminate") {
  auto R = PolyRing<Q>::make({"x", "y"});
  auto E = eliminate(Ideal<Q>(R, parse_all({"x^2 + y^2 - 1", "x - y"}, R)), {"y"});
  REQUIRE(E.generators.size() == 1);
  CHECK(E.generators[0] == parse_poly("y^2 - 1/2", E.ring));

  auto Z = eliminate(Ideal<Q>(R, parse_all({"x - y^2"}, R)), {"x"});
  CHECK(Z.generators.empty());
}

TEST_CASE("quotient_dimension") {
  auto R = PolyRing<Q>::make({"x", "y"});
  auto st = quotient_dimension(buchberger(Ideal<Q>(R, parse_all({"x^2", "y^3"}, R))));
  CHECK(st.finite);
  CHECK(st.size() == 6);

  auto inf = quotient_dimension(buchberger(Ideal<Q>(R, parse_all({"x"}, R))));
  CHECK_FALSE(inf.finite);

  CHECK(quotient_dimension(buchberger(Ideal<Q>(R, parse_all({"2*x", "3*y^2"}, R)))).size() == 2);

  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> e(1, 5);
  auto S = PolyRing<Q>::make({"a", "b", "c", "d"});
  for (int i = 0; i < 20; ++i) {
    std::vector<PolyQ> gens;
    std::size_t product = 1;
    for (std::size_t v = 0; v < 4; ++v) {
      unsigned a = static_cast<unsigned>(e(rng));
      product *= a;
      gens.push_back(PolyQ::variable(S, v).pow(a));
    }
    auto sc = quotient_dimension(buchberger(Ideal<Q>(S, gens)));
    CHECK(sc.finite);
    CHECK(sc.size() == product);
    // closed under division
    for (const auto& m : sc.monomials) {
      for (std::size_t v = 0; v < 4; ++v) {
        if (!m[v]) continue;
        auto d = m;
        d.set(v, m[v] - 1);
        CHECK(std::find(sc.monomials.begin(), sc.monomials.end(), d) != sc.monomials.end());
      }
    }
  }
}
