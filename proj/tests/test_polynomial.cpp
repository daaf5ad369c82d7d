#include <random>

#include "cuboid/polynomial.hpp"
#include "cuboid/rational_function.hpp"
#include "doctest.h"

using namespace cuboid;
using Q = Rational;
using PolyQ = Polynomial<Q>;

namespace {

RingPtr<Q> cuboid_ring() { return PolyRing<Q>::make({"A", "B", "C", "X", "Y", "Z", "U"}); }

PolyQ random_poly(const RingPtr<Q>& ring, std::mt19937_64& rng, int terms, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp), c(-9, 9), d(1, 4);
  std::vector<Term<Q>> ts;
  for (int i = 0; i < terms; ++i) {
    std::vector<int> ex(ring->nvars());
    for (auto& x : ex) x = e(rng);
    ts.push_back({Monomial(ex), rat_normalize(c(rng), d(rng))});
  }
  return PolyQ::from_terms(ring, ts);
}

std::vector<MonomialOrder> all_orders(std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = n - 1 - i;
  return {MonomialOrder::lex(n),         MonomialOrder::lex(perm),        MonomialOrder::grevlex(n),
          MonomialOrder::grevlex(perm),  MonomialOrder::neg_deg_lex(n),   MonomialOrder::block(perm, 1),
          MonomialOrder::block(perm, n / 2)};
}

}  // namespace

TEST_CASE("parse_poly examples") {
  auto R = cuboid_ring();
  auto f = parse_poly("A^2 + B^2 - Z^2", R);
  CHECK(f.size() == 3);
  CHECK(f.coefficient(Monomial::variable(0, 2)) == Q(1));
  CHECK(f.coefficient(Monomial::variable(5, 2)) == Q(-1));
  CHECK(f.is_homogeneous());

  CHECK(parse_poly("0", R).is_zero());

  auto S = PolyRing<Q>::make({"x", "y"});
  auto g = parse_poly("x*y - 2*x", S);
  CHECK(g.size() == 2);
  CHECK(g.coefficient(Monomial({1, 1})) == Q(1));
  CHECK(g.coefficient(Monomial({1, 0})) == Q(-2));

  CHECK(parse_poly("(x+y)^2 - (x^2 + 2*x*y + y^2)", S).is_zero());
  CHECK(parse_poly("3/4*x - -x", S) == parse_poly("7/4*x", S));
  CHECK(parse_poly("  x *  y ", S) == parse_poly("x*y", S));
}

TEST_CASE("parse_poly errors") {
  auto S = PolyRing<Q>::make({"x", "y"});
  try {
    parse_poly("x + * y", S);
    FAIL("expected SyntaxError");
  } catch (const MathError& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
  try {
    parse_poly("x + w", S);
    FAIL("expected UnknownVariable");
  } catch (const MathError& e) {
    CHECK(e.code() == ErrorCode::UnknownVariable);
  }
  CHECK_THROWS_AS(parse_poly("(x", S), MathError);
  CHECK_THROWS_AS(parse_poly("x^", S), MathError);
  CHECK_THROWS_AS(parse_poly("", S), MathError);
}

TEST_CASE("print then parse is the identity") {
  std::mt19937_64 rng(3);
  for (const auto& ord : all_orders(4)) {
    auto R = PolyRing<Q>::make({"a", "b", "c", "d"}, ord);
    for (int i = 0; i < 40; ++i) {
      auto f = random_poly(R, rng, 6, 3);
      CHECK(parse_poly(f.to_string(), R) == f);
    }
  }
  PrimeField F(13);
  auto R = PolyRing<Fp>::make({"x", "y"}, F);
  auto f = parse_poly("1/2*x^2 - y + 20", R);
  CHECK(parse_poly(f.to_string(), R) == f);
  CHECK(f.constant_term() == F(7));
}

TEST_CASE("compare under the orders used in the lemma") {
  auto R = cuboid_ring();
  const auto& names = R->names();
  auto ord = MonomialOrder::lex(ranking_from_chain(names, "C<U<X<Y<Z"));
  auto Z2 = Monomial::variable(5, 2), Y2 = Monomial::variable(4, 2), X2 = Monomial::variable(3, 2);
  auto U2 = Monomial::variable(6, 2), C2 = Monomial::variable(2, 2);
  CHECK(ord.compare(Z2, Y2) > 0);
  CHECK(ord.compare(Y2, X2) > 0);
  CHECK(ord.compare(X2, U2) > 0);
  CHECK(ord.compare(U2, C2) > 0);
  CHECK(ord.compare(Z2, Z2) == 0);

  // X^2 - B^2 - C^2 has leading monomial X^2
  auto Rl = R->with_order(ord);
  CHECK(parse_poly("X^2 - B^2 - C^2", Rl).leading_monomial() == X2);

  auto local = MonomialOrder::neg_deg_lex(2);
  CHECK(local.compare(Monomial(), Monomial::variable(0)) > 0);
  CHECK(local.is_local());
  CHECK_FALSE(ord.is_local());
}

TEST_CASE("orders are total and multiplicative") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(0, 4);
  auto rnd = [&] {
    std::vector<int> ex(5);
    for (auto& x : ex) x = e(rng);
    return Monomial(ex);
  };
  for (const auto& ord : all_orders(5)) {
    for (int i = 0; i < 300; ++i) {
      auto a = rnd(), b = rnd(), c = rnd(), m = rnd();
      int ab = ord.compare(a, b);
      CHECK(ab == -ord.compare(b, a));
      CHECK((ab == 0) == (a == b));
      if (ab < 0) CHECK(ord.compare(a * m, b * m) < 0);
      if (ab < 0 && ord.compare(b, c) < 0) CHECK(ord.compare(a, c) < 0);
    }
  }
  CHECK(MonomialOrder::grevlex(3).compare(Monomial(), Monomial::variable(2)) < 0);
  CHECK(MonomialOrder::lex(3).compare(Monomial(), Monomial::variable(2)) < 0);
}

TEST_CASE("ring axioms and degree additivity") {
  std::mt19937_64 rng(9);
  auto R = PolyRing<Q>::make({"x", "y", "z"});
  for (int i = 0; i < 40; ++i) {
    auto f = random_poly(R, rng, 4, 3), g = random_poly(R, rng, 4, 3), h = random_poly(R, rng, 3, 2);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * g == g * f);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f - f).is_zero());
    if (!f.is_zero() && !g.is_zero()) CHECK((f * g).total_degree() == f.total_degree() + g.total_degree());
  }
}

TEST_CASE("derivative") {
  auto R = PolyRing<Q>::make({"x", "y"});
  CHECK(derivative(parse_poly("x^2*y", R), "x") == parse_poly("2*x*y", R));
  CHECK(derivative(parse_poly("x^2", R), "y").is_zero());
  CHECK_THROWS_AS(derivative(parse_poly("x", R), "w"), MathError);

  std::mt19937_64 rng(21);
  auto S = PolyRing<Q>::make({"a", "b", "c"}, MonomialOrder::lex(3));
  for (int i = 0; i < 40; ++i) {
    auto f = random_poly(S, rng, 4, 3), g = random_poly(S, rng, 4, 3);
    for (std::size_t v = 0; v < 3; ++v) {
      CHECK(derivative(f * g, v) == f * derivative(g, v) + g * derivative(f, v));
    }
  }
}

TEST_CASE("substitute") {
  auto R = PolyRing<Q>::make({"x", "y"});
  auto f = parse_poly("x + y", R);
  std::map<std::string, PolyQ> swap{{"x", PolyQ::variable(R, "y")}, {"y", PolyQ::variable(R, "x")}};
  CHECK(substitute(f, swap, R) == f);
  auto g = parse_poly("x^3*y - 7*y^2 + 1", R);
  CHECK(substitute(g, {}, R) == g);

  auto T = PolyRing<Q>::make({"t"});
  std::map<std::string, PolyQ> param{{"x", parse_poly("t^2", T)}, {"y", parse_poly("t + 1", T)}};
  CHECK(substitute(g, param, T) == parse_poly("t^6*(t+1) - 7*(t+1)^2 + 1", T));

  std::map<std::string, PolyQ> bad{{"x", parse_poly("y", R)}};
  CHECK_THROWS_AS(substitute(g, bad, T), MathError);
}

TEST_CASE("dehomogenize and homogenize") {
  auto R = PolyRing<Q>::make({"A", "X", "U"});
  auto f = dehomogenize(parse_poly("A^2 + X^2 - U^2", R), "U");
  CHECK(f.ring()->nvars() == 2);
  CHECK(f == parse_poly("A^2 + X^2 - 1", f.ring()));

  CHECK(dehomogenize(PolyQ(R), "U").is_zero());

  auto S = PolyRing<Q>::make({"A", "B", "Z"});
  auto g = dehomogenize(parse_poly("Z^2 - A^2 - B^2", S), "Z");
  CHECK(g == parse_poly("1 - A^2 - B^2", g.ring()));

  try {
    dehomogenize(parse_poly("A^2 + X", R), "U");
    FAIL("expected NotHomogeneous");
  } catch (const MathError& e) {
    CHECK(e.code() == ErrorCode::NotHomogeneous);
  }

  std::mt19937_64 rng(17);
  auto aff = PolyRing<Q>::make({"a", "b"});
  auto proj = PolyRing<Q>::make({"a", "b", "h"});
  for (int i = 0; i < 50; ++i) {
    auto p = random_poly(aff, rng, 4, 4);
    if (p.is_zero()) continue;
    auto hp = homogenize(p, "h", proj);
    CHECK(hp.is_homogeneous());
    CHECK(dehomogenize(hp, "h").in_ring(aff) == p);
  }
}

TEST_CASE("jacobian") {
  auto R = PolyRing<Q>::make({"x", "y"});
  auto J = jacobian(std::vector<PolyQ>{parse_poly("x^2 + y^2 - 1", R)});
  REQUIRE(J.size() == 1);
  CHECK(J[0][0] == parse_poly("2*x", R));
  CHECK(J[0][1] == parse_poly("2*y", R));

  auto C = cuboid_ring();
  std::vector<PolyQ> eqs{parse_poly("A^2 + B^2 - Z^2", C), parse_poly("B^2 + C^2 - X^2", C),
                         parse_poly("C^2 + A^2 - Y^2", C), parse_poly("A^2 + X^2 - U^2", C)};
  auto JC = jacobian(eqs);
  REQUIRE(JC.size() == 4);
  // differentiate each monomial by hand: entry (i, v) is 2*s*v where s is
  // the sign of v^2 in equation i
  const int sign[4][7] = {{1, 1, 0, 0, 0, -1, 0}, {0, 1, 1, -1, 0, 0, 0}, {1, 0, 1, 0, -1, 0, 0}, {1, 0, 0, 1, 0, 0, -1}};
  for (int i = 0; i < 4; ++i) {
    REQUIRE(JC[i].size() == 7);
    for (int v = 0; v < 7; ++v) {
      auto expected = PolyQ::variable(C, static_cast<std::size_t>(v)).scale(Q(2 * sign[i][v]));
      CHECK(JC[i][v] == expected);
    }
  }
  auto K = jacobian(std::vector<PolyQ>{PolyQ::constant(R, 5), PolyQ::constant(R, -1)});
  for (const auto& row : K) {
    for (const auto& e : row) CHECK(e.is_zero());
  }
}

TEST_CASE("ring mismatch is detected") {
  auto R = PolyRing<Q>::make({"x", "y"});
  auto S = PolyRing<Q>::make({"x", "y"}, MonomialOrder::lex(2));
  CHECK_THROWS_AS(parse_poly("x", R) + parse_poly("x", S), MathError);
  CHECK(parse_poly("x", R) + parse_poly("y", S).in_ring(R) == parse_poly("x + y", R));
  CHECK_THROWS_AS(parse_poly("x*y", R).in_ring(PolyRing<Q>::make({"x"})), MathError);
}

TEST_CASE("rational function coefficients") {
  PrimeField F(101);
  auto params = PolyRing<Fp>::make({"A", "B"}, F);
  RationalFunction<Fp>::Domain dom{params};
  auto R = PolyRing<RationalFunction<Fp>>::make({"C", "X"}, MonomialOrder::lex(2), dom);
  auto f = parse_poly("(A^2 + B^2)*C^2 - X", R);
  CHECK(f.leading_coefficient() == *dom.parameter("A") * *dom.parameter("A") +
                                       *dom.parameter("B") * *dom.parameter("B"));
  auto m = f.monic();
  CHECK(m.leading_coefficient().is_one());
  CHECK((m.scale(f.leading_coefficient()) - f).is_zero());
  auto a = *dom.parameter("A");
  auto inv = a.inverse();
  CHECK((a * inv).is_one());
  CHECK((inv + inv) == dom.from_integer(2) / a);
  CHECK_THROWS_AS(dom.zero().inverse(), MathError);
}
