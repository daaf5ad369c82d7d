#include <random>

#include "cuboid/mora.hpp"
#include "doctest.h"

using namespace cuboid;
using Q = Rational;
using PolyQ = Polynomial<Q>;

namespace {

Ideal<Q> jacobian_ideal(const PolyQ& f) {
  std::vector<PolyQ> d;
  for (std::size_t v = 0; v < f.ring()->nvars(); ++v) d.push_back(derivative(f, v));
  return Ideal<Q>(f.ring(), d);
}

// dim R/(J + m^(N+1)) through a global Groebner basis; the ideal is
// supported at the origin only, so the global quotient is the local one.
std::size_t truncated_dimension(const Ideal<Q>& J, unsigned N) {
  auto G = J.ring->with_order(MonomialOrder::grevlex(J.ring->nvars()));
  std::vector<PolyQ> gens;
  for (const auto& g : J.generators) gens.push_back(g.in_ring(G));
  // all monomials of degree N + 1
  std::vector<Monomial> layer{Monomial()};
  for (unsigned d = 0; d <= N; ++d) {
    std::vector<Monomial> next;
    for (const auto& m : layer) {
      for (std::size_t v = 0; v < G->nvars(); ++v) {
        auto mm = m * Monomial::variable(v);
        if (std::find(next.begin(), next.end(), mm) == next.end()) next.push_back(mm);
      }
    }
    layer = std::move(next);
  }
  for (const auto& m : layer) gens.push_back(PolyQ::monomial(G, m, Q(1)));
  return quotient_dimension(buchberger(Ideal<Q>(G, gens))).size();
}

std::size_t oracle_mu(const Ideal<Q>& J) {
  std::size_t prev = truncated_dimension(J, 1);
  for (unsigned N = 2; N < 30; ++N) {
    auto cur = truncated_dimension(J, N);
    if (cur == prev) return cur;
    prev = cur;
  }
  return 0;
}

RingPtr<Q> local_ring(std::vector<std::string> names) {
  auto n = names.size();
  return PolyRing<Q>::make(std::move(names), MonomialOrder::neg_deg_lex(n));
}

}  // namespace

TEST_CASE("Mora on Morse and A_k points") {
  auto R = local_ring({"x", "y", "z"});
  auto G = mora_standard_basis(jacobian_ideal(parse_poly("x^2 + y^2 + z^2", R)));
  CHECK(G.elements.size() == 3);
  CHECK(quotient_dimension(G).size() == 1);

  auto S = local_ring({"x", "y"});
  for (unsigned k = 2; k <= 5; ++k) {
    auto f = parse_poly("x^" + std::to_string(k + 1) + " + y^2", S);
    auto B = mora_standard_basis(jacobian_ideal(f));
    auto st = quotient_dimension(B);
    CHECK(st.size() == k);
    for (const auto& m : st.monomials) CHECK(m[1] == 0);
  }
}

TEST_CASE("Mora normal form rejects global orders") {
  auto R = PolyRing<Q>::make({"x"});
  try {
    mora_normal_form(parse_poly("x", R), {parse_poly("x", R)});
    FAIL("expected GlobalOrderRejected");
  } catch (const MathError& e) {
    CHECK(e.code() == ErrorCode::GlobalOrderRejected);
  }
}

TEST_CASE("Mora sees the local ring only") {
  // x - x^2 is a unit multiple of x near the origin
  auto R = local_ring({"x"});
  auto G = mora_standard_basis(Ideal<Q>(R, {parse_poly("x - x^2", R)}));
  CHECK(quotient_dimension(G).size() == 1);
  CHECK(mora_normal_form(parse_poly("x", R), G.elements).is_zero());
  // 1 + x is a unit
  auto U = mora_standard_basis(Ideal<Q>(R, {parse_poly("1 + x", R)}));
  CHECK(quotient_dimension(U).size() == 0);
}

TEST_CASE("Brieskorn local dimensions") {
  auto R = local_ring({"x", "y", "z"});
  for (unsigned a = 2; a <= 4; ++a) {
    for (unsigned b = 2; b <= 4; ++b) {
      for (unsigned c = 2; c <= 4; ++c) {
        auto f = parse_poly("x^" + std::to_string(a) + " + y^" + std::to_string(b) + " + z^" + std::to_string(c), R);
        auto J = jacobian_ideal(f);
        auto expect = oracle_mu(J);
        REQUIRE(expect == (a - 1) * (b - 1) * (c - 1));
        CHECK(quotient_dimension(mora_standard_basis(J)).size() == expect);
      }
    }
  }
}

TEST_CASE("local dimension is invariant under linear changes") {
  auto R = local_ring({"x", "y"});
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> c(-3, 3);
  for (unsigned k = 2; k <= 4; ++k) {
    for (int trial = 0; trial < 3; ++trial) {
      long a, b, d, e;
      do {
        a = c(rng), b = c(rng), d = c(rng), e = c(rng);
      } while (a * e - b * d == 0);
      std::map<std::string, PolyQ> bind{
          {"x", parse_poly(std::to_string(a) + "*x + " + std::to_string(b) + "*y", R)},
          {"y", parse_poly(std::to_string(d) + "*x + " + std::to_string(e) + "*y", R)}};
      auto f = substitute(parse_poly("x^" + std::to_string(k + 1) + " + y^2", R), bind, R);
      auto J = jacobian_ideal(f);
      CHECK(quotient_dimension(mora_standard_basis(J)).size() == k);
      CHECK(oracle_mu(J) == k);
    }
  }
}

TEST_CASE("Mora budget stops and resumes") {
  auto R = local_ring({"x", "y", "z"});
  auto J = jacobian_ideal(parse_poly("x^4 + y^4 + z^4 + x*y*z^2", R));
  MoraComputation<Q> run(J);
  CHECK_FALSE(run.run(3));
  CHECK(run.steps() >= 3);
  auto pending = run.pairs_pending();
  CHECK(pending > 0);
  CHECK(run.run(0));
  auto G = run.result();
  CHECK(G.verified);
  CHECK(quotient_dimension(G).size() == quotient_dimension(mora_standard_basis(J)).size());
  CHECK_THROWS_AS(mora_standard_basis(J, MoraOptions{2}), MathError);
}
