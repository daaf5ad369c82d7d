#include <algorithm>
#include <random>
#include <set>

#include "cuboid/shape.hpp"
#include "cuboid/upoly.hpp"
#include "doctest.h"

using namespace cuboid;
using Q = Rational;

namespace {

const Rational::Domain qq{};

UPolyQ lin(long r) { return UPolyQ(qq, {Q(-r), Q(1)}); }
UPolyQ poly(std::vector<long> c) {
  std::vector<Q> v;
  for (long x : c) v.push_back(Q(x));
  return UPolyQ(qq, v);
}

// Sign changes along the half-integer grid -K-1/2, ..., K+1/2. Exact for
// polynomials whose real roots are distinct integers inside [-K, K].
std::size_t grid_sign_changes(const UPolyQ& f, long K) {
  std::size_t changes = 0;
  int last = 0;
  for (long k = -K - 1; k <= K; ++k) {
    int s = f(rat_normalize(2 * k + 1, 2)).sign();
    if (s != 0 && last != 0 && s != last) ++changes;
    if (s != 0) last = s;
  }
  return changes;
}

}  // namespace

TEST_CASE("squarefree_part") {
  CHECK(squarefree_part(poly({0, 0, 1})) == poly({0, 1}));
  CHECK(squarefree_part(poly({-1, 0, 1})) == poly({-1, 0, 1}));
  auto f = lin(1) * lin(1) * lin(1) * lin(-2);
  CHECK(squarefree_part(f) == lin(1) * lin(-2));
  CHECK_THROWS_AS(squarefree_part(UPolyQ(qq)), MathError);
}

TEST_CASE("count_real_roots examples") {
  CHECK(count_real_roots(poly({0, -1, 0, 1})).count == 3);
  CHECK(count_real_roots(poly({1, 0, 1})).count == 0);
  CHECK(count_real_roots(poly({-2, 0, 1}), std::make_pair(Q(0), Q(2))).count == 1);
  auto rep = count_real_roots(lin(3) * lin(3));
  CHECK(rep.count == 1);
  CHECK(rep.squarefree_taken);
  // an endpoint root is outside the open interval
  CHECK(count_real_roots(poly({0, -1, 0, 1}), std::make_pair(Q(0), Q(1))).count == 0);
  CHECK(count_real_roots(poly({0, -1, 0, 1}), std::make_pair(Q(-1), Q(1))).count == 1);
}

TEST_CASE("Sturm count agrees with grid sampling on random products") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> root(-10, 10), sq(1, 9), nf(0, 4);
  for (int trial = 0; trial < 60; ++trial) {
    UPolyQ f = poly({1});
    std::set<long> roots;
    for (long k = nf(rng) + 1; k-- > 0;) {
      long r = root(rng);
      roots.insert(r);
      f = f * lin(r);
    }
    for (long k = nf(rng) % 3; k-- > 0;) f = f * poly({sq(rng), 0, 1});
    f = f.scale(Q(static_cast<long>(trial % 5) - 2 == 0 ? 3 : static_cast<long>(trial % 5) - 2));
    auto n = count_real_roots(f).count;
    CHECK(n == roots.size());
    CHECK(n == grid_sign_changes(squarefree_part(f), 10));
    auto B = cauchy_bound(f);
    CHECK(count_real_roots(f, std::make_pair(-B, B)).count == n);
  }
}

TEST_CASE("prime field splitting and roots against enumeration") {
  std::mt19937_64 rng(19);
  for (std::uint64_t p : {5ULL, 13ULL, 101ULL, 10007ULL}) {
    PrimeField F(p);
    std::uniform_int_distribution<std::int64_t> val(0, static_cast<std::int64_t>(p) - 1);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Fp> c;
      for (int i = 0; i < 5; ++i) c.push_back(F(val(rng)));
      c.push_back(F.one());
      UPolyP f(F, c);
      std::vector<Fp> brute;
      if (p < 200) {
        for (std::uint64_t x = 0; x < p; ++x) {
          if (f(F(static_cast<std::int64_t>(x))).is_zero()) brute.push_back(F(static_cast<std::int64_t>(x)));
        }
      }
      auto sf = squarefree_part(f);
      bool split = splits_completely(sf) && sf.degree() == f.degree();
      auto ddf = distinct_degree_factorization(sf);
      UPolyP prod = UPolyP::constant(F, F.one());
      for (const auto& [d, g] : ddf) prod = prod * g;
      CHECK(prod == sf);
      if (p < 200) CHECK(split == (brute.size() == 5));
      auto linear = std::find_if(ddf.begin(), ddf.end(), [](const auto& e) { return e.first == 1; });
      if (linear != ddf.end()) {
        auto roots = roots_of_split(linear->second, 7);
        CHECK(roots.size() == static_cast<std::size_t>(linear->second.degree()));
        for (const auto& r : roots) CHECK(f(r).is_zero());
        if (p < 200) CHECK(roots.size() == brute.size());
      }
    }
  }
}

TEST_CASE("shape position and real solution counts") {
  auto R = PolyRing<Q>::make({"x", "y"});
  auto s = shape_position_solve(Ideal<Q>(R, {parse_poly("x^2 - 1", R), parse_poly("y - x", R)}));
  CHECK(s.distinct() == 2);
  CHECK(real_solution_count(s) == 2);

  auto d = shape_position_solve(Ideal<Q>(R, {parse_poly("x^2", R), parse_poly("y", R)}));
  CHECK(d.distinct() == 1);
  CHECK(d.staircase_size == 2);

  auto c = shape_position_solve(Ideal<Q>(R, {parse_poly("x^2 + 1", R), parse_poly("y - x", R)}));
  CHECK(c.distinct() == 2);
  CHECK(real_solution_count(c) == 0);

  auto unit = shape_position_solve(Ideal<Q>(R, {parse_poly("x", R), parse_poly("x - 1", R)}));
  CHECK(unit.distinct() == 0);

  CHECK_THROWS_AS(shape_position_solve(Ideal<Q>(R, {parse_poly("x*y", R)})), MathError);
}

TEST_CASE("shape position recovers planted points") {
  // points (a_i, b_i) as the zero set of x-coordinate and interpolated y
  auto R = PolyRing<Q>::make({"x", "y", "z"});
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> v(-6, 6);
  for (int trial = 0; trial < 6; ++trial) {
    // x-values distinct integers with repeated roots; y = x^2 - 1, z^2 = x + 7
    std::set<long> xs;
    while (xs.size() < 3) xs.insert(v(rng));
    auto f = parse_poly("1", R);
    for (long a : xs) f = f * parse_poly("x - (" + std::to_string(a) + ")", R);
    std::vector<Polynomial<Q>> gens{f * parse_poly("x - (" + std::to_string(*xs.begin()) + ")", R),
                                    parse_poly("y - x^2 + 1", R), parse_poly("z^2 - x - 7", R)};
    std::size_t real = 0;
    for (long a : xs) real += a + 7 > 0 ? 2 : (a + 7 == 0 ? 1 : 0);
    std::size_t total = 0;
    for (long a : xs) total += a + 7 == 0 ? 1 : 2;
    std::vector<std::size_t> counts;
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
      auto s = shape_position_solve(Ideal<Q>(R, gens), ShapeOptions{seed});
      CHECK(s.distinct() == total);
      CHECK(s.distinct() <= s.staircase_size);
      CHECK((s.distinct() == s.staircase_size) == (squarefree_part(s.eliminant).degree() == s.eliminant.degree()));
      counts.push_back(real_solution_count(s));
      // every coordinate polynomial maps roots of the eliminant onto the variety
      std::map<std::string, Polynomial<Q>> bind;
      auto T = PolyRing<Q>::make({"t"});
      for (std::size_t i = 0; i < 3; ++i) bind.emplace(R->names()[i], s.coordinates[i].to_polynomial(T, 0));
      for (const auto& g : gens) {
        auto img = UPolyQ::from_polynomial(substitute(g, bind, T), 0);
        CHECK((img % s.squarefree).is_zero());
      }
    }
    CHECK(counts[0] == real);
    CHECK(counts[1] == real);
    CHECK(counts[2] == real);
  }
}
