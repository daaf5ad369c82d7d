#include <random>
#include <set>

#include "cuboid/bielliptic.hpp"
#include "doctest.h"

using namespace cuboid;

namespace {

using Pt = CurvePoint<Fp>;

// Brute-force point list: every (x, y) in F_p^2 on the curve, plus O.
std::vector<Pt> brute_points(const EllipticCurve<Fp>& E) {
  auto p = E.domain().modulus();
  std::vector<Pt> out{E.origin()};
  for (std::uint64_t x = 0; x < p; ++x) {
    for (std::uint64_t y = 0; y < p; ++y) {
      Pt P{Fp(x, p), Fp(y, p), false};
      if (E.contains(P)) out.push_back(P);
    }
  }
  return out;
}

bool collinear(const Pt& P, const Pt& Q, const Pt& R) {
  auto a = P.projective(), b = Q.projective(), c = R.projective();
  auto det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
             a[2] * (b[0] * c[1] - b[1] * c[0]);
  return det.is_zero();
}

// P + Q for affine P, Q with different x: the third point S of the chord
// found by scanning the curve, then reflected.
Pt chord_sum(const EllipticCurve<Fp>& E, const std::vector<Pt>& pts, const Pt& P, const Pt& Q) {
  std::vector<Pt> on_line;
  for (const auto& R : pts) {
    if (collinear(P, Q, R)) on_line.push_back(R);
  }
  Pt third = P;
  if (on_line.size() == 3) {
    for (const auto& R : on_line) {
      if (!(R == P) && !(R == Q)) third = R;
    }
  } else {
    REQUIRE(on_line.size() == 2);
    // tangent at P or at Q: the chord slope equals the tangent slope there
    auto slope = (Q.y - P.y) / (Q.x - P.x);
    auto F = E.domain();
    bool tangent_P = !P.y.is_zero() && slope * F(2) * P.y == F(3) * P.x * P.x + E.a();
    third = tangent_P ? P : Q;
  }
  if (third.infinity) return third;
  return {third.x, -third.y, false};
}

Pt scalar_mul(const EllipticCurve<Fp>& E, std::size_t n, const Pt& P) {
  Pt acc = E.origin();
  for (std::size_t i = 0; i < n; ++i) acc = E.add(acc, P);
  return acc;
}

}  // namespace

TEST_CASE("curves and points") {
  EllipticCurve<Rational> E(curve_E(), {});
  CHECK(E.a() == Rational(-4));
  auto P = E.point(Rational(2), Rational(0));
  CHECK(E.add(P, E.origin()) == P);
  CHECK(E.add(E.torsion_T(), E.torsion_T()).infinity);
  CHECK_THROWS_AS(E.point(Rational(1), Rational(1)), MathError);
  EllipticCurve<Rational> Ep(curve_E_prime(), {});
  CHECK_THROWS_AS(Ep.add(Ep.origin(), CurvePoint<Rational>{Rational(1), Rational(1), false}), MathError);
  CHECK_THROWS_AS(EllipticCurve<Fp>(curve_E(), PrimeField(2)), MathError);
}

TEST_CASE("two-torsion") {
  EllipticCurve<Rational> E(curve_E(), {}), Ep(curve_E_prime(), {});
  auto t = two_torsion(E);
  REQUIRE(t.size() == 4);
  CHECK(t[0].infinity);
  std::set<long> xs;
  for (std::size_t i = 1; i < 4; ++i) {
    CHECK(t[i].y.is_zero());
    xs.insert(t[i].x.numerator().get_si());
  }
  CHECK(xs == std::set<long>{-2, 0, 2});
  CHECK(two_torsion(Ep).size() == 2);

  EllipticCurve<Fp> Ep5(curve_E_prime(), PrimeField(5));
  std::size_t roots = 0;
  for (std::uint64_t x = 0; x < 5; ++x) roots += (x * x * x + x) % 5 == 0;
  CHECK(two_torsion(Ep5).size() == roots + 1);
  CHECK(two_torsion(Ep5).size() == 4);
}

TEST_CASE("point enumeration matches a brute scan") {
  for (std::uint64_t p : {5ULL, 13ULL, 17ULL, 29ULL}) {
    for (const auto& spec : {curve_E(), curve_E_prime()}) {
      EllipticCurve<Fp> E(spec, PrimeField(p));
      auto a = enumerate_points(E), b = brute_points(E);
      CHECK(a.size() == b.size());
      for (const auto& P : b) CHECK(std::find(a.begin(), a.end(), P) != a.end());
    }
  }
}

TEST_CASE("group law against chord scans over F_13") {
  EllipticCurve<Fp> E(curve_E(), PrimeField(13));
  auto pts = brute_points(E);
  std::size_t compared = 0;
  for (const auto& P : pts) {
    for (const auto& Q : pts) {
      if (P.infinity || Q.infinity || P.x == Q.x) continue;
      CHECK(E.add(P, Q) == chord_sum(E, pts, P, Q));
      ++compared;
    }
  }
  CHECK(compared > 50);
}

TEST_CASE("group axioms on samples") {
  for (std::uint64_t p : {13ULL, 10007ULL}) {
    for (const auto& spec : {curve_E(), curve_E_prime()}) {
      EllipticCurve<Fp> E(spec, PrimeField(p));
      std::mt19937_64 rng(p);
      for (int i = 0; i < 100; ++i) {
        auto P = random_point(E, rng), Q = random_point(E, rng), R = random_point(E, rng);
        CHECK(E.add(E.add(P, Q), R) == E.add(P, E.add(Q, R)));
        CHECK(E.add(P, Q) == E.add(Q, P));
        CHECK(E.add(P, E.neg(P)).infinity);
        CHECK(E.contains(E.add(P, P)));
      }
    }
  }
  // Lagrange: the group order kills every point
  EllipticCurve<Fp> E(curve_E_prime(), PrimeField(29));
  auto pts = enumerate_points(E);
  for (const auto& P : pts) CHECK(scalar_mul(E, pts.size(), P).infinity);
}

TEST_CASE("translation by T") {
  EllipticCurve<Fp> E(curve_E(), PrimeField(10007));
  std::mt19937_64 rng(3);
  auto F = E.domain();
  for (int i = 0; i < 50; ++i) {
    auto P = random_point(E, rng);
    if (P.x.is_zero()) continue;
    // P + T = (a/x, -a y / x^2)
    auto S = E.add(P, E.torsion_T());
    CHECK(S.x == E.a() / P.x);
    CHECK(S.y == -E.a() * P.y / (P.x * P.x));
  }
  auto P = random_point(E, rng);
  auto pq = std::make_pair(P, P);
  CHECK(tau_prime(E, pq).second == E.add(P, E.torsion_T()));
  CHECK(tau_prime(E, pq).first == P);
  (void)F;
}

TEST_CASE("phi symbolic") {
  auto rep = phi_symbolic_check();
  CHECK(rep.curve_relations.size() == 2);
  CHECK(rep.bihomogeneous);
  CHECK(rep.iota_invariant);
  for (const auto& r : rep.residues) CHECK(r == "0");
  CHECK(rep.all_zero);
}

TEST_CASE("phi matches direct evaluation of its polynomials") {
  auto ring = PolyRing<Rational>::make({"x1", "y1", "z1", "x2", "y2", "z2"});
  auto polys = phi_polynomials(ring);
  EllipticCurve<Rational> E(curve_E(), {});
  // rational points with small height
  std::vector<CurvePoint<Rational>> pts;
  for (long n = -20; n <= 20; ++n) {
    for (long d = 1; d <= 6; ++d) {
      Rational x = Rational::normalize(n, d), r = x * x * x - Rational(4) * x;
      if (r < Rational(0)) continue;
      mpz_class num = r.numerator(), den = r.denominator();
      if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) continue;
      pts.push_back(E.point(x, Rational::normalize(mpz_class(sqrt(num)), mpz_class(sqrt(den)))));
    }
  }
  REQUIRE(pts.size() >= 4);
  for (const auto& P : pts) {
    for (const auto& Q : pts) {
      auto im = phi(E, P, Q);
      auto a = P.projective(), b = Q.projective();
      std::vector<Rational> v{a[0], a[1], a[2], b[0], b[1], b[2]};
      for (std::size_t i = 0; i < 6; ++i) CHECK(polys[i].evaluate(v) == im.coords[i]);
      for (const auto& q : face_quadrics(im)) CHECK(q.is_zero());
    }
  }
}

TEST_CASE("projective equality") {
  PrimeField F(13);
  PhiImage<Fp> a{{F(1), F(2), F(3), F(4), F(5), F(6)}};
  PhiImage<Fp> b = a;
  for (auto& c : b.coords) c = c * F(7);
  CHECK(projectively_equal(a, b));
  b.coords[5] = b.coords[5] + F(1);
  CHECK_FALSE(projectively_equal(a, b));
  PhiImage<Fp> z{{F(0), F(0), F(0), F(0), F(0), F(0)}};
  CHECK_FALSE(projectively_equal(a, z));
}

TEST_CASE("phi sampled") {
  auto reps = phi_sampled_check(default_sampling_primes(), 500, 5);
  REQUIRE(reps.size() == 5);
  for (const auto& r : reps) {
    CHECK(r.samples == 500);
    CHECK(r.on_V == 500);
    CHECK(r.iota_equal == 500);
    CHECK(r.gamma_equal + r.zero_images == 500);
  }
  CHECK(phi_sampled_check({10007}, 40, 5)[0].on_V == phi_sampled_check({10007}, 40, 5)[0].on_V);
  CHECK_THROWS_AS(phi_sampled_check({2}, 1), MathError);
  CHECK_THROWS_AS(phi_sampled_check({15}, 1), MathError);
}

TEST_CASE("conjugation by alpha") {
  for (std::uint64_t p : {13ULL, 10007ULL}) {
    auto r = conjugation_check(p, 500, 1);
    CHECK(r.samples == 500);
    CHECK(r.identity_counterexamples == 0);
    CHECK(r.iota_counterexamples == 0);
    CHECK(r.gamma_counterexamples == 0);
  }
  CHECK_THROWS_AS(conjugation_check(2, 1), MathError);
}

TEST_CASE("quotient census") {
  for (std::uint64_t p : {5ULL, 13ULL, 17ULL}) {
    EllipticCurve<Fp> E(curve_E(), PrimeField(p)), Ep(curve_E_prime(), PrimeField(p));
    auto ne = brute_points(E).size(), nf = brute_points(Ep).size();
    std::size_t te = 1, tf = 1;
    for (std::uint64_t x = 0; x < p; ++x) {
      te += (x * x * x + (p - 4) * x) % p == 0;
      tf += (x * x * x + x) % p == 0;
    }
    for (auto s : {QuotientSurface::S1, QuotientSurface::S2}) {
      auto c = quotient_census(s, p);
      CHECK(c.E_points == ne);
      CHECK(c.E_prime_points == nf);
      CHECK(c.product_fixed == te * tf);
      CHECK(c.product_orbits == (ne * nf - te * tf) / 2 + te * tf);
      CHECK(c.consistent);
      if (s == QuotientSurface::S2) {
        CHECK(c.base_orbits == (nf - tf) / 2);
        for (auto n : c.fiber_sizes_distinct) CHECK(n == ne);
        CHECK(c.fiber_sizes_distinct.size() == (nf > tf ? 1u : 0u));
      } else {
        CHECK(c.base_orbits == (ne - te) / 2);
        CHECK(c.surface_points == (ne - te) * nf);
      }
    }
  }
  CHECK_THROWS_AS(quotient_census(QuotientSurface::S1, 9), MathError);
}
