#include "cuboid/bielliptic.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

namespace cuboid {

CurveSpec curve_E() { return {"E", -4}; }
CurveSpec curve_E_prime() { return {"E'", 1}; }

namespace {

void require_good_prime(std::uint64_t p) {
  if (p == 2 || !is_prime_u64(p)) fail(ErrorCode::BadPrime, "need an odd prime, got " + std::to_string(p));
}

}  // namespace

std::vector<CurvePoint<Rational>> two_torsion(const EllipticCurve<Rational>& E) {
  std::vector<CurvePoint<Rational>> out{E.origin(), E.torsion_T()};
  // x^2 + a = 0 has rational roots iff -a is a perfect square
  mpz_class m = -E.spec().a;
  if (m > 0 && mpz_perfect_square_p(m.get_mpz_t())) {
    mpz_class r = sqrt(m);
    out.push_back(E.point(Rational(r), Rational()));
    out.push_back(E.point(Rational(-r), Rational()));
  }
  std::sort(out.begin() + 1, out.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
  return out;
}

std::vector<CurvePoint<Fp>> two_torsion(const EllipticCurve<Fp>& E) {
  std::vector<CurvePoint<Fp>> out{E.origin()};
  const auto& F = E.domain();
  for (std::uint64_t x = 0; x < F.modulus(); ++x) {
    Fp fx(x, F.modulus());
    if (E.rhs(fx).is_zero()) out.push_back({fx, F.zero(), false});
  }
  return out;
}

std::vector<CurvePoint<Fp>> enumerate_points(const EllipticCurve<Fp>& E) {
  std::vector<CurvePoint<Fp>> out{E.origin()};
  const auto& F = E.domain();
  auto p = F.modulus();
  for (std::uint64_t x = 0; x < p; ++x) {
    Fp fx(x, p);
    Fp r = E.rhs(fx);
    if (r.is_zero()) {
      out.push_back({fx, F.zero(), false});
    } else if (is_square_ffield(r)) {
      Fp y = sqrt_ffield(r), z = -y;
      if (z.value() < y.value()) std::swap(y, z);
      out.push_back({fx, y, false});
      out.push_back({fx, z, false});
    }
  }
  return out;
}

std::array<Polynomial<Rational>, 6> phi_polynomials(const RingPtr<Rational>& ring) {
  static const char* formulas[6] = {
      "y1^2*y2^2 - 16*x1^2*x2^2",
      "4*(y1^2*x2^2 - y2^2*x1^2)",
      "8*x1*x2*y1*y2",
      "4*(y1^2*x2^2 + y2^2*x1^2)",
      "y1^2*y2^2 + 16*x1^2*x2^2",
      "(y1^2 + 8*x1*z1)*(y2^2 + 8*x2*z2)",
  };
  std::array<Polynomial<Rational>, 6> out{
      Polynomial<Rational>(ring), Polynomial<Rational>(ring), Polynomial<Rational>(ring),
      Polynomial<Rational>(ring), Polynomial<Rational>(ring), Polynomial<Rational>(ring)};
  for (std::size_t i = 0; i < 6; ++i) out[i] = parse_poly(formulas[i], ring);
  return out;
}

PhiSymbolicReport phi_symbolic_check() {
  auto ring = PolyRing<Rational>::make({"x1", "y1", "z1", "x2", "y2", "z2"}, MonomialOrder::lex(6));
  // under lex the leading monomials x1^3 and x2^3 are coprime, so the pair is a Groebner basis
  std::vector<Polynomial<Rational>> rel{parse_poly("y1^2*z1 - x1^3 + 4*x1*z1^2", ring),
                                        parse_poly("y2^2*z2 - x2^3 + 4*x2*z2^2", ring)};
  PhiSymbolicReport rep;
  for (const auto& r : rel) rep.curve_relations.push_back(r.to_string());

  auto phis = phi_polynomials(ring);
  const auto& [A, B, C, X, Y, U] = phis;
  std::array<Polynomial<Rational>, 3> quadrics{A * A + C * C - Y * Y, B * B + C * C - X * X,
                                               A * A + X * X - U * U};
  rep.all_zero = true;
  for (std::size_t i = 0; i < 3; ++i) {
    auto nf = normal_form(quadrics[i], rel);
    rep.residues[i] = nf.to_string();
    rep.all_zero = rep.all_zero && nf.is_zero();
  }

  rep.bihomogeneous = true;
  for (const auto& f : phis) {
    for (const auto& t : f.terms()) {
      unsigned d1 = t.mono[0] + t.mono[1] + t.mono[2];
      unsigned d2 = t.mono[3] + t.mono[4] + t.mono[5];
      rep.bihomogeneous = rep.bihomogeneous && d1 == 2 && d2 == 2;
    }
  }

  std::map<std::string, Polynomial<Rational>> flip{{"y1", -Polynomial<Rational>::variable(ring, "y1")},
                                                   {"y2", -Polynomial<Rational>::variable(ring, "y2")}};
  rep.iota_invariant = true;
  for (const auto& f : phis) rep.iota_invariant = rep.iota_invariant && substitute(f, flip, ring) == f;
  return rep;
}

const std::vector<std::uint64_t>& default_sampling_primes() {
  static const std::vector<std::uint64_t> primes{13, 17, 10007, 10009, 10037};
  return primes;
}

namespace {

bool all_zero(const PhiImage<Fp>& im) {
  return std::all_of(im.coords.begin(), im.coords.end(), [](const Fp& c) { return c.is_zero(); });
}

bool on_V(const PhiImage<Fp>& im) {
  auto q = face_quadrics(im);
  return std::all_of(q.begin(), q.end(), [](const Fp& c) { return c.is_zero(); });
}

PhiSampleReport sample_prime(std::uint64_t p, std::size_t samples, std::uint64_t seed) {
  require_good_prime(p);
  PrimeField F(p);
  EllipticCurve<Fp> E(curve_E(), F), Ep(curve_E_prime(), F);
  std::mt19937_64 rng(seed ^ (p * 0x9E3779B97F4A7C15ULL));
  PhiSampleReport rep;
  rep.prime = p;
  rep.samples = samples;
  for (std::size_t i = 0; i < samples; ++i) {
    PointPair<Fp> pq{random_point(E, rng), random_point(E, rng)};
    auto im = phi(E, pq.first, pq.second);
    if (all_zero(im)) ++rep.zero_images;
    if (on_V(im)) ++rep.on_V;
    auto [gp, gq] = gamma(E, pq);
    if (projectively_equal(phi(E, gp, gq), im)) ++rep.gamma_equal;
    auto [ip, iq] = iota(E, pq);
    if (phi(E, ip, iq).coords == im.coords) ++rep.iota_equal;
    if (on_V(phi_points(pq.first, random_point(Ep, rng)))) ++rep.mixed_on_V;
  }
  return rep;
}

}  // namespace

std::vector<PhiSampleReport> phi_sampled_check(const std::vector<std::uint64_t>& primes, std::size_t samples,
                                               std::uint64_t seed) {
  for (auto p : primes) require_good_prime(p);
  std::vector<std::future<PhiSampleReport>> jobs;
  for (auto p : primes) jobs.push_back(std::async(std::launch::async, sample_prime, p, samples, seed));
  std::vector<PhiSampleReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

ConjugationReport conjugation_check(std::uint64_t p, std::size_t samples, std::uint64_t seed) {
  require_good_prime(p);
  PrimeField F(p);
  EllipticCurve<Fp> E(curve_E(), F);
  std::mt19937_64 rng(seed ^ (p * 0xC2B2AE3D27D4EB4FULL));
  ConjugationReport rep;
  rep.prime = p;
  rep.samples = samples;
  for (std::size_t i = 0; i < samples; ++i) {
    PointPair<Fp> pq{random_point(E, rng), random_point(E, rng)};
    auto a = alpha(E, pq);
    if (alpha_inverse(E, a) != pq) ++rep.identity_counterexamples;
    if (alpha_inverse(E, iota(E, a)) != iota(E, pq)) ++rep.iota_counterexamples;
    if (alpha_inverse(E, gamma(E, a)) != tau_prime(E, pq)) ++rep.gamma_counterexamples;
  }
  return rep;
}

namespace {

// index of -P for every P in an enumerate_points list
std::vector<std::size_t> negation_table(const EllipticCurve<Fp>& E, const std::vector<CurvePoint<Fp>>& pts) {
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> index;
  for (std::size_t i = 1; i < pts.size(); ++i) index[{pts[i].x.value(), pts[i].y.value()}] = i;
  std::vector<std::size_t> out(pts.size(), 0);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    auto n = E.neg(pts[i]);
    out[i] = index.at({n.x.value(), n.y.value()});
  }
  return out;
}

}  // namespace

QuotientCensus quotient_census(QuotientSurface s, std::uint64_t p) {
  require_good_prime(p);
  PrimeField F(p);
  EllipticCurve<Fp> E(curve_E(), F), Ep(curve_E_prime(), F);
  auto pe = enumerate_points(E), pf = enumerate_points(Ep);
  auto te = two_torsion(E), tf = two_torsion(Ep);

  QuotientCensus c;
  c.surface = s;
  c.prime = p;
  c.E_points = pe.size();
  c.E_prime_points = pf.size();
  c.E_two_torsion = te.size();
  c.E_prime_two_torsion = tf.size();
  c.fixed_expected = te.size() * tf.size();

  auto neg_e = negation_table(E, pe), neg_f = negation_table(Ep, pf);
  auto torsion_e = [&](std::size_t i) { return neg_e[i] == i; };
  auto torsion_f = [&](std::size_t j) { return neg_f[j] == j; };

  const std::size_t m = pf.size();
  // base orbit -> number of surface points over it
  std::map<std::size_t, std::size_t> fiber;
  for (std::size_t i = 0; i < pe.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t id = i * m + j, inv = neg_e[i] * m + neg_f[j];
      // each orbit is counted at its smaller index
      if (id <= inv) ++c.product_orbits;
      if (id == inv) ++c.product_fixed;
      bool keep = s == QuotientSurface::S1 ? !torsion_e(i) : !torsion_f(j);
      if (!keep) continue;
      ++c.surface_points;
      if (id <= inv) ++c.surface_orbits;
      std::size_t base = s == QuotientSurface::S1 ? std::min(i, neg_e[i]) : std::min(j, neg_f[j]);
      ++fiber[base];
    }
  }
  c.base_orbits = fiber.size();
  if (s == QuotientSurface::S1) {
    c.base_expected = (pe.size() - te.size()) / 2;
    c.fiber_expected = pf.size();
  } else {
    c.base_expected = (pf.size() - tf.size()) / 2;
    c.fiber_expected = pe.size();
  }
  std::set<std::size_t> sizes;
  // each base orbit {b, -b} carries 2 * |fiber curve| points, folded in pairs by inv
  for (const auto& [b, n] : fiber) sizes.insert(n / 2);
  c.fiber_sizes_distinct.assign(sizes.begin(), sizes.end());

  std::size_t fixed_points = c.product_fixed;
  c.consistent = c.product_fixed == c.fixed_expected &&
                 c.product_orbits == (pe.size() * pf.size() - fixed_points) / 2 + fixed_points &&
                 c.surface_orbits * 2 == c.surface_points && c.base_orbits == c.base_expected &&
                 std::all_of(sizes.begin(), sizes.end(), [&](std::size_t n) { return n == c.fiber_expected; });
  return c;
}

}  // namespace cuboid
