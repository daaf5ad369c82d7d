#pragma once

// The curves y^2 z = x^3 + a x z^2, their group law, the map from E x E to
// the face-cuboid surface and the automorphisms acting on E x E.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <type_traits>
#include <utility>
#include <string>
#include <vector>

#include "cuboid/groebner.hpp"

namespace cuboid {

struct CurveSpec {
  std::string name;
  long a = 0;  // y^2 z = x^3 + a x z^2
};

/// a = -4
CurveSpec curve_E();
/// a = +1
CurveSpec curve_E_prime();

/// A point in normalized projective coordinates: [x:y:1] or O = [0:1:0].
template <class K>
struct CurvePoint {
  K x, y;
  bool infinity = false;

  std::array<K, 3> projective() const {
    const auto& d = x.domain();
    if (infinity) return {d.zero(), d.one(), d.zero()};
    return {x, y, d.one()};
  }
  friend bool operator==(const CurvePoint& p, const CurvePoint& q) {
    if (p.infinity || q.infinity) return p.infinity == q.infinity;
    return p.x == q.x && p.y == q.y;
  }
};

template <class K>
class EllipticCurve {
 public:
  EllipticCurve(CurveSpec spec, typename K::Domain dom) : spec_(std::move(spec)), dom_(std::move(dom)) {
    a_ = scalar(spec_.a);
    // y^2 = x^3 + a x is singular iff 4a^3 = 0
    if ((scalar(4) * a_ * a_ * a_).is_zero()) {
      fail(ErrorCode::BadPrime, spec_.name + " has bad reduction in " + dom_.name());
    }
  }

  const CurveSpec& spec() const { return spec_; }
  const typename K::Domain& domain() const { return dom_; }
  const K& a() const { return a_; }

  CurvePoint<K> origin() const { return {dom_.zero(), dom_.one(), true}; }
  /// T = [0:0:1]
  CurvePoint<K> torsion_T() const { return {dom_.zero(), dom_.zero(), false}; }

  K rhs(const K& x) const { return x * x * x + a_ * x; }
  bool contains(const CurvePoint<K>& P) const { return P.infinity || P.y * P.y == rhs(P.x); }
  void require(const CurvePoint<K>& P) const {
    if (!contains(P)) fail(ErrorCode::PointNotOnCurve, "point not on " + spec_.name);
  }

  CurvePoint<K> point(const K& x, const K& y) const {
    CurvePoint<K> P{x, y, false};
    require(P);
    return P;
  }

  CurvePoint<K> neg(const CurvePoint<K>& P) const {
    require(P);
    if (P.infinity) return P;
    return {P.x, -P.y, false};
  }

  CurvePoint<K> add(const CurvePoint<K>& P, const CurvePoint<K>& Q) const {
    require(P);
    require(Q);
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    K lambda;
    if (P.x == Q.x) {
      if ((P.y + Q.y).is_zero()) return origin();
      lambda = (scalar(3) * P.x * P.x + a_) / (scalar(2) * P.y);
    } else {
      lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    K x3 = lambda * lambda - P.x - Q.x;
    K y3 = lambda * (P.x - x3) - P.y;
    return {x3, y3, false};
  }

  CurvePoint<K> sub(const CurvePoint<K>& P, const CurvePoint<K>& Q) const { return add(P, neg(Q)); }

 private:
  K scalar(long v) const {
    if constexpr (std::is_same_v<K, Fp>) {
      return dom_(v);
    } else {
      return K(v);
    }
  }

  CurveSpec spec_;
  typename K::Domain dom_;
  K a_;
};

/// Points with y = 0 and O: over QQ the rational roots of x^3 + a x, over
/// F_p the roots in F_p.
std::vector<CurvePoint<Rational>> two_torsion(const EllipticCurve<Rational>& E);
std::vector<CurvePoint<Fp>> two_torsion(const EllipticCurve<Fp>& E);

/// All F_p-points, O first, then by (x, y).
std::vector<CurvePoint<Fp>> enumerate_points(const EllipticCurve<Fp>& E);

/// A uniformly chosen affine point (x drawn until x^3 + a x is a square).
template <class Rng>
CurvePoint<Fp> random_point(const EllipticCurve<Fp>& E, Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, E.domain().modulus() - 1);
  for (;;) {
    Fp x = E.domain()(static_cast<std::int64_t>(dist(rng)));
    Fp r = E.rhs(x);
    if (!is_square_ffield(r)) continue;
    Fp y = sqrt_ffield(r);
    if (dist(rng) % 2 == 1) y = -y;
    return {x, y, false};
  }
}

// ------------------------------------------------------------------- Phi

template <class K>
struct PhiImage {
  std::array<K, 6> coords;  // A, B, C, X, Y, U
};

inline const std::array<const char*, 6>& phi_coordinate_names() {
  static const std::array<const char*, 6> n{"A", "B", "C", "X", "Y", "U"};
  return n;
}

/// The six bidegree (2,2) forms in x1, y1, z1, x2, y2, z2.
std::array<Polynomial<Rational>, 6> phi_polynomials(const RingPtr<Rational>& ring);

/// The six formulas at two points, with no curve membership check.
template <class K>
PhiImage<K> phi_points(const CurvePoint<K>& P, const CurvePoint<K>& Q) {
  auto [x1, y1, z1] = P.projective();
  auto [x2, y2, z2] = Q.projective();
  const auto d = z1.domain();
  auto c = [&](long v) { return d.from_integer(mpz_class(v)); };
  K a = y1 * y1 * y2 * y2, b = c(16) * x1 * x1 * x2 * x2;
  K s = y1 * y1 * x2 * x2, t = y2 * y2 * x1 * x1;
  return PhiImage<K>{{a - b, c(4) * (s - t), c(8) * x1 * x2 * y1 * y2, c(4) * (s + t), a + b,
                      (y1 * y1 + c(8) * x1 * z1) * (y2 * y2 + c(8) * x2 * z2)}};
}

template <class K>
PhiImage<K> phi(const EllipticCurve<K>& E, const CurvePoint<K>& P, const CurvePoint<K>& Q) {
  E.require(P);
  E.require(Q);
  return phi_points(P, Q);
}

/// The three face-cuboid quadrics at a point.
template <class K>
std::array<K, 3> face_quadrics(const PhiImage<K>& im) {
  const auto& [A, B, C, X, Y, U] = im.coords;
  return {A * A + C * C - Y * Y, B * B + C * C - X * X, A * A + X * X - U * U};
}

/// Equal as projective points (all 2x2 minors vanish, neither vector zero).
template <class K>
bool projectively_equal(const PhiImage<K>& p, const PhiImage<K>& q) {
  bool pz = true, qz = true;
  for (std::size_t i = 0; i < 6; ++i) {
    pz = pz && p.coords[i].is_zero();
    qz = qz && q.coords[i].is_zero();
  }
  if (pz || qz) return false;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) {
      if (!(p.coords[i] * q.coords[j] - p.coords[j] * q.coords[i]).is_zero()) return false;
    }
  }
  return true;
}

struct PhiSymbolicReport {
  std::vector<std::string> curve_relations;
  std::array<std::string, 3> residues;  // normal forms of the three quadrics
  bool all_zero = false;
  bool bihomogeneous = false;           // every coordinate of bidegree (2,2)
  bool iota_invariant = false;          // exact polynomial identity
};

PhiSymbolicReport phi_symbolic_check();

struct PhiSampleReport {
  std::uint64_t prime = 0;
  std::size_t samples = 0;
  std::size_t on_V = 0;              // images satisfying all three quadrics
  std::size_t zero_images = 0;       // Phi vanishes identically at the sample
  std::size_t gamma_equal = 0;       // Phi(gamma(P,Q)) ~ Phi(P,Q)
  std::size_t iota_equal = 0;        // Phi(iota(P,Q)) = Phi(P,Q)
  std::size_t mixed_on_V = 0;        // samples of E x E' whose image lies on V
};

/// Random (P, Q) in E(F_p) x E(F_p) per prime; p = 2 or composite is rejected.
std::vector<PhiSampleReport> phi_sampled_check(const std::vector<std::uint64_t>& primes, std::size_t samples,
                                               std::uint64_t seed = 1);

const std::vector<std::uint64_t>& default_sampling_primes();

// ---------------------------------------------------------- automorphisms

template <class K>
using PointPair = std::pair<CurvePoint<K>, CurvePoint<K>>;

template <class K>
PointPair<K> iota(const EllipticCurve<K>& E, const PointPair<K>& pq) {
  return {E.neg(pq.first), E.neg(pq.second)};
}
template <class K>
PointPair<K> gamma(const EllipticCurve<K>& E, const PointPair<K>& pq) {
  return {E.add(pq.first, E.torsion_T()), E.add(pq.second, E.torsion_T())};
}
template <class K>
PointPair<K> tau_prime(const EllipticCurve<K>& E, const PointPair<K>& pq) {
  return {pq.first, E.add(pq.second, E.torsion_T())};
}
template <class K>
PointPair<K> alpha(const EllipticCurve<K>& E, const PointPair<K>& pq) {
  return {E.add(pq.first, pq.second), pq.second};
}
template <class K>
PointPair<K> alpha_inverse(const EllipticCurve<K>& E, const PointPair<K>& pq) {
  return {E.sub(pq.first, pq.second), pq.second};
}

struct ConjugationReport {
  std::uint64_t prime = 0;
  std::size_t samples = 0;
  std::size_t iota_counterexamples = 0;   // alpha^-1 iota alpha != iota
  std::size_t gamma_counterexamples = 0;  // alpha^-1 gamma alpha != tau'
  std::size_t identity_counterexamples = 0;
};

ConjugationReport conjugation_check(std::uint64_t p, std::size_t samples, std::uint64_t seed = 1);

// ------------------------------------------------------------ quotients

enum class QuotientSurface { S1, S2 };

struct QuotientCensus {
  QuotientSurface surface = QuotientSurface::S1;
  std::uint64_t prime = 0;
  std::size_t E_points = 0, E_prime_points = 0;
  std::size_t E_two_torsion = 0, E_prime_two_torsion = 0;
  std::size_t product_orbits = 0;     // inv-orbits on E x E'
  std::size_t product_fixed = 0;      // fixed points of inv on E x E'
  std::size_t fixed_expected = 0;     // |E[2]| * |E'[2]|
  std::size_t surface_points = 0;     // points of the removed-torsion product
  std::size_t surface_orbits = 0;     // inv-orbits on it
  std::size_t base_orbits = 0;        // orbits of the base of the projection
  std::size_t base_expected = 0;      // (|base curve| - |its 2-torsion|) / 2
  std::vector<std::size_t> fiber_sizes_distinct;  // distinct fiber sizes over base orbits
  std::size_t fiber_expected = 0;     // points of the fiber curve
  bool consistent = false;
};

QuotientCensus quotient_census(QuotientSurface s, std::uint64_t p);

}  // namespace cuboid
