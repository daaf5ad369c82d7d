#pragma once

// Finite-field evidence for the quadratic tower
//   L0 = K(A,B) < L1 = L0(C) < L2 = L1(X) < L3 = L2(Y) < L4 = L3(Z) < L5 = L4(U)
// with C^2 = (alpha A^2 + beta B^2)/gamma, X^2 = B^2 + C^2, Y^2 = C^2 + A^2,
// Z^2 = A^2 + B^2, U^2 = A^2 + B^2 + C^2, after specializing everything to F_p.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cuboid/groebner.hpp"

namespace cuboid {

/// F_p extended by a chain of square roots. Each adjoined variable T has the
/// relation T^2 - a (a genuine extension) or T - sqrt(a) (a square already);
/// the relations have coprime leading monomials and form a Groebner basis.
class QuadraticTower {
 public:
  QuadraticTower(std::uint64_t p, std::vector<std::string> names);

  const RingPtr<Fp>& ring() const { return ring_; }
  const PrimeField& field() const { return F_; }
  const std::vector<Polynomial<Fp>>& relations() const { return relations_; }
  /// Number of genuine quadratic extensions so far; |L| = p^(2^k).
  std::size_t extension_degree_log2() const { return ext_; }
  mpz_class order() const;
  /// Monomials forming an F_p-basis of the current field.
  std::vector<Monomial> basis() const;

  Polynomial<Fp> reduce(const Polynomial<Fp>& f) const;
  Polynomial<Fp> mul(const Polynomial<Fp>& a, const Polynomial<Fp>& b) const { return reduce(a * b); }
  Polynomial<Fp> pow(Polynomial<Fp> a, mpz_class e) const;
  bool is_square(const Polynomial<Fp>& a) const;
  Polynomial<Fp> sqrt(const Polynomial<Fp>& a, std::uint64_t seed = 1) const;

  /// Adjoins the next variable as a square root of a; returns true when this
  /// is a proper extension (a not a square).
  bool adjoin(const Polynomial<Fp>& a);

  Polynomial<Fp> variable(const std::string& name) const { return Polynomial<Fp>::variable(ring_, name); }
  Polynomial<Fp> constant(std::int64_t v) const { return Polynomial<Fp>::constant(ring_, F_(v)); }

 private:
  PrimeField F_;
  RingPtr<Fp> ring_;
  std::vector<Polynomial<Fp>> relations_;
  std::vector<bool> extension_;  // per adjoined variable
  std::size_t ext_ = 0;
};

struct TowerStageTally {
  std::string variable;
  std::size_t extension = 0;  // adjoined element not a square
  std::size_t equality = 0;   // adjoined element a nonzero square
  std::size_t zero = 0;       // adjoined element zero (equality, degenerate)
};

struct TowerTrial {
  std::int64_t A = 0, B = 0, alpha = 0, beta = 0, gamma = 0;
  bool alpha_beta_reducible = false;  // alpha A^2 + beta B^2 splits over F_p
  std::array<int, 5> outcome{};       // 1 extension, 0 equality, -1 zero
};

struct TowerEvidence {
  std::uint64_t prime = 0;
  std::vector<TowerStageTally> stages;           // C, X, Y, Z, U
  std::vector<TowerStageTally> stages_reducible;  // restricted to reducible alpha A^2 + beta B^2
  std::vector<TowerStageTally> stages_irreducible;
  std::size_t reducible = 0, irreducible = 0;
  std::vector<TowerTrial> trials;
};

/// Random specializations of (A, B, alpha, beta, gamma) in F_p, walking the
/// tower and recording at each stage whether a square root is adjoined.
TowerEvidence tower_splitting_evidence(std::uint64_t p, std::size_t trials, std::uint64_t seed = 1);

/// The element whose square root the stage adjoins, in the tower built so far.
std::array<Polynomial<Fp>, 5> tower_stage_elements(const QuadraticTower& T, std::int64_t A, std::int64_t B,
                                                   std::int64_t alpha, std::int64_t beta, std::int64_t gamma,
                                                   std::size_t upto);

}  // namespace cuboid
