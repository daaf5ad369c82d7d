#include "cuboid/tower.hpp"

#include <random>

namespace cuboid {

namespace {

std::vector<std::size_t> reversed_ranking(std::size_t n) {
  std::vector<std::size_t> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = n - 1 - i;
  return r;
}

}  // namespace

QuadraticTower::QuadraticTower(std::uint64_t p, std::vector<std::string> names) {
  if (p == 2 || !is_prime_u64(p)) fail(ErrorCode::BadPrime, "tower needs an odd prime, got " + std::to_string(p));
  F_ = PrimeField(p);
  auto n = names.size();
  ring_ = PolyRing<Fp>::make(std::move(names), MonomialOrder::lex(reversed_ranking(n)), F_);
}

mpz_class QuadraticTower::order() const {
  mpz_class q = F_.modulus();
  for (std::size_t i = 0; i < ext_; ++i) q *= q;
  return q;
}

std::vector<Monomial> QuadraticTower::basis() const {
  std::vector<Monomial> out{Monomial()};
  for (std::size_t v = 0; v < extension_.size(); ++v) {
    if (!extension_[v]) continue;
    auto n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * Monomial::variable(v));
  }
  return out;
}

Polynomial<Fp> QuadraticTower::reduce(const Polynomial<Fp>& f) const {
  return relations_.empty() ? f : normal_form(f, relations_);
}

Polynomial<Fp> QuadraticTower::pow(Polynomial<Fp> a, mpz_class e) const {
  auto acc = Polynomial<Fp>::one(ring_);
  a = reduce(a);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = mul(acc, a);
    e >>= 1;
    if (e > 0) a = mul(a, a);
  }
  return acc;
}

bool QuadraticTower::is_square(const Polynomial<Fp>& a) const {
  auto r = reduce(a);
  if (r.is_zero()) return true;
  mpz_class e = (order() - 1) / 2;
  return pow(r, e) == Polynomial<Fp>::one(ring_);
}

Polynomial<Fp> QuadraticTower::sqrt(const Polynomial<Fp>& a, std::uint64_t seed) const {
  auto n = reduce(a);
  if (n.is_zero()) return n;
  if (!is_square(n)) fail(ErrorCode::InvalidArgument, "element is not a square");
  mpz_class q1 = order() - 1, m = q1;
  unsigned s = 0;
  while (mpz_even_p(m.get_mpz_t())) {
    m >>= 1;
    ++s;
  }
  auto one = Polynomial<Fp>::one(ring_);
  // a non-square of L
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coef(0, F_.modulus() - 1);
  auto B = basis();
  Polynomial<Fp> z(ring_);
  do {
    z = Polynomial<Fp>(ring_);
    for (const auto& mono : B) z += Polynomial<Fp>::monomial(ring_, mono, Fp(coef(rng), F_.modulus()));
  } while (z.is_zero() || is_square(z));

  auto c = pow(z, m);
  auto t = pow(n, m);
  auto r = pow(n, (m + 1) / 2);
  unsigned M = s;
  while (t != one) {
    unsigned i = 0;
    auto tt = t;
    while (tt != one) {
      tt = mul(tt, tt);
      ++i;
    }
    auto b = c;
    for (unsigned k = 0; k + i + 1 < M; ++k) b = mul(b, b);
    M = i;
    c = mul(b, b);
    t = mul(t, c);
    r = mul(r, b);
  }
  return r;
}

bool QuadraticTower::adjoin(const Polynomial<Fp>& a) {
  auto v = extension_.size();
  if (v >= ring_->nvars()) fail(ErrorCode::InvalidArgument, "tower has no variable left to adjoin");
  auto T = Polynomial<Fp>::variable(ring_, v);
  auto r = reduce(a);
  if (is_square(r)) {
    relations_.push_back(T - sqrt(r));
    extension_.push_back(false);
    return false;
  }
  relations_.push_back(T * T - r);
  extension_.push_back(true);
  ++ext_;
  return true;
}

std::array<Polynomial<Fp>, 5> tower_stage_elements(const QuadraticTower& T, std::int64_t A, std::int64_t B,
                                                   std::int64_t alpha, std::int64_t beta, std::int64_t gamma,
                                                   std::size_t upto) {
  const auto& F = T.field();
  if (F(gamma).is_zero()) fail(ErrorCode::DegenerateCoefficients, "gamma vanishes mod p");
  auto a = T.constant(A), b = T.constant(B);
  auto a2 = a * a, b2 = b * b;
  std::array<Polynomial<Fp>, 5> out{Polynomial<Fp>(T.ring()), Polynomial<Fp>(T.ring()), Polynomial<Fp>(T.ring()),
                                    Polynomial<Fp>(T.ring()), Polynomial<Fp>(T.ring())};
  out[0] = (T.constant(alpha) * a2 + T.constant(beta) * b2).scale(F(gamma).inverse());
  if (upto < 1) return out;
  auto c2 = T.reduce(T.variable("C") * T.variable("C"));
  out[1] = b2 + c2;
  out[2] = c2 + a2;
  out[3] = a2 + b2;
  out[4] = a2 + b2 + c2;
  return out;
}

TowerEvidence tower_splitting_evidence(std::uint64_t p, std::size_t trials, std::uint64_t seed) {
  if (p == 2 || !is_prime_u64(p)) fail(ErrorCode::BadPrime, "tower needs an odd prime, got " + std::to_string(p));
  static const std::array<const char*, 5> names{"C", "X", "Y", "Z", "U"};
  TowerEvidence ev;
  ev.prime = p;
  for (auto* tally : {&ev.stages, &ev.stages_reducible, &ev.stages_irreducible}) {
    for (auto n : names) tally->push_back({n});
  }
  PrimeField F(p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> val(0, static_cast<std::int64_t>(p) - 1);
  std::uniform_int_distribution<std::int64_t> nonzero(1, static_cast<std::int64_t>(p) - 1);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    TowerTrial tr;
    tr.A = val(rng);
    tr.B = val(rng);
    tr.alpha = val(rng);
    tr.beta = val(rng);
    tr.gamma = nonzero(rng);
    auto fa = F(tr.alpha), fb = F(tr.beta);
    // alpha A^2 + beta B^2 factors over F_p iff a coefficient vanishes or -beta/alpha is a square
    tr.alpha_beta_reducible =
        fa.is_zero() || fb.is_zero() || (-fb * fa.inverse()).pow((p - 1) / 2).is_one();

    QuadraticTower T(p, {"C", "X", "Y", "Z", "U"});
    for (std::size_t k = 0; k < 5; ++k) {
      auto elem = tower_stage_elements(T, tr.A, tr.B, tr.alpha, tr.beta, tr.gamma, k)[k];
      bool zero = T.reduce(elem).is_zero();
      bool ext = T.adjoin(elem);
      tr.outcome[k] = ext ? 1 : (zero ? -1 : 0);
      auto& side = tr.alpha_beta_reducible ? ev.stages_reducible : ev.stages_irreducible;
      for (auto* tally : {&ev.stages[k], &side[k]}) {
        if (ext) {
          ++tally->extension;
        } else if (zero) {
          ++tally->zero;
        } else {
          ++tally->equality;
        }
      }
    }
    (tr.alpha_beta_reducible ? ev.reducible : ev.irreducible)++;
    ev.trials.push_back(tr);
  }
  return ev;
}

}  // namespace cuboid
