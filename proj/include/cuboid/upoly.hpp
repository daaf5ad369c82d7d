#pragma once

// Dense univariate polynomials: Euclidean arithmetic, squarefree parts,
// Sturm chains over QQ and root finding over prime fields.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cuboid/polynomial.hpp"

namespace cuboid {

template <class K>
class UPoly {
 public:
  using Domain = typename K::Domain;

  UPoly() = default;
  explicit UPoly(Domain d) : dom_(std::move(d)) {}
  UPoly(Domain d, std::vector<K> coeffs) : dom_(std::move(d)), c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const Domain& d, const K& v) { return UPoly(d, {v}); }
  static UPoly x(const Domain& d) { return UPoly(d, {d.zero(), d.one()}); }
  static UPoly monomial(const Domain& d, std::size_t deg, const K& v) {
    std::vector<K> c(deg + 1, d.zero());
    c[deg] = v;
    return UPoly(d, std::move(c));
  }

  /// Coefficients of a polynomial that uses at most the variable `var`.
  static UPoly from_polynomial(const Polynomial<K>& f, std::size_t var) {
    UPoly out(f.ring()->domain());
    for (const auto& t : f.terms()) {
      if (t.mono.degree() != t.mono[var]) fail(ErrorCode::InvalidArgument, "polynomial is not univariate");
      std::size_t e = t.mono[var];
      if (out.c_.size() <= e) out.c_.resize(e + 1, out.dom_.zero());
      out.c_[e] += t.coeff;
    }
    out.trim();
    return out;
  }

  Polynomial<K> to_polynomial(const RingPtr<K>& ring, std::size_t var) const {
    std::vector<Term<K>> terms;
    for (std::size_t e = 0; e < c_.size(); ++e) {
      if (!c_[e].is_zero()) terms.push_back({Monomial::variable(var, static_cast<unsigned>(e)), c_[e]});
    }
    return Polynomial<K>::from_terms(ring, std::move(terms));
  }

  const Domain& domain() const { return dom_; }
  const std::vector<K>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  K coeff(std::size_t e) const { return e < c_.size() ? c_[e] : dom_.zero(); }
  const K& leading() const {
    if (c_.empty()) fail(ErrorCode::ZeroPolynomial, "leading coefficient of 0");
    return c_.back();
  }

  K operator()(const K& v) const {
    K acc = dom_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
    return acc;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r(a.dom_, a.c_);
    if (r.c_.size() < b.c_.size()) r.c_.resize(b.c_.size(), a.dom_.zero());
    for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  UPoly operator-() const {
    UPoly r(dom_, c_);
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly(a.dom_);
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, a.dom_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(a.dom_, std::move(c));
  }
  UPoly scale(const K& v) const {
    UPoly r(dom_, c_);
    for (auto& x : r.c_) x *= v;
    r.trim();
    return r;
  }
  UPoly monic() const { return is_zero() ? *this : scale(leading().inverse()); }

  /// Quotient and remainder; b must be nonzero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    UPoly r = a;
    if (a.degree() < b.degree()) return {UPoly(a.dom_), r};
    std::vector<K> q(a.c_.size() - b.c_.size() + 1, a.dom_.zero());
    K inv = b.leading().inverse();
    for (int d = r.degree(); d >= b.degree() && !r.is_zero(); d = r.degree()) {
      K f = r.c_.back() * inv;
      std::size_t shift = static_cast<std::size_t>(d - b.degree());
      q[shift] = f;
      for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i + shift] -= f * b.c_[i];
      r.trim();
    }
    return {UPoly(a.dom_, std::move(q)), r};
  }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

  UPoly derivative() const {
    if (c_.size() <= 1) return UPoly(dom_);
    std::vector<K> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * dom_.from_integer(mpz_class(static_cast<unsigned long>(i))));
    return UPoly(dom_, std::move(d));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!(a.c_[i] == b.c_[i])) return false;
    }
    return true;
  }

  std::string to_string(const std::string& var = "t") const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      std::string coef = c_[i].to_string();
      bool neg = coef[0] == '-';
      if (neg) coef.erase(0, 1);
      if (!s.empty()) s += neg ? " - " : " + ";
      else if (neg) s += "-";
      bool show = i == 0 || coef != "1";
      if (show) s += detail::coeff_needs_parens<K>(coef) ? "(" + coef + ")" : coef;
      if (i > 0) {
        if (show) s += "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
      }
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Domain dom_{};
  std::vector<K> c_;
};

template <class K>
UPoly<K> upoly_gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// f / gcd(f, f'), monic. Over F_p this is only meaningful for degree < p.
template <class K>
UPoly<K> squarefree_part(const UPoly<K>& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree part of 0");
  auto g = upoly_gcd(f, f.derivative());
  return (f / g).monic();
}

/// a^e mod m for a big exponent.
template <class K>
UPoly<K> upoly_powmod(UPoly<K> a, mpz_class e, const UPoly<K>& m) {
  UPoly<K> acc = UPoly<K>::constant(m.domain(), m.domain().one()) % m;
  a = a % m;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = (acc * a) % m;
    e >>= 1;
    if (e > 0) a = (a * a) % m;
  }
  return acc;
}

// ---------------------------------------------------------------- Sturm / QQ

using UPolyQ = UPoly<Rational>;

struct SturmChain {
  std::vector<UPolyQ> chain;
};

/// f, f', then negated remainders.
inline SturmChain sturm_chain(const UPolyQ& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "Sturm chain of 0");
  SturmChain s;
  s.chain.push_back(f);
  auto d = f.derivative();
  if (d.is_zero()) return s;
  s.chain.push_back(d);
  while (true) {
    auto r = s.chain[s.chain.size() - 2] % s.chain.back();
    if (r.is_zero()) break;
    s.chain.push_back(-r);
  }
  return s;
}

namespace detail {

inline int sign_at(const UPolyQ& f, const Rational& x) { return f(x).sign(); }

/// Sign at +inf (positive = true) or -inf.
inline int sign_at_infinity(const UPolyQ& f, bool positive) {
  int s = f.leading().sign();
  if (!positive && f.degree() % 2 == 1) s = -s;
  return s;
}

inline int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace detail

/// Sign variations of the chain at a finite point or at +-infinity.
inline int sturm_variations(const SturmChain& s, const std::optional<Rational>& x, bool plus_infinity = true) {
  std::vector<int> signs;
  for (const auto& p : s.chain) {
    signs.push_back(x ? detail::sign_at(p, *x) : detail::sign_at_infinity(p, plus_infinity));
  }
  return detail::variations(signs);
}

/// 1 + max |a_i / a_n|: every complex root has absolute value below it.
inline Rational cauchy_bound(const UPolyQ& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "root bound of 0");
  Rational m;
  Rational lead = f.leading();
  for (int i = 0; i < f.degree(); ++i) {
    Rational r = f.coeff(static_cast<std::size_t>(i)) / lead;
    if (r.sign() < 0) r = -r;
    if (m < r) m = r;
  }
  return m + Rational(1);
}

struct RealRootCount {
  std::size_t count = 0;
  bool squarefree_taken = false;  // input had repeated factors
};

/// Distinct real roots in the open interval (a, b), or on all of R when no
/// interval is given. Endpoints that are roots are not counted.
inline RealRootCount count_real_roots(const UPolyQ& f, std::optional<std::pair<Rational, Rational>> interval = {}) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "real roots of 0");
  RealRootCount out;
  UPolyQ g = squarefree_part(f);
  out.squarefree_taken = g.degree() != f.degree();
  if (g.degree() == 0) return out;
  auto s = sturm_chain(g);
  if (!interval) {
    out.count = static_cast<std::size_t>(sturm_variations(s, std::nullopt, false) - sturm_variations(s, std::nullopt, true));
    return out;
  }
  auto [a, b] = *interval;
  if (!(a < b)) return out;
  int va = sturm_variations(s, a), vb = sturm_variations(s, b);
  int n = va - vb;
  // Sturm counts (a, b]; drop a root sitting at b
  if (g(b).is_zero()) --n;
  out.count = static_cast<std::size_t>(n);
  return out;
}

// ------------------------------------------------------------- prime fields

using UPolyP = UPoly<Fp>;

/// True when f splits into distinct linear factors over F_p, i.e. f divides
/// x^p - x.
inline bool splits_completely(const UPolyP& f) {
  if (f.is_zero()) return false;
  if (f.degree() <= 0) return true;
  mpz_class p(static_cast<unsigned long>(f.domain().modulus()));
  auto x = UPolyP::x(f.domain());
  return upoly_powmod(x, p, f) == x % f;
}

/// Distinct-degree factorization of a squarefree monic f: pairs (d, product of
/// all irreducible factors of degree d).
inline std::vector<std::pair<int, UPolyP>> distinct_degree_factorization(UPolyP f) {
  std::vector<std::pair<int, UPolyP>> out;
  const auto& dom = f.domain();
  mpz_class p(static_cast<unsigned long>(dom.modulus()));
  auto x = UPolyP::x(dom);
  auto h = x;
  f = f.monic();
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = upoly_powmod(h, p, f);
    auto g = upoly_gcd(f, h - x);
    if (g.degree() > 0) {
      out.push_back({d, g});
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back({f.degree(), f});
  return out;
}

/// Roots of a product of distinct linear factors (Cantor-Zassenhaus splitting
/// with a seeded generator).
inline std::vector<Fp> roots_of_split(const UPolyP& f, std::uint64_t seed = 1) {
  const auto& dom = f.domain();
  std::uint64_t p = dom.modulus();
  std::vector<Fp> roots;
  std::vector<UPolyP> work{f.monic()};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, p - 1);
  while (!work.empty()) {
    auto g = work.back();
    work.pop_back();
    if (g.degree() <= 0) continue;
    if (g.degree() == 1) {
      roots.push_back(-g.coeff(0));
      continue;
    }
    if (p == 2) {
      for (std::uint64_t v = 0; v < 2; ++v) {
        if (g(dom(static_cast<std::int64_t>(v))).is_zero()) roots.push_back(dom(static_cast<std::int64_t>(v)));
      }
      continue;
    }
    while (true) {
      auto a = UPolyP(dom, {dom(static_cast<std::int64_t>(pick(rng))), dom.one()});
      auto w = upoly_powmod(a, mpz_class(static_cast<unsigned long>((p - 1) / 2)), g);
      auto d = upoly_gcd(g, w - UPolyP::constant(dom, dom.one()));
      if (d.degree() > 0 && d.degree() < g.degree()) {
        work.push_back(d);
        work.push_back(g / d);
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Fp& a, const Fp& b) { return a.value() < b.value(); });
  return roots;
}

}  // namespace cuboid
