#pragma once

// Exact coefficient domains: Q (GMP rationals) and prime fields F_p.
//
// Every coefficient type K used with Polynomial<K> provides a nested
// K::Domain describing the field it lives in (modulus, parameter ring, ...)
// with zero(), one(), from_integer() and from_rational(). Elements carry
// enough of their domain to do arithmetic on their own.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

#include "cuboid/error.hpp"

namespace cuboid {

class Rational {
 public:
  struct Domain {
    Rational zero() const { return Rational(); }
    Rational one() const { return Rational(1); }
    Rational from_integer(const mpz_class& n) const { return Rational(n); }
    Rational from_rational(const Rational& q) const { return q; }
    std::string name() const { return "QQ"; }
    bool operator==(const Domain&) const { return true; }
  };

  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& n) : q_(n) {}

  /// Reduces n/d to lowest terms with a positive denominator.
  static Rational normalize(const mpz_class& n, const mpz_class& d) {
    if (d == 0) fail(ErrorCode::ZeroDenominator, "rational with denominator 0");
    Rational r;
    r.q_ = mpq_class(n, d);
    r.q_.canonicalize();
    return r;
  }

  /// Parses "n" or "n/d".
  static Rational parse(const std::string& text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  Domain domain() const { return {}; }

  Rational inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of 0 in QQ");
    Rational r;
    r.q_ = 1 / q_;
    return r;
  }

  Rational operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
  }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorCode::DivisionByZero, "division by 0 in QQ");
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

  std::string to_string() const { return q_.get_str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class q_;
};

inline Rational rat_normalize(const mpz_class& n, const mpz_class& d) {
  return Rational::normalize(n, d);
}

bool is_prime_u64(std::uint64_t n);

class Fp;

/// F_p for a prime p below 2^31 so that products fit in 64 bits.
class PrimeField {
 public:
  PrimeField() = default;
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  Fp zero() const;
  Fp one() const;
  Fp from_integer(const mpz_class& n) const;
  Fp from_rational(const Rational& q) const;
  Fp operator()(std::int64_t v) const;
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint64_t p_ = 0;
};

class Fp {
 public:
  using Domain = PrimeField;

  Fp() = default;
  Fp(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  Domain domain() const { return PrimeField(p_); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp pow(std::uint64_t e) const {
    Fp base = *this;
    Fp acc(1, p_);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  Fp inverse() const {
    if (v_ == 0) fail(ErrorCode::DivisionByZero, "inverse of 0 in GF(" + std::to_string(p_) + ")");
    // extended Euclid on signed 64-bit values
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p_), nr = static_cast<std::int64_t>(v_);
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return Fp(static_cast<std::uint64_t>(t), p_);
  }

  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(const Fp& o) {
    check(o);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    check(o);
    v_ = (v_ * o.v_) % p_;
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  std::string to_string() const { return std::to_string(v_); }
  friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

 private:
  void check(const Fp& o) const {
    if (p_ != o.p_) fail(ErrorCode::RingMismatch, "mixing GF(" + std::to_string(p_) + ") and GF(" +
                                                      std::to_string(o.p_) + ")");
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 1;
};

inline Fp ffield_inv(const Fp& a) { return a.inverse(); }

/// Euler's criterion. Zero counts as a square.
inline bool is_square_ffield(const Fp& a) {
  if (a.modulus() == 2) fail(ErrorCode::EvenCharacteristic, "square test needs odd p");
  if (a.is_zero()) return true;
  return a.pow((a.modulus() - 1) / 2).is_one();
}

/// Square root in F_p (Tonelli-Shanks); requires is_square_ffield(a).
Fp sqrt_ffield(const Fp& a);

}  // namespace cuboid
