#pragma once

#include <optional>
#include <string>

#include "cuboid/polynomial.hpp"

namespace cuboid {

/// Element of K(t_1, ..., t_m): a fraction of polynomials over a parameter
/// ring. No GCD cancellation is attempted; the denominator is scaled to
/// leading coefficient 1 and equality is tested by cross multiplication.
template <class K>
class RationalFunction {
 public:
  struct Domain {
    RingPtr<K> params;

    RationalFunction zero() const { return RationalFunction(Polynomial<K>(params), Polynomial<K>::one(params)); }
    RationalFunction one() const {
      return RationalFunction(Polynomial<K>::one(params), Polynomial<K>::one(params));
    }
    RationalFunction from_integer(const mpz_class& n) const {
      return RationalFunction(Polynomial<K>::constant(params, params->domain().from_integer(n)),
                              Polynomial<K>::one(params));
    }
    RationalFunction from_rational(const Rational& q) const {
      return RationalFunction(Polynomial<K>::constant(params, params->domain().from_rational(q)),
                              Polynomial<K>::one(params));
    }
    RationalFunction from_poly(const Polynomial<K>& p) const {
      return RationalFunction(p.in_ring(params), Polynomial<K>::one(params));
    }
    std::optional<RationalFunction> parameter(const std::string& name) const {
      if (auto idx = params->index_of(name)) return from_poly(Polynomial<K>::variable(params, *idx));
      return std::nullopt;
    }
    std::string name() const {
      std::string s = params->domain().name() + "(";
      for (std::size_t i = 0; i < params->nvars(); ++i) s += (i ? "," : "") + params->names()[i];
      return s + ")";
    }
    bool operator==(const Domain& o) const {
      return params == o.params || (params && o.params && params->same_as(*o.params));
    }
  };

  RationalFunction() = default;
  RationalFunction(Polynomial<K> num, Polynomial<K> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(ErrorCode::ZeroDenominator, "rational function with zero denominator");
    num_.check_ring(den_);
    normalize();
  }

  const Polynomial<K>& numerator() const { return num_; }
  const Polynomial<K>& denominator() const { return den_; }
  Domain domain() const { return Domain{num_.ring()}; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  RationalFunction inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero rational function");
    return RationalFunction(den_, num_);
  }

  RationalFunction operator-() const { return RationalFunction(-num_, den_, Raw{}); }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_, Raw{});
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return a.domain().zero();
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string to_string() const {
    if (den_.is_constant()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  struct Raw {};
  RationalFunction(Polynomial<K> num, Polynomial<K> den, Raw) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) den_ = Polynomial<K>::one(den_.ring());
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = Polynomial<K>::one(den_.ring());
      return;
    }
    auto lc = den_.leading_coefficient();
    if (!lc.is_one()) {
      auto inv = lc.inverse();
      num_ = num_.scale(inv);
      den_ = den_.scale(inv);
    }
  }

  Polynomial<K> num_;
  Polynomial<K> den_;
};

}  // namespace cuboid
