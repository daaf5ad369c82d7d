#include "cuboid/scalar.hpp"

namespace cuboid {

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(text, 10));
    return normalize(mpz_class(text.substr(0, slash), 10), mpz_class(text.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::SyntaxError, "bad rational literal '" + text + "'");
  }
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 17; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ULL << 31)) fail(ErrorCode::InvalidArgument, "modulus must be below 2^31");
  if (!is_prime_u64(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

Fp PrimeField::zero() const { return Fp(0, p_); }
Fp PrimeField::one() const { return Fp(1, p_); }

Fp PrimeField::from_integer(const mpz_class& n) const {
  mpz_class r = n % static_cast<unsigned long>(p_);
  if (r < 0) r += static_cast<unsigned long>(p_);
  return Fp(r.get_ui(), p_);
}

Fp PrimeField::from_rational(const Rational& q) const {
  Fp den = from_integer(q.denominator());
  if (den.is_zero()) {
    fail(ErrorCode::BadPrime, "denominator of " + q.to_string() + " vanishes mod " + std::to_string(p_));
  }
  return from_integer(q.numerator()) / den;
}

Fp PrimeField::operator()(std::int64_t v) const {
  std::int64_t p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return Fp(static_cast<std::uint64_t>(r), p_);
}

Fp sqrt_ffield(const Fp& a) {
  if (!is_square_ffield(a)) fail(ErrorCode::InvalidArgument, a.to_string() + " is not a square");
  if (a.is_zero()) return a;
  const std::uint64_t p = a.modulus();
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  Fp z(2, p);
  while (is_square_ffield(z)) z += Fp(1, p);
  Fp c = z.pow(q);
  Fp x = a.pow((q + 1) / 2);
  Fp t = a.pow(q);
  unsigned m = s;
  while (!t.is_one()) {
    unsigned i = 0;
    Fp t2 = t;
    while (!t2.is_one()) {
      t2 *= t2;
      ++i;
    }
    Fp b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b *= b;
    x *= b;
    c = b * b;
    t *= c;
    m = i;
  }
  return x;
}

}  // namespace cuboid
