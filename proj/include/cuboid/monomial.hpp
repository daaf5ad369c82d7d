#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cuboid/error.hpp"

namespace cuboid {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector. Unused slots stay zero so comparisons and hashing can
/// ignore the ring's variable count.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() { e_.fill(0); }
  explicit Monomial(const std::vector<int>& exps) {
    e_.fill(0);
    if (exps.size() > kMaxVars) fail(ErrorCode::InvalidArgument, "too many variables");
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0 || exps[i] > 0xFFFF) fail(ErrorCode::ExponentOverflow, "exponent out of range");
      e_[i] = static_cast<Exponent>(exps[i]);
      deg_ += static_cast<std::uint32_t>(exps[i]);
    }
  }

  static Monomial variable(std::size_t index, unsigned power = 1) {
    Monomial m;
    m.set(index, power);
    return m;
  }

  unsigned operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  void set(std::size_t i, unsigned v) {
    if (v > 0xFFFF) fail(ErrorCode::ExponentOverflow, "exponent out of range");
    deg_ = deg_ - e_[i] + v;
    e_[i] = static_cast<Exponent>(v);
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned s = static_cast<unsigned>(e_[i]) + o.e_[i];
      if (s > 0xFFFF) fail(ErrorCode::ExponentOverflow, "exponent overflow in product");
      r.e_[i] = static_cast<Exponent>(s);
    }
    r.deg_ = deg_ + o.deg_;
    return r;
  }

  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (e_[i] > o.e_[i]) return false;
    }
    return true;
  }

  /// o / *this; caller guarantees divides(o).
  Monomial quotient_of(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<Exponent>(o.e_[i] - e_[i]);
    r.deg_ = o.deg_ - deg_;
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.e_[i] = std::max(e_[i], o.e_[i]);
      r.deg_ += r.e_[i];
    }
    return r;
  }

  Monomial gcd(const Monomial& o) const {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.e_[i] = std::min(e_[i], o.e_[i]);
      r.deg_ += r.e_[i];
    }
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (e_[i] && o.e_[i]) return false;
    }
    return true;
  }

  std::vector<int> exponents(std::size_t nvars) const {
    return std::vector<int>(e_.begin(), e_.begin() + static_cast<std::ptrdiff_t>(nvars));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : e_) h = (h ^ v) * 1099511628211ULL;
    return h;
  }

 private:
  std::array<Exponent, kMaxVars> e_;
  std::uint32_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Monomial orders. `ranking` lists variable indices from most to least
/// significant; all kinds honor it.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, NegDegLex, Block };

  static MonomialOrder lex(std::size_t nvars) { return {Kind::Lex, identity(nvars), 0}; }
  static MonomialOrder lex(std::vector<std::size_t> ranking) { return {Kind::Lex, std::move(ranking), 0}; }
  static MonomialOrder grevlex(std::size_t nvars) { return {Kind::GrevLex, identity(nvars), 0}; }
  static MonomialOrder grevlex(std::vector<std::size_t> ranking) {
    return {Kind::GrevLex, std::move(ranking), 0};
  }
  /// Local: lower total degree is larger, ties broken lexicographically.
  static MonomialOrder neg_deg_lex(std::size_t nvars) { return {Kind::NegDegLex, identity(nvars), 0}; }
  static MonomialOrder neg_deg_lex(std::vector<std::size_t> ranking) {
    return {Kind::NegDegLex, std::move(ranking), 0};
  }
  /// Elimination order: the first `split` ranked variables form a grevlex
  /// block that dominates a grevlex block on the rest.
  static MonomialOrder block(std::vector<std::size_t> ranking, std::size_t split) {
    if (split > ranking.size()) fail(ErrorCode::InvalidArgument, "block split beyond variable count");
    return {Kind::Block, std::move(ranking), split};
  }

  Kind kind() const { return kind_; }
  bool is_global() const { return kind_ != Kind::NegDegLex; }
  bool is_local() const { return kind_ == Kind::NegDegLex; }
  std::size_t nvars() const { return ranking_.size(); }
  std::size_t split() const { return split_; }
  const std::vector<std::size_t>& ranking() const { return ranking_; }

  /// Three-way comparison: negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Lex:
        return lex_cmp(a, b, 0, ranking_.size());
      case Kind::GrevLex:
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        return revlex_cmp(a, b, 0, ranking_.size());
      case Kind::NegDegLex:
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
        return lex_cmp(a, b, 0, ranking_.size());
      case Kind::Block: {
        unsigned da = 0, db = 0;
        for (std::size_t i = 0; i < split_; ++i) {
          da += a[ranking_[i]];
          db += b[ranking_[i]];
        }
        if (da != db) return da < db ? -1 : 1;
        int c = revlex_cmp(a, b, 0, split_);
        if (c != 0) return c;
        unsigned ra = a.degree() - da, rb = b.degree() - db;
        if (ra != rb) return ra < rb ? -1 : 1;
        return revlex_cmp(a, b, split_, ranking_.size());
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind_ == b.kind_ && a.ranking_ == b.ranking_ && a.split_ == b.split_;
  }

  std::string describe(const std::vector<std::string>& names) const;

 private:
  MonomialOrder(Kind kind, std::vector<std::size_t> ranking, std::size_t split)
      : kind_(kind), ranking_(std::move(ranking)), split_(split) {
    std::vector<bool> seen(ranking_.size(), false);
    for (auto v : ranking_) {
      if (v >= ranking_.size() || seen[v]) fail(ErrorCode::InvalidArgument, "ranking is not a permutation");
      seen[v] = true;
    }
  }

  static std::vector<std::size_t> identity(std::size_t n) {
    std::vector<std::size_t> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = i;
    return r;
  }

  int lex_cmp(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) const {
    for (std::size_t i = from; i < to; ++i) {
      unsigned x = a[ranking_[i]], y = b[ranking_[i]];
      if (x != y) return x < y ? -1 : 1;
    }
    return 0;
  }

  // Within equal degree: the monomial with the smaller exponent in the least
  // significant variable is larger.
  int revlex_cmp(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) const {
    for (std::size_t i = to; i-- > from;) {
      unsigned x = a[ranking_[i]], y = b[ranking_[i]];
      if (x != y) return x > y ? -1 : 1;
    }
    return 0;
  }

  Kind kind_;
  std::vector<std::size_t> ranking_;
  std::size_t split_;
};

inline std::string MonomialOrder::describe(const std::vector<std::string>& names) const {
  std::string s;
  switch (kind_) {
    case Kind::Lex: s = "lex"; break;
    case Kind::GrevLex: s = "grevlex"; break;
    case Kind::NegDegLex: s = "negdeglex"; break;
    case Kind::Block: s = "block(" + std::to_string(split_) + ")"; break;
  }
  s += "(";
  for (std::size_t i = 0; i < ranking_.size(); ++i) {
    if (i) s += ">";
    s += ranking_[i] < names.size() ? names[ranking_[i]] : std::to_string(ranking_[i]);
  }
  return s + ")";
}

}  // namespace cuboid
