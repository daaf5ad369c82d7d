#pragma once

// Sparse multivariate polynomials over an exact coefficient domain.
//
// Terms are kept sorted by the ring's monomial order, largest first, so the
// leading term is terms().front() for global and local orders alike.

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cuboid/monomial.hpp"
#include "cuboid/scalar.hpp"

namespace cuboid {

template <class K>
class PolyRing;

template <class K>
using RingPtr = std::shared_ptr<const PolyRing<K>>;

template <class K>
class PolyRing {
 public:
  using Domain = typename K::Domain;

  static RingPtr<K> make(std::vector<std::string> names, MonomialOrder order, Domain domain = {}) {
    if (names.size() > kMaxVars) fail(ErrorCode::InvalidArgument, "at most 16 variables supported");
    if (order.nvars() != names.size()) fail(ErrorCode::InvalidArgument, "order/variable count mismatch");
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (names[i] == names[j]) fail(ErrorCode::InvalidArgument, "duplicate variable " + names[i]);
      }
    }
    return std::shared_ptr<const PolyRing<K>>(new PolyRing(std::move(names), std::move(order), std::move(domain)));
  }

  /// Graded reverse lex with variables ranked in the given order.
  static RingPtr<K> make(std::vector<std::string> names, Domain domain = {}) {
    auto n = names.size();
    return make(std::move(names), MonomialOrder::grevlex(n), std::move(domain));
  }

  const std::vector<std::string>& names() const { return names_; }
  std::size_t nvars() const { return names_.size(); }
  const MonomialOrder& order() const { return order_; }
  const Domain& domain() const { return domain_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    return std::nullopt;
  }

  std::size_t require(std::string_view name) const {
    auto i = index_of(name);
    if (!i) fail(ErrorCode::UnknownVariable, "'" + std::string(name) + "' is not a variable of this ring");
    return *i;
  }

  RingPtr<K> with_order(MonomialOrder order) const { return make(names_, std::move(order), domain_); }
  RingPtr<K> with_domain(Domain domain) const { return make(names_, order_, std::move(domain)); }

  bool same_as(const PolyRing& o) const {
    return this == &o || (names_ == o.names_ && order_ == o.order_ && domain_ == o.domain_);
  }

  std::string describe() const { return domain_.name() + "[" + order_.describe(names_) + "]"; }

 private:
  PolyRing(std::vector<std::string> names, MonomialOrder order, Domain domain)
      : names_(std::move(names)), order_(std::move(order)), domain_(std::move(domain)) {}

  std::vector<std::string> names_;
  MonomialOrder order_;
  Domain domain_;
};

/// Ranking from a chain such as "Z>Y>X>U" or "C<U<X<Y<Z"; variables not
/// named in the chain follow, least significant, in ring order.
inline std::vector<std::size_t> ranking_from_chain(const std::vector<std::string>& names, std::string_view chain) {
  std::vector<std::string> parts;
  bool ascending = chain.find('<') != std::string_view::npos;
  if (ascending && chain.find('>') != std::string_view::npos) {
    fail(ErrorCode::SyntaxError, "order chain mixes '<' and '>'");
  }
  std::string cur;
  for (char ch : chain) {
    if (ch == '<' || ch == '>' || ch == ',') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  if (ascending) std::reverse(parts.begin(), parts.end());
  std::vector<std::size_t> ranking;
  std::vector<bool> used(names.size(), false);
  for (const auto& p : parts) {
    auto it = std::find(names.begin(), names.end(), p);
    if (it == names.end()) fail(ErrorCode::UnknownVariable, "'" + p + "' in order chain");
    auto idx = static_cast<std::size_t>(it - names.begin());
    if (used[idx]) fail(ErrorCode::SyntaxError, "variable repeated in order chain");
    used[idx] = true;
    ranking.push_back(idx);
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!used[i]) ranking.push_back(i);
  }
  return ranking;
}

template <class K>
struct Term {
  Monomial mono;
  K coeff;
};

template <class K>
class Polynomial {
 public:
  using Scalar = K;

  Polynomial() = default;
  explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<K> ring, const K& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
    return p;
  }
  static Polynomial constant(RingPtr<K> ring, long c) {
    auto k = ring->domain().from_integer(mpz_class(c));
    return constant(std::move(ring), k);
  }
  static Polynomial one(RingPtr<K> ring) { return constant(ring, ring->domain().one()); }
  static Polynomial variable(RingPtr<K> ring, std::size_t index) {
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(index), ring->domain().one()});
    return p;
  }
  static Polynomial variable(RingPtr<K> ring, std::string_view name) {
    auto idx = ring->require(name);
    return variable(std::move(ring), idx);
  }
  static Polynomial monomial(RingPtr<K> ring, const Monomial& m, const K& c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({m, c});
    return p;
  }
  /// Builds from unsorted, possibly repeated terms.
  static Polynomial from_terms(RingPtr<K> ring, std::vector<Term<K>> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term<K>& leading_term() const {
    if (terms_.empty()) fail(ErrorCode::ZeroPolynomial, "leading term of 0");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const K& leading_coefficient() const { return leading_term().coeff; }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  /// Lowest total degree of a term (the order at the origin).
  std::uint32_t low_degree() const {
    if (terms_.empty()) return 0;
    std::uint32_t d = terms_.front().mono.degree();
    for (const auto& t : terms_) d = std::min(d, t.mono.degree());
    return d;
  }
  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
  }

  K coefficient(const Monomial& m) const {
    for (const auto& t : terms_) {
      if (t.mono == m) return t.coeff;
    }
    return ring_->domain().zero();
  }
  K constant_term() const { return coefficient(Monomial()); }

  bool is_homogeneous() const {
    for (const auto& t : terms_) {
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    }
    return true;
  }

  bool uses_variable(std::size_t var) const {
    for (const auto& t : terms_) {
      if (t.mono[var]) return true;
    }
    return false;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = merge(*this, o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = merge(*this, o, true); }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    if (b.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
    if (a.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
    std::unordered_map<Monomial, K, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& s : a.terms_) {
      for (const auto& t : b.terms_) {
        auto m = s.mono * t.mono;
        auto it = acc.find(m);
        if (it == acc.end()) {
          acc.emplace(m, s.coeff * t.coeff);
        } else {
          it->second += s.coeff * t.coeff;
        }
      }
    }
    std::vector<Term<K>> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (!c.is_zero()) terms.push_back({m, std::move(c)});
    }
    Polynomial r(a.ring_);
    r.terms_ = std::move(terms);
    r.sort_terms();
    return r;
  }

  friend Polynomial operator*(const K& c, const Polynomial& p) { return p.scale(c); }

  Polynomial scale(const K& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
    return r;
  }

  /// c * m * this; the order is multiplicative so sorting is preserved.
  Polynomial mul_term(const Monomial& m, const K& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
  }

  /// this - c * m * g, the reduction step shared by every normal form.
  Polynomial sub_mul_term(const K& c, const Monomial& m, const Polynomial& g) const {
    check_ring(g);
    const auto& ord = ring_->order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      Monomial gm = g.terms_[j].mono * m;
      int cmp = i == terms_.size() ? -1 : ord.compare(terms_[i].mono, gm);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back({gm, -(c * g.terms_[j].coeff)});
        ++j;
      } else {
        K v = terms_[i].coeff - c * g.terms_[j].coeff;
        if (!v.is_zero()) r.terms_.push_back({gm, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void drop_leading() {
    if (!terms_.empty()) terms_.erase(terms_.begin());
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return scale(leading_coefficient().inverse());
  }

  Polynomial pow(unsigned e) const {
    Polynomial acc = one(ring_);
    Polynomial base = *this;
    while (e) {
      if (e & 1) acc *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return acc;
  }

  K evaluate(const std::vector<K>& point) const {
    if (point.size() != ring_->nvars()) fail(ErrorCode::RingMismatch, "point has wrong dimension");
    K acc = ring_->domain().zero();
    for (const auto& t : terms_) {
      K v = t.coeff;
      for (std::size_t i = 0; i < point.size(); ++i) {
        for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
      }
      acc += v;
    }
    return acc;
  }

  /// Same polynomial viewed in another ring with the same variable names
  /// (typically a different order). Re-sorts.
  Polynomial in_ring(RingPtr<K> target) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    }
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

  void check_ring(const Polynomial& o) const {
    if (ring_ != o.ring_ && !(ring_ && o.ring_ && ring_->same_as(*o.ring_))) {
      fail(ErrorCode::RingMismatch, "operands live in different rings");
    }
  }

 private:
  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    a.check_ring(b);
    const auto& ord = a.ring_->order();
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      int cmp = ord.compare(a.terms_[i].mono, b.terms_[j].mono);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back(subtract ? Term<K>{b.terms_[j].mono, -b.terms_[j].coeff} : b.terms_[j]);
        ++j;
      } else {
        K v = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!v.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
      r.terms_.push_back(subtract ? Term<K>{b.terms_[j].mono, -b.terms_[j].coeff} : b.terms_[j]);
    }
    return r;
  }

  void sort_terms() {
    const auto& ord = ring_->order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term<K>& x, const Term<K>& y) { return ord.compare(x.mono, y.mono) > 0; });
  }

  void canonicalize() {
    sort_terms();
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff += t.coeff;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](const Term<K>& t) { return t.coeff.is_zero(); });
    terms_ = std::move(out);
  }

  RingPtr<K> ring_;
  std::vector<Term<K>> terms_;
};

template <class K>
Polynomial<K> Polynomial<K>::in_ring(RingPtr<K> target) const {
  if (target->same_as(*ring_)) {
    Polynomial r = *this;
    r.ring_ = target;
    return r;
  }
  std::vector<std::size_t> map(ring_->nvars());
  for (std::size_t i = 0; i < ring_->nvars(); ++i) {
    auto idx = target->index_of(ring_->names()[i]);
    if (!idx) {
      if (uses_variable(i)) fail(ErrorCode::RingMismatch, "target ring lacks variable " + ring_->names()[i]);
      map[i] = kMaxVars;
    } else {
      map[i] = *idx;
    }
  }
  std::vector<Term<K>> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      if (t.mono[i]) m.set(map[i], t.mono[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return from_terms(std::move(target), std::move(terms));
}

// ---------------------------------------------------------------------------
// Printing and parsing.

namespace detail {

template <class K>
std::string coeff_text(const K& c) {
  return c.to_string();
}

/// Coefficients that print with their own operators get wrapped.
template <class K>
bool coeff_needs_parens(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] == '+' || s[i] == '-' || s[i] == '*') return true;
  }
  return false;
}

inline std::string monomial_text(const Monomial& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

}  // namespace detail

template <class K>
std::string Polynomial<K>::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  const auto& names = ring_->names();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    std::string c = detail::coeff_text(t.coeff);
    bool negative = !c.empty() && c[0] == '-' && !detail::coeff_needs_parens<K>(c);
    if (negative) c = c.substr(1);
    if (detail::coeff_needs_parens<K>(c)) c = "(" + c + ")";
    if (k == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = detail::monomial_text(t.mono, names);
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else {
      out += c + "*" + mono;
    }
  }
  return out;
}

template <class K>
class PolyParser {
 public:
  PolyParser(std::string_view text, RingPtr<K> ring) : text_(text), ring_(std::move(ring)) {}

  Polynomial<K> parse() {
    skip_ws();
    if (pos_ == text_.size()) error("empty input");
    auto p = expr();
    skip_ws();
    if (pos_ != text_.size()) error(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  Polynomial<K> expr() {
    skip_ws();
    bool neg = false;
    if (peek('+') || peek('-')) neg = text_[pos_++] == '-';
    auto acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial<K> term() {
    auto acc = factor();
    for (;;) {
      skip_ws();
      if (!peek('*')) return acc;
      ++pos_;
      acc *= factor();
    }
  }

  Polynomial<K> factor() {
    skip_ws();
    if (peek('-')) {
      ++pos_;
      return -factor();
    }
    auto base = atom();
    skip_ws();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      auto digits = text_.substr(start, pos_ - start);
      if (digits.size() > 5 || std::stoul(std::string(digits)) > 0xFFFF) error("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(digits))));
    }
    return base;
  }

  Polynomial<K> atom() {
    skip_ws();
    if (pos_ == text_.size()) error("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      auto inner = expr();
      skip_ws();
      if (!peek(')')) error("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string lit = digits();
      skip_ws();
      if (peek('/')) {
        ++pos_;
        skip_ws();
        if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          error("expected denominator");
        }
        lit += "/" + digits();
      }
      Rational q = Rational::parse(lit);
      return Polynomial<K>::constant(ring_, ring_->domain().from_rational(q));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (auto idx = ring_->index_of(name)) return Polynomial<K>::variable(ring_, *idx);
      if constexpr (requires(const typename K::Domain& d) { d.parameter(name); }) {
        if (auto c = ring_->domain().parameter(name)) return Polynomial<K>::constant(ring_, *c);
      }
      fail(ErrorCode::UnknownVariable, "'" + name + "' at position " + std::to_string(start));
    }
    error(std::string("unexpected '") + ch + "'");
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::SyntaxError, msg + " at position " + std::to_string(pos_));
  }

  std::string_view text_;
  RingPtr<K> ring_;
  std::size_t pos_ = 0;
};

template <class K>
Polynomial<K> parse_poly(std::string_view text, const RingPtr<K>& ring) {
  return PolyParser<K>(text, ring).parse();
}

// ---------------------------------------------------------------------------
// Calculus and ring changes.

template <class K>
Polynomial<K> derivative(const Polynomial<K>& f, std::size_t var) {
  const auto& dom = f.ring()->domain();
  std::vector<Term<K>> terms;
  for (const auto& t : f.terms()) {
    unsigned e = t.mono[var];
    if (!e) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    K c = t.coeff * dom.from_integer(mpz_class(e));
    if (!c.is_zero()) terms.push_back({m, c});
  }
  // lowering one exponent can break the ordering only for non-lex orders
  return Polynomial<K>::from_terms(f.ring(), std::move(terms));
}

template <class K>
Polynomial<K> derivative(const Polynomial<K>& f, std::string_view var) {
  return derivative(f, f.ring()->require(var));
}

/// Simultaneous substitution. Variables without a binding map by name into
/// `target`; every binding image must live in `target`.
template <class K>
Polynomial<K> substitute(const Polynomial<K>& f, const std::map<std::string, Polynomial<K>>& bindings,
                         const RingPtr<K>& target) {
  const auto& src = *f.ring();
  std::vector<Polynomial<K>> images;
  images.reserve(src.nvars());
  for (const auto& [name, img] : bindings) {
    src.require(name);
    if (!img.ring()->same_as(*target)) fail(ErrorCode::RingMismatch, "binding for " + name + " not in target ring");
  }
  for (std::size_t i = 0; i < src.nvars(); ++i) {
    auto it = bindings.find(src.names()[i]);
    if (it != bindings.end()) {
      images.push_back(it->second);
    } else if (auto idx = target->index_of(src.names()[i])) {
      images.push_back(Polynomial<K>::variable(target, *idx));
    } else if (f.uses_variable(i)) {
      fail(ErrorCode::RingMismatch, "no image for variable " + src.names()[i]);
    } else {
      images.push_back(Polynomial<K>(target));
    }
  }
  std::vector<std::vector<Polynomial<K>>> powers(src.nvars());
  auto power = [&](std::size_t v, unsigned e) -> const Polynomial<K>& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial<K>::one(target));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  std::vector<Term<K>> acc;
  for (const auto& t : f.terms()) {
    Polynomial<K> prod = Polynomial<K>::constant(target, t.coeff);
    for (std::size_t v = 0; v < src.nvars() && !prod.is_zero(); ++v) {
      if (t.mono[v]) prod *= power(v, t.mono[v]);
    }
    for (const auto& pt : prod.terms()) acc.push_back(pt);
  }
  return Polynomial<K>::from_terms(target, std::move(acc));
}

/// The ring with `var` removed; the order keeps the remaining ranking.
template <class K>
RingPtr<K> drop_variable(const RingPtr<K>& ring, std::size_t var) {
  std::vector<std::string> names;
  std::vector<std::size_t> remap(ring->nvars(), kMaxVars);
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    if (i == var) continue;
    remap[i] = names.size();
    names.push_back(ring->names()[i]);
  }
  std::vector<std::size_t> ranking;
  for (auto v : ring->order().ranking()) {
    if (v != var) ranking.push_back(remap[v]);
  }
  const auto& ord = ring->order();
  switch (ord.kind()) {
    case MonomialOrder::Kind::Lex:
      return PolyRing<K>::make(names, MonomialOrder::lex(ranking), ring->domain());
    case MonomialOrder::Kind::GrevLex:
      return PolyRing<K>::make(names, MonomialOrder::grevlex(ranking), ring->domain());
    case MonomialOrder::Kind::NegDegLex:
      return PolyRing<K>::make(names, MonomialOrder::neg_deg_lex(ranking), ring->domain());
    case MonomialOrder::Kind::Block: {
      std::size_t split = ord.split();
      for (std::size_t i = 0; i < ord.split(); ++i) {
        if (ord.ranking()[i] == var) --split;
      }
      return PolyRing<K>::make(names, MonomialOrder::block(ranking, split), ring->domain());
    }
  }
  return nullptr;
}

/// Sets a variable to 1 and drops it from the ring. Requires f homogeneous.
template <class K>
Polynomial<K> dehomogenize(const Polynomial<K>& f, std::size_t var, const RingPtr<K>& target) {
  if (!f.is_homogeneous()) fail(ErrorCode::NotHomogeneous, f.to_string());
  std::map<std::string, Polynomial<K>> b{{f.ring()->names()[var], Polynomial<K>::one(target)}};
  return substitute(f, b, target);
}

template <class K>
Polynomial<K> dehomogenize(const Polynomial<K>& f, std::string_view var) {
  auto idx = f.ring()->require(var);
  return dehomogenize(f, idx, drop_variable(f.ring(), idx));
}

/// Homogenizes with the variable `var` of `target`, which must contain the
/// variables of f plus `var`.
template <class K>
Polynomial<K> homogenize(const Polynomial<K>& f, std::string_view var, const RingPtr<K>& target) {
  if (f.ring()->index_of(var)) fail(ErrorCode::InvalidArgument, "homogenizing variable already present");
  auto h = target->require(var);
  auto g = f.in_ring(target);
  auto d = g.total_degree();
  std::vector<Term<K>> terms;
  for (const auto& t : g.terms()) {
    Monomial m = t.mono;
    m.set(h, d - t.mono.degree());
    terms.push_back({m, t.coeff});
  }
  return Polynomial<K>::from_terms(target, std::move(terms));
}

/// Image of f under a coefficient map into a ring with the same variables.
template <class K, class L, class Fn>
Polynomial<L> map_coefficients(const Polynomial<K>& f, const RingPtr<L>& target, Fn fn) {
  if (target->names() != f.ring()->names()) fail(ErrorCode::RingMismatch, "coefficient map needs matching variables");
  std::vector<Term<L>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.mono, fn(t.coeff)});
  return Polynomial<L>::from_terms(target, std::move(terms));
}

/// Rows follow the input order, columns the ring's variable order.
template <class K>
std::vector<std::vector<Polynomial<K>>> jacobian(const std::vector<Polynomial<K>>& fs) {
  std::vector<std::vector<Polynomial<K>>> jac;
  if (fs.empty()) return jac;
  for (const auto& f : fs) fs.front().check_ring(f);
  for (const auto& f : fs) {
    std::vector<Polynomial<K>> row;
    for (std::size_t v = 0; v < f.ring()->nvars(); ++v) row.push_back(derivative(f, v));
    jac.push_back(std::move(row));
  }
  return jac;
}

}  // namespace cuboid
