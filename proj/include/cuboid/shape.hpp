#pragma once

// Zero-dimensional solving in shape position.
//
// The quotient R/I is handled through its staircase basis: multiplication
// by a random linear form t gives the minimal polynomial of t, and every
// variable is then written as a polynomial in t by linear algebra (the same
// data a lex basis in shape position carries).

#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "cuboid/groebner.hpp"
#include "cuboid/linalg.hpp"
#include "cuboid/upoly.hpp"

namespace cuboid {

template <class K>
struct SolvedSystem {
  RingPtr<K> ring;                     // the original ring
  std::vector<long> linear_form;       // t = sum c_i x_i
  std::vector<std::vector<long>> change;  // invertible integer matrix with last row = linear_form
  UPoly<K> eliminant;                  // minimal polynomial of t on R/I
  UPoly<K> squarefree;                 // its squarefree part
  std::vector<UPoly<K>> coordinates;   // x_i = coordinates[i](t) on the radical
  std::size_t staircase_size = 0;      // dim R/I
  std::size_t radical_size = 0;        // dim R/sqrt(I)
  std::size_t attempts = 0;

  std::size_t distinct() const { return static_cast<std::size_t>(std::max(0, squarefree.degree())); }
};

struct ShapeOptions {
  std::uint64_t seed = 1;
  long box = 50;
  int retries = 8;
  std::uint64_t step_limit = 0;
};

namespace detail {

/// Linear algebra on R/I with respect to a staircase basis.
template <class K>
class QuotientAlgebra {
 public:
  explicit QuotientAlgebra(GroebnerBasis<K> G) : G_(std::move(G)) {
    auto st = quotient_dimension(G_);
    if (!st.finite) fail(ErrorCode::NotZeroDimensional, "ideal is not zero-dimensional");
    basis_ = std::move(st.monomials);
    for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
  }

  std::size_t dim() const { return basis_.size(); }
  const GroebnerBasis<K>& basis() const { return G_; }
  const typename K::Domain& domain() const { return G_.ring->domain(); }

  std::vector<K> coords(const Polynomial<K>& f) const {
    auto r = normal_form(f, G_);
    std::vector<K> v(dim(), domain().zero());
    for (const auto& t : r.terms()) v[index_.at(t.mono)] = t.coeff;
    return v;
  }

  Polynomial<K> element(const std::vector<K>& v) const {
    std::vector<Term<K>> ts;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) ts.push_back({basis_[i], v[i]});
    }
    return Polynomial<K>::from_terms(G_.ring, std::move(ts));
  }

  /// Coordinate vectors of 1, f, f^2, ... up to the first linear dependency;
  /// returns the monic minimal polynomial of f.
  UPoly<K> minimal_polynomial(const Polynomial<K>& f, std::vector<std::vector<K>>* powers = nullptr) const {
    const auto& dom = domain();
    // incremental echelon form; each row remembers its combination of powers
    struct Row {
      std::vector<K> v, comb;
      std::size_t pivot;
    };
    std::vector<Row> rows;
    std::vector<K> cur = coords(Polynomial<K>::one(G_.ring));
    for (std::size_t k = 0;; ++k) {
      if (powers) powers->push_back(cur);
      std::vector<K> v = cur, comb(k + 1, dom.zero());
      comb[k] = dom.one();
      for (const auto& r : rows) {
        if (v[r.pivot].is_zero()) continue;
        K c = v[r.pivot];
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (!r.v[i].is_zero()) v[i] -= c * r.v[i];
        }
        for (std::size_t i = 0; i < r.comb.size(); ++i) {
          if (!r.comb[i].is_zero()) comb[i] -= c * r.comb[i];
        }
      }
      std::size_t piv = v.size();
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) {
          piv = i;
          break;
        }
      }
      if (piv == v.size()) return UPoly<K>(dom, comb).monic();
      K inv = v[piv].inverse();
      for (auto& x : v) x *= inv;
      for (auto& x : comb) x *= inv;
      rows.push_back({std::move(v), std::move(comb), piv});
      cur = coords(element(cur) * f);
    }
  }

 private:
  GroebnerBasis<K> G_;
  std::vector<Monomial> basis_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

/// Solve sum_k a_k * powers[k] = target for a (powers independent).
template <class K>
std::vector<K> express_in_powers(const std::vector<std::vector<K>>& powers, const std::vector<K>& target,
                                 const typename K::Domain& dom) {
  std::size_t n = target.size(), m = powers.size();
  Matrix<K> A(n, m + 1, dom);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < n; ++i) A(i, k) = powers[k][i];
  }
  for (std::size_t i = 0; i < n; ++i) A(i, m) = target[i];
  auto piv = row_reduce(A);
  if (!piv.empty() && piv.back() == m) fail(ErrorCode::ShapeFailed, "coordinate is not a polynomial in t");
  std::vector<K> a(m, dom.zero());
  for (std::size_t r = 0; r < piv.size(); ++r) a[piv[r]] = A(r, m);
  return a;
}

}  // namespace detail

/// Radical of a zero-dimensional ideal: adds the squarefree parts of the
/// minimal polynomials of all variables (valid in characteristic 0 and for
/// F_p when these degrees stay below p).
template <class K>
GroebnerBasis<K> zero_dim_radical(const GroebnerBasis<K>& G, BuchbergerOptions opts = {}) {
  detail::QuotientAlgebra<K> Q(G);
  std::vector<Polynomial<K>> gens = G.elements;
  bool changed = false;
  for (std::size_t v = 0; v < G.ring->nvars(); ++v) {
    auto mp = Q.minimal_polynomial(Polynomial<K>::variable(G.ring, v));
    auto sq = squarefree_part(mp);
    if (sq.degree() < mp.degree()) changed = true;
    gens.push_back(sq.to_polynomial(G.ring, v));
  }
  if (!changed) return G;
  return buchberger(Ideal<K>(G.ring, std::move(gens)), G.ring->order(), opts);
}

template <class K>
SolvedSystem<K> shape_position_solve(const Ideal<K>& I, ShapeOptions opts = {}) {
  auto ring = I.ring->with_order(MonomialOrder::grevlex(I.ring->nvars()));
  auto G = buchberger(Ideal<K>(ring, detail::to_ring(I.generators, ring)), ring->order(),
                      BuchbergerOptions{opts.step_limit});
  detail::QuotientAlgebra<K> full(G);
  auto Grad = zero_dim_radical(G, BuchbergerOptions{opts.step_limit});
  detail::QuotientAlgebra<K> rad(Grad);

  SolvedSystem<K> out;
  out.ring = I.ring;
  out.staircase_size = full.dim();
  out.radical_size = rad.dim();
  const auto& dom = ring->domain();
  std::size_t n = ring->nvars();
  if (rad.dim() == 0) {
    out.eliminant = UPoly<K>::constant(dom, dom.one());
    out.squarefree = out.eliminant;
    return out;
  }

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<long> coef(-opts.box, opts.box);
  for (int attempt = 0; attempt <= opts.retries; ++attempt) {
    ++out.attempts;
    std::vector<long> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = coef(rng);
    std::size_t pivot = n;
    for (std::size_t i = n; i-- > 0;) {
      if (c[i] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) continue;
    Polynomial<K> t(ring);
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i]) t = t + Polynomial<K>::variable(ring, i).scale(dom.from_integer(mpz_class(c[i])));
    }
    std::vector<std::vector<K>> powers;
    auto mp = rad.minimal_polynomial(t, &powers);
    if (static_cast<std::size_t>(mp.degree()) != rad.dim()) continue;
    powers.pop_back();  // t^D is dependent
    out.linear_form = c;
    out.change.assign(n, std::vector<long>(n, 0));
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == pivot) continue;
      out.change[row++][i] = 1;
    }
    out.change[n - 1] = c;
    out.squarefree = mp;
    out.eliminant = full.minimal_polynomial(t);
    for (std::size_t i = 0; i < n; ++i) {
      auto a = detail::express_in_powers(powers, rad.coords(Polynomial<K>::variable(ring, i)), dom);
      out.coordinates.push_back(UPoly<K>(dom, std::move(a)));
    }
    return out;
  }
  fail(ErrorCode::ShapeFailed, "no separating linear form found after " + std::to_string(out.attempts) + " attempts");
}

/// Real solutions of a system over QQ: real roots of the squarefree eliminant.
inline std::size_t real_solution_count(const SolvedSystem<Rational>& sys) {
  if (sys.squarefree.degree() <= 0) return 0;
  return count_real_roots(sys.squarefree).count;
}

}  // namespace cuboid
