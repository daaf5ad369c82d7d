#pragma once

// Global Groebner bases: normal forms, Buchberger with the Gebauer-Moeller
// criteria, basis checking, elimination and staircases.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cuboid/polynomial.hpp"

namespace cuboid {

template <class K>
struct Ideal {
  RingPtr<K> ring;
  std::vector<Polynomial<K>> generators;

  Ideal() = default;
  Ideal(RingPtr<K> r, std::vector<Polynomial<K>> gens) : ring(std::move(r)) {
    for (auto& g : gens) {
      if (!g.ring()->same_as(*ring)) fail(ErrorCode::RingMismatch, "ideal generator from another ring");
      if (!g.is_zero()) generators.push_back(std::move(g));
    }
  }
};

struct GroebnerStats {
  std::uint64_t pairs_total = 0;
  std::uint64_t pairs_reduced = 0;
  std::uint64_t pairs_coprime = 0;
  std::uint64_t pairs_chain = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t reduction_steps = 0;
};

template <class K>
struct GroebnerBasis {
  RingPtr<K> ring;  // carries the order
  std::vector<Polynomial<K>> elements;
  bool reduced = false;
  bool verified = false;
  GroebnerStats stats;

  const MonomialOrder& order() const { return ring->order(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> lm;
    for (const auto& g : elements) lm.push_back(g.leading_monomial());
    return lm;
  }

  bool is_unit_ideal() const { return elements.size() == 1 && elements[0].is_constant(); }
};

struct StepBudget {
  std::uint64_t limit = 0;  // 0 means unlimited
  std::uint64_t used = 0;

  void charge(std::uint64_t n = 1) {
    used += n;
    if (limit && used > limit) {
      fail(ErrorCode::BudgetExceeded, "step budget of " + std::to_string(limit) + " exhausted");
    }
  }
};

namespace detail {

template <class K>
void require_global(const RingPtr<K>& ring) {
  if (!ring->order().is_global()) {
    fail(ErrorCode::LocalOrderRejected, "normal_form needs a global order; use mora_normal_form");
  }
}

template <class K>
std::vector<Polynomial<K>> to_ring(const std::vector<Polynomial<K>>& fs, const RingPtr<K>& ring) {
  std::vector<Polynomial<K>> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(f.in_ring(ring));
  return out;
}

template <class K>
std::optional<std::size_t> find_reducer(const Monomial& m, const std::vector<const Polynomial<K>*>& gs) {
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (gs[i]->leading_monomial().divides(m)) return i;
  }
  return std::nullopt;
}

/// Full reduction of f by the (nonzero) polynomials in gs.
template <class K>
Polynomial<K> reduce_full(Polynomial<K> h, const std::vector<const Polynomial<K>*>& gs, StepBudget* budget) {
  std::vector<Term<K>> rem;
  auto ring = h.ring();
  while (!h.is_zero()) {
    const auto& lt = h.leading_term();
    auto r = find_reducer(lt.mono, gs);
    if (r) {
      const auto& g = *gs[*r];
      K c = lt.coeff / g.leading_coefficient();
      Monomial m = g.leading_monomial().quotient_of(lt.mono);
      h = h.sub_mul_term(c, m, g);
      if (budget) budget->charge();
    } else {
      rem.push_back(lt);
      h.drop_leading();
    }
  }
  return Polynomial<K>::from_terms(ring, std::move(rem));
}

template <class K>
Polynomial<K> spoly(const Polynomial<K>& f, const Polynomial<K>& g) {
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  auto a = f.mul_term(f.leading_monomial().quotient_of(l), g.leading_coefficient());
  return a.sub_mul_term(f.leading_coefficient(), g.leading_monomial().quotient_of(l), g);
}

}  // namespace detail

/// Remainder of f modulo G (every term irreducible). f - result is in <G>.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& G) {
  detail::require_global(f.ring());
  std::vector<const Polynomial<K>*> gs;
  for (const auto& g : G) {
    f.check_ring(g);
    if (!g.is_zero()) gs.push_back(&g);
  }
  return detail::reduce_full(f, gs, nullptr);
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& G) {
  return normal_form(f.in_ring(G.ring), G.elements);
}

template <class K>
struct GroebnerCheck {
  bool is_basis = true;
  bool all_coprime = false;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  std::optional<Polynomial<K>> failing_remainder;
  std::vector<Monomial> leading;
};

/// Buchberger's criterion. Coprime leading monomials are skipped; the first
/// pair (lexicographic in input positions) whose S-polynomial does not
/// reduce to zero is reported.
template <class K>
GroebnerCheck<K> is_groebner_basis(const std::vector<Polynomial<K>>& G) {
  GroebnerCheck<K> out;
  if (G.empty()) return out;
  detail::require_global(G.front().ring());
  std::vector<const Polynomial<K>*> gs;
  for (const auto& g : G) {
    G.front().check_ring(g);
    if (g.is_zero()) fail(ErrorCode::ZeroPolynomial, "zero element in basis candidate");
    gs.push_back(&g);
    out.leading.push_back(g.leading_monomial());
  }
  out.all_coprime = true;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      if (gs[i]->leading_monomial().coprime(gs[j]->leading_monomial())) continue;
      out.all_coprime = false;
      auto r = detail::reduce_full(detail::spoly(*gs[i], *gs[j]), gs, nullptr);
      if (!r.is_zero()) {
        out.is_basis = false;
        out.failing_pair = {i, j};
        out.failing_remainder = r;
        return out;
      }
    }
  }
  return out;
}

template <class K>
GroebnerCheck<K> is_groebner_basis(const std::vector<Polynomial<K>>& G, const MonomialOrder& ord) {
  if (G.empty()) return {};
  return is_groebner_basis(detail::to_ring(G, G.front().ring()->with_order(ord)));
}

/// Minimal, monic, inter-reduced basis sorted by decreasing leading monomial.
template <class K>
std::vector<Polynomial<K>> reduce_basis(std::vector<Polynomial<K>> G) {
  std::erase_if(G, [](const Polynomial<K>& g) { return g.is_zero(); });
  if (G.empty()) return G;
  const auto& ord = G.front().ring()->order();
  std::sort(G.begin(), G.end(), [&](const Polynomial<K>& a, const Polynomial<K>& b) {
    int c = ord.compare(a.leading_monomial(), b.leading_monomial());
    if (c != 0) return c < 0;
    return a.size() < b.size();
  });
  std::vector<Polynomial<K>> minimal;
  for (const auto& g : G) {
    bool redundant = false;
    for (const auto& h : minimal) {
      if (h.leading_monomial().divides(g.leading_monomial())) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g.monic());
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const Polynomial<K>*> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(&minimal[j]);
    }
    // leading term is irreducible by the others, so only tails change
    minimal[i] = detail::reduce_full(minimal[i], others, nullptr).monic();
  }
  std::reverse(minimal.begin(), minimal.end());
  return minimal;
}

struct BuchbergerOptions {
  std::uint64_t step_limit = 0;
};

/// Buchberger's algorithm, normal selection strategy, Gebauer-Moeller
/// update (coprime and chain criteria). Output is the reduced basis.
template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& I, const MonomialOrder& ord, BuchbergerOptions opts = {}) {
  auto ring = I.ring->with_order(ord);
  detail::require_global(ring);
  GroebnerBasis<K> out;
  out.ring = ring;
  StepBudget budget{opts.step_limit, 0};

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Polynomial<K>> polys;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto update = [&](std::size_t h) {
    const Monomial& lh = polys[h].leading_monomial();
    std::vector<Pair> cand;
    for (std::size_t g = 0; g < h; ++g) {
      if (active[g]) cand.push_back({g, h, polys[g].leading_monomial().lcm(lh)});
    }
    out.stats.pairs_total += cand.size();
    // M: drop pairs whose lcm is properly divisible by another new lcm
    std::vector<bool> gone(cand.size(), false);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (b != a && cand[b].lcm != cand[a].lcm && cand[b].lcm.divides(cand[a].lcm)) {
          gone[a] = true;
          ++out.stats.pairs_chain;
          break;
        }
      }
    }
    // F: one representative per lcm; a coprime member discards the class.
    // Then the product criterion removes coprime representatives.
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (gone[a]) continue;
      bool first = true, any_coprime = false;
      for (std::size_t b = 0; b < cand.size(); ++b) {
        if (gone[b] || cand[b].lcm != cand[a].lcm) continue;
        if (b < a) first = false;
        any_coprime = any_coprime || polys[cand[b].i].leading_monomial().coprime(lh);
      }
      if (!first) {
        ++out.stats.pairs_chain;
      } else if (any_coprime) {
        ++out.stats.pairs_coprime;
      } else {
        fresh.push_back(cand[a]);
      }
    }
    // prune old pairs made redundant by h
    std::vector<Pair> old;
    for (const auto& p : pairs) {
      bool drop = lh.divides(p.lcm) && polys[p.i].leading_monomial().lcm(lh) != p.lcm &&
                  polys[p.j].leading_monomial().lcm(lh) != p.lcm;
      if (drop) {
        ++out.stats.pairs_chain;
      } else {
        old.push_back(p);
      }
    }
    pairs = std::move(old);
    for (auto& p : fresh) pairs.push_back(p);
    for (std::size_t g = 0; g < h; ++g) {
      if (active[g] && lh.divides(polys[g].leading_monomial())) active[g] = false;
    }
  };

  auto reducers = [&]() {
    std::vector<const Polynomial<K>*> gs;
    for (std::size_t g = 0; g < polys.size(); ++g) {
      if (active[g]) gs.push_back(&polys[g]);
    }
    return gs;
  };

  for (const auto& g : detail::to_ring(I.generators, ring)) {
    auto r = detail::reduce_full(g, reducers(), &budget);
    out.stats.reduction_steps = budget.used;
    if (r.is_zero()) continue;
    polys.push_back(r.monic());
    active.push_back(true);
    update(polys.size() - 1);
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      int c = ord.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::make_pair(a.j, a.i) < std::make_pair(b.j, b.i);
    });
    Pair p = *best;
    pairs.erase(best);
    ++out.stats.pairs_reduced;
    auto r = detail::reduce_full(detail::spoly(polys[p.i], polys[p.j]), reducers(), &budget);
    out.stats.reduction_steps = budget.used;
    if (r.is_zero()) {
      ++out.stats.zero_reductions;
      continue;
    }
    polys.push_back(r.monic());
    active.push_back(true);
    update(polys.size() - 1);
  }

  std::vector<Polynomial<K>> basis;
  for (std::size_t g = 0; g < polys.size(); ++g) {
    if (active[g]) basis.push_back(polys[g]);
  }
  out.elements = reduce_basis(std::move(basis));
  out.reduced = true;
  out.verified = is_groebner_basis(out.elements).is_basis;
  return out;
}

template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& I, BuchbergerOptions opts = {}) {
  return buchberger(I, I.ring->order(), opts);
}

/// Whether f lies in the ideal generated by a Groebner basis.
template <class K>
bool ideal_contains(const GroebnerBasis<K>& G, const Polynomial<K>& f) {
  return normal_form(f, G).is_zero();
}

/// I intersected with the subring in `keep`, via a block elimination order.
/// The result lives in a grevlex ring on the kept variables.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<std::string>& keep, BuchbergerOptions opts = {}) {
  const auto& names = I.ring->names();
  std::vector<std::size_t> ranking, kept_idx;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (std::find(keep.begin(), keep.end(), names[i]) == keep.end()) ranking.push_back(i);
  }
  std::size_t split = ranking.size();
  for (const auto& k : keep) {
    auto idx = I.ring->require(k);
    ranking.push_back(idx);
    kept_idx.push_back(idx);
  }
  std::sort(kept_idx.begin(), kept_idx.end());
  auto G = buchberger(I, MonomialOrder::block(ranking, split), opts);
  std::vector<std::string> sub_names;
  for (auto i : kept_idx) sub_names.push_back(names[i]);
  auto sub = PolyRing<K>::make(sub_names, I.ring->domain());
  std::vector<Polynomial<K>> gens;
  for (const auto& g : G.elements) {
    bool only_kept = true;
    for (std::size_t v = 0; v < split; ++v) only_kept = only_kept && !g.uses_variable(ranking[v]);
    if (only_kept) gens.push_back(g.in_ring(sub));
  }
  return Ideal<K>(sub, std::move(gens));
}

struct Staircase {
  std::vector<Monomial> monomials;
  bool finite = false;
  std::size_t size() const { return monomials.size(); }
};

/// Monomials outside the ideal generated by `leading` in `nvars` variables.
/// An infinite staircase is returned empty with finite = false. With
/// degree_bound > 0 only monomials of lower degree are listed.
inline Staircase staircase_of(const std::vector<Monomial>& leading, std::size_t nvars,
                              std::size_t max_size = 50'000'000, unsigned degree_bound = 0) {
  Staircase st;
  for (const auto& m : leading) {
    if (m.is_one()) {
      st.finite = true;
      return st;
    }
  }
  std::vector<unsigned> bound(nvars, 0);
  for (std::size_t v = 0; v < nvars; ++v) {
    for (const auto& m : leading) {
      if (m.degree() == m[v] && m[v] > 0 && (bound[v] == 0 || m[v] < bound[v])) bound[v] = m[v];
    }
    if (degree_bound > 0 && (bound[v] == 0 || bound[v] > degree_bound)) bound[v] = degree_bound;
    if (bound[v] == 0) return st;
  }
  st.finite = true;
  auto in_ideal = [&](const Monomial& m) {
    for (const auto& l : leading) {
      if (l.divides(m)) return true;
    }
    return false;
  };
  Monomial cur;
  // depth-first over exponent vectors; a monomial in the ideal stops the
  // current variable from growing since all its multiples are in the ideal
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (v == nvars) {
      st.monomials.push_back(cur);
      if (st.monomials.size() > max_size) fail(ErrorCode::BudgetExceeded, "staircase too large to enumerate");
      return;
    }
    for (unsigned e = 0; e < bound[v]; ++e) {
      cur.set(v, e);
      if ((degree_bound > 0 && cur.degree() >= degree_bound) || in_ideal(cur)) break;
      self(self, v + 1);
    }
    cur.set(v, 0);
  };
  rec(rec, 0);
  return st;
}

template <class K>
Staircase quotient_dimension(const GroebnerBasis<K>& G) {
  return staircase_of(G.leading_monomials(), G.ring->nvars());
}

}  // namespace cuboid
