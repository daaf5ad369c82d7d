#pragma once

// Standard bases for local orders (tangent cone algorithm with ecart-driven
// weak normal forms). Quotients computed from them describe the local ring
// at the origin.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cuboid/groebner.hpp"

namespace cuboid {

namespace detail {

inline void require_local(const MonomialOrder& ord) {
  if (!ord.is_local()) fail(ErrorCode::GlobalOrderRejected, "Mora normal form needs a local order");
}

template <class K>
unsigned ecart(const Polynomial<K>& f) {
  return f.total_degree() - f.leading_monomial().degree();
}

/// Drops every term of degree >= bound (0: no bound).
template <class K>
Polynomial<K> truncate_degree(const Polynomial<K>& f, unsigned bound) {
  if (bound == 0 || f.total_degree() < bound) return f;
  std::vector<Term<K>> keep;
  for (const auto& t : f.terms()) {
    if (t.mono.degree() < bound) keep.push_back(t);
  }
  return Polynomial<K>::from_terms(f.ring(), std::move(keep));
}

template <class K>
Polynomial<K> mora_reduce(Polynomial<K> h, std::vector<Polynomial<K>> T, StepBudget* budget, unsigned bound = 0) {
  h = truncate_degree(h, bound);
  while (!h.is_zero()) {
    const Monomial& lm = h.leading_monomial();
    const Polynomial<K>* best = nullptr;
    unsigned best_ecart = 0;
    std::size_t best_idx = 0;
    for (std::size_t i = 0; i < T.size(); ++i) {
      if (!T[i].leading_monomial().divides(lm)) continue;
      unsigned e = ecart(T[i]);
      if (!best || e < best_ecart) {
        best = &T[i];
        best_ecart = e;
        best_idx = i;
      }
    }
    if (!best) break;
    Polynomial<K> g = T[best_idx];
    if (best_ecart > ecart(h)) T.push_back(h);
    K c = h.leading_coefficient() / g.leading_coefficient();
    h = truncate_degree(h.sub_mul_term(c, g.leading_monomial().quotient_of(lm), g), bound);
    if (budget) budget->charge();
  }
  return h;
}

}  // namespace detail

/// Weak normal form: zero iff f lies in the ideal generated by G in the
/// localization, whenever G is a standard basis.
template <class K>
Polynomial<K> mora_normal_form(const Polynomial<K>& f, const std::vector<Polynomial<K>>& G) {
  detail::require_local(f.ring()->order());
  std::vector<Polynomial<K>> T;
  for (const auto& g : G) {
    f.check_ring(g);
    if (!g.is_zero()) T.push_back(g);
  }
  return detail::mora_reduce(f, std::move(T), nullptr);
}

/// A standard-basis run that can be stopped by its step budget and resumed.
template <class K>
class MoraComputation {
 public:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  /// With `bound` > 0 the run computes a standard basis of I + m^bound.
  explicit MoraComputation(const Ideal<K>& I, unsigned bound = 0) : ring_(I.ring), bound_(bound) {
    detail::require_local(ring_->order());
    for (const auto& g : I.generators) add(g);
  }

  /// Runs until finished or until `limit` more steps are spent (0: no limit).
  /// Returns true when the basis is complete.
  bool run(std::uint64_t limit) {
    StepBudget budget{limit, 0};
    try {
      while (!pairs_.empty()) {
        auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
          if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
          return std::make_pair(a.j, a.i) < std::make_pair(b.j, b.i);
        });
        Pair p = *best;
        const auto& f = basis_[p.i];
        const auto& g = basis_[p.j];
        auto s = f.mul_term(f.leading_monomial().quotient_of(p.lcm), g.leading_coefficient())
                     .sub_mul_term(f.leading_coefficient(), g.leading_monomial().quotient_of(p.lcm), g);
        auto h = detail::mora_reduce(std::move(s), basis_, &budget, bound_);
        // the pair is consumed only once its reduction finished
        pairs_.erase(std::find_if(pairs_.begin(), pairs_.end(),
                                  [&](const Pair& q) { return q.i == p.i && q.j == p.j; }));
        ++pairs_reduced_;
        if (!h.is_zero()) add(h);
      }
    } catch (const MathError& e) {
      steps_ += budget.used;
      if (e.code() == ErrorCode::BudgetExceeded) return false;
      throw;
    }
    steps_ += budget.used;
    return true;
  }

  bool complete() const { return pairs_.empty(); }
  std::uint64_t steps() const { return steps_; }
  std::uint64_t pairs_reduced() const { return pairs_reduced_; }
  std::size_t pairs_pending() const { return pairs_.size(); }
  std::size_t basis_size() const { return basis_.size(); }
  /// Degree D with m^D inside the ideal (0: none known); the run works
  /// modulo m^D.
  unsigned truncation_degree() const { return bound_; }

  /// Monomials outside the leading ideal and outside m^D.
  Staircase staircase() const {
    std::vector<Monomial> lead;
    for (const auto& g : basis_) lead.push_back(g.leading_monomial());
    return staircase_of(lead, ring_->nvars(), 50'000'000, bound_);
  }

  /// Minimal standard basis (elements whose leading monomial is divisible by
  /// another's removed), each with unit leading coefficient. Requires
  /// complete().
  GroebnerBasis<K> result() const {
    GroebnerBasis<K> out;
    out.ring = ring_;
    std::vector<Polynomial<K>> keep;
    for (std::size_t a = 0; a < basis_.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < basis_.size() && !redundant; ++b) {
        if (a == b) continue;
        const auto& la = basis_[a].leading_monomial();
        const auto& lb = basis_[b].leading_monomial();
        redundant = lb.divides(la) && (la != lb || b < a);
      }
      if (!redundant) keep.push_back(basis_[a].monic());
    }
    const auto& ord = ring_->order();
    std::sort(keep.begin(), keep.end(), [&](const Polynomial<K>& x, const Polynomial<K>& y) {
      return ord.compare(x.leading_monomial(), y.leading_monomial()) > 0;
    });
    out.elements = std::move(keep);
    out.verified = complete();
    out.stats.reduction_steps = steps_;
    out.stats.pairs_reduced = pairs_reduced_;
    return out;
  }

 private:
  void add(Polynomial<K> h) {
    h = detail::truncate_degree(h, bound_);
    if (h.is_zero()) return;
    h = h.monic();
    std::size_t n = basis_.size();
    const Monomial& lh = h.leading_monomial();
    // chain criterion against existing pairs
    std::erase_if(pairs_, [&](const Pair& p) {
      return lh.divides(p.lcm) && basis_[p.i].leading_monomial().lcm(lh) != p.lcm &&
             basis_[p.j].leading_monomial().lcm(lh) != p.lcm;
    });
    basis_.push_back(std::move(h));
    for (std::size_t g = 0; g < n; ++g) {
      pairs_.push_back({g, n, basis_[g].leading_monomial().lcm(basis_[n].leading_monomial())});
    }
    update_bound();
  }

  // A finite staircase of top degree s puts every degree s+1 monomial in the
  // leading ideal, hence m^(s+1) in the local ideal.
  void update_bound() {
    auto st = staircase();
    if (!st.finite) return;
    unsigned top = 0;
    for (const auto& m : st.monomials) top = std::max(top, m.degree());
    unsigned D = st.monomials.empty() ? 1 : top + 1;
    if (bound_ != 0 && D >= bound_) return;
    bound_ = D;
    std::erase_if(pairs_, [&](const Pair& p) { return p.lcm.degree() >= bound_; });
  }

  RingPtr<K> ring_;
  std::vector<Polynomial<K>> basis_;
  std::vector<Pair> pairs_;
  std::uint64_t steps_ = 0;
  std::uint64_t pairs_reduced_ = 0;
  unsigned bound_ = 0;
};

struct MoraOptions {
  std::uint64_t step_limit = 10'000'000;
};

/// Standard basis for a local order; throws BudgetExceeded when the budget
/// runs out (use MoraComputation directly to keep the partial state).
template <class K>
GroebnerBasis<K> mora_standard_basis(const Ideal<K>& I, MoraOptions opts = {}) {
  MoraComputation<K> run(I);
  if (!run.run(opts.step_limit)) {
    fail(ErrorCode::BudgetExceeded, "Mora standard basis: step budget of " + std::to_string(opts.step_limit) +
                                        " exhausted with " + std::to_string(run.pairs_pending()) +
                                        " pairs pending");
  }
  return run.result();
}

}  // namespace cuboid
