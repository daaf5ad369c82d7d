#pragma once

// The cuboid surface, the face-cuboid surface and their singular loci.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "cuboid/groebner.hpp"
#include "cuboid/linalg.hpp"
#include "cuboid/shape.hpp"

namespace cuboid {

struct VarietySpec {
  std::string name;
  std::vector<std::string> variables;
  std::vector<std::string> equations;

  std::size_t codim() const { return equations.size(); }
};

/// "upsilon" (perfect cuboids, 4 quadrics in P^6) or "V" (face cuboids,
/// 3 quadrics in P^5).
VarietySpec builtin_variety(std::string_view name);

/// A projective complete intersection given by homogeneous equations.
VarietySpec make_variety(std::string name, std::vector<std::string> variables, std::vector<std::string> equations);

template <class K>
RingPtr<K> projective_ring(const VarietySpec& spec, typename K::Domain domain = {}) {
  return PolyRing<K>::make(spec.variables, MonomialOrder::grevlex(spec.variables.size()), std::move(domain));
}

template <class K>
std::vector<Polynomial<K>> defining_polynomials(const VarietySpec& spec, const RingPtr<K>& ring) {
  std::vector<Polynomial<K>> out;
  for (const auto& e : spec.equations) {
    auto f = parse_poly(e, ring);
    if (!f.is_homogeneous()) fail(ErrorCode::NotHomogeneous, spec.name + ": " + e);
    out.push_back(std::move(f));
  }
  return out;
}

/// The affine chart `chart` = 1: dehomogenized equations and their Jacobian
/// in all remaining variables.
template <class K>
struct ChartSystem {
  RingPtr<K> ring;
  std::string chart;
  std::vector<Polynomial<K>> equations;
  std::vector<std::vector<Polynomial<K>>> jacobian;
};

template <class K>
ChartSystem<K> chart_system(const VarietySpec& spec, std::string_view chart, typename K::Domain domain = {}) {
  auto P = projective_ring<K>(spec, domain);
  auto idx = P->require(chart);
  ChartSystem<K> cs;
  cs.ring = drop_variable(P, idx);
  cs.chart = std::string(chart);
  for (const auto& f : defining_polynomials(spec, P)) cs.equations.push_back(dehomogenize(f, idx, cs.ring));
  cs.jacobian = jacobian(cs.equations);
  return cs;
}

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

/// Maximal minors of an r x n polynomial matrix (r <= n), columns chosen in
/// lexicographic order.
template <class K>
std::vector<Polynomial<K>> maximal_minors(const std::vector<std::vector<Polynomial<K>>>& M) {
  std::vector<Polynomial<K>> out;
  if (M.empty()) return out;
  std::size_t r = M.size(), n = M[0].size();
  for (const auto& cols : combinations(n, r)) {
    std::vector<std::vector<Polynomial<K>>> sub(r);
    for (std::size_t i = 0; i < r; ++i) {
      for (auto c : cols) sub[i].push_back(M[i][c]);
    }
    out.push_back(cofactor_determinant(sub));
  }
  return out;
}

/// Singular locus of the chart `chart` = 1: equations plus all maximal minors
/// of the chart Jacobian, plus the variables in `vanishing` (for strata).
template <class K>
Ideal<K> singular_locus_ideal(const VarietySpec& spec, std::string_view chart,
                              const std::vector<std::string>& vanishing = {}, typename K::Domain domain = {}) {
  auto cs = chart_system<K>(spec, chart, domain);
  std::vector<Polynomial<K>> gens = cs.equations;
  for (auto& m : maximal_minors(cs.jacobian)) gens.push_back(std::move(m));
  for (const auto& v : vanishing) gens.push_back(Polynomial<K>::variable(cs.ring, v));
  return Ideal<K>(cs.ring, std::move(gens));
}

// ------------------------------------------------------------------ census

struct StratumCount {
  std::string chart;
  std::vector<std::string> vanishing;
  std::size_t complex = 0;
  std::optional<std::size_t> real;  // only over QQ
  std::size_t staircase = 0;
  int eliminant_degree = 0;
  bool points_verified = false;     // coordinates satisfy every generator
};

struct CensusOptions {
  std::vector<std::string> chart_order;  // empty: the variable order
  ShapeOptions shape;
};

/// Projective points are counted once: in the first chart (by chart_order)
/// whose variable is nonzero there.
template <class K>
struct StratumSystem {
  StratumCount count;
  Ideal<K> ideal;
  SolvedSystem<K> solved;
};

template <class K>
std::vector<std::string> census_chart_order(const VarietySpec& spec, const CensusOptions& opts) {
  auto order = opts.chart_order.empty() ? spec.variables : opts.chart_order;
  auto sorted = order, vars = spec.variables;
  std::sort(sorted.begin(), sorted.end());
  std::sort(vars.begin(), vars.end());
  if (sorted != vars) fail(ErrorCode::InvalidArgument, "chart order must be a permutation of the variables");
  return order;
}

/// Substitutes the coordinate polynomials into every generator and reduces
/// modulo the squarefree eliminant.
template <class K>
bool solution_satisfies(const Ideal<K>& I, const SolvedSystem<K>& s) {
  if (s.squarefree.degree() <= 0) return true;
  auto T = PolyRing<K>::make({"t"}, I.ring->domain());
  std::map<std::string, Polynomial<K>> bind;
  for (std::size_t i = 0; i < I.ring->nvars(); ++i) bind.emplace(I.ring->names()[i], s.coordinates[i].to_polynomial(T, 0));
  for (const auto& g : I.generators) {
    auto img = UPoly<K>::from_polynomial(substitute(g, bind, T), 0);
    if (!(img % s.squarefree).is_zero()) return false;
  }
  return true;
}

template <class K>
std::vector<StratumSystem<K>> census_strata(const VarietySpec& spec, const CensusOptions& opts,
                                            typename K::Domain domain = {}) {
  auto order = census_chart_order<K>(spec, opts);
  std::vector<StratumSystem<K>> out;
  for (std::size_t k = 0; k < order.size(); ++k) {
    std::vector<std::string> vanishing(order.begin(), order.begin() + static_cast<long>(k));
    auto I = singular_locus_ideal<K>(spec, order[k], vanishing, domain);
    SolvedSystem<K> s;
    try {
      s = shape_position_solve(I, opts.shape);
    } catch (const MathError& e) {
      if (e.code() == ErrorCode::NotZeroDimensional) {
        fail(ErrorCode::StratumNotZeroDimensional,
             spec.name + ": singular locus in chart " + order[k] + " is not finite");
      }
      throw;
    }
    StratumSystem<K> st{{}, I, s};
    st.count.chart = order[k];
    st.count.vanishing = vanishing;
    st.count.complex = s.distinct();
    st.count.staircase = s.staircase_size;
    st.count.eliminant_degree = s.eliminant.degree();
    st.count.points_verified = solution_satisfies(I, s);
    if constexpr (std::is_same_v<K, Rational>) st.count.real = real_solution_count(s);
    out.push_back(std::move(st));
  }
  return out;
}

struct OdpResult {
  bool odp = false;
  std::size_t jacobian_rank = 0;
  std::size_t hessian_rank = 0;
  std::string reason;
};

/// A point of the chart `chart` = 1 with coordinates over F_p, in the order
/// of the chart ring's variables.
struct ChartPoint {
  std::string chart;
  std::vector<std::string> names;
  std::vector<Fp> coords;
};

struct SplitStratum {
  std::uint64_t prime = 0;
  std::vector<ChartPoint> points;
};

struct SingularCensus {
  std::string variety;
  std::size_t complex = 0;
  std::size_t real = 0;
  std::vector<StratumCount> strata;
  std::vector<std::uint64_t> primes;             // splitting primes per stratum (0: no points)
  std::size_t odp_checked = 0;
  std::size_t odp_confirmed = 0;
  std::vector<std::string> odp_failures;
};

/// Exact census over QQ with real counts. When `classify` is set, each
/// stratum is reduced at a splitting prime and every point is classified.
SingularCensus census(const VarietySpec& spec, const CensusOptions& opts = {}, bool classify = true);

/// Stratum counts over the algebraic closure of F_p.
std::vector<std::size_t> census_mod_p(const VarietySpec& spec, std::uint64_t p, const CensusOptions& opts = {});

/// The first prime p >= start (p < limit) at which the stratum's eliminant
/// stays squarefree of the same degree, the coordinate polynomials reduce,
/// and the eliminant splits into linear factors. Returns the points.
SplitStratum split_stratum(const SolvedSystem<Rational>& s, const std::string& chart, std::uint64_t start = 3,
                           std::uint64_t limit = 100000);

/// Ordinary double point test at a singular point of a chart.
OdpResult classify_odp(const VarietySpec& spec, const ChartPoint& point);

// ------------------------------------------------------------ Lemma checks

struct HyperplaneSpec {
  Rational alpha, beta, gamma, delta;
};

struct ChartCheck {
  std::string chart;          // "none" for the full ring S = K(A,B)[C,U,X,Y,Z]
  std::string order;          // variable chain, increasing
  std::vector<std::string> generators;
  std::vector<std::string> leading;  // leading monomials in increasing order
  std::string leading_c_coefficient;  // coefficient of the C^2 lead where present
  bool degenerate = false;
  std::string degenerate_reason;
  bool is_basis = false;
  bool matches_raw = false;   // same reduced basis as the raw dehomogenized generators
};

struct Lemma21Report {
  std::uint64_t prime = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> specializations;  // (A, B) values; empty in parametric mode
  bool parametric = false;
  std::vector<ChartCheck> charts;
};

enum class Lemma21Mode { Specialized, Parametric };

/// Groebner checks for the five-generator system and its charts over F_p.
/// In specialized mode (A, B) take `trials` random values per chart.
Lemma21Report verify_lemma_2_1(const HyperplaneSpec& h, std::uint64_t p, Lemma21Mode mode = Lemma21Mode::Specialized,
                               std::uint64_t seed = 1, int trials = 3);

/// Only the chart `chart` ("none", "A", "B", "C", "X", "Y", "Z", "U").
ChartCheck verify_lemma_2_1_chart(const HyperplaneSpec& h, std::uint64_t p, const std::string& chart,
                                  std::optional<std::pair<std::int64_t, std::int64_t>> ab);

// -------------------------------------------------------- Groebner remark

struct GroebnerOrderCheck {
  std::string order;                   // e.g. "lex Z>Y>X>U>A>B>C"
  std::vector<std::string> generators;
  std::vector<std::string> leading;
  bool is_basis = false;
  std::string failing_remainder;       // empty when is_basis
};

struct GroebnerRemarkReport {
  GroebnerOrderCheck original;         // the four quadrics, lex Z>Y>X>U
  GroebnerOrderCheck replaced;         // fourth generator U^2 - A^2 - B^2 - C^2
  GroebnerOrderCheck reordered;        // the four quadrics, lex U>X>Y>Z
};

/// Buchberger-criterion checks of the cuboid quadrics under the two lex orders,
/// over QQ with A, B, C least significant.
GroebnerRemarkReport groebner_remark_check();

// ----------------------------------------------------------- face cuboids

struct FaceCuboid {
  long A, B, C, X, Y, U;
  friend bool operator==(const FaceCuboid&, const FaceCuboid&) = default;
  friend auto operator<=>(const FaceCuboid&, const FaceCuboid&) = default;
};

/// Primitive integer solutions of A^2+C^2=Y^2, B^2+C^2=X^2, A^2+X^2=U^2 with
/// 0 < A, B, C <= bound, sorted lexicographically.
std::vector<FaceCuboid> search_face_cuboids(long bound);

}  // namespace cuboid
