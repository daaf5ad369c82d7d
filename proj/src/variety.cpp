#include "cuboid/variety.hpp"

#include <array>
#include <cmath>
#include <random>

#include "cuboid/rational_function.hpp"

namespace cuboid {

VarietySpec builtin_variety(std::string_view name) {
  if (name == "upsilon") {
    return {"upsilon",
            {"A", "B", "C", "X", "Y", "Z", "U"},
            {"A^2 + B^2 - Z^2", "B^2 + C^2 - X^2", "C^2 + A^2 - Y^2", "A^2 + X^2 - U^2"}};
  }
  if (name == "V") {
    return {"V", {"A", "B", "C", "X", "Y", "U"}, {"A^2 + C^2 - Y^2", "B^2 + C^2 - X^2", "A^2 + X^2 - U^2"}};
  }
  fail(ErrorCode::UnknownVariety, "unknown variety '" + std::string(name) + "' (expected upsilon or V)");
}

VarietySpec make_variety(std::string name, std::vector<std::string> variables, std::vector<std::string> equations) {
  VarietySpec spec{std::move(name), std::move(variables), std::move(equations)};
  defining_polynomials(spec, projective_ring<Rational>(spec));
  if (spec.codim() > spec.variables.size() - 1) fail(ErrorCode::InvalidArgument, "too many equations");
  return spec;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// ------------------------------------------------------------------ census

namespace {

bool reducible_mod(const Rational& q, std::uint64_t p) {
  return mpz_divisible_ui_p(q.denominator().get_mpz_t(), static_cast<unsigned long>(p)) == 0;
}

std::optional<UPolyP> reduce_upoly(const UPolyQ& f, const PrimeField& F) {
  std::vector<Fp> c;
  for (const auto& q : f.coeffs()) {
    if (!reducible_mod(q, F.modulus())) return std::nullopt;
    c.push_back(F.from_rational(q));
  }
  return UPolyP(F, std::move(c));
}

std::vector<std::vector<Fp>> evaluate_matrix(const std::vector<std::vector<Polynomial<Fp>>>& M, const std::vector<Fp>& pt) {
  std::vector<std::vector<Fp>> out;
  for (const auto& row : M) {
    std::vector<Fp> r;
    for (const auto& e : row) r.push_back(e.evaluate(pt));
    out.push_back(std::move(r));
  }
  return out;
}

Matrix<Fp> to_matrix(const std::vector<std::vector<Fp>>& m, const PrimeField& F, std::size_t cols) {
  Matrix<Fp> M(m.size(), cols, F);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) M(i, j) = m[i][j];
  }
  return M;
}

}  // namespace

SplitStratum split_stratum(const SolvedSystem<Rational>& s, const std::string& chart, std::uint64_t start,
                           std::uint64_t limit) {
  SplitStratum out;
  if (s.squarefree.degree() <= 0) return out;
  std::uint64_t p = std::max<std::uint64_t>(start, 3);
  for (; p < limit; ++p) {
    if (!is_prime_u64(p)) continue;
    PrimeField F(p);
    auto g = reduce_upoly(s.squarefree, F);
    if (!g || g->degree() != s.squarefree.degree()) continue;
    if (static_cast<std::uint64_t>(g->degree()) >= p) continue;
    if (upoly_gcd(*g, g->derivative()).degree() != 0) continue;
    std::vector<UPolyP> coords;
    bool ok = true;
    for (const auto& c : s.coordinates) {
      auto r = reduce_upoly(c, F);
      if (!r) {
        ok = false;
        break;
      }
      coords.push_back(*r);
    }
    if (!ok || !splits_completely(*g)) continue;
    out.prime = p;
    for (const auto& root : roots_of_split(*g, p)) {
      ChartPoint pt{chart, s.ring->names(), {}};
      for (const auto& c : coords) pt.coords.push_back(c(root));
      out.points.push_back(std::move(pt));
    }
    return out;
  }
  fail(ErrorCode::BadPrime, "no splitting prime below " + std::to_string(limit));
}

OdpResult classify_odp(const VarietySpec& spec, const ChartPoint& point) {
  if (point.coords.empty()) fail(ErrorCode::InvalidArgument, "point without coordinates");
  std::uint64_t p = point.coords.front().modulus();
  if (p == 2) fail(ErrorCode::BadPrime, "characteristic 2");
  PrimeField F(p);
  auto cs = chart_system<Fp>(spec, point.chart, F);
  if (cs.ring->names() != point.names) fail(ErrorCode::RingMismatch, "point coordinates do not match chart variables");
  for (const auto& f : cs.equations) {
    if (!f.evaluate(point.coords).is_zero()) fail(ErrorCode::PointNotSingular, "point is not on " + spec.name);
  }
  const std::size_t r = cs.equations.size(), m = cs.ring->nvars();
  auto J = to_matrix(evaluate_matrix(cs.jacobian, point.coords), F, m);
  OdpResult res;
  res.jacobian_rank = rank(J);
  if (res.jacobian_rank == r) fail(ErrorCode::PointNotSingular, "Jacobian has full rank at the point");
  if (res.jacobian_rank + 1 != r) {
    res.reason = "Jacobian rank " + std::to_string(res.jacobian_rank) + " below codim - 1";
    return res;
  }
  auto lambda = kernel(J.transpose());
  auto tangent = kernel(J);
  Matrix<Fp> H(m, m, F);
  for (std::size_t i = 0; i < r; ++i) {
    if (lambda[0][i].is_zero()) continue;
    for (std::size_t a = 0; a < m; ++a) {
      auto da = derivative(cs.equations[i], a);
      for (std::size_t b = 0; b < m; ++b) H(a, b) += lambda[0][i] * derivative(da, b).evaluate(point.coords);
    }
  }
  const std::size_t k = tangent.size();
  Matrix<Fp> Kmat(m, k, F);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t a = 0; a < m; ++a) Kmat(a, j) = tangent[j][a];
  }
  res.hessian_rank = rank(Kmat.transpose() * H * Kmat);
  res.odp = res.hessian_rank == k && k == 3;
  if (!res.odp) {
    res.reason = "restricted Hessian rank " + std::to_string(res.hessian_rank) + " on a " + std::to_string(k) +
                 "-dimensional tangent kernel";
  }
  return res;
}

SingularCensus census(const VarietySpec& spec, const CensusOptions& opts, bool classify) {
  SingularCensus out;
  out.variety = spec.name;
  for (auto& st : census_strata<Rational>(spec, opts)) {
    out.complex += st.count.complex;
    out.real += st.count.real.value_or(0);
    std::uint64_t prime = 0;
    if (classify && st.count.complex > 0) {
      std::uint64_t start = 3;
      for (int attempt = 0; attempt < 5; ++attempt) {
        auto split = split_stratum(st.solved, st.count.chart, start);
        std::vector<std::string> failures;
        std::size_t confirmed = 0;
        for (const auto& pt : split.points) {
          auto r = classify_odp(spec, pt);
          if (r.odp) {
            ++confirmed;
          } else {
            failures.push_back("chart " + pt.chart + " at p=" + std::to_string(split.prime) + ": " + r.reason);
          }
        }
        prime = split.prime;
        if (failures.empty() || attempt == 4) {
          out.odp_checked += split.points.size();
          out.odp_confirmed += confirmed;
          for (auto& f : failures) out.odp_failures.push_back(std::move(f));
          break;
        }
        start = split.prime + 1;
      }
    }
    out.primes.push_back(prime);
    out.strata.push_back(st.count);
  }
  return out;
}

std::vector<std::size_t> census_mod_p(const VarietySpec& spec, std::uint64_t p, const CensusOptions& opts) {
  std::vector<std::size_t> counts;
  for (const auto& st : census_strata<Fp>(spec, opts, PrimeField(p))) counts.push_back(st.count.complex);
  return counts;
}

// ------------------------------------------------------------ Lemma checks

namespace {

struct ChartDefinition {
  std::string chart;
  std::string order;                   // increasing chain
  bool uses_A = true, uses_B = true;   // parameters present
  std::vector<std::string> generators;
  std::vector<std::string> raw;
  std::string degenerate;              // empty: not degenerate
};

std::string paren(const std::string& s) { return "(" + s + ")"; }

ChartDefinition chart_definition(const std::string& chart, const std::string& A, const std::string& B,
                                 const std::array<Fp, 4>& c) {
  auto s = [](const Fp& v) { return paren(v.to_string()); };
  const auto &a = c[0], &b = c[1], &g = c[2], &d = c[3];
  std::string al = s(a), be = s(b), ga = s(g), de = s(d);
  std::string A2 = paren(A) + "^2", B2 = paren(B) + "^2";
  std::string H = al + "*" + A2 + " + " + be + "*" + B2 + " + " + ga + "*C^2 - " + de;
  std::vector<std::string> tail{"X^2 - " + B2 + " - C^2", "Y^2 - C^2 - " + A2, "Z^2 - " + A2 + " - " + B2,
                                "U^2 - " + A2 + " - " + B2 + " - C^2"};
  ChartDefinition def;
  def.chart = chart;
  if (chart == "none" || chart == "A" || chart == "B") {
    def.order = "C<U<X<Y<Z";
    def.uses_A = chart != "A";
    def.uses_B = chart != "B";
    def.generators = {H};
    def.generators.insert(def.generators.end(), tail.begin(), tail.end());
    def.raw = def.generators;
  } else if (chart == "C") {
    def.order = "B<U<X<Y<Z";
    def.uses_B = false;
    def.generators = {be + "*B^2 + " + al + "*" + A2 + " + " + ga + " - " + de, "X^2 - B^2 - 1", "Y^2 - 1 - " + A2,
                      "Z^2 - " + A2 + " - B^2", "U^2 - " + A2 + " - B^2 - 1"};
    def.raw = {al + "*" + A2 + " + " + be + "*B^2 + " + ga + " - " + de, "X^2 - B^2 - 1", "Y^2 - 1 - " + A2,
               "Z^2 - " + A2 + " - B^2", "U^2 - " + A2 + " - B^2 - 1"};
    if (b.is_zero()) def.degenerate = "beta = 0";
  } else if (chart == "X") {
    def.order = "B<C<U<Y<Z";
    def.uses_B = false;
    def.generators = {s(g - b) + "*B^2 - " + al + "*" + A2 + " - " + ga + " + " + de, "C^2 + B^2 - 1",
                      "Y^2 - C^2 - " + A2, "Z^2 - " + A2 + " - B^2", "U^2 - " + A2 + " - B^2 - C^2"};
    def.raw = {al + "*" + A2 + " + " + be + "*B^2 + " + ga + "*C^2 - " + de, "1 - B^2 - C^2", "Y^2 - C^2 - " + A2,
               "Z^2 - " + A2 + " - B^2", "U^2 - " + A2 + " - B^2 - C^2"};
    if (b == g) def.degenerate = "1 - beta/gamma = 0";
    else if (a.is_zero()) def.degenerate = "alpha = 0";
  } else if (chart == "Y") {
    def.order = "B<C<U<X<Z";
    def.uses_B = false;
    def.generators = {be + "*B^2 - " + s(d - g) + " - " + s(g - a) + "*" + A2, "C^2 + " + A2 + " - 1",
                      "X^2 - B^2 - C^2", "Z^2 - " + A2 + " - B^2", "U^2 - " + A2 + " - B^2 - C^2"};
    def.raw = {al + "*" + A2 + " + " + be + "*B^2 + " + ga + "*C^2 - " + de, "X^2 - B^2 - C^2", "1 - C^2 - " + A2,
               "Z^2 - " + A2 + " - B^2", "U^2 - " + A2 + " - B^2 - C^2"};
    if (b.is_zero()) def.degenerate = "beta = 0";
    else if (a == g) def.degenerate = "1 - alpha/gamma = 0";
  } else if (chart == "U") {
    def.order = "B<C<X<Y<Z";
    def.uses_B = false;
    def.generators = {s(b - g) + "*B^2 - " + s(d - g) + " - " + s(g - a) + "*" + A2, "C^2 + " + A2 + " + B^2 - 1",
                      "X^2 - B^2 - C^2", "Y^2 - C^2 - " + A2, "Z^2 - " + A2 + " - B^2"};
    def.raw = {al + "*" + A2 + " + " + be + "*B^2 + " + ga + "*C^2 - " + de, "X^2 - B^2 - C^2",
               "Y^2 - C^2 - " + A2, "Z^2 - " + A2 + " - B^2", "1 - " + A2 + " - B^2 - C^2"};
    if (b == g) def.degenerate = "1 - beta/gamma = 0";
    else if (a == g) def.degenerate = "1 - alpha/gamma = 0";
  } else if (chart == "Z") {
    def.order = "B<C<U<X<Y";
    def.uses_B = false;
    def.generators = {"B^2 + " + A2 + " - 1", ga + "*C^2 + " + al + "*" + A2 + " + " + be + "*(1 - " + A2 + ") - " + de,
                      "X^2 - B^2 - C^2", "Y^2 - C^2 - " + A2, "U^2 - " + A2 + " - B^2 - C^2"};
    def.raw = {al + "*" + A2 + " + " + be + "*B^2 + " + ga + "*C^2 - " + de, "X^2 - B^2 - C^2",
               "Y^2 - C^2 - " + A2, "1 - " + A2 + " - B^2", "U^2 - " + A2 + " - B^2 - C^2"};
  } else {
    fail(ErrorCode::UnknownVariable, "unknown chart " + chart);
  }
  return def;
}

std::vector<std::string> chain_variables(const std::string& chain) {
  std::vector<std::string> vars;
  std::string cur;
  for (char ch : chain) {
    if (ch == '<') {
      vars.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  vars.push_back(cur);
  return vars;
}

template <class K>
void run_chart_check(const ChartDefinition& def, const typename K::Domain& dom, ChartCheck& out) {
  auto vars = chain_variables(def.order);
  auto ring = PolyRing<K>::make(vars, MonomialOrder::lex(ranking_from_chain(vars, def.order)), dom);
  std::vector<Polynomial<K>> gens, raw;
  for (const auto& g : def.generators) gens.push_back(parse_poly(g, ring));
  for (const auto& g : def.raw) raw.push_back(parse_poly(g, ring));
  auto check = is_groebner_basis(gens);
  out.is_basis = check.is_basis;
  std::vector<Monomial> lead = check.leading;
  std::sort(lead.begin(), lead.end(), [&](const Monomial& a, const Monomial& b) { return ring->order().less(a, b); });
  out.leading.clear();
  for (const auto& m : lead) out.leading.push_back(Polynomial<K>::monomial(ring, m, dom.one()).to_string());
  if (auto c = ring->index_of("C")) {
    for (const auto& g : gens) {
      if (g.leading_monomial() == Monomial::variable(*c, 2)) out.leading_c_coefficient = g.leading_coefficient().to_string();
    }
  }
  auto G1 = buchberger(Ideal<K>(ring, gens));
  auto G2 = buchberger(Ideal<K>(ring, raw));
  out.matches_raw = G1.elements == G2.elements;
}

std::array<Fp, 4> coefficients_mod(const HyperplaneSpec& h, const PrimeField& F) {
  std::array<Fp, 4> c{F.from_rational(h.alpha), F.from_rational(h.beta), F.from_rational(h.gamma),
                      F.from_rational(h.delta)};
  if (c[2].is_zero()) fail(ErrorCode::DegenerateCoefficients, "gamma must be nonzero");
  return c;
}

PrimeField odd_prime_field(std::uint64_t p) {
  if (p == 2) fail(ErrorCode::BadPrime, "characteristic 2 is excluded");
  if (!is_prime_u64(p)) fail(ErrorCode::BadPrime, std::to_string(p) + " is not prime");
  return PrimeField(p);
}

}  // namespace

ChartCheck verify_lemma_2_1_chart(const HyperplaneSpec& h, std::uint64_t p, const std::string& chart,
                                  std::optional<std::pair<std::int64_t, std::int64_t>> ab) {
  auto F = odd_prime_field(p);
  auto c = coefficients_mod(h, F);
  std::string A = chart == "A" ? "1" : ab ? std::to_string(F(ab->first).value()) : "A";
  std::string B = chart == "B" ? "1" : ab ? std::to_string(F(ab->second).value()) : "B";
  auto def = chart_definition(chart, A, B, c);
  ChartCheck out;
  out.chart = chart;
  out.order = def.order;
  out.generators = def.generators;
  if (!def.degenerate.empty()) {
    fail(ErrorCode::DegenerateCoefficients, "chart " + chart + ": " + def.degenerate);
  }
  if (ab) {
    run_chart_check<Fp>(def, F, out);
  } else {
    std::vector<std::string> params;
    if (def.uses_A) params.push_back("A");
    if (def.uses_B) params.push_back("B");
    if (params.empty()) {
      run_chart_check<Fp>(def, F, out);
    } else {
      using RF = RationalFunction<Fp>;
      RF::Domain dom{PolyRing<Fp>::make(params, F)};
      run_chart_check<RF>(def, dom, out);
    }
  }
  return out;
}

Lemma21Report verify_lemma_2_1(const HyperplaneSpec& h, std::uint64_t p, Lemma21Mode mode, std::uint64_t seed,
                               int trials) {
  auto F = odd_prime_field(p);
  coefficients_mod(h, F);
  Lemma21Report rep;
  rep.prime = p;
  rep.parametric = mode == Lemma21Mode::Parametric;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> val(1, static_cast<std::int64_t>(p) - 1);
  const std::vector<std::string> charts{"none", "A", "B", "C", "X", "Y", "Z", "U"};
  int rounds = rep.parametric ? 1 : trials;
  for (int t = 0; t < rounds; ++t) {
    std::optional<std::pair<std::int64_t, std::int64_t>> ab;
    if (!rep.parametric) {
      ab = std::make_pair(val(rng), val(rng));
      rep.specializations.push_back(*ab);
    }
    for (const auto& chart : charts) {
      try {
        rep.charts.push_back(verify_lemma_2_1_chart(h, p, chart, ab));
      } catch (const MathError& e) {
        if (e.code() != ErrorCode::DegenerateCoefficients) throw;
        ChartCheck c;
        c.chart = chart;
        c.degenerate = true;
        c.degenerate_reason = e.what();
        rep.charts.push_back(std::move(c));
      }
    }
  }
  return rep;
}

// ----------------------------------------------------------- face cuboids

namespace {

std::optional<long> exact_sqrt(long n) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r == n) return r;
  return std::nullopt;
}

}  // namespace

std::vector<FaceCuboid> search_face_cuboids(long bound) {
  if (bound < 1) fail(ErrorCode::InvalidArgument, "bound must be at least 1");
  std::vector<FaceCuboid> out;
  for (long C = 1; C <= bound; ++C) {
    // legs pairing with C into a Pythagorean triple
    std::vector<std::pair<long, long>> legs;
    for (long a = 1; a <= bound; ++a) {
      if (auto h = exact_sqrt(a * a + C * C)) legs.push_back({a, *h});
    }
    for (const auto& [A, Y] : legs) {
      for (const auto& [B, X] : legs) {
        auto U = exact_sqrt(A * A + X * X);
        if (!U) continue;
        long g = std::gcd(std::gcd(std::gcd(A, B), std::gcd(C, X)), std::gcd(Y, *U));
        if (g == 1) out.push_back({A, B, C, X, Y, *U});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

GroebnerRemarkReport groebner_remark_check() {
  static const std::vector<std::string> vars{"A", "B", "C", "X", "Y", "Z", "U"};
  static const std::vector<std::string> quadrics{"Z^2 - A^2 - B^2", "X^2 - B^2 - C^2", "Y^2 - C^2 - A^2",
                                                 "U^2 - A^2 - X^2"};
  auto check = [](std::vector<std::size_t> ranking, const std::vector<std::string>& gens) {
    GroebnerOrderCheck c;
    c.order = "lex";
    for (std::size_t i = 0; i < ranking.size(); ++i) c.order += (i ? ">" : " ") + vars[ranking[i]];
    auto ring = PolyRing<Rational>::make(vars, MonomialOrder::lex(std::move(ranking)));
    std::vector<Polynomial<Rational>> G;
    for (const auto& g : gens) G.push_back(parse_poly(g, ring));
    auto r = is_groebner_basis(G);
    c.generators = gens;
    for (const auto& m : r.leading) c.leading.push_back(detail::monomial_text(m, vars));
    c.is_basis = r.is_basis;
    if (r.failing_remainder) c.failing_remainder = r.failing_remainder->to_string();
    return c;
  };
  // indices into vars: A0 B1 C2 X3 Y4 Z5 U6
  const std::vector<std::size_t> zyxu{5, 4, 3, 6, 0, 1, 2}, uxyz{6, 3, 4, 5, 0, 1, 2};
  auto replaced = quadrics;
  replaced[3] = "U^2 - A^2 - B^2 - C^2";
  return {check(zyxu, quadrics), check(zyxu, replaced), check(uxyz, quadrics)};
}

}  // namespace cuboid
