#include "cuboid/eulerchar.hpp"

#include <future>
#include <unordered_map>

namespace cuboid {

namespace {

struct BruceRing {
  RingPtr<Rational> src, target;
  std::size_t n = 0;
};

BruceRing bruce_ring(const BruceInput& in, const RingPtr<Rational>& ring) {
  BruceRing r;
  r.src = in.f.empty() ? ring : in.f.front().ring();
  if (!r.src) fail(ErrorCode::MissingInput, "Bruce construction needs a ring when no polynomial is given");
  if (r.src->index_of(in.hom_var)) fail(ErrorCode::InvalidArgument, "variable " + in.hom_var + " is not fresh");
  auto names = r.src->names();
  names.push_back(in.hom_var);
  r.n = r.src->nvars();
  r.target = PolyRing<Rational>::make(names);
  for (const auto& f : in.f) {
    if (!f.ring()->same_as(*r.src)) fail(ErrorCode::RingMismatch, "Bruce input polynomials must share a ring");
    if (f.total_degree() > in.d) {
      fail(ErrorCode::DegreeMismatch, "degree " + std::to_string(f.total_degree()) + " exceeds d = " +
                                          std::to_string(in.d));
    }
  }
  return r;
}

// y^e f(x/y) for deg f <= e
PolyQ homogenize_to(const PolyQ& f, const BruceRing& r, unsigned e) {
  std::vector<Term<Rational>> acc;
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t v = 0; v < r.n; ++v) m = m * Monomial::variable(v, t.mono[v]);
    acc.push_back({m * Monomial::variable(r.n, e - t.mono.degree()), t.coeff});
  }
  return PolyQ::from_terms(r.target, std::move(acc));
}

PolyQ subtract_powers(PolyQ H, const BruceRing& r, unsigned e) {
  for (std::size_t v = 0; v <= r.n; ++v) H -= PolyQ::monomial(r.target, Monomial::variable(v, e), Rational(1));
  return H;
}

}  // namespace

PolyQ bruce_H_generic(const BruceInput& in, const RingPtr<Rational>& ring) {
  auto r = bruce_ring(in, ring);
  PolyQ H(r.target);
  for (const auto& f : in.f) H += homogenize_to(f, r, in.d + 1);
  return subtract_powers(std::move(H), r, 2 * in.d + 4);
}

PolyQ bruce_H_squared(const BruceInput& in, const RingPtr<Rational>& ring) {
  auto r = bruce_ring(in, ring);
  PolyQ S(r.target);
  for (const auto& f : in.f) {
    auto F = homogenize_to(f, r, in.d);
    S += F * F;
  }
  auto y = PolyQ::variable(r.target, r.n);
  return subtract_powers(y * y * S, r, 2 * in.d + 4);
}

std::string to_string(BruceConstruction c) { return c == BruceConstruction::Linear ? "linear" : "squared"; }

PolyQ build_H_upsilon() {
  auto R = PolyRing<Rational>::make({"A", "B", "C", "X", "Y", "Z", "D"});
  return parse_poly(
      "D^2*((A^2 + B^2 - Z^2)^2 + (B^2 + C^2 - X^2)^2 + (C^2 + A^2 - Y^2)^2 + (A^2 + B^2 + C^2 - D^2)^2)"
      " - A^8 - B^8 - C^8 - X^8 - Y^8 - Z^8 - D^8",
      R);
}

PolyQ build_H_V() {
  auto H = build_H_upsilon();
  auto R = PolyRing<Rational>::make({"A", "B", "C", "X", "Y", "D"});
  return substitute(H, {{"Z", PolyQ(R)}}, R);
}

// ------------------------------------------------------------ jet oracle

namespace {

struct JetSpace {
  std::vector<Monomial> monomials;  // by increasing degree
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
};

void compositions(std::size_t nvars, std::size_t var, unsigned left, Monomial cur, std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    out.push_back(cur * Monomial::variable(var, left));
    return;
  }
  for (unsigned e = left + 1; e-- > 0;) compositions(nvars, var + 1, left - e, cur * Monomial::variable(var, e), out);
}

JetSpace jet_space(std::size_t nvars, unsigned N) {
  JetSpace s;
  for (unsigned d = 0; d <= N; ++d) {
    if (nvars == 0) {
      if (d == 0) s.monomials.push_back(Monomial());
      continue;
    }
    compositions(nvars, 0, d, Monomial(), s.monomials);
  }
  for (std::uint32_t i = 0; i < s.monomials.size(); ++i) s.index.emplace(s.monomials[i], i);
  return s;
}

using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

SparseRow axpy(const SparseRow& a, const Rational& c, const SparseRow& b) {
  // a - c*b
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, -(c * b[j].second));
      ++j;
    } else {
      auto v = a[i].second - c * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

std::size_t truncated_quotient_dimension(const std::vector<PolyQ>& generators, unsigned N, std::uint64_t* steps,
                                         std::uint64_t step_limit) {
  if (generators.empty()) fail(ErrorCode::MissingInput, "no generators");
  const std::size_t n = generators.front().ring()->nvars();
  auto space = jet_space(n, N);
  std::vector<SparseRow> pivots(space.monomials.size());
  std::size_t rank = 0;
  std::uint64_t local = 0;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    unsigned low = g.low_degree();
    if (low > N) continue;
    for (const auto& m : space.monomials) {
      if (m.degree() + low > N) break;
      SparseRow row;
      for (const auto& t : g.terms()) {
        if (m.degree() + t.mono.degree() > N) continue;
        row.emplace_back(space.index.at(m * t.mono), t.coeff);
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      while (!row.empty()) {
        auto col = row.front().first;
        if (pivots[col].empty()) {
          auto inv = row.front().second.inverse();
          for (auto& e : row) e.second *= inv;
          pivots[col] = std::move(row);
          ++rank;
          break;
        }
        row = axpy(row, row.front().second, pivots[col]);
        ++local;
        if (step_limit && (steps ? *steps : 0) + local > step_limit) {
          if (steps) *steps += local;
          fail(ErrorCode::BudgetExceeded, "jet oracle: row budget exhausted at order " + std::to_string(N));
        }
      }
    }
  }
  if (steps) *steps += local;
  return space.monomials.size() - rank;
}

JetOracleResult jet_oracle(const std::vector<PolyQ>& generators, JetOptions opts) {
  JetOracleResult res;
  std::uint64_t steps = 0;
  for (unsigned N = 1; N <= opts.cap; ++N) {
    try {
      res.dims.push_back(truncated_quotient_dimension(generators, N, &steps, opts.step_limit));
    } catch (const MathError& e) {
      if (e.code() != ErrorCode::BudgetExceeded) throw;
      res.budget_exceeded = true;
      return res;
    }
    res.last_order = N;
    auto k = res.dims.size();
    if (k >= 3 && res.dims[k - 1] == res.dims[k - 2] && res.dims[k - 2] == res.dims[k - 3]) {
      res.stable = true;
      res.value = res.dims[k - 1];
      return res;
    }
  }
  return res;
}

// ---------------------------------------------------------- Milnor numbers

MilnorSession::MilnorSession(const PolyQ& f, unsigned initial_degree) : degree_(std::max(2u, initial_degree)) {
  if (!f.constant_term().is_zero()) fail(ErrorCode::NotVanishingAtOrigin, "f(0) = " + f.constant_term().to_string());
  ring_ = f.ring()->with_order(MonomialOrder::neg_deg_lex(f.ring()->nvars()));
  auto g = f.in_ring(ring_);
  for (std::size_t v = 0; v < ring_->nvars(); ++v) jac_.push_back(derivative(g, v));
  mora_ = std::make_unique<MoraComputation<Rational>>(Ideal<Rational>(ring_, jac_), degree_);
}

bool MilnorSession::resume(std::uint64_t limit) {
  const std::uint64_t start = steps();
  while (!complete_) {
    std::uint64_t left = 0;
    if (limit) {
      std::uint64_t used = steps() - start;
      if (used >= limit) return false;
      left = limit - used;
    }
    if (!mora_->run(left)) return false;
    if (mora_->truncation_degree() < degree_) {
      complete_ = true;
      break;
    }
    steps_ += mora_->steps();
    degree_ += std::max(2u, degree_ / 2);
    mora_ = std::make_unique<MoraComputation<Rational>>(Ideal<Rational>(ring_, jac_), degree_);
  }
  return true;
}

MilnorResult milnor_number(const PolyQ& f, MilnorOptions opts) {
  MilnorSession session(f, opts.initial_degree);
  MilnorResult res;
  std::future<JetOracleResult> jet;
  if (opts.run_jet) {
    auto gens = session.jacobian();
    jet = std::async(opts.concurrent ? std::launch::async : std::launch::deferred,
                     [gens, jopts = opts.jet] { return jet_oracle(gens, jopts); });
  }
  bool done = session.resume(opts.step_limit);
  const auto& mc = session.computation();
  res.mora_steps = session.steps();
  res.mora_basis_size = mc.basis_size();
  res.mora_pairs_pending = mc.pairs_pending();
  res.degree_bound = mc.truncation_degree();
  if (done) {
    auto st = mc.staircase();
    if (st.finite) {
      res.status = MilnorStatus::Finite;
      res.mu = st.size();
      res.staircase = std::move(st.monomials);
    } else {
      res.status = MilnorStatus::Infinite;
    }
  }
  if (opts.run_jet) {
    res.jet = jet.get();
    res.methods_agree = res.mu && res.jet.value && *res.mu == *res.jet.value;
  }
  return res;
}

// ---------------------------------------------------------- Euler formulas

std::string to_string(EulerVariant v) {
  switch (v) {
    case EulerVariant::AsPrinted: return "as-printed";
    case EulerVariant::Negated: return "negated";
    case EulerVariant::PlusMu: return "plus-mu";
  }
  return "";
}

EulerVariant parse_euler_variant(std::string_view s) {
  for (auto v : all_euler_variants()) {
    if (to_string(v) == s) return v;
  }
  fail(ErrorCode::InvalidArgument, "unknown Euler formula variant " + std::string(s));
}

const std::vector<EulerVariant>& all_euler_variants() {
  static const std::vector<EulerVariant> v{EulerVariant::AsPrinted, EulerVariant::Negated, EulerVariant::PlusMu};
  return v;
}

long euler_characteristic(std::size_t mu, unsigned n, EulerVariant v) {
  const long sign = n % 2 == 0 ? 1 : -1;
  const long m = static_cast<long>(mu);
  long num = 0;
  switch (v) {
    case EulerVariant::AsPrinted: num = sign - m; break;
    case EulerVariant::Negated: num = m - sign; break;
    case EulerVariant::PlusMu: num = sign + m; break;
  }
  if (num % 2 != 0) {
    fail(ErrorCode::NonIntegerResult, to_string(v) + " formula gives " + std::to_string(num) + "/2 for mu = " +
                                          std::to_string(mu) + ", n = " + std::to_string(n));
  }
  return num / 2;
}

namespace {

std::optional<long> try_euler(std::optional<std::size_t> mu, unsigned n, EulerVariant v) {
  if (!mu) return std::nullopt;
  try {
    return euler_characteristic(*mu, n, v);
  } catch (const MathError& e) {
    if (e.code() != ErrorCode::NonIntegerResult) throw;
    return std::nullopt;
  }
}

}  // namespace

bool EulerReport::k_consistent() const {
  for (const auto& v : values) {
    if (v.chi.has_value() != v.k.has_value()) return false;
    if (v.chi && *v.k != base - *v.chi) return false;
  }
  if (chi.has_value() != k.has_value()) return false;
  return !chi || *k == base - *chi;
}

std::vector<CalibrationEntry> calibration_table(const CalibrationOptions& opts) {
  struct Ref {
    const char* name;
    std::vector<std::string> vars;
    const char* f;
    long chi;
  };
  const std::vector<Ref> refs{{"two points", {"x"}, "x^2 - 1", 2},
                              {"circle", {"x", "y"}, "x^2 + y^2 - 1", 0},
                              {"sphere", {"x", "y", "z"}, "x^2 + y^2 + z^2 - 1", 2}};
  std::vector<CalibrationEntry> out;
  for (auto construction : {BruceConstruction::Linear, BruceConstruction::Squared}) {
    for (const auto& r : refs) {
      CalibrationEntry e;
      e.name = r.name;
      e.f = r.f;
      e.construction = construction;
      e.n = static_cast<unsigned>(r.vars.size());
      e.topological_chi = r.chi;
      auto R = PolyRing<Rational>::make(r.vars);
      BruceInput in{{parse_poly(r.f, R)}, 2, "t"};
      auto H = construction == BruceConstruction::Linear ? bruce_H_generic(in) : bruce_H_squared(in);
      e.milnor = milnor_number(H, construction == BruceConstruction::Linear ? opts.linear : opts.squared);
      for (auto v : all_euler_variants()) {
        CalibrationEntry::Row row{v, try_euler(e.milnor.mu, e.n, v), try_euler(e.milnor.jet.value, e.n, v)};
        row.consistent = e.milnor.methods_agree && row.pipeline == row.composed;
        row.matches_topology = row.pipeline && *row.pipeline == r.chi;
        e.rows.push_back(row);
      }
      out.push_back(std::move(e));
    }
  }
  return out;
}

EulerReport compute_euler_report(std::string_view variety, EulerOptions opts) {
  EulerReport rep;
  PolyQ H = [&] {
    if (variety == "upsilon") {
      rep.variety = "upsilon";
      rep.n = 6;
      rep.base = 26;
      return build_H_upsilon();
    }
    if (variety == "V") {
      rep.variety = "V";
      rep.n = 5;
      rep.base = 18;
      return build_H_V();
    }
    fail(ErrorCode::UnknownVariety, std::string(variety));
  }();
  rep.variant = opts.variant;
  rep.milnor = milnor_number(H, opts.milnor);
  if (rep.milnor.status == MilnorStatus::Finite) {
    for (auto v : all_euler_variants()) {
      VariantValue vv{v, try_euler(rep.milnor.mu, rep.n, v), std::nullopt};
      if (vv.chi) vv.k = rep.base - *vv.chi;
      if (v == opts.variant) {
        rep.chi = vv.chi;
        rep.k = vv.k;
      }
      rep.values.push_back(vv);
    }
  }
  if (opts.with_calibration) rep.calibration = calibration_table(opts.calibration);
  return rep;
}

EulerReport compute_k(EulerOptions opts) { return compute_euler_report("upsilon", opts); }
EulerReport compute_k_prime(EulerOptions opts) { return compute_euler_report("V", opts); }

}  // namespace cuboid
