#include "report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cuboid/bielliptic.hpp"
#include "cuboid/fundgroup.hpp"
#include "cuboid/variety.hpp"

namespace cuboid::report {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Budget: return "BUDGET";
    case Status::Info: return "INFO";
  }
  return "INFO";
}

Json RunConfig::to_json() const {
  Json j;
  j["command"] = command;
  j["args"] = args;
  j["seed"] = seed;
  j["budget_steps"] = budget_steps;
  j["jet_budget"] = jet_budget;
  j["jet_cap"] = jet_cap;
  j["primes"] = primes;
  j["variant"] = cuboid::to_string(variant);
  j["samples"] = samples;
  j["calibration"] = calibration;
  j["bound"] = bound ? Json(*bound) : Json(nullptr);
  j["chi_upsilon"] = chi_upsilon ? Json(*chi_upsilon) : Json(nullptr);
  j["chi_V"] = chi_V ? Json(*chi_V) : Json(nullptr);
  return j;
}

int Report::exit_code() const {
  bool budget = false;
  for (const auto& c : doc["claims"]) {
    if (c["status"] == "FAIL") return 2;
    budget = budget || c["status"] == "BUDGET";
  }
  return budget ? 3 : 0;
}

namespace {

class Builder {
 public:
  explicit Builder(const RunConfig& cfg) {
    doc_["tool"] = "cuboid";
    doc_["version"] = kVersion;
    doc_["config"] = cfg.to_json();
    doc_["claims"] = Json::array();
    doc_["artifacts"] = Json::object();
  }

  void claim(const std::string& id, const std::string& statement, Status st, Json value, Json expected) {
    Json c;
    c["id"] = id;
    c["source_claim"] = statement;
    c["status"] = to_string(st);
    c["value"] = std::move(value);
    c["expected"] = std::move(expected);
    doc_["claims"].push_back(std::move(c));
    summary_ += to_string(st) + "  " + id + "\n";
  }
  void check(const std::string& id, const std::string& statement, bool ok, Json value, Json expected) {
    claim(id, statement, ok ? Status::Pass : Status::Fail, std::move(value), std::move(expected));
  }
  Json& artifacts() { return doc_["artifacts"]; }

  Report finish() { return {std::move(doc_), std::move(summary_)}; }

 private:
  Json doc_;
  std::string summary_;
};

std::vector<std::uint64_t> primes_or(const RunConfig& cfg, std::vector<std::uint64_t> fallback) {
  return cfg.primes.empty() ? fallback : cfg.primes;
}

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string status_name(MilnorStatus s) {
  switch (s) {
    case MilnorStatus::Finite: return "finite";
    case MilnorStatus::Infinite: return "infinite";
    case MilnorStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "budget-exceeded";
}

Json milnor_json(const MilnorResult& m) {
  Json j;
  j["status"] = status_name(m.status);
  j["mu"] = opt(m.mu);
  j["methods_agree"] = m.methods_agree;
  j["mora"] = {{"steps", m.mora_steps},
               {"basis_size", m.mora_basis_size},
               {"pairs_pending", m.mora_pairs_pending},
               {"degree_bound", m.degree_bound},
               {"staircase_size", m.staircase.size()}};
  j["jet"] = {{"stable", m.jet.stable},
              {"budget_exceeded", m.jet.budget_exceeded},
              {"last_order", m.jet.last_order},
              {"dims", m.jet.dims},
              {"value", opt(m.jet.value)}};
  return j;
}

MilnorOptions milnor_options(const RunConfig& cfg) {
  MilnorOptions o;
  o.step_limit = cfg.budget_steps;
  o.jet.cap = cfg.jet_cap;
  o.jet.step_limit = cfg.jet_budget;
  return o;
}

Status milnor_status(const MilnorResult& m) {
  if (m.status == MilnorStatus::Finite && m.jet.value) return m.methods_agree ? Status::Pass : Status::Fail;
  if (m.status == MilnorStatus::Infinite) return Status::Info;
  return Status::Budget;
}

Json presentation_json(const GroupPresentation& g) {
  Json rel = Json::array();
  for (const auto& r : g.relators) rel.push_back(r);
  return {{"generators", g.generators}, {"relators", rel}};
}

Json group_entry_json(const GroupEntry& e) {
  Json j;
  j["name"] = e.name;
  j["presentation"] = e.presentation ? presentation_json(*e.presentation) : Json(nullptr);
  j["abelianization"] = e.h1 ? Json(e.h1->to_string()) : Json(nullptr);
  j["note"] = e.note;
  return j;
}

MonomialOrder parse_order(const std::string& text, const std::vector<std::string>& vars) {
  auto colon = text.find(':');
  std::string kind = text.substr(0, colon);
  std::vector<std::size_t> ranking;
  if (colon == std::string::npos) {
    for (std::size_t i = 0; i < vars.size(); ++i) ranking.push_back(i);
  } else {
    std::stringstream ss(text.substr(colon + 1));
    std::string name;
    while (std::getline(ss, name, '>')) {
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) fail(ErrorCode::UnknownVariable, "order mentions unknown variable " + name);
      ranking.push_back(static_cast<std::size_t>(it - vars.begin()));
    }
    if (ranking.size() != vars.size()) fail(ErrorCode::InvalidArgument, "order ranking must list every variable");
  }
  if (kind == "lex") return MonomialOrder::lex(ranking);
  if (kind == "grevlex") return MonomialOrder::grevlex(ranking);
  fail(ErrorCode::InvalidArgument, "unknown order '" + kind + "' (expected lex or grevlex)");
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void read_polynomial_file(const std::string& path, std::vector<std::string>& variables,
                          std::vector<std::string>& polynomials) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::MissingInput, "cannot open " + path);
  std::string line;
  bool have_vars = false;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!have_vars) {
      if (line.rfind("vars:", 0) == 0) line = line.substr(5);
      std::stringstream ss(line);
      std::string v;
      while (std::getline(ss, v, ',')) {
        v = trim(v);
        if (!v.empty()) variables.push_back(v);
      }
      have_vars = true;
      continue;
    }
    polynomials.push_back(line);
  }
  if (!have_vars) fail(ErrorCode::MissingInput, path + " declares no variables");
}

// ------------------------------------------------------------------ gb

Report run_gb(const RunConfig& cfg, const std::vector<std::string>& variables,
              const std::vector<std::string>& generators, const std::string& order) {
  Builder b(cfg);
  auto ring = PolyRing<Rational>::make(variables, parse_order(order, variables));
  std::vector<Polynomial<Rational>> gens;
  for (const auto& g : generators) gens.push_back(parse_poly(g, ring));
  BuchbergerOptions opts;
  opts.step_limit = cfg.budget_steps;
  Json basis = Json::array();
  try {
    auto G = buchberger(Ideal<Rational>(ring, gens), opts);
    for (const auto& g : G.elements) basis.push_back(g.to_string());
    b.check("gb.verified", "the output passes the Buchberger criterion", G.verified, G.verified, true);
    b.artifacts()["pairs_reduced"] = G.stats.pairs_reduced;
  } catch (const MathError& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    b.claim("gb.verified", "the output passes the Buchberger criterion", Status::Budget, e.what(), true);
  }
  b.artifacts()["variables"] = variables;
  b.artifacts()["order"] = order;
  b.artifacts()["generators"] = generators;
  b.artifacts()["basis"] = basis;
  return b.finish();
}

// ------------------------------------------------------------- lemma21

Report run_lemma21(const RunConfig& cfg) {
  Builder b(cfg);
  const HyperplaneSpec h{2, 3, 5, 7};
  const std::vector<std::string> expected_leads{"C^2", "U^2", "X^2", "Y^2", "Z^2"};
  bool leads_ok = true, charts_ok = true;
  std::size_t full_checks = 0, chart_checks = 0;
  Json per_prime = Json::array();
  auto primes = primes_or(cfg, {10007, 10009, 10037});
  for (auto p : primes) {
    auto rep = verify_lemma_2_1(h, p, Lemma21Mode::Specialized, cfg.seed, 3);
    Json jp;
    jp["prime"] = p;
    jp["specializations"] = Json::array();
    for (const auto& [A, B] : rep.specializations) jp["specializations"].push_back({A, B});
    jp["charts"] = Json::array();
    std::string gamma_mod_p = std::to_string(PrimeField(p).from_rational(h.gamma).value());
    for (const auto& c : rep.charts) {
      Json jc{{"chart", c.chart},     {"order", c.order},       {"leading", c.leading},
              {"c_coefficient", c.leading_c_coefficient},       {"is_basis", c.is_basis},
              {"matches_raw", c.matches_raw},                  {"degenerate", c.degenerate},
              {"degenerate_reason", c.degenerate_reason}};
      jp["charts"].push_back(jc);
      if (c.chart == "none") {
        ++full_checks;
        leads_ok = leads_ok && c.is_basis && c.leading == expected_leads && c.leading_c_coefficient == gamma_mod_p;
      } else if (!c.degenerate) {
        ++chart_checks;
        charts_ok = charts_ok && c.is_basis && c.matches_raw;
      }
    }
    per_prime.push_back(jp);
  }
  b.check("lemma21.leading",
          "under C<U<X<Y<Z the five generators have initial terms gamma*C^2, U^2, X^2, Y^2, Z^2 and form a Groebner basis",
          leads_ok && full_checks >= 3 * primes.size(), {{"checks", full_checks}, {"all_match", leads_ok}},
          {{"leading", expected_leads}, {"c_coefficient", "gamma mod p"}});
  b.check("lemma21.charts", "each affine chart of the system is again a Groebner basis", charts_ok,
          {{"checks", chart_checks}, {"all_bases", charts_ok}}, true);
  b.artifacts()["hyperplane"] = {{"alpha", "2"}, {"beta", "3"}, {"gamma", "5"}, {"delta", "7"}};
  b.artifacts()["primes"] = per_prime;
  return b.finish();
}

// -------------------------------------------------------------- remark

Report run_remark(const RunConfig& cfg) {
  Builder b(cfg);
  auto r = groebner_remark_check();
  auto jcheck = [](const GroebnerOrderCheck& c) {
    return Json{{"order", c.order},
                {"generators", c.generators},
                {"leading", c.leading},
                {"is_basis", c.is_basis},
                {"failing_remainder", c.failing_remainder}};
  };
  b.check("remark.original", "the four quadrics are not a Groebner basis under lex Z>Y>X>U", !r.original.is_basis,
          r.original.is_basis, false);
  b.check("remark.replaced", "replacing the fourth generator by U^2 - A^2 - B^2 - C^2 gives a Groebner basis",
          r.replaced.is_basis, r.replaced.is_basis, true);
  b.check("remark.reordered", "under lex U>X>Y>Z the four quadrics are a Groebner basis", r.reordered.is_basis,
          r.reordered.is_basis, true);
  b.artifacts()["original"] = jcheck(r.original);
  b.artifacts()["replaced"] = jcheck(r.replaced);
  b.artifacts()["reordered"] = jcheck(r.reordered);
  return b.finish();
}

// -------------------------------------------------------------- census

Report run_census(const RunConfig& cfg, const std::string& variety) {
  Builder b(cfg);
  auto spec = builtin_variety(variety);
  auto c = census(spec);
  const bool ups = spec.name == "upsilon";
  const std::size_t expected_complex = ups ? 48 : 16;

  b.check("census.complex", ups ? "the cuboid surface has 48 complex singular points"
                                : "the face-cuboid surface has 16 singular points",
          c.complex == expected_complex, c.complex, expected_complex);
  if (ups) {
    b.check("census.real", "24 of the singular points are real", c.real == 24, c.real, 24);
  } else {
    b.claim("census.real", "the real face-cuboid surface is described with 16 ordinary double points", Status::Info,
            c.real, 16);
  }
  bool verified = std::all_of(c.strata.begin(), c.strata.end(), [](const auto& s) { return s.points_verified; });
  b.check("census.points_verified", "every censused point satisfies all generators of its stratum", verified,
          verified, true);
  b.check("census.odp", "every singular point is an ordinary double point",
          c.odp_checked == c.complex && c.odp_confirmed == c.complex && c.odp_failures.empty(),
          {{"checked", c.odp_checked}, {"confirmed", c.odp_confirmed}}, {{"checked", c.complex}, {"confirmed", c.complex}});

  Json modp = Json::array();
  bool corroborated = true;
  for (auto p : primes_or(cfg, {10007, 10009, 10037, 10039, 10061})) {
    auto counts = census_mod_p(spec, p);
    std::size_t total = 0;
    for (auto n : counts) total += n;
    corroborated = corroborated && total == c.complex;
    modp.push_back({{"prime", p}, {"strata", counts}, {"total", total}});
  }
  b.check("census.mod_p", "the count over the algebraic closure of F_p agrees for good primes", corroborated,
          corroborated, true);

  Json strata = Json::array();
  for (std::size_t i = 0; i < c.strata.size(); ++i) {
    const auto& s = c.strata[i];
    strata.push_back({{"chart", s.chart},
                      {"vanishing", s.vanishing},
                      {"complex", s.complex},
                      {"real", opt(s.real)},
                      {"staircase", s.staircase},
                      {"eliminant_degree", s.eliminant_degree},
                      {"points_verified", s.points_verified},
                      {"splitting_prime", i < c.primes.size() ? c.primes[i] : 0}});
  }
  b.artifacts()["variety"] = spec.name;
  b.artifacts()["complex"] = c.complex;
  b.artifacts()["real"] = c.real;
  b.artifacts()["strata"] = strata;
  b.artifacts()["odp_failures"] = c.odp_failures;
  b.artifacts()["mod_p"] = modp;
  return b.finish();
}

// -------------------------------------------------------------- milnor

Report run_milnor(const RunConfig& cfg, const std::vector<std::string>& variables,
                  const std::vector<std::string>& polynomials) {
  Builder b(cfg);
  auto ring = PolyRing<Rational>::make(variables);
  Json results = Json::array();
  for (std::size_t i = 0; i < polynomials.size(); ++i) {
    auto m = milnor_number(parse_poly(polynomials[i], ring), milnor_options(cfg));
    b.claim("milnor." + std::to_string(i), "Mora and the truncated-jet oracle agree on " + polynomials[i],
            milnor_status(m), opt(m.mu), opt(m.jet.value));
    results.push_back({{"f", polynomials[i]}, {"milnor", milnor_json(m)}});
  }
  b.artifacts()["variables"] = variables;
  b.artifacts()["results"] = results;
  return b.finish();
}

Report run_milnor_builtin(const RunConfig& cfg, const std::string& name) {
  if (name == "suite") {
    Builder b(cfg);
    struct Case {
      std::vector<std::string> vars;
      std::string f;
      std::size_t expected;
    };
    std::vector<Case> cases{{{"x", "y", "z"}, "x^2 + y^2 + z^2", 1}};
    for (unsigned k = 2; k <= 5; ++k) cases.push_back({{"x", "y"}, "x^" + std::to_string(k + 1) + " + y^2", k});
    for (unsigned a = 2; a <= 4; ++a) {
      for (unsigned bb = 2; bb <= 4; ++bb) {
        for (unsigned c = 2; c <= 4; ++c) {
          cases.push_back({{"x", "y", "z"},
                           "x^" + std::to_string(a) + " + y^" + std::to_string(bb) + " + z^" + std::to_string(c),
                           (a - 1) * (bb - 1) * (c - 1)});
        }
      }
    }
    MilnorOptions o = milnor_options(cfg);
    o.step_limit = std::max<std::uint64_t>(o.step_limit, 1'000'000);
    o.jet.step_limit = std::max<std::uint64_t>(o.jet.step_limit, 50'000'000);
    Json results = Json::array();
    bool all = true;
    for (const auto& c : cases) {
      auto m = milnor_number(parse_poly(c.f, PolyRing<Rational>::make(c.vars)), o);
      bool ok = m.methods_agree && m.mu == c.expected;
      all = all && ok;
      results.push_back({{"f", c.f}, {"expected", c.expected}, {"ok", ok}, {"milnor", milnor_json(m)}});
    }
    b.check("milnor.suite", "Milnor numbers of the quadratic cone, the A_k curves and Brieskorn-Pham sums", all,
            all, true);
    b.artifacts()["results"] = results;
    return b.finish();
  }
  if (name == "H_upsilon" || name == "H_V") {
    Builder b(cfg);
    auto H = name == "H_upsilon" ? build_H_upsilon() : build_H_V();
    auto m = milnor_number(H, milnor_options(cfg));
    b.claim("milnor." + name, "Mora and the truncated-jet oracle agree on " + name, milnor_status(m), opt(m.mu),
            opt(m.jet.value));
    b.artifacts()["f"] = H.to_string();
    b.artifacts()["milnor"] = milnor_json(m);
    return b.finish();
  }
  fail(ErrorCode::InvalidArgument, "unknown builtin '" + name + "' (expected suite, H_upsilon or H_V)");
}

// --------------------------------------------------------------- euler

namespace {

Json calibration_json(const std::vector<CalibrationEntry>& table) {
  Json out = Json::array();
  for (const auto& e : table) {
    Json rows = Json::array();
    for (const auto& r : e.rows) {
      rows.push_back({{"variant", cuboid::to_string(r.variant)},
                      {"pipeline", opt(r.pipeline)},
                      {"composed", opt(r.composed)},
                      {"consistent", r.consistent},
                      {"matches_topology", r.matches_topology}});
    }
    out.push_back({{"name", e.name},
                   {"f", e.f},
                   {"construction", cuboid::to_string(e.construction)},
                   {"n", e.n},
                   {"topological_chi", e.topological_chi},
                   {"milnor", milnor_json(e.milnor)},
                   {"rows", rows}});
  }
  return out;
}

}  // namespace

Report run_euler(const RunConfig& cfg, const std::string& variety) {
  Builder b(cfg);
  EulerOptions o;
  o.milnor = milnor_options(cfg);
  o.variant = cfg.variant;
  o.with_calibration = cfg.calibration;
  auto rep = compute_euler_report(variety, o);
  const std::string kname = rep.variety == "upsilon" ? "k" : "k'";

  if (cfg.calibration) {
    bool linear_ok = true;
    std::size_t linear_rows = 0;
    for (const auto& e : rep.calibration) {
      if (e.construction != BruceConstruction::Linear) continue;
      for (const auto& r : e.rows) {
        ++linear_rows;
        linear_ok = linear_ok && r.consistent;
      }
    }
    b.check("euler.calibration_consistency",
            "for the calibration inputs the pipeline value equals the formula applied to the oracle Milnor number",
            linear_ok && linear_rows > 0, linear_ok, true);
    std::size_t matches = 0;
    for (const auto& e : rep.calibration) {
      for (const auto& r : e.rows) matches += r.matches_topology;
    }
    b.claim("euler.calibration_topology", "calibration values against the topological Euler characteristics 2, 0, 2",
            Status::Info, matches, "recorded per variant");
    b.artifacts()["calibration"] = calibration_json(rep.calibration);
  }

  auto st = milnor_status(rep.milnor);
  Json value;
  if (st == Status::Pass) {
    value = {{"mu", *rep.milnor.mu}, {"chi", opt(rep.chi)}, {kname, opt(rep.k)}};
    if (!rep.chi) st = Status::Info;  // parity failure of the selected variant
    if (!rep.k_consistent()) st = Status::Fail;
  } else if (st == Status::Budget) {
    value = {{"resumable", true},
             {"mora_steps", rep.milnor.mora_steps},
             {"basis_size", rep.milnor.mora_basis_size},
             {"pairs_pending", rep.milnor.mora_pairs_pending},
             {"degree_bound", rep.milnor.degree_bound},
             {"jet_last_order", rep.milnor.jet.last_order}};
  }
  b.claim("euler." + kname,
          rep.variety == "upsilon" ? "k = 26 - chi of the real cuboid surface"
                                   : "k' = 18 - chi of the real face-cuboid surface",
          st, value, rep.variety == "upsilon" ? "26 - chi" : "18 - chi");

  Json values = Json::array();
  for (const auto& v : rep.values) {
    values.push_back({{"variant", cuboid::to_string(v.variant)}, {"chi", opt(v.chi)}, {kname, opt(v.k)}});
  }
  b.artifacts()["variety"] = rep.variety;
  b.artifacts()["n"] = rep.n;
  b.artifacts()["base"] = rep.base;
  b.artifacts()["milnor"] = milnor_json(rep.milnor);
  b.artifacts()["values"] = values;
  return b.finish();
}

// ----------------------------------------------------------- phi-check

Report run_phi_check(const RunConfig& cfg) {
  Builder b(cfg);
  auto sym = phi_symbolic_check();
  b.check("phi.symbolic", "the three quadrics vanish on the image of E x E modulo the curve equations", sym.all_zero,
          sym.residues, std::vector<std::string>{"0", "0", "0"});
  b.check("phi.iota", "the map is invariant under (P, Q) -> (-P, -Q) as a polynomial identity", sym.iota_invariant,
          sym.iota_invariant, true);
  b.check("phi.bidegree", "every coordinate is bihomogeneous of bidegree (2, 2)", sym.bihomogeneous,
          sym.bihomogeneous, true);

  auto primes = primes_or(cfg, default_sampling_primes());
  auto samples = phi_sampled_check(primes, cfg.samples, cfg.seed);
  bool on_v = true, gamma_ok = true;
  Json js = Json::array();
  for (const auto& s : samples) {
    on_v = on_v && s.on_V == s.samples;
    gamma_ok = gamma_ok && s.gamma_equal + s.zero_images == s.samples;
    js.push_back({{"prime", s.prime},
                  {"samples", s.samples},
                  {"on_V", s.on_V},
                  {"zero_images", s.zero_images},
                  {"gamma_equal", s.gamma_equal},
                  {"iota_equal", s.iota_equal},
                  {"mixed_on_V", s.mixed_on_V}});
  }
  b.check("phi.sampled", "sampled images of E x E lie on the face-cuboid surface over F_p", on_v, on_v, true);
  b.check("phi.gamma", "the map is invariant under (P, Q) -> (P + T, Q + T) up to scaling where it is defined",
          gamma_ok, gamma_ok, true);
  std::size_t mixed = 0;
  for (const auto& s : samples) mixed += s.mixed_on_V;
  b.claim("phi.mixed", "images of sampled E x E' points, with the same formulas", Status::Info, mixed,
          "not required");

  bool conj_ok = true;
  Json jc = Json::array();
  for (auto p : primes) {
    auto c = conjugation_check(p, cfg.samples, cfg.seed);
    conj_ok = conj_ok && c.iota_counterexamples == 0 && c.gamma_counterexamples == 0 && c.identity_counterexamples == 0;
    jc.push_back({{"prime", p},
                  {"samples", c.samples},
                  {"iota_counterexamples", c.iota_counterexamples},
                  {"gamma_counterexamples", c.gamma_counterexamples},
                  {"identity_counterexamples", c.identity_counterexamples}});
  }
  b.check("phi.conjugation", "conjugation by (P, Q) -> (P + Q, Q) fixes iota and sends gamma to id x tau", conj_ok,
          conj_ok, true);

  bool quot_ok = true;
  Json jq = Json::array();
  for (auto p : primes) {
    if (p > 200) continue;  // exhaustive over the product
    for (auto s : {QuotientSurface::S1, QuotientSurface::S2}) {
      auto q = quotient_census(s, p);
      quot_ok = quot_ok && q.consistent;
      jq.push_back({{"surface", s == QuotientSurface::S1 ? "S1" : "S2"},
                    {"prime", p},
                    {"E_points", q.E_points},
                    {"E_prime_points", q.E_prime_points},
                    {"product_fixed", q.product_fixed},
                    {"fixed_expected", q.fixed_expected},
                    {"product_orbits", q.product_orbits},
                    {"surface_points", q.surface_points},
                    {"surface_orbits", q.surface_orbits},
                    {"base_orbits", q.base_orbits},
                    {"base_expected", q.base_expected},
                    {"fiber_sizes", q.fiber_sizes_distinct},
                    {"fiber_expected", q.fiber_expected},
                    {"consistent", q.consistent}});
    }
  }
  b.check("phi.quotients", "inv fixes exactly E[2] x E'[2] and the fibrations of S1, S2 have the expected counts",
          quot_ok, quot_ok, true);

  b.artifacts()["curve_relations"] = sym.curve_relations;
  b.artifacts()["residues"] = sym.residues;
  b.artifacts()["samples"] = js;
  b.artifacts()["conjugation"] = jc;
  b.artifacts()["quotients"] = jq;
  return b.finish();
}

// ---------------------------------------------------------- pi1-report

Report run_pi1_report(const RunConfig& cfg) {
  Builder b(cfg);
  Pi1Inputs in;
  auto vc = census(builtin_variety("V"), {}, false);
  in.V_real_singular = vc.real;

  auto chi_of = [&](const std::string& variety, std::optional<long> override, bool& budget) -> std::optional<long> {
    if (override) return override;
    EulerOptions o;
    o.milnor = milnor_options(cfg);
    o.variant = cfg.variant;
    o.with_calibration = false;
    auto rep = compute_euler_report(variety, o);
    budget = rep.budget_exceeded() || !rep.chi;
    return rep.chi;
  };
  in.chi_upsilon = chi_of("upsilon", cfg.chi_upsilon, in.upsilon_budget_exceeded);
  in.chi_V = chi_of("V", cfg.chi_V, in.V_budget_exceeded);
  auto rep = assemble_pi1_report(in);

  bool complex_ok = true;
  for (const auto& e : rep.complex_surfaces) complex_ok = complex_ok && e.h1 && e.h1->trivial();
  b.check("pi1.complex", "the four complex surfaces are simply connected", complex_ok, complex_ok, true);

  bool nk_ok = true;
  Json nk = Json::array();
  for (int k = 2; k <= 10; ++k) {
    auto a = abelianization(surface_group_nonorientable(k));
    bool ok = a.rank == static_cast<std::size_t>(k - 1) && a.torsion == std::vector<mpz_class>{2};
    nk_ok = nk_ok && ok;
    nk.push_back({{"k", k}, {"abelianization", a.to_string()}});
  }
  b.check("pi1.N_k", "H_1(N_k) = Z^(k-1) + Z/2 for k = 2..10", nk_ok, nk_ok, true);

  bool ext_ok = true;
  Json ext = Json::array();
  for (const auto& e : rep.extensions) {
    ext_ok = ext_ok && e.split && e.well_formed() && abelianization(e.kernel).to_string() == "Z^2" &&
             e.quotient.rank() == 3 && e.quotient.relators.empty();
    ext.push_back({{"name", e.name},
                   {"kernel", presentation_json(e.kernel)},
                   {"quotient", presentation_json(e.quotient)},
                   {"split", e.split},
                   {"section", e.section ? Json{{"description", e.section->description},
                                                {"image", presentation_json(e.section->image)}}
                                         : Json(nullptr)},
                   {"action", "unspecified"}});
  }
  b.check("pi1.S1_S2", "pi1(S1) and pi1(S2) are split extensions 1 -> Z^2 -> G -> F_3 -> 1", ext_ok, ext_ok, true);

  bool note = std::any_of(rep.notes.begin(), rep.notes.end(),
                          [](const std::string& n) { return n.find("N_(48 - k)") != std::string::npos; });
  b.check("pi1.index_note", "the report records both readings N_(k - 48) and N_(48 - k)", note, note, true);

  Json reals = Json::array();
  for (const auto& r : rep.real_surfaces) {
    Json readings = Json::array();
    for (const auto& ir : r.readings) {
      readings.push_back({{"formula", ir.formula},
                          {"index", opt(ir.index)},
                          {"valid", ir.valid},
                          {"chi_chain_consistent", ir.chi_chain_consistent}});
    }
    reals.push_back({{"variety", r.variety},
                     {"base", r.base},
                     {"free_rank", r.free_rank},
                     {"census_real_singular", r.census_real_singular},
                     {"census_matches_free_rank", r.census_matches_free_rank},
                     {"chi", opt(r.chi)},
                     {"k", opt(r.k)},
                     {"budget_exceeded", r.budget_exceeded},
                     {"readings", readings},
                     {"real", group_entry_json(r.real)},
                     {"resolved", group_entry_json(r.resolved)}});
    const std::string id = "pi1." + r.variety + "_real";
    if (!r.k) {
      b.claim(id, "pi1 of the real surface as N_m * F_r", Status::Budget, nullptr, "k from the Milnor number");
    } else {
      b.claim(id, "pi1 of the real surface as N_m * F_r", Status::Info, r.real.h1 ? Json(r.real.h1->to_string()) : Json(nullptr),
              "index >= 1");
    }
  }
  Json complex = Json::array();
  for (const auto& e : rep.complex_surfaces) complex.push_back(group_entry_json(e));
  b.artifacts()["complex_surfaces"] = complex;
  b.artifacts()["real_surfaces"] = reals;
  b.artifacts()["extensions"] = ext;
  b.artifacts()["N_k"] = nk;
  b.artifacts()["notes"] = rep.notes;
  return b.finish();
}

// --------------------------------------------------------- face-search

Report run_face_search(const RunConfig& cfg, long bound) {
  Builder b(cfg);
  auto hits = search_face_cuboids(bound);
  bool ok = true;
  Json jh = Json::array();
  for (const auto& h : hits) {
    ok = ok && h.A * h.A + h.C * h.C == h.Y * h.Y && h.B * h.B + h.C * h.C == h.X * h.X &&
         h.A * h.A + h.X * h.X == h.U * h.U;
    jh.push_back({h.A, h.B, h.C, h.X, h.Y, h.U});
  }
  b.check("face.solutions", "every reported tuple is an integer point of the face-cuboid surface", ok, ok, true);
  b.claim("face.count", "primitive face cuboids with A, B, C up to the bound", Status::Info, hits.size(), nullptr);
  b.artifacts()["bound"] = bound;
  b.artifacts()["hits"] = jh;
  return b.finish();
}

}  // namespace cuboid::report
