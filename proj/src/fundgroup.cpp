#include "cuboid/fundgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <utility>

namespace cuboid {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

void GroupPresentation::validate() const {
  auto n = static_cast<int>(generators.size());
  for (const auto& r : relators) {
    for (int x : r) {
      if (x == 0 || std::abs(x) > n) fail(ErrorCode::InvalidArgument, "relator letter outside the generators");
    }
  }
}

std::string GroupPresentation::to_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? " " : "") + generators[i];
  s += " |";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    s += r ? ", " : " ";
    for (std::size_t i = 0; i < relators[r].size(); ++i) {
      int x = relators[r][i];
      s += (i ? " " : "") + generators[std::abs(x) - 1] + (x < 0 ? "^-1" : "");
    }
  }
  return s + ">";
}

GroupPresentation make_presentation(std::vector<std::string> generators, std::vector<Word> relators) {
  GroupPresentation g{std::move(generators), {}};
  std::set<std::string> seen(g.generators.begin(), g.generators.end());
  if (seen.size() != g.generators.size()) fail(ErrorCode::InvalidArgument, "duplicate generator name");
  for (auto& r : relators) {
    auto red = free_reduce(r);
    if (!red.empty()) g.relators.push_back(std::move(red));
  }
  g.validate();
  return g;
}

GroupPresentation trivial_group() { return {}; }

namespace {

std::vector<std::string> names(const std::string& stem, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

}  // namespace

GroupPresentation free_group(int n) {
  if (n < 0) fail(ErrorCode::InvalidRank, "free group of negative rank");
  return make_presentation(names("a", n), {});
}

GroupPresentation surface_group_nonorientable(int k) {
  if (k < 1) fail(ErrorCode::InvalidRank, "N_k needs k >= 1, got " + std::to_string(k));
  Word r;
  for (int i = 1; i <= k; ++i) r.insert(r.end(), {i, i});
  return make_presentation(names("a", k), {r});
}

GroupPresentation surface_group_orientable(int g) {
  if (g < 0) fail(ErrorCode::InvalidRank, "negative genus");
  std::vector<std::string> gens;
  Word r;
  for (int i = 1; i <= g; ++i) {
    gens.push_back("a" + std::to_string(i));
    gens.push_back("b" + std::to_string(i));
    int a = 2 * i - 1, b = 2 * i;
    r.insert(r.end(), {a, b, -a, -b});
  }
  return make_presentation(std::move(gens), g ? std::vector<Word>{r} : std::vector<Word>{});
}

GroupPresentation free_abelian_group(int n) {
  if (n < 0) fail(ErrorCode::InvalidRank, "free abelian group of negative rank");
  std::vector<Word> rels;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) rels.push_back({i, j, -i, -j});
  }
  return make_presentation(names("e", n), std::move(rels));
}

GroupPresentation free_product(const GroupPresentation& G, const GroupPresentation& H) {
  auto gens = G.generators;
  std::set<std::string> used(gens.begin(), gens.end());
  for (const auto& h : H.generators) {
    std::string name = h;
    for (int i = 1; used.count(name); ++i) name = h + "_" + std::to_string(i);
    used.insert(name);
    gens.push_back(name);
  }
  auto rels = G.relators;
  int shift = static_cast<int>(G.rank());
  for (const auto& r : H.relators) {
    Word w;
    for (int x : r) w.push_back(x > 0 ? x + shift : x - shift);
    rels.push_back(std::move(w));
  }
  return make_presentation(std::move(gens), std::move(rels));
}

// ---------------------------------------------------------- integer matrices

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows = init.size();
  cols = rows ? init.begin()->size() : 0;
  for (const auto& row : init) {
    if (row.size() != cols) fail(ErrorCode::InvalidArgument, "ragged matrix literal");
    for (long v : row) data.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols != b.rows) fail(ErrorCode::InvalidArgument, "matrix shapes do not match");
  IntegerMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

mpz_class determinant(const IntegerMatrix& m) {
  if (m.rows != m.cols) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  // Bareiss
  auto a = m;
  std::size_t n = m.rows;
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return n ? sign * a(n - 1, n - 1) : mpz_class(1);
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(a, j), m(b, j));
}
void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows; ++i) std::swap(m(i, a), m(i, b));
}
// row[dst] += q * row[src]
void add_row(IntegerMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  for (std::size_t j = 0; j < m.cols; ++j) m(dst, j) += q * m(src, j);
}
void add_col(IntegerMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  for (std::size_t i = 0; i < m.rows; ++i) m(i, dst) += q * m(i, src);
}
void negate_row(IntegerMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols; ++j) m(r, j) = -m(r, j);
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& M) {
  SmithForm s{M, IntegerMatrix::identity(M.rows), IntegerMatrix::identity(M.cols), {}};
  auto& D = s.D;
  std::size_t t = 0;
  while (t < D.rows && t < D.cols) {
    // smallest nonzero entry of the remaining block
    std::size_t pi = D.rows, pj = D.cols;
    for (std::size_t i = t; i < D.rows; ++i) {
      for (std::size_t j = t; j < D.cols; ++j) {
        if (D(i, j) != 0 && (pi == D.rows || abs(D(i, j)) < abs(D(pi, pj)))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == D.rows) break;
    swap_rows(D, t, pi);
    swap_rows(s.U, t, pi);
    swap_cols(D, t, pj);
    swap_cols(s.V, t, pj);

    bool clean = true;
    for (std::size_t i = t + 1; i < D.rows; ++i) {
      if (D(i, t) == 0) continue;
      mpz_class q = D(i, t) / D(t, t);
      add_row(D, i, t, -q);
      add_row(s.U, i, t, -q);
      clean = clean && D(i, t) == 0;
    }
    for (std::size_t j = t + 1; j < D.cols; ++j) {
      if (D(t, j) == 0) continue;
      mpz_class q = D(t, j) / D(t, t);
      add_col(D, j, t, -q);
      add_col(s.V, j, t, -q);
      clean = clean && D(t, j) == 0;
    }
    if (!clean) continue;  // a smaller remainder becomes the next pivot

    // divisibility: fold an offending row into row t and retry
    std::size_t bad = D.rows;
    for (std::size_t i = t + 1; i < D.rows && bad == D.rows; ++i) {
      for (std::size_t j = t + 1; j < D.cols; ++j) {
        if (D(i, j) % D(t, t) != 0) {
          bad = i;
          break;
        }
      }
    }
    if (bad != D.rows) {
      add_row(D, t, bad, 1);
      add_row(s.U, t, bad, 1);
      continue;
    }
    if (D(t, t) < 0) {
      negate_row(D, t);
      negate_row(s.U, t);
    }
    s.diagonal.push_back(D(t, t));
    ++t;
  }
  return s;
}

std::string Abelianization::to_string() const {
  std::string s;
  if (rank) s = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  for (const auto& d : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + d.get_str();
  return s.empty() ? "0" : s;
}

IntegerMatrix relation_matrix(const GroupPresentation& G) {
  G.validate();
  IntegerMatrix m(G.relators.size(), G.rank());
  for (std::size_t r = 0; r < G.relators.size(); ++r) {
    for (int x : G.relators[r]) m(r, std::abs(x) - 1) += x > 0 ? 1 : -1;
  }
  return m;
}

namespace {

Abelianization from_diagonal(std::size_t ngens, const std::vector<mpz_class>& diag) {
  Abelianization a;
  a.rank = ngens - diag.size();
  for (const auto& d : diag) {
    if (d > 1) a.torsion.push_back(d);
  }
  return a;
}

}  // namespace

Abelianization abelianization(const GroupPresentation& G) {
  auto m = relation_matrix(G);
  if (m.rows == 0) return Abelianization{G.rank(), {}};
  return from_diagonal(G.rank(), smith_normal_form(m).diagonal);
}

Abelianization direct_sum(const Abelianization& a, const Abelianization& b) {
  std::vector<mpz_class> t = a.torsion;
  t.insert(t.end(), b.torsion.begin(), b.torsion.end());
  IntegerMatrix m(t.size(), t.size());
  for (std::size_t i = 0; i < t.size(); ++i) m(i, i) = t[i];
  auto r = from_diagonal(t.size(), t.empty() ? std::vector<mpz_class>{} : smith_normal_form(m).diagonal);
  r.rank = a.rank + b.rank;
  return r;
}

bool ExtensionDescriptor::well_formed() const {
  if (!split) return true;
  if (!section) return false;
  auto q = abelianization(quotient), img = abelianization(section->image);
  return q.torsion.empty() && img.torsion.empty() && q.rank == img.rank && section->image.relators.empty();
}

// ------------------------------------------------------------- report

namespace {

GroupEntry entry(std::string name, std::optional<GroupPresentation> g, std::string note = {}) {
  GroupEntry e{std::move(name), std::move(g), std::nullopt, std::move(note)};
  if (e.presentation) e.h1 = abelianization(*e.presentation);
  return e;
}

ExtensionDescriptor surface_extension(const std::string& name) {
  ExtensionDescriptor e;
  e.name = name;
  e.kernel = free_abelian_group(2);
  e.quotient = free_group(3);
  e.split = true;
  e.section = SectionData{"[Q] -> [(0, Q)]", free_group(3)};
  return e;
}

RealSurfaceReport real_surface(const std::string& variety, long base, std::size_t free_rank,
                               std::size_t census_real, std::optional<long> chi, bool budget) {
  RealSurfaceReport r;
  r.variety = variety;
  r.base = base;
  r.free_rank = free_rank;
  r.census_real_singular = census_real;
  r.census_matches_free_rank = census_real == free_rank;
  r.chi = chi;
  r.budget_exceeded = budget;
  const long two_r = 2 * static_cast<long>(free_rank);
  if (chi) r.k = base - *chi;

  auto reading = [&](std::string formula, bool lemma_sign) {
    IndexReading ir;
    ir.formula = std::move(formula);
    if (r.k) {
      ir.index = lemma_sign ? *r.k - two_r : two_r - *r.k;
      ir.valid = *ir.index >= 1;
      ir.chi_chain_consistent = 2 - *ir.index - static_cast<long>(free_rank) == *chi;
    }
    return ir;
  };
  r.readings.push_back(reading("k - " + std::to_string(two_r), true));
  r.readings.push_back(reading(std::to_string(two_r) + " - k", false));

  const auto& used = r.readings.front();
  std::string real_name = "pi1(" + variety + "(R))";
  if (used.index && used.valid) {
    r.real = entry(real_name,
                   free_product(surface_group_nonorientable(static_cast<int>(*used.index)),
                                free_group(static_cast<int>(free_rank))),
                   "N_(" + used.formula + ") * F_" + std::to_string(free_rank));
  } else {
    std::string why = !r.k ? (budget ? "k unknown: Milnor computation exceeded its budget" : "k unknown")
                           : "index " + std::to_string(*used.index) + " < 1";
    r.real = entry(real_name, std::nullopt, "N_(" + used.formula + ") * F_" + std::to_string(free_rank) + "; " + why);
  }
  std::string res_name = "pi1(" + variety + "~(R))";
  if (r.k && *r.k >= 1) {
    r.resolved = entry(res_name, surface_group_nonorientable(static_cast<int>(*r.k)), "N_k");
  } else {
    r.resolved = entry(res_name, std::nullopt, r.k ? "k < 1" : "N_k with k unknown");
  }
  return r;
}

}  // namespace

Pi1Report assemble_pi1_report(const Pi1Inputs& in) {
  if (!in.chi_upsilon && !in.upsilon_budget_exceeded) {
    fail(ErrorCode::MissingInput, "chi of the real cuboid surface is missing");
  }
  if (!in.chi_V && !in.V_budget_exceeded) fail(ErrorCode::MissingInput, "chi of the real face-cuboid surface is missing");

  Pi1Report rep;
  for (const char* n : {"pi1(upsilon(C))", "pi1(upsilon~(C))", "pi1(V(C))", "pi1(V~(C))"}) {
    rep.complex_surfaces.push_back(entry(n, trivial_group(), "simply connected"));
  }
  rep.real_surfaces.push_back(
      real_surface("upsilon", 26, 24, in.upsilon_real_singular, in.chi_upsilon, in.upsilon_budget_exceeded));
  rep.real_surfaces.push_back(
      real_surface("V", 18, 16, in.V_real_singular.value_or(in.V_complex_singular), in.chi_V, in.V_budget_exceeded));
  rep.extensions.push_back(surface_extension("pi1(S1)"));
  rep.extensions.push_back(surface_extension("pi1(S2)"));

  rep.notes.push_back(
      "index discrepancy: the smoothed real cuboid surface is N_(k - 48) in the construction of M, "
      "while the closing statement writes N_(48 - k); the report uses k - 48 and lists both readings");
  rep.notes.push_back(
      "index discrepancy: the smoothed real face-cuboid surface is N_(k' - 32) in its construction, "
      "while the closing statement writes N_(32 - k'); the report uses k' - 32 and lists both readings");
  rep.notes.push_back("the action of F_3 on Z^2 in pi1(S1) and pi1(S2) is not specified; no action matrix is recorded");
  for (const auto& r : rep.real_surfaces) {
    if (!r.census_matches_free_rank) {
      rep.notes.push_back(r.variety + ": real singular census " + std::to_string(r.census_real_singular) +
                          " differs from the " + std::to_string(r.free_rank) + " wedge circles of the decomposition");
    }
  }
  return rep;
}

}  // namespace cuboid
