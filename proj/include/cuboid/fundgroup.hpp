#pragma once

// Finitely presented groups, Smith normal form over ZZ, abelianization and
// the assembled fundamental-group report for the cuboid surfaces.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cuboid/error.hpp"

namespace cuboid {

/// Letters are signed generator indices: +i is generator i (1-based), -i its inverse.
using Word = std::vector<int>;

/// Cancels adjacent x x^-1 pairs until none remain.
Word free_reduce(const Word& w);

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;  // freely reduced, nonempty

  std::size_t rank() const { return generators.size(); }
  /// Throws InvalidArgument on a letter outside the generators.
  void validate() const;
  std::string to_string() const;
};

/// Validates, reduces every relator and drops the ones that become empty.
GroupPresentation make_presentation(std::vector<std::string> generators, std::vector<Word> relators);

GroupPresentation trivial_group();
GroupPresentation free_group(int n);
/// N_k: <a1..ak | a1^2 ... ak^2>, k >= 1.
GroupPresentation surface_group_nonorientable(int k);
/// Sigma_g: <a1 b1 .. ag bg | [a1,b1]...[ag,bg]>, g >= 0.
GroupPresentation surface_group_orientable(int g);
/// ZZ^n: n generators, pairwise commutators.
GroupPresentation free_abelian_group(int n);
/// Generators of H are renamed on clashes; relators of H are shifted.
GroupPresentation free_product(const GroupPresentation& G, const GroupPresentation& H);

// ---------------------------------------------------------- integer matrices

struct IntegerMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<mpz_class> data;  // row-major

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> init);

  static IntegerMatrix identity(std::size_t n);

  mpz_class& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
/// Determinant by fraction-free elimination; square matrices only.
mpz_class determinant(const IntegerMatrix& m);

struct SmithForm {
  IntegerMatrix D, U, V;  // D = U * M * V
  std::vector<mpz_class> diagonal;  // nonzero invariant factors, d1 | d2 | ...
};

SmithForm smith_normal_form(const IntegerMatrix& M);

struct Abelianization {
  std::size_t rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1

  bool trivial() const { return rank == 0 && torsion.empty(); }
  std::string to_string() const;  // e.g. "Z^3 + Z/2", "0"
  friend bool operator==(const Abelianization& a, const Abelianization& b) {
    return a.rank == b.rank && a.torsion == b.torsion;
  }
};

/// Exponent-sum matrix: one row per relator, one column per generator.
IntegerMatrix relation_matrix(const GroupPresentation& G);
Abelianization abelianization(const GroupPresentation& G);
/// Direct sum, with torsion re-normalized to invariant factors.
Abelianization direct_sum(const Abelianization& a, const Abelianization& b);

// ----------------------------------------------------------- extensions

struct SectionData {
  std::string description;
  GroupPresentation image;  // presentation of the section's image subgroup
};

/// 1 -> kernel -> G -> quotient -> 1
struct ExtensionDescriptor {
  std::string name;
  GroupPresentation kernel, quotient;
  bool split = false;
  std::optional<SectionData> section;
  std::optional<IntegerMatrix> action;  // per quotient generator, stacked; empty when unknown

  /// split implies a section whose image has the quotient's free rank.
  bool well_formed() const;
};

// ------------------------------------------------------------- report

struct Pi1Inputs {
  std::optional<long> chi_upsilon;   // chi of the real cuboid surface
  std::optional<long> chi_V;         // chi of the real face-cuboid surface
  bool upsilon_budget_exceeded = false;
  bool V_budget_exceeded = false;
  std::size_t upsilon_complex_singular = 48;
  std::size_t upsilon_real_singular = 24;
  std::size_t V_complex_singular = 16;
  std::optional<std::size_t> V_real_singular;  // from a census when available
};

struct GroupEntry {
  std::string name;
  std::optional<GroupPresentation> presentation;  // empty when an index is unknown or invalid
  std::optional<Abelianization> h1;
  std::string note;
};

/// One reading of the nonorientable index of the smoothed surface M.
struct IndexReading {
  std::string formula;            // "k - 48", "48 - k", ...
  std::optional<long> index;
  bool valid = false;             // index >= 1
  bool chi_chain_consistent = false;  // chi(N_index) - free_rank == chi
};

struct RealSurfaceReport {
  std::string variety;            // "upsilon" or "V"
  long base = 0;                  // 26 or 18
  std::size_t free_rank = 0;      // 24 or 16 wedge circles
  std::size_t census_real_singular = 0;
  bool census_matches_free_rank = false;
  std::optional<long> chi, k;     // k = base - chi
  bool budget_exceeded = false;
  std::vector<IndexReading> readings;  // implemented reading first
  GroupEntry real, resolved;      // pi1 of the real surface and of its resolution N_k
};

struct Pi1Report {
  std::vector<GroupEntry> complex_surfaces;
  std::vector<RealSurfaceReport> real_surfaces;
  std::vector<ExtensionDescriptor> extensions;
  std::vector<std::string> notes;
};

/// Throws MissingInput when a chi is absent without a budget flag.
Pi1Report assemble_pi1_report(const Pi1Inputs& in);

}  // namespace cuboid
