#pragma once

// Bruce-type polynomials, Milnor numbers at the origin, and the Euler
// characteristic formulas built on them.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cuboid/mora.hpp"

namespace cuboid {

using PolyQ = Polynomial<Rational>;

struct BruceInput {
  std::vector<PolyQ> f;      // all in one ring
  unsigned d = 0;            // degree bound
  std::string hom_var = "y";  // fresh variable appended to the ring
};

/// sum_i y^(d+1) f_i(x/y) - y^(2d+4) - sum_j x_j^(2d+4), in the ring of the
/// f_i with `hom_var` appended. `ring` is used when f is empty.
PolyQ bruce_H_generic(const BruceInput& in, const RingPtr<Rational>& ring = nullptr);

/// y^2 * sum_i (y^d f_i(x/y))^2 - y^(2d+4) - sum_j x_j^(2d+4): the shape of
/// the explicit cuboid polynomials below.
PolyQ bruce_H_squared(const BruceInput& in, const RingPtr<Rational>& ring = nullptr);

enum class BruceConstruction { Linear, Squared };
std::string to_string(BruceConstruction c);

/// D^2 * (sum of squared cuboid quadrics with U = D) - (pure eighth powers),
/// in A, B, C, X, Y, Z, D.
PolyQ build_H_upsilon();
/// build_H_upsilon with Z = 0, in A, B, C, X, Y, D.
PolyQ build_H_V();

// ------------------------------------------------------------ Milnor numbers

struct JetOracleResult {
  bool stable = false;          // dims(N) = dims(N+1) = dims(N+2)
  bool budget_exceeded = false;
  unsigned last_order = 0;      // highest N evaluated
  std::vector<std::size_t> dims;  // dims[N-1] = dim R/(J + m^(N+1)) for N = 1..last_order
  std::optional<std::size_t> value;
};

struct JetOptions {
  unsigned cap = 40;
  std::uint64_t step_limit = 50'000'000;  // row operations over all orders
};

/// dim R/(J + m^(N+1)) for increasing N by linear algebra on truncated jets.
JetOracleResult jet_oracle(const std::vector<PolyQ>& generators, JetOptions opts = {});

/// dim of degree <= N jets modulo the truncated ideal, for one N.
std::size_t truncated_quotient_dimension(const std::vector<PolyQ>& generators, unsigned N,
                                         std::uint64_t* steps = nullptr, std::uint64_t step_limit = 0);

enum class MilnorStatus { Finite, Infinite, BudgetExceeded };

struct MilnorOptions {
  std::uint64_t step_limit = 10'000'000;  // Mora reductions
  unsigned initial_degree = 6;
  JetOptions jet;
  bool run_jet = true;
  bool concurrent = true;
};

struct MilnorResult {
  MilnorStatus status = MilnorStatus::BudgetExceeded;
  std::optional<std::size_t> mu;         // from Mora
  std::vector<Monomial> staircase;
  std::uint64_t mora_steps = 0;
  std::size_t mora_basis_size = 0;
  std::size_t mora_pairs_pending = 0;
  unsigned degree_bound = 0;             // truncation degree of the last Mora run
  JetOracleResult jet;
  bool methods_agree = false;            // both finite and equal
};

/// Mora standard bases of J + m^D for growing D, where J is the Jacobian
/// ideal. A run ends once the leading ideal contains m^(D-1), which puts
/// m^(D-1) inside J locally. Budget stops keep the state for resume().
class MilnorSession {
 public:
  explicit MilnorSession(const PolyQ& f, unsigned initial_degree = 6);
  /// Spends up to `limit` more reductions (0: no limit); true when complete.
  bool resume(std::uint64_t limit);
  bool complete() const { return complete_; }
  std::uint64_t steps() const { return steps_ + mora_->steps(); }
  /// Current D; the truncation actually certified is computation().truncation_degree().
  unsigned degree_bound() const { return degree_; }
  const MoraComputation<Rational>& computation() const { return *mora_; }
  const RingPtr<Rational>& local_ring() const { return ring_; }
  const std::vector<PolyQ>& jacobian() const { return jac_; }

 private:
  RingPtr<Rational> ring_;
  std::vector<PolyQ> jac_;
  unsigned degree_;
  std::uint64_t steps_ = 0;  // spent on abandoned bounds
  bool complete_ = false;
  std::unique_ptr<MoraComputation<Rational>> mora_;
};

/// Local Milnor number at the origin; f(0) must vanish.
MilnorResult milnor_number(const PolyQ& f, MilnorOptions opts = {});

// -------------------------------------------------------- Euler formulas

enum class EulerVariant { AsPrinted, Negated, PlusMu };

std::string to_string(EulerVariant v);
EulerVariant parse_euler_variant(std::string_view s);
const std::vector<EulerVariant>& all_euler_variants();

/// as-printed ((-1)^n - mu)/2, negated (mu - (-1)^n)/2, plus-mu ((-1)^n + mu)/2.
long euler_characteristic(std::size_t mu, unsigned n, EulerVariant v = EulerVariant::AsPrinted);

struct VariantValue {
  EulerVariant variant;
  std::optional<long> chi;  // empty when the parity fails
  std::optional<long> k;    // base - chi
};

struct CalibrationEntry {
  std::string name;
  std::string f;
  BruceConstruction construction = BruceConstruction::Linear;
  unsigned n = 0;
  long topological_chi = 0;
  MilnorResult milnor;
  struct Row {
    EulerVariant variant;
    std::optional<long> pipeline;  // Mora mu through the variant
    std::optional<long> composed;  // jet-oracle mu through the variant
    bool consistent = false;       // pipeline == composed
    bool matches_topology = false;
  };
  std::vector<Row> rows;
};

struct EulerReport {
  std::string variety;
  unsigned n = 0;
  long base = 0;  // 26 for upsilon, 18 for V
  EulerVariant variant = EulerVariant::AsPrinted;
  MilnorResult milnor;
  std::vector<VariantValue> values;
  std::optional<long> chi, k;  // for the selected variant
  std::vector<CalibrationEntry> calibration;
  bool budget_exceeded() const { return milnor.status == MilnorStatus::BudgetExceeded; }
  /// k = base - chi for every stored variant value.
  bool k_consistent() const;
};

struct CalibrationOptions {
  MilnorOptions linear;
  MilnorOptions squared = [] {
    MilnorOptions o;
    o.step_limit = 20'000;
    o.jet.step_limit = 400'000;
    return o;
  }();
};

/// The three reference inputs x^2-1, x^2+y^2-1, x^2+y^2+z^2-1 through both
/// constructions with d = 2.
std::vector<CalibrationEntry> calibration_table(const CalibrationOptions& opts = {});

struct EulerOptions {
  MilnorOptions milnor;
  CalibrationOptions calibration;
  EulerVariant variant = EulerVariant::AsPrinted;
  bool with_calibration = true;
};

EulerReport compute_k(EulerOptions opts = {});
EulerReport compute_k_prime(EulerOptions opts = {});
/// "upsilon" or "V".
EulerReport compute_euler_report(std::string_view variety, EulerOptions opts = {});

}  // namespace cuboid
