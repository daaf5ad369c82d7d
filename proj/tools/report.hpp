#pragma once

// JSON report builders shared by the command-line driver and the acceptance
// runner. Reports hold no timings or host data, so equal configs give equal bytes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cuboid/eulerchar.hpp"
#include "json.hpp"

namespace cuboid::report {

using Json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "1.0.0";

struct RunConfig {
  std::string command;
  std::uint64_t seed = 1;
  std::uint64_t budget_steps = 20'000;    // Mora reductions per Milnor computation
  std::uint64_t jet_budget = 200'000;     // jet-oracle row operations
  unsigned jet_cap = 40;
  std::vector<std::uint64_t> primes;      // empty: per-command default
  EulerVariant variant = EulerVariant::AsPrinted;
  std::string out;                        // report path; empty for none
  std::vector<std::string> args;          // positional parameters
  std::optional<long> bound;              // face-search bound
  std::optional<long> chi_upsilon, chi_V;  // pi1-report overrides
  std::size_t samples = 500;
  bool calibration = true;                // euler: include the calibration table

  Json to_json() const;
};

enum class Status { Pass, Fail, Budget, Info };
std::string to_string(Status s);

struct Report {
  Json doc;
  std::string summary;  // one line per claim, for standard output

  /// 0 ok, 2 a claim failed, 3 a budget ran out.
  int exit_code() const;
  std::string dump() const { return doc.dump(2) + "\n"; }
};

/// Ideal from "vars" line and generator lines; order "lex", "grevlex",
/// optionally with a ranking such as "lex:y>x".
Report run_gb(const RunConfig& cfg, const std::vector<std::string>& variables,
              const std::vector<std::string>& generators, const std::string& order);
Report run_lemma21(const RunConfig& cfg);
Report run_remark(const RunConfig& cfg);
Report run_census(const RunConfig& cfg, const std::string& variety);
/// Polynomials in the polynomial grammar, or builtin "H_upsilon", "H_V", "suite".
Report run_milnor(const RunConfig& cfg, const std::vector<std::string>& variables,
                  const std::vector<std::string>& polynomials);
Report run_milnor_builtin(const RunConfig& cfg, const std::string& name);
Report run_euler(const RunConfig& cfg, const std::string& variety);
Report run_phi_check(const RunConfig& cfg);
Report run_pi1_report(const RunConfig& cfg);
Report run_face_search(const RunConfig& cfg, long bound);

/// Reads "vars: x, y" (or a bare comma list) then one polynomial per line;
/// blank lines and lines starting with '#' are skipped.
void read_polynomial_file(const std::string& path, std::vector<std::string>& variables,
                          std::vector<std::string>& polynomials);

}  // namespace cuboid::report
