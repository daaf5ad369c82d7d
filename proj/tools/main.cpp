#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "report.hpp"

using namespace cuboid;
using namespace cuboid::report;

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the cuboid and face-cuboid surfaces"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string variant = "as-printed";
  app.add_option("--seed", cfg.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--budget-steps", cfg.budget_steps, "Reduction budget for Mora and Buchberger")->capture_default_str();
  app.add_option("--jet-budget", cfg.jet_budget, "Row-operation budget for the jet oracle")->capture_default_str();
  app.add_option("--jet-cap", cfg.jet_cap, "Highest jet order")->capture_default_str();
  app.add_option("--primes", cfg.primes, "Primes (comma separated)")->delimiter(',');
  app.add_option("--out", cfg.out, "Write the JSON report here");
  app.add_option("--variant", variant, "Euler formula variant: as-printed, negated, plus-mu")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Samples per prime for phi-check")->capture_default_str();

  std::vector<std::string> gb_vars, gb_gens;
  std::string gb_order = "lex", gb_file;
  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of an ideal over QQ");
  gb->add_option("--vars", gb_vars, "Variables, most significant first")->delimiter(',');
  gb->add_option("--gens", gb_gens, "Generators separated by ';'")->delimiter(';');
  gb->add_option("--order", gb_order, "lex, grevlex, or e.g. lex:y>x")->capture_default_str();
  gb->add_option("file", gb_file, "Polynomial file: variables line, then one generator per line");

  auto* lemma = app.add_subcommand("lemma21", "Groebner checks of the five-generator system and its charts");
  auto* remark = app.add_subcommand("remark", "Groebner checks of the cuboid quadrics under two lex orders");

  std::string variety;
  auto* census = app.add_subcommand("census", "Singular points over C and R with ODP classification");
  census->add_option("variety", variety, "upsilon or V")->required();

  std::string milnor_input;
  auto* milnor = app.add_subcommand("milnor", "Milnor numbers at the origin by Mora and the jet oracle");
  milnor->add_option("input", milnor_input, "Polynomial file or builtin: suite, H_upsilon, H_V")->required();

  bool no_calibration = false;
  auto* euler = app.add_subcommand("euler", "Milnor number of the Bruce polynomial and k or k'");
  euler->add_option("variety", variety, "upsilon or V")->required();
  euler->add_flag("--no-calibration", no_calibration, "Skip the calibration table");

  auto* phi = app.add_subcommand("phi-check", "Symbolic and sampled checks of the map from E x E");

  auto* pi1 = app.add_subcommand("pi1-report", "Fundamental-group report");
  pi1->add_option("--chi-upsilon", cfg.chi_upsilon, "Use this chi for the real cuboid surface");
  pi1->add_option("--chi-v", cfg.chi_V, "Use this chi for the real face-cuboid surface");

  long bound = 0;
  auto* face = app.add_subcommand("face-search", "Integer points of the face-cuboid surface");
  face->add_option("--bound", bound, "Largest A, B, C")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    cfg.variant = parse_euler_variant(variant);
  } catch (const MathError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  Report rep;
  try {
    auto* sub = app.get_subcommands().front();
    cfg.command = sub->get_name();
    if (sub == gb) {
      if (!gb_file.empty()) {
        gb_vars.clear();
        gb_gens.clear();
        read_polynomial_file(gb_file, gb_vars, gb_gens);
        cfg.args = {gb_file};
      }
      if (gb_vars.empty() || gb_gens.empty()) {
        std::cerr << "gb needs --vars and --gens, or a polynomial file\n";
        return 1;
      }
      cfg.args.push_back(gb_order);
      rep = run_gb(cfg, gb_vars, gb_gens, gb_order);
    } else if (sub == lemma) {
      rep = run_lemma21(cfg);
    } else if (sub == remark) {
      rep = run_remark(cfg);
    } else if (sub == census) {
      cfg.args = {variety};
      rep = run_census(cfg, variety);
    } else if (sub == milnor) {
      cfg.args = {milnor_input};
      if (milnor_input == "suite" || milnor_input == "H_upsilon" || milnor_input == "H_V") {
        rep = run_milnor_builtin(cfg, milnor_input);
      } else {
        std::vector<std::string> vars, polys;
        read_polynomial_file(milnor_input, vars, polys);
        rep = run_milnor(cfg, vars, polys);
      }
    } else if (sub == euler) {
      cfg.args = {variety};
      cfg.calibration = !no_calibration;
      rep = run_euler(cfg, variety);
    } else if (sub == phi) {
      rep = run_phi_check(cfg);
    } else if (sub == pi1) {
      rep = run_pi1_report(cfg);
    } else if (sub == face) {
      cfg.bound = bound;
      rep = run_face_search(cfg, bound);
    }
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  std::cout << rep.summary;
  if (!cfg.out.empty()) {
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return 1;
    }
    out << rep.dump();
  } else {
    std::cout << rep.dump();
  }
  return rep.exit_code();
}
