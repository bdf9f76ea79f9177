// Command-line front end. Kept header-only so the test suite can drive it
// in-process.

#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "projsat/projsat.hpp"
#include "projsat/report.hpp"

namespace projsat::cli {

enum exit_code : int {
  verified = 0,
  usage = 1,
  verify_failed = 2,
  satisfiable = 10,
  unsatisfiable = 20,
};

struct options {
  std::string input = "-";
  std::string mode = "solve";
  unsigned threads = 1;
  std::string order = "input";
  bool oracle_check = false;
  bool json = false;
  bool trace = false;
  std::uint64_t max_enum = manager::default_enumeration_cap;
};

inline void write_v_line(std::ostream &out, const point &p) {
  out << 'v';
  for (const auto lit : to_literals(p))
    out << ' ' << lit;
  out << " 0\n";
}

inline void write_trace(std::ostream &out, const std::vector<chain_step> &chain) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto &s = chain[i];
    out << "c step " << i + 1 << ": factor " << s.record.factor + 1 << ", f has " << s.record.size << " nodes\n";
    out << "c   f = " << s.f.to_string(16) << '\n';
    if (!s.proj)
      continue;
    out << "c   off-point:";
    if (s.record.off_point)
      for (const auto lit : to_literals(*s.record.off_point))
        out << ' ' << lit;
    out << "\nc   reduced " << s.record.remaining_before << " -> " << s.record.remaining_after << " nodes\n";
    for (const auto &line : s.proj->dump())
      out << "c   " << line << '\n';
  }
}

/// Run the tool with `argv`-style arguments (argv[0] is the program name).
inline int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
  options opt;
  CLI::App app{"Projective cofactor decomposition SAT solver"};
  app.add_option("--input,input", opt.input, "DIMACS CNF file ('-' for stdin)");
  app.add_option("--mode", opt.mode, "solve | all | trace | verify")
      ->check(CLI::IsMember({"solve", "all", "trace", "verify"}));
  app.add_option("--threads", opt.threads, "worker threads for the reduction loop")->check(CLI::PositiveNumber);
  app.add_option("--order", opt.order, "factor order: input | size")->check(CLI::IsMember({"input", "size"}));
  app.add_flag("--oracle-check", opt.oracle_check, "compare the final function with the plain conjunction");
  app.add_flag("--json", opt.json, "emit a JSON report");
  app.add_flag("--trace", opt.trace, "print every step of the decomposition chain");
  app.add_option("--max-enum", opt.max_enum, "maximum number of solutions to enumerate");

  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  cnf_formula formula;
  try {
    if (opt.input == "-") {
      formula = parse_dimacs(in);
    } else {
      std::ifstream file(opt.input);
      if (!file)
        throw error("cannot open '" + opt.input + "'");
      formula = parse_dimacs(file);
    }
  } catch (const error &e) {
    err << "error: " << (opt.input == "-" ? "<stdin>" : opt.input) << ": " << e.what() << '\n';
    return usage;
  }

  solve_config cfg;
  cfg.threads = opt.threads;
  cfg.order = opt.order == "size" ? factor_order::ascending_size : factor_order::input;
  cfg.trace = opt.trace || opt.mode == "trace";
  cfg.enumerate_all = opt.mode == "all";
  cfg.oracle_check = opt.oracle_check || opt.mode == "verify";

  manager mgr(formula.var_count);
  mgr.set_enumeration_cap(opt.max_enum);
  solve_result result;
  try {
    result = solve(mgr, formula, cfg);
  } catch (const error &e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }

  const bool sat = result.status == sat_status::sat;
  int code = sat ? satisfiable : unsatisfiable;
  if (opt.mode == "verify")
    code = *result.oracle_agrees ? verified : verify_failed;

  if (opt.json) {
    out << nlohmann::json(summarize(result)).dump(2) << '\n';
    return code;
  }

  out << "c projsat: " << formula.var_count << " variables, " << formula.clauses.size() << " clauses";
  if (result.dropped_tautologies)
    out << " (" << result.dropped_tautologies << " tautological dropped)";
  out << '\n';
  for (const auto &w : formula.warnings)
    out << "c warning: " << w << '\n';
  if (cfg.trace)
    write_trace(out, result.chain);
  if (result.oracle_agrees)
    out << "c oracle check: " << (*result.oracle_agrees ? "agree" : "DISAGREE") << '\n';
  out << (sat ? "s SATISFIABLE\n" : "s UNSATISFIABLE\n");
  if (opt.mode == "all") {
    out << "c solutions: " << result.all_solutions->size() << '\n';
    for (const auto &p : *result.all_solutions)
      write_v_line(out, p);
  } else if (sat) {
    write_v_line(out, *result.witness);
  }
  return code;
}

} // namespace projsat::cli
