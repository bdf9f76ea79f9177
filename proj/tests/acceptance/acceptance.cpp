// Acceptance suite: one pass/fail line per criterion.
//
//   projsat_acceptance        run all criteria
//   projsat_acceptance N      run criterion N only (1..7)
//
// Exit status is 0 iff every selected criterion passed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "projsat/cofactor.hpp"
#include "projsat/expr.hpp"
#include "projsat/projsat.hpp"
#include "support/random.hpp"

using namespace projsat;
using projsat::gen::rng_t;

namespace {

struct outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string &what) {
    if (!ok) {
      if (pass)
        detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

/// Tally for one randomized property
struct tally {
  explicit tally(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t runs = 0, failures = 0;
  std::string first;

  void record(bool ok, const std::function<std::string()> &describe = {}) {
    ++runs;
    if (!ok && failures++ == 0 && describe)
      first = describe();
  }
  bool ok() const { return failures == 0; }
  std::string line() const {
    std::string s = name + ": " + std::to_string(runs - failures) + "/" + std::to_string(runs);
    if (!first.empty())
      s += " (e.g. " + first + ")";
    return s;
  }
};

void report(outcome &o, const std::vector<tally> &ts) {
  for (const auto &t : ts) {
    o.require(t.ok(), t.name);
    std::cout << "    " << (t.ok() ? "ok   " : "FAIL ") << t.line() << '\n';
  }
}

std::string show(const bool_func &f) { return f.to_string(8); }

constexpr std::size_t samples = 500;

// 1. Two-variable UNSAT formula: chain x + y, x, x·y, 0.
outcome criterion_1() {
  outcome o;
  manager m(2);
  m.set_var_names({"x", "y"});
  const auto formula = parse_dimacs("p cnf 2 4\n1 2 0\n1 -2 0\n-1 2 0\n-1 -2 0\n");
  solve_config cfg;
  cfg.trace = true;
  const auto r = solve(m, formula, cfg);
  o.require(r.status == sat_status::unsat, "status");
  o.require(r.chain.size() == 4, "chain length " + std::to_string(r.chain.size()));
  if (r.chain.size() == 4) {
    o.require(r.chain[1].f == parse_expr(m, "x"), "f2 = " + show(r.chain[1].f));
    o.require(r.chain[2].f == parse_expr(m, "x y"), "f3 = " + show(r.chain[2].f));
    o.require(r.chain[3].f.is_zero(), "f4 = " + show(r.chain[3].f));
    o.detail << "f2 = " << show(r.chain[1].f) << ", f3 = " << show(r.chain[2].f) << ", f4 = " << show(r.chain[3].f);
  }
  return o;
}

// 2. Three-clause SAT formula over x, y, z, w.
outcome criterion_2() {
  outcome o;
  manager m(4);
  m.set_var_names({"x", "y", "z", "w"});
  const auto formula = parse_dimacs("p cnf 4 3\n-1 2 4 0\n-2 3 -4 0\n1 3 -4 0\n");
  const auto c1 = parse_expr(m, "x' + y + w");
  const auto c2 = parse_expr(m, "y' + z + w'");
  const auto c3 = parse_expr(m, "x + z + w'");
  const auto oracle = func_of_tt(m, tt_of_formula(formula));

  solve_config cfg;
  cfg.trace = true;
  cfg.enumerate_all = true;
  const auto r = solve(m, formula, cfg);
  o.require(r.status == sat_status::sat, "status");
  o.require(r.final_function == oracle, "f3 differs from the oracle conjunction");
  o.require(tt_equal(tt_of_func(r.final_function), tt_of_formula(formula)), "f3 table");
  o.require(r.all_solutions && *r.all_solutions == tt_of_formula(formula).on_points(), "solution set");
  o.require(r.witness && satisfies(formula, *r.witness), "witness");

  const auto p1 = projection_for(c1, c2);
  o.require(zeta(c3, c1, p1) == c3, "zeta[C3, f1, P1] != C3");

  const auto expected_f2 = parse_expr(m, "y' x' + y' w + z x' + z y + z w + w' x' + w' y");
  o.require(r.chain.size() == 3 && r.chain[1].f == expected_f2, "f2 differs from its hand expansion");

  // A hand expansion of f3 with w'y' in the last term is wrong; the product needs w'y.
  const auto misprint_f3 = parse_expr(m, "x y' w + x y w' + z x' + z y + z w + w' x' + w' y'");
  const auto corrected_f3 = parse_expr(m, "x y' w + x y w' + z x' + z y + z w + w' x' + w' y");
  o.require(corrected_f3 == oracle, "corrected f3 differs from the oracle");
  o.detail << r.all_solutions->size() << " solutions; f2 matches its hand expansion; f3 with w'y' "
           << (misprint_f3 == oracle ? "matches" : "differs (x=1 y=0 z=0 w=0)")
           << ", with w'y matches the oracle";
  return o;
}

// 3. g·h = ζ[h, g, projection_for(g,h)] for clause g and CNF h.
outcome criterion_3() {
  outcome o;
  rng_t rng(1003);
  tally t{"g.h == zeta[h,g,P]"};
  while (t.runs < samples) {
    const auto n = gen::uniform(rng, 1, 10);
    manager m(n);
    const auto g = clause_to_func(gen::random_clause(rng, n), m);
    const auto hf = gen::random_cnf(rng, n, gen::uniform(rng, 1, 12));
    const auto h = formula_to_func(hf, m);
    if (h.is_one())
      continue;
    const auto p = projection_for(g, h);
    const auto z = zeta(h, g, p);
    // Cross-check the canonical equality against the table oracle.
    const bool ok = (g & h) == z && tt_of_func(z) == (tt_of_func(g) & tt_of_formula(hf));
    t.record(ok, [&] { return "n=" + std::to_string(n) + ", g=" + show(g); });
  }
  report(o, {t});
  return o;
}

// 4. Solver against the brute-force oracle.
outcome criterion_4() {
  outcome o;
  rng_t rng(1004);
  tally verdict{"verdict"}, witness{"witness satisfies"}, all{"all-solutions set"};
  for (std::size_t t = 0; t < samples; ++t) {
    const auto n = gen::uniform(rng, 1, 10);
    const auto f = gen::random_cnf(rng, n, gen::uniform(rng, 0, 25));
    const auto table = tt_of_formula(f);
    const auto describe = [&] { return emit_dimacs(f); };

    manager m(n);
    const auto r = solve(m, f);
    verdict.record((r.status == sat_status::sat) == (table.popcount() > 0), describe);
    if (r.status == sat_status::sat)
      witness.record(r.witness && satisfies(f, *r.witness), describe);

    manager m2(n);
    solve_config cfg;
    cfg.enumerate_all = true;
    const auto e = solve(m2, f, cfg);
    all.record(e.all_solutions && *e.all_solutions == table.on_points(), describe);
  }
  report(o, {verdict, witness, all});
  return o;
}

// 5. Cofactor set algebra. Set-valued statements are sampled through
// general_cofactor, which reaches every member of an interval.
outcome criterion_5() {
  outcome o;
  rng_t rng(1005);
  auto sample = [&](manager &m, const bool_func &f, const bool_func &g) {
    return general_cofactor(f, g, gen::random_func(rng, m));
  };

  tally example{"example: min/max cofactors of x1'x2 + x2x3 + x1x3' over x1' + x3"};
  tally membership{"membership <=> agreement on g's ON-set"};
  tally sum_forward{"u in Xi(f,g), v in Xi(f,h) => u+v in Xi(f,g+h)"};
  tally sum_reverse{"w in Xi(f,g+h) => w = u+v, u in Xi(f,g), v in Xi(f,h)"};
  tally sum_bounds{"min/max of Xi(f,g+h) are sums of members"};
  tally product{"u in Xi(f,g), v in Xi(f,h) => u.v in Xi(f,g.h)"};
  tally refinement{"g <= h: Xi(f,h) subset of Xi(f,g)"};
  tally fsum{"u in Xi(f,g), w in Xi(h,g) => u+w in Xi(f+h,g)"};
  tally fproduct{"u in Xi(f,g), w in Xi(h,g) => u.w in Xi(f.h,g)"};
  tally complement{"u in Xi(f,g) => u' in Xi(f',g)"};
  tally chained{"u in Xi(f,g), v in Xi(u,h) => u.v in Xi(f,g.h)"};

  {
    manager m(3);
    m.set_var_names({"x1", "x2", "x3"});
    const auto f = parse_expr(m, "x1' x2 + x2 x3 + x1 x3'");
    const auto g = parse_expr(m, "x1' + x3");
    const auto iv = interval_of(f, g);
    const auto lower = parse_expr(m, "x1' x2 + x2 x3");
    for (std::size_t t = 0; t < samples; ++t) {
      const auto p = gen::random_func(rng, m);
      const auto alpha = lower | (p & parse_expr(m, "x1 x3'"));
      example.record(iv.lower == lower && iv.upper == f && is_cofactor(alpha, f, g) &&
                     alpha == general_cofactor(f, g, p));
    }
  }

  for (std::size_t t = 0; t < samples; ++t) {
    const auto n = gen::uniform(rng, 1, 8);
    manager m(n);
    const auto f = gen::random_func(rng, m);
    const auto g = gen::random_func(rng, m);
    const auto h = gen::random_func(rng, m);
    const auto u = sample(m, f, g);
    const auto v = sample(m, f, h);
    const auto w = sample(m, h, g);

    {
      const auto a = gen::coin(rng) ? gen::random_func(rng, m) : u;
      const auto ta = tt_of_func(a), tf = tt_of_func(f), tg = tt_of_func(g);
      membership.record(is_cofactor(a, f, g) == ((ta & tg) == (tf & tg)));
    }
    sum_forward.record(is_cofactor(u | v, f, g | h), [&] {
      const auto bad = tt_of_func(((u | v) ^ f) & (g | h)).popcount();
      return "n=" + std::to_string(n) + ", u+v differs from f on " + std::to_string(bad) + " points of g+h";
    });
    {
      const auto s = sample(m, f, g | h);
      // s agrees with f on g and on h, so s itself lies in both intervals.
      sum_reverse.record(is_cofactor(s, f, g) && is_cofactor(s, f, h) && (s | s) == s);
    }
    {
      const auto iv = interval_of(f, g | h);
      sum_bounds.record(iv.lower == ((f & g) | (f & h)) && is_cofactor(f & g, f, g) && is_cofactor(f & h, f, h) &&
                        is_cofactor(iv.upper, f, g) && is_cofactor(iv.upper, f, h));
    }
    product.record(is_cofactor(u & v, f, g & h));
    refinement.record(is_cofactor(sample(m, f, g | h), f, g));
    fsum.record(is_cofactor(u | w, f | h, g));
    fproduct.record(is_cofactor(u & w, f & h, g));
    complement.record(is_cofactor(~u, ~f, g));
    chained.record(is_cofactor(u & sample(m, u, h), f, g & h));
  }

  report(o, {example, membership, sum_forward, sum_reverse, sum_bounds, product, refinement, fsum, fproduct,
             complement, chained});
  if (!sum_forward.ok())
    o.detail << "sum over g+h fails already for f=0, g=x, h=x', u=x', v=x (u+v=1, Xi(0,1)={0})";
  return o;
}

// 6. Projection composition and ζ homomorphism laws.
outcome criterion_6() {
  outcome o;
  rng_t rng(1006);
  tally compose{"P1 o P2 and P2 o P1 in P(g1.g2, h)"};
  tally product{"zeta[f1.f2] = zeta[f1].zeta[f2]"};
  tally sum{"zeta[f1+f2] = zeta[f1]+zeta[f2]"};
  tally negation{"zeta[f'] = zeta[f]'"};
  tally below{"f <= g => zeta[f,g,P] = f"};
  tally disjoint{"f.g = 0 => zeta[f,g,P] = 0"};
  tally bounded{"zeta[h,g,P] <= h"};

  for (std::size_t t = 0; t < samples; ++t) {
    const auto n = gen::uniform(rng, 1, 8);
    manager m(n);
    const auto g1 = gen::random_func(rng, m);
    const auto g2 = gen::random_func(rng, m);
    const auto h = gen::random_non_one(rng, m);
    const auto p1 = point_projection(g1, h, gen::random_off_point(rng, h));
    const auto p2 = point_projection(g2, h, gen::random_off_point(rng, h));
    const auto a = compose_projections(p1, p2);
    const auto b = compose_projections(p2, p1);
    compose.record(verify_projection(a, g1 & g2, h) && verify_projection(b, g1 & g2, h));

    const auto f1 = gen::random_func(rng, m);
    const auto f2 = gen::random_func(rng, m);
    product.record(zeta(f1 & f2, g1, p1) == (zeta(f1, g1, p1) & zeta(f2, g1, p1)));
    sum.record(zeta(f1 | f2, g1, p1) == (zeta(f1, g1, p1) | zeta(f2, g1, p1)));
    negation.record(zeta(~f1, g1, p1) == ~zeta(f1, g1, p1));

    const auto lo = g1 & f1;
    if (!lo.is_one())
      below.record(zeta(lo, g1, projection_for(g1, lo)) == lo);
    const auto off = ~g1 & f1;
    if (!off.is_one())
      disjoint.record(zeta(off, g1, projection_for(g1, off)).is_zero());
    bounded.record(zeta(h, g1, p1).implies(h));
  }
  report(o, {compose, product, sum, negation, below, disjoint, bounded});
  return o;
}

// 7. threads = 1 and threads = 8 give identical results.
outcome criterion_7() {
  outcome o;
  rng_t rng(1007);
  tally same{"identical status, witness, steps and every f_i"};
  for (std::size_t t = 0; t < 100; ++t) {
    const auto n = gen::uniform(rng, 1, 10);
    const auto f = gen::random_cnf(rng, n, gen::uniform(rng, 1, 25));
    solve_config cfg;
    cfg.trace = true;
    cfg.enumerate_all = true;
    manager m1(n), m8(n);
    const auto r1 = solve(m1, f, cfg);
    cfg.threads = 8;
    const auto r8 = solve(m8, f, cfg);
    bool ok = r1.status == r8.status && r1.witness == r8.witness && r1.steps == r8.steps &&
              r1.all_solutions == r8.all_solutions && r1.chain.size() == r8.chain.size();
    for (std::size_t i = 0; ok && i < r1.chain.size(); ++i)
      ok = tt_of_func(r1.chain[i].f) == tt_of_func(r8.chain[i].f) &&
           r1.chain[i].f.node_count() == r8.chain[i].f.node_count();
    same.record(ok, [&] { return emit_dimacs(f); });
  }
  report(o, {same});
  return o;
}

struct criterion {
  const char *title;
  double limit_seconds;
  outcome (*run)();
};

const criterion criteria[] = {
    {"UNSAT chain x+y, x, x.y, 0", 1.0, criterion_1},
    {"SAT example: final function equals the conjunction", 1.0, criterion_2},
    {"g.h = zeta[h,g,P] on 500 clause/CNF pairs", 60.0, criterion_3},
    {"solver agrees with the oracle on 500 random CNFs", 300.0, criterion_4},
    {"cofactor algebra on 500 random instances per law", 600.0, criterion_5},
    {"composition and zeta laws on 500 random instances", 600.0, criterion_6},
    {"threads 1 vs 8 on 100 random CNFs", 600.0, criterion_7},
};

bool run_one(std::size_t k) {
  const auto &c = criteria[k - 1];
  const auto start = std::chrono::steady_clock::now();
  auto result = c.run();
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  const bool in_time = elapsed.count() < c.limit_seconds;
  if (!in_time)
    result.detail << "took " << elapsed.count() << " s, limit " << c.limit_seconds << " s";
  const bool pass = result.pass && in_time;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.3f s", elapsed.count());
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << 'C' << k << ' ' << c.title << " (" << timing << ")";
  if (const auto d = result.detail.str(); !d.empty())
    std::cout << ": " << d;
  std::cout << std::endl;
  return pass;
}

} // namespace

int main(int argc, char **argv) {
  constexpr std::size_t count = std::size(criteria);
  if (argc > 2) {
    std::cerr << "usage: " << argv[0] << " [criterion 1.." << count << "]\n";
    return 2;
  }
  bool all_pass = true;
  if (argc == 2) {
    const auto k = std::strtoul(argv[1], nullptr, 10);
    if (k < 1 || k > count) {
      std::cerr << "unknown criterion '" << argv[1] << "'\n";
      return 2;
    }
    all_pass = run_one(k);
  } else {
    for (std::size_t k = 1; k <= count; ++k)
      all_pass = run_one(k) && all_pass;
  }
  return all_pass ? 0 : 1;
}
