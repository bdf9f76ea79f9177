/// @file  solver.hpp
/// @brief Projective cofactors and the chained decomposition solver
///
/// For f = h₁·h₂·…·h_k the solver keeps one working function wⱼ per factor.
/// At step i it takes fᵢ = wᵢ, picks a projection Pᵢ that fixes the ON-set of
/// fᵢ and sends its OFF-set into the OFF-set of the next remaining factor, and
/// replaces every later wⱼ by wⱼ ∘ Pᵢ. Those replacements are independent and
/// run on worker threads. The last fᵢ has exactly the solutions of f.

#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "bdd.hpp"
#include "cnf.hpp"
#include "oracle.hpp"
#include "projection.hpp"

namespace projsat {

/// ζ[h,g,P] = h ∘ P, a cofactor of h with respect to g
inline bool_func zeta(const bool_func &h, const bool_func &g, const projection &p) {
  assert(fixes_on_set(p, g));
  (void)g;
  return p.apply(h);
}

/// For P ∈ 𝒫(g,h): does ζ[h,g,P] equal g·h? (The two share their solution set.)
inline bool check_sat_preservation(const bool_func &g, const bool_func &h, const projection &p) {
  return (g & h) == zeta(h, g, p);
}

enum class factor_order {
  input,          ///< clause order of the input file
  ascending_size, ///< shortest clauses first, ties in input order
};

/// Which function each projection sends the OFF-set of fᵢ into
enum class projection_target {
  /// The first later working function wⱼ that is not constant 1. Since the
  /// product of the remaining wⱼ lies below it, the chain preserves the
  /// solution set exactly.
  reduced,
  /// The original clause h_{i+1}. Follows the plain loop literally but is
  /// unsound in general: for (a)(b')(b) it ends with f₃ = a'.
  original_clause,
};

struct solve_config {
  factor_order order = factor_order::input;
  projection_target target = projection_target::reduced;
  unsigned threads = 1;
  bool trace = false;         ///< keep every fᵢ and Pᵢ in `solve_result::chain`
  bool enumerate_all = false; ///< fill `solve_result::all_solutions`
  bool oracle_check = false;  ///< compare the final function against the plain conjunction
};

enum class sat_status { sat, unsat };

struct step_record {
  std::size_t factor = 0;           ///< index of hᵢ among the input clauses
  std::size_t size = 0;             ///< node count of fᵢ
  std::size_t remaining_before = 0; ///< total node count of the later wⱼ before reduction
  std::size_t remaining_after = 0;  ///< … and after
  std::optional<partial_point> off_point;

  friend bool operator==(const step_record &, const step_record &) = default;
};

struct chain_step {
  bool_func f;
  std::optional<projection> proj;
  step_record record;
};

struct solve_result {
  sat_status status = sat_status::unsat;
  std::optional<point> witness;
  std::optional<std::vector<point>> all_solutions;
  std::vector<step_record> steps;
  std::vector<chain_step> chain; ///< only with `solve_config::trace`
  bool_func final_function;      ///< f_k, or the zero fᵢ that stopped the run
  std::size_t dropped_tautologies = 0;
  std::optional<bool> oracle_agrees;
};

namespace detail {

template <typename Fn> void parallel_for(std::size_t begin, std::size_t end, unsigned threads, Fn &&fn) {
  if (end <= begin)
    return;
  const auto count = end - begin;
  const auto workers = static_cast<std::size_t>(std::min<std::size_t>(threads, count));
  if (workers <= 1) {
    for (auto i = begin; i < end; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> next{begin};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (auto i = next.fetch_add(1); i < end; i = next.fetch_add(1)) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
              failure = std::current_exception();
          }
        }
      });
  }
  if (failure)
    std::rethrow_exception(failure);
}

struct chain_run {
  std::vector<chain_step> steps;
  bool_func final_function;
  std::size_t dropped = 0;
};

inline std::size_t total_size(const std::vector<bool_func> &w, std::size_t from) {
  std::size_t s = 0;
  for (auto j = from; j < w.size(); ++j)
    s += w[j].node_count();
  return s;
}

inline chain_run run_chain(manager &mgr, const cnf_formula &formula, const solve_config &cfg) {
  if (cfg.threads == 0)
    throw error("solve: thread count must be positive");
  if (mgr.var_count() != formula.var_count)
    throw error("solve: manager has " + std::to_string(mgr.var_count()) + " variables, formula has " +
                std::to_string(formula.var_count));

  chain_run run;
  std::vector<std::size_t> index;
  std::vector<bool_func> w;
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    const auto &cl = formula.clauses[c];
    if (cl.tautological) {
      ++run.dropped;
      continue;
    }
    const auto h = clause_to_func(cl, mgr);
    if (h.is_zero()) {
      run.steps.push_back({h, std::nullopt, step_record{.factor = c, .off_point = std::nullopt}});
      run.final_function = h;
      return run;
    }
    index.push_back(c);
    w.push_back(h);
  }

  if (cfg.order == factor_order::ascending_size) {
    std::vector<std::size_t> perm(w.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
      perm[i] = i;
    std::stable_sort(perm.begin(), perm.end(), [&](auto a, auto b) {
      return formula.clauses[index[a]].size() < formula.clauses[index[b]].size();
    });
    std::vector<std::size_t> index2;
    std::vector<bool_func> w2;
    for (const auto p : perm) {
      index2.push_back(index[p]);
      w2.push_back(w[p]);
    }
    index = std::move(index2);
    w = std::move(w2);
  }

  const auto originals = w;
  const auto k = w.size();
  run.final_function = mgr.one();

  for (std::size_t i = 0; i < k; ++i) {
    const auto f = w[i];
    chain_step step{f, std::nullopt, step_record{.factor = index[i], .size = f.node_count(), .off_point = std::nullopt}};
    run.final_function = f;

    if (f.is_zero() || i + 1 == k) {
      run.steps.push_back(std::move(step));
      break;
    }
    if (f.is_one()) {
      // Nothing to project: ζ[w, 1, id] = w.
      run.steps.push_back(std::move(step));
      continue;
    }

    std::optional<bool_func> target;
    if (cfg.target == projection_target::original_clause) {
      target = originals[i + 1];
    } else {
      for (auto j = i + 1; j < k && !target; ++j)
        if (!w[j].is_one())
          target = w[j];
    }
    if (!target) {
      // Every later factor reduced to 1; f is the whole product.
      run.steps.push_back(std::move(step));
      break;
    }

    auto p = projection_for(f, *target);
    step.record.off_point = p.off_point;
    step.record.remaining_before = total_size(w, i + 1);
    parallel_for(i + 1, k, cfg.threads, [&](std::size_t j) { w[j] = p.apply(w[j]); });
    step.record.remaining_after = total_size(w, i + 1);
    step.proj = std::move(p);
    run.steps.push_back(std::move(step));
  }
  return run;
}

} // namespace detail

/// Every fᵢ of the decomposition chain with the projection chosen after it
inline std::vector<chain_step> solve_chain_trace(manager &mgr, const cnf_formula &formula,
                                                 const solve_config &cfg = {}) {
  return detail::run_chain(mgr, formula, cfg).steps;
}

/// Decide satisfiability of `formula` by projective decomposition.
/// `mgr` must have exactly `formula.var_count` variables.
inline solve_result solve(manager &mgr, const cnf_formula &formula, const solve_config &cfg = {}) {
  auto run = detail::run_chain(mgr, formula, cfg);
  solve_result r;
  r.final_function = run.final_function;
  r.dropped_tautologies = run.dropped;
  r.steps.reserve(run.steps.size());
  for (const auto &s : run.steps)
    r.steps.push_back(s.record);
  if (cfg.trace)
    r.chain = std::move(run.steps);

  if (r.final_function.is_sat()) {
    r.status = sat_status::sat;
    r.witness = r.final_function.any_on_point();
  }
  if (cfg.enumerate_all)
    r.all_solutions = r.final_function.enumerate_on_set();
  if (cfg.oracle_check) {
    bool agrees = formula_to_func(formula, mgr) == r.final_function;
    if (agrees && formula.var_count <= 20)
      agrees = tt_of_formula(formula) == tt_of_func(r.final_function);
    r.oracle_agrees = agrees;
  }
  return r;
}

} // namespace projsat
