/// @file  report.hpp
/// @brief JSON view of a `solve_result`
///
/// Points are written as DIMACS literal lists (`[1, -2, 3]`); off-points list
/// only the literals of the target's support.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "solver.hpp"

namespace projsat {

struct step_summary {
  std::size_t factor = 0; ///< 1-based clause number in the input file
  std::size_t size = 0;
  std::size_t remaining_before = 0;
  std::size_t remaining_after = 0;
  std::optional<std::vector<int>> off_point;

  friend bool operator==(const step_summary &, const step_summary &) = default;
};

struct result_summary {
  std::string status;
  std::optional<std::vector<int>> witness;
  std::optional<std::vector<std::vector<int>>> solutions;
  std::vector<step_summary> steps;
  std::size_t dropped_tautologies = 0;
  std::optional<bool> oracle_agrees;

  friend bool operator==(const result_summary &, const result_summary &) = default;
};

inline std::vector<int> to_literals(const point &p) {
  std::vector<int> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    out.push_back(p[i] ? k : -k);
  }
  return out;
}

inline std::vector<int> to_literals(const partial_point &p) {
  std::vector<int> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i])
      continue;
    const int k = static_cast<int>(i) + 1;
    out.push_back(*p[i] ? k : -k);
  }
  return out;
}

inline result_summary summarize(const solve_result &r) {
  result_summary s;
  s.status = r.status == sat_status::sat ? "SAT" : "UNSAT";
  if (r.witness)
    s.witness = to_literals(*r.witness);
  if (r.all_solutions) {
    s.solutions.emplace();
    for (const auto &p : *r.all_solutions)
      s.solutions->push_back(to_literals(p));
  }
  for (const auto &st : r.steps) {
    step_summary out{st.factor + 1, st.size, st.remaining_before, st.remaining_after, std::nullopt};
    if (st.off_point)
      out.off_point = to_literals(*st.off_point);
    s.steps.push_back(std::move(out));
  }
  s.dropped_tautologies = r.dropped_tautologies;
  s.oracle_agrees = r.oracle_agrees;
  return s;
}

namespace detail {

template <typename T> void put_optional(nlohmann::json &j, const char *key, const std::optional<T> &v) {
  if (v)
    j[key] = *v;
}

template <typename T> void get_optional(const nlohmann::json &j, const char *key, std::optional<T> &v) {
  if (auto it = j.find(key); it != j.end() && !it->is_null())
    v = it->template get<T>();
  else
    v.reset();
}

} // namespace detail

inline void to_json(nlohmann::json &j, const step_summary &s) {
  j = nlohmann::json{{"factor", s.factor},
                     {"size", s.size},
                     {"remaining_before", s.remaining_before},
                     {"remaining_after", s.remaining_after}};
  detail::put_optional(j, "off_point", s.off_point);
}

inline void from_json(const nlohmann::json &j, step_summary &s) {
  j.at("factor").get_to(s.factor);
  j.at("size").get_to(s.size);
  j.at("remaining_before").get_to(s.remaining_before);
  j.at("remaining_after").get_to(s.remaining_after);
  detail::get_optional(j, "off_point", s.off_point);
}

inline void to_json(nlohmann::json &j, const result_summary &s) {
  j = nlohmann::json{{"status", s.status}, {"steps", s.steps}, {"dropped_tautologies", s.dropped_tautologies}};
  detail::put_optional(j, "witness", s.witness);
  detail::put_optional(j, "solutions", s.solutions);
  detail::put_optional(j, "oracle_agrees", s.oracle_agrees);
}

inline void from_json(const nlohmann::json &j, result_summary &s) {
  j.at("status").get_to(s.status);
  if (s.status != "SAT" && s.status != "UNSAT")
    throw error("result JSON: status must be SAT or UNSAT");
  j.at("steps").get_to(s.steps);
  j.at("dropped_tautologies").get_to(s.dropped_tautologies);
  detail::get_optional(j, "witness", s.witness);
  detail::get_optional(j, "solutions", s.solutions);
  detail::get_optional(j, "oracle_agrees", s.oracle_agrees);
}

} // namespace projsat
