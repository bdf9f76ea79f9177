/// @file  cnf.hpp
/// @brief DIMACS CNF reading/writing and clause-to-function conversion

#pragma once

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "bdd.hpp"

namespace projsat {

struct literal {
  var_id var;
  bool negated = false;

  /// DIMACS encoding: +k for x_k, -k for ¬x_k (k is 1-based)
  [[nodiscard]] int to_dimacs() const noexcept {
    const int k = static_cast<int>(var.index) + 1;
    return negated ? -k : k;
  }
  [[nodiscard]] static literal from_dimacs(int k) noexcept {
    return {var_id(static_cast<std::uint32_t>(std::abs(k) - 1)), k < 0};
  }

  friend bool operator==(const literal &, const literal &) noexcept = default;
};

/// Disjunction of literals. Duplicates are removed on construction through
/// `add`; a clause containing both polarities of a variable is tautological.
struct clause {
  std::vector<literal> literals;
  bool tautological = false;

  /// Append `lit` unless already present; updates the tautology flag
  void add(literal lit) {
    for (const auto &l : literals) {
      if (l.var == lit.var) {
        if (l.negated == lit.negated)
          return;
        tautological = true;
      }
    }
    literals.push_back(lit);
  }

  [[nodiscard]] bool empty() const noexcept { return literals.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return literals.size(); }

  friend bool operator==(const clause &, const clause &) noexcept = default;
};

struct cnf_formula {
  std::size_t var_count = 0;
  std::vector<clause> clauses;
  /// Comment lines without the leading `c`
  std::vector<std::string> comments;
  /// Clause count announced by the `p cnf` header
  std::size_t declared_clauses = 0;
  std::vector<std::string> warnings;

  /// Structural equality; comments, warnings and the header count are metadata
  [[nodiscard]] bool same_clauses(const cnf_formula &other) const {
    return var_count == other.var_count && clauses == other.clauses;
  }
};

/// Parse DIMACS CNF. Throws `parse_error` carrying the offending line.
inline cnf_formula parse_dimacs(std::istream &in) {
  cnf_formula out;
  bool have_header = false;
  bool open_clause = false;
  clause current;
  std::size_t line_no = 0;
  std::size_t open_line = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    std::string_view rest(line);
    while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t'))
      rest.remove_prefix(1);
    if (rest.empty())
      continue;
    if (rest.front() == 'c') {
      rest.remove_prefix(1);
      if (!rest.empty() && rest.front() == ' ')
        rest.remove_prefix(1);
      out.comments.emplace_back(rest);
      continue;
    }
    if (rest.front() == 'p') {
      if (have_header)
        throw parse_error(line_no, "duplicate 'p' header");
      std::istringstream hdr{std::string(rest)};
      std::string p, fmt;
      long long n = -1, m = -1;
      std::string extra;
      if (!(hdr >> p >> fmt >> n >> m) || p != "p" || fmt != "cnf" || n < 0 || m < 0 || (hdr >> extra))
        throw parse_error(line_no, "malformed header, expected 'p cnf <vars> <clauses>'");
      out.var_count = static_cast<std::size_t>(n);
      out.declared_clauses = static_cast<std::size_t>(m);
      have_header = true;
      continue;
    }
    if (!have_header)
      throw parse_error(line_no, "clause data before 'p cnf' header");

    while (!rest.empty()) {
      while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front())))
        rest.remove_prefix(1);
      if (rest.empty())
        break;
      std::size_t len = 0;
      while (len < rest.size() && !std::isspace(static_cast<unsigned char>(rest[len])))
        ++len;
      const auto token = rest.substr(0, len);
      rest.remove_prefix(len);
      long long value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw parse_error(line_no, "non-integer token '" + std::string(token) + "'");
      if (value == 0) {
        out.clauses.push_back(std::move(current));
        current = {};
        open_clause = false;
        continue;
      }
      const auto k = value < 0 ? -value : value;
      if (static_cast<unsigned long long>(k) > out.var_count)
        throw parse_error(line_no, "literal " + std::string(token) + " out of range (" +
                                       std::to_string(out.var_count) + " variables)");
      if (!open_clause)
        open_line = line_no;
      open_clause = true;
      current.add(literal::from_dimacs(static_cast<int>(value)));
    }
  }

  if (!have_header)
    throw parse_error(line_no, "missing 'p cnf' header");
  if (open_clause)
    throw parse_error(open_line, "clause not terminated by 0 at end of input");
  if (out.clauses.size() != out.declared_clauses)
    out.warnings.push_back("header declares " + std::to_string(out.declared_clauses) + " clauses, found " +
                           std::to_string(out.clauses.size()));
  return out;
}

inline cnf_formula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

inline void write_dimacs(std::ostream &out, const cnf_formula &f) {
  for (const auto &c : f.comments)
    out << "c " << c << '\n';
  out << "p cnf " << f.var_count << ' ' << f.clauses.size() << '\n';
  for (const auto &c : f.clauses) {
    for (const auto &l : c.literals)
      out << l.to_dimacs() << ' ';
    out << "0\n";
  }
}

inline std::string emit_dimacs(const cnf_formula &f) {
  std::ostringstream out;
  write_dimacs(out, f);
  return out.str();
}

inline bool_func literal_to_func(const literal &l, manager &mgr) {
  auto x = mgr.var(l.var);
  return l.negated ? ~x : x;
}

/// Disjunction of the clause's literals; the empty clause is constant 0
inline bool_func clause_to_func(const clause &c, manager &mgr) {
  auto r = mgr.zero();
  for (const auto &l : c.literals)
    r |= literal_to_func(l, mgr);
  return r;
}

/// Conjunction of every clause. The decomposition solver never builds this;
/// it exists for oracle cross-checks.
inline bool_func formula_to_func(const cnf_formula &f, manager &mgr) {
  if (mgr.var_count() < f.var_count)
    throw error("formula_to_func: manager has fewer variables than the formula");
  auto r = mgr.one();
  for (const auto &c : f.clauses)
    r &= clause_to_func(c, mgr);
  return r;
}

} // namespace projsat
