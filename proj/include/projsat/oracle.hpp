/// @file  oracle.hpp
/// @brief Brute-force truth tables used as ground truth
///
/// `tt_of_formula` evaluates clauses directly on every point and shares no
/// evaluation code with the decision-diagram engine, so agreement between the
/// two is evidence rather than tautology. `tt_of_func` and `func_of_tt` are the
/// only bridges to `bool_func`.

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "bdd.hpp"
#include "cnf.hpp"

namespace projsat {

/// Dense truth table over `n ≤ 24` variables. Bit `i` holds the value at the
/// point whose binary expansion is `i`, variable 0 being the most significant
/// bit; index order is therefore lexicographic point order.
class truth_table {
  std::size_t _n = 0;
  std::vector<std::uint64_t> _words;

public:
  static constexpr std::size_t max_vars = 24;

  truth_table() = default;
  explicit truth_table(std::size_t n, bool fill = false) : _n(n) {
    if (n > max_vars)
      throw error("truth_table: " + std::to_string(n) + " variables exceed the limit of " +
                  std::to_string(max_vars));
    _words.assign(((std::size_t{1} << n) + 63) / 64, fill ? ~std::uint64_t{0} : 0);
    mask_tail();
  }

  [[nodiscard]] std::size_t var_count() const noexcept { return _n; }
  [[nodiscard]] std::size_t size() const noexcept { return std::size_t{1} << _n; }

  [[nodiscard]] bool get(std::size_t i) const noexcept { return (_words[i / 64] >> (i % 64)) & 1; }
  void set(std::size_t i, bool v) noexcept {
    const auto bit = std::uint64_t{1} << (i % 64);
    if (v)
      _words[i / 64] |= bit;
    else
      _words[i / 64] &= ~bit;
  }

  [[nodiscard]] std::size_t popcount() const noexcept {
    std::size_t c = 0;
    for (const auto w : _words)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  [[nodiscard]] point point_at(std::size_t index) const {
    point p(_n);
    for (std::size_t v = 0; v < _n; ++v)
      p[v] = (index >> (_n - 1 - v)) & 1;
    return p;
  }

  [[nodiscard]] std::size_t index_of(const point &p) const {
    if (p.size() != _n)
      throw error("truth_table: point length mismatch");
    std::size_t i = 0;
    for (std::size_t v = 0; v < _n; ++v)
      i = (i << 1) | static_cast<std::size_t>(p[v]);
    return i;
  }

  [[nodiscard]] std::vector<point> on_points() const {
    std::vector<point> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (get(i))
        out.push_back(point_at(i));
    return out;
  }

  friend bool operator==(const truth_table &, const truth_table &) = default;

  friend truth_table operator&(truth_table a, const truth_table &b) { return a.combine(b, [](auto x, auto y) { return x & y; }); }
  friend truth_table operator|(truth_table a, const truth_table &b) { return a.combine(b, [](auto x, auto y) { return x | y; }); }
  friend truth_table operator^(truth_table a, const truth_table &b) { return a.combine(b, [](auto x, auto y) { return x ^ y; }); }
  truth_table operator~() const {
    truth_table r = *this;
    for (auto &w : r._words)
      w = ~w;
    r.mask_tail();
    return r;
  }

private:
  void mask_tail() noexcept {
    if (size() < 64 && !_words.empty())
      _words[0] &= (std::uint64_t{1} << size()) - 1;
  }

  template <typename Op> truth_table &combine(const truth_table &b, Op op) {
    if (b._n != _n)
      throw error("truth_table: variable count mismatch");
    for (std::size_t i = 0; i < _words.size(); ++i)
      _words[i] = op(_words[i], b._words[i]);
    return *this;
  }
};

/// Throws on size mismatch, unlike `operator==`
inline bool tt_equal(const truth_table &a, const truth_table &b) {
  if (a.var_count() != b.var_count())
    throw error("tt_equal: variable count mismatch");
  return a == b;
}

/// Direct clause-by-clause evaluation at every point
inline truth_table tt_of_formula(const cnf_formula &f) {
  truth_table t(f.var_count);
  const auto n = f.var_count;
  for (std::size_t i = 0; i < t.size(); ++i) {
    bool all = true;
    for (const auto &c : f.clauses) {
      bool any = false;
      for (const auto &l : c.literals) {
        const bool value = (i >> (n - 1 - l.var.index)) & 1;
        if (value != l.negated) {
          any = true;
          break;
        }
      }
      if (!any) {
        all = false;
        break;
      }
    }
    t.set(i, all);
  }
  return t;
}

/// Does `p` satisfy every clause of `f`? Independent of the engine.
inline bool satisfies(const cnf_formula &f, const point &p) {
  if (p.size() != f.var_count)
    return false;
  for (const auto &c : f.clauses) {
    bool any = false;
    for (const auto &l : c.literals)
      any = any || (p[l.var.index] != l.negated);
    if (!any)
      return false;
  }
  return true;
}

inline truth_table tt_of_func(const bool_func &f) {
  truth_table t(f.owner().var_count());
  for (std::size_t i = 0; i < t.size(); ++i)
    t.set(i, f.eval(t.point_at(i)));
  return t;
}

/// Shannon construction in variable-index order, independent of the
/// manager's level order.
inline bool_func func_of_tt(manager &mgr, const truth_table &t) {
  if (t.var_count() != mgr.var_count())
    throw error("func_of_tt: variable count mismatch");
  const auto n = t.var_count();
  auto build = [&](auto &self, std::size_t v, std::size_t base) -> bool_func {
    if (v == n)
      return mgr.constant(t.get(base));
    const auto lo = self(self, v + 1, base);
    const auto hi = self(self, v + 1, base | (std::size_t{1} << (n - 1 - v)));
    if (lo == hi)
      return lo;
    return ite(mgr.var(v), hi, lo);
  };
  return build(build, 0, 0);
}

} // namespace projsat
