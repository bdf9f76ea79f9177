/// @file  bdd.hpp
/// @brief Reduced ordered binary decision diagrams (no complement edges)
///
/// Every Boolean function over the manager's variable universe has exactly
/// one node, so two `bool_func` handles compare equal iff the functions are
/// pointwise equal. All algebraic identities in the rest of the library are
/// checked with plain `==`.

#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "error.hpp"

namespace projsat {

/// Index of a variable in the manager's universe (0-based)
struct var_id {
  std::uint32_t index = 0;

  constexpr var_id() noexcept = default;
  constexpr explicit var_id(std::uint32_t i) noexcept : index(i) {}

  friend constexpr auto operator<=>(var_id, var_id) noexcept = default;
};

/// A point of the Boolean cube; entry `i` is the value of variable `i`
using point = std::vector<bool>;

class manager;

/// Handle to a canonical Boolean function owned by a `manager`
///
/// Handles are cheap to copy and immutable. The owning manager must outlive
/// every handle it produced.
class bool_func {
  manager *_mgr = nullptr;
  std::uint32_t _id = 0;

  friend class manager;
  friend bool_func ite(const bool_func &, const bool_func &, const bool_func &);
  bool_func(manager *mgr, std::uint32_t id) noexcept : _mgr(mgr), _id(id) {}

public:
  /// Invalid handle
  bool_func() noexcept = default;

  [[nodiscard]] bool valid() const noexcept { return _mgr != nullptr; }
  [[nodiscard]] manager &owner() const;
  [[nodiscard]] std::uint32_t node_id() const noexcept { return _id; }

  [[nodiscard]] bool is_zero() const noexcept { return valid() && _id == 0; }
  [[nodiscard]] bool is_one() const noexcept { return valid() && _id == 1; }
  [[nodiscard]] bool is_const() const noexcept { return valid() && _id <= 1; }

  friend bool operator==(const bool_func &, const bool_func &) noexcept = default;

  friend bool_func operator&(const bool_func &f, const bool_func &g);
  friend bool_func operator|(const bool_func &f, const bool_func &g);
  friend bool_func operator^(const bool_func &f, const bool_func &g);
  bool_func operator~() const;

  bool_func &operator&=(const bool_func &g) { return *this = *this & g; }
  bool_func &operator|=(const bool_func &g) { return *this = *this | g; }
  bool_func &operator^=(const bool_func &g) { return *this = *this ^ g; }

  /// f ≤ g, i.e. f implies g pointwise
  [[nodiscard]] bool implies(const bool_func &g) const;

  /// x ↦ f(subst[0](x), …, subst[n-1](x)); one entry per variable
  [[nodiscard]] bool_func compose(std::span<const bool_func> subst) const;

  [[nodiscard]] bool eval(const point &p) const;

  [[nodiscard]] bool is_sat() const noexcept { return valid() && _id != 0; }

  /// Lexicographically smallest point with f = 1 (under the variable order)
  [[nodiscard]] std::optional<point> any_on_point() const;
  /// Lexicographically smallest point with f = 0 (under the variable order)
  [[nodiscard]] std::optional<point> any_off_point() const;

  /// Variables f depends on, ascending by index
  [[nodiscard]] std::vector<var_id> support() const;

  /// Number of points in the ON-set (exact up to 2^53)
  [[nodiscard]] double count_on_set() const;

  /// All points with f = 1, sorted lexicographically by variable index.
  /// Throws `cap_exceeded` when the ON-set is larger than the manager's cap.
  [[nodiscard]] std::vector<point> enumerate_on_set() const;

  /// Number of inner decision nodes
  [[nodiscard]] std::size_t node_count() const;

  /// Disjoint sum-of-products rendering, e.g. `x1'.x2 + x3`
  [[nodiscard]] std::string to_string(std::size_t max_cubes = 64) const;
};

bool_func ite(const bool_func &f, const bool_func &g, const bool_func &h);

/// Owns the node store of a family of Boolean functions over a fixed number
/// of variables.
///
/// Every public operation takes an internal lock, so handles may be used from
/// any number of threads; results equal those of some sequential interleaving.
class manager {
public:
  static constexpr std::uint64_t default_enumeration_cap = std::uint64_t{1} << 24;

  /// Variables ordered by index
  explicit manager(std::size_t var_count) : manager(var_count, identity_order(var_count)) {}

  /// `order[level]` is the variable tested at that level
  manager(std::size_t var_count, std::vector<var_id> order)
      : _var_count(static_cast<std::uint32_t>(var_count)), _order(std::move(order)) {
    if (var_count >= std::numeric_limits<std::uint32_t>::max())
      throw error("manager: too many variables");
    if (_order.size() != var_count)
      throw error("manager: variable order has wrong length");
    _level.assign(var_count, unset_level);
    for (std::size_t l = 0; l < _order.size(); ++l) {
      const auto v = _order[l].index;
      if (v >= var_count || _level[v] != unset_level)
        throw error("manager: variable order is not a permutation");
      _level[v] = static_cast<std::uint32_t>(l);
    }
    _nodes.push_back({_var_count, 0, 0}); // 0-terminal
    _nodes.push_back({_var_count, 1, 1}); // 1-terminal
    _names.reserve(var_count);
    for (std::size_t i = 0; i < var_count; ++i)
      _names.push_back("x" + std::to_string(i + 1));
  }

  manager(const manager &) = delete;
  manager &operator=(const manager &) = delete;

  [[nodiscard]] std::size_t var_count() const noexcept { return _var_count; }
  [[nodiscard]] const std::vector<var_id> &order() const noexcept { return _order; }
  [[nodiscard]] std::size_t level_of(var_id v) const { return _level.at(v.index); }

  [[nodiscard]] bool_func constant(bool value) noexcept { return {this, value ? 1u : 0u}; }
  [[nodiscard]] bool_func zero() noexcept { return constant(false); }
  [[nodiscard]] bool_func one() noexcept { return constant(true); }

  [[nodiscard]] bool_func var(var_id v) {
    if (v.index >= _var_count)
      throw error("variable index " + std::to_string(v.index) + " out of range");
    std::lock_guard lock(_mutex);
    return {this, make_node(_level[v.index], 0, 1)};
  }
  [[nodiscard]] bool_func var(std::size_t index) { return var(var_id(static_cast<std::uint32_t>(index))); }

  /// `[x_0, …, x_{n-1}]`, the identity substitution
  [[nodiscard]] std::vector<bool_func> vars() {
    std::vector<bool_func> out;
    out.reserve(_var_count);
    for (std::uint32_t i = 0; i < _var_count; ++i)
      out.push_back(var(var_id(i)));
    return out;
  }

  void set_var_names(std::vector<std::string> names) {
    if (names.size() != _var_count)
      throw error("set_var_names: expected " + std::to_string(_var_count) + " names");
    _names = std::move(names);
  }
  [[nodiscard]] const std::string &var_name(var_id v) const { return _names.at(v.index); }
  [[nodiscard]] std::optional<var_id> find_var(std::string_view name) const {
    for (std::uint32_t i = 0; i < _var_count; ++i)
      if (_names[i] == name)
        return var_id(i);
    return std::nullopt;
  }

  [[nodiscard]] std::uint64_t enumeration_cap() const noexcept { return _enum_cap; }
  void set_enumeration_cap(std::uint64_t cap) noexcept { _enum_cap = cap; }

  /// Total nodes ever created, terminals included
  [[nodiscard]] std::size_t allocated_nodes() const {
    std::lock_guard lock(_mutex);
    return _nodes.size();
  }

private:
  friend class bool_func;
  friend bool_func ite(const bool_func &, const bool_func &, const bool_func &);

  static constexpr std::uint32_t unset_level = std::numeric_limits<std::uint32_t>::max();

  struct node {
    std::uint32_t level;
    std::uint32_t low;
    std::uint32_t high;
    friend bool operator==(const node &, const node &) noexcept = default;
  };

  struct triple_hash {
    std::size_t operator()(const node &k) const noexcept {
      std::uint64_t h = k.level;
      h = h * 0x9E3779B97F4A7C15ULL ^ k.low;
      h = h * 0x9E3779B97F4A7C15ULL ^ k.high;
      return static_cast<std::size_t>(h ^ (h >> 29));
    }
  };

  static std::vector<var_id> identity_order(std::size_t n) {
    std::vector<var_id> o(n);
    for (std::size_t i = 0; i < n; ++i)
      o[i] = var_id(static_cast<std::uint32_t>(i));
    return o;
  }

  void check_owner(const bool_func &f) const {
    if (f._mgr != this)
      throw error(f._mgr == nullptr ? "invalid bool_func handle" : "bool_func belongs to a different manager");
  }

  std::uint32_t make_node(std::uint32_t level, std::uint32_t low, std::uint32_t high) {
    if (low == high)
      return low;
    const node key{level, low, high};
    if (auto it = _unique.find(key); it != _unique.end())
      return it->second;
    const auto id = static_cast<std::uint32_t>(_nodes.size());
    _nodes.push_back(key);
    _unique.emplace(key, id);
    return id;
  }

  std::uint32_t level(std::uint32_t id) const noexcept { return _nodes[id].level; }

  std::pair<std::uint32_t, std::uint32_t> branches(std::uint32_t id, std::uint32_t lvl) const noexcept {
    const node &n = _nodes[id];
    if (n.level != lvl)
      return {id, id};
    return {n.low, n.high};
  }

  std::uint32_t ite_rec(std::uint32_t f, std::uint32_t g, std::uint32_t h) {
    if (f == 1)
      return g;
    if (f == 0)
      return h;
    if (g == h)
      return g;
    if (g == 1 && h == 0)
      return f;
    if (g == f)
      g = 1;
    if (h == f)
      h = 0;
    if (g == h)
      return g;
    const node key{f, g, h};
    if (auto it = _ite_cache.find(key); it != _ite_cache.end())
      return it->second;
    const auto top = std::min({level(f), level(g), level(h)});
    const auto [f0, f1] = branches(f, top);
    const auto [g0, g1] = branches(g, top);
    const auto [h0, h1] = branches(h, top);
    const auto hi = ite_rec(f1, g1, h1);
    const auto lo = ite_rec(f0, g0, h0);
    const auto r = make_node(top, lo, hi);
    _ite_cache.emplace(key, r);
    return r;
  }

  std::uint32_t compose_rec(std::uint32_t f, std::span<const std::uint32_t> subst,
                            std::unordered_map<std::uint32_t, std::uint32_t> &memo) {
    if (f <= 1)
      return f;
    if (auto it = memo.find(f); it != memo.end())
      return it->second;
    const node n = _nodes[f];
    const auto hi = compose_rec(n.high, subst, memo);
    const auto lo = compose_rec(n.low, subst, memo);
    const auto r = ite_rec(subst[_order[n.level].index], hi, lo);
    memo.emplace(f, r);
    return r;
  }

  std::optional<point> extreme_point(std::uint32_t f, std::uint32_t avoid) const {
    if (f == avoid)
      return std::nullopt;
    point p(_var_count, false);
    // In a reduced diagram every node other than the `avoid` terminal reaches
    // the other terminal, so greedily taking the low branch is lexicographic.
    while (f > 1) {
      const node &n = _nodes[f];
      if (n.low != avoid) {
        f = n.low;
      } else {
        p[_order[n.level].index] = true;
        f = n.high;
      }
    }
    return p;
  }

  double density(std::uint32_t f, std::unordered_map<std::uint32_t, double> &memo) const {
    if (f <= 1)
      return f;
    if (auto it = memo.find(f); it != memo.end())
      return it->second;
    const node &n = _nodes[f];
    const double d = 0.5 * (density(n.low, memo) + density(n.high, memo));
    memo.emplace(f, d);
    return d;
  }

  void enumerate_rec(std::uint32_t f, std::uint32_t lvl, point &cur, std::vector<point> &out) const {
    if (f == 0)
      return;
    if (lvl == _var_count) {
      out.push_back(cur);
      return;
    }
    const auto v = _order[lvl].index;
    const auto [lo, hi] = branches(f, lvl);
    cur[v] = false;
    enumerate_rec(lo, lvl + 1, cur, out);
    cur[v] = true;
    enumerate_rec(hi, lvl + 1, cur, out);
    cur[v] = false;
  }

  template <typename Visit> void visit_inner(std::uint32_t root, Visit &&visit) const {
    std::vector<std::uint32_t> stack{root};
    std::unordered_set<std::uint32_t> seen;
    while (!stack.empty()) {
      const auto id = stack.back();
      stack.pop_back();
      if (id <= 1 || !seen.insert(id).second)
        continue;
      visit(_nodes[id]);
      stack.push_back(_nodes[id].low);
      stack.push_back(_nodes[id].high);
    }
  }

  void cubes_rec(std::uint32_t f, std::string &prefix, std::vector<std::string> &out, std::size_t limit,
                 std::size_t &total) const {
    if (f == 0)
      return;
    if (f == 1) {
      if (out.size() < limit)
        out.push_back(prefix.empty() ? "1" : prefix);
      ++total;
      return;
    }
    const node &n = _nodes[f];
    const auto &name = _names[_order[n.level].index];
    const auto keep = prefix.size();
    for (const bool positive : {false, true}) {
      if (!prefix.empty())
        prefix += '.';
      prefix += name;
      if (!positive)
        prefix += '\'';
      cubes_rec(positive ? n.high : n.low, prefix, out, limit, total);
      prefix.resize(keep);
    }
  }

  std::uint32_t _var_count;
  std::vector<var_id> _order;
  std::vector<std::uint32_t> _level;
  std::vector<std::string> _names;
  std::uint64_t _enum_cap = default_enumeration_cap;

  mutable std::mutex _mutex;
  std::vector<node> _nodes;
  std::unordered_map<node, std::uint32_t, triple_hash> _unique;
  std::unordered_map<node, std::uint32_t, triple_hash> _ite_cache;
};

// ---------------------------------------------------------------------------
// bool_func out-of-line members

inline manager &bool_func::owner() const {
  if (_mgr == nullptr)
    throw error("invalid bool_func handle");
  return *_mgr;
}

inline bool_func ite(const bool_func &f, const bool_func &g, const bool_func &h) {
  manager &m = f.owner();
  m.check_owner(g);
  m.check_owner(h);
  std::lock_guard lock(m._mutex);
  return {&m, m.ite_rec(f._id, g._id, h._id)};
}

inline bool_func operator&(const bool_func &f, const bool_func &g) { return ite(f, g, f.owner().zero()); }
inline bool_func operator|(const bool_func &f, const bool_func &g) { return ite(f, f.owner().one(), g); }
inline bool_func operator^(const bool_func &f, const bool_func &g) { return ite(f, ~g, g); }
inline bool_func bool_func::operator~() const { return ite(*this, owner().zero(), owner().one()); }

inline bool bool_func::implies(const bool_func &g) const { return (*this & ~g).is_zero(); }

inline bool_func bool_func::compose(std::span<const bool_func> subst) const {
  manager &m = owner();
  if (subst.size() != m.var_count())
    throw error("compose: substitution has " + std::to_string(subst.size()) + " entries, expected " +
                std::to_string(m.var_count()));
  std::vector<std::uint32_t> ids;
  ids.reserve(subst.size());
  for (const auto &s : subst) {
    m.check_owner(s);
    ids.push_back(s._id);
  }
  std::lock_guard lock(m._mutex);
  std::unordered_map<std::uint32_t, std::uint32_t> memo;
  return {&m, m.compose_rec(_id, ids, memo)};
}

inline bool bool_func::eval(const point &p) const {
  const manager &m = owner();
  if (p.size() != m.var_count())
    throw error("eval: point has " + std::to_string(p.size()) + " entries, expected " +
                std::to_string(m.var_count()));
  std::lock_guard lock(m._mutex);
  auto f = _id;
  while (f > 1) {
    const auto &n = m._nodes[f];
    f = p[m._order[n.level].index] ? n.high : n.low;
  }
  return f == 1;
}

inline std::optional<point> bool_func::any_on_point() const {
  const manager &m = owner();
  std::lock_guard lock(m._mutex);
  return m.extreme_point(_id, 0);
}

inline std::optional<point> bool_func::any_off_point() const {
  const manager &m = owner();
  std::lock_guard lock(m._mutex);
  return m.extreme_point(_id, 1);
}

inline std::vector<var_id> bool_func::support() const {
  const manager &m = owner();
  std::lock_guard lock(m._mutex);
  std::vector<bool> used(m.var_count(), false);
  m.visit_inner(_id, [&](const auto &n) { used[m._order[n.level].index] = true; });
  std::vector<var_id> out;
  for (std::uint32_t i = 0; i < used.size(); ++i)
    if (used[i])
      out.emplace_back(i);
  return out;
}

inline double bool_func::count_on_set() const {
  const manager &m = owner();
  std::lock_guard lock(m._mutex);
  std::unordered_map<std::uint32_t, double> memo;
  return std::ldexp(m.density(_id, memo), static_cast<int>(m.var_count()));
}

inline std::vector<point> bool_func::enumerate_on_set() const {
  const double count = count_on_set();
  const manager &m = owner();
  if (count > static_cast<double>(m.enumeration_cap()))
    throw cap_exceeded("enumeration: " + std::to_string(static_cast<long double>(count)) +
                       " points exceed the cap of " + std::to_string(m.enumeration_cap()));
  std::vector<point> out;
  out.reserve(static_cast<std::size_t>(count));
  {
    std::lock_guard lock(m._mutex);
    point cur(m.var_count(), false);
    m.enumerate_rec(_id, 0, cur, out);
  }
  if (!std::is_sorted(out.begin(), out.end()))
    std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t bool_func::node_count() const {
  const manager &m = owner();
  std::lock_guard lock(m._mutex);
  std::size_t count = 0;
  m.visit_inner(_id, [&](const auto &) { ++count; });
  return count;
}

inline std::string bool_func::to_string(std::size_t max_cubes) const {
  const manager &m = owner();
  if (_id <= 1)
    return _id == 1 ? "1" : "0";
  std::lock_guard lock(m._mutex);
  std::vector<std::string> cubes;
  std::string prefix;
  std::size_t total = 0;
  m.cubes_rec(_id, prefix, cubes, max_cubes, total);
  std::string out;
  for (const auto &c : cubes) {
    if (!out.empty())
      out += " + ";
    out += c;
  }
  if (total > cubes.size())
    out += " + ... (" + std::to_string(total - cubes.size()) + " more cubes)";
  return out;
}

} // namespace projsat

template <> struct std::hash<projsat::bool_func> {
  std::size_t operator()(const projsat::bool_func &f) const noexcept {
    return std::hash<std::uint32_t>{}(f.node_id()) ^ std::hash<const void *>{}(f.valid() ? &f.owner() : nullptr);
  }
};
