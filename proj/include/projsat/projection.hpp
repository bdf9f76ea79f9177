/// @file  projection.hpp
/// @brief Projections P ∈ 𝒫(g,h): self-maps of the cube that fix the ON-set of
///        g and send its OFF-set into the OFF-set of h
///
/// A projection is stored as a substitution vector: entry i is the formula
/// that x_i is mapped to. Applying it to a function is `compose`.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bdd.hpp"

namespace projsat {

/// Off-point restricted to a support; `nullopt` marks a variable left as x_i
using partial_point = std::vector<std::optional<bool>>;

struct projection {
  std::vector<bool_func> subst;
  bool_func source; ///< g, whose ON-set is fixed
  bool_func target; ///< h, whose OFF-set receives g's OFF-set
  /// The point of h_OFF the OFF-set of g is sent to; absent for compositions
  std::optional<partial_point> off_point;

  /// h ∘ P
  [[nodiscard]] bool_func apply(const bool_func &h) const { return h.compose(subst); }

  /// Image of a single point
  [[nodiscard]] point map(const point &x) const {
    point y(subst.size());
    for (std::size_t i = 0; i < subst.size(); ++i)
      y[i] = subst[i].eval(x);
    return y;
  }

  [[nodiscard]] bool is_identity() const {
    for (std::size_t i = 0; i < subst.size(); ++i)
      if (subst[i] != subst[i].owner().var(i))
        return false;
    return true;
  }

  /// One `x_i -> <formula>` line per variable, in variable-index order
  [[nodiscard]] std::vector<std::string> dump(std::size_t max_cubes = 16) const {
    std::vector<std::string> out;
    out.reserve(subst.size());
    for (std::size_t i = 0; i < subst.size(); ++i) {
      const auto &m = subst[i].owner();
      out.push_back(m.var_name(var_id(static_cast<std::uint32_t>(i))) + " -> " + subst[i].to_string(max_cubes));
    }
    return out;
  }
};

inline projection identity_projection(manager &mgr) { return {mgr.vars(), mgr.one(), mgr.one(), std::nullopt}; }

/// Does P map every point of g_ON to itself? Checks g·(Pᵢ ⊕ xᵢ) = 0 for all i.
inline bool fixes_on_set(const projection &p, const bool_func &g) {
  auto &m = g.owner();
  if (p.subst.size() != m.var_count())
    return false;
  for (std::size_t i = 0; i < p.subst.size(); ++i)
    if (!(g & (p.subst[i] ^ m.var(i))).is_zero())
      return false;
  return true;
}

/// P ∈ 𝒫(g,h): fixes g_ON and satisfies g'·(h ∘ P) = 0
inline bool verify_projection(const projection &p, const bool_func &g, const bool_func &h) {
  return fixes_on_set(p, g) && (~g & p.apply(h)).is_zero();
}

/// Fixed-point projection xᵢ → g·xᵢ + g'·yᵢ with y ∈ h_OFF, simplified to
/// xᵢ for variables outside support(h), g·xᵢ where yᵢ = 0 and g' + xᵢ where
/// yᵢ = 1. When g ≡ 1 the result is the identity regardless of h.
inline projection point_projection(const bool_func &g, const bool_func &h, const point &y) {
  auto &m = g.owner();
  if (&h.owner() != &m)
    throw error("point_projection: functions belong to different managers");
  if (y.size() != m.var_count())
    throw error("point_projection: off-point has wrong length");
  if (g.is_one()) {
    auto p = identity_projection(m);
    p.target = h;
    return p;
  }
  if (h.is_one())
    throw error("point_projection: no projection into a constant-1 function exists");
  if (h.eval(y))
    throw error("point_projection: chosen point is not in the OFF-set of h");

  const auto not_g = ~g;
  partial_point used(m.var_count());
  std::vector<bool_func> subst = m.vars();
  for (const auto v : h.support()) {
    const auto i = v.index;
    used[i] = y[i];
    subst[i] = y[i] ? (not_g | subst[i]) : (g & subst[i]);
  }
  projection p{std::move(subst), g, h, std::move(used)};
  assert(verify_projection(p, g, h));
  return p;
}

/// `point_projection(g, h, any_off_point(h))`; deterministic. The identity is
/// returned when g ≡ 1, which also covers g ≡ h ≡ 1.
inline projection projection_for(const bool_func &g, const bool_func &h) {
  if (g.is_one()) {
    auto p = identity_projection(g.owner());
    p.target = h;
    return p;
  }
  const auto y = h.any_off_point();
  if (!y)
    throw error("projection_for: h is constant 1 and g is not, so no projection exists");
  return point_projection(g, h, *y);
}

/// P1 ∘ P2 (P2 applied first). For P1 ∈ 𝒫(g₁,h₁) and P2 ∈ 𝒫(g₂,h₂) the
/// result lies in 𝒫(g₁·g₂, h₁·h₂), which is 𝒫(g₁·g₂, h) when the targets agree.
inline projection compose_projections(const projection &p1, const projection &p2) {
  if (p1.subst.size() != p2.subst.size())
    throw error("compose_projections: substitution length mismatch");
  std::vector<bool_func> subst;
  subst.reserve(p1.subst.size());
  for (const auto &s : p1.subst)
    subst.push_back(s.compose(p2.subst));
  const auto target = p1.target == p2.target ? p1.target : (p1.target & p2.target);
  projection p{std::move(subst), p1.source & p2.source, target, std::nullopt};
  assert(verify_projection(p, p.source, p.target));
  return p;
}

} // namespace projsat
