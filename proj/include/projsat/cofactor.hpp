/// @file  cofactor.hpp
/// @brief Cofactor intervals Ξ(f,g) and the expansion f = Σ αᵢ·gᵢ
///
/// A cofactor of f with respect to g is any function that agrees with f on
/// the ON-set of g. The set of all of them is the interval [f·g, f + g'].

#pragma once

#include <span>
#include <string>

#include "bdd.hpp"

namespace projsat {

struct cofactor_interval {
  bool_func lower; ///< f·g, the minimal cofactor
  bool_func upper; ///< f + g', the maximal cofactor

  [[nodiscard]] bool contains(const bool_func &alpha) const { return lower.implies(alpha) && alpha.implies(upper); }
};

inline cofactor_interval interval_of(const bool_func &f, const bool_func &g) { return {f & g, f | ~g}; }

/// α ∈ Ξ(f,g), decided by α·g = f·g
inline bool is_cofactor(const bool_func &alpha, const bool_func &f, const bool_func &g) {
  return (alpha & g) == (f & g);
}

/// f·g + p·g'; a member of Ξ(f,g) for every p, and every member arises this way
inline bool_func general_cofactor(const bool_func &f, const bool_func &g, const bool_func &p) {
  return (f & g) | (p & ~g);
}

/// Raised by `expand` when a precondition fails
class expansion_error : public error {
public:
  enum class reason { size_mismatch, cover_violation, not_a_cofactor };

  expansion_error(reason r, std::size_t index, const std::string &what) : error(what), _reason(r), _index(index) {}

  [[nodiscard]] reason why() const noexcept { return _reason; }
  /// Offending cofactor position for `not_a_cofactor`
  [[nodiscard]] std::size_t index() const noexcept { return _index; }

private:
  reason _reason;
  std::size_t _index;
};

/// Σ αᵢ·gᵢ, after checking f ≤ Σ gᵢ and αᵢ ∈ Ξ(f,gᵢ). The result is
/// verified to equal f.
inline bool_func expand(const bool_func &f, std::span<const bool_func> bases, std::span<const bool_func> cofactors) {
  using r = expansion_error::reason;
  if (bases.size() != cofactors.size())
    throw expansion_error(r::size_mismatch, 0, "expand: " + std::to_string(bases.size()) + " bases but " +
                                                    std::to_string(cofactors.size()) + " cofactors");
  auto cover = f.owner().zero();
  for (const auto &g : bases)
    cover |= g;
  if (!f.implies(cover))
    throw expansion_error(r::cover_violation, 0, "expand: f is not covered by the sum of the bases");
  for (std::size_t i = 0; i < bases.size(); ++i)
    if (!is_cofactor(cofactors[i], f, bases[i]))
      throw expansion_error(r::not_a_cofactor, i, "expand: cofactor " + std::to_string(i) + " is not in Xi(f, g_" +
                                                      std::to_string(i) + ")");
  auto sum = f.owner().zero();
  for (std::size_t i = 0; i < bases.size(); ++i)
    sum |= cofactors[i] & bases[i];
  assert(sum == f);
  return sum;
}

} // namespace projsat
