// Isomorphism search between finite semigroups.

#ifndef SEMIBAND_ISOMORPHISM_HPP
#define SEMIBAND_ISOMORPHISM_HPP

#include <cstddef>
#include <optional>

#include "semiband/semigroup.hpp"

namespace semiband {

  inline constexpr std::size_t default_isomorphism_cap = 64;

  // Backtracking over images of a generating set, pruned by per-element
  // invariants (idempotency, index and period, Green class sizes, row and
  // column shapes). Returns a verified isomorphism S -> T, or nothing when
  // none exists. Throws SearchBudgetExceeded when the order exceeds cap.
  std::optional<SemigroupHom> find_isomorphism(Semigroup const& S,
                                               Semigroup const& T,
                                               std::size_t cap = default_isomorphism_cap);

  inline bool isomorphic(Semigroup const& S,
                         Semigroup const& T,
                         std::size_t      cap = default_isomorphism_cap) {
    return find_isomorphism(S, T, cap).has_value();
  }

}  // namespace semiband

#endif  // SEMIBAND_ISOMORPHISM_HPP
