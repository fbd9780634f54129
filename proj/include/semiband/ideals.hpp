// Ideals, Rees quotients and principal factors.

#ifndef SEMIBAND_IDEALS_HPP
#define SEMIBAND_IDEALS_HPP

#include <optional>

#include "semiband/green.hpp"
#include "semiband/semigroup.hpp"

namespace semiband {

  // First pair (s, x) with sx or xs outside I, if I is not a two-sided ideal.
  std::optional<std::pair<Elem, Elem>> ideal_failure(Semigroup const& S, ElementSet const& I);

  inline bool is_ideal(Semigroup const& S, ElementSet const& I) {
    return !I.empty() && !ideal_failure(S, I);
  }

  // S^1 a S^1
  ElementSet principal_ideal(Semigroup const& S, Elem a);

  // S / I. Elements outside I keep their relative order; the collapsed ideal
  // becomes the last element, which is the zero of the quotient. Throws
  // NotAnIdeal with the witness pair.
  Quotient rees_quotient(Semigroup const& S, ElementSet const& ideal);

  enum class FactorKind { null, zero_simple };

  struct PrincipalFactor {
    // J_a followed by the zero (the last element).
    Semigroup         factor;
    FactorKind        kind;
    ElementSet        ideal;      // J(a)
    ElementSet        j_class;    // J_a
    std::vector<Elem> members;    // factor index -> element of S (J_a only)
  };

  // J(a)/I(a), realised as J_a with a zero adjoined: products that leave
  // J_a go to the zero. When I(a) is empty this is J_a with a new zero.
  PrincipalFactor principal_factor(Semigroup const& S, Elem a);
  PrincipalFactor principal_factor(Semigroup const& S, GreensStructure const& g, Elem a);

}  // namespace semiband

#endif  // SEMIBAND_IDEALS_HPP
