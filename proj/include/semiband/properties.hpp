// Structural predicates on finite semigroups. Every negative answer comes
// with a witness (an element, pair or triple) that refutes the property.

#ifndef SEMIBAND_PROPERTIES_HPP
#define SEMIBAND_PROPERTIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semiband/green.hpp"
#include "semiband/semigroup.hpp"

namespace semiband {

  enum class Property {
    Regular,
    Periodic,
    CompletelyRegular,
    Simple,
    Bisimple,
    ZeroSimple,
    ZeroBisimple,
    CompletelySimple,
    CompletelyZeroSimple,
    Null,
    Semisimple,
    CompletelySemisimple,
    LeftCryptic,
    RightCryptic,
    Cryptic,
    Group,
    LeftGroup,
    RightGroup,
    Band,
    Semilattice,
    Inverse,
  };

  inline constexpr Property all_properties[] = {
      Property::Regular,        Property::Periodic,
      Property::CompletelyRegular, Property::Simple,
      Property::Bisimple,       Property::ZeroSimple,
      Property::ZeroBisimple,   Property::CompletelySimple,
      Property::CompletelyZeroSimple, Property::Null,
      Property::Semisimple,     Property::CompletelySemisimple,
      Property::LeftCryptic,    Property::RightCryptic,
      Property::Cryptic,        Property::Group,
      Property::LeftGroup,      Property::RightGroup,
      Property::Band,           Property::Semilattice,
      Property::Inverse};

  std::string_view        to_string(Property p) noexcept;
  std::optional<Property> property_from_string(std::string_view name);

  // Properties that only make sense in the presence of a zero element.
  bool requires_zero(Property p) noexcept;

  struct PropertyResult {
    bool              holds = true;
    std::vector<Elem> witness;  // nonempty whenever holds is false
    std::string       detail;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // Throws NoZeroElement for the zero-requiring properties on a semigroup
  // without zero.
  PropertyResult check_property(Semigroup const& S, Property p);
  PropertyResult check_property(Semigroup const& S, GreensStructure const& g, Property p);

  enum class ZeroHandling {
    // Exclude S's zero (when it has one) from candidate idempotents.
    use_zero,
    // Treat the "!= 0" clause as vacuous.
    ignore_zero,
  };

  // Non-zero idempotents e with: ef = fe = f != 0 implies e = f.
  ElementSet primitive_idempotents(Semigroup const& S,
                                   ZeroHandling     z = ZeroHandling::use_zero);

  // check_property(eSe, p) for every idempotent e; the witness is the first
  // idempotent whose local submonoid fails.
  PropertyResult is_locally(Semigroup const& S, Property p);

  struct Periodicity {
    std::vector<std::size_t> index;   // least m with x^m = x^{m+r}
    std::vector<std::size_t> period;  // least such r
  };

  Periodicity periodicity(Semigroup const& S);

  // Three independent decisions of "left group"; they agree on every finite
  // semigroup and are cross-checked in the test-suite.
  bool left_group_by_cancellation(Semigroup const& S);  // left simple, right cancellative
  bool left_group_by_idempotents(Semigroup const& S);   // regular, E(S) left zero
  bool left_group_by_structure(Semigroup const& S);     // completely simple, one L-class

}  // namespace semiband

#endif  // SEMIBAND_PROPERTIES_HPP
