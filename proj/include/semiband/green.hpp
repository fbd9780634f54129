// Green's relations, the natural partial order, maximal subgroups and
// local submonoids of a finite semigroup.

#ifndef SEMIBAND_GREEN_HPP
#define SEMIBAND_GREEN_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "semiband/semigroup.hpp"

namespace semiband {

  // Dense square boolean matrix with 64-bit rows, so row unions are cheap.
  class BoolMatrix {
   public:
    BoolMatrix() = default;
    explicit BoolMatrix(std::size_t n);

    std::size_t size() const noexcept {
      return n_;
    }
    bool operator()(std::size_t i, std::size_t j) const noexcept {
      return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
    }
    void set(std::size_t i, std::size_t j, bool v = true) noexcept;
    // row i |= row j of other
    void or_row(std::size_t i, BoolMatrix const& other, std::size_t j) noexcept;
    std::size_t count() const noexcept;

    friend bool operator==(BoolMatrix const&, BoolMatrix const&) = default;

   private:
    std::size_t                n_     = 0;
    std::size_t                words_ = 0;
    std::vector<std::uint64_t> bits_;
  };

  enum class GreenRelation { R, L, H, D, J };

  inline constexpr GreenRelation all_green_relations[]
      = {GreenRelation::H, GreenRelation::R, GreenRelation::L, GreenRelation::D, GreenRelation::J};

  char const* to_string(GreenRelation k) noexcept;

  struct GreensStructure {
    // Class ids per element, numbered by first occurrence.
    std::vector<std::size_t> R, L, H, D, J;
    BoolMatrix left_div;   // left_div(s, t)  <=> s in S^1 t
    BoolMatrix right_div;  // right_div(s, t) <=> s in t S^1
    BoolMatrix two_div;    // two_div(s, t)   <=> s in S^1 t S^1

    std::vector<std::size_t> const& classes(GreenRelation k) const noexcept;
    bool related(GreenRelation k, Elem a, Elem b) const noexcept {
      return classes(k)[a] == classes(k)[b];
    }
    std::size_t class_count(GreenRelation k) const;
    // Members of the K-class of a, ascending.
    std::vector<Elem> class_of(GreenRelation k, Elem a) const;
    // Size of the largest K-class.
    std::size_t largest_class(GreenRelation k) const;
  };

  GreensStructure greens_structure(Semigroup const& S);

  // Whether the D and J partitions coincide (always true for finite
  // semigroups; a failure signals a corrupted table).
  bool d_equals_j(GreensStructure const& g);

  // Which multipliers the natural order quantifies over. The classical
  // definition for an arbitrary semigroup uses S^1; restricting to S loses
  // reflexivity outside idempotent-covered semigroups.
  enum class OrderMultipliers { with_identity, semigroup_only };

  class OrderRelation {
   public:
    explicit OrderRelation(BoolMatrix leq) : leq_(std::move(leq)) {}

    std::size_t size() const noexcept {
      return leq_.size();
    }
    bool leq(Elem x, Elem y) const noexcept {
      return leq_(x, y);
    }
    std::size_t                        pair_count() const noexcept;
    std::vector<std::pair<Elem, Elem>> pairs() const;
    BoolMatrix const&                  matrix() const noexcept {
      return leq_;
    }

    bool is_reflexive() const;
    bool is_antisymmetric() const;
    bool is_transitive() const;

    friend bool operator==(OrderRelation const&, OrderRelation const&) = default;

   private:
    BoolMatrix leq_;
  };

  // s <= t iff s = at = tb = sb for some multipliers a, b.
  OrderRelation natural_order(Semigroup const& S,
                              OrderMultipliers m = OrderMultipliers::with_identity);

  // Group validator: identity plus two-sided inverses.
  bool is_group(Semigroup const& S);

  // H-class of an idempotent e with the induced product. Throws
  // NotIdempotent.
  Subsemigroup maximal_subgroup(Semigroup const& S, Elem e);
  Subsemigroup maximal_subgroup(Semigroup const& S, GreensStructure const& g, Elem e);

  // eSe, a monoid with identity e. Throws NotIdempotent.
  Subsemigroup local_submonoid(Semigroup const& S, Elem e);

  // Egg-box diagram in Graphviz DOT: one box per D-class, R-classes as
  // rows, L-classes as columns, '*' on cells that contain an idempotent.
  std::string eggbox_dot(Semigroup const& S, GreensStructure const& g);

}  // namespace semiband

#endif  // SEMIBAND_GREEN_HPP
