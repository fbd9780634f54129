// Finite semigroups given by a Cayley table over dense indices 0..n-1, and
// the basic machinery every construction in the library is built from.

#ifndef SEMIBAND_SEMIGROUP_HPP
#define SEMIBAND_SEMIGROUP_HPP

#include <array>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semiband/errors.hpp"

namespace semiband {

  constexpr Elem no_elem = static_cast<Elem>(-1);

  ////////////////////////////////////////////////////////////////////////
  // Semigroup
  ////////////////////////////////////////////////////////////////////////

  // Immutable after construction. Copies share the table, so passing by
  // value is cheap and a Semigroup may be read from many threads.
  class Semigroup {
   public:
    std::size_t size() const noexcept {
      return d_->n;
    }

    Elem product(Elem a, Elem b) const noexcept {
      return d_->table[a * d_->n + b];
    }

    Elem operator()(Elem a, Elem b) const noexcept {
      return product(a, b);
    }

    std::span<Elem const> row(Elem a) const noexcept {
      return {d_->table.data() + a * d_->n, d_->n};
    }

    std::vector<Elem> const& table() const noexcept {
      return d_->table;
    }

    std::optional<Elem> identity() const noexcept {
      return d_->identity;
    }

    std::optional<Elem> zero() const noexcept {
      return d_->zero;
    }

    bool is_monoid() const noexcept {
      return d_->identity.has_value();
    }

    bool has_labels() const noexcept {
      return !d_->labels.empty();
    }

    std::vector<std::string> const& labels() const noexcept {
      return d_->labels;
    }

    // The stored label, or the decimal index when the table is unlabelled.
    std::string label(Elem a) const;

    bool is_idempotent(Elem a) const noexcept {
      return product(a, a) == a;
    }

    // Builds without the O(n^3) associativity scan. Only for tables that are
    // associative by construction, or deliberately corrupted in tests.
    static Semigroup unchecked(std::size_t              n,
                               std::vector<Elem>        table,
                               std::vector<std::string> labels = {});

    friend bool operator==(Semigroup const& x, Semigroup const& y);

   private:
    struct Data {
      std::size_t              n = 0;
      std::vector<Elem>        table;
      std::vector<std::string> labels;
      std::optional<Elem>      identity;
      std::optional<Elem>      zero;
    };

    explicit Semigroup(std::shared_ptr<Data const> d) : d_(std::move(d)) {}

    std::shared_ptr<Data const> d_;
  };

  // Validates the table (range, associativity) and detects identity and
  // zero. Throws InvalidInput, IndexOutOfRange or NonAssociative.
  Semigroup make_semigroup(std::vector<std::vector<Elem>> const& table,
                           std::vector<std::string>              labels = {});
  Semigroup make_semigroup(std::size_t              n,
                           std::vector<Elem>        flat_table,
                           std::vector<std::string> labels = {});

  // First triple (a, b, c) with (ab)c != a(bc), if any.
  std::optional<std::array<Elem, 3>> associativity_failure(Semigroup const& S);

  // S^1: S itself when S already has an identity, otherwise S with a new
  // identity appended as element n. force = true always appends.
  Semigroup adjoin_identity(Semigroup const& S, bool force = false);

  // Same carrier, product reversed.
  Semigroup opposite(Semigroup const& S);

  ////////////////////////////////////////////////////////////////////////
  // ElementSet
  ////////////////////////////////////////////////////////////////////////

  class ElementSet {
   public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe) : bits_(universe, false) {}
    ElementSet(std::size_t universe, std::span<Elem const> members);

    static ElementSet all(std::size_t universe);

    std::size_t universe() const noexcept {
      return bits_.size();
    }

    bool contains(Elem x) const noexcept {
      return x < bits_.size() && bits_[x];
    }

    void insert(Elem x);
    void erase(Elem x);
    std::size_t       count() const noexcept;
    bool              empty() const noexcept;
    std::vector<Elem> elements() const;
    bool              subset_of(ElementSet const& other) const;

    friend bool operator==(ElementSet const&, ElementSet const&) = default;

   private:
    std::vector<bool> bits_;
  };

  ElementSet idempotents(Semigroup const& S);

  // {xy : x in A, y in B}
  ElementSet set_product(Semigroup const& S, ElementSet const& A, ElementSet const& B);

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms, subsemigroups, quotients
  ////////////////////////////////////////////////////////////////////////

  class SemigroupHom {
   public:
    // Flags are computed here, so they always agree with the map.
    SemigroupHom(Semigroup domain, Semigroup codomain, std::vector<Elem> map);

    Semigroup const& domain() const noexcept {
      return domain_;
    }
    Semigroup const& codomain() const noexcept {
      return codomain_;
    }
    std::vector<Elem> const& map() const noexcept {
      return map_;
    }
    Elem operator()(Elem a) const noexcept {
      return map_[a];
    }

    bool is_homomorphism() const noexcept {
      return !hom_failure_.has_value();
    }
    bool is_injective() const noexcept {
      return injective_;
    }
    bool is_surjective() const noexcept {
      return surjective_;
    }
    bool is_embedding() const noexcept {
      return is_homomorphism() && injective_;
    }
    bool is_isomorphism() const noexcept {
      return is_embedding() && surjective_;
    }

    // A pair (a, b) with f(ab) != f(a)f(b).
    std::optional<std::pair<Elem, Elem>> hom_failure() const noexcept {
      return hom_failure_;
    }

    // x -> next(this(x)); requires codomain sizes to line up.
    SemigroupHom then(SemigroupHom const& next) const;

    // Requires a bijection.
    SemigroupHom inverse() const;

    ElementSet image() const;

   private:
    Semigroup                            domain_;
    Semigroup                            codomain_;
    std::vector<Elem>                    map_;
    std::optional<std::pair<Elem, Elem>> hom_failure_;
    bool                                 injective_  = false;
    bool                                 surjective_ = false;
  };

  struct Subsemigroup {
    Semigroup    semigroup;
    SemigroupHom inclusion;  // sub index -> parent index, increasing
  };

  struct Quotient {
    Semigroup    semigroup;
    SemigroupHom projection;
  };

  // Closure of gens under the product. Throws InvalidInput on empty gens.
  Subsemigroup generated_subsemigroup(Semigroup const& S, ElementSet const& gens);

  // The subsemigroup on exactly `members`; throws NotClosed with the
  // offending pair when members is not closed.
  Subsemigroup induced_subsemigroup(Semigroup const& S, ElementSet const& members);

  // Quotient by the equivalence whose classes are the fibres of class_of.
  // Classes are numbered by first occurrence. Throws NotACongruence with a
  // witness (a, b, a', b') when the product is not well defined.
  Quotient quotient_by_partition(Semigroup const&             S,
                                 std::span<std::size_t const> class_of);

  ////////////////////////////////////////////////////////////////////////
  // Idempotent-generated structure
  ////////////////////////////////////////////////////////////////////////

  enum class DepthKind { not_semiband, semiband };

  struct DepthResult {
    DepthKind kind = DepthKind::not_semiband;
    // Only for semibands: least k with E^k = E^{k+1}.
    std::optional<std::size_t> depth;
    // chain[i] = E^{i+1}, ending with the first repeated entry, so the last
    // two entries coincide and equal <E>.
    std::vector<ElementSet> chain;

    ElementSet const& generated() const {
      return chain.back();
    }
  };

  DepthResult depth_analysis(Semigroup const& S);

  // Least k with x in E^k, or nothing when x is not in <E>.
  std::optional<std::size_t> element_depth(Semigroup const& S, Elem x);

  // Whether every s satisfies se = s = fs for idempotents e, f; on failure
  // the first uncovered element is returned.
  struct CoverResult {
    bool                covered = true;
    std::optional<Elem> witness;
    explicit operator bool() const noexcept {
      return covered;
    }
  };

  CoverResult is_idempotent_covered(Semigroup const& S);

  ////////////////////////////////////////////////////////////////////////
  // .sgp files
  ////////////////////////////////////////////////////////////////////////

  // Line 1: n; then n rows of n 0-based indices. '#' lines are comments,
  // "# labels: a b c" supplies labels.
  Semigroup   read_sgp(std::istream& in);
  Semigroup   read_sgp_file(std::string const& path);
  void        write_sgp(std::ostream& out, Semigroup const& S);
  void        write_sgp_file(std::string const& path, Semigroup const& S);
  std::string to_sgp_string(Semigroup const& S);

}  // namespace semiband

#endif  // SEMIBAND_SEMIGROUP_HPP
