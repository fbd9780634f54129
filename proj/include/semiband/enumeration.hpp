// Exhaustive generation of small semigroups, deduplicated by canonical
// Cayley tables.

#ifndef SEMIBAND_ENUMERATION_HPP
#define SEMIBAND_ENUMERATION_HPP

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semiband/properties.hpp"
#include "semiband/semigroup.hpp"

namespace semiband {

  enum class Modulo { none, isomorphism, iso_anti };

  char const* to_string(Modulo m) noexcept;

  struct Corpus {
    std::size_t            order  = 0;
    Modulo                 modulo = Modulo::isomorphism;
    std::vector<Semigroup> members;
  };

  inline constexpr std::size_t default_order_cap = 4;
  inline constexpr std::size_t max_order         = 5;

  // SBF_ORDER_CAP when set (never above max_order), else 4, or 5 with
  // allow_order_five.
  std::size_t order_cap(bool allow_order_five = false);

  // Backtracking over the cells in row-major order, rejecting a partial
  // table as soon as some fully defined triple violates associativity.
  // Members come out sorted by canonical table. Throws OrderTooLarge above
  // the cap and InvalidInput for n = 0.
  Corpus enumerate_semigroups(std::size_t n,
                              Modulo      modulo           = Modulo::isomorphism,
                              bool        allow_order_five = false);

  // Every associative table on [0, n), unreduced, in lexicographic order.
  std::vector<std::vector<Elem>> associative_tables(std::size_t n, bool allow_order_five = false);

  // Lexicographically least table among all relabelings p, where the
  // relabeled table is new[p[x]][p[y]] = p[old[x][y]].
  std::vector<Elem> canonical_table(std::size_t n, std::span<Elem const> table);
  std::vector<Elem> canonical_table(Semigroup const& S, Modulo modulo = Modulo::isomorphism);

  // Subsequence of members that satisfy the predicate.
  Corpus corpus_filter(Corpus const& c, std::function<bool(Semigroup const&)> const& keep);
  Corpus corpus_filter(Corpus const& c, Property p);

  // Writes one .sgp per member plus manifest.json. Creates dir if needed.
  void export_corpus(Corpus const& c, std::string const& dir);

  // All *.sgp files of a directory, sorted by file name.
  std::vector<std::pair<std::string, Semigroup>> read_sgp_directory(std::string const& dir);

}  // namespace semiband

#endif  // SEMIBAND_ENUMERATION_HPP
