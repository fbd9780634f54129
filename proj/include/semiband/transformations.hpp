// Full transformation monoids and the subsemiband T of T_Y, Y = X u X',
// consisting of maps that send X and X' onto the same subset of X or of X'.
// X' is encoded as k..2k-1 with x' = x + k.

#ifndef SEMIBAND_TRANSFORMATIONS_HPP
#define SEMIBAND_TRANSFORMATIONS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "semiband/constructions.hpp"
#include "semiband/transformation.hpp"

namespace semiband {

  inline constexpr std::size_t default_degree_cap = 4;

  Transformation identity_transformation(std::size_t k);

  // All k^k maps, ordered lexicographically by image sequence; decode gives
  // the Transformation. Throws DegreeTooLarge above cap, InvalidInput for 0.
  ConstructionBundle full_tf_monoid(std::size_t k, std::size_t cap = default_degree_cap);

  // Closure of gens under composition. Throws InvalidInput on an empty set
  // or mixed degrees.
  ConstructionBundle transformation_semigroup(std::vector<Transformation> const& gens);

  // X alpha = X' alpha, contained in X or in X'.
  bool in_higgins_T(Transformation const& a, std::size_t k);

  // x alpha' = x' alpha' = x alpha
  Transformation primed(Transformation const& a);

  enum class HigginsMethod {
    filter,      // scan all of T_{2k}
    parameters,  // (side, f, g) with im f = im g
  };

  // Elements sorted as transformations, so both methods give identical
  // tables. The embedding is alpha -> alpha' from full_tf_monoid(k).
  // Throws DegreeTooLarge for k > 3.
  ConstructionBundle higgins_T(std::size_t k, HigginsMethod method = HigginsMethod::parameters);

  // (lambda, mu, sigma) -> {x -> x mu, x' -> x lambda},
  // (lambda, mu, tau)   -> {x -> (x mu)', x' -> (x lambda)'},
  // from R(T_k) onto higgins_T(k).
  SemigroupHom iso_R_TX_to_T(std::size_t k);

  // .tfm: one transformation per line, space-separated images; '#' lines
  // are comments. All lines must have the same length.
  std::vector<Transformation> read_tfm(std::istream& in);
  std::vector<Transformation> read_tfm_file(std::string const& path);
  void                        write_tfm(std::ostream& out, std::vector<Transformation> const& ts);

}  // namespace semiband

#endif  // SEMIBAND_TRANSFORMATIONS_HPP
