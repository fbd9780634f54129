// Embedding constructions built on the semidirect product of S x S with the
// two-element right-zero semigroup {sigma, tau}, the presented semigroup
// F(S), its quotient A(S), and the Rees matrix semigroup over S^1.

#ifndef SEMIBAND_CONSTRUCTIONS_HPP
#define SEMIBAND_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "semiband/green.hpp"
#include "semiband/semigroup.hpp"
#include "semiband/transformation.hpp"

namespace semiband {

  enum class Flag : std::uint8_t { sigma = 0, tau = 1 };

  char const* to_string(Flag f) noexcept;

  struct TripleElem {
    Elem s;
    Elem t;
    Flag flag;

    friend auto operator<=>(TripleElem const&, TripleElem const&) = default;
  };

  // s h t (hsuffix false) or s h t h (hsuffix true), with s, t in S^1.
  struct FNormalForm {
    Elem s;
    Elem t;
    bool hsuffix;

    friend auto operator<=>(FNormalForm const&, FNormalForm const&) = default;
  };

  // (i, a, lambda) with i, a in S^1 and lambda in {sigma, tau}.
  struct ReesTriple {
    Elem i;
    Elem a;
    Flag lambda;

    friend auto operator<=>(ReesTriple const&, ReesTriple const&) = default;
  };

  // monostate marks the zero class of a Rees quotient.
  using Decoded
      = std::variant<std::monostate, Elem, TripleElem, FNormalForm, ReesTriple, Transformation>;

  struct ConstructionBundle {
    Semigroup                   result;
    std::vector<Decoded>        decode;  // result index -> structured element
    std::optional<SemigroupHom> embedding;
    std::string                 notes;
    // Coordinates in decode refer to this semigroup (S, S^1 or S^op).
    Semigroup base;

    // Index of a structured element, or nothing.
    std::optional<Elem> find(Decoded const& d) const;
  };

  // Human-readable form of a decoded element, using base's labels.
  std::string describe(Decoded const& d, Semigroup const& base);

  ////////////////////////////////////////////////////////////////////////
  // Triples
  ////////////////////////////////////////////////////////////////////////

  // sigma: (x1 y2, y1 y2, a2); tau: (x1 x2, y1 x2, a2).
  TripleElem multiply(Semigroup const& S, TripleElem const& x, TripleElem const& y);

  // Position of a triple in the full product: (s n + t) 2 + flag.
  inline Elem triple_index(std::size_t n, TripleElem const& x) {
    return static_cast<Elem>((x.s * n + x.t) * 2 + static_cast<Elem>(x.flag));
  }

  // All 2n^2 triples, with s -> (s, s, sigma).
  ConstructionBundle semidirect_TR2(Semigroup const& S);

  // Idempotents of the full product: (s,e,sigma), (e,s,tau) with se = s.
  std::vector<TripleElem> tr2_idempotents_formula(Semigroup const& S);

  // {(s,t,a) : s in S^1 t}; throws NotIdempotentCovered. Carries s ->
  // (s, s, sigma).
  ConstructionBundle build_T(Semigroup const& S);
  ConstructionBundle build_T(Semigroup const& S, GreensStructure const& g);

  // (s,e,sigma) with e in E, se = s, and (e,s,tau) with e in E, e L s.
  std::vector<TripleElem> t_idempotents_formula(Semigroup const&       S,
                                                GreensStructure const& g);

  // Idempotents of T(S) whose product is x; at most four factors.
  std::vector<TripleElem> t_factorization(Semigroup const&       S,
                                          GreensStructure const& g,
                                          TripleElem const&      x);

  enum class Side { right, left };

  // Side::right: {(s,t,a) in T(S) : s L t}. Side::left: the dual, built as
  // R(S^op) with the product reversed; its triples are read in S^op, so base
  // is S^op. Throws NotRegular.
  ConstructionBundle build_R(Semigroup const& S, Side side = Side::right);
  ConstructionBundle build_R(Semigroup const& S, GreensStructure const& g, Side side);

  // Two idempotents of R(S) whose product is x (S regular, x in R(S)).
  std::vector<TripleElem> r_factorization(Semigroup const& S, TripleElem const& x);

  // An inverse t' of t: t t' t = t, t' t t' = t'. Throws NotRegular.
  Elem inverse_of(Semigroup const& S, Elem t);

  enum class StarKind { T, R };

  // T(S) or R(S) with the kernel {(0,0,sigma), (0,0,tau)} collapsed to a
  // zero. Throws NoZeroElement, and NotRegular for StarKind::R.
  ConstructionBundle build_star(Semigroup const& S, StarKind which);

  ////////////////////////////////////////////////////////////////////////
  // F(S), A(S), the Rees matrix semigroup
  ////////////////////////////////////////////////////////////////////////

  // Normal forms over S^1 at index (s m + t) 2 + hsuffix, m = |S^1|.
  // Products, left (s,t) and right (u,v):
  //   plain    . plain    = (s, tv,  plain)
  //   plain    . suffixed = (s, tv,  suffixed)
  //   suffixed . plain    = (s, tuv, plain)
  //   suffixed . suffixed = (s, tuv, suffixed)
  // base is S^1. The embedding is s -> h s = (1, s, plain).
  ConstructionBundle build_F(Semigroup const& S);

  // F(S) without the generator (1,1,plain); only closed when S is not a
  // monoid. Throws InvalidInput for monoids.
  ConstructionBundle build_F_without_one(Semigroup const& S);

  FNormalForm f_multiply(Semigroup const& S1, FNormalForm const& x, FNormalForm const& y);

  enum class AVariant {
    full,        // all of A(S), isomorphic to T(S^1)
    a1_general,  // S not a monoid: the part isomorphic to T(S)
    a1_cr,       // S a completely regular monoid: the part isomorphic to R(S)
  };

  struct ABuild {
    ConstructionBundle bundle;  // A(S) or A_1; decode gives class representatives
    // full: T(S^1) -> A(S). Absent for the A_1 variants.
    std::optional<SemigroupHom> psi;
    // full: A(S) -> T(S^1); a1_general: A_1 -> T(S); a1_cr: A_1 -> R(S).
    SemigroupHom psi_inverse;
    ConstructionBundle target;  // codomain bundle of psi_inverse
  };

  // A(S) is F(S) modulo the kernel of (s, t, flag) -> (st, t, flag). The
  // bundle embedding is s -> class of (1, s, plain).
  ABuild build_A(Semigroup const& S, AVariant variant = AVariant::full);

  struct PhiBuild {
    ConstructionBundle bundle;  // base is S^1; embedding s -> (1, s, sigma)
    SemigroupHom       from_F;  // (s,t,plain) -> (s,t,sigma), (s,t,suffixed) -> (s,t,tau)
  };

  // Rees matrix semigroup over S^1 with index set S^1 x {sigma, tau}:
  // (i,a,l)(j,b,m) = (i, a q b, m), q = 1 for l = sigma and q = j for tau.
  PhiBuild build_Phi(Semigroup const& S);

}  // namespace semiband

#endif  // SEMIBAND_CONSTRUCTIONS_HPP
