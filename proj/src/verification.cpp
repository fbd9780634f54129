#include "semiband/verification.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include <fmt/format.h>

#include "semiband/enumeration.hpp"
#include "semiband/green.hpp"
#include "semiband/ideals.hpp"
#include "semiband/isomorphism.hpp"
#include "semiband/properties.hpp"
#include "semiband/transformations.hpp"

namespace semiband {

  namespace {
    constexpr std::array<std::pair<ClaimId, std::string_view>, 27> claim_names{{
        {ClaimId::E_TR2_Lemma, "E_TR2_Lemma"},
        {ClaimId::TS_Idempotents, "TS_Idempotents"},
        {ClaimId::TS_Semiband4, "TS_Semiband4"},
        {ClaimId::Phi_Embeds, "Phi_Embeds"},
        {ClaimId::FS_Orders, "FS_Orders"},
        {ClaimId::TS_iso_AS, "TS_iso_AS"},
        {ClaimId::A1_Subsemigroup, "A1_Subsemigroup"},
        {ClaimId::Preserve_FinPerReg, "Preserve_FinPerReg"},
        {ClaimId::PreGreen_Lemma, "PreGreen_Lemma"},
        {ClaimId::Green_Formulas, "Green_Formulas"},
        {ClaimId::Order_Formula, "Order_Formula"},
        {ClaimId::Restriction_Corollary, "Restriction_Corollary"},
        {ClaimId::Subgroup_Iso, "Subgroup_Iso"},
        {ClaimId::LocalMonoid_Iso, "LocalMonoid_Iso"},
        {ClaimId::LocallyV, "LocallyV"},
        {ClaimId::Simple_Family, "Simple_Family"},
        {ClaimId::Kernel_0bar, "Kernel_0bar"},
        {ClaimId::ZeroSimple_Family, "ZeroSimple_Family"},
        {ClaimId::RS_Semiband2, "RS_Semiband2"},
        {ClaimId::RegularSub_Restriction, "RegularSub_Restriction"},
        {ClaimId::RS_Preservations, "RS_Preservations"},
        {ClaimId::RStar_ZeroSimple, "RStar_ZeroSimple"},
        {ClaimId::CompletelyRegular_RS, "CompletelyRegular_RS"},
        {ClaimId::Pastijn_A1_CR, "Pastijn_A1_CR"},
        {ClaimId::Higgins_Iso, "Higgins_Iso"},
        {ClaimId::Sigma_Reg_Bound, "Sigma_Reg_Bound"},
        {ClaimId::Sigma_nm_Bound, "Sigma_nm_Bound"},
    }};

    struct Outcome {
      Verdict           verdict = Verdict::pass;
      std::vector<Elem> witness;
      std::string       detail;
    };

    Outcome pass(std::string detail = {}) {
      return {Verdict::pass, {}, std::move(detail)};
    }

    Outcome fail(std::vector<Elem> witness, std::string detail) {
      if (witness.empty()) {
        throw InternalError("a failing claim must carry a witness");
      }
      return {Verdict::fail, std::move(witness), std::move(detail)};
    }

    Outcome skip(std::string reason) {
      return {Verdict::skipped, {}, std::move(reason)};
    }

    constexpr GreenRelation green_order[]
        = {GreenRelation::R, GreenRelation::L, GreenRelation::H, GreenRelation::D, GreenRelation::J};

    // Some a in S^1 with s = at and u = av.
    bool common_left_factor(Semigroup const& S, Elem s, Elem t, Elem u, Elem v) {
      if (s == t && u == v) {
        return true;
      }
      for (Elem a = 0; a < S.size(); ++a) {
        if (S(a, t) == s && S(a, v) == u) {
          return true;
        }
      }
      return false;
    }

    std::string triple_text(Semigroup const& S, TripleElem const& x) {
      return describe(Decoded{x}, S);
    }

    TripleElem triple_at(ConstructionBundle const& B, Elem i) {
      return std::get<TripleElem>(B.decode[i]);
    }

    std::vector<TripleElem> sorted_triples(ConstructionBundle const& B) {
      std::vector<TripleElem> out;
      for (auto const& d : B.decode) {
        out.push_back(std::get<TripleElem>(d));
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::vector<TripleElem> sorted_idempotent_triples(ConstructionBundle const& B) {
      std::vector<TripleElem> out;
      for (Elem x : idempotents(B.result).elements()) {
        out.push_back(triple_at(B, x));
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    // First triple in exactly one of two sorted lists.
    std::optional<std::pair<TripleElem, bool>> first_difference(
        std::vector<TripleElem> const& got,
        std::vector<TripleElem> const& want) {
      std::vector<TripleElem> extra, missing;
      std::set_difference(
          got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(extra));
      std::set_difference(
          want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(missing));
      if (!extra.empty()) {
        return std::make_pair(extra.front(), true);
      }
      if (!missing.empty()) {
        return std::make_pair(missing.front(), false);
      }
      return std::nullopt;
    }

    std::vector<Elem> triple_witness(TripleElem const& x) {
      return {x.s, x.t, static_cast<Elem>(x.flag)};
    }

    bool all_subgroups_abelian(Semigroup const& S, GreensStructure const& g) {
      for (Elem e : idempotents(S).elements()) {
        for (Elem a : g.class_of(GreenRelation::H, e)) {
          for (Elem b : g.class_of(GreenRelation::H, e)) {
            if (S(a, b) != S(b, a)) {
              return false;
            }
          }
        }
      }
      return true;
    }

    std::uint64_t table_hash(std::vector<Elem> const& t) {
      std::uint64_t h = 1469598103934665603ULL;
      for (Elem x : t) {
        h ^= x + 1;
        h *= 1099511628211ULL;
      }
      return h;
    }

    ////////////////////////////////////////////////////////////////////////
    // Per-member lazily built objects
    ////////////////////////////////////////////////////////////////////////

    class Context {
     public:
      Context(Semigroup S, Overrides const& o, std::uint64_t seed, VerifyOptions const& opts)
          : S(std::move(S)), seed(seed), opts(opts), overrides_(o) {}

      Semigroup const      S;
      std::uint64_t const  seed;
      VerifyOptions const& opts;

      GreensStructure const& g() {
        if (!g_) {
          g_ = greens_structure(S);
        }
        return *g_;
      }

      bool covered() {
        if (!covered_) {
          covered_ = is_idempotent_covered(S).covered;
        }
        return *covered_;
      }

      bool regular() {
        if (!regular_) {
          regular_ = check_property(S, g(), Property::Regular).holds;
        }
        return *regular_;
      }

      bool completely_regular() {
        return check_property(S, g(), Property::CompletelyRegular).holds;
      }

      ConstructionBundle const& T() {
        if (!T_) {
          T_ = overrides_.T ? *overrides_.T : build_T(S, g());
        }
        return *T_;
      }

      GreensStructure const& gT() {
        if (!gT_) {
          gT_ = greens_structure(T().result);
        }
        return *gT_;
      }

      OrderRelation const& leqT() {
        if (!leqT_) {
          leqT_ = natural_order(T().result);
        }
        return *leqT_;
      }

      ConstructionBundle const& R() {
        if (!R_) {
          R_ = overrides_.R ? *overrides_.R : build_R(S, g(), Side::right);
        }
        return *R_;
      }

      GreensStructure const& gR() {
        if (!gR_) {
          gR_ = greens_structure(R().result);
        }
        return *gR_;
      }

      // phi: S -> T(S), recomputed from decodes so that a replaced table is
      // judged on its own products.
      std::vector<Elem> const& phiT() {
        if (!phiT_) {
          phiT_.emplace();
          for (Elem s = 0; s < S.size(); ++s) {
            auto at = T().find(TripleElem{s, s, Flag::sigma});
            if (!at) {
              throw InternalError("diagonal triple missing from T(S)");
            }
            phiT_->push_back(*at);
          }
        }
        return *phiT_;
      }

      // R(S) index -> T(S) index
      std::vector<Elem> const& r_in_t() {
        if (!r_in_t_) {
          r_in_t_.emplace();
          for (auto const& d : R().decode) {
            auto at = T().find(d);
            if (!at) {
              throw InternalError("R(S) element missing from T(S)");
            }
            r_in_t_->push_back(*at);
          }
        }
        return *r_in_t_;
      }

     private:
      Overrides const&                  overrides_;
      std::optional<GreensStructure>    g_, gT_, gR_;
      std::optional<bool>               covered_, regular_;
      std::optional<ConstructionBundle> T_, R_;
      std::optional<OrderRelation>      leqT_;
      std::optional<std::vector<Elem>>  phiT_, r_in_t_;
    };

    ////////////////////////////////////////////////////////////////////////
    // Shared checks
    ////////////////////////////////////////////////////////////////////////

    // Carrier, product formula and associativity of a triple construction.
    std::optional<Outcome> triple_table_check(Semigroup const&               S,
                                              ConstructionBundle const&      B,
                                              std::vector<TripleElem> const& carrier,
                                              char const*                    name) {
      if (auto d = first_difference(sorted_triples(B), carrier)) {
        return fail(triple_witness(d->first),
                    fmt::format("{} {} {}",
                                triple_text(S, d->first),
                                d->second ? "is in" : "is missing from",
                                name));
      }
      std::size_t const N = B.result.size();
      for (Elem i = 0; i < N; ++i) {
        for (Elem j = 0; j < N; ++j) {
          auto const want = multiply(S, triple_at(B, i), triple_at(B, j));
          auto const got  = triple_at(B, B.result(i, j));
          if (got != want) {
            return fail({i, j},
                        fmt::format("{} * {} is {} in the table of {}, expected {}",
                                    triple_text(S, triple_at(B, i)),
                                    triple_text(S, triple_at(B, j)),
                                    triple_text(S, got),
                                    name,
                                    triple_text(S, want)));
          }
        }
      }
      if (auto a = associativity_failure(B.result)) {
        return fail({(*a)[0], (*a)[1], (*a)[2]}, fmt::format("{} is not associative", name));
      }
      return std::nullopt;
    }

    // The product x_1 ... x_k in B of the listed triples, after checking
    // each is an idempotent of B.
    std::optional<Outcome> factorization_check(Semigroup const&               S,
                                               ConstructionBundle const&      B,
                                               Elem                           x,
                                               std::vector<TripleElem> const& factors,
                                               char const*                    name) {
      Elem prod = no_elem;
      for (auto const& f : factors) {
        auto at = B.find(f);
        if (!at || !B.result.is_idempotent(*at)) {
          return fail({x},
                      fmt::format("factor {} of {} is not an idempotent of {}",
                                  triple_text(S, f),
                                  triple_text(S, triple_at(B, x)),
                                  name));
        }
        prod = prod == no_elem ? *at : B.result(prod, *at);
      }
      if (prod != x) {
        return fail({x},
                    fmt::format("idempotent factorization of {} multiplies to {} in {}",
                                triple_text(S, triple_at(B, x)),
                                triple_text(S, triple_at(B, prod)),
                                name));
      }
      return std::nullopt;
    }

    std::optional<Outcome> embedding_check(Semigroup const&         S,
                                           Semigroup const&         target,
                                           std::vector<Elem> const& map,
                                           char const*              name) {
      SemigroupHom h(S, target, map);
      if (auto bad = h.hom_failure()) {
        return fail({bad->first, bad->second},
                    fmt::format("embedding into {} is not a homomorphism at ({}, {})",
                                name,
                                S.label(bad->first),
                                S.label(bad->second)));
      }
      if (!h.is_injective()) {
        for (Elem a = 0; a < S.size(); ++a) {
          for (Elem b = a + 1; b < S.size(); ++b) {
            if (map[a] == map[b]) {
              return fail({a, b}, fmt::format("embedding into {} identifies {} and {}", name, a, b));
            }
          }
        }
      }
      return std::nullopt;
    }

    // Green relations and natural order of a subsemigroup agree with the
    // restriction of the parent's. inc maps sub indices to parent indices.
    std::optional<Outcome> restriction_check(GreensStructure const&   gP,
                                             OrderRelation const&     leqP,
                                             Semigroup const&         sub,
                                             std::vector<Elem> const& inc,
                                             char const*              name) {
      auto const gS   = greens_structure(sub);
      auto const leqS = natural_order(sub);
      for (Elem i = 0; i < sub.size(); ++i) {
        for (Elem j = 0; j < sub.size(); ++j) {
          for (auto k : green_order) {
            if (gP.related(k, inc[i], inc[j]) != gS.related(k, i, j)) {
              return fail({inc[i], inc[j]},
                          fmt::format("{}-relation of T(S) restricted to {} differs at this pair",
                                      to_string(k),
                                      name));
            }
          }
          if (leqP.leq(inc[i], inc[j]) != leqS.leq(i, j)) {
            return fail({inc[i], inc[j]},
                        fmt::format("natural order of T(S) restricted to {} differs at this pair",
                                    name));
          }
        }
      }
      return std::nullopt;
    }

    Outcome compare_properties(Semigroup const&         A,
                               GreensStructure const&   gA,
                               Semigroup const&         B,
                               GreensStructure const&   gB,
                               std::span<Property const> props,
                               char const*              bname) {
      for (Property p : props) {
        auto const a = check_property(A, gA, p);
        auto const b = check_property(B, gB, p);
        if (a.holds != b.holds) {
          auto const& w = a.holds ? b : a;
          return fail(w.witness,
                      fmt::format("{}: S {}, {} {} ({})",
                                  to_string(p),
                                  a.holds ? "holds" : "fails",
                                  bname,
                                  b.holds ? "holds" : "fails",
                                  w.detail));
        }
      }
      return pass();
    }

    Outcome compare_locally(Semigroup const&          A,
                            Semigroup const&          B,
                            std::span<Property const> props,
                            char const*               bname) {
      for (Property p : props) {
        auto const a = is_locally(A, p);
        auto const b = is_locally(B, p);
        if (a.holds != b.holds) {
          auto const& w = a.holds ? b : a;
          return fail(w.witness,
                      fmt::format("locally {}: S {}, {} {}",
                                  to_string(p),
                                  a.holds ? "holds" : "fails",
                                  bname,
                                  b.holds ? "holds" : "fails"));
        }
      }
      return pass();
    }

    ////////////////////////////////////////////////////////////////////////
    // Claims
    ////////////////////////////////////////////////////////////////////////

    Outcome e_tr2_lemma(Context& c) {
      auto const full = semidirect_TR2(c.S);
      if (auto d = first_difference(sorted_idempotent_triples(full),
                                    tr2_idempotents_formula(c.S))) {
        return fail(triple_witness(d->first),
                    fmt::format("{} {} the closed form for idempotents of the full product",
                                triple_text(c.S, d->first),
                                d->second ? "is idempotent but outside" : "is not idempotent but in"));
      }
      return pass();
    }

    std::vector<TripleElem> t_carrier(Context& c) {
      std::vector<TripleElem> out;
      for (Elem s = 0; s < c.S.size(); ++s) {
        for (Elem t = 0; t < c.S.size(); ++t) {
          if (c.g().left_div(s, t)) {
            out.push_back({s, t, Flag::sigma});
            out.push_back({s, t, Flag::tau});
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::vector<TripleElem> r_carrier(Context& c) {
      std::vector<TripleElem> out;
      for (Elem s = 0; s < c.S.size(); ++s) {
        for (Elem t = 0; t < c.S.size(); ++t) {
          if (c.g().related(GreenRelation::L, s, t)) {
            out.push_back({s, t, Flag::sigma});
            out.push_back({s, t, Flag::tau});
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    Outcome ts_idempotents(Context& c) {
      if (!c.covered()) {
        return skip("S is not idempotent covered");
      }
      auto const& T = c.T();
      if (auto d = first_difference(sorted_idempotent_triples(T),
                                    t_idempotents_formula(c.S, c.g()))) {
        return fail(triple_witness(d->first),
                    fmt::format("{} {} the closed form for E(T(S))",
                                triple_text(c.S, d->first),
                                d->second ? "is idempotent but outside" : "is not idempotent but in"));
      }
      return pass();
    }

    Outcome ts_semiband4(Context& c) {
      if (!c.covered()) {
        return skip("S is not idempotent covered");
      }
      auto const& T       = c.T();
      auto const  carrier = t_carrier(c);
      if (auto bad = triple_table_check(c.S, T, carrier, "T(S)")) {
        return *bad;
      }
      std::size_t expected = 0;
      for (Elem t = 0; t < c.S.size(); ++t) {
        for (Elem s = 0; s < c.S.size(); ++s) {
          expected += c.g().left_div(s, t) ? 2 : 0;
        }
      }
      if (T.result.size() != expected) {
        return fail({0}, fmt::format("|T(S)| = {} but 2 sum |S^1 t| = {}", T.result.size(), expected));
      }
      auto const E  = idempotents(T.result);
      auto const e2 = set_product(T.result, E, E);
      auto const e4 = set_product(T.result, e2, e2);
      for (Elem x = 0; x < T.result.size(); ++x) {
        if (!e4.contains(x)) {
          return fail({x}, "element of T(S) outside E^4");
        }
      }
      auto const depth = depth_analysis(T.result);
      for (Elem x = 0; x < T.result.size(); ++x) {
        if (auto bad = factorization_check(
                c.S, T, x, t_factorization(c.S, c.g(), triple_at(T, x)), "T(S)")) {
          return *bad;
        }
      }
      return pass(fmt::format("depth {}", *depth.depth));
    }

    Outcome phi_embeds(Context& c) {
      if (!c.covered()) {
        return skip("S is not idempotent covered");
      }
      if (auto bad = embedding_check(c.S, c.T().result, c.phiT(), "T(S)")) {
        return *bad;
      }
      return pass();
    }

    Outcome fs_orders(Context& c) {
      auto const        F  = build_F(c.S);
      Semigroup const&  S1 = F.base;
      std::size_t const m  = S1.size();
      std::size_t const n  = c.S.size();
      if (F.result.size() != 2 * m * m) {
        return fail({0}, fmt::format("|F(S)| = {}, expected 2|S^1|^2 = {}", F.result.size(), 2 * m * m));
      }
      if (c.S.is_monoid() && F.result.size() != 2 * n * n) {
        return fail({0}, fmt::format("|F(S)| = {} for a monoid of order {}", F.result.size(), n));
      }
      Elem const one  = *S1.identity();
      auto       at   = [&](Elem s, Elem t, bool h) { return *F.find(FNormalForm{s, t, h}); };
      Elem const hbar = at(one, one, true);
      Elem const ibar = at(one, one, false);
      auto       sbar = [&](Elem s) { return at(s, one, false); };
      auto const& P   = F.result;
      std::vector<Elem> gens{hbar};
      for (Elem s = 0; s < m; ++s) {
        gens.push_back(sbar(s));
      }
      for (Elem x : gens) {
        if (!P.is_idempotent(x)) {
          return fail({x}, "generator of F(S) is not idempotent");
        }
      }
      if (P(hbar, ibar) != ibar || P(ibar, hbar) != hbar) {
        return fail({hbar, ibar}, "h1 = 1 or 1h = h fails in F(S)");
      }
      for (Elem s = 0; s < m; ++s) {
        for (Elem t = 0; t < m; ++t) {
          if (P(sbar(s), sbar(t)) != sbar(s)) {
            return fail({sbar(s), sbar(t)}, "st = s fails in F(S)");
          }
          if (P(P(hbar, sbar(s)), P(hbar, sbar(t))) != P(hbar, sbar(S1(s, t)))) {
            return fail({sbar(s), sbar(t)}, "hshT = h(st) fails in F(S)");
          }
        }
      }
      if (generated_subsemigroup(P, ElementSet(P.size(), gens)).semigroup.size() != P.size()) {
        return fail({hbar}, "the generators do not generate F(S)");
      }
      if (auto bad = embedding_check(c.S, P, F.embedding->map(), "F(S)")) {
        return *bad;
      }
      if (!c.S.is_monoid()) {
        auto const F1 = build_F_without_one(c.S);
        if (F1.result.size() != 2 * n * n + 4 * n + 1) {
          return fail({ibar},
                      fmt::format("|F(S) \\ {{1}}| = {}, expected {}", F1.result.size(), 2 * n * n + 4 * n + 1));
        }
      }
      auto const Phi = build_Phi(c.S);
      if (Phi.bundle.result.size() != 2 * m * m) {
        return fail({0}, "order of the Rees matrix semigroup is not 2|S^1|^2");
      }
      if (auto bad = Phi.from_F.hom_failure()) {
        return fail({bad->first, bad->second}, "F(S) -> Rees matrix map is not a homomorphism");
      }
      if (!Phi.from_F.is_isomorphism()) {
        return fail({0}, "F(S) -> Rees matrix map is not bijective");
      }
      if (auto bad = embedding_check(
              c.S, Phi.bundle.result, Phi.bundle.embedding->map(), "the Rees matrix semigroup")) {
        return *bad;
      }
      return pass();
    }

    Outcome ts_iso_as(Context& c) {
      auto const A  = build_A(c.S, AVariant::full);
      auto const& T1 = A.target;
      if (!A.psi || !A.psi->is_isomorphism()) {
        auto w = A.psi && A.psi->hom_failure() ? std::vector<Elem>{A.psi->hom_failure()->first,
                                                                    A.psi->hom_failure()->second}
                                               : std::vector<Elem>{0};
        return fail(w, "psi: T(S^1) -> A(S) is not an isomorphism");
      }
      if (!A.psi_inverse.is_isomorphism()) {
        return fail({0}, "psi^-1: A(S) -> T(S^1) is not an isomorphism");
      }
      auto const round = A.psi->then(A.psi_inverse);
      for (Elem x = 0; x < T1.result.size(); ++x) {
        if (round(x) != x) {
          return fail({x}, "psi^-1 is not inverse to psi");
        }
      }
      // psi_1 psi^-1 agrees with s -> (s,s,sigma) in T(S^1).
      auto const composite = A.bundle.embedding->then(A.psi_inverse);
      for (Elem s = 0; s < c.S.size(); ++s) {
        if (composite(s) != *T1.find(TripleElem{s, s, Flag::sigma})) {
          return fail({s}, "psi_1 psi^-1 differs from phi");
        }
      }
      return pass();
    }

    Outcome a1_subsemigroup(Context& c) {
      if (c.S.is_monoid()) {
        return skip("S is a monoid");
      }
      if (!c.covered()) {
        return skip("S is not idempotent covered");
      }
      auto const A = build_A(c.S, AVariant::a1_general);
      if (!A.psi_inverse.is_isomorphism()) {
        auto w = A.psi_inverse.hom_failure();
        return fail(w ? std::vector<Elem>{w->first, w->second} : std::vector<Elem>{0},
                    "psi^-1 restricted to A_1 is not an isomorphism onto T(S)");
      }
      auto const composite = A.bundle.embedding->then(A.psi_inverse);
      if (composite.map() != A.target.embedding->map()) {
        return fail({0}, "psi_1 psi^-1 differs from phi on A_1");
      }
      return pass();
    }

    Outcome preserve_fin_per_reg(Context& c) {
      if (!c.covered()) {
        return skip("S is not idempotent covered");
      }
      auto const& T = c.T();
      if (T.result.size() > 2 * c.S.size() * c.S.size()) {
        return fail({0}, "T(S) larger than 2n^2");
      }
      Property const props[] = {Property::Periodic, Property::Regular};
      return compare_properties(c.S, c.g(), T.result, c.gT(), props, "T(S)");
    }

    Outcome pre_green(Context& c) {
      if (!c.covered()) {
        return skip("S is not idempotent covered");
      }
      auto const& T = c.T();
      auto const& g = c.gT();
      std::size_t const N = T.result.size();
      auto flip = [&](Elem x, Flag f) {
        auto tr = triple_at(T, x);
        tr.flag = f;
        return *T.find(tr);
      };
      // sigma-left multiples: y in mult[x] iff y = z x for some sigma z
      std::vector<ElementSet> mult(N, ElementSet(N));
      for (Elem x = 0; x < N; ++x) {
        for (Elem z = 0; z < N; ++z) {
          if (triple_at(T, z).flag == Flag::sigma) {
            mult[x].insert(T.result(z, x));
          }
        }
      }
      for (Elem x = 0; x < N; ++x) {
        if (!g.related(GreenRelation::R, flip(x, Flag::sigma), flip(x, Flag::tau))) {
          return fail({x}, "(s,t,τ) and (s,t,σ) are not R-related");
        }
        for (Elem y = 0; y < N; ++y) {
          bool const l = g.related(GreenRelation::L, x, y);
          if (l && triple_at(T, x).flag != triple_at(T, y).flag) {
            return fail({x, y}, "L-related triples with different flags");
          }
          bool const ls = g.related(GreenRelation::L, flip(x, Flag::sigma), flip(y, Flag::sigma));
          bool const lt = g.related(GreenRelation::L, flip(x, Flag::tau), flip(y, Flag::tau));
          if (ls != lt) {
            return fail({x, y}, "L on the τ-layer differs from L on the σ-layer");
          }
          if (triple_at(T, x).flag == Flag::sigma && triple_at(T, y).flag == Flag::sigma) {
            bool const by_mult = mult[x].contains(y) && mult[y].contains(x);
            if (by_mult != l) {
              return fail({x, y}, "L on the σ-layer is not generated by σ-multipliers");
            }
          }
        }
      }
      return pass();
    }

    Outcome green_formulas(Context& c) {
      if (!c.covered()) {
        return skip("S is not idempotent covered");
      }
      auto const& T  = c.T();
      auto const& gT = c.gT();
      auto const& g  = c.g();
      for (Elem x = 0; x < T.result.size(); ++x) {
        auto const [s, t, a] = triple_at(T, x);
        for (Elem y = 0; y < T.result.size(); ++y) {
          auto const [u, v, b] = triple_at(T, y);
          bool const lf        = common_left_factor(c.S, s, t, u, v);
          std::pair<GreenRelation, bool> const formulas[] = {
              {GreenRelation::R, g.related(GreenRelation::R, t, v) && lf},
              {GreenRelation::L, a == b && g.related(GreenRelation::L, t, v)},
              {GreenRelation::H, a == b && g.related(GreenRelation::H, t, v) && lf},
              {GreenRelation::D, g.related(GreenRelation::D, t, v)},
              {GreenRelation::J, g.related(GreenRelation::J, t, v)},
          };
          for (auto const& [k, want] : formulas) {
            if (gT.related(k, x, y) != want) {
              return fail({x, y},
                          fmt::format("{}: {} and {} are {}related in T(S) but the closed form says {}",
                                      to_string(k),
                                      triple_text(c.S, triple_at(T, x)),
                                      triple_text(c.S, triple_at(T, y)),
                                      want ? "not " : "",
                                      want ? "yes" : "no"));
            }
          }
        }
      }
      return pass();
    }

    Outcome order_formula(Context& c) {
      if (!c.covered()) {
        return skip("S is not idempotent covered");
      }
      auto const& T    = c.T();
      auto const& leqT = c.leqT();
      auto const  leqS = natural_order(c.S);
      if (natural_order(c.S, OrderMultipliers::semigroup_only) != leqS) {
        auto const other = natural_order(c.S, OrderMultipliers::semigroup_only);
        for (auto [x, y] : leqS.pairs()) {
          if (!other.leq(x, y)) {
            return fail({x, y}, "natural order of S depends on using S or S^1");
          }
        }
        return fail({0}, "natural order of S depends on using S or S^1");
      }
      if (natural_order(T.result, OrderMultipliers::semigroup_only) != leqT) {
        auto const other = natural_order(T.result, OrderMultipliers::semigroup_only);
        for (auto [x, y] : leqT.pairs()) {
          if (!other.leq(x, y)) {
            return fail({x, y}, "natural order of T(S) depends on using S or S^1");
          }
        }
        return fail({0}, "natural order of T(S) depends on using S or S^1");
      }
      for (Elem x = 0; x < T.result.size(); ++x) {
        auto const [s, t, a] = triple_at(T, x);
        for (Elem y = 0; y < T.result.size(); ++y) {
          auto const [u, v, b] = triple_at(T, y);
          bool const want = a == b && leqS.leq(t, v) && common_left_factor(c.S, s, t, u, v);
          if (leqT.leq(x, y) != want) {
            return fail({x, y},
                        fmt::format("natural order on T(S) differs from the closed form at ({}, {})",
                                    triple_text(c.S, triple_at(T, x)),
                                    triple_text(c.S, triple_at(T, y))));
          }
        }
      }
      return pass();
    }

    Outcome restriction_corollary(Context& c) {
      if (!c.covered()) {
        return skip("S is not idempotent covered");
      }
      auto const& gT  = c.gT();
      auto const& g   = c.g();
      auto const& phi = c.phiT();
      std::size_t const n = c.S.size();
      for (auto k : green_order) {
        for (Elem s = 0; s < n; ++s) {
          for (Elem t = 0; t < n; ++t) {
            if (gT.related(k, phi[s], phi[t]) != g.related(k, s, t)) {
              return fail({s, t}, fmt::format("{} on T(S) does not restrict to {} on S", to_string(k), to_string(k)));
            }
          }
        }
      }
      for (Elem s = 0; s < n; ++s) {
        std::vector<Elem> want;
        for (Elem t : g.class_of(GreenRelation::H, s)) {
          want.push_back(phi[t]);
        }
        std::sort(want.begin(), want.end());
        if (gT.class_of(GreenRelation::H, phi[s]) != want) {
          return fail({s}, "H-class of s(phi) in T(S) is not contained in S(phi)");
        }
      }
      for (auto k : {GreenRelation::J, GreenRelation::D}) {
        std::map<std::size_t, std::set<std::size_t>> inside;
        for (Elem s = 0; s < n; ++s) {
          inside[gT.classes(k)[phi[s]]].insert(g.classes(k)[s]);
        }
        for (Elem x = 0; x < c.T().result.size(); ++x) {
          auto it = inside.find(gT.classes(k)[x]);
          if (it == inside.end() || it->second.size() != 1) {
            return fail({x},
                        fmt::format("{}-class of this element of T(S) does not contain exactly one "
                                    "{}-class of S(phi)",
                                    to_string(k),
                                    to_string(k)));
          }
        }
      }
      return pass();
    }

    template <typename Local>
    Outcome local_iso(Context& c, Local local, char const* what) {
      if (!c.covered()) {
        return skip("S is not idempotent covered");
      }
      auto const& T = c.T();
      for (Elem e : idempotents(T.result).elements()) {
        auto const [s, t, a] = triple_at(T, e);
        Elem const target    = a == Flag::sigma ? t : s;
        auto const sub_t     = local(T.result, c.gT(), e);
        auto const sub_s     = local(c.S, c.g(), target);
        auto const& inc_s    = sub_s.inclusion.map();
        std::vector<Elem> map;
        for (Elem x : sub_t.inclusion.map()) {
          auto const tr  = triple_at(T, x);
          Elem const val = a == Flag::sigma ? tr.t : tr.s;
          auto it        = std::find(inc_s.begin(), inc_s.end(), val);
          if (it == inc_s.end()) {
            return fail({e, x}, fmt::format("the coordinate map leaves the {} of S", what));
          }
          map.push_back(static_cast<Elem>(it - inc_s.begin()));
        }
        SemigroupHom h(sub_t.semigroup, sub_s.semigroup, std::move(map));
        if (!h.is_isomorphism()) {
          return fail({e}, fmt::format("coordinate map on the {} at this idempotent is not an isomorphism", what));
        }
      }
      return pass();
    }

    Outcome subgroup_iso(Context& c) {
      return local_iso(
          c,
          [](Semigroup const& X, GreensStructure const& g, Elem e) {
            return maximal_subgroup(X, g, e);
          },
          "maximal subgroup");
    }

    Outcome local_monoid_iso(Context& c) {
      return local_iso(
          c,
          [](Semigroup const& X, GreensStructure const&, Elem e) { return local_submonoid(X, e); },
          "local submonoid");
    }

    constexpr Property e_varieties[] = {Property::Group, Property::Semilattice, Property::Inverse};

    Outcome locally_v(Context& c) {
      if (!c.regular()) {
        return skip("S is not regular");
      }
      auto r = compare_locally(c.S, c.T().result, e_varieties, "T(S)");
      if (r.verdict != Verdict::pass) {
        return r;
      }
      Property const cs[] = {Property::CompletelySimple};
      return compare_properties(c.S, c.g(), c.T().result, c.gT(), cs, "T(S)");
    }

    constexpr Property simple_family[] = {Property::Simple,
                                          Property::Bisimple,
                                          Property::CompletelySimple,
                                          Property::Semisimple,
                                          Property::CompletelySemisimple,
                                          Property::LeftCryptic,
                                          Property::RightCryptic,
                                          Property::Cryptic};

    constexpr Property zero_family[]
        = {Property::ZeroSimple, Property::ZeroBisimple, Property::CompletelyZeroSimple};

    Outcome simple_family_claim(Context& c) {
      if (!c.covered()) {
        return skip("S is not idempotent covered");
      }
      return compare_properties(c.S, c.g(), c.T().result, c.gT(), simple_family, "T(S)");
    }

    Outcome kernel_0bar(Context& c) {
      if (!c.covered()) {
        return skip("S is not idempotent covered");
      }
      if (!c.S.zero()) {
        return skip("S has no zero");
      }
      Elem const  z = *c.S.zero();
      auto const& T = c.T();
      ElementSet  K(T.result.size());
      K.insert(*T.find(TripleElem{z, z, Flag::sigma}));
      K.insert(*T.find(TripleElem{z, z, Flag::tau}));
      if (auto bad = ideal_failure(T.result, K)) {
        return fail({bad->first, bad->second}, "the zero triples do not form an ideal");
      }
      for (Elem x = 0; x < T.result.size(); ++x) {
        if (!K.subset_of(principal_ideal(T.result, x))) {
          return fail({x}, "the zero triples are not inside this principal ideal");
        }
      }
      auto const star = build_star(c.S, StarKind::T);
      if (star.result.size() != T.result.size() - 1) {
        return fail({0}, "|T*(S)| is not |T(S)| - 1");
      }
      if (auto bad = embedding_check(c.S, star.result, star.embedding->map(), "T*(S)")) {
        return *bad;
      }
      return pass();
    }

    Outcome zero_simple_family(Context& c) {
      if (!c.covered()) {
        return skip("S is not idempotent covered");
      }
      if (!c.S.zero()) {
        return skip("S has no zero");
      }
      auto const star = build_star(c.S, StarKind::T);
      return compare_properties(
          c.S, c.g(), star.result, greens_structure(star.result), zero_family, "T*(S)");
    }

    std::size_t sum_of_squares(GreensStructure const& g, GreenRelation k) {
      std::map<std::size_t, std::size_t> sizes;
      for (auto id : g.classes(k)) {
        ++sizes[id];
      }
      std::size_t total = 0;
      for (auto [id, sz] : sizes) {
        total += sz * sz;
      }
      return total;
    }

    Outcome rs_semiband2(Context& c) {
      if (!c.regular()) {
        return skip("S is not regular");
      }
      auto const& R = c.R();
      if (auto bad = triple_table_check(c.S, R, r_carrier(c), "R(S)")) {
        return *bad;
      }
      std::size_t const want = 2 * sum_of_squares(c.g(), GreenRelation::L);
      if (R.result.size() != want) {
        return fail({0}, fmt::format("|R(S)| = {}, expected {}", R.result.size(), want));
      }
      for (Elem x = 0; x < R.result.size(); ++x) {
        auto const [s, t, a] = triple_at(R, x);
        bool const want_idem = a == Flag::sigma ? c.S.is_idempotent(t) : c.S.is_idempotent(s);
        if (R.result.is_idempotent(x) != want_idem) {
          return fail({x}, "idempotents of R(S) differ from the closed form");
        }
        if (auto bad = factorization_check(c.S, R, x, r_factorization(c.S, triple_at(R, x)), "R(S)")) {
          return *bad;
        }
        TripleElem const inv = a == Flag::sigma
                                   ? TripleElem{inverse_of(c.S, t), inverse_of(c.S, t), Flag::sigma}
                                   : TripleElem{inverse_of(c.S, s), inverse_of(c.S, s), Flag::tau};
        auto const y = R.find(inv);
        if (!y || R.result(R.result(x, *y), x) != x) {
          return fail({x}, "the explicit inverse of this element fails");
        }
      }
      auto const E  = idempotents(R.result);
      auto const e2 = set_product(R.result, E, E);
      for (Elem x = 0; x < R.result.size(); ++x) {
        if (!e2.contains(x)) {
          return fail({x}, "element of R(S) outside E^2");
        }
      }
      std::vector<Elem> phi;
      for (Elem s = 0; s < c.S.size(); ++s) {
        phi.push_back(*R.find(TripleElem{s, s, Flag::sigma}));
      }
      if (auto bad = embedding_check(c.S, R.result, phi, "R(S)")) {
        return *bad;
      }
      if (auto r = check_property(R.result, c.gR(), Property::Regular); !r) {
        return fail(r.witness, "R(S) is not regular");
      }
      auto const L = build_R(c.S, c.g(), Side::left);
      std::size_t const want_l = 2 * sum_of_squares(c.g(), GreenRelation::R);
      if (L.result.size() != want_l) {
        return fail({0}, fmt::format("|L(S)| = {}, expected {}", L.result.size(), want_l));
      }
      if (auto bad = embedding_check(c.S, L.result, L.embedding->map(), "L(S)")) {
        return *bad;
      }
      auto const dl = depth_analysis(L.result);
      if (dl.kind != DepthKind::semiband || *dl.depth > 2) {
        return fail({0}, "L(S) is not a semiband of depth at most 2");
      }
      return pass();
    }

    // Sφ plus random idempotents of T(S), closed and then repaired by adding
    // inverses (from T(S)) of elements that are not regular in the sample.
    std::optional<ElementSet> sample_regular(Context& c, std::mt19937_64& rng) {
      auto const& T  = c.T().result;
      auto const  E  = idempotents(T).elements();
      ElementSet  gens(T.size(), c.phiT());
      std::size_t const extra = E.empty() ? 0 : rng() % (E.size() + 1);
      for (std::size_t i = 0; i < extra; ++i) {
        gens.insert(E[rng() % E.size()]);
      }
      while (true) {
        auto const cur = generated_subsemigroup(T, gens).inclusion.image();
        auto const mem = cur.elements();
        std::optional<Elem> bad;
        for (Elem x : mem) {
          bool reg = false;
          for (Elem y : mem) {
            if (T(T(x, y), x) == x) {
              reg = true;
              break;
            }
          }
          if (!reg) {
            bad = x;
            break;
          }
        }
        if (!bad) {
          return cur;
        }
        std::optional<Elem> inv;
        for (Elem y = 0; y < T.size() && !inv; ++y) {
          if (T(T(*bad, y), *bad) == *bad) {
            inv = T(T(y, *bad), y);
          }
        }
        if (!inv) {
          return std::nullopt;
        }
        gens = cur;
        gens.insert(*inv);
      }
    }

    Outcome regular_sub_restriction(Context& c) {
      if (!c.regular()) {
        return skip("S is not regular");
      }
      auto const& R = c.R();
      if (auto bad = restriction_check(c.gT(), c.leqT(), R.result, c.r_in_t(), "R(S)")) {
        return *bad;
      }
      std::mt19937_64 rng(c.seed);
      for (std::size_t i = 0; i < c.opts.samples; ++i) {
        auto const sample = sample_regular(c, rng);
        if (!sample) {
          return fail({0}, "T(S) is not regular, so the sampler cannot repair a subsemigroup");
        }
        auto const sub = induced_subsemigroup(c.T().result, *sample);
        if (auto bad = restriction_check(
                c.gT(), c.leqT(), sub.semigroup, sub.inclusion.map(), "a sampled regular subsemigroup")) {
          return *bad;
        }
      }
      return {Verdict::pass_sampled,
              {},
              fmt::format("R(S) exhaustive; {} sampled regular subsemigroups", c.opts.samples)};
    }

    Outcome rs_preservations(Context& c) {
      if (!c.regular()) {
        return skip("S is not regular");
      }
      auto const& R                 = c.R();
      Property const props[]        = {Property::Periodic,
                                       Property::Simple,
                                       Property::Bisimple,
                                       Property::CompletelySimple,
                                       Property::Semisimple,
                                       Property::CompletelySemisimple,
                                       Property::LeftCryptic,
                                       Property::RightCryptic,
                                       Property::Cryptic};
      auto r = compare_properties(c.S, c.g(), R.result, c.gR(), props, "R(S)");
      if (r.verdict != Verdict::pass) {
        return r;
      }
      r = compare_locally(c.S, R.result, e_varieties, "R(S)");
      if (r.verdict != Verdict::pass) {
        return r;
      }
      if (all_subgroups_abelian(c.S, c.g()) != all_subgroups_abelian(R.result, c.gR())) {
        return fail({0}, "maximal subgroups abelian in one of S, R(S) only");
      }
      return pass();
    }

    Outcome rstar_zero_simple(Context& c) {
      if (!c.regular()) {
        return skip("S is not regular");
      }
      if (!c.S.zero()) {
        return skip("S has no zero");
      }
      auto const star = build_star(c.S, StarKind::R);
      if (auto bad = embedding_check(c.S, star.result, star.embedding->map(), "R*(S)")) {
        return *bad;
      }
      return compare_properties(
          c.S, c.g(), star.result, greens_structure(star.result), zero_family, "R*(S)");
    }

    Outcome completely_regular_rs(Context& c) {
      if (!c.regular()) {
        return skip("S is not regular");
      }
      Property const cr[] = {Property::CompletelyRegular};
      return compare_properties(c.S, c.g(), c.R().result, c.gR(), cr, "R(S)");
    }

    Outcome pastijn_a1_cr(Context& c) {
      if (!c.S.is_monoid()) {
        return skip("S is not a monoid");
      }
      if (!c.completely_regular()) {
        return skip("S is not completely regular");
      }
      auto const A = build_A(c.S, AVariant::a1_cr);
      if (!A.psi_inverse.is_isomorphism()) {
        auto w = A.psi_inverse.hom_failure();
        return fail(w ? std::vector<Elem>{w->first, w->second} : std::vector<Elem>{0},
                    "psi^-1 restricted to A_1 is not an isomorphism onto R(S)");
      }
      if (A.bundle.embedding->then(A.psi_inverse).map() != A.target.embedding->map()) {
        return fail({0}, "psi_1 psi^-1 differs from phi");
      }
      if (auto r = check_property(A.bundle.result, Property::CompletelyRegular); !r) {
        return fail(r.witness, "A_1 is not completely regular");
      }
      auto const d = depth_analysis(A.bundle.result);
      if (d.kind != DepthKind::semiband || *d.depth > 2) {
        return fail({0}, "A_1 is not a semiband of depth at most 2");
      }
      // The same set described through D-classes: t J-below s.
      std::set<TripleElem> by_d, by_l;
      for (Elem s = 0; s < c.S.size(); ++s) {
        for (Elem t = 0; t < c.S.size(); ++t) {
          for (Flag f : {Flag::sigma, Flag::tau}) {
            if (c.g().two_div(t, s)) {
              by_d.insert({c.S(s, t), t, f});
            }
          }
        }
      }
      for (auto const& d : A.bundle.decode) {
        auto const& x = std::get<FNormalForm>(d);
        by_l.insert({c.S(x.s, x.t), x.t, x.hsuffix ? Flag::tau : Flag::sigma});
      }
      if (by_d != by_l) {
        return fail({0}, "the D-class and L-class descriptions of A_1 differ");
      }
      return pass();
    }

    Outcome higgins_iso(Context& c) {
      std::size_t k = 0;
      for (std::size_t d = 1; d <= 3; ++d) {
        std::size_t p = 1;
        for (std::size_t i = 0; i < d; ++i) {
          p *= d;
        }
        if (p == c.S.size()) {
          k = d;
        }
      }
      if (k == 0 || !isomorphic(c.S, full_tf_monoid(k, 3).result)) {
        return skip("S is not a full transformation monoid");
      }
      auto const TX  = full_tf_monoid(k, 3);
      auto const RX  = build_R(TX.result);
      auto const H   = higgins_T(k, HigginsMethod::parameters);
      auto const iso = iso_R_TX_to_T(k);
      if (!iso.is_isomorphism()) {
        auto w = iso.hom_failure();
        return fail(w ? std::vector<Elem>{w->first, w->second} : std::vector<Elem>{0},
                    "psi: R(T_X) -> T is not an isomorphism");
      }
      if (RX.result.size() != 2 * sum_of_squares(greens_structure(TX.result), GreenRelation::L)
          || RX.result.size() != H.result.size()) {
        return fail({0}, "|R(T_X)| and |T| disagree");
      }
      if (higgins_T(k, HigginsMethod::filter).result != H.result) {
        return fail({0}, "filtered and parameterized T differ");
      }
      for (auto const& d : H.decode) {
        if (!in_higgins_T(std::get<Transformation>(d), k)) {
          return fail({*H.find(d)}, "element of T fails the membership condition");
        }
      }
      if (auto bad = embedding_check(TX.result, H.result, H.embedding->map(), "T")) {
        return *bad;
      }
      for (Elem a = 0; a < TX.result.size(); ++a) {
        if (iso(RX.embedding->map()[a]) != H.embedding->map()[a]) {
          return fail({a}, "psi after phi differs from the primed embedding");
        }
      }
      auto const d = depth_analysis(H.result);
      if (d.kind != DepthKind::semiband || *d.depth > 2) {
        return fail({0}, "T is not a semiband of depth at most 2");
      }
      if (auto r = check_property(H.result, Property::Regular); !r) {
        return fail(r.witness, "T is not regular");
      }
      return pass(fmt::format("degree {}, |T| = {}", k, H.result.size()));
    }

    Outcome sigma_reg_bound(Context& c) {
      if (!c.regular()) {
        return skip("S is not regular");
      }
      auto const b = check_bounds("", c.S);
      auto const l = c.g().class_of(GreenRelation::L, 0);
      if (!b.reg_bound_ok()) {
        return fail(l, fmt::format("|R(S)| = {}, |L(S)| = {}, 2nl = {}, 2nr = {}",
                                   b.r_size, b.l_size, 2 * b.n * b.l, 2 * b.n * b.r));
      }
      if (!b.extremal_ok()) {
        return fail(l, fmt::format("|R(S)| = {} / left group {}; |L(S)| = {} / right group {}",
                                   b.r_size, b.left_group, b.l_size, b.right_group));
      }
      return pass(b.tight() ? "tight: |R(S)| = 2n^2" : "");
    }

    Outcome sigma_nm_bound(Context& c) {
      if (!c.regular()) {
        return skip("S is not regular");
      }
      auto const b = check_bounds("", c.S);
      if (!b.nm_bound_ok()) {
        return fail({0}, fmt::format("n = {}, m = {}, l = {}, r = {}, |R| = {}, |L| = {}",
                                     b.n, b.m, b.l, b.r, b.r_size, b.l_size));
      }
      return pass();
    }

    Outcome run_claim(Context& c, ClaimId id) {
      switch (id) {
        case ClaimId::E_TR2_Lemma: return e_tr2_lemma(c);
        case ClaimId::TS_Idempotents: return ts_idempotents(c);
        case ClaimId::TS_Semiband4: return ts_semiband4(c);
        case ClaimId::Phi_Embeds: return phi_embeds(c);
        case ClaimId::FS_Orders: return fs_orders(c);
        case ClaimId::TS_iso_AS: return ts_iso_as(c);
        case ClaimId::A1_Subsemigroup: return a1_subsemigroup(c);
        case ClaimId::Preserve_FinPerReg: return preserve_fin_per_reg(c);
        case ClaimId::PreGreen_Lemma: return pre_green(c);
        case ClaimId::Green_Formulas: return green_formulas(c);
        case ClaimId::Order_Formula: return order_formula(c);
        case ClaimId::Restriction_Corollary: return restriction_corollary(c);
        case ClaimId::Subgroup_Iso: return subgroup_iso(c);
        case ClaimId::LocalMonoid_Iso: return local_monoid_iso(c);
        case ClaimId::LocallyV: return locally_v(c);
        case ClaimId::Simple_Family: return simple_family_claim(c);
        case ClaimId::Kernel_0bar: return kernel_0bar(c);
        case ClaimId::ZeroSimple_Family: return zero_simple_family(c);
        case ClaimId::RS_Semiband2: return rs_semiband2(c);
        case ClaimId::RegularSub_Restriction: return regular_sub_restriction(c);
        case ClaimId::RS_Preservations: return rs_preservations(c);
        case ClaimId::RStar_ZeroSimple: return rstar_zero_simple(c);
        case ClaimId::CompletelyRegular_RS: return completely_regular_rs(c);
        case ClaimId::Pastijn_A1_CR: return pastijn_a1_cr(c);
        case ClaimId::Higgins_Iso: return higgins_iso(c);
        case ClaimId::Sigma_Reg_Bound: return sigma_reg_bound(c);
        case ClaimId::Sigma_nm_Bound: return sigma_nm_bound(c);
      }
      throw InvalidInput("unknown claim");
    }
  }  // namespace

  std::vector<ClaimId> const all_claims = [] {
    std::vector<ClaimId> out;
    for (auto const& [id, name] : claim_names) {
      out.push_back(id);
    }
    return out;
  }();

  std::string_view to_string(ClaimId c) noexcept {
    for (auto const& [id, name] : claim_names) {
      if (id == c) {
        return name;
      }
    }
    return "?";
  }

  std::optional<ClaimId> claim_from_string(std::string_view name) {
    for (auto const& [id, n] : claim_names) {
      if (n == name) {
        return id;
      }
    }
    return std::nullopt;
  }

  std::string_view to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::pass: return "pass";
      case Verdict::pass_sampled: return "pass (sampled)";
      case Verdict::fail: return "fail";
      case Verdict::skipped: return "skipped";
    }
    return "?";
  }

  std::vector<ClaimResult> verify_semigroup(Semigroup const&         S,
                                            std::span<ClaimId const> claims,
                                            std::uint64_t            member_seed,
                                            VerifyOptions const&     opts,
                                            Overrides const&         overrides) {
    Context                  ctx(S, overrides, member_seed, opts);
    std::vector<ClaimResult> out;
    for (ClaimId id : claims) {
      auto const t0 = std::chrono::steady_clock::now();
      auto       o  = run_claim(ctx, id);
      auto const t1 = std::chrono::steady_clock::now();
      out.push_back({id,
                     o.verdict,
                     std::move(o.witness),
                     std::move(o.detail),
                     std::chrono::duration<double, std::milli>(t1 - t0).count()});
    }
    return out;
  }

  bool VerificationReport::all_pass() const {
    return count(Verdict::fail) == 0;
  }

  std::size_t VerificationReport::count(Verdict v) const {
    return static_cast<std::size_t>(std::count_if(
        entries.begin(), entries.end(), [v](auto const& e) { return e.result.verdict == v; }));
  }

  std::vector<ClaimId> VerificationReport::uncovered(std::span<ClaimId const> claims) const {
    std::vector<ClaimId> out;
    for (ClaimId c : claims) {
      bool hit = std::any_of(entries.begin(), entries.end(), [c](auto const& e) {
        return e.result.claim == c && e.result.verdict != Verdict::skipped;
      });
      if (!hit) {
        out.push_back(c);
      }
    }
    return out;
  }

  nlohmann::json VerificationReport::to_json(bool timing) const {
    auto out = nlohmann::json::array();
    for (auto const& e : entries) {
      nlohmann::json j{{"member", e.member},
                       {"claim", to_string(e.result.claim)},
                       {"verdict", to_string(e.result.verdict)}};
      if (!e.result.witness.empty()) {
        j["witness"] = e.result.witness;
      }
      if (!e.result.detail.empty()) {
        j["detail"] = e.result.detail;
      }
      if (timing) {
        j["millis"] = e.result.millis;
      }
      out.push_back(std::move(j));
    }
    return out;
  }

  std::string VerificationReport::to_text() const {
    std::string out;
    for (auto const& e : entries) {
      out += fmt::format("{:<14} {:<24} {}", e.member, to_string(e.result.claim), to_string(e.result.verdict));
      if (!e.result.witness.empty()) {
        out += fmt::format(" witness [{}]", fmt::join(e.result.witness, ","));
      }
      if (!e.result.detail.empty() && e.result.verdict != Verdict::pass) {
        out += fmt::format(": {}", e.result.detail);
      }
      out += '\n';
    }
    out += fmt::format("{} pass, {} pass (sampled), {} fail, {} skipped\n",
                       count(Verdict::pass),
                       count(Verdict::pass_sampled),
                       count(Verdict::fail),
                       count(Verdict::skipped));
    return out;
  }

  VerificationReport verify_corpus(std::vector<std::pair<std::string, Semigroup>> const& members,
                                   std::span<ClaimId const> claims,
                                   VerifyOptions const&     opts) {
    std::vector<ClaimId> sorted_claims(claims.begin(), claims.end());
    std::sort(sorted_claims.begin(), sorted_claims.end());
    sorted_claims.erase(std::unique(sorted_claims.begin(), sorted_claims.end()), sorted_claims.end());

    std::size_t const                     M = members.size();
    std::vector<std::vector<Elem>>        keys(M);
    std::vector<std::vector<ClaimResult>> results(M);
    for (std::size_t i = 0; i < M; ++i) {
      auto const& S = members[i].second;
      keys[i]       = S.size() <= max_order ? canonical_table(S) : S.table();
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr       error;
    std::mutex               error_mutex;
    auto worker = [&] {
      while (true) {
        std::size_t const i = next++;
        if (i >= M) {
          return;
        }
        try {
          auto const& S    = members[i].second;
          auto const  seed = opts.seed ^ table_hash(keys[i]) ^ table_hash(S.table());
          results[i]       = verify_semigroup(S, sorted_claims, seed, opts);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
        }
      }
    };
    std::size_t const jobs = std::max<std::size_t>(1, std::min(opts.jobs, M));
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (std::size_t j = 0; j < jobs; ++j) {
        pool.emplace_back(worker);
      }
      for (auto& t : pool) {
        t.join();
      }
    }
    if (error) {
      std::rethrow_exception(error);
    }

    std::vector<std::size_t> order(M);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::forward_as_tuple(members[a].second.size(), keys[a], members[a].first)
             < std::forward_as_tuple(members[b].second.size(), keys[b], members[b].first);
    });
    VerificationReport report;
    for (std::size_t i : order) {
      for (auto& r : results[i]) {
        report.entries.push_back({members[i].first, std::move(r)});
      }
    }
    return report;
  }

  std::vector<MutationTrial> mutation_trials(
      std::vector<std::pair<std::string, Semigroup>> const& members,
      std::size_t                                           trials,
      std::uint64_t                                         seed) {
    std::vector<std::size_t> covered, regular;
    for (std::size_t i = 0; i < members.size(); ++i) {
      auto const& S = members[i].second;
      if (is_idempotent_covered(S)) {
        covered.push_back(i);
      }
      if (check_property(S, Property::Regular)) {
        regular.push_back(i);
      }
    }
    if (covered.empty()) {
      throw InvalidInput("no idempotent covered member to corrupt");
    }
    constexpr ClaimId t_claims[] = {ClaimId::TS_Idempotents,
                                    ClaimId::TS_Semiband4,
                                    ClaimId::Phi_Embeds,
                                    ClaimId::Green_Formulas,
                                    ClaimId::Order_Formula};
    constexpr ClaimId r_claims[] = {ClaimId::RS_Semiband2, ClaimId::RegularSub_Restriction};

    std::mt19937_64            rng(seed);
    std::vector<MutationTrial> out;
    for (std::size_t trial = 0; trial < trials; ++trial) {
      bool const use_r = !regular.empty() && trial % 2 == 1;
      auto const& pool = use_r ? regular : covered;
      std::size_t const i = pool[rng() % pool.size()];
      auto const& [name, S] = members[i];

      ConstructionBundle B = use_r ? build_R(S) : build_T(S);
      std::size_t const  N = B.result.size();
      MutationTrial      m;
      m.member       = name;
      m.construction = use_r ? "R" : "T";
      m.row       = static_cast<Elem>(rng() % N);
      m.col       = static_cast<Elem>(rng() % N);
      auto table  = B.result.table();
      m.old_value = table[m.row * N + m.col];
      m.new_value = static_cast<Elem>((m.old_value + 1 + rng() % (N - 1)) % N);
      table[m.row * N + m.col] = m.new_value;
      B.result = Semigroup::unchecked(N, std::move(table), B.result.labels());

      Overrides o;
      (use_r ? o.R : o.T) = B;
      VerifyOptions opts;
      opts.samples = 4;
      for (ClaimId id : use_r ? std::span<ClaimId const>(r_claims) : std::span<ClaimId const>(t_claims)) {
        bool caught = false;
        try {
          auto r = verify_semigroup(S, std::span<ClaimId const>(&id, 1), seed, opts, o);
          caught = r.front().verdict == Verdict::fail;
        } catch (Error const&) {
          caught = true;
        }
        if (caught) {
          m.caught_by.push_back(id);
        }
      }
      m.detected = !m.caught_by.empty();
      out.push_back(std::move(m));
    }
    return out;
  }

  bool BoundReport::reg_bound_ok() const {
    return r_size <= 2 * n * l && 2 * n * l <= two_n_squared() && l_size <= 2 * n * r;
  }

  bool BoundReport::nm_bound_ok() const {
    std::size_t const h = std::min(r_size, l_size);
    return l * r <= m * n && h * h <= 4 * n * n * n * m;
  }

  bool BoundReport::extremal_ok() const {
    return (r_size == two_n_squared()) == left_group && (l_size == two_n_squared()) == right_group;
  }

  BoundReport check_bounds(std::string member, Semigroup const& S) {
    auto const g = greens_structure(S);
    if (auto r = check_property(S, g, Property::Regular); !r) {
      throw NotRegular("bounds need a regular semigroup", r.witness);
    }
    BoundReport b;
    b.member = std::move(member);
    b.n      = S.size();
    for (Elem e : idempotents(S).elements()) {
      b.m = std::max(b.m, g.class_of(GreenRelation::H, e).size());
    }
    b.l           = g.largest_class(GreenRelation::L);
    b.r           = g.largest_class(GreenRelation::R);
    b.r_size      = build_R(S, g, Side::right).result.size();
    b.l_size      = build_R(S, g, Side::left).result.size();
    b.left_group  = check_property(S, g, Property::LeftGroup).holds;
    b.right_group = check_property(S, g, Property::RightGroup).holds;
    return b;
  }

  std::vector<BoundReport> check_bounds(
      std::vector<std::pair<std::string, Semigroup>> const& members) {
    std::vector<BoundReport> out;
    for (auto const& [name, S] : members) {
      out.push_back(check_bounds(name, S));
    }
    return out;
  }

  nlohmann::json to_json(BoundReport const& b) {
    std::size_t const h = std::min(b.r_size, b.l_size);
    return {{"member", b.member},
            {"n", b.n},
            {"m", b.m},
            {"l", b.l},
            {"r", b.r},
            {"R_order", b.r_size},
            {"L_order", b.l_size},
            {"two_n_squared", b.two_n_squared()},
            {"min_squared", h * h},
            {"four_n_cubed_m", 4 * b.n * b.n * b.n * b.m},
            {"reg_bound", b.reg_bound_ok()},
            {"nm_bound", b.nm_bound_ok()},
            {"tight", b.tight()},
            {"left_group", b.left_group},
            {"right_group", b.right_group}};
  }

}  // namespace semiband
