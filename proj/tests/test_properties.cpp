#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "semiband/constructions.hpp"
#include "semiband/green.hpp"
#include "semiband/ideals.hpp"
#include "semiband/properties.hpp"
#include "semiband/transformations.hpp"

using namespace semiband;

namespace {
  bool holds(Semigroup const& S, Property p) {
    return check_property(S, p).holds;
  }

  std::vector<std::pair<std::string, Semigroup>> corpus_with_extras() {
    auto c = fixtures::corpus(4);
    c.emplace_back("T2", full_tf_monoid(2).result);
    c.emplace_back("T3", full_tf_monoid(3).result);
    c.emplace_back("T(SL)", build_T(fixtures::semilattice2()).result);
    return c;
  }
}  // namespace

TEST_CASE("property names round trip", "[properties]") {
  for (Property p : all_properties) {
    CHECK(property_from_string(to_string(p)) == p);
  }
  CHECK_FALSE(property_from_string("Nonsense"));
}

TEST_CASE("property examples", "[properties]") {
  CHECK(holds(fixtures::left_zero2(), Property::CompletelySimple));

  auto const nul = check_property(fixtures::null2(), Property::Regular);
  CHECK_FALSE(nul.holds);
  CHECK(nul.witness == std::vector<Elem>{0});

  auto const T  = build_T(fixtures::semilattice2());
  auto const cr = check_property(T.result, Property::CompletelyRegular);
  CHECK_FALSE(cr.holds);
  REQUIRE(cr.witness.size() == 1);
  CHECK(T.decode[cr.witness[0]] == Decoded{TripleElem{0, 1, Flag::tau}});

  CHECK(holds(fixtures::semilattice2(), Property::Cryptic));
  CHECK(holds(fixtures::cyclic3(), Property::Group));
  CHECK(holds(fixtures::cyclic3(), Property::LeftGroup));
  CHECK(holds(fixtures::left_zero2(), Property::LeftGroup));
  CHECK_FALSE(holds(fixtures::left_zero2(), Property::RightGroup));
  CHECK(holds(fixtures::null2(), Property::Null));
  CHECK(holds(fixtures::chain3(), Property::Semilattice));
  CHECK_FALSE(holds(fixtures::left_zero2(), Property::Semilattice));
  CHECK(holds(full_tf_monoid(3).result, Property::Regular));
  CHECK_FALSE(holds(full_tf_monoid(2).result, Property::Inverse));
}

TEST_CASE("zero-requiring properties need a zero", "[properties]") {
  CHECK_THROWS_AS(check_property(fixtures::left_zero2(), Property::ZeroSimple), NoZeroElement);
  CHECK(requires_zero(Property::CompletelyZeroSimple));
  CHECK_FALSE(requires_zero(Property::Simple));
  CHECK(holds(fixtures::semilattice2(), Property::ZeroSimple));
  CHECK(holds(fixtures::semilattice2(), Property::CompletelyZeroSimple));
  CHECK_FALSE(holds(fixtures::null2(), Property::ZeroSimple));
  CHECK_FALSE(holds(fixtures::chain3(), Property::ZeroSimple));
}

TEST_CASE("negative answers carry witnesses", "[properties][property]") {
  for (auto const& [name, S] : corpus_with_extras()) {
    INFO(name);
    auto const g = greens_structure(S);
    for (Property p : all_properties) {
      if (requires_zero(p) && !S.zero()) {
        continue;
      }
      auto const r = check_property(S, g, p);
      if (!r.holds) {
        CHECK_FALSE(r.witness.empty());
        for (Elem x : r.witness) {
          CHECK(x < S.size());
        }
      }
    }
  }
}

TEST_CASE("primitive idempotents", "[properties]") {
  auto const cs = fixtures::left_zero2();
  CHECK(primitive_idempotents(cs).elements() == idempotents(cs).elements());
  CHECK(primitive_idempotents(fixtures::semilattice2()).elements() == std::vector<Elem>{1});
  CHECK(primitive_idempotents(fixtures::chain3()).elements() == std::vector<Elem>{1});
}

TEST_CASE("local properties", "[properties]") {
  CHECK(is_locally(fixtures::chain3(), Property::Inverse).holds);
  CHECK(is_locally(fixtures::left_zero2(), Property::Group).holds);
  auto const T2 = is_locally(full_tf_monoid(2).result, Property::Inverse);
  CHECK_FALSE(T2.holds);
  CHECK(T2.witness == std::vector<Elem>{1});
}

TEST_CASE("definition cross-checks over the corpus", "[properties][property]") {
  for (auto const& [name, S] : corpus_with_extras()) {
    INFO(name);
    auto const g = greens_structure(S);
    auto       P = [&](Property p) { return check_property(S, g, p).holds; };
    auto const E = oracle::idempotents(S);

    CHECK(P(Property::Periodic));
    CHECK(P(Property::Regular) == oracle::regular(S));
    CHECK(P(Property::Band) == (E.size() == S.size()));

    bool commutative = true;
    for (Elem a = 0; a < S.size(); ++a) {
      for (Elem b = 0; b < S.size(); ++b) {
        commutative = commutative && S(a, b) == S(b, a);
      }
    }
    CHECK(P(Property::Semilattice) == (P(Property::Band) && commutative));

    // completely regular: every element lies in a subgroup
    bool cr = true;
    for (Elem a = 0; a < S.size(); ++a) {
      bool in_group = false;
      for (Elem e : E) {
        in_group = in_group || oracle::H(S, a, e);
      }
      cr = cr && in_group;
    }
    CHECK(P(Property::CompletelyRegular) == cr);

    // simple: one J-class; bisimple: one D-class
    CHECK(P(Property::Simple) == (g.class_count(GreenRelation::J) == 1));
    CHECK(P(Property::Bisimple) == (g.class_count(GreenRelation::D) == 1));

    // inverse: regular with commuting idempotents
    bool commuting = true;
    for (Elem e : E) {
      for (Elem f : E) {
        commuting = commuting && S(e, f) == S(f, e);
      }
    }
    CHECK(P(Property::Inverse) == (oracle::regular(S) && commuting));

    // cryptic: H is a congruence
    bool left_c = true, right_c = true;
    for (Elem a = 0; a < S.size(); ++a) {
      for (Elem b = 0; b < S.size(); ++b) {
        if (!oracle::H(S, a, b)) {
          continue;
        }
        for (Elem c = 0; c < S.size(); ++c) {
          left_c  = left_c && oracle::H(S, S(c, a), S(c, b));
          right_c = right_c && oracle::H(S, S(a, c), S(b, c));
        }
      }
    }
    CHECK(P(Property::LeftCryptic) == left_c);
    CHECK(P(Property::RightCryptic) == right_c);
    CHECK(P(Property::Cryptic) == (left_c && right_c));
  }
}

TEST_CASE("equivalent characterisations agree", "[properties][property]") {
  for (auto const& [name, S] : corpus_with_extras()) {
    INFO(name);
    auto const g = greens_structure(S);
    auto       P = [&](Property p) { return check_property(S, g, p).holds; };

    bool const all_primitive
        = primitive_idempotents(S, ZeroHandling::ignore_zero) == idempotents(S) && !idempotents(S).empty();
    bool const cs = P(Property::CompletelySimple);
    CHECK(cs == (P(Property::Simple) && all_primitive));
    CHECK(cs == (P(Property::Regular) && is_locally(S, Property::Group).holds));

    bool every_factor_zero_simple = true;
    bool every_factor_cs          = true;
    for (Elem a = 0; a < S.size(); ++a) {
      auto const f = principal_factor(S, g, a);
      every_factor_zero_simple = every_factor_zero_simple && f.kind == FactorKind::zero_simple;
      every_factor_cs = every_factor_cs && f.kind == FactorKind::zero_simple
                        && check_property(f.factor, Property::CompletelyZeroSimple).holds;
    }
    CHECK(P(Property::Semisimple) == every_factor_zero_simple);
    CHECK(P(Property::CompletelySemisimple) == every_factor_cs);

    bool const lg = P(Property::LeftGroup);
    CHECK(lg == left_group_by_cancellation(S));
    CHECK(lg == left_group_by_idempotents(S));
    CHECK(lg == left_group_by_structure(S));
    CHECK(P(Property::RightGroup) == left_group_by_idempotents(opposite(S)));

    if (P(Property::Inverse)) {
      CHECK(P(Property::Regular));
    }
    if (P(Property::Group)) {
      CHECK(lg);
      CHECK(P(Property::RightGroup));
    }
    if (P(Property::Null)) {
      CHECK(S.zero());
    }
    if (S.zero()) {
      if (P(Property::CompletelyZeroSimple)) {
        CHECK(P(Property::ZeroSimple));
      }
      if (P(Property::ZeroBisimple)) {
        CHECK(P(Property::ZeroSimple));
      }
    }
  }
}

TEST_CASE("periodicity", "[properties]") {
  auto const G = periodicity(fixtures::cyclic3());
  CHECK(G.index == std::vector<std::size_t>{1, 1, 1});
  CHECK(G.period == std::vector<std::size_t>{1, 3, 3});
  auto const N = periodicity(fixtures::null2());
  CHECK(N.index[0] == 2);
  CHECK(N.period[0] == 1);
}
