#include <catch_amalgamated.hpp>

#include <set>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "semiband/constructions.hpp"
#include "semiband/green.hpp"
#include "semiband/isomorphism.hpp"
#include "semiband/properties.hpp"

using namespace semiband;

namespace {
  oracle::Triple to_oracle(TripleElem const& x) {
    return {x.s, x.t, x.flag == Flag::sigma ? 0 : 1};
  }

  TripleElem triple(ConstructionBundle const& B, Elem i) {
    return std::get<TripleElem>(B.decode[i]);
  }

  // Products in the table agree with the semidirect product computed from
  // the action.
  void check_against_action(Semigroup const& S, ConstructionBundle const& B) {
    for (Elem i = 0; i < B.result.size(); ++i) {
      for (Elem j = 0; j < B.result.size(); ++j) {
        auto const want = oracle::act_multiply(S, to_oracle(triple(B, i)), to_oracle(triple(B, j)));
        REQUIRE(to_oracle(triple(B, B.result(i, j))) == want);
      }
    }
    CHECK_FALSE(associativity_failure(B.result));
  }

  std::vector<oracle::Triple> squared_idempotents(ConstructionBundle const& B) {
    std::vector<oracle::Triple> out;
    for (Elem i = 0; i < B.result.size(); ++i) {
      if (B.result(i, i) == i) {
        out.push_back(to_oracle(triple(B, i)));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<oracle::Triple> sorted(std::vector<TripleElem> const& xs) {
    std::vector<oracle::Triple> out;
    for (auto const& x : xs) {
      out.push_back(to_oracle(x));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_embedding(ConstructionBundle const& B) {
    return B.embedding && B.embedding->is_embedding();
  }
}  // namespace

TEST_CASE("full semidirect product", "[constructions][tr2]") {
  for (auto const& [name, S] : fixtures::corpus(3)) {
    INFO(name);
    auto const B = semidirect_TR2(S);
    CHECK(B.result.size() == 2 * S.size() * S.size());
    check_against_action(S, B);
    CHECK(squared_idempotents(B) == sorted(tr2_idempotents_formula(S)));
    for (Elem i = 0; i < B.result.size(); ++i) {
      CHECK(triple_index(S.size(), triple(B, i)) == i);
    }
  }
  auto const trivial = semidirect_TR2(fixtures::trivial());
  CHECK(trivial.result.size() == 2);
  CHECK(isomorphic(trivial.result, fixtures::right_zero2()));

  auto const SL = semidirect_TR2(fixtures::semilattice2());
  std::vector<oracle::Triple> want{{0, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 1}};
  std::sort(want.begin(), want.end());
  CHECK(squared_idempotents(SL) == want);
}

TEST_CASE("T(S) against the definition", "[constructions][T]") {
  for (auto const& [name, S] : fixtures::corpus(4)) {
    if (!is_idempotent_covered(S).covered) {
      CHECK_THROWS_AS(build_T(S), NotIdempotentCovered);
      continue;
    }
    INFO(name);
    auto const T = build_T(S);
    std::vector<oracle::Triple> carrier;
    for (auto const& d : T.decode) {
      carrier.push_back(to_oracle(std::get<TripleElem>(d)));
    }
    std::sort(carrier.begin(), carrier.end());
    REQUIRE(carrier == oracle::t_carrier(S));
    check_against_action(S, T);

    // closed form for E(T(S)), written out from the definitions
    std::vector<oracle::Triple> closed;
    for (Elem e : oracle::idempotents(S)) {
      for (Elem s = 0; s < S.size(); ++s) {
        if (S(s, e) == s) {
          closed.push_back({s, e, 0});
        }
        if (oracle::L(S, e, s)) {
          closed.push_back({e, s, 1});
        }
      }
    }
    std::sort(closed.begin(), closed.end());
    CHECK(squared_idempotents(T) == closed);
    CHECK(sorted(t_idempotents_formula(S, greens_structure(S))) == closed);

    CHECK(is_embedding(T));
    for (Elem s = 0; s < S.size(); ++s) {
      CHECK(triple(T, T.embedding->map()[s]) == TripleElem{s, s, Flag::sigma});
    }

    auto const d = depth_analysis(T.result);
    REQUIRE(d.kind == DepthKind::semiband);
    CHECK(*d.depth <= 4);

    for (Elem x = 0; x < T.result.size(); ++x) {
      auto const fs = t_factorization(S, greens_structure(S), triple(T, x));
      CHECK(fs.size() <= 4);
      Elem prod = no_elem;
      for (auto const& f : fs) {
        auto const at = T.find(f);
        REQUIRE(at);
        CHECK(T.result.is_idempotent(*at));
        prod = prod == no_elem ? *at : T.result(prod, *at);
      }
      CHECK(prod == x);
    }
  }
}

TEST_CASE("T(S) examples", "[constructions][T]") {
  auto const T = build_T(fixtures::semilattice2());
  CHECK(T.result.size() == 6);
  CHECK(idempotents(T.result).count() == 5);

  auto const trivial = build_T(fixtures::trivial());
  CHECK(trivial.result.size() == 2);
  CHECK(idempotents(trivial.result).count() == 2);
  CHECK(depth_analysis(trivial.result).depth == std::size_t{1});

  try {
    build_T(fixtures::null2());
    FAIL("null semigroup accepted");
  } catch (NotIdempotentCovered const& e) {
    CHECK(e.witness() == std::vector<Elem>{0});
  }
}

TEST_CASE("R(S) and L(S)", "[constructions][R]") {
  CHECK(build_R(fixtures::left_zero2()).result.size() == 8);
  CHECK(build_R(fixtures::left_zero2(), Side::left).result.size() == 4);

  auto const SL = build_R(fixtures::semilattice2());
  CHECK(SL.result.size() == 4);
  CHECK(check_property(SL.result, Property::Band).holds);

  for (auto const& G : {fixtures::cyclic2(), fixtures::cyclic3()}) {
    std::size_t const n = G.size();
    CHECK(build_R(G).result.size() == 2 * n * n);
    CHECK(build_R(G, Side::left).result.size() == 2 * n * n);
  }
  CHECK_THROWS_AS(build_R(fixtures::null2()), NotRegular);

  for (auto const& [name, S] : fixtures::corpus(4)) {
    if (!oracle::regular(S)) {
      continue;
    }
    INFO(name);
    auto const R = build_R(S);
    auto const T = build_T(S);
    check_against_action(S, R);
    // R(S) inside T(S) inside the full product
    for (Elem i = 0; i < R.result.size(); ++i) {
      auto const x = triple(R, i);
      CHECK(oracle::L(S, x.s, x.t));
      REQUIRE(T.find(x));
    }
    CHECK(is_embedding(R));
    CHECK(check_property(R.result, Property::Regular).holds);
    auto const E = idempotents(R.result);
    CHECK(set_product(R.result, E, E).count() == R.result.size());
    for (Elem x = 0; x < R.result.size(); ++x) {
      auto const fs = r_factorization(S, triple(R, x));
      REQUIRE(fs.size() == 2);
      auto const a = R.find(fs[0]), b = R.find(fs[1]);
      REQUIRE(a);
      REQUIRE(b);
      CHECK(R.result.is_idempotent(*a));
      CHECK(R.result.is_idempotent(*b));
      CHECK(R.result(*a, *b) == x);
    }
    for (Elem t = 0; t < S.size(); ++t) {
      Elem const u = inverse_of(S, t);
      CHECK(S(S(t, u), t) == t);
      CHECK(S(S(u, t), u) == u);
    }

    auto const L = build_R(S, Side::left);
    CHECK(is_embedding(L));
    auto const Ld = depth_analysis(L.result);
    CHECK(Ld.depth <= std::size_t{2});
    // |L(S)| = 2 * sum over R-classes of |class|^2
    std::size_t want = 0;
    for (Elem a = 0; a < S.size(); ++a) {
      for (Elem b = 0; b < S.size(); ++b) {
        want += oracle::R(S, a, b) ? 2 : 0;
      }
    }
    CHECK(L.result.size() == want);
  }
}

TEST_CASE("T*(S) and R*(S)", "[constructions][star]") {
  CHECK(build_star(fixtures::trivial(), StarKind::T).result.size() == 1);
  auto const sl = build_star(fixtures::semilattice2(), StarKind::T);
  CHECK(sl.result.size() == 5);
  CHECK(sl.result.zero());
  CHECK(std::holds_alternative<std::monostate>(sl.decode.back()));
  CHECK_THROWS_AS(build_star(fixtures::left_zero2(), StarKind::T), NoZeroElement);
  CHECK_THROWS_AS(build_star(fixtures::null2(), StarKind::R), NotRegular);

  for (auto const& [name, S] : fixtures::corpus(4)) {
    if (!S.zero() || !is_idempotent_covered(S)) {
      continue;
    }
    INFO(name);
    auto const T = build_star(S, StarKind::T);
    CHECK(is_embedding(T));
    CHECK(T.result.size() == build_T(S).result.size() - 1);
    if (oracle::regular(S)) {
      CHECK(is_embedding(build_star(S, StarKind::R)));
    }
  }
}

TEST_CASE("F(S) normal forms", "[constructions][F]") {
  CHECK(build_F(fixtures::trivial()).result.size() == 2);
  CHECK(build_F_without_one(fixtures::left_zero2()).result.size() == 17);
  CHECK_THROWS_AS(build_F_without_one(fixtures::semilattice2()), InvalidInput);

  for (auto const& [name, S] : fixtures::corpus(3)) {
    INFO(name);
    auto const F  = build_F(S);
    auto const& S1 = F.base;
    std::size_t const m = S1.size();
    CHECK(F.result.size() == 2 * m * m);
    if (S.is_monoid()) {
      CHECK(F.result.size() == 2 * S.size() * S.size());
    } else {
      std::size_t const n = S.size();
      CHECK(build_F_without_one(S).result.size() == 2 * n * n + 4 * n + 1);
    }
    CHECK_FALSE(associativity_failure(F.result));
    CHECK(is_embedding(F));

    Elem const one  = *S1.identity();
    auto       at   = [&](Elem s, Elem t, bool h) { return *F.find(FNormalForm{s, t, h}); };
    Elem const hbar = at(one, one, true);
    Elem const ibar = at(one, one, false);
    auto       bar  = [&](Elem s) { return at(s, one, false); };
    auto const& P   = F.result;
    CHECK(P.is_idempotent(hbar));
    CHECK(P(hbar, ibar) == ibar);
    CHECK(P(ibar, hbar) == hbar);
    for (Elem s = 0; s < m; ++s) {
      CHECK(P.is_idempotent(bar(s)));
      for (Elem t = 0; t < m; ++t) {
        CHECK(P(bar(s), bar(t)) == bar(s));
        CHECK(P(P(hbar, bar(s)), P(hbar, bar(t))) == P(hbar, bar(S1(s, t))));
        // (s h t)(u h v) = s h (tv)
        for (Elem u = 0; u < m; ++u) {
          for (Elem v = 0; v < m; ++v) {
            CHECK(P(at(s, t, false), at(u, v, false)) == at(s, S1(t, v), false));
          }
        }
      }
    }
    // normal form s h t is the word s . h . t
    for (Elem s = 0; s < m; ++s) {
      for (Elem t = 0; t < m; ++t) {
        CHECK(P(P(bar(s), hbar), bar(t)) == at(s, t, false));
        CHECK(P(P(P(bar(s), hbar), bar(t)), hbar) == at(s, t, true));
      }
    }
  }
}

TEST_CASE("A(S) and the maps psi", "[constructions][A]") {
  auto const SL = build_A(fixtures::semilattice2());
  CHECK(SL.bundle.result.size() == 6);
  CHECK(isomorphic(build_T(fixtures::semilattice2()).result, SL.bundle.result));
  CHECK(build_A(fixtures::trivial()).bundle.result.size() == 2);

  auto const L2 = build_A(fixtures::left_zero2());
  CHECK(L2.bundle.result.size() == 14);
  auto const L2a = build_A(fixtures::left_zero2(), AVariant::a1_general);
  CHECK(L2a.bundle.result.size() == 8);
  CHECK(L2a.psi_inverse.is_isomorphism());
  CHECK(isomorphic(L2a.bundle.result, build_T(fixtures::left_zero2()).result));

  CHECK_THROWS_AS(build_A(fixtures::semilattice2(), AVariant::a1_general), InvalidInput);
  CHECK_THROWS_AS(build_A(fixtures::left_zero2(), AVariant::a1_cr), NotAMonoid);
  CHECK_THROWS_AS(build_A(make_semigroup({{0, 1, 2}, {1, 1, 1}, {2, 1, 1}}), AVariant::a1_cr),
                  NotCompletelyRegular);

  for (auto const& [name, S] : fixtures::corpus(3)) {
    INFO(name);
    auto const A = build_A(S);
    REQUIRE(A.psi);
    CHECK(A.psi->is_isomorphism());
    CHECK(A.psi_inverse.is_isomorphism());
    auto const round = A.psi->then(A.psi_inverse);
    for (Elem x = 0; x < round.domain().size(); ++x) {
      CHECK(round(x) == x);
    }
    auto const back = A.psi_inverse.then(*A.psi);
    for (Elem x = 0; x < back.domain().size(); ++x) {
      CHECK(back(x) == x);
    }
    CHECK(is_embedding(A.bundle));
  }
}

TEST_CASE("Pastijn's subsemiband of a completely regular monoid", "[constructions][A]") {
  for (auto const& [name, S] : fixtures::corpus(4)) {
    if (!S.is_monoid() || !check_property(S, Property::CompletelyRegular).holds) {
      continue;
    }
    INFO(name);
    auto const A = build_A(S, AVariant::a1_cr);
    CHECK(A.psi_inverse.is_isomorphism());
    CHECK(A.bundle.result.size() == build_R(S).result.size());
    CHECK(depth_analysis(A.bundle.result).depth <= std::size_t{2});
  }
}

TEST_CASE("Rees matrix semigroup", "[constructions][Phi]") {
  CHECK(build_Phi(fixtures::trivial()).bundle.result.size() == 2);
  for (auto const& [name, S] : fixtures::corpus(3)) {
    INFO(name);
    auto const Phi = build_Phi(S);
    auto const& B  = Phi.bundle;
    std::size_t const m = B.base.size();
    CHECK(B.result.size() == 2 * m * m);
    CHECK(Phi.from_F.is_isomorphism());
    CHECK(is_embedding(B));
    for (Elem x = 0; x < B.result.size(); ++x) {
      auto const a = std::get<ReesTriple>(B.decode[x]);
      if (a.lambda != Flag::sigma) {
        continue;
      }
      for (Elem y = 0; y < B.result.size(); ++y) {
        auto const b = std::get<ReesTriple>(B.decode[y]);
        CHECK(std::get<ReesTriple>(B.decode[B.result(x, y)])
              == ReesTriple{a.i, B.base(a.a, b.a), b.lambda});
      }
    }
  }
}

TEST_CASE("the s -> (1,s,sigma) assignment is not a homomorphism from F(S)",
          "[constructions][Phi]") {
  // In F(S) the generators satisfy st = s. Sending each generator s to
  // (1,s,sigma) breaks this as soon as st != s in S^1.
  auto const S   = fixtures::semilattice2();
  auto const Phi = build_Phi(S).bundle;
  Elem const one = *Phi.base.identity();
  auto       at  = [&](Elem i, Elem a) { return *Phi.find(ReesTriple{i, a, Flag::sigma}); };
  Elem const s = 1, t = 0;  // st = 0 != s
  REQUIRE(Phi.base(s, t) != s);
  CHECK(Phi.result(at(one, s), at(one, t)) != at(one, s));
  // the convention s -> (s,1,sigma) used by from_F respects it
  CHECK(Phi.result(at(s, one), at(t, one)) == at(s, one));
  CHECK(Phi.notes.find("does not respect") != std::string::npos);
}

TEST_CASE("labels", "[constructions]") {
  auto const SL = fixtures::semilattice2();
  CHECK(describe(Decoded{TripleElem{0, 1, Flag::tau}}, SL) == "(0,1,τ)");
  CHECK(describe(Decoded{std::monostate{}}, SL) == "0");
  CHECK(describe(Decoded{ReesTriple{1, 0, Flag::sigma}}, SL) == "[1,0,σ]");
  CHECK(describe(Decoded{FNormalForm{1, 0, true}}, SL) == "1.h.0.h");
}
