#include "semiband/constructions.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "semiband/ideals.hpp"

namespace semiband {

  namespace {
    template <typename... Fs>
    struct overloaded : Fs... {
      using Fs::operator()...;
    };
    template <typename... Fs>
    overloaded(Fs...) -> overloaded<Fs...>;

    std::vector<std::string> labels_of(std::vector<Decoded> const& decode, Semigroup const& base) {
      std::vector<std::string> out;
      out.reserve(decode.size());
      for (auto const& d : decode) {
        out.push_back(describe(d, base));
      }
      return out;
    }

    // The subsemigroup of the full triple product on `members`, in the
    // given order.
    ConstructionBundle triples(Semigroup const&               S,
                               std::vector<TripleElem> const& members,
                               std::string                    notes) {
      std::size_t const n = S.size();
      std::size_t const N = members.size();
      std::vector<Elem> pos(2 * n * n, no_elem);
      for (Elem i = 0; i < N; ++i) {
        pos[triple_index(n, members[i])] = i;
      }
      std::vector<Elem> table(N * N);
      for (Elem i = 0; i < N; ++i) {
        for (Elem j = 0; j < N; ++j) {
          Elem const p = pos[triple_index(n, multiply(S, members[i], members[j]))];
          if (p == no_elem) {
            throw InternalError("triple filter is not closed under the product");
          }
          table[i * N + j] = p;
        }
      }
      std::vector<Decoded> decode(members.begin(), members.end());
      auto                 labels = labels_of(decode, S);
      Semigroup            result = make_semigroup(N, std::move(table), std::move(labels));
      std::vector<Elem>    phi(n);
      for (Elem s = 0; s < n; ++s) {
        phi[s] = pos[triple_index(n, {s, s, Flag::sigma})];
        if (phi[s] == no_elem) {
          throw InternalError("diagonal triple missing from construction");
        }
      }
      SemigroupHom embedding(S, result, std::move(phi));
      return {result, std::move(decode), std::move(embedding), std::move(notes), S};
    }

    std::optional<Elem> non_regular(Semigroup const& S) {
      for (Elem a = 0; a < S.size(); ++a) {
        bool found = false;
        for (Elem x = 0; x < S.size() && !found; ++x) {
          found = S(S(a, x), a) == a;
        }
        if (!found) {
          return a;
        }
      }
      return std::nullopt;
    }

    // Some a in S^1 with at = s, given s in S^1 t; no_elem stands for the
    // identity of S^1 when S itself has none.
    Elem left_factor(Semigroup const& S, Elem s, Elem t) {
      for (Elem a = 0; a < S.size(); ++a) {
        if (S(a, t) == s) {
          return a;
        }
      }
      if (s == t) {
        return no_elem;
      }
      throw InternalError(fmt::format("{} is not in S^1 {}", s, t));
    }

    Elem right_unit(Semigroup const& S, Elem t) {
      for (Elem e = 0; e < S.size(); ++e) {
        if (S.is_idempotent(e) && S(t, e) == t) {
          return e;
        }
      }
      throw NotIdempotentCovered(fmt::format("{} has no idempotent right unit", t), {t});
    }

    Elem left_unit(Semigroup const& S, Elem t) {
      for (Elem f = 0; f < S.size(); ++f) {
        if (S.is_idempotent(f) && S(f, t) == t) {
          return f;
        }
      }
      throw NotIdempotentCovered(fmt::format("{} has no idempotent left unit", t), {t});
    }

    ConstructionBundle f_bundle(Semigroup const& S) {
      Semigroup const   S1  = adjoin_identity(S);
      std::size_t const m   = S1.size();
      std::size_t const N   = 2 * m * m;
      Elem const        one = *S1.identity();
      auto index = [m](FNormalForm const& x) {
        return static_cast<Elem>((x.s * m + x.t) * 2 + (x.hsuffix ? 1 : 0));
      };
      std::vector<Decoded> decode(N);
      std::vector<FNormalForm> forms(N);
      for (Elem s = 0; s < m; ++s) {
        for (Elem t = 0; t < m; ++t) {
          for (bool h : {false, true}) {
            FNormalForm const x{s, t, h};
            forms[index(x)]  = x;
            decode[index(x)] = x;
          }
        }
      }
      std::vector<Elem> table(N * N);
      for (Elem i = 0; i < N; ++i) {
        for (Elem j = 0; j < N; ++j) {
          table[i * N + j] = index(f_multiply(S1, forms[i], forms[j]));
        }
      }
      auto      labels = labels_of(decode, S1);
      Semigroup F      = make_semigroup(N, std::move(table), std::move(labels));
      std::vector<Elem> emb(S.size());
      for (Elem s = 0; s < S.size(); ++s) {
        emb[s] = index({one, s, false});
      }
      SemigroupHom embedding(S, F, std::move(emb));
      return {F,
              std::move(decode),
              std::move(embedding),
              "normal forms s.h.t and s.h.t.h over S^1; generators h = (1,1,h-suffixed), "
              "1 = (1,1,plain), s = (s,1,plain)",
              S1};
    }

    ConstructionBundle restrict(ConstructionBundle const& b, ElementSet const& keep) {
      auto              sub = induced_subsemigroup(b.result, keep);
      std::vector<Elem> pos(b.result.size(), no_elem);
      auto const&       inc = sub.inclusion.map();
      std::vector<Decoded> decode;
      for (Elem i = 0; i < inc.size(); ++i) {
        pos[inc[i]] = i;
        decode.push_back(b.decode[inc[i]]);
      }
      std::optional<SemigroupHom> embedding;
      if (b.embedding) {
        std::vector<Elem> map;
        for (Elem x : b.embedding->map()) {
          if (pos[x] == no_elem) {
            throw InternalError("embedding leaves the restricted construction");
          }
          map.push_back(pos[x]);
        }
        embedding.emplace(b.embedding->domain(), sub.semigroup, std::move(map));
      }
      return {sub.semigroup, std::move(decode), std::move(embedding), b.notes, b.base};
    }
  }  // namespace

  char const* to_string(Flag f) noexcept {
    return f == Flag::sigma ? "σ" : "τ";
  }

  std::optional<Elem> ConstructionBundle::find(Decoded const& d) const {
    auto it = std::find(decode.begin(), decode.end(), d);
    if (it == decode.end()) {
      return std::nullopt;
    }
    return static_cast<Elem>(it - decode.begin());
  }

  std::string describe(Decoded const& d, Semigroup const& base) {
    return std::visit(
        overloaded{
            [](std::monostate) { return std::string("0"); },
            [&](Elem x) { return base.label(x); },
            [&](TripleElem const& x) {
              return fmt::format("({},{},{})", base.label(x.s), base.label(x.t), to_string(x.flag));
            },
            [&](FNormalForm const& x) {
              return fmt::format(
                  "{}.h.{}{}", base.label(x.s), base.label(x.t), x.hsuffix ? ".h" : "");
            },
            [&](ReesTriple const& x) {
              return fmt::format(
                  "[{},{},{}]", base.label(x.i), base.label(x.a), to_string(x.lambda));
            },
            [](Transformation const& x) {
              std::string out = "[";
              for (std::size_t i = 0; i < x.degree(); ++i) {
                out += fmt::format("{}{}", i == 0 ? "" : ",", x[static_cast<Elem>(i)]);
              }
              return out + "]";
            }},
        d);
  }

  TripleElem multiply(Semigroup const& S, TripleElem const& x, TripleElem const& y) {
    if (x.flag == Flag::sigma) {
      return {S(x.s, y.t), S(x.t, y.t), y.flag};
    }
    return {S(x.s, y.s), S(x.t, y.s), y.flag};
  }

  ConstructionBundle semidirect_TR2(Semigroup const& S) {
    std::vector<TripleElem> all;
    for (Elem s = 0; s < S.size(); ++s) {
      for (Elem t = 0; t < S.size(); ++t) {
        all.push_back({s, t, Flag::sigma});
        all.push_back({s, t, Flag::tau});
      }
    }
    return triples(S, all, "all triples (s,t,a)");
  }

  std::vector<TripleElem> tr2_idempotents_formula(Semigroup const& S) {
    std::vector<TripleElem> out;
    for (Elem e : idempotents(S).elements()) {
      for (Elem s = 0; s < S.size(); ++s) {
        if (S(s, e) == s) {
          out.push_back({s, e, Flag::sigma});
          out.push_back({e, s, Flag::tau});
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  ConstructionBundle build_T(Semigroup const& S) {
    return build_T(S, greens_structure(S));
  }

  ConstructionBundle build_T(Semigroup const& S, GreensStructure const& g) {
    if (auto c = is_idempotent_covered(S); !c) {
      throw NotIdempotentCovered(
          fmt::format("{} is not covered by idempotents", S.label(*c.witness)), {*c.witness});
    }
    std::vector<TripleElem> members;
    for (Elem s = 0; s < S.size(); ++s) {
      for (Elem t = 0; t < S.size(); ++t) {
        if (g.left_div(s, t)) {
          members.push_back({s, t, Flag::sigma});
          members.push_back({s, t, Flag::tau});
        }
      }
    }
    auto bundle = triples(S, members, "triples (s,t,a) with s in S^1 t; s -> (s,s,σ)");

    std::vector<TripleElem> found;
    for (Elem x : idempotents(bundle.result).elements()) {
      found.push_back(std::get<TripleElem>(bundle.decode[x]));
    }
    std::sort(found.begin(), found.end());
    if (found != t_idempotents_formula(S, g)) {
      throw InternalError("idempotents of T(S) disagree with the closed form");
    }
    return bundle;
  }

  std::vector<TripleElem> t_idempotents_formula(Semigroup const& S, GreensStructure const& g) {
    std::vector<TripleElem> out;
    for (Elem e : idempotents(S).elements()) {
      for (Elem s = 0; s < S.size(); ++s) {
        if (S(s, e) == s) {
          out.push_back({s, e, Flag::sigma});
        }
        if (g.L[e] == g.L[s]) {
          out.push_back({e, s, Flag::tau});
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<TripleElem> t_factorization(Semigroup const&       S,
                                          GreensStructure const& g,
                                          TripleElem const&      x) {
    if (!g.left_div(x.s, x.t)) {
      throw InvalidInput("triple does not belong to T(S)");
    }
    // (s,t,sigma) = (af,f,sigma)(f,f,tau)(t,e,sigma) with s = at, te = t,
    // ft = t; (s,t,tau) = (s,t,sigma)(e,e,tau).
    Elem const e  = right_unit(S, x.t);
    Elem const f  = left_unit(S, x.t);
    Elem const a  = left_factor(S, x.s, x.t);
    Elem const af = a == no_elem ? f : S(a, f);
    std::vector<TripleElem> out{{af, f, Flag::sigma}, {f, f, Flag::tau}, {x.t, e, Flag::sigma}};
    if (x.flag == Flag::tau) {
      out.push_back({e, e, Flag::tau});
    }
    return out;
  }

  Elem inverse_of(Semigroup const& S, Elem t) {
    for (Elem x = 0; x < S.size(); ++x) {
      if (S(S(t, x), t) == t) {
        return S(S(x, t), x);
      }
    }
    throw NotRegular(fmt::format("{} is not regular", S.label(t)), {t});
  }

  std::vector<TripleElem> r_factorization(Semigroup const& S, TripleElem const& x) {
    if (x.flag == Flag::tau) {
      Elem const ti = inverse_of(S, x.t);
      return {{S(x.s, ti), S(x.t, ti), Flag::sigma}, {S(ti, x.t), x.t, Flag::tau}};
    }
    Elem const si = inverse_of(S, x.s);
    return {{S(x.s, si), S(x.t, si), Flag::tau}, {x.s, S(si, x.s), Flag::sigma}};
  }

  ConstructionBundle build_R(Semigroup const& S, Side side) {
    return build_R(S, greens_structure(S), side);
  }

  ConstructionBundle build_R(Semigroup const& S, GreensStructure const& g, Side side) {
    if (side == Side::left) {
      Semigroup const op  = opposite(S);
      auto            r   = build_R(op, greens_structure(op), Side::right);
      Semigroup       res = opposite(r.result);
      SemigroupHom    emb(S, res, r.embedding->map());
      return {res,
              std::move(r.decode),
              std::move(emb),
              "left-right dual: R(S^op) with the product reversed; triples read in S^op",
              op};
    }
    if (auto a = non_regular(S)) {
      throw NotRegular(fmt::format("{} is not regular", S.label(*a)), {*a});
    }
    std::vector<TripleElem> members;
    for (Elem s = 0; s < S.size(); ++s) {
      for (Elem t = 0; t < S.size(); ++t) {
        if (g.L[s] == g.L[t]) {
          members.push_back({s, t, Flag::sigma});
          members.push_back({s, t, Flag::tau});
        }
      }
    }
    return triples(S, members, "triples (s,t,a) with s L t; s -> (s,s,σ)");
  }

  ConstructionBundle build_star(Semigroup const& S, StarKind which) {
    auto const z = S.zero();
    if (!z) {
      throw NoZeroElement("the star constructions need a zero");
    }
    auto const g = greens_structure(S);
    auto b = which == StarKind::T ? build_T(S, g) : build_R(S, g, Side::right);
    ElementSet kernel(b.result.size());
    kernel.insert(*b.find(TripleElem{*z, *z, Flag::sigma}));
    kernel.insert(*b.find(TripleElem{*z, *z, Flag::tau}));
    auto q = rees_quotient(b.result, kernel);

    std::vector<Decoded> decode(q.semigroup.size());
    for (Elem x = 0; x < b.result.size(); ++x) {
      if (!kernel.contains(x)) {
        decode[q.projection(x)] = b.decode[x];
      }
    }
    decode.back() = std::monostate{};
    SemigroupHom emb = b.embedding->then(q.projection);
    return {q.semigroup,
            std::move(decode),
            std::move(emb),
            fmt::format("{}(S) with {{(0,0,σ),(0,0,τ)}} collapsed to 0",
                        which == StarKind::T ? "T" : "R"),
            S};
  }

  FNormalForm f_multiply(Semigroup const& S1, FNormalForm const& x, FNormalForm const& y) {
    Elem const mid = x.hsuffix ? S1(S1(x.t, y.s), y.t) : S1(x.t, y.t);
    return {x.s, mid, y.hsuffix};
  }

  ConstructionBundle build_F(Semigroup const& S) {
    return f_bundle(S);
  }

  ConstructionBundle build_F_without_one(Semigroup const& S) {
    if (S.is_monoid()) {
      throw InvalidInput("F(S) minus its identity generator is only closed when S is not a monoid");
    }
    auto       F   = f_bundle(S);
    Elem const one = *F.base.identity();
    ElementSet keep = ElementSet::all(F.result.size());
    keep.erase(*F.find(FNormalForm{one, one, false}));
    auto out  = restrict(F, keep);
    out.notes = "F(S) without the generator 1 = (1,1,plain)";
    return out;
  }

  ABuild build_A(Semigroup const& S, AVariant variant) {
    auto              F  = f_bundle(S);
    Semigroup const&  S1 = F.base;
    std::size_t const m  = S1.size();
    Elem const        one = *S1.identity();

    auto rep_key = [&](FNormalForm const& x) {
      return TripleElem{S1(x.s, x.t), x.t, x.hsuffix ? Flag::tau : Flag::sigma};
    };
    std::vector<std::size_t> key(F.result.size());
    for (Elem x = 0; x < F.result.size(); ++x) {
      key[x] = triple_index(m, rep_key(std::get<FNormalForm>(F.decode[x])));
    }
    auto q = quotient_by_partition(F.result, key);

    std::vector<Decoded> decode(q.semigroup.size());
    std::vector<bool>    seen(q.semigroup.size(), false);
    for (Elem x = 0; x < F.result.size(); ++x) {
      Elem const c = q.projection(x);
      if (!seen[c]) {
        seen[c]   = true;
        decode[c] = F.decode[x];
      }
    }
    auto f_index = [&](FNormalForm const& x) {
      return static_cast<Elem>((x.s * m + x.t) * 2 + (x.hsuffix ? 1 : 0));
    };
    std::vector<Elem> emb(S.size());
    for (Elem s = 0; s < S.size(); ++s) {
      emb[s] = q.projection(f_index({one, s, false}));
    }
    ConstructionBundle A{q.semigroup,
                         decode,
                         SemigroupHom(S, q.semigroup, emb),
                         "F(S) modulo the kernel of (s,t,flag) -> (st,t,flag); s -> (1,s,plain)",
                         S1};

    if (variant == AVariant::full) {
      auto              T1 = build_T(S1);
      std::vector<Elem> inv(q.semigroup.size());
      for (Elem c = 0; c < q.semigroup.size(); ++c) {
        inv[c] = *T1.find(rep_key(std::get<FNormalForm>(decode[c])));
      }
      std::vector<Elem> psi(T1.result.size());
      for (Elem x = 0; x < T1.result.size(); ++x) {
        auto const tr = std::get<TripleElem>(T1.decode[x]);
        Elem       a  = left_factor(S1, tr.s, tr.t);
        psi[x] = q.projection(f_index({a, tr.t, tr.flag == Flag::tau}));
      }
      SemigroupHom psi_inv(q.semigroup, T1.result, std::move(inv));
      SemigroupHom psi_hom(T1.result, q.semigroup, std::move(psi));
      return {std::move(A), std::move(psi_hom), std::move(psi_inv), std::move(T1)};
    }

    ElementSet         keep(q.semigroup.size());
    ConstructionBundle target = A;
    std::string        notes;
    if (variant == AVariant::a1_general) {
      if (S.is_monoid()) {
        throw InvalidInput("the general A_1 is defined for semigroups without identity");
      }
      target = build_T(S);
      for (Elem a = 0; a < m; ++a) {
        for (Elem s = 0; s < S.size(); ++s) {
          keep.insert(q.projection(f_index({a, s, false})));
          keep.insert(q.projection(f_index({a, s, true})));
        }
      }
      notes = "A_1: classes of a.h.s and a.h.s.h with a in S^1, s in S";
    } else {
      if (!S.is_monoid()) {
        throw NotAMonoid("A_1 for completely regular semigroups needs a monoid");
      }
      auto const g = greens_structure(S);
      for (Elem a = 0; a < S.size(); ++a) {
        if (g.H[a] != g.H[S(a, a)]) {
          throw NotCompletelyRegular(fmt::format("{} is not in a subgroup", S.label(a)), {a});
        }
      }
      target = build_R(S, g, Side::right);
      for (Elem s = 0; s < S.size(); ++s) {
        for (Elem t = 0; t < S.size(); ++t) {
          if (g.L[s] == g.L[t]) {
            keep.insert(q.projection(f_index({s, t, false})));
            keep.insert(q.projection(f_index({s, t, true})));
          }
        }
      }
      notes = "A_1: classes of s.h.t and s.h.t.h with s L t";
    }
    auto a1   = restrict(A, keep);
    a1.notes  = notes;
    std::vector<Elem> inv(a1.result.size());
    for (Elem c = 0; c < a1.result.size(); ++c) {
      auto const tr = rep_key(std::get<FNormalForm>(a1.decode[c]));
      auto const at = target.find(tr);
      if (!at) {
        throw InternalError("A_1 class outside the target construction");
      }
      inv[c] = *at;
    }
    SemigroupHom psi_inv(a1.result, target.result, std::move(inv));
    return {std::move(a1), std::nullopt, std::move(psi_inv), std::move(target)};
  }

  PhiBuild build_Phi(Semigroup const& S) {
    auto              F  = f_bundle(S);
    Semigroup const&  S1 = F.base;
    std::size_t const m  = S1.size();
    std::size_t const N  = 2 * m * m;
    Elem const        one = *S1.identity();
    auto index = [m](ReesTriple const& x) {
      return static_cast<Elem>((x.i * m + x.a) * 2 + static_cast<Elem>(x.lambda));
    };
    std::vector<ReesTriple> elems(N);
    std::vector<Decoded>    decode(N);
    for (Elem i = 0; i < m; ++i) {
      for (Elem a = 0; a < m; ++a) {
        for (Flag l : {Flag::sigma, Flag::tau}) {
          ReesTriple const x{i, a, l};
          elems[index(x)]  = x;
          decode[index(x)] = x;
        }
      }
    }
    std::vector<Elem> table(N * N);
    for (Elem x = 0; x < N; ++x) {
      for (Elem y = 0; y < N; ++y) {
        auto const& p = elems[x];
        auto const& r = elems[y];
        Elem const  q = p.lambda == Flag::sigma ? one : r.i;
        table[x * N + y] = index({p.i, S1(S1(p.a, q), r.a), r.lambda});
      }
    }
    auto      labels = labels_of(decode, S1);
    Semigroup Phi    = make_semigroup(N, std::move(table), std::move(labels));

    std::vector<Elem> from_f(N);
    for (Elem x = 0; x < N; ++x) {
      auto const& f = std::get<FNormalForm>(F.decode[x]);
      from_f[x]     = index({f.s, f.t, f.hsuffix ? Flag::tau : Flag::sigma});
    }
    std::vector<Elem> emb(S.size());
    for (Elem s = 0; s < S.size(); ++s) {
      emb[s] = index({one, s, Flag::sigma});
    }
    ConstructionBundle bundle{
        Phi,
        std::move(decode),
        SemigroupHom(S, Phi, std::move(emb)),
        "Rees matrix semigroup over S^1 with q(σ,j) = 1, q(τ,j) = j; from F(S): "
        "h -> [1,1,τ], s -> [s,1,σ]. The assignment s -> [1,s,σ] does not respect "
        "the relation st = s of F(S)",
        S1};
    return {std::move(bundle), SemigroupHom(F.result, Phi, std::move(from_f))};
  }

}  // namespace semiband
