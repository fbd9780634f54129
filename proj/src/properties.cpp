#include "semiband/properties.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include <fmt/format.h>

#include "semiband/ideals.hpp"

namespace semiband {

  namespace {
    constexpr std::array<std::pair<Property, std::string_view>, 21> names{{
        {Property::Regular, "Regular"},
        {Property::Periodic, "Periodic"},
        {Property::CompletelyRegular, "CompletelyRegular"},
        {Property::Simple, "Simple"},
        {Property::Bisimple, "Bisimple"},
        {Property::ZeroSimple, "ZeroSimple"},
        {Property::ZeroBisimple, "ZeroBisimple"},
        {Property::CompletelySimple, "CompletelySimple"},
        {Property::CompletelyZeroSimple, "CompletelyZeroSimple"},
        {Property::Null, "Null"},
        {Property::Semisimple, "Semisimple"},
        {Property::CompletelySemisimple, "CompletelySemisimple"},
        {Property::LeftCryptic, "LeftCryptic"},
        {Property::RightCryptic, "RightCryptic"},
        {Property::Cryptic, "Cryptic"},
        {Property::Group, "Group"},
        {Property::LeftGroup, "LeftGroup"},
        {Property::RightGroup, "RightGroup"},
        {Property::Band, "Band"},
        {Property::Semilattice, "Semilattice"},
        {Property::Inverse, "Inverse"},
    }};

    PropertyResult fail(std::vector<Elem> witness, std::string detail) {
      return {false, std::move(witness), std::move(detail)};
    }

    PropertyResult ok(std::string detail = {}) {
      return {true, {}, std::move(detail)};
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

    // Two elements in different classes, or nothing when there is one class.
    std::optional<std::pair<Elem, Elem>> split(GreensStructure const& g, GreenRelation k) {
      auto const& c = g.classes(k);
      for (Elem y = 1; y < c.size(); ++y) {
        if (c[y] != c[0]) {
          return std::make_pair(Elem{0}, y);
        }
      }
      return std::nullopt;
    }

    PropertyResult single_class(GreensStructure const& g, GreenRelation k, char const* what) {
      if (auto s = split(g, k)) {
        return fail({s->first, s->second},
                    fmt::format("{} and {} lie in different {}-classes", s->first, s->second, what));
      }
      return ok();
    }

    Elem require_zero(Semigroup const& S, Property p) {
      if (!S.zero()) {
        throw NoZeroElement(fmt::format("{} requires a semigroup with zero", to_string(p)));
      }
      return *S.zero();
    }

    // {0} and S \ {0} are the only K-classes, and S^2 != {0}.
    PropertyResult zero_two_classes(Semigroup const&       S,
                                    GreensStructure const& g,
                                    GreenRelation          k,
                                    Property               p) {
      Elem const z = require_zero(S, p);
      bool       null = true;
      for (Elem a = 0; a < S.size() && null; ++a) {
        for (Elem b = 0; b < S.size() && null; ++b) {
          null = S(a, b) == z;
        }
      }
      if (null) {
        return fail({z}, "S^2 = {0}: the semigroup is null");
      }
      auto const& c = g.classes(k);
      Elem        first = no_elem;
      for (Elem x = 0; x < S.size(); ++x) {
        if (x == z) {
          continue;
        }
        if (first == no_elem) {
          first = x;
        } else if (c[x] != c[first]) {
          return fail({first, x},
                      fmt::format("non-zero elements {} and {} lie in different {}-classes",
                                  first,
                                  x,
                                  to_string(k)));
        }
      }
      return ok();
    }

    PropertyResult cryptic(Semigroup const& S, GreensStructure const& g, bool left, bool right) {
      for (Elem a = 0; a < S.size(); ++a) {
        for (Elem b = 0; b < S.size(); ++b) {
          if (a == b || g.H[a] != g.H[b]) {
            continue;
          }
          for (Elem c = 0; c < S.size(); ++c) {
            if (left && g.H[S(c, a)] != g.H[S(c, b)]) {
              return fail({c, a, b},
                          fmt::format("{0} H {1} but {2}{0} and {2}{1} are not H-related", a, b, c));
            }
            if (right && g.H[S(a, c)] != g.H[S(b, c)]) {
              return fail({a, b, c},
                          fmt::format("{0} H {1} but {0}{2} and {1}{2} are not H-related", a, b, c));
            }
          }
        }
      }
      return ok();
    }

    PropertyResult idempotents_form(Semigroup const& S, bool left_zero) {
      if (auto a = non_regular(S)) {
        return fail({*a}, fmt::format("{} is not regular", *a));
      }
      auto const E = idempotents(S).elements();
      for (Elem e : E) {
        for (Elem f : E) {
          Elem const expect = left_zero ? e : f;
          if (S(e, f) != expect) {
            return fail({e, f},
                        fmt::format("idempotents {}, {} do not multiply as a {}-zero band",
                                    e,
                                    f,
                                    left_zero ? "left" : "right"));
          }
        }
      }
      return ok();
    }

    PropertyResult principal_factors(Semigroup const& S, GreensStructure const& g, bool complete) {
      std::vector<bool> seen(g.class_count(GreenRelation::J), false);
      for (Elem a = 0; a < S.size(); ++a) {
        if (seen[g.J[a]]) {
          continue;
        }
        seen[g.J[a]]  = true;
        auto const pf = principal_factor(S, g, a);
        if (pf.kind == FactorKind::null) {
          return fail({a}, fmt::format("principal factor of {} is null", a));
        }
        if (complete && primitive_idempotents(pf.factor).empty()) {
          return fail({a},
                      fmt::format("principal factor of {} has no primitive idempotent", a));
        }
      }
      return ok();
    }
  }  // namespace

  std::string_view to_string(Property p) noexcept {
    for (auto const& [q, name] : names) {
      if (q == p) {
        return name;
      }
    }
    return "?";
  }

  std::optional<Property> property_from_string(std::string_view name) {
    for (auto const& [q, n] : names) {
      if (n == name) {
        return q;
      }
    }
    return std::nullopt;
  }

  bool requires_zero(Property p) noexcept {
    return p == Property::ZeroSimple || p == Property::ZeroBisimple
           || p == Property::CompletelyZeroSimple;
  }

  ElementSet primitive_idempotents(Semigroup const& S, ZeroHandling z) {
    std::optional<Elem> const zero = z == ZeroHandling::use_zero ? S.zero() : std::nullopt;
    auto const                E    = idempotents(S).elements();
    ElementSet                out(S.size());
    for (Elem e : E) {
      if (e == zero) {
        continue;
      }
      bool primitive = true;
      for (Elem f : E) {
        if (f != zero && f != e && S(e, f) == f && S(f, e) == f) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        out.insert(e);
      }
    }
    return out;
  }

  Periodicity periodicity(Semigroup const& S) {
    Periodicity p;
    for (Elem x = 0; x < S.size(); ++x) {
      std::vector<Elem> powers{x};
      while (true) {
        Elem const next = S(powers.back(), x);
        auto const it   = std::find(powers.begin(), powers.end(), next);
        if (it != powers.end()) {
          auto const m = static_cast<std::size_t>(it - powers.begin()) + 1;
          p.index.push_back(m);
          p.period.push_back(powers.size() + 1 - m);
          break;
        }
        powers.push_back(next);
      }
    }
    return p;
  }

  PropertyResult check_property(Semigroup const& S, Property p) {
    return check_property(S, greens_structure(S), p);
  }

  PropertyResult check_property(Semigroup const& S, GreensStructure const& g, Property p) {
    switch (p) {
      case Property::Regular: {
        if (auto a = non_regular(S)) {
          return fail({*a}, fmt::format("no x with {0}x{0} = {0}", *a));
        }
        return ok();
      }
      case Property::Periodic: {
        // Every cyclic subsemigroup of a finite semigroup is finite, hence
        // contains an idempotent; record the largest index and period.
        auto const per = periodicity(S);
        for (Elem x = 0; x < S.size(); ++x) {
          Elem y = x;
          for (std::size_t i = 1; i < per.index[x]; ++i) {
            y = S(y, x);
          }
          bool has_idem = false;
          for (std::size_t i = 0; i < per.period[x] && !has_idem; ++i) {
            has_idem = S.is_idempotent(y);
            y        = S(y, x);
          }
          if (!has_idem) {
            return fail({x}, fmt::format("<{}> contains no idempotent", x));
          }
        }
        return ok(fmt::format("max index {}, max period {}",
                              *std::max_element(per.index.begin(), per.index.end()),
                              *std::max_element(per.period.begin(), per.period.end())));
      }
      case Property::CompletelyRegular: {
        for (Elem a = 0; a < S.size(); ++a) {
          if (g.H[a] != g.H[S(a, a)]) {
            return fail({a}, fmt::format("{0} and {0}^2 are not H-related", a));
          }
        }
        return ok();
      }
      case Property::Simple: return single_class(g, GreenRelation::J, "J");
      case Property::Bisimple: return single_class(g, GreenRelation::D, "D");
      case Property::ZeroSimple: return zero_two_classes(S, g, GreenRelation::J, p);
      case Property::ZeroBisimple: {
        auto r = zero_two_classes(S, g, GreenRelation::J, p);
        if (!r) {
          return r;
        }
        return zero_two_classes(S, g, GreenRelation::D, p);
      }
      case Property::CompletelySimple: {
        auto r = single_class(g, GreenRelation::J, "J");
        if (!r) {
          return r;
        }
        if (primitive_idempotents(S, ZeroHandling::ignore_zero).empty()) {
          return fail({0}, "simple but without a primitive idempotent");
        }
        return ok();
      }
      case Property::CompletelyZeroSimple: {
        auto r = zero_two_classes(S, g, GreenRelation::J, p);
        if (!r) {
          return r;
        }
        if (primitive_idempotents(S, ZeroHandling::use_zero).empty()) {
          return fail({*S.zero()}, "0-simple but without a primitive idempotent");
        }
        return ok();
      }
      case Property::Null: {
        Elem const c = S(0, 0);
        for (Elem a = 0; a < S.size(); ++a) {
          for (Elem b = 0; b < S.size(); ++b) {
            if (S(a, b) != c) {
              return fail({a, b}, fmt::format("{}{} differs from {}", a, b, c));
            }
          }
        }
        if (S.zero() != c) {
          return fail({c}, "constant product is not a zero");
        }
        return ok();
      }
      case Property::Semisimple: return principal_factors(S, g, false);
      case Property::CompletelySemisimple: return principal_factors(S, g, true);
      case Property::LeftCryptic: return cryptic(S, g, true, false);
      case Property::RightCryptic: return cryptic(S, g, false, true);
      case Property::Cryptic: return cryptic(S, g, true, true);
      case Property::Group: {
        auto const one = S.identity();
        if (!one) {
          for (Elem x = 0; x < S.size(); ++x) {
            if (S(0, x) != x || S(x, 0) != x) {
              return fail({0, x}, fmt::format("no identity: {} fails on {}", 0, x));
            }
          }
        }
        for (Elem a = 0; a < S.size(); ++a) {
          bool inv = false;
          for (Elem b = 0; b < S.size() && !inv; ++b) {
            inv = S(a, b) == *one && S(b, a) == *one;
          }
          if (!inv) {
            return fail({a}, fmt::format("{} has no inverse", a));
          }
        }
        return ok();
      }
      case Property::LeftGroup: return idempotents_form(S, true);
      case Property::RightGroup: return idempotents_form(S, false);
      case Property::Band: {
        for (Elem a = 0; a < S.size(); ++a) {
          if (!S.is_idempotent(a)) {
            return fail({a}, fmt::format("{} is not idempotent", a));
          }
        }
        return ok();
      }
      case Property::Semilattice: {
        auto r = check_property(S, g, Property::Band);
        if (!r) {
          return r;
        }
        for (Elem a = 0; a < S.size(); ++a) {
          for (Elem b = a + 1; b < S.size(); ++b) {
            if (S(a, b) != S(b, a)) {
              return fail({a, b}, fmt::format("{} and {} do not commute", a, b));
            }
          }
        }
        return ok();
      }
      case Property::Inverse: {
        if (auto a = non_regular(S)) {
          return fail({*a}, fmt::format("{} is not regular", *a));
        }
        auto const E = idempotents(S).elements();
        for (Elem e : E) {
          for (Elem f : E) {
            if (S(e, f) != S(f, e)) {
              return fail({e, f}, fmt::format("idempotents {} and {} do not commute", e, f));
            }
          }
        }
        return ok();
      }
    }
    throw InvalidInput("unknown property");
  }

  PropertyResult is_locally(Semigroup const& S, Property p) {
    for (Elem e : idempotents(S).elements()) {
      auto const local = local_submonoid(S, e);
      auto       r     = check_property(local.semigroup, p);
      if (!r) {
        return fail({e},
                    fmt::format("{}S{} is not {}: {}", e, e, to_string(p), r.detail));
      }
    }
    return ok();
  }

  bool left_group_by_cancellation(Semigroup const& S) {
    auto const g = greens_structure(S);
    if (g.class_count(GreenRelation::L) != 1) {
      return false;
    }
    for (Elem c = 0; c < S.size(); ++c) {
      for (Elem a = 0; a < S.size(); ++a) {
        for (Elem b = a + 1; b < S.size(); ++b) {
          if (S(a, c) == S(b, c)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool left_group_by_idempotents(Semigroup const& S) {
    return idempotents_form(S, true).holds;
  }

  bool left_group_by_structure(Semigroup const& S) {
    auto const g = greens_structure(S);
    return check_property(S, g, Property::CompletelySimple).holds
           && g.class_count(GreenRelation::L) == 1;
  }

}  // namespace semiband
