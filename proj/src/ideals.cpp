#include "semiband/ideals.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace semiband {

  std::optional<std::pair<Elem, Elem>> ideal_failure(Semigroup const& S, ElementSet const& I) {
    for (Elem s : I.elements()) {
      for (Elem x = 0; x < S.size(); ++x) {
        if (!I.contains(S(s, x))) {
          return std::make_pair(s, x);
        }
        if (!I.contains(S(x, s))) {
          return std::make_pair(x, s);
        }
      }
    }
    return std::nullopt;
  }

  ElementSet principal_ideal(Semigroup const& S, Elem a) {
    ElementSet right(S.size());
    right.insert(a);
    for (Elem x = 0; x < S.size(); ++x) {
      right.insert(S(a, x));
    }
    ElementSet out = right;
    for (Elem u : right.elements()) {
      for (Elem x = 0; x < S.size(); ++x) {
        out.insert(S(x, u));
      }
    }
    return out;
  }

  Quotient rees_quotient(Semigroup const& S, ElementSet const& ideal) {
    if (ideal.universe() != S.size()) {
      throw InvalidInput("ideal belongs to a semigroup of a different order");
    }
    if (ideal.empty()) {
      throw NotAnIdeal("an ideal must be nonempty", {});
    }
    if (auto bad = ideal_failure(S, ideal)) {
      throw NotAnIdeal("set is not a two-sided ideal", {bad->first, bad->second});
    }
    std::vector<Elem> keep;
    for (Elem x = 0; x < S.size(); ++x) {
      if (!ideal.contains(x)) {
        keep.push_back(x);
      }
    }
    auto const        zero = static_cast<Elem>(keep.size());
    std::size_t const m    = keep.size() + 1;
    std::vector<Elem> proj(S.size(), zero);
    for (Elem i = 0; i < keep.size(); ++i) {
      proj[keep[i]] = i;
    }
    std::vector<Elem> t(m * m, zero);
    for (Elem i = 0; i < keep.size(); ++i) {
      for (Elem j = 0; j < keep.size(); ++j) {
        t[i * m + j] = proj[S(keep[i], keep[j])];
      }
    }
    std::vector<std::string> labels;
    if (S.has_labels()) {
      for (Elem x : keep) {
        labels.push_back(S.label(x));
      }
      std::string z = "0";
      while (std::find(labels.begin(), labels.end(), z) != labels.end()) {
        z += "'";
      }
      labels.push_back(z);
    }
    Semigroup Q = Semigroup::unchecked(m, std::move(t), std::move(labels));
    return {Q, SemigroupHom(S, Q, std::move(proj))};
  }

  PrincipalFactor principal_factor(Semigroup const& S, GreensStructure const& g, Elem a) {
    if (a >= S.size()) {
      throw IndexOutOfRange(fmt::format("element {} outside [0, {})", a, S.size()));
    }
    PrincipalFactor pf{.factor  = S,
                       .kind    = FactorKind::null,
                       .ideal   = principal_ideal(S, a),
                       .j_class = ElementSet(S.size()),
                       .members = g.class_of(GreenRelation::J, a)};
    for (Elem x : pf.members) {
      pf.j_class.insert(x);
    }
    std::size_t const k    = pf.members.size();
    auto const        zero = static_cast<Elem>(k);
    std::vector<Elem> local(S.size(), zero);
    for (Elem i = 0; i < k; ++i) {
      local[pf.members[i]] = i;
    }
    std::vector<Elem> t((k + 1) * (k + 1), zero);
    for (Elem i = 0; i < k; ++i) {
      for (Elem j = 0; j < k; ++j) {
        Elem const p = S(pf.members[i], pf.members[j]);
        if (pf.j_class.contains(p)) {
          t[i * (k + 1) + j] = local[p];
          pf.kind            = FactorKind::zero_simple;
        }
      }
    }
    std::vector<std::string> labels;
    if (S.has_labels()) {
      for (Elem x : pf.members) {
        labels.push_back(S.label(x));
      }
      std::string z = "0";
      while (std::find(labels.begin(), labels.end(), z) != labels.end()) {
        z += "'";
      }
      labels.push_back(z);
    }
    pf.factor = Semigroup::unchecked(k + 1, std::move(t), std::move(labels));
    return pf;
  }

  PrincipalFactor principal_factor(Semigroup const& S, Elem a) {
    return principal_factor(S, greens_structure(S), a);
  }

}  // namespace semiband
