#include "semiband/green.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include <fmt/format.h>

namespace semiband {

  BoolMatrix::BoolMatrix(std::size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

  void BoolMatrix::set(std::size_t i, std::size_t j, bool v) noexcept {
    std::uint64_t const mask = std::uint64_t{1} << (j % 64);
    if (v) {
      bits_[i * words_ + j / 64] |= mask;
    } else {
      bits_[i * words_ + j / 64] &= ~mask;
    }
  }

  void BoolMatrix::or_row(std::size_t i, BoolMatrix const& other, std::size_t j) noexcept {
    for (std::size_t w = 0; w < words_; ++w) {
      bits_[i * words_ + w] |= other.bits_[j * words_ + w];
    }
  }

  std::size_t BoolMatrix::count() const noexcept {
    std::size_t c = 0;
    for (auto w : bits_) {
      c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
  }

  char const* to_string(GreenRelation k) noexcept {
    switch (k) {
      case GreenRelation::R: return "R";
      case GreenRelation::L: return "L";
      case GreenRelation::H: return "H";
      case GreenRelation::D: return "D";
      case GreenRelation::J: return "J";
    }
    return "?";
  }

  std::vector<std::size_t> const& GreensStructure::classes(GreenRelation k) const noexcept {
    switch (k) {
      case GreenRelation::R: return R;
      case GreenRelation::L: return L;
      case GreenRelation::H: return H;
      case GreenRelation::D: return D;
      case GreenRelation::J: break;
    }
    return J;
  }

  std::size_t GreensStructure::class_count(GreenRelation k) const {
    auto const& c = classes(k);
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
  }

  std::vector<Elem> GreensStructure::class_of(GreenRelation k, Elem a) const {
    auto const&       c = classes(k);
    std::vector<Elem> out;
    for (Elem x = 0; x < c.size(); ++x) {
      if (c[x] == c[a]) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::size_t GreensStructure::largest_class(GreenRelation k) const {
    std::vector<std::size_t> sizes(class_count(k), 0);
    for (auto id : classes(k)) {
      ++sizes[id];
    }
    return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
  }

  namespace {
    // Class ids of the equivalence {(x, y) : rel(x, y) && rel(y, x)}.
    template <typename Rel>
    std::vector<std::size_t> mutual_classes(std::size_t n, Rel&& rel) {
      std::vector<std::size_t> id(n, static_cast<std::size_t>(-1));
      std::size_t              next = 0;
      for (Elem x = 0; x < n; ++x) {
        if (id[x] != static_cast<std::size_t>(-1)) {
          continue;
        }
        for (Elem y = x; y < n; ++y) {
          if (id[y] == static_cast<std::size_t>(-1) && rel(x, y) && rel(y, x)) {
            id[y] = next;
          }
        }
        ++next;
      }
      return id;
    }

    std::vector<std::size_t> renumber(std::vector<std::size_t> const& raw) {
      std::map<std::size_t, std::size_t> seen;
      std::vector<std::size_t>           out(raw.size());
      for (std::size_t i = 0; i < raw.size(); ++i) {
        out[i] = seen.try_emplace(raw[i], seen.size()).first->second;
      }
      return out;
    }

    std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }
  }  // namespace

  GreensStructure greens_structure(Semigroup const& S) {
    std::size_t const n = S.size();
    GreensStructure   g;
    g.left_div  = BoolMatrix(n);
    g.right_div = BoolMatrix(n);
    g.two_div   = BoolMatrix(n);
    // One-sided Cayley graphs: t -> tx and t -> xt.
    for (Elem t = 0; t < n; ++t) {
      g.left_div.set(t, t);
      g.right_div.set(t, t);
      for (Elem x = 0; x < n; ++x) {
        g.right_div.set(S(t, x), t);
        g.left_div.set(S(x, t), t);
      }
    }
    // Already transitive for an associative table. Closing anyway keeps the
    // classes well defined on corrupted tables fed in by fault injection.
    for (auto* m : {&g.left_div, &g.right_div}) {
      for (Elem k = 0; k < n; ++k) {
        for (Elem i = 0; i < n; ++i) {
          if ((*m)(i, k)) {
            m->or_row(i, *m, k);
          }
        }
      }
    }
    // S^1 t S^1 = union over u in t S^1 of S^1 u. Work with the transposed
    // form: column t of two_div is the union of columns u of left_div.
    BoolMatrix left_cols(n), right_cols(n);
    for (Elem s = 0; s < n; ++s) {
      for (Elem t = 0; t < n; ++t) {
        if (g.left_div(s, t)) {
          left_cols.set(t, s);
        }
        if (g.right_div(s, t)) {
          right_cols.set(t, s);
        }
      }
    }
    BoolMatrix two_cols(n);
    for (Elem t = 0; t < n; ++t) {
      for (Elem u = 0; u < n; ++u) {
        if (right_cols(t, u)) {
          two_cols.or_row(t, left_cols, u);
        }
      }
    }
    for (Elem t = 0; t < n; ++t) {
      for (Elem s = 0; s < n; ++s) {
        if (two_cols(t, s)) {
          g.two_div.set(s, t);
        }
      }
    }

    g.R = mutual_classes(n, [&](Elem x, Elem y) { return g.right_div(x, y); });
    g.L = mutual_classes(n, [&](Elem x, Elem y) { return g.left_div(x, y); });
    g.J = mutual_classes(n, [&](Elem x, Elem y) { return g.two_div(x, y); });

    std::vector<std::size_t> h(n);
    for (Elem x = 0; x < n; ++x) {
      h[x] = g.R[x] * n + g.L[x];
    }
    g.H = renumber(h);

    // D is the join of R and L.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::size_t> first_r(n, n), first_l(n, n);
    for (Elem x = 0; x < n; ++x) {
      for (auto* first : {&first_r, &first_l}) {
        std::size_t const cls = first == &first_r ? g.R[x] : g.L[x];
        if ((*first)[cls] == n) {
          (*first)[cls] = x;
        } else {
          parent[find_root(parent, x)] = find_root(parent, (*first)[cls]);
        }
      }
    }
    std::vector<std::size_t> d(n);
    for (Elem x = 0; x < n; ++x) {
      d[x] = find_root(parent, x);
    }
    g.D = renumber(d);
    return g;
  }

  bool d_equals_j(GreensStructure const& g) {
    return g.D == g.J;
  }

  ////////////////////////////////////////////////////////////////////////
  // Natural order
  ////////////////////////////////////////////////////////////////////////

  std::size_t OrderRelation::pair_count() const noexcept {
    return leq_.count();
  }

  std::vector<std::pair<Elem, Elem>> OrderRelation::pairs() const {
    std::vector<std::pair<Elem, Elem>> out;
    for (Elem x = 0; x < size(); ++x) {
      for (Elem y = 0; y < size(); ++y) {
        if (leq(x, y)) {
          out.emplace_back(x, y);
        }
      }
    }
    return out;
  }

  bool OrderRelation::is_reflexive() const {
    for (Elem x = 0; x < size(); ++x) {
      if (!leq(x, x)) {
        return false;
      }
    }
    return true;
  }

  bool OrderRelation::is_antisymmetric() const {
    for (Elem x = 0; x < size(); ++x) {
      for (Elem y = x + 1; y < size(); ++y) {
        if (leq(x, y) && leq(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool OrderRelation::is_transitive() const {
    for (Elem x = 0; x < size(); ++x) {
      for (Elem y = 0; y < size(); ++y) {
        if (!leq(x, y)) {
          continue;
        }
        for (Elem z = 0; z < size(); ++z) {
          if (leq(y, z) && !leq(x, z)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  OrderRelation natural_order(Semigroup const& S, OrderMultipliers m) {
    std::size_t const n = S.size();
    BoolMatrix        leq(n);
    for (Elem s = 0; s < n; ++s) {
      for (Elem t = 0; t < n; ++t) {
        if (s == t && m == OrderMultipliers::with_identity) {
          leq.set(s, t);  // a = b = 1
          continue;
        }
        bool left = false;
        for (Elem a = 0; a < n && !left; ++a) {
          left = S(a, t) == s;
        }
        if (!left) {
          continue;
        }
        for (Elem b = 0; b < n; ++b) {
          if (S(t, b) == s && S(s, b) == s) {
            leq.set(s, t);
            break;
          }
        }
      }
    }
    return OrderRelation(std::move(leq));
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroups and local submonoids
  ////////////////////////////////////////////////////////////////////////

  bool is_group(Semigroup const& S) {
    auto const one = S.identity();
    if (!one) {
      return false;
    }
    for (Elem a = 0; a < S.size(); ++a) {
      bool inverse = false;
      for (Elem b = 0; b < S.size() && !inverse; ++b) {
        inverse = S(a, b) == *one && S(b, a) == *one;
      }
      if (!inverse) {
        return false;
      }
    }
    return true;
  }

  Subsemigroup maximal_subgroup(Semigroup const& S, GreensStructure const& g, Elem e) {
    if (e >= S.size()) {
      throw IndexOutOfRange(fmt::format("element {} outside [0, {})", e, S.size()));
    }
    if (!S.is_idempotent(e)) {
      throw NotIdempotent("maximal subgroups are indexed by idempotents", {e});
    }
    auto const members = g.class_of(GreenRelation::H, e);
    auto       sub     = induced_subsemigroup(S, ElementSet(S.size(), members));
    if (!is_group(sub.semigroup)) {
      throw InternalError(fmt::format("H-class of idempotent {} is not a group", e));
    }
    return sub;
  }

  Subsemigroup maximal_subgroup(Semigroup const& S, Elem e) {
    return maximal_subgroup(S, greens_structure(S), e);
  }

  Subsemigroup local_submonoid(Semigroup const& S, Elem e) {
    if (e >= S.size()) {
      throw IndexOutOfRange(fmt::format("element {} outside [0, {})", e, S.size()));
    }
    if (!S.is_idempotent(e)) {
      throw NotIdempotent("local submonoids are indexed by idempotents", {e});
    }
    ElementSet members(S.size());
    for (Elem x = 0; x < S.size(); ++x) {
      members.insert(S(S(e, x), e));
    }
    return induced_subsemigroup(S, members);
  }

  ////////////////////////////////////////////////////////////////////////
  // DOT export
  ////////////////////////////////////////////////////////////////////////

  std::string eggbox_dot(Semigroup const& S, GreensStructure const& g) {
    std::string out = "digraph eggbox {\n  node [shape=plaintext];\n";
    for (std::size_t d = 0; d < g.class_count(GreenRelation::D); ++d) {
      std::vector<std::size_t> rows, cols;
      for (Elem x = 0; x < S.size(); ++x) {
        if (g.D[x] != d) {
          continue;
        }
        if (std::find(rows.begin(), rows.end(), g.R[x]) == rows.end()) {
          rows.push_back(g.R[x]);
        }
        if (std::find(cols.begin(), cols.end(), g.L[x]) == cols.end()) {
          cols.push_back(g.L[x]);
        }
      }
      out += fmt::format(
          "  d{} [label=<<table border=\"1\" cellborder=\"1\" cellspacing=\"0\">\n", d);
      for (auto r : rows) {
        out += "    <tr>";
        for (auto l : cols) {
          std::string cell;
          bool        star = false;
          for (Elem x = 0; x < S.size(); ++x) {
            if (g.R[x] == r && g.L[x] == l) {
              cell += (cell.empty() ? "" : " ") + S.label(x);
              star = star || S.is_idempotent(x);
            }
          }
          out += fmt::format("<td>{}{}</td>", star ? "*" : "", cell);
        }
        out += "</tr>\n";
      }
      out += "  </table>>];\n";
    }
    // Hasse diagram of the J-order on D-classes, higher classes first.
    std::size_t const       nd = g.class_count(GreenRelation::D);
    std::vector<Elem>       rep(nd);
    for (Elem x = 0; x < S.size(); ++x) {
      rep[g.D[x]] = x;
    }
    auto below = [&](std::size_t a, std::size_t b) {
      return a != b && g.two_div(rep[a], rep[b]);
    };
    for (std::size_t a = 0; a < nd; ++a) {
      for (std::size_t b = 0; b < nd; ++b) {
        if (!below(b, a)) {
          continue;
        }
        bool covered = true;
        for (std::size_t c = 0; c < nd && covered; ++c) {
          covered = !(below(b, c) && below(c, a));
        }
        if (covered) {
          out += fmt::format("  d{} -> d{};\n", a, b);
        }
      }
    }
    out += "}\n";
    return out;
  }

}  // namespace semiband
