#include "semiband/isomorphism.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "semiband/green.hpp"

namespace semiband {

  namespace {
    using Signature = std::vector<std::size_t>;

    std::pair<std::size_t, std::size_t> index_and_period(Semigroup const& S, Elem x) {
      std::vector<Elem> powers{x};
      while (true) {
        Elem const next = S(powers.back(), x);
        auto const it   = std::find(powers.begin(), powers.end(), next);
        if (it != powers.end()) {
          auto const m = static_cast<std::size_t>(it - powers.begin()) + 1;
          return {m, powers.size() + 1 - m};
        }
        powers.push_back(next);
      }
    }

    std::size_t distinct(std::vector<Elem> v) {
      std::sort(v.begin(), v.end());
      return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
    }

    std::vector<Signature> signatures(Semigroup const& S) {
      GreensStructure const  g = greens_structure(S);
      std::size_t const      n = S.size();
      std::vector<Signature> sig(n);
      for (Elem x = 0; x < n; ++x) {
        auto [index, period] = index_and_period(S, x);
        std::vector<Elem> col(n);
        for (Elem y = 0; y < n; ++y) {
          col[y] = S(y, x);
        }
        std::size_t left_units = 0, right_units = 0;
        for (Elem y = 0; y < n; ++y) {
          left_units += S(x, y) == y;
          right_units += S(y, x) == y;
        }
        sig[x] = {S.is_idempotent(x),
                  index,
                  period,
                  g.class_of(GreenRelation::R, x).size(),
                  g.class_of(GreenRelation::L, x).size(),
                  g.class_of(GreenRelation::H, x).size(),
                  g.class_of(GreenRelation::J, x).size(),
                  distinct({S.row(x).begin(), S.row(x).end()}),
                  distinct(col),
                  left_units,
                  right_units};
      }
      return sig;
    }

    std::vector<Elem> generating_set(Semigroup const& S, std::vector<Signature> const& sig) {
      GreensStructure const g = greens_structure(S);
      std::vector<Elem>     order(S.size());
      std::iota(order.begin(), order.end(), 0);
      // Elements high in the J-order and non-idempotents first: they are the
      // ones least likely to be products of others.
      std::vector<std::size_t> below(S.size(), 0);
      for (Elem x = 0; x < S.size(); ++x) {
        for (Elem y = 0; y < S.size(); ++y) {
          below[x] += g.two_div(y, x);
        }
      }
      std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) {
        if (below[a] != below[b]) {
          return below[a] > below[b];
        }
        return sig[a] < sig[b];
      });
      std::vector<Elem> gens;
      ElementSet        closure(S.size());
      for (Elem x : order) {
        if (!closure.contains(x)) {
          gens.push_back(x);
          auto sub = generated_subsemigroup(S, ElementSet(S.size(), gens));
          closure  = sub.inclusion.image();
        }
      }
      return gens;
    }

    class Search {
     public:
      Search(Semigroup const& S, Semigroup const& T)
          : S_(S), T_(T), sig_s_(signatures(S)), sig_t_(signatures(T)) {}

      std::optional<std::vector<Elem>> run() {
        auto a = sig_s_, b = sig_t_;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
          return std::nullopt;
        }
        gens_ = generating_set(S_, sig_s_);
        std::vector<Elem> map(S_.size(), no_elem);
        std::vector<bool> used(T_.size(), false);
        std::vector<Elem> known;
        if (descend(0, map, used, known)) {
          return result_;
        }
        return std::nullopt;
      }

     private:
      bool descend(std::size_t              i,
                   std::vector<Elem> const& map,
                   std::vector<bool> const& used,
                   std::vector<Elem> const& known) {
        if (i == gens_.size()) {
          result_ = map;
          return true;
        }
        Elem const g = gens_[i];
        for (Elem c = 0; c < T_.size(); ++c) {
          if (used[c] || sig_t_[c] != sig_s_[g]) {
            continue;
          }
          auto m = map;
          auto u = used;
          auto k = known;
          if (assign(g, c, m, u, k) && descend(i + 1, m, u, k)) {
            return true;
          }
        }
        return false;
      }

      // Maps x to c and closes the partial map under products with every
      // already-mapped element. False on any inconsistency.
      bool assign(Elem               x,
                  Elem               c,
                  std::vector<Elem>& map,
                  std::vector<bool>& used,
                  std::vector<Elem>& known) {
        map[x]  = c;
        used[c] = true;
        std::vector<Elem> work{x};
        while (!work.empty()) {
          Elem const a = work.back();
          work.pop_back();
          known.push_back(a);
          for (std::size_t j = 0; j < known.size(); ++j) {
            Elem const b = known[j];
            for (auto [p, q] : {std::pair{S_(a, b), T_(map[a], map[b])},
                                std::pair{S_(b, a), T_(map[b], map[a])}}) {
              if (map[p] == no_elem) {
                if (used[q] || sig_t_[q] != sig_s_[p]) {
                  return false;
                }
                map[p]  = q;
                used[q] = true;
                work.push_back(p);
              } else if (map[p] != q) {
                return false;
              }
            }
          }
        }
        return true;
      }

      Semigroup const&       S_;
      Semigroup const&       T_;
      std::vector<Signature> sig_s_, sig_t_;
      std::vector<Elem>      gens_;
      std::vector<Elem>      result_;
    };
  }  // namespace

  std::optional<SemigroupHom> find_isomorphism(Semigroup const& S,
                                               Semigroup const& T,
                                               std::size_t      cap) {
    if (S.size() != T.size()) {
      return std::nullopt;
    }
    if (S.size() > cap) {
      throw SearchBudgetExceeded(
          fmt::format("isomorphism search capped at order {}, got {}", cap, S.size()));
    }
    auto map = Search(S, T).run();
    if (!map) {
      return std::nullopt;
    }
    SemigroupHom h(S, T, std::move(*map));
    if (!h.is_isomorphism()) {
      throw InternalError("isomorphism search produced a map that is not an isomorphism");
    }
    return h;
  }

}  // namespace semiband
