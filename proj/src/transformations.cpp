#include "semiband/transformations.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <fmt/format.h>

namespace semiband {

  Transformation Transformation::operator*(Transformation const& b) const {
    Transformation out;
    out.images.reserve(images.size());
    for (Elem x : images) {
      out.images.push_back(b.images[x]);
    }
    return out;
  }

  std::vector<Elem> Transformation::image_set() const {
    std::vector<Elem> im = images;
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }

  std::size_t Transformation::rank() const {
    return image_set().size();
  }

  bool Transformation::is_idempotent() const {
    return *this * *this == *this;
  }

  std::string Transformation::to_string() const {
    return fmt::format("{}", fmt::join(images, " "));
  }

  namespace {
    ConstructionBundle from_sorted(std::vector<Transformation> elems, std::string notes) {
      std::size_t const N = elems.size();
      auto index = [&](Transformation const& t) {
        auto it = std::lower_bound(elems.begin(), elems.end(), t);
        if (it == elems.end() || *it != t) {
          throw InternalError("transformation set is not closed under composition");
        }
        return static_cast<Elem>(it - elems.begin());
      };
      std::vector<Elem> table(N * N);
      for (Elem i = 0; i < N; ++i) {
        for (Elem j = 0; j < N; ++j) {
          table[i * N + j] = index(elems[i] * elems[j]);
        }
      }
      std::vector<Decoded> decode(elems.begin(), elems.end());
      Semigroup const          no_base = Semigroup::unchecked(1, {0});
      std::vector<std::string> labels;
      for (auto const& d : decode) {
        labels.push_back(describe(d, no_base));
      }
      Semigroup S = make_semigroup(N, std::move(table), std::move(labels));
      return {S, std::move(decode), std::nullopt, std::move(notes), S};
    }

    std::vector<Transformation> all_maps(std::size_t k, std::size_t degree) {
      // maps {0..degree-1} -> {0..k-1}
      std::vector<Transformation> out;
      Transformation              t{std::vector<Elem>(degree, 0)};
      while (true) {
        out.push_back(t);
        std::size_t i = degree;
        while (i > 0 && t.images[i - 1] + 1 == k) {
          t.images[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          return out;
        }
        ++t.images[i - 1];
      }
    }
  }  // namespace

  Transformation identity_transformation(std::size_t k) {
    Transformation t;
    for (Elem x = 0; x < k; ++x) {
      t.images.push_back(x);
    }
    return t;
  }

  ConstructionBundle full_tf_monoid(std::size_t k, std::size_t cap) {
    if (k == 0) {
      throw InvalidInput("degree must be positive");
    }
    if (k > cap) {
      throw DegreeTooLarge(fmt::format("degree {} exceeds the cap {}", k, cap));
    }
    return from_sorted(all_maps(k, k), fmt::format("full transformation monoid of degree {}", k));
  }

  ConstructionBundle transformation_semigroup(std::vector<Transformation> const& gens) {
    if (gens.empty()) {
      throw InvalidInput("no generators");
    }
    std::size_t const k = gens.front().degree();
    for (auto const& g : gens) {
      if (g.degree() != k || std::any_of(g.images.begin(), g.images.end(), [k](Elem x) {
            return x >= k;
          })) {
        throw InvalidInput("generators must be maps of one finite set into itself");
      }
    }
    std::set<Transformation>    seen(gens.begin(), gens.end());
    std::vector<Transformation> work(seen.begin(), seen.end());
    while (!work.empty()) {
      auto const t = work.back();
      work.pop_back();
      for (auto const& g : gens) {
        auto const p = t * g;
        if (seen.insert(p).second) {
          work.push_back(p);
        }
      }
    }
    return from_sorted({seen.begin(), seen.end()},
                       fmt::format("generated by {} transformations", gens.size()));
  }

  bool in_higgins_T(Transformation const& a, std::size_t k) {
    if (a.degree() != 2 * k) {
      return false;
    }
    std::vector<Elem> left(a.images.begin(), a.images.begin() + k);
    std::vector<Elem> right(a.images.begin() + k, a.images.end());
    std::sort(left.begin(), left.end());
    left.erase(std::unique(left.begin(), left.end()), left.end());
    std::sort(right.begin(), right.end());
    right.erase(std::unique(right.begin(), right.end()), right.end());
    if (left != right) {
      return false;
    }
    return left.back() < k || left.front() >= k;
  }

  Transformation primed(Transformation const& a) {
    Transformation out{a.images};
    out.images.insert(out.images.end(), a.images.begin(), a.images.end());
    return out;
  }

  ConstructionBundle higgins_T(std::size_t k, HigginsMethod method) {
    if (k == 0) {
      throw InvalidInput("degree must be positive");
    }
    if (k > 3) {
      throw DegreeTooLarge(fmt::format("degree {} exceeds the cap 3", k));
    }
    std::vector<Transformation> elems;
    if (method == HigginsMethod::filter) {
      for (auto& t : all_maps(2 * k, 2 * k)) {
        if (in_higgins_T(t, k)) {
          elems.push_back(std::move(t));
        }
      }
    } else {
      auto const maps = all_maps(k, k);
      for (Elem side : {Elem{0}, static_cast<Elem>(k)}) {
        for (auto const& f : maps) {
          for (auto const& g : maps) {
            if (f.image_set() != g.image_set()) {
              continue;
            }
            Transformation t;
            for (Elem x : f.images) {
              t.images.push_back(x + side);
            }
            for (Elem x : g.images) {
              t.images.push_back(x + side);
            }
            elems.push_back(std::move(t));
          }
        }
      }
      std::sort(elems.begin(), elems.end());
    }
    auto bundle = from_sorted(
        std::move(elems),
        fmt::format("maps of X u X' (|X| = {}) with X a = X' a inside X or inside X'", k));

    auto const        TX = full_tf_monoid(k);
    std::vector<Elem> emb;
    for (auto const& d : TX.decode) {
      emb.push_back(*bundle.find(primed(std::get<Transformation>(d))));
    }
    bundle.embedding.emplace(TX.result, bundle.result, std::move(emb));
    return bundle;
  }

  SemigroupHom iso_R_TX_to_T(std::size_t k) {
    auto const TX = full_tf_monoid(k, 3);
    auto const R  = build_R(TX.result);
    auto const T  = higgins_T(k);
    std::vector<Elem> map;
    for (auto const& d : R.decode) {
      auto const& tr = std::get<TripleElem>(d);
      auto const& lambda = std::get<Transformation>(TX.decode[tr.s]);
      auto const& mu     = std::get<Transformation>(TX.decode[tr.t]);
      Elem const  shift  = tr.flag == Flag::tau ? static_cast<Elem>(k) : 0;
      Transformation delta;
      for (Elem x : mu.images) {
        delta.images.push_back(x + shift);
      }
      for (Elem x : lambda.images) {
        delta.images.push_back(x + shift);
      }
      auto const at = T.find(delta);
      if (!at) {
        throw InternalError("image of a triple lies outside T");
      }
      map.push_back(*at);
    }
    return SemigroupHom(R.result, T.result, std::move(map));
  }

  std::vector<Transformation> read_tfm(std::istream& in) {
    std::vector<Transformation> out;
    std::string                 line;
    std::size_t                 lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto const first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') {
        continue;
      }
      std::istringstream ss(line);
      Transformation     t;
      long long          x;
      while (ss >> x) {
        if (x < 0) {
          throw InvalidInput(fmt::format("line {}: negative image", lineno));
        }
        t.images.push_back(static_cast<Elem>(x));
      }
      if (!ss.eof()) {
        throw InvalidInput(fmt::format("line {}: expected integers", lineno));
      }
      if (!out.empty() && t.degree() != out.front().degree()) {
        throw InvalidInput(fmt::format("line {}: degree {} differs from {}",
                                       lineno,
                                       t.degree(),
                                       out.front().degree()));
      }
      for (Elem y : t.images) {
        if (y >= t.degree()) {
          throw IndexOutOfRange(fmt::format("line {}: image {} out of range", lineno, y));
        }
      }
      out.push_back(std::move(t));
    }
    if (out.empty()) {
      throw InvalidInput("no transformations in input");
    }
    return out;
  }

  std::vector<Transformation> read_tfm_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InvalidInput(fmt::format("cannot open {}", path));
    }
    return read_tfm(in);
  }

  void write_tfm(std::ostream& out, std::vector<Transformation> const& ts) {
    for (auto const& t : ts) {
      out << t.to_string() << '\n';
    }
  }

}  // namespace semiband
