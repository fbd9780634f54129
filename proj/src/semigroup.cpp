#include "semiband/semigroup.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace semiband {

  NonAssociative::NonAssociative(Elem a_, Elem b_, Elem c_)
      : Error(fmt::format("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})",
                          a_,
                          b_,
                          c_)),
        a(a_),
        b(b_),
        c(c_) {}

  WitnessedError::WitnessedError(std::string const& what, std::vector<Elem> witness)
      : Error(witness.empty() ? what
                              : fmt::format("{} (witness: {})", what, fmt::join(witness, ", "))),
        witness_(std::move(witness)) {}

  namespace {
    std::optional<Elem> find_identity(std::size_t n, std::vector<Elem> const& t) {
      for (Elem e = 0; e < n; ++e) {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x) {
          ok = t[e * n + x] == x && t[x * n + e] == x;
        }
        if (ok) {
          return e;
        }
      }
      return std::nullopt;
    }

    std::optional<Elem> find_zero(std::size_t n, std::vector<Elem> const& t) {
      for (Elem z = 0; z < n; ++z) {
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x) {
          ok = t[z * n + x] == z && t[x * n + z] == z;
        }
        if (ok) {
          return z;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  std::string Semigroup::label(Elem a) const {
    if (d_->labels.empty()) {
      return std::to_string(a);
    }
    return d_->labels.at(a);
  }

  Semigroup Semigroup::unchecked(std::size_t              n,
                                 std::vector<Elem>        table,
                                 std::vector<std::string> labels) {
    if (n == 0) {
      throw InvalidInput("a semigroup must have at least one element");
    }
    if (table.size() != n * n) {
      throw InvalidInput(fmt::format("table has {} entries, expected {}", table.size(), n * n));
    }
    if (!labels.empty() && labels.size() != n) {
      throw InvalidInput(fmt::format("{} labels given for {} elements", labels.size(), n));
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= n) {
        throw IndexOutOfRange(fmt::format(
            "table entry at ({}, {}) is {}, outside [0, {})", i / n, i % n, table[i], n));
      }
    }
    auto d      = std::make_shared<Data>();
    d->n        = n;
    d->identity = find_identity(n, table);
    d->zero     = find_zero(n, table);
    d->table    = std::move(table);
    d->labels   = std::move(labels);
    return Semigroup(std::move(d));
  }

  bool operator==(Semigroup const& x, Semigroup const& y) {
    return x.d_ == y.d_
           || (x.d_->n == y.d_->n && x.d_->table == y.d_->table
               && x.d_->labels == y.d_->labels);
  }

  std::optional<std::array<Elem, 3>> associativity_failure(Semigroup const& S) {
    auto const n = static_cast<Elem>(S.size());
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem const ab = S(a, b);
        for (Elem c = 0; c < n; ++c) {
          if (S(ab, c) != S(a, S(b, c))) {
            return std::array<Elem, 3>{a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  Semigroup make_semigroup(std::size_t              n,
                           std::vector<Elem>        flat_table,
                           std::vector<std::string> labels) {
    Semigroup S = Semigroup::unchecked(n, std::move(flat_table), std::move(labels));
    if (auto bad = associativity_failure(S)) {
      throw NonAssociative((*bad)[0], (*bad)[1], (*bad)[2]);
    }
    return S;
  }

  Semigroup make_semigroup(std::vector<std::vector<Elem>> const& table,
                           std::vector<std::string>              labels) {
    std::size_t const n = table.size();
    std::vector<Elem> flat;
    flat.reserve(n * n);
    for (auto const& row : table) {
      if (row.size() != n) {
        throw InvalidInput(fmt::format("table row has {} entries, expected {}", row.size(), n));
      }
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return make_semigroup(n, std::move(flat), std::move(labels));
  }

  Semigroup adjoin_identity(Semigroup const& S, bool force) {
    if (S.is_monoid() && !force) {
      return S;
    }
    std::size_t const n = S.size();
    std::size_t const m = n + 1;
    auto const        one = static_cast<Elem>(n);
    std::vector<Elem> t(m * m);
    for (Elem a = 0; a < m; ++a) {
      for (Elem b = 0; b < m; ++b) {
        t[a * m + b] = a == one ? b : (b == one ? a : S(a, b));
      }
    }
    std::vector<std::string> labels;
    if (S.has_labels()) {
      labels = S.labels();
      std::string one_label = "1";
      while (std::find(labels.begin(), labels.end(), one_label) != labels.end()) {
        one_label += "'";
      }
      labels.push_back(one_label);
    }
    return Semigroup::unchecked(m, std::move(t), std::move(labels));
  }

  Semigroup opposite(Semigroup const& S) {
    std::size_t const n = S.size();
    std::vector<Elem> t(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        t[a * n + b] = S(b, a);
      }
    }
    return Semigroup::unchecked(n, std::move(t), S.labels());
  }

  ////////////////////////////////////////////////////////////////////////
  // ElementSet
  ////////////////////////////////////////////////////////////////////////

  ElementSet::ElementSet(std::size_t universe, std::span<Elem const> members)
      : bits_(universe, false) {
    for (Elem x : members) {
      insert(x);
    }
  }

  ElementSet ElementSet::all(std::size_t universe) {
    ElementSet s;
    s.bits_.assign(universe, true);
    return s;
  }

  void ElementSet::insert(Elem x) {
    if (x >= bits_.size()) {
      throw IndexOutOfRange(fmt::format("element {} outside [0, {})", x, bits_.size()));
    }
    bits_[x] = true;
  }

  void ElementSet::erase(Elem x) {
    if (x < bits_.size()) {
      bits_[x] = false;
    }
  }

  std::size_t ElementSet::count() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
  }

  bool ElementSet::empty() const noexcept {
    return std::find(bits_.begin(), bits_.end(), true) == bits_.end();
  }

  std::vector<Elem> ElementSet::elements() const {
    std::vector<Elem> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i]) {
        out.push_back(static_cast<Elem>(i));
      }
    }
    return out;
  }

  bool ElementSet::subset_of(ElementSet const& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if (bits_[i] && !other.contains(static_cast<Elem>(i))) {
        return false;
      }
    }
    return true;
  }

  ElementSet idempotents(Semigroup const& S) {
    ElementSet E(S.size());
    for (Elem x = 0; x < S.size(); ++x) {
      if (S.is_idempotent(x)) {
        E.insert(x);
      }
    }
    return E;
  }

  ElementSet set_product(Semigroup const& S, ElementSet const& A, ElementSet const& B) {
    ElementSet        out(S.size());
    std::vector<Elem> bs = B.elements();
    for (Elem a : A.elements()) {
      for (Elem b : bs) {
        out.insert(S(a, b));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // SemigroupHom
  ////////////////////////////////////////////////////////////////////////

  SemigroupHom::SemigroupHom(Semigroup domain, Semigroup codomain, std::vector<Elem> map)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
    std::size_t const n = domain_.size();
    std::size_t const m = codomain_.size();
    if (map_.size() != n) {
      throw InvalidInput(
          fmt::format("map has {} entries but the domain has {} elements", map_.size(), n));
    }
    std::vector<bool> hit(m, false);
    injective_ = true;
    for (Elem x = 0; x < n; ++x) {
      if (map_[x] >= m) {
        throw IndexOutOfRange(
            fmt::format("map sends {} to {}, outside the codomain [0, {})", x, map_[x], m));
      }
      injective_ = injective_ && !hit[map_[x]];
      hit[map_[x]] = true;
    }
    surjective_ = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    for (Elem a = 0; a < n && !hom_failure_; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (map_[domain_(a, b)] != codomain_(map_[a], map_[b])) {
          hom_failure_ = std::make_pair(a, b);
          break;
        }
      }
    }
  }

  SemigroupHom SemigroupHom::then(SemigroupHom const& next) const {
    if (next.domain().size() != codomain_.size()) {
      throw InvalidInput("cannot compose: codomain and domain sizes differ");
    }
    std::vector<Elem> m(map_.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      m[i] = next(map_[i]);
    }
    return SemigroupHom(domain_, next.codomain(), std::move(m));
  }

  SemigroupHom SemigroupHom::inverse() const {
    if (!injective_ || !surjective_) {
      throw InvalidInput("only a bijection has an inverse");
    }
    std::vector<Elem> inv(map_.size());
    for (Elem x = 0; x < map_.size(); ++x) {
      inv[map_[x]] = x;
    }
    return SemigroupHom(codomain_, domain_, std::move(inv));
  }

  ElementSet SemigroupHom::image() const {
    return ElementSet(codomain_.size(), map_);
  }

  ////////////////////////////////////////////////////////////////////////
  // Subsemigroups and quotients
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Subsemigroup restrict_to(Semigroup const& S, std::vector<Elem> const& members) {
      std::size_t const k = members.size();
      std::vector<Elem> local(S.size(), no_elem);
      for (Elem i = 0; i < k; ++i) {
        local[members[i]] = i;
      }
      std::vector<Elem>        t(k * k);
      std::vector<std::string> labels;
      for (Elem i = 0; i < k; ++i) {
        for (Elem j = 0; j < k; ++j) {
          t[i * k + j] = local[S(members[i], members[j])];
        }
        if (S.has_labels()) {
          labels.push_back(S.label(members[i]));
        }
      }
      Semigroup sub = Semigroup::unchecked(k, std::move(t), std::move(labels));
      return {sub, SemigroupHom(sub, S, members)};
    }
  }  // namespace

  Subsemigroup generated_subsemigroup(Semigroup const& S, ElementSet const& gens) {
    if (gens.universe() != S.size()) {
      throw InvalidInput("generating set belongs to a semigroup of a different order");
    }
    if (gens.empty()) {
      throw InvalidInput("cannot generate a subsemigroup from the empty set");
    }
    ElementSet        closure = gens;
    std::vector<Elem> frontier = gens.elements();
    std::vector<Elem> g        = frontier;
    // Right multiplication by generators reaches every product.
    while (!frontier.empty()) {
      std::vector<Elem> next;
      for (Elem x : frontier) {
        for (Elem y : g) {
          Elem const z = S(x, y);
          if (!closure.contains(z)) {
            closure.insert(z);
            next.push_back(z);
          }
        }
      }
      frontier = std::move(next);
    }
    return restrict_to(S, closure.elements());
  }

  Subsemigroup induced_subsemigroup(Semigroup const& S, ElementSet const& members) {
    if (members.universe() != S.size()) {
      throw InvalidInput("member set belongs to a semigroup of a different order");
    }
    if (members.empty()) {
      throw InvalidInput("a subsemigroup must be nonempty");
    }
    std::vector<Elem> m = members.elements();
    for (Elem a : m) {
      for (Elem b : m) {
        if (!members.contains(S(a, b))) {
          throw NotClosed("set is not closed under the product", {a, b});
        }
      }
    }
    return restrict_to(S, m);
  }

  Quotient quotient_by_partition(Semigroup const& S, std::span<std::size_t const> class_of) {
    std::size_t const n = S.size();
    if (class_of.size() != n) {
      throw InvalidInput("partition does not cover the semigroup");
    }
    std::map<std::size_t, Elem> renumber;
    std::vector<Elem>           proj(n);
    std::vector<Elem>           rep;
    for (Elem x = 0; x < n; ++x) {
      auto [it, fresh] = renumber.try_emplace(class_of[x], static_cast<Elem>(rep.size()));
      if (fresh) {
        rep.push_back(x);
      }
      proj[x] = it->second;
    }
    std::size_t const k = rep.size();
    std::vector<Elem> t(k * k, no_elem);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem const  c    = proj[S(a, b)];
        Elem&       cell = t[proj[a] * k + proj[b]];
        if (cell == no_elem) {
          cell = c;
        } else if (cell != c) {
          throw NotACongruence("partition is not compatible with the product",
                               {rep[proj[a]], rep[proj[b]], a, b});
        }
      }
    }
    std::vector<std::string> labels;
    if (S.has_labels()) {
      for (Elem r : rep) {
        labels.push_back(S.label(r));
      }
    }
    Semigroup Q = Semigroup::unchecked(k, std::move(t), std::move(labels));
    return {Q, SemigroupHom(S, Q, std::move(proj))};
  }

  ////////////////////////////////////////////////////////////////////////
  // Depth
  ////////////////////////////////////////////////////////////////////////

  DepthResult depth_analysis(Semigroup const& S) {
    DepthResult res;
    ElementSet const E = idempotents(S);
    res.chain.push_back(E);
    // E^k strictly grows until it repeats, so at most n rounds.
    while (true) {
      ElementSet next = set_product(S, res.chain.back(), E);
      bool const stable = next == res.chain.back();
      res.chain.push_back(std::move(next));
      if (stable) {
        break;
      }
    }
    if (res.chain.back().count() == S.size()) {
      res.kind  = DepthKind::semiband;
      res.depth = res.chain.size() - 1;
    }
    return res;
  }

  std::optional<std::size_t> element_depth(Semigroup const& S, Elem x) {
    DepthResult const d = depth_analysis(S);
    for (std::size_t i = 0; i < d.chain.size(); ++i) {
      if (d.chain[i].contains(x)) {
        return i + 1;
      }
    }
    return std::nullopt;
  }

  CoverResult is_idempotent_covered(Semigroup const& S) {
    std::vector<Elem> const E = idempotents(S).elements();
    for (Elem s = 0; s < S.size(); ++s) {
      bool right = false, left = false;
      for (Elem e : E) {
        right = right || S(s, e) == s;
        left  = left || S(e, s) == s;
      }
      if (!right || !left) {
        return {false, s};
      }
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // .sgp files
  ////////////////////////////////////////////////////////////////////////

  Semigroup read_sgp(std::istream& in) {
    std::vector<std::string> labels;
    std::vector<long long>   numbers;
    std::string              line;
    while (std::getline(in, line)) {
      auto const first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) {
        continue;
      }
      if (line[first] == '#') {
        std::string const key = "labels:";
        auto const        pos = line.find(key, first);
        if (pos != std::string::npos) {
          std::istringstream ls(line.substr(pos + key.size()));
          std::string        w;
          labels.clear();
          while (ls >> w) {
            labels.push_back(w);
          }
        }
        continue;
      }
      std::istringstream ls(line);
      std::string        w;
      while (ls >> w) {
        try {
          std::size_t used = 0;
          long long   v    = std::stoll(w, &used);
          if (used != w.size()) {
            throw InvalidInput("");
          }
          numbers.push_back(v);
        } catch (std::exception const&) {
          throw InvalidInput(fmt::format("not an integer in .sgp input: '{}'", w));
        }
      }
    }
    if (numbers.empty()) {
      throw InvalidInput("empty .sgp input");
    }
    if (numbers[0] <= 0) {
      throw InvalidInput(fmt::format("order must be positive, got {}", numbers[0]));
    }
    auto const n = static_cast<std::size_t>(numbers[0]);
    if (numbers.size() != n * n + 1) {
      throw InvalidInput(fmt::format(
          "expected {} table entries for order {}, found {}", n * n, n, numbers.size() - 1));
    }
    std::vector<Elem> flat;
    flat.reserve(n * n);
    for (std::size_t i = 1; i < numbers.size(); ++i) {
      if (numbers[i] < 0 || static_cast<std::size_t>(numbers[i]) >= n) {
        throw IndexOutOfRange(fmt::format(
            "table entry {} at ({}, {}) outside [0, {})", numbers[i], (i - 1) / n, (i - 1) % n, n));
      }
      flat.push_back(static_cast<Elem>(numbers[i]));
    }
    return make_semigroup(n, std::move(flat), std::move(labels));
  }

  Semigroup read_sgp_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InvalidInput(fmt::format("cannot open '{}'", path));
    }
    return read_sgp(in);
  }

  void write_sgp(std::ostream& out, Semigroup const& S) {
    out << to_sgp_string(S);
  }

  void write_sgp_file(std::string const& path, Semigroup const& S) {
    std::ofstream out(path);
    if (!out) {
      throw InvalidInput(fmt::format("cannot write '{}'", path));
    }
    write_sgp(out, S);
  }

  std::string to_sgp_string(Semigroup const& S) {
    std::string out;
    if (S.has_labels()) {
      out += fmt::format("# labels: {}\n", fmt::join(S.labels(), " "));
    }
    out += fmt::format("{}\n", S.size());
    for (Elem a = 0; a < S.size(); ++a) {
      out += fmt::format("{}\n", fmt::join(S.row(a), " "));
    }
    return out;
  }

}  // namespace semiband
