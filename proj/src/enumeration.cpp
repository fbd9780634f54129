#include "semiband/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

#include <fmt/format.h>
#include <json.hpp>

namespace semiband {

  namespace {
    class Backtrack {
     public:
      explicit Backtrack(std::size_t n) : n_(n), t_(n * n, no_elem) {}

      std::vector<std::vector<Elem>> run() {
        fill(0);
        return std::move(out_);
      }

     private:
      Elem at(Elem a, Elem b) const {
        return t_[a * n_ + b];
      }

      // Every triple whose four products are known must associate.
      bool consistent() const {
        for (Elem x = 0; x < n_; ++x) {
          for (Elem y = 0; y < n_; ++y) {
            Elem const xy = at(x, y);
            if (xy == no_elem) {
              continue;
            }
            for (Elem z = 0; z < n_; ++z) {
              Elem const yz = at(y, z);
              if (yz == no_elem) {
                continue;
              }
              Elem const l = at(xy, z);
              Elem const r = at(x, yz);
              if (l != no_elem && r != no_elem && l != r) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void fill(std::size_t cell) {
        if (cell == t_.size()) {
          out_.push_back(t_);
          return;
        }
        for (Elem v = 0; v < n_; ++v) {
          t_[cell] = v;
          if (consistent()) {
            fill(cell + 1);
          }
        }
        t_[cell] = no_elem;
      }

      std::size_t                    n_;
      std::vector<Elem>              t_;
      std::vector<std::vector<Elem>> out_;
    };

    std::vector<Elem> transpose(std::size_t n, std::span<Elem const> t) {
      std::vector<Elem> out(n * n);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          out[a * n + b] = t[b * n + a];
        }
      }
      return out;
    }

    std::size_t checked_order(std::size_t n, bool allow_order_five) {
      if (n == 0) {
        throw InvalidInput("order must be positive");
      }
      if (std::size_t const cap = order_cap(allow_order_five); n > cap) {
        throw OrderTooLarge(fmt::format("order {} exceeds the enumeration cap {}", n, cap));
      }
      return n;
    }
  }  // namespace

  char const* to_string(Modulo m) noexcept {
    switch (m) {
      case Modulo::none: return "none";
      case Modulo::isomorphism: return "isomorphism";
      case Modulo::iso_anti: return "isomorphism+anti-isomorphism";
    }
    return "?";
  }

  std::size_t order_cap(bool allow_order_five) {
    if (char const* env = std::getenv("SBF_ORDER_CAP"); env != nullptr && *env != '\0') {
      char*      end = nullptr;
      long const v   = std::strtol(env, &end, 10);
      if (*end != '\0' || v < 1) {
        throw InvalidInput(fmt::format("SBF_ORDER_CAP must be a positive integer, got '{}'", env));
      }
      return std::min(static_cast<std::size_t>(v), max_order);
    }
    return allow_order_five ? max_order : default_order_cap;
  }

  std::vector<std::vector<Elem>> associative_tables(std::size_t n, bool allow_order_five) {
    return Backtrack(checked_order(n, allow_order_five)).run();
  }

  std::vector<Elem> canonical_table(std::size_t n, std::span<Elem const> table) {
    std::vector<Elem> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Elem> best(table.begin(), table.end());
    std::vector<Elem> cur(n * n);
    do {
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          cur[p[x] * n + p[y]] = p[table[x * n + y]];
        }
      }
      if (cur < best) {
        best = cur;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
  }

  std::vector<Elem> canonical_table(Semigroup const& S, Modulo modulo) {
    std::size_t const n = S.size();
    if (modulo == Modulo::none) {
      return S.table();
    }
    auto c = canonical_table(n, S.table());
    if (modulo == Modulo::iso_anti) {
      auto const op = transpose(n, S.table());
      c             = std::min(c, canonical_table(n, op));
    }
    return c;
  }

  Corpus enumerate_semigroups(std::size_t n, Modulo modulo, bool allow_order_five) {
    auto tables = associative_tables(n, allow_order_five);
    std::set<std::vector<Elem>> reps;
    for (auto const& t : tables) {
      if (modulo == Modulo::none) {
        reps.insert(t);
        continue;
      }
      auto c = canonical_table(n, t);
      if (modulo == Modulo::iso_anti) {
        c = std::min(c, canonical_table(n, transpose(n, t)));
      }
      reps.insert(std::move(c));
    }
    Corpus out{n, modulo, {}};
    for (auto const& t : reps) {
      out.members.push_back(Semigroup::unchecked(n, t));
    }
    return out;
  }

  Corpus corpus_filter(Corpus const& c, std::function<bool(Semigroup const&)> const& keep) {
    Corpus out{c.order, c.modulo, {}};
    std::copy_if(c.members.begin(), c.members.end(), std::back_inserter(out.members), keep);
    return out;
  }

  Corpus corpus_filter(Corpus const& c, Property p) {
    return corpus_filter(c, [p](Semigroup const& S) {
      if (requires_zero(p) && !S.zero()) {
        return false;
      }
      return check_property(S, p).holds;
    });
  }

  void export_corpus(Corpus const& c, std::string const& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    nlohmann::json manifest{{"order", c.order},
                            {"modulo", to_string(c.modulo)},
                            {"count", c.members.size()},
                            {"members", nlohmann::json::array()}};
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      auto const name = fmt::format("s{}_{:04}.sgp", c.order, i);
      write_sgp_file((fs::path(dir) / name).string(), c.members[i]);
      manifest["members"].push_back(
          {{"file", name}, {"idempotents", idempotents(c.members[i]).count()}});
    }
    std::ofstream out(fs::path(dir) / "manifest.json");
    if (!out) {
      throw InvalidInput(fmt::format("cannot write manifest in {}", dir));
    }
    out << manifest.dump(2) << '\n';
  }

  std::vector<std::pair<std::string, Semigroup>> read_sgp_directory(std::string const& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) {
      throw InvalidInput(fmt::format("{} is not a directory", dir));
    }
    std::vector<std::string> files;
    for (auto const& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".sgp") {
        files.push_back(entry.path().string());
      }
    }
    std::sort(files.begin(), files.end());
    std::vector<std::pair<std::string, Semigroup>> out;
    for (auto const& f : files) {
      out.emplace_back(fs::path(f).filename().string(), read_sgp_file(f));
    }
    return out;
  }

}  // namespace semiband
