#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "semiband/enumeration.hpp"
#include "semiband/isomorphism.hpp"

using namespace semiband;

namespace {
  // Every table on [0, n), associative or not, in lexicographic order.
  std::vector<std::vector<Elem>> full_scan(std::size_t n) {
    std::size_t const cells = n * n;
    std::vector<Elem> t(cells, 0);
    std::vector<std::vector<Elem>> out;
    while (true) {
      if (oracle::associative(n, t)) {
        out.push_back(t);
      }
      std::size_t i = cells;
      while (i > 0 && t[i - 1] == n - 1) {
        t[--i] = 0;
      }
      if (i == 0) {
        return out;
      }
      ++t[i - 1];
    }
  }

  // One representative per class, comparing by brute-force relabeling.
  std::vector<Semigroup> classes(std::vector<std::vector<Elem>> const& tables, std::size_t n, bool anti) {
    std::vector<Semigroup> reps;
    for (auto const& t : tables) {
      auto const S = make_semigroup(n, t);
      bool seen = false;
      for (auto const& r : reps) {
        seen = oracle::isomorphic_by_permutation(S, r)
               || (anti && oracle::isomorphic_by_permutation(opposite(S), r));
        if (seen) {
          break;
        }
      }
      if (!seen) {
        reps.push_back(S);
      }
    }
    return reps;
  }

  // Each member matches exactly one representative and vice versa.
  void same_classes(std::vector<Semigroup> const& members, std::vector<Semigroup> const& reps, bool anti) {
    REQUIRE(members.size() == reps.size());
    std::vector<int> hits(reps.size(), 0);
    for (auto const& S : members) {
      int matched = 0;
      for (std::size_t i = 0; i < reps.size(); ++i) {
        if (oracle::isomorphic_by_permutation(S, reps[i])
            || (anti && oracle::isomorphic_by_permutation(opposite(S), reps[i]))) {
          ++hits[i];
          ++matched;
        }
      }
      CHECK(matched == 1);
    }
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  }

  struct EnvGuard {
    explicit EnvGuard(char const* value) {
      ::setenv("SBF_ORDER_CAP", value, 1);
    }
    ~EnvGuard() {
      ::unsetenv("SBF_ORDER_CAP");
    }
  };
}  // namespace

TEST_CASE("enumerator agrees with a full scan", "[enumeration]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    INFO(n);
    auto const scan = full_scan(n);
    CHECK(associative_tables(n) == scan);
    CHECK(enumerate_semigroups(n, Modulo::none).members.size() == scan.size());
    same_classes(enumerate_semigroups(n, Modulo::isomorphism).members, classes(scan, n, false), false);
    same_classes(enumerate_semigroups(n, Modulo::iso_anti).members, classes(scan, n, true), true);
  }
}

TEST_CASE("semigroup counts", "[enumeration]") {
  std::vector<std::size_t> const labelled{1, 8, 113, 3492};
  std::vector<std::size_t> const iso{1, 5, 24, 188};
  std::vector<std::size_t> const anti{1, 4, 18, 126};
  for (std::size_t n = 1; n <= 4; ++n) {
    INFO(n);
    CHECK(enumerate_semigroups(n, Modulo::none).members.size() == labelled[n - 1]);
    CHECK(enumerate_semigroups(n, Modulo::isomorphism).members.size() == iso[n - 1]);
    CHECK(enumerate_semigroups(n, Modulo::iso_anti).members.size() == anti[n - 1]);
  }
}

TEST_CASE("canonical tables", "[enumeration][property]") {
  auto const c = enumerate_semigroups(3);
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    auto const& S     = c.members[i];
    auto const  canon = canonical_table(S);
    CHECK(canon == S.table());
    CHECK(canonical_table(3, canon) == canon);
    CHECK(canonical_table(opposite(S), Modulo::iso_anti) == canonical_table(S, Modulo::iso_anti));
    if (i + 1 < c.members.size()) {
      CHECK(S.table() < c.members[i + 1].table());
    }
  }
  // every labelled copy reduces to some member
  for (auto const& t : associative_tables(3)) {
    auto const canon = canonical_table(3, t);
    CHECK(std::any_of(c.members.begin(), c.members.end(),
                      [&](Semigroup const& S) { return S.table() == canon; }));
  }
}

TEST_CASE("order caps", "[enumeration]") {
  CHECK(order_cap() == 4);
  CHECK(order_cap(true) == 5);
  CHECK_THROWS_AS(enumerate_semigroups(5), OrderTooLarge);
  CHECK_THROWS_AS(enumerate_semigroups(0), InvalidInput);
  {
    EnvGuard env("2");
    CHECK(order_cap() == 2);
    CHECK_THROWS_AS(enumerate_semigroups(3), OrderTooLarge);
  }
  {
    EnvGuard env("9");
    CHECK(order_cap() == 5);
    CHECK_THROWS_AS(enumerate_semigroups(6), OrderTooLarge);
  }
  {
    EnvGuard env("many");
    CHECK_THROWS_AS(order_cap(), InvalidInput);
  }
}

TEST_CASE("corpus filters", "[enumeration]") {
  auto const c      = enumerate_semigroups(3);
  auto const groups = corpus_filter(c, Property::Group);
  CHECK(groups.members.size() == 1);
  CHECK(corpus_filter(c, Property::Band).members.size() == 10);
  auto const monoids = corpus_filter(c, [](Semigroup const& S) { return S.is_monoid(); });
  CHECK(monoids.members.size() == 7);
  CHECK(monoids.order == 3);
}

TEST_CASE("corpus export and import", "[enumeration][io]") {
  auto const dir = std::filesystem::temp_directory_path() / "sbf_corpus_test";
  std::filesystem::remove_all(dir);
  auto const c = enumerate_semigroups(2);
  export_corpus(c, dir.string());
  auto const back = read_sgp_directory(dir.string());
  REQUIRE(back.size() == c.members.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].second == c.members[i]);
  }
  std::ifstream manifest(dir / "manifest.json");
  auto const    j = nlohmann::json::parse(manifest);
  CHECK(j["order"] == 2);
  CHECK(j["count"] == 5);
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(read_sgp_directory(dir.string()), InvalidInput);
}
