// Small named semigroups used across the test-suite.

#ifndef SEMIBAND_TESTS_FIXTURES_HPP
#define SEMIBAND_TESTS_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "semiband/enumeration.hpp"
#include "semiband/semigroup.hpp"

namespace fixtures {

  using semiband::make_semigroup;
  using semiband::Semigroup;

  inline Semigroup trivial() {
    return make_semigroup({{0}});
  }
  // xy = x
  inline Semigroup left_zero2() {
    return make_semigroup({{0, 0}, {1, 1}});
  }
  // xy = y
  inline Semigroup right_zero2() {
    return make_semigroup({{0, 1}, {0, 1}});
  }
  // {0, 1} under multiplication
  inline Semigroup semilattice2() {
    return make_semigroup({{0, 0}, {0, 1}});
  }
  inline Semigroup cyclic2() {
    return make_semigroup({{0, 1}, {1, 0}});
  }
  inline Semigroup cyclic3() {
    return make_semigroup({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  }
  // {a, 0}: element 0 is a, element 1 is the zero
  inline Semigroup null2() {
    return make_semigroup({{1, 1}, {1, 1}});
  }
  // 0 < a < 1 under min
  inline Semigroup chain3() {
    return make_semigroup({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
  }

  // Every semigroup of order 1..max_n up to isomorphism, named s{n}_{i}.
  inline std::vector<std::pair<std::string, Semigroup>> corpus(std::size_t max_n) {
    std::vector<std::pair<std::string, Semigroup>> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
      auto c = semiband::enumerate_semigroups(n);
      for (std::size_t i = 0; i < c.members.size(); ++i) {
        out.emplace_back("s" + std::to_string(n) + "_" + std::to_string(i), c.members[i]);
      }
    }
    return out;
  }

}  // namespace fixtures

#endif  // SEMIBAND_TESTS_FIXTURES_HPP
