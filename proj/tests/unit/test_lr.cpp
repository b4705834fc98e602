#include <doctest.h>

#include <random>

#include "qsc/lr.hpp"

using namespace qsc;

TEST_CASE("Pieri cases") {
  CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({1, 1})) == 1);
  CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({2})) == 1);
  CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({3})) == 0);
  CHECK(lr_coefficient(Partition({2}), Partition({1, 1}), Partition({3, 1})) == 1);
  CHECK(lr_coefficient(Partition({2}), Partition({1, 1}), Partition({2, 2})) == 0);
}

TEST_CASE("multiplicity two: c^{(3,2,1)}_{(2,1),(2,1)} = 2") {
  CHECK(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})) == 2);
  // the same number as a triple intersection: pair against the
  // complement of (2,1) in the 3x3 box of Gr(3,6)
  CHECK(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({4, 2})) == 1);
}

TEST_CASE("expansion agrees with the tableau oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Int> dim(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    Int rows = dim(rng);
    auto rand_part = [&](Int maxw) {
      std::vector<Int> p(static_cast<size_t>(dim(rng)));
      Int prev = maxw;
      for (auto& x : p) {
        std::uniform_int_distribution<Int> d(0, prev);
        x = d(rng);
        prev = x;
      }
      return Partition(p);
    };
    Partition a = rand_part(4), b = rand_part(4);
    Int max_rows = rows + 2;
    const auto& exp = lr_expand(max_rows, a, b);
    for (const auto& [nu, c] : exp) {
      CHECK(c == lr_coefficient(a, b, nu));
      CHECK(nu.length() <= max_rows);
    }
  }
}

TEST_CASE("expansion is symmetric in its arguments") {
  Partition a({3, 2, 1}), b({2, 2});
  CHECK(lr_expand(4, a, b) == lr_expand(4, b, a));
}

TEST_CASE("dimension count: sum of squares of standard tableaux style identity") {
  // (s_1)^4 expanded: coefficients are numbers of standard Young tableaux
  Partition one({1});
  auto e1 = lr_expand(4, one, one);
  std::map<Partition, Int> cur = e1;
  for (int step = 0; step < 2; ++step) {
    std::map<Partition, Int> next;
    for (const auto& [p, c] : cur) {
      for (const auto& [q, c2] : lr_expand(4, p, one)) next[q] += c * c2;
    }
    cur = next;
  }
  CHECK(cur[Partition({4})] == 1);
  CHECK(cur[Partition({3, 1})] == 3);
  CHECK(cur[Partition({2, 2})] == 2);
  CHECK(cur[Partition({2, 1, 1})] == 3);
  CHECK(cur[Partition({1, 1, 1, 1})] == 1);
}
