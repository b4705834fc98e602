#include <doctest.h>

#include <numeric>
#include <random>

#include "qsc/weight.hpp"

using namespace qsc;

namespace {

std::vector<Rat> rats(std::initializer_list<Rat> xs) { return std::vector<Rat>(xs); }

}  // namespace

TEST_CASE("kappa on the worked examples") {
  // (omega_1 + 2 omega_4 + omega_7, l=4) in sl_8
  Weight w = Weight::from_fundamental(8, {1, 0, 0, 2, 0, 0, 1});
  CHECK(w.rows() == std::vector<Int>{4, 3, 3, 3, 1, 1, 1, 0});
  AlcovePoint a = kappa(w, 4);
  CHECK(a.coords == rats({Rat(1, 2), Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(-1, 4), Rat(-1, 4),
                          Rat(-1, 4), Rat(-1, 2)}));
  CHECK(a.in_alcove());

  Weight w2 = Weight::from_fundamental(4, {1, 0, 1});
  CHECK(kappa(w2, 2).coords == rats({Rat(1, 2), Rat(0), Rat(0), Rat(-1, 2)}));

  CHECK(kappa(Weight::zero(5), 3) == AlcovePoint::center(5));
}

TEST_CASE("kappa gauge invariance") {
  Weight w = Weight::from_fundamental(5, {1, 0, 2, 0});
  std::vector<Int> rows = w.rows();
  for (auto& x : rows) x += 7;
  Weight shifted(5, std::move(rows));  // same weight class
  CHECK(shifted == w);
  CHECK(kappa(shifted, 4) == kappa(w, 4));
}

TEST_CASE("shift operations") {
  LineBundleData L;
  L.n = 4;
  L.degN = 0;
  L.level = 2;
  L.weights.assign(3, Weight(4, {2, 1, 1, 0}));

  LineBundleData f = shift_bundle(L, 0, ShiftDirection::forward);
  CHECK(f.degN == 1);
  CHECK(f.weights[0] == Weight(4, {1, 1, 0, 0}));
  CHECK(f.grade() == L.grade());
  CHECK(shift_bundle(f, 0, ShiftDirection::inverse) == L);

  LineBundleData cur = L;
  for (int i = 0; i < 4; ++i) cur = shift_bundle(cur, 1, ShiftDirection::forward);
  CHECK(cur.degN == 4);
  CHECK(cur.weights == L.weights);
  CHECK(cur.level == L.level);
}

TEST_CASE("galois relabelling") {
  Weight w = Weight::from_fundamental(4, {1, 0, 1});
  CHECK(galois_Tm(w, 3) == w);
  CHECK(galois_Tm(Weight::fundamental(5, 1), 2) == Weight::fundamental(5, 2));
  CHECK_THROWS_AS(galois_Tm(Weight::fundamental(4, 1), 2), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<Int> nd(2, 9);
    Int n = nd(rng);
    std::vector<Int> coeffs(static_cast<size_t>(n - 1));
    std::uniform_int_distribution<Int> cd(0, 3);
    for (auto& c : coeffs) c = cd(rng);
    Weight w2 = Weight::from_fundamental(n, coeffs);
    for (Int m = 1; m < n; ++m) {
      if (std::gcd(m, n) != 1) continue;
      for (Int m2 = 1; m2 < n; ++m2) {
        if (std::gcd(m2, n) != 1) continue;
        CHECK(galois_Tm(galois_Tm(w2, m), m2) == galois_Tm(w2, (m * m2) % n));
      }
      CHECK(galois_Tm(w2, 1) == w2);
    }
  }
}

TEST_CASE("galois relabelling preserves the grade coordinatewise") {
  LineBundleData L;
  L.n = 6;
  L.degN = 0;
  L.level = 3;
  L.weights = {Weight::from_fundamental(6, {1, 0, 0, 0, 1}),
               Weight::from_fundamental(6, {0, 0, 2, 0, 0}),
               Weight::from_fundamental(6, {0, 1, 0, 1, 0})};
  for (Int m : {1, 5}) {
    LineBundleData T = L;
    for (auto& w : T.weights) w = galois_Tm(w, m);
    CHECK(T.grade() == L.grade());
  }
}

TEST_CASE("normalize_indivisible") {
  LineBundleData L;
  L.n = 4;
  L.degN = 0;
  L.level = 4;
  L.weights.assign(3, Weight::from_fundamental(4, {2, 0, 2}));
  LineBundleData N = normalize_indivisible(L);
  CHECK(N.level == 2);
  CHECK(N.weights[0] == Weight::from_fundamental(4, {1, 0, 1}));
  CHECK(normalize_indivisible(N) == N);

  LineBundleData M;
  M.n = 3;
  M.degN = 0;
  M.level = 3;
  M.weights.assign(3, Weight::fundamental(3, 2));
  CHECK(normalize_indivisible(M) == M);
}

TEST_CASE("vertex_to_bundle") {
  AlcovePoint a(4, rats({Rat(1, 2), Rat(0), Rat(0), Rat(-1, 2)}));
  LineBundleData L = vertex_to_bundle({a, a, a});
  CHECK(L.level == 2);
  CHECK(L.weights[0] == Weight::from_fundamental(4, {1, 0, 1}));
  CHECK(L.grade() == 0);
  for (const auto& w : L.weights) CHECK(kappa(w, L.level) == a);

  CHECK(vertex_to_bundle({AlcovePoint::center(3), AlcovePoint::center(3)}).level == 1);

  AlcovePoint th(8, rats({Rat(1, 2), Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(-1, 4), Rat(-1, 4),
                          Rat(-1, 4), Rat(-1, 2)}));
  LineBundleData T = vertex_to_bundle({th, th, th});
  CHECK(T.level == 4);
  CHECK(T.weights[0] == Weight::from_fundamental(8, {1, 0, 0, 2, 0, 0, 1}));
}

TEST_CASE("central twist is an n-torsion action preserving the alcove") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<Int> nd(2, 7);
    Int n = nd(rng);
    // random rational alcove point: kappa of a random dominant weight
    std::uniform_int_distribution<Int> cd(0, 2);
    std::vector<Int> coeffs(static_cast<size_t>(n - 1));
    for (auto& c : coeffs) c = cd(rng);
    Weight w = Weight::from_fundamental(n, coeffs);
    Int level = std::max<Int>(w.width(), 1) + cd(rng);
    AlcovePoint a = kappa(w, level);
    AlcovePoint cur = a;
    for (Int m = 0; m < n; ++m) {
      CHECK(cur.in_alcove());
      cur = central_twist(cur, 1);
    }
    CHECK(cur == a);
    CHECK(central_twist(a, 3) ==
          central_twist(central_twist(central_twist(a, 1), 1), 1));
  }
}
