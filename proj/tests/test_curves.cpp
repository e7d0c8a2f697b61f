#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "curvedrift/catalog.hpp"
#include "curvedrift/curves.hpp"
#include "curvedrift/freegroup.hpp"

using namespace curvedrift;

namespace {

BraidWord random_braid(std::mt19937& rng, int N, int max_len) {
  std::vector<Letter> letters;
  for (int k = static_cast<int>(rng() % (max_len + 1)); k > 0; --k)
    letters.push_back({1 + static_cast<int>(rng() % (N - 1)), rng() % 2 ? 1 : -1});
  return BraidWord(N, letters);
}

// Image of a round curve computed through the free group only.
LaminationCoord word_image(const BraidWord& b, int i, int j) {
  return coordinates_of_word(b.strands(), cyclic_reduce(artin_action(b, round_word(i, j))));
}

// Dehn twist about the round curve around punctures i..j.
BraidWord round_twist(int N, int i, int j) {
  std::vector<Letter> cycle;
  for (int k = i; k < j; ++k) cycle.push_back({k, 1});
  return power(BraidWord(N, cycle), j - i + 1);
}

}  // namespace

TEST_CASE("standard curves") {
  CHECK(standard_curve(3, 1, 2).coords == std::vector<long long>{0, 1});
  for (int N = 3; N <= 7; ++N)
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) {
        if (i == 1 && j == N) continue;
        const auto c = standard_curve(N, i, j);
        CHECK(admissible(c));
        CHECK(!c.empty());
        CHECK(c == coordinates_of_word(N, round_word(i, j)));
        const auto comps = components(c);
        REQUIRE(comps.size() == 1);
        CHECK(coordinates_of_word(N, comps[0]) == c);
      }
  CHECK_THROWS_AS(standard_curve(3, 2, 2), CurveError);
}

TEST_CASE("intersection examples") {
  CHECK(intersection_number(standard_curve(3, 1, 2), standard_curve(3, 2, 3)) == 2);
  CHECK(intersection_number(standard_curve(5, 1, 2), standard_curve(5, 1, 3)) == 0);
  CHECK(intersection_number(standard_curve(5, 2, 3), standard_curve(5, 1, 4)) == 0);
  CHECK(intersection_number(standard_curve(5, 1, 2), standard_curve(5, 4, 5)) == 0);
  CHECK(intersection_number(standard_curve(5, 1, 3), standard_curve(5, 3, 5)) == 2);
  CHECK(intersection_number(standard_curve(5, 2, 3), standard_curve(5, 2, 3)) == 0);
  CHECK(word_intersection(3, round_word(1, 2), round_word(2, 3)) == 2);
}

TEST_CASE("max-plus action agrees with the free-group action") {
  std::mt19937 rng(11);
  for (int t = 0; t < 2000; ++t) {
    const int N = 3 + static_cast<int>(rng() % 5);
    const int i = 1 + static_cast<int>(rng() % (N - 1));
    const int j = i + 1 + static_cast<int>(rng() % (N - i));
    if (i == 1 && j == N) continue;
    const auto b = random_braid(rng, N, 8);
    REQUIRE(apply_braid(standard_curve(N, i, j), b) == word_image(b, i, j));
  }
}

TEST_CASE("braid relations and admissibility") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long long> d(-6, 6);
  for (int t = 0; t < 1000; ++t) {
    const int N = 3 + static_cast<int>(rng() % 5);
    LaminationCoord x{N, std::vector<long long>(2 * (N - 2))};
    for (auto& v : x.coords) v = d(rng);
    const auto b = random_braid(rng, N, 6);
    const auto y = apply_braid(x, b);
    REQUIRE(admissible(y));
    REQUIRE(apply_braid(y, inverse(b)) == x);
    const int k = 1 + static_cast<int>(rng() % (N - 1));
    if (k + 1 < N) {
      const BraidWord l(N, {{k, 1}, {k + 1, 1}, {k, 1}}), r(N, {{k + 1, 1}, {k, 1}, {k + 1, 1}});
      REQUIRE(apply_braid(x, l) == apply_braid(x, r));
    }
    for (int m = k + 2; m < N; ++m) {
      const BraidWord l(N, {{k, 1}, {m, -1}}), r(N, {{m, -1}, {k, 1}});
      REQUIRE(apply_braid(x, l) == apply_braid(x, r));
    }
  }
}

TEST_CASE("intersection is symmetric and braid invariant") {
  std::mt19937 rng(23);
  for (int t = 0; t < 500; ++t) {
    const int N = 4 + static_cast<int>(rng() % 3);
    const auto b1 = random_braid(rng, N, 5), b2 = random_braid(rng, N, 5), g = random_braid(rng, N, 4);
    const auto x = apply_braid(standard_curve(N, 1, 2), b1);
    const auto y = apply_braid(standard_curve(N, 2, 3), b2);
    const auto i_xy = intersection_number(x, y);
    REQUIRE(i_xy == intersection_number(y, x));
    REQUIRE(i_xy == intersection_number(apply_braid(x, g), apply_braid(y, g)));
    REQUIRE(intersection_number(x, x) == 0);
  }
}

TEST_CASE("Dehn twist intersection formula") {
  std::mt19937 rng(29);
  for (int t = 0; t < 300; ++t) {
    const int N = 4 + static_cast<int>(rng() % 3);
    const int i = 1 + static_cast<int>(rng() % (N - 2));
    const int j = i + 1 + static_cast<int>(rng() % (N - i - 1));
    const auto c = standard_curve(N, i, j);
    const auto b = apply_braid(standard_curve(N, 1, 2), random_braid(rng, N, 5));
    const int k = static_cast<int>(rng() % 7) - 3;
    const auto twisted = apply_braid(b, power(round_twist(N, i, j), k));
    const auto icb = intersection_number(c, b);
    REQUIRE(intersection_number(twisted, b) == std::abs(k) * icb * icb);
  }
}

TEST_CASE("spread intervals") {
  const auto beta = catalog("beta_magic", {}).word;
  CHECK(spread_interval(beta, 1) == SpreadInterval{-1, 0});
  CHECK(spread_interval(power(beta, 2), 1) == SpreadInterval{-2, 0});
  CHECK(spread_interval(BraidWord(3), 1) == SpreadInterval{0, 0});
  CHECK_THROWS_AS(spread_interval(BraidWord(3, {{1, 1}}), 1), CurveError);
  const auto seq = crossing_sequences(beta, 1);
  CHECK(seq.size() == 3);
}

TEST_CASE("spread of a square sits inside twice the spread") {
  std::mt19937 rng(31);
  int checked = 0;
  for (int t = 0; t < 3000; ++t) {
    const int N = 3 + static_cast<int>(rng() % 4);
    const auto b = random_braid(rng, N, 8);
    const auto p = underlying_permutation(b);
    std::vector<int> fixed;
    for (int k = 1; k <= N; ++k)
      if (p(k) == k) fixed.push_back(k);
    if (fixed.empty()) continue;
    const int cut = fixed[rng() % fixed.size()];
    const auto s1 = spread_interval(b, cut), s2 = spread_interval(power(b, 2), cut);
    REQUIRE(s1.a <= 0);
    REQUIRE(s1.b >= 0);
    REQUIRE(2 * s1.a <= s2.a);
    REQUIRE(s2.b <= 2 * s1.b);
    ++checked;
  }
  CHECK(checked > 1000);
}
