#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvedrift/occupancy.hpp"
#include "curvedrift/zcover.hpp"

using namespace curvedrift;

namespace {

OccupancyState st(int n, bool r, int i, int j) { return {n, r, i, j}; }

// Independent replay of the three window rules as a flat list of states,
// with -1 marking exponents inside a wrap.
std::vector<std::array<int, 3>> flat_trace(int n) {
  std::vector<std::array<int, 3>> out{{1, 1, 1}};
  int r = 1, i = 1, j = 1;
  for (;;) {
    if (r) {
      if (j == n - 1) break;
      r = 0;
      ++j;
      out.push_back({0, i, j});
    } else if (j < n - 1) {
      ++i;
      ++j;
      out.push_back({0, i, j});
    } else {
      const int width = n - i;
      for (int s = 1; s < width; ++s) out.push_back({-1, 0, 0});
      r = 1;
      i = 1;
      j = width;
      out.push_back({1, i, j});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("advance examples") {
  auto a = advance(st(6, true, 1, 2));
  CHECK(a.state == st(6, false, 1, 3));
  CHECK(a.steps == 1);
  a = advance(st(6, false, 2, 3));
  CHECK(a.state == st(6, false, 3, 4));
  CHECK(a.steps == 1);
  a = advance(st(6, false, 4, 5));
  CHECK(a.state == st(6, true, 1, 2));
  CHECK(a.steps == 2);
  CHECK_THROWS_AS(advance(st(6, true, 1, 5)), SaturationSignal);
}

TEST_CASE("trace for n = 5") {
  const auto t = run_trace(5);
  REQUIRE(t.size() >= 8);
  const std::vector<std::optional<OccupancyState>> expected{
      st(5, true, 1, 1), st(5, false, 1, 2), st(5, false, 2, 3), st(5, false, 3, 4),
      std::nullopt,      st(5, true, 1, 2),  st(5, false, 1, 3), st(5, false, 2, 4)};
  for (int e = 0; e < 8; ++e) {
    CHECK(t[e].exponent == e);
    CHECK(t[e].state == expected[e]);
  }
}

TEST_CASE("trace matches the flat replay") {
  for (int n = 4; n <= 40; ++n) {
    const auto t = run_trace(n);
    const auto f = flat_trace(n);
    REQUIRE(t.size() == f.size());
    int width = 0;
    for (std::size_t e = 0; e < t.size(); ++e) {
      REQUIRE(t[e].exponent == static_cast<int>(e));
      if (f[e][0] < 0) {
        REQUIRE(!t[e].state);
        continue;
      }
      REQUIRE(t[e].state);
      REQUIRE(t[e].state->has_r == (f[e][0] == 1));
      REQUIRE(t[e].state->i == f[e][1]);
      REQUIRE(t[e].state->j == f[e][2]);
      if (t[e].state->has_r) REQUIRE(t[e].state->i == 1);
      const int w = t[e].state->j - t[e].state->i;
      REQUIRE(w >= width);
      width = w;
    }
  }
}

TEST_CASE("checkpoints") {
  for (int n = 4; n <= 50; ++n) {
    const auto t = run_trace(n);
    for (int k = 2; k <= n - 2; ++k) {
      const int e = (k - 1) * n - k;
      REQUIRE(e < static_cast<int>(t.size()));
      REQUIRE(t[e].state == st(n, false, n - k, n - 1));
    }
  }
  CHECK(run_trace(4)[2].state == st(4, false, 2, 3));
}

TEST_CASE("maximal disjoint exponent") {
  CHECK(max_disjoint_exponent(4) == 2);
  CHECK(max_disjoint_exponent(5) == 7);
  CHECK(max_disjoint_exponent(6) == 14);
  for (int n = 4; n <= 200; ++n) {
    REQUIRE(max_disjoint_exponent(n) == n * n - 4 * n + 2);
    REQUIRE(max_disjoint_exponent(n) == certified_bound(Family::Magic, n).power);
  }
  CHECK_THROWS_AS(max_disjoint_exponent(3), PreconditionError);
}

TEST_CASE("disk bounds") {
  const auto d4 = disk_bounds(4);
  CHECK(d4.even.bound() == Rational(1, 2));
  CHECK(d4.odd.bound() == Rational(1, 2));
  const auto d10 = disk_bounds(10);
  CHECK(d10.even.bound() == Rational(1, 62));
  CHECK(d10.odd.bound() == Rational(1, 62));
  CHECK(d10.even.group == "Mod(D_20)");
  CHECK(d10.odd.group == "Mod(D_19)");
  CHECK(d10.odd.has_step("fill_puncture"));
  CHECK_FALSE(d10.even.has_step("fill_puncture"));
  CHECK(replay(d10.odd) == d10.odd.bound());
  CHECK(disk_bounds(5).even.bound() == certified_bound(Family::Magic, 5).bound());
  CHECK_THROWS_AS(disk_bounds(3), PreconditionError);
}
