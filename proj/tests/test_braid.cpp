#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "curvedrift/braid.hpp"
#include "curvedrift/catalog.hpp"
#include "curvedrift/freegroup.hpp"

using namespace curvedrift;

namespace {

BraidWord random_word(std::mt19937& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> idx(1, strands - 1), len(0, max_len), sgn(0, 1);
  std::vector<Letter> l;
  for (int k = len(rng); k > 0; --k) l.push_back({idx(rng), sgn(rng) ? 1 : -1});
  return BraidWord(strands, l);
}

// The image of x_k is a conjugate of x_{perm(k)}; read the middle letter.
Permutation permutation_from_free_group(const BraidWord& b) {
  Permutation p;
  for (int k = 1; k <= b.strands(); ++k) {
    const auto w = artin_action(b, {k});
    p.images.push_back(w[w.size() / 2]);
  }
  return p;
}

// Follow each strand top to bottom through the letters and count closed loops.
int traced_closure_components(const BraidWord& b) {
  const int n = b.strands();
  std::vector<int> bottom(n + 1);
  for (int start = 1; start <= n; ++start) {
    int pos = start;
    for (const auto& l : b.letters()) {
      if (pos == l.index) pos = l.index + 1;
      else if (pos == l.index + 1) pos = l.index;
    }
    bottom[start] = pos;
  }
  std::vector<bool> seen(n + 1, false);
  int loops = 0;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    ++loops;
    for (int p = s; !seen[p]; p = bottom[p]) seen[p] = true;
  }
  return loops;
}

}  // namespace

TEST_CASE("words reject out-of-range letters and small spheres") {
  CHECK_THROWS_AS(BraidWord(3, {{3, 1}}), BraidError);
  CHECK_THROWS_AS(BraidWord(3, {{0, 1}}), BraidError);
  CHECK_THROWS_AS(BraidWord(3, {{1, 2}}), BraidError);
  CHECK_THROWS_AS(BraidWord(2, {}, Flavor::Sphere), BraidError);
  CHECK_THROWS_AS(BraidWord(1), BraidError);
}

TEST_CASE("compose modes") {
  const BraidWord u(3, {{1, -1}, {1, -1}});
  const BraidWord v(3, {{2, 1}});
  const auto beta = compose(u, v, ComposeMode::Product);
  CHECK(beta == catalog("beta_magic", {}).word);
  CHECK(compose(beta, beta, ComposeMode::Power, 2) == catalog("phi_magic", {}).word);
  CHECK(free_reduce(product(beta, inverse(beta))).empty());
  CHECK(power(beta, 0).empty());
  CHECK(power(beta, -1) == inverse(beta));
  CHECK_THROWS_AS(product(beta, BraidWord(4)), BraidError);
  CHECK_THROWS_AS(product(BraidWord(3, {}, Flavor::Sphere), beta), BraidError);
}

TEST_CASE("underlying permutation examples") {
  const auto p = underlying_permutation(catalog("beta_magic", {}).word);
  CHECK(p.images == std::vector<int>{1, 3, 2});
  CHECK(underlying_permutation(BraidWord(5)) == Permutation::identity(5));
}

TEST_CASE("permutation agrees with the free-group oracle and is a homomorphism") {
  std::mt19937 rng(11);
  for (int t = 0; t < 10000; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const auto u = random_word(rng, n, 12), v = random_word(rng, n, 12);
    const auto pu = underlying_permutation(u), pv = underlying_permutation(v);
    REQUIRE(underlying_permutation(product(u, v)) == pu.compose(pv));
    if (t % 10 == 0) REQUIRE(pu == permutation_from_free_group(u));
  }
}

TEST_CASE("closure invariants") {
  const auto ci = closure_invariants(catalog("beta_magic", {}).word);
  CHECK(ci.closure_components == 2);
  CHECK(ci.braided_link_components == 3);
  CHECK(ci.betti == 3);
  const auto e = closure_invariants(BraidWord(6));
  CHECK(e.closure_components == 6);
  CHECK(e.betti == 7);
  CHECK_THROWS_AS(closure_invariants(BraidWord(4, {}, Flavor::Sphere)), BraidError);

  std::mt19937 rng(5);
  for (int t = 0; t < 2000; ++t) {
    const auto b = random_word(rng, 2 + static_cast<int>(rng() % 7), 20);
    const auto c = closure_invariants(b);
    REQUIRE(c.closure_components == traced_closure_components(b));
    REQUIRE(c.betti >= 2);
    const auto r = closure_invariants(free_reduce(b));
    REQUIRE(r.closure_components == c.closure_components);
    REQUIRE(underlying_permutation(free_reduce(b)) == underlying_permutation(b));
  }
}

TEST_CASE("delete_strand examples and errors") {
  CHECK(delete_strand(BraidWord(3, {{2, 1}}), 3) == BraidWord(2));
  CHECK(delete_strand(BraidWord(3, {{2, 1}}), 1) == BraidWord(2, {{1, 1}}));
  CHECK_THROWS_AS(delete_strand(BraidWord(3), 4), BraidError);
  CHECK_THROWS_AS(delete_strand(BraidWord(3), 0), BraidError);
  CHECK_THROWS_AS(delete_strand(BraidWord(2), 1), BraidError);
}

TEST_CASE("delete_strand restricts the permutation and splits over products") {
  std::mt19937 rng(23);
  for (int t = 0; t < 3000; ++t) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const auto u = random_word(rng, n, 20), v = random_word(rng, n, 20);
    const int s = 1 + static_cast<int>(rng() % n);
    const auto uv = product(u, v);
    REQUIRE(underlying_permutation(delete_strand(uv, s)) == underlying_permutation(uv).restrict_without(s));
    const int s2 = s;
    const int s1 = underlying_permutation(v)(s);
    REQUIRE(delete_strand(uv, s) == product(delete_strand(u, s1), delete_strand(v, s2)));
  }
}
