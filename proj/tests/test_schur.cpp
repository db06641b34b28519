#include <random>

#include "doctest.h"
#include "kha/error.hpp"
#include "kha/schur.hpp"

using namespace kha;

TEST_CASE("branching small GL(2) cases") {
  auto std2 = branch_gl({1, 0}, 1, 1);
  REQUIRE(std2.size() == 2);
  CHECK(std2.at({{1}, {0}}) == 1);
  CHECK(std2.at({{0}, {1}}) == 1);

  auto det = branch_gl({3, 3}, 1, 1);
  REQUIRE(det.size() == 1);
  CHECK(det.at({{3}, {3}}) == 1);

  auto neg = branch_gl({0, -1}, 1, 1);
  REQUIRE(neg.size() == 2);
  CHECK(neg.at({{0}, {-1}}) == 1);
  CHECK(neg.at({{-1}, {0}}) == 1);

  auto adj = branch_gl({2, 1, 0}, 2, 1);
  CHECK(adj.at({{2, 1}, {0}}) == 1);
  CHECK(adj.at({{2, 0}, {1}}) == 1);
  CHECK(adj.at({{1, 1}, {1}}) == 1);
  CHECK(adj.at({{1, 0}, {2}}) == 1);
  CHECK_THROWS_AS(branch_gl({0, 1}, 1, 1), Error);
}

TEST_CASE("weyl dimension formula") {
  CHECK(weyl_dim({1, 0}) == 2);
  CHECK(weyl_dim({2, 0}) == 3);
  CHECK(weyl_dim({1, 1, 0}) == 3);
  CHECK(weyl_dim({2, 1, 0}) == 8);
  CHECK(weyl_dim({5}) == 1);
  CHECK(weyl_dim({1, 0, 0, 0}) == 4);
  CHECK(weyl_dim({-1, -2}) == 2);
}

TEST_CASE("weight multisets") {
  auto w = gl_weight_multiset({1, 0});
  REQUIRE(w.size() == 2);
  CHECK(w.at({1, 0}) == 1);
  CHECK(w.at({0, 1}) == 1);

  auto adj = gl_weight_multiset({1, 0, -1});
  CHECK(adj.at({0, 0, 0}) == 2);
  CHECK(adj.at({1, -1, 0}) == 1);
  long total = 0;
  for (const auto& [key, m] : adj) total += m;
  CHECK(total == weyl_dim({1, 0, -1}));
}

TEST_CASE("two branching routes agree") {
  std::mt19937 rng(61);
  std::uniform_int_distribution<int> entry(-2, 3);
  for (int n = 2; n <= 4; ++n)
    for (int e = 1; e < n; ++e)
      for (int trial = 0; trial < 12; ++trial) {
        GlWeight lam(n);
        for (auto& x : lam) x = entry(rng);
        std::sort(lam.rbegin(), lam.rend());
        auto lr = branch_gl(lam, e, n - e);
        auto peel = branch_gl_by_weights(lam, e, n - e);
        CHECK(lr == peel);

        // Dimensions add up.
        mpz_class total = 0;
        for (const auto& [pair, c] : lr)
          total += c * weyl_dim(pair.first) * weyl_dim(pair.second);
        CHECK(total == weyl_dim(lam));
      }
}

TEST_CASE("branching is coassociative") {
  // Restricting along (e, f+g) then splitting f+g matches (e+f, g) then
  // splitting e+f, collected as triples.
  GlWeight lam = {2, 1, 0, -1};
  std::map<std::tuple<GlWeight, GlWeight, GlWeight>, long> left, right;
  for (const auto& [ab, c1] : branch_gl(lam, 1, 3))
    for (const auto& [bc, c2] : branch_gl(ab.second, 2, 1))
      left[{ab.first, bc.first, bc.second}] += c1 * c2;
  for (const auto& [ab, c1] : branch_gl(lam, 3, 1))
    for (const auto& [bc, c2] : branch_gl(ab.first, 1, 2))
      right[{bc.first, bc.second, ab.second}] += c1 * c2;
  CHECK(left == right);
}
