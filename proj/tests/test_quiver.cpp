#include <algorithm>
#include <random>

#include "doctest.h"
#include "kha/error.hpp"
#include "kha/quiver.hpp"

using namespace kha;

namespace {

DimVector dims(const Quiver& q, std::initializer_list<int> entries) {
  DimVector d(q.num_vertices());
  int i = 0;
  for (int e : entries) d[i++] = e;
  return d;
}

std::vector<IVec> dense_weights(const Quiver& q, const DimVector& d) {
  std::vector<IVec> out;
  for (const auto& w : rep_weights(q, d)) out.push_back(weight_vector(w, d.sum()));
  return out;
}

}  // namespace

TEST_CASE("loading quivers") {
  Quiver jordan = load_quiver_text("vertices: [1]\nedges: [[1, 1]]");
  CHECK(jordan.num_vertices() == 1);
  CHECK(jordan.edges.size() == 1);

  CHECK_THROWS_WITH_AS(load_quiver_text("vertices: [1, 2]\nedges: [[1, 2]]"),
                       doctest::Contains("(1, 2)"), Error);

  Quiver k = load_quiver_text("vertices: [1, 2]\nedges: [[1, 2], [2, 1]]");
  CHECK(k.adjacency()(0, 1) == 1);
  CHECK(k.adjacency()(1, 0) == 1);

  CHECK_THROWS_AS(load_quiver_text("vertices: [1, 1]\nedges: []"), Error);
  CHECK_THROWS_AS(load_quiver_text("vertices: [1]\nedges: [[1, 2]]"), Error);
  CHECK_THROWS_AS(load_quiver_text("vertices: ["), Error);
  CHECK(builtin_quiver("jordan").has_value());
  CHECK(builtin_quiver("loop2")->edges.size() == 2);
  CHECK(!builtin_quiver("pentagon").has_value());
}

TEST_CASE("euler form") {
  Quiver jordan = *builtin_quiver("jordan");
  CHECK(euler_form(jordan, dims(jordan, {1}), dims(jordan, {1})) == 0);

  Quiver k = *builtin_quiver("kronecker");
  CHECK(euler_form(k, dims(k, {1, 0}), dims(k, {0, 1})) == -1);

  // Symmetry and bilinearity over random dimension vectors.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(0, 3);
  for (const char* name : {"jordan", "kronecker", "loop2"}) {
    Quiver q = *builtin_quiver(name);
    for (int trial = 0; trial < 50; ++trial) {
      DimVector d(q.num_vertices()), e(q.num_vertices()), f(q.num_vertices());
      for (int v = 0; v < q.num_vertices(); ++v) {
        d[v] = dim(rng);
        e[v] = dim(rng);
        f[v] = dim(rng);
      }
      CHECK(euler_form(q, d, e) == euler_form(q, e, d));
      CHECK(euler_form(q, d, e + f) ==
            euler_form(q, d, e) + euler_form(q, d, f));
    }
  }
}

TEST_CASE("weights of the representation space") {
  Quiver jordan = *builtin_quiver("jordan");
  auto w2 = dense_weights(jordan, dims(jordan, {2}));
  REQUIRE(w2.size() == 4);
  int zeros = 0, plus = 0, minus = 0;
  for (const auto& w : w2) {
    if (w.isZero()) ++zeros;
    if (w[0] == 1 && w[1] == -1) ++plus;
    if (w[0] == -1 && w[1] == 1) ++minus;
  }
  CHECK(zeros == 2);
  CHECK(plus == 1);
  CHECK(minus == 1);

  auto w1 = dense_weights(jordan, dims(jordan, {1}));
  REQUIRE(w1.size() == 1);
  CHECK(w1[0].isZero());

  Quiver k = *builtin_quiver("kronecker");
  auto wk = dense_weights(k, dims(k, {1, 1}));
  REQUIRE(wk.size() == 2);
  CHECK(wk[0] == -wk[1]);
}

TEST_CASE("weight multiset properties") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dim(0, 3);
  std::uniform_int_distribution<int> nedge(1, 4);
  std::uniform_int_distribution<int> vtx(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    // Random symmetric quiver with <= 3 vertices and <= 4 edge pairs.
    std::vector<std::pair<int, int>> edges;
    for (int e = nedge(rng); e > 0; --e) {
      int s = vtx(rng), t = vtx(rng);
      edges.emplace_back(s, t);
      if (s != t) edges.emplace_back(t, s);
    }
    Quiver q = make_quiver({"a", "b", "c"}, edges);
    DimVector d(3);
    for (int v = 0; v < 3; ++v) d[v] = dim(rng);

    long expected = 0;
    for (auto [s, t] : q.edges) expected += static_cast<long>(d[s]) * d[t];
    auto weights = dense_weights(q, d);
    CHECK(static_cast<long>(weights.size()) == expected);

    // Closed under negation, with multiplicity.
    std::vector<std::vector<int>> sorted, negated;
    for (const auto& w : weights) {
      sorted.emplace_back(w.data(), w.data() + w.size());
      IVec n = -w;
      negated.emplace_back(n.data(), n.data() + n.size());
    }
    std::sort(sorted.begin(), sorted.end());
    std::sort(negated.begin(), negated.end());
    CHECK(sorted == negated);
  }
}
