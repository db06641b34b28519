#include "doctest.h"
#include "kha/lp.hpp"

using namespace kha;

namespace {

LpProblem make(int rows, int cols) {
  LpProblem p;
  p.a = RMat::Zero(rows, cols);
  p.b = RVec::Zero(rows);
  p.c = RVec::Zero(cols);
  p.lower.assign(cols, unbounded());
  p.upper.assign(cols, unbounded());
  return p;
}

}  // namespace

TEST_CASE("simplex solves a textbook program exactly") {
  // max 3x + 2y  s.t.  x + y + s1 = 4,  x + 3y + s2 = 6,  all >= 0.
  LpProblem p = make(2, 4);
  p.a << 1, 1, 1, 0, 1, 3, 0, 1;
  p.b << 4, 6;
  p.c << 3, 2, 0, 0;
  for (auto& b : p.lower) b = bound(0);
  auto res = solve_lp(p);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.objective == 12);
  CHECK(res.x[0] == 4);
  CHECK(res.x[1] == 0);
}

TEST_CASE("fractional optimum stays exact") {
  // max x + y  s.t.  2x + y = 1,  x + 3y = 1,  x, y free.
  LpProblem p = make(2, 2);
  p.a << 2, 1, 1, 3;
  p.b << 1, 1;
  p.c << 1, 1;
  auto res = solve_lp(p);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.x[0] == frac(2, 5));
  CHECK(res.x[1] == frac(1, 5));
  CHECK(res.objective == frac(3, 5));
}

TEST_CASE("infeasible and unbounded are detected") {
  LpProblem p = make(1, 1);
  p.a << 1;
  p.b << -1;
  p.lower[0] = bound(0);
  CHECK(solve_lp(p).status == LpStatus::Infeasible);

  LpProblem u = make(1, 2);
  u.a << 1, -1;
  u.b << 0;
  u.c << 1, 0;
  u.lower[0] = bound(0);
  u.lower[1] = bound(0);
  CHECK(solve_lp(u).status == LpStatus::Unbounded);
}

TEST_CASE("two-sided bounds and shifted lower bounds") {
  // max x + 2y  s.t.  x + y = 3,  -1 <= x <= 2,  0 <= y <= 4.
  LpProblem p = make(1, 2);
  p.a << 1, 1;
  p.b << 3;
  p.c << 1, 2;
  p.lower[0] = bound(-1);
  p.upper[0] = bound(2);
  p.lower[1] = bound(0);
  p.upper[1] = bound(4);
  auto res = solve_lp(p);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.x[0] == -1);
  CHECK(res.x[1] == 4);
  CHECK(res.objective == 7);

  p.upper[1] = bound(frac(7, 2));
  res = solve_lp(p);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.x[1] == frac(7, 2));
  CHECK(res.x[0] == frac(-1, 2));

  p.lower[1] = bound(5);  // crossed bounds
  CHECK(solve_lp(p).status == LpStatus::Infeasible);
}

TEST_CASE("degenerate equalities with redundant rows") {
  // x = 1 stated twice plus a dependent third row.
  LpProblem p = make(3, 2);
  p.a << 1, 0, 1, 0, 2, 0;
  p.b << 1, 1, 2;
  p.c << 0, -1;
  p.lower[1] = bound(0);
  auto res = solve_lp(p);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.x[0] == 1);
  CHECK(res.x[1] == 0);
}
