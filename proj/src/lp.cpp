#include "kha/lp.hpp"

#include "kha/error.hpp"

namespace kha {

namespace {

// Standard-form tableau: max c^T y, E y = g, y >= 0.
class Simplex {
 public:
  Simplex(RMat e, RVec g, RVec c)
      : m_(static_cast<int>(e.rows())), n_(static_cast<int>(e.cols())) {
    // Normalize rhs signs, then append one artificial variable per row.
    for (int i = 0; i < m_; ++i)
      if (g[i] < 0) {
        e.row(i) = -e.row(i);
        g[i] = -g[i];
      }
    cols_ = n_ + m_;
    t_ = RMat::Zero(m_ + 1, cols_ + 1);
    t_.block(0, 0, m_, n_) = e;
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      t_(i, n_ + i) = 1;
      t_(i, cols_) = g[i];
      basis_[i] = n_ + i;
    }
    c_ = std::move(c);
  }

  LpStatus run(RVec& y, Rational& value) {
    // Phase 1: maximize -(sum of artificials).
    for (int j = 0; j <= cols_; ++j) {
      Rational acc = 0;
      for (int i = 0; i < m_; ++i) acc += t_(i, j);
      t_(m_, j) = (j >= n_ && j < cols_) ? acc - 1 : acc;
    }
    allow_artificial_ = false;  // artificials may leave, never re-enter
    iterate();
    if (t_(m_, cols_) != 0) return LpStatus::Infeasible;
    evict_artificials();

    // Phase 2: original objective expressed through the current basis.
    t_.row(m_).setZero();
    for (int j = 0; j < n_; ++j) t_(m_, j) = c_[j];
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_ && c_[basis_[i]] != 0)
        t_.row(m_) -= c_[basis_[i]] * t_.row(i);
    if (!iterate()) return LpStatus::Unbounded;

    y = RVec::Zero(n_);
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) y[basis_[i]] = t_(i, cols_);
    value = -t_(m_, cols_);
    return LpStatus::Optimal;
  }

 private:
  // Bland's rule: entering = smallest improving column, leaving = smallest
  // basic index among the tightest ratios. Returns false on unboundedness.
  bool iterate() {
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (j >= n_ && !allow_artificial_ && !in_basis(j)) continue;
        if (t_(m_, j) > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best = 0;
      for (int i = 0; i < m_; ++i) {
        if (t_(i, enter) <= 0) continue;
        Rational ratio = t_(i, cols_) / t_(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  bool in_basis(int j) const {
    for (int b : basis_)
      if (b == j) return true;
    return false;
  }

  void pivot(int row, int col) {
    t_.row(row) /= t_(row, col);
    for (int i = 0; i <= m_; ++i)
      if (i != row && t_(i, col) != 0) t_.row(i) -= t_(i, col) * t_.row(row);
    basis_[row] = col;
  }

  // After phase 1 a degenerate artificial can linger in the basis at value
  // zero; pivot it out on any structural column, or leave the (redundant)
  // row inert if its structural part vanished.
  void evict_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (int j = 0; j < n_; ++j)
        if (t_(i, j) != 0) {
          pivot(i, j);
          break;
        }
    }
  }

  int m_, n_, cols_;
  RMat t_;
  RVec c_;
  std::vector<int> basis_;
  bool allow_artificial_ = true;
};

}  // namespace

LpResult solve_lp(const LpProblem& problem) {
  const int m = static_cast<int>(problem.a.rows());
  const int n = static_cast<int>(problem.a.cols());
  if (problem.b.size() != m || problem.c.size() != n ||
      static_cast<int>(problem.lower.size()) != n ||
      static_cast<int>(problem.upper.size()) != n)
    throw Error("lp-shape", "inconsistent LP dimensions");
  for (int j = 0; j < n; ++j)
    if (problem.lower[j].has && problem.upper[j].has &&
        problem.lower[j].value > problem.upper[j].value)
      return {LpStatus::Infeasible, 0, {}};

  // Rewrite into standard form y >= 0. Each original variable becomes one
  // or two columns plus, for two-sided bounds, a slack row y + s = up - lo.
  int extra_rows = 0;
  for (int j = 0; j < n; ++j)
    if (problem.lower[j].has && problem.upper[j].has) ++extra_rows;

  std::vector<int> col_of(n), neg_col_of(n, -1);
  RVec shift(n);  // x = sign * y + shift
  std::vector<int> sign(n, 1);
  int cols = 0;
  for (int j = 0; j < n; ++j) {
    col_of[j] = cols++;
    if (problem.lower[j].has) {
      shift[j] = problem.lower[j].value;
    } else if (problem.upper[j].has) {
      shift[j] = problem.upper[j].value;
      sign[j] = -1;
    } else {
      shift[j] = 0;
      neg_col_of[j] = cols++;  // free: x = y+ - y-
    }
  }

  RMat e = RMat::Zero(m + extra_rows, cols + extra_rows);
  RVec g = RVec::Zero(m + extra_rows);
  RVec c = RVec::Zero(cols + extra_rows);
  for (int i = 0; i < m; ++i) {
    Rational rhs = problem.b[i];
    for (int j = 0; j < n; ++j) {
      const Rational& a = problem.a(i, j);
      if (a == 0) continue;
      e(i, col_of[j]) = a * sign[j];
      if (neg_col_of[j] >= 0) e(i, neg_col_of[j]) = -a;
      rhs -= a * shift[j];
    }
    g[i] = rhs;
  }
  for (int j = 0; j < n; ++j) {
    const Rational& a = problem.c[j];
    if (a == 0) continue;
    c[col_of[j]] += a * sign[j];
    if (neg_col_of[j] >= 0) c[neg_col_of[j]] -= a;
  }
  int row = m;
  int slack = cols;
  for (int j = 0; j < n; ++j)
    if (problem.lower[j].has && problem.upper[j].has) {
      e(row, col_of[j]) = 1;
      e(row, slack) = 1;
      g[row] = problem.upper[j].value - problem.lower[j].value;
      ++row;
      ++slack;
    }

  Simplex simplex(std::move(e), std::move(g), std::move(c));
  RVec y;
  Rational value = 0;
  LpStatus status = simplex.run(y, value);
  LpResult result;
  result.status = status;
  if (status != LpStatus::Optimal) return result;

  result.x = RVec(n);
  Rational objective = 0;
  for (int j = 0; j < n; ++j) {
    Rational v = Rational(sign[j]) * y[col_of[j]] + shift[j];
    if (neg_col_of[j] >= 0) v -= y[neg_col_of[j]];
    result.x[j] = v;
    objective += problem.c[j] * v;
  }
  result.objective = objective;
  return result;
}

}  // namespace kha
