#include "kha/schur.hpp"

#include <algorithm>
#include <functional>

#include "kha/error.hpp"

namespace kha {

namespace {

void require_dominant(const GlWeight& lam) {
  for (size_t i = 0; i + 1 < lam.size(); ++i)
    if (lam[i] < lam[i + 1])
      throw Error("not-dominant", "GL weight must be non-increasing");
}

// Shift so all entries are >= 0; branching commutes with det twists.
int normalize_shift(const GlWeight& lam) {
  int low = 0;
  for (int x : lam) low = std::min(low, x);
  return -low;
}

struct SkewCell {
  int row;
  int col;
};

// Cells of lam/mu in reverse reading order: top to bottom, right to left.
// Filling in this order makes the lattice-word condition a prefix check.
std::vector<SkewCell> skew_cells(const std::vector<int>& lam,
                                 const std::vector<int>& mu) {
  std::vector<SkewCell> cells;
  for (int r = 0; r < static_cast<int>(lam.size()); ++r) {
    int lo = r < static_cast<int>(mu.size()) ? mu[r] : 0;
    for (int c = lam[r] - 1; c >= lo; --c) cells.push_back({r, c});
  }
  return cells;
}

// Counts LR fillings of lam/mu with entries 1..f, bucketed by content.
void lr_fillings(const std::vector<int>& lam, const std::vector<int>& mu,
                 int f, std::map<GlWeight, long>& by_content) {
  auto cells = skew_cells(lam, mu);
  const int rows = static_cast<int>(lam.size());
  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; ++r) fill[r].assign(lam[r], 0);
  std::vector<int> count(f + 1, 0);

  std::function<void(size_t)> rec = [&](size_t at) {
    if (at == cells.size()) {
      GlWeight content(count.begin() + 1, count.end());
      by_content[content] += 1;
      return;
    }
    auto [r, c] = cells[at];
    // Row weakly increasing: bounded by the cell to the right.
    int hi = (c + 1 < lam[r]) ? fill[r][c + 1] : f;
    // Column strictly increasing against a filled cell above; cells of the
    // inner shape impose nothing.
    int lo = 1;
    if (r > 0 && c < lam[r - 1]) {
      int mu_above = (r - 1) < static_cast<int>(mu.size()) ? mu[r - 1] : 0;
      if (c >= mu_above) lo = fill[r - 1][c] + 1;
    }
    for (int v = lo; v <= hi; ++v) {
      if (v > 1 && count[v] + 1 > count[v - 1]) continue;  // lattice word
      fill[r][c] = v;
      ++count[v];
      rec(at + 1);
      --count[v];
      fill[r][c] = 0;
    }
  };
  rec(0);
}

}  // namespace

std::map<std::pair<GlWeight, GlWeight>, long> branch_gl(const GlWeight& lam,
                                                        int e, int f) {
  require_dominant(lam);
  if (static_cast<int>(lam.size()) != e + f)
    throw Error("dimension-mismatch", "branching needs |lam| = e + f");
  std::map<std::pair<GlWeight, GlWeight>, long> out;
  if (e + f == 0) {
    out[{{}, {}}] = 1;
    return out;
  }
  const int k = normalize_shift(lam);
  std::vector<int> shifted(lam.begin(), lam.end());
  for (auto& x : shifted) x += k;

  if (e == 0 || f == 0) {
    GlWeight full = lam;
    if (e == 0)
      out[{{}, full}] = 1;
    else
      out[{full, {}}] = 1;
    return out;
  }

  // mu runs over subdiagrams of the shifted lam with at most e rows.
  std::vector<int> mu(e, 0);
  std::function<void(int)> rec = [&](int row) {
    if (row == e) {
      std::map<GlWeight, long> by_content;
      lr_fillings(shifted, mu, f, by_content);
      for (const auto& [content, count] : by_content) {
        GlWeight mu_out(mu.begin(), mu.end());
        GlWeight nu_out = content;
        nu_out.resize(f, 0);
        // nu must be a partition shape; lattice fillings guarantee it.
        for (auto& x : mu_out) x -= k;
        for (auto& x : nu_out) x -= k;
        out[{mu_out, nu_out}] += count;
      }
      return;
    }
    int hi = shifted[row];
    if (row > 0) hi = std::min(hi, mu[row - 1]);
    for (int v = 0; v <= hi; ++v) {
      mu[row] = v;
      rec(row + 1);
    }
    mu[row] = 0;
  };
  rec(0);
  return out;
}

std::map<GlWeight, long> gl_weight_multiset(const GlWeight& lam) {
  require_dominant(lam);
  const int n = static_cast<int>(lam.size());
  std::map<GlWeight, long> out;
  if (n == 0) {
    out[{}] = 1;
    return out;
  }
  const int k = normalize_shift(lam);
  std::vector<int> shape(lam.begin(), lam.end());
  for (auto& x : shape) x += k;

  // Semistandard tableaux of the shifted shape with entries 1..n.
  std::vector<SkewCell> cells = skew_cells(shape, std::vector<int>(n, 0));
  std::vector<std::vector<int>> fill(n);
  for (int r = 0; r < n; ++r) fill[r].assign(shape[r], 0);
  std::vector<int> count(n + 1, 0);
  std::function<void(size_t)> rec = [&](size_t at) {
    if (at == cells.size()) {
      GlWeight content(count.begin() + 1, count.end());
      for (auto& x : content) x -= k;
      out[content] += 1;
      return;
    }
    auto [r, c] = cells[at];
    int hi = (c + 1 < shape[r]) ? fill[r][c + 1] : n;
    int lo = (r > 0 && c < shape[r - 1]) ? fill[r - 1][c] + 1 : 1;
    for (int v = lo; v <= hi; ++v) {
      fill[r][c] = v;
      ++count[v];
      rec(at + 1);
      --count[v];
      fill[r][c] = 0;
    }
  };
  rec(0);
  return out;
}

std::map<std::pair<GlWeight, GlWeight>, long> branch_gl_by_weights(
    const GlWeight& lam, int e, int f) {
  require_dominant(lam);
  if (static_cast<int>(lam.size()) != e + f)
    throw Error("dimension-mismatch", "branching needs |lam| = e + f");
  std::map<std::pair<GlWeight, GlWeight>, long> out;
  auto remaining = gl_weight_multiset(lam);
  std::map<GlWeight, std::map<GlWeight, long>> memo;
  auto weights_of = [&](const GlWeight& w) -> const std::map<GlWeight, long>& {
    auto it = memo.find(w);
    if (it == memo.end()) it = memo.emplace(w, gl_weight_multiset(w)).first;
    return it->second;
  };

  while (true) {
    // Largest remaining weight in lexicographic order; it is blockwise
    // sorted (the multiset is block-Weyl invariant) and extremal.
    auto top = remaining.rbegin();
    while (top != remaining.rend() && top->second == 0) ++top;
    if (top == remaining.rend()) break;
    GlWeight mu(top->first.begin(), top->first.begin() + e);
    GlWeight nu(top->first.begin() + e, top->first.end());
    long mult = top->second;
    out[{mu, nu}] += mult;
    for (const auto& [wm, cm] : weights_of(mu))
      for (const auto& [wn, cn] : weights_of(nu)) {
        GlWeight joint = wm;
        joint.insert(joint.end(), wn.begin(), wn.end());
        auto it = remaining.find(joint);
        if (it == remaining.end() || it->second < mult * cm * cn)
          throw Error("branch-peel", "weight multiset peeling failed");
        it->second -= mult * cm * cn;
      }
  }
  return out;
}

mpz_class weyl_dim(const GlWeight& lam) {
  require_dominant(lam);
  const int n = static_cast<int>(lam.size());
  mpz_class num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= lam[i] - lam[j] + j - i;
      den *= j - i;
    }
  mpz_class dim;
  mpz_divexact(dim.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return dim;
}

}  // namespace kha
