#include "kha/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kha/error.hpp"
#include "kha/lp.hpp"

namespace kha {

namespace {

// Nonzero weights of a scope, aggregated by value; the LP uses one variable
// per distinct weight with bounds scaled by multiplicity.
struct ScopeWeights {
  std::vector<SlotWeight> distinct;
  std::vector<int> mult;
  std::vector<int> slots;  // scope slots in ascending order
};

ScopeWeights scope_weights(const Quiver& q, const Block& scope) {
  ScopeWeights sw;
  std::map<std::pair<int, int>, int> agg;
  for (const auto& w : block_weights(q, scope))
    if (!w.is_zero()) agg[{w.plus, w.minus}] += 1;
  for (const auto& [key, m] : agg) {
    sw.distinct.push_back({key.first, key.second});
    sw.mult.push_back(m);
  }
  for (auto [lo, hi] : scope.ranges())
    for (int s = lo; s < hi; ++s) sw.slots.push_back(s);
  return sw;
}

int slot_row(const std::vector<int>& slots, int slot) {
  auto it = std::lower_bound(slots.begin(), slots.end(), slot);
  return static_cast<int>(it - slots.begin());
}

// min r >= 0 with chi|scope = sum c_beta beta + c tau_scope, -m r <= c <= 0.
// Couplings c_k + m_k r >= 0 become equality rows with slack variables.
// Returns nullopt when the equality system is infeasible for every r.
std::optional<Rational> minimal_r(const Quiver& q, const Block& scope,
                                  const RVec& chi) {
  ScopeWeights sw = scope_weights(q, scope);
  const int k = static_cast<int>(sw.distinct.size());
  const int rows = static_cast<int>(sw.slots.size());
  const int n_scope = scope.total();

  // Columns: t_0..t_{k-1}, s_0..s_{k-1}, c, r.
  LpProblem lp;
  lp.a = RMat::Zero(rows + k, 2 * k + 2);
  lp.b = RVec::Zero(rows + k);
  lp.c = RVec::Zero(2 * k + 2);
  lp.lower.assign(2 * k + 2, unbounded());
  lp.upper.assign(2 * k + 2, unbounded());
  for (int i = 0; i < k; ++i) {
    lp.a(slot_row(sw.slots, sw.distinct[i].plus), i) += 1;
    lp.a(slot_row(sw.slots, sw.distinct[i].minus), i) -= 1;
    lp.upper[i] = bound(0);
    // t_i + m_i r - s_i = 0
    lp.a(rows + i, i) = 1;
    lp.a(rows + i, 2 * k + 1) = sw.mult[i];
    lp.a(rows + i, k + i) = -1;
    lp.lower[k + i] = bound(0);
  }
  for (int row = 0; row < rows; ++row) {
    lp.a(row, 2 * k) = frac(1, n_scope);
    lp.b[row] = chi[sw.slots[row]];
  }
  lp.lower[2 * k + 1] = bound(0);
  lp.c[2 * k + 1] = -1;  // maximize -r

  LpResult res = solve_lp(lp);
  if (res.status != LpStatus::Optimal) return std::nullopt;
  return -res.objective;
}

// Feasibility of a witness at level r with a prescribed fully-saturated
// support: c_k = -m_k r for k in J, and c_k >= -m_k r + u off J, maximizing
// the shared slack u in [0, 1]. Strictness off J holds iff max u > 0.
bool saturated_support_feasible(const ScopeWeights& sw, int n_scope,
                                const RVec& chi, const Rational& r,
                                const std::vector<int>& in_j) {
  const int k = static_cast<int>(sw.distinct.size());
  const int rows = static_cast<int>(sw.slots.size());
  std::vector<int> free_idx;
  for (int i = 0; i < k; ++i)
    if (!in_j[i]) free_idx.push_back(i);
  const int kf = static_cast<int>(free_idx.size());

  // Columns: t (free weights), s (their slacks), c, u.
  LpProblem lp;
  lp.a = RMat::Zero(rows + kf, 2 * kf + 2);
  lp.b = RVec::Zero(rows + kf);
  lp.c = RVec::Zero(2 * kf + 2);
  lp.lower.assign(2 * kf + 2, unbounded());
  lp.upper.assign(2 * kf + 2, unbounded());

  RVec rhs = RVec::Zero(rows);
  for (int row = 0; row < rows; ++row) rhs[row] = chi[sw.slots[row]];
  for (int i = 0; i < k; ++i) {
    if (!in_j[i]) continue;
    Rational c = -Rational(sw.mult[i]) * r;
    rhs[slot_row(sw.slots, sw.distinct[i].plus)] -= c;
    rhs[slot_row(sw.slots, sw.distinct[i].minus)] += c;
  }
  for (int f = 0; f < kf; ++f) {
    const int i = free_idx[f];
    lp.a(slot_row(sw.slots, sw.distinct[i].plus), f) += 1;
    lp.a(slot_row(sw.slots, sw.distinct[i].minus), f) -= 1;
    lp.upper[f] = bound(0);
    // t_f - u - s_f = -m_i r
    lp.a(rows + f, f) = 1;
    lp.a(rows + f, 2 * kf + 1) = -1;
    lp.a(rows + f, kf + f) = -1;
    lp.b[rows + f] = -Rational(sw.mult[i]) * r;
    lp.lower[kf + f] = bound(0);
  }
  for (int row = 0; row < rows; ++row) {
    lp.a(row, 2 * kf) = frac(1, n_scope);
    lp.b[row] = rhs[row];
  }
  lp.lower[2 * kf + 1] = bound(0);
  lp.upper[2 * kf + 1] = bound(1);
  lp.c[2 * kf + 1] = 1;  // maximize u

  LpResult res = solve_lp(lp);
  return res.status == LpStatus::Optimal && res.objective > 0;
}

long p_invariant_scoped(const Quiver& q, const Block& scope, const RVec& chi,
                        const Rational& r) {
  ScopeWeights sw = scope_weights(q, scope);
  const int k = static_cast<int>(sw.distinct.size());
  const int n_scope = scope.total();

  // Candidate supports by increasing saturated-copy count, then
  // lexicographically in the fixed weight order.
  struct Candidate {
    long cost;
    std::vector<int> members;
  };
  std::vector<Candidate> candidates;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    Candidate c{0, std::vector<int>(k, 0)};
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) {
        c.members[i] = 1;
        c.cost += sw.mult[i];
      }
    candidates.push_back(std::move(c));
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.cost != b.cost) return a.cost < b.cost;
              return a.members > b.members;  // earlier weights first
            });
  for (const auto& c : candidates)
    if (saturated_support_feasible(sw, n_scope, chi, r, c.members))
      return c.cost;
  throw Error("p-invariant", "no witness at level r; r is not minimal");
}

}  // namespace

std::vector<Block> support_components(const Quiver& q, const Block& scope) {
  const int n = q.num_vertices();
  std::vector<int> parent(n);
  for (int v = 0; v < n; ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [s, t] : q.edges)
    if (scope.dims[s] > 0 && scope.dims[t] > 0) parent[find(s)] = find(t);
  std::map<int, Block> comps;
  for (int v = 0; v < n; ++v) {
    if (scope.dims[v] == 0) continue;
    int root = find(v);
    auto [it, fresh] = comps.try_emplace(
        root, Block{DimVector::Zero(n), scope.start});
    it->second.dims[v] = scope.dims[v];
    (void)fresh;
  }
  std::vector<Block> out;
  for (auto& [root, b] : comps) out.push_back(std::move(b));
  return out;
}

bool is_loop_free_point(const Quiver& q, const Block& scope) {
  int support = -1;
  for (Eigen::Index v = 0; v < scope.dims.size(); ++v)
    if (scope.dims[v] > 0) {
      if (support >= 0) return false;
      support = static_cast<int>(v);
    }
  if (support < 0) return false;
  for (auto [s, t] : q.edges)
    if (s == support && t == support) return false;
  return true;
}

std::optional<RegionWitness> in_scaled_region(const Quiver& q,
                                              const DimVector& d,
                                              const RVec& chi,
                                              const Rational& r) {
  if (r < 0) throw Error("bad-argument", "region scale r must be >= 0");
  Block root = root_block(d);
  ScopeWeights sw = scope_weights(q, root);
  const int k = static_cast<int>(sw.distinct.size());
  const int rows = static_cast<int>(sw.slots.size());
  if (rows == 0) return RegionWitness{{}, 0};

  LpProblem lp;
  lp.a = RMat::Zero(rows, k + 1);
  lp.b = RVec::Zero(rows);
  lp.c = RVec::Zero(k + 1);
  lp.lower.assign(k + 1, unbounded());
  lp.upper.assign(k + 1, unbounded());
  for (int i = 0; i < k; ++i) {
    lp.a(slot_row(sw.slots, sw.distinct[i].plus), i) += 1;
    lp.a(slot_row(sw.slots, sw.distinct[i].minus), i) -= 1;
    lp.lower[i] = bound(-Rational(sw.mult[i]) * r);
    lp.upper[i] = bound(0);
  }
  const int n = d.sum();
  for (int row = 0; row < rows; ++row) {
    lp.a(row, k) = frac(1, n);
    lp.b[row] = chi[sw.slots[row]];
  }
  LpResult res = solve_lp(lp);
  if (res.status != LpStatus::Optimal) return std::nullopt;

  std::map<std::pair<int, int>, Rational> per_copy;
  for (int i = 0; i < k; ++i)
    per_copy[{sw.distinct[i].plus, sw.distinct[i].minus}] =
        res.x[i] / sw.mult[i];
  RegionWitness witness;
  witness.line = res.x[k];
  for (const auto& w : rep_weights(q, d))
    witness.coeff.push_back(w.is_zero() ? Rational(0)
                                        : per_copy.at({w.plus, w.minus}));
  return witness;
}

Rational r_invariant_scoped(const Quiver& q, const Block& scope,
                            const RVec& chi, int total_slots) {
  (void)total_slots;
  ScopeWeights sw = scope_weights(q, scope);
  if (sw.distinct.empty()) {
    // Degenerate region: the tau line alone.
    auto ranges = scope.ranges();
    Rational slope;
    bool first = true;
    for (auto [lo, hi] : ranges)
      for (int s = lo; s < hi; ++s) {
        if (first) {
          slope = chi[s];
          first = false;
        } else if (chi[s] != slope) {
          throw Error("qo-off-line",
                      "r-invariant undefined: weight is off the tau line of a "
                      "loop-free component");
        }
      }
    return 0;
  }
  auto r = minimal_r(q, scope, chi);
  if (!r)
    throw Error("span-failure",
                "region membership infeasible for every r (span condition)");
  return *r;
}

Rational r_invariant(const Quiver& q, const DimVector& d, const RVec& chi) {
  Rational best = 0;
  for (const auto& comp : support_components(q, root_block(d)))
    best = std::max(best, r_invariant_scoped(q, comp, chi, d.sum()));
  return best;
}

long p_invariant(const Quiver& q, const DimVector& d, const RVec& chi,
                 const Rational& r) {
  if (r != r_invariant(q, d, chi))
    throw Error("p-invariant", "p is only defined at r = r_invariant(chi)");
  if (r <= 0)
    throw Error("p-invariant", "p is only defined for r > 0");
  long total = 0;
  for (const auto& comp : support_components(q, root_block(d))) {
    Rational rc = r_invariant_scoped(q, comp, chi, d.sum());
    if (rc == r) total += p_invariant_scoped(q, comp, chi, r);
  }
  return total;
}

RP rp_invariant(const Quiver& q, const DimVector& d, const RVec& chi) {
  RP rp;
  rp.r = r_invariant(q, d, chi);
  rp.p = rp.r > 0 ? p_invariant(q, d, chi, rp.r) : 0;
  return rp;
}

FaceData face_cocharacter_scoped(const Quiver& q, const Block& scope,
                                 const RVec& chi, const Rational& r,
                                 int total_slots) {
  ScopeWeights sw = scope_weights(q, scope);
  using Pattern = std::set<std::pair<int, int>>;

  struct Entry {
    std::vector<Block> parts;
    IVec lambda;
    Pattern pattern;
  };
  std::vector<Entry> hits;
  for (const auto& parts : ordered_partitions(scope.dims, 2)) {
    auto blocks = split_block(scope, parts);
    IVec lambda = partition_cocharacter(blocks, total_slots);
    Rational lhs = pair_weight(lambda, chi);
    Pattern pattern;
    for (size_t i = 0; i < sw.distinct.size(); ++i) {
      long v = lambda[sw.distinct[i].plus] - lambda[sw.distinct[i].minus];
      if (v > 0) {
        lhs += r * Rational(v) * sw.mult[i];
        pattern.insert({sw.distinct[i].plus, sw.distinct[i].minus});
      }
    }
    if (lhs == 0) hits.push_back({std::move(blocks), std::move(lambda),
                                  std::move(pattern)});
  }
  if (hits.empty())
    throw Error("no-face", "no face cocharacter found; is r minimal?");

  auto leq = [](const Pattern& a, const Pattern& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<int> maximal;
  for (size_t i = 0; i < hits.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < hits.size(); ++j)
      if (i != j && leq(hits[i].pattern, hits[j].pattern) &&
          hits[i].pattern != hits[j].pattern)
        dominated = true;
    if (!dominated) maximal.push_back(static_cast<int>(i));
  }
  for (size_t a = 0; a < maximal.size(); ++a)
    for (size_t b = a + 1; b < maximal.size(); ++b)
      if (hits[maximal[a]].pattern != hits[maximal[b]].pattern ||
          hits[maximal[a]].lambda != hits[maximal[b]].lambda)
        throw Error("non-unique-face",
                    "maximal face cocharacter is not unique",
                    {{"candidates", std::to_string(maximal.size())}});

  const Entry& top = hits[maximal.front()];
  FaceData face;
  face.parts = top.parts;
  face.lambda = top.lambda;
  face.n_pos = IVec::Zero(total_slots);
  for (size_t i = 0; i < sw.distinct.size(); ++i) {
    long v = top.lambda[sw.distinct[i].plus] - top.lambda[sw.distinct[i].minus];
    if (v > 0) {
      face.n_pos[sw.distinct[i].plus] += sw.mult[i];
      face.n_pos[sw.distinct[i].minus] -= sw.mult[i];
    }
  }
  return face;
}

FaceData face_cocharacter(const Quiver& q, const DimVector& d, const RVec& chi,
                          const Rational& r) {
  Block root = root_block(d);
  if (!is_dominant({root}, chi))
    throw Error("not-dominant", "face cocharacters require dominant chi");
  if (r != r_invariant(q, d, chi) || r <= 0)
    throw Error("bad-argument", "face cocharacters require r = r_invariant > 0");
  auto comps = support_components(q, root);
  if (comps.size() != 1)
    throw Error("disconnected",
                "face cocharacter of a disconnected support is per-component; "
                "use standard_form");
  return face_cocharacter_scoped(q, comps.front(), chi, r, d.sum());
}

namespace {

void descend(const Quiver& q, const Block& scope, int total_slots, RVec& chi,
             int parent, StandardForm& sf) {
  for (const auto& comp : support_components(q, scope)) {
    if (is_loop_free_point(q, comp)) {
      // Semisimple factor: split into unit leaves, no descent data.
      std::vector<DimVector> units;
      for (int i = 0; i < comp.total(); ++i) {
        DimVector u = DimVector::Zero(comp.dims.size());
        for (Eigen::Index v = 0; v < comp.dims.size(); ++v)
          if (comp.dims[v] > 0) u[v] = 1;
        units.push_back(u);
      }
      for (auto& leaf : split_block(comp, units)) sf.terminal.push_back(leaf);
      continue;
    }
    Rational r = r_invariant_scoped(q, comp, chi, total_slots);
    if (r <= frac(1, 2)) {
      sf.terminal.push_back(comp);
      continue;
    }
    FaceData face = face_cocharacter_scoped(q, comp, chi, r, total_slots);
    StandardFormNode node;
    node.parts = face.parts;
    node.lambda = face.lambda;
    node.r = r;
    node.n_pos = face.n_pos;
    node.parent = parent;
    const int index = static_cast<int>(sf.nodes.size());
    sf.nodes.push_back(node);
    chi += r * to_rational(face.n_pos);
    for (const auto& part : face.parts) descend(q, part, total_slots, chi, index, sf);
  }
}

}  // namespace

StandardForm standard_form(const Quiver& q, const DimVector& d,
                           const RVec& chi) {
  Block root = root_block(d);
  if (!is_dominant({root}, chi))
    throw Error("not-dominant", "standard form requires dominant chi");
  StandardForm sf;
  sf.residual = chi;
  descend(q, root, d.sum(), sf.residual, -1, sf);
  return sf;
}

bool in_levi_region(const Quiver& q, const std::vector<Block>& terminal,
                    const RVec& psi, const Rational& s, int total_slots) {
  // Equal slopes within each connected component of the ambient support.
  DimVector support = DimVector::Zero(terminal.front().dims.size());
  for (const auto& b : terminal) support += b.dims;
  Block ambient{support, terminal.front().start};
  for (const auto& b : terminal)
    for (Eigen::Index v = 0; v < support.size(); ++v)
      if (b.dims[v] > 0) ambient.start[v] = std::min(ambient.start[v], b.start[v]);
  auto comps = support_components(q, ambient);
  for (const auto& comp : comps) {
    std::optional<Rational> slope;
    for (const auto& b : terminal) {
      bool inside = false;
      for (Eigen::Index v = 0; v < support.size(); ++v)
        if (b.dims[v] > 0 && comp.dims[v] > 0) inside = true;
      if (!inside) continue;
      Rational total = 0;
      for (auto [lo, hi] : b.ranges())
        for (int sl = lo; sl < hi; ++sl) total += psi[sl];
      Rational sl = total / b.total();
      if (!slope)
        slope = sl;
      else if (*slope != sl)
        return false;
    }
  }
  // Per-factor zonotope membership at level s (no tau line).
  for (const auto& b : terminal) {
    ScopeWeights sw = scope_weights(q, b);
    Rational total = 0;
    for (auto [lo, hi] : b.ranges())
      for (int sl = lo; sl < hi; ++sl) total += psi[sl];
    RVec centered = psi;
    Rational slope = total / b.total();
    for (auto [lo, hi] : b.ranges())
      for (int sl = lo; sl < hi; ++sl) centered[sl] -= slope;

    const int k = static_cast<int>(sw.distinct.size());
    const int rows = static_cast<int>(sw.slots.size());
    if (k == 0) {
      for (int row = 0; row < rows; ++row)
        if (centered[sw.slots[row]] != 0) return false;
      continue;
    }
    LpProblem lp;
    lp.a = RMat::Zero(rows, k);
    lp.b = RVec::Zero(rows);
    lp.c = RVec::Zero(k);
    lp.lower.assign(k, VarBound{});
    lp.upper.assign(k, VarBound{});
    for (int i = 0; i < k; ++i) {
      lp.a(slot_row(sw.slots, sw.distinct[i].plus), i) += 1;
      lp.a(slot_row(sw.slots, sw.distinct[i].minus), i) -= 1;
      lp.lower[i] = bound(-Rational(sw.mult[i]) * s);
      lp.upper[i] = bound(0);
    }
    for (int row = 0; row < rows; ++row) lp.b[row] = centered[sw.slots[row]];
    if (solve_lp(lp).status != LpStatus::Optimal) return false;
  }
  (void)total_slots;
  return true;
}

}  // namespace kha
