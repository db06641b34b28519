#include "kha/weights.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "kha/error.hpp"

namespace kha {

Slots slots_of(const DimVector& d) {
  Slots s;
  s.dims = d;
  s.offset = IVec(d.size());
  s.total = 0;
  for (Eigen::Index v = 0; v < d.size(); ++v) {
    s.offset[v] = s.total;
    s.total += d[v];
  }
  return s;
}

std::vector<std::pair<int, int>> Block::ranges() const {
  std::vector<std::pair<int, int>> out;
  for (Eigen::Index v = 0; v < dims.size(); ++v)
    if (dims[v] > 0) out.emplace_back(start[v], start[v] + dims[v]);
  return out;
}

Block root_block(const DimVector& d) {
  Slots s = slots_of(d);
  return Block{d, s.offset};
}

std::vector<Block> split_block(const Block& b,
                               const std::vector<DimVector>& parts) {
  DimVector total = DimVector::Zero(b.dims.size());
  for (const auto& p : parts) total += p;
  if (total != b.dims)
    throw Error("partition-mismatch", "parts do not sum to the block");
  std::vector<Block> out;
  IVec cursor = b.start;
  for (const auto& p : parts) {
    if (p.isZero())
      throw Error("partition-mismatch", "partition parts must be nonzero");
    out.push_back(Block{p, cursor});
    cursor += p;
  }
  return out;
}

namespace {

void ordered_partitions_rec(const DimVector& rest,
                            std::vector<DimVector>& acc,
                            std::vector<std::vector<DimVector>>& out) {
  if (rest.isZero()) {
    if (!acc.empty()) out.push_back(acc);
    return;
  }
  // Enumerate nonzero first parts p with 0 <= p <= rest componentwise.
  const Eigen::Index n = rest.size();
  DimVector p = DimVector::Zero(n);
  while (true) {
    Eigen::Index i = 0;
    while (i < n && p[i] == rest[i]) p[i++] = 0;
    if (i == n) break;
    p[i] += 1;
    acc.push_back(p);
    ordered_partitions_rec(rest - p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<std::vector<DimVector>> ordered_partitions(const DimVector& d,
                                                       int min_parts) {
  std::vector<std::vector<DimVector>> out;
  std::vector<DimVector> acc;
  ordered_partitions_rec(d, acc, out);
  std::erase_if(out, [&](const auto& p) {
    return static_cast<int>(p.size()) < min_parts;
  });
  return out;
}

std::vector<SlotWeight> block_weights(const Quiver& q, const Block& b) {
  std::vector<SlotWeight> out;
  for (auto [s, t] : q.edges)
    for (int i = 0; i < b.dims[s]; ++i)
      for (int j = 0; j < b.dims[t]; ++j)
        out.push_back({b.start[t] + j, b.start[s] + i});
  return out;
}

RVec block_rho(const Block& b, int total_slots) {
  RVec rho = RVec::Zero(total_slots);
  for (Eigen::Index v = 0; v < b.dims.size(); ++v) {
    const int n = b.dims[v];
    for (int k = 0; k < n; ++k)
      rho[b.start[v] + k] = frac(n - 1 - 2 * k, 2);
  }
  return rho;
}

RVec block_tau(const Block& b, int total_slots) {
  RVec tau = RVec::Zero(total_slots);
  const int n = b.total();
  for (auto [lo, hi] : b.ranges())
    for (int s = lo; s < hi; ++s) tau[s] = frac(1, n);
  return tau;
}

StructureWeights structure_weights(const DimVector& d) {
  if (d.isZero()) throw Error("zero-dimension", "structure weights need d != 0");
  Block root = root_block(d);
  const int total = d.sum();
  StructureWeights sw;
  sw.rho = block_rho(root, total);
  sw.nu = RVec::Constant(total, 1);
  sw.tau = block_tau(root, total);
  return sw;
}

Rational pair_weight(const IVec& cochar, const RVec& chi) {
  if (cochar.size() != chi.size())
    throw Error("slot-mismatch", "pairing needs matching slot counts");
  Rational acc = 0;
  for (Eigen::Index i = 0; i < chi.size(); ++i)
    if (cochar[i] != 0) acc += Rational(cochar[i]) * chi[i];
  return acc;
}

long pair_weight(const IVec& cochar, const IVec& chi) {
  if (cochar.size() != chi.size())
    throw Error("slot-mismatch", "pairing needs matching slot counts");
  long acc = 0;
  for (Eigen::Index i = 0; i < chi.size(); ++i)
    acc += static_cast<long>(cochar[i]) * chi[i];
  return acc;
}

IVec partition_cocharacter(const std::vector<Block>& parts, int total_slots) {
  const int k = static_cast<int>(parts.size());
  long total = 0, weighted = 0;
  for (int i = 0; i < k; ++i) {
    total += parts[i].total();
    weighted += static_cast<long>(i + 1) * parts[i].total();
  }
  std::vector<long> values(k);
  long g = 0;
  for (int i = 0; i < k; ++i) {
    values[i] = total * (i + 1) - weighted;
    g = std::gcd(g, std::abs(values[i]));
  }
  if (g > 1)
    for (auto& v : values) v /= g;
  IVec lambda = IVec::Zero(total_slots);
  for (int i = 0; i < k; ++i)
    for (auto [lo, hi] : parts[i].ranges())
      for (int s = lo; s < hi; ++s) lambda[s] = static_cast<int>(values[i]);
  return lambda;
}

std::optional<Straightened> dot_straighten(const std::vector<Block>& blocks,
                                           const RVec& chi, int total_slots) {
  RVec rho = RVec::Zero(total_slots);
  for (const auto& b : blocks) rho += block_rho(b, total_slots);
  RVec y = chi + rho;
  long length = 0;
  for (const auto& b : blocks)
    for (auto [lo, hi] : b.ranges()) {
      for (int i = lo; i < hi; ++i)
        for (int j = i + 1; j < hi; ++j) {
          if (y[i] == y[j]) return std::nullopt;  // dot-action wall
          if (y[i] < y[j]) ++length;
        }
      std::sort(y.data() + lo, y.data() + hi,
                [](const Rational& a, const Rational& b) { return a > b; });
    }
  return Straightened{y - rho, length};
}

bool is_dominant(const std::vector<Block>& blocks, const RVec& chi) {
  for (const auto& b : blocks)
    for (auto [lo, hi] : b.ranges())
      for (int i = lo; i + 1 < hi; ++i)
        if (chi[i] < chi[i + 1]) return false;
  return true;
}

RVec WeylElement::apply(const RVec& chi) const {
  RVec out(chi.size());
  for (Eigen::Index i = 0; i < chi.size(); ++i) out[perm[i]] = chi[i];
  return out;
}

IVec WeylElement::apply(const IVec& chi) const {
  IVec out(chi.size());
  for (Eigen::Index i = 0; i < chi.size(); ++i) out[perm[i]] = chi[i];
  return out;
}

WeylElement WeylElement::inverse() const {
  IVec inv(perm.size());
  for (Eigen::Index i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return WeylElement{inv};
}

WeylElement WeylElement::compose(const WeylElement& then) const {
  IVec out(perm.size());
  for (Eigen::Index i = 0; i < perm.size(); ++i) out[i] = then.perm[perm[i]];
  return WeylElement{out};
}

WeylElement identity_weyl(int total_slots) {
  IVec p(total_slots);
  std::iota(p.data(), p.data() + total_slots, 0);
  return WeylElement{p};
}

std::vector<RVec> weyl_orbit(const std::vector<Block>& blocks, const RVec& chi,
                             int total_slots) {
  std::vector<RVec> orbit{chi};
  for (const auto& b : blocks)
    for (auto [lo, hi] : b.ranges()) {
      std::vector<RVec> next;
      for (const auto& base : orbit) {
        std::vector<Rational> vals(base.data() + lo, base.data() + hi);
        std::sort(vals.begin(), vals.end());
        do {
          RVec image = base;
          for (int s = lo; s < hi; ++s) image[s] = vals[s - lo];
          next.push_back(image);
        } while (std::next_permutation(vals.begin(), vals.end()));
      }
      orbit = std::move(next);
    }
  (void)total_slots;
  return orbit;
}

WeylElement random_weyl(const std::vector<Block>& blocks, int total_slots,
                        unsigned seed) {
  std::mt19937 rng(seed);
  WeylElement w = identity_weyl(total_slots);
  for (const auto& b : blocks)
    for (auto [lo, hi] : b.ranges())
      std::shuffle(w.perm.data() + lo, w.perm.data() + hi, rng);
  return w;
}

LeviBoundary levi_boundary_data(const Quiver& q, const DimVector& e,
                                const DimVector& f) {
  if (e.size() != f.size() || e.size() != q.num_vertices())
    throw Error("dimension-mismatch", "e and f must be indexed by Q's vertices");
  const DimVector d = e + f;
  Slots s = slots_of(d);

  LeviBoundary out;
  out.w_ef = identity_weyl(s.total);
  for (int v = 0; v < q.num_vertices(); ++v) {
    for (int i = 0; i < e[v]; ++i)
      out.w_ef.perm[s.offset[v] + i] = s.offset[v] + f[v] + i;
    for (int i = 0; i < f[v]; ++i)
      out.w_ef.perm[s.offset[v] + e[v] + i] = s.offset[v] + i;
  }

  IVec lambda;
  if (e.isZero() || f.isZero()) {
    lambda = IVec::Zero(s.total);
  } else {
    auto parts = split_block(root_block(d), {e, f});
    lambda = partition_cocharacter(parts, s.total);
  }

  out.n_ef = IVec::Zero(s.total);
  for (const auto& w : rep_weights(q, d)) {
    if (w.is_zero()) continue;
    if (lambda[w.plus] - lambda[w.minus] < 0) {
      out.n_ef[w.plus] += 1;
      out.n_ef[w.minus] -= 1;
    }
  }

  IVec twice_rho = IVec::Zero(s.total);
  for (int v = 0; v < q.num_vertices(); ++v) {
    const int lo = s.offset[v], hi = s.offset[v] + d[v];
    for (int a = lo; a < hi; ++a)
      for (int b = a + 1; b < hi; ++b)
        if (lambda[a] - lambda[b] < 0) {  // positive root beta_a - beta_b
          twice_rho[a] += 1;
          twice_rho[b] -= 1;
        }
  }
  out.rho_ef = to_rational(twice_rho) / 2;
  out.l_ef = out.n_ef - twice_rho;
  return out;
}

}  // namespace kha
