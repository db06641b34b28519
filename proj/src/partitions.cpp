#include "kha/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "kha/error.hpp"
#include "kha/hall.hpp"

namespace kha {

std::string encode_partition(const Partition& a) {
  std::ostringstream out;
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) out << "|";
    for (Eigen::Index v = 0; v < a[i].d.size(); ++v) {
      if (v) out << ",";
      out << a[i].d[v];
    }
    out << ":" << a[i].w;
  }
  return out.str();
}

bool refines(const Partition& fine, const Partition& coarse) {
  DimVector df = DimVector::Zero(fine.front().d.size());
  DimVector dc = DimVector::Zero(coarse.front().d.size());
  long wf = 0, wc = 0;
  for (const auto& p : fine) {
    df += p.d;
    wf += p.w;
  }
  for (const auto& p : coarse) {
    dc += p.d;
    wc += p.w;
  }
  if (df != dc || wf != wc)
    throw Error("ambient-mismatch", "partitions have different ambient (d, w)");

  size_t at = 0;
  for (const auto& part : coarse) {
    DimVector acc = DimVector::Zero(df.size());
    long wacc = 0;
    bool matched = false;
    while (at < fine.size()) {
      acc += fine[at].d;
      wacc += fine[at].w;
      ++at;
      if (acc == part.d && wacc == part.w) {
        matched = true;
        break;
      }
      // Overshoot on any coordinate means failure.
      bool over = wacc > part.w && acc == part.d;
      for (Eigen::Index v = 0; v < acc.size(); ++v)
        if (acc[v] > part.d[v]) over = true;
      if (over) return false;
    }
    if (!matched) return false;
  }
  return at == fine.size();
}

namespace {

long saturated_copies(const Quiver& q, const DimVector& d, const IVec& lambda) {
  long count = 0;
  for (const auto& wt : rep_weights(q, d)) {
    if (wt.is_zero()) continue;
    if (lambda[wt.plus] - lambda[wt.minus] > 0) ++count;
  }
  return count;
}

// Half-sum of the positive roots pairing negatively with lambda.
RVec rho_negative(const DimVector& d, const IVec& lambda) {
  Slots s = slots_of(d);
  IVec twice = IVec::Zero(s.total);
  for (Eigen::Index v = 0; v < d.size(); ++v) {
    const int lo = s.offset[v], hi = s.offset[v] + d[v];
    for (int a = lo; a < hi; ++a)
      for (int b = a + 1; b < hi; ++b)
        if (lambda[a] - lambda[b] < 0) {
          twice[a] += 1;
          twice[b] -= 1;
        }
  }
  return to_rational(twice) / 2;
}

std::vector<int> component_of_parts(const Quiver& q, const DimVector& d,
                                    const std::vector<Block>& blocks) {
  auto comps = support_components(q, root_block(d));
  std::vector<int> out;
  for (const auto& b : blocks) {
    int found = -1;
    for (size_t j = 0; j < comps.size(); ++j)
      for (Eigen::Index v = 0; v < d.size(); ++v)
        if (b.dims[v] > 0 && comps[j].dims[v] > 0) found = static_cast<int>(j);
    out.push_back(found);
  }
  return out;
}

}  // namespace

AdmissibleData associated_partition(const Quiver& q, const DimVector& d,
                                    const RVec& delta_vertex, const IVec& chi) {
  const int n = d.sum();
  RVec delta = embed_vertex_weight(d, delta_vertex);
  RVec rho = block_rho(root_block(d), n);
  if (!is_dominant({root_block(d)}, to_rational(chi)))
    throw Error("not-dominant", "associated partitions need dominant chi");

  StandardForm sf = standard_form(q, d, RVec(to_rational(chi) + rho + delta));

  AdmissibleData data;
  data.blocks = sf.terminal;
  for (const auto& b : sf.terminal) {
    long w = 0;
    for (auto [lo, hi] : b.ranges())
      for (int s = lo; s < hi; ++s) w += chi[s];
    data.partition.push_back({b.dims, w});
  }
  for (const auto& node : sf.nodes)
    data.tree.push_back({node.lambda, node.r, node.n_pos, node.parent,
                         saturated_copies(q, d, node.lambda)});
  data.component = component_of_parts(q, d, sf.terminal);

  // chi_A = -sum r_j N_j - rho^{lambda_term < 0} - delta on components with
  // edges; on loop-free components the split is semisimple and chi_A is the
  // grading weight itself.
  IVec lambda_term = partition_cocharacter(sf.terminal, n);
  RVec chi_a = -rho_negative(d, lambda_term) - delta;
  for (const auto& node : sf.nodes)
    chi_a -= node.r * to_rational(node.n_pos);
  for (const auto& comp : support_components(q, root_block(d)))
    if (is_loop_free_point(q, comp)) {
      for (size_t i = 0; i < data.blocks.size(); ++i) {
        const Block& b = data.blocks[i];
        bool inside = false;
        for (Eigen::Index v = 0; v < d.size(); ++v)
          if (b.dims[v] > 0 && comp.dims[v] > 0) inside = true;
        if (!inside) continue;
        for (auto [lo, hi] : b.ranges())
          for (int s = lo; s < hi; ++s) chi_a[s] = data.partition[i].w;
      }
    }
  data.chi_a = chi_a;

  for (size_t i = 0; i < data.blocks.size(); ++i) {
    RVec dv = RVec::Zero(d.size());
    for (Eigen::Index v = 0; v < d.size(); ++v) {
      const Block& b = data.blocks[i];
      if (b.dims[v] == 0) continue;
      Rational value = -chi_a[b.start[v]];
      for (int s = b.start[v]; s < b.start[v] + b.dims[v]; ++s)
        if (-chi_a[s] != value)
          throw Error("delta-not-invariant",
                      "delta_{Ai} failed to be Weyl invariant");
      dv[v] = value;
    }
    data.delta_parts.push_back(dv);
  }
  return data;
}

RP partition_rp(const AdmissibleData& a) {
  RP rp{frac(1, 2), 0};
  bool any = false;
  for (const auto& node : a.tree)
    if (node.parent < 0) {
      if (!any || node.r > rp.r) {
        any = true;
        rp.r = node.r;
        rp.p = 0;
      }
    }
  if (!any) return rp;
  for (const auto& node : a.tree)
    if (node.parent < 0 && node.r == rp.r) rp.p += node.saturated;
  return rp;
}

namespace {

struct NodeKey {
  Rational r;
  std::set<std::pair<int, int>> pattern;  // distinct positively paired weights
  IVec lambda;
};

std::vector<NodeKey> sorted_nodes(const Quiver& q, const DimVector& d,
                                  const AdmissibleData& a, int comp) {
  std::vector<NodeKey> out;
  auto weights = rep_weights(q, d);
  for (size_t i = 0; i < a.tree.size(); ++i) {
    const auto& node = a.tree[i];
    // Component of a node = component of any slot its lambda moves.
    int node_comp = -1;
    if (comp >= 0) {
      auto comps = support_components(q, root_block(d));
      for (Eigen::Index s = 0; s < node.lambda.size(); ++s)
        if (node.lambda[s] != 0) {
          for (size_t j = 0; j < comps.size(); ++j)
            for (auto [lo, hi] : comps[j].ranges())
              if (s >= lo && s < hi) node_comp = static_cast<int>(j);
          break;
        }
      if (node_comp != comp) continue;
    }
    NodeKey key;
    key.r = node.r;
    key.lambda = node.lambda;
    for (const auto& wt : weights) {
      if (wt.is_zero()) continue;
      if (node.lambda[wt.plus] - node.lambda[wt.minus] > 0)
        key.pattern.insert({wt.plus, wt.minus});
    }
    out.push_back(std::move(key));
  }
  std::sort(out.begin(), out.end(), [](const NodeKey& x, const NodeKey& y) {
    if (x.r != y.r) return x.r > y.r;
    return LexLess{}(x.lambda, y.lambda);
  });
  return out;
}

// The literal relation R of Subsection compadm on one connected component:
// true when (a, b) is in R (a equal to b included).
bool in_relation(const std::vector<NodeKey>& a, const std::vector<NodeKey>& b,
                 bool equal_partitions) {
  if (equal_partitions) return true;
  const Rational half = frac(1, 2);
  const size_t len = std::max(a.size(), b.size());
  for (size_t c = 0; c < len; ++c) {
    Rational ra = c < a.size() ? a[c].r : half;
    Rational rb = c < b.size() ? b[c].r : half;
    if (ra != rb) return ra > rb;
  }
  for (size_t c = 0; c < len && c < a.size() && c < b.size(); ++c) {
    if (a[c].pattern == b[c].pattern) continue;
    return std::includes(a[c].pattern.begin(), a[c].pattern.end(),
                         b[c].pattern.begin(), b[c].pattern.end());
  }
  return false;
}

}  // namespace

SodOrder compadm_precedes(const Quiver& q, const DimVector& d,
                          const AdmissibleData& a, const AdmissibleData& b) {
  if (a.partition == b.partition) return SodOrder::Equal;
  auto comps = support_components(q, root_block(d));

  // Component gradings must agree for the partitions to be comparable.
  auto comp_weight = [&](const AdmissibleData& x, int j) {
    long w = 0;
    for (size_t i = 0; i < x.partition.size(); ++i)
      if (x.component[i] == j) w += x.partition[i].w;
    return w;
  };
  for (size_t j = 0; j < comps.size(); ++j)
    if (comp_weight(a, j) != comp_weight(b, j)) return SodOrder::Both;

  bool ab = true, ba = true;
  for (size_t j = 0; j < comps.size(); ++j) {
    const int comp = comps.size() == 1 ? -1 : static_cast<int>(j);
    auto na = sorted_nodes(q, d, a, comp);
    auto nb = sorted_nodes(q, d, b, comp);
    // Per-component partitions compare as equal when their parts agree.
    Partition pa, pb;
    for (size_t i = 0; i < a.partition.size(); ++i)
      if (comp < 0 || a.component[i] == comp) pa.push_back(a.partition[i]);
    for (size_t i = 0; i < b.partition.size(); ++i)
      if (comp < 0 || b.component[i] == comp) pb.push_back(b.partition[i]);
    const bool eq = pa == pb;
    if (!in_relation(na, nb, eq)) ab = false;
    if (!in_relation(nb, na, eq)) ba = false;
  }
  if (ab && ba) return SodOrder::Both;  // incomparable data on every axis
  if (ab) return SodOrder::After;
  if (ba) return SodOrder::Before;
  return SodOrder::Both;
}

std::vector<IVec> dominant_box(const DimVector& d, long w, int window) {
  const int n = d.sum();
  std::vector<IVec> out;
  IVec chi = IVec::Zero(n);
  Slots s = slots_of(d);
  std::function<void(int, long)> rec = [&](int vertex, long sum) {
    if (vertex == d.size()) {
      if (sum == w) out.push_back(chi);
      return;
    }
    // Non-increasing sequences per vertex with entries in [-window, window].
    std::function<void(int, int, long)> fill = [&](int i, int hi, long acc) {
      if (i == d[vertex]) {
        rec(vertex + 1, acc);
        return;
      }
      // Remaining entries are bounded; prune by reachable totals.
      for (int v = hi; v >= -window; --v) {
        chi[s.offset[vertex] + i] = v;
        fill(i + 1, v, acc + v);
      }
    };
    fill(0, window, sum);
  };
  rec(0, 0);
  return out;
}

namespace {

AdmissibleData trivial_partition_data(const Quiver& q, const DimVector& d,
                                      const RVec& delta_vertex, long w) {
  AdmissibleData data;
  data.partition = {{d, w}};
  data.blocks = {root_block(d)};
  data.chi_a = -embed_vertex_weight(d, delta_vertex);
  data.delta_parts = {delta_vertex};
  data.component = component_of_parts(q, d, data.blocks);
  return data;
}

// Boundary data of a weight at the half region: the one-step descent with
// r = 1/2 on every edged component, trivial on dimension-one slots.
std::optional<AdmissibleData> t_partition_of(const Quiver& q,
                                             const DimVector& d,
                                             const RVec& delta_vertex,
                                             const IVec& chi) {
  const int n = d.sum();
  RVec delta = embed_vertex_weight(d, delta_vertex);
  RVec rho = block_rho(root_block(d), n);
  RVec shifted = to_rational(chi) + rho + delta;
  const Rational half = frac(1, 2);

  AdmissibleData data;
  std::vector<DescentNode> nodes;
  std::vector<Block> blocks;
  for (const auto& comp : support_components(q, root_block(d))) {
    if (is_loop_free_point(q, comp)) {
      if (comp.total() > 1) return std::nullopt;  // empty T set
      blocks.push_back(comp);
      continue;
    }
    Rational r = r_invariant_scoped(q, comp, shifted, n);
    if (comp.total() == 1) {
      blocks.push_back(comp);
      continue;
    }
    if (r != half) return std::nullopt;
    FaceData face = face_cocharacter_scoped(q, comp, shifted, half, n);
    nodes.push_back({face.lambda, half, face.n_pos, -1,
                     saturated_copies(q, d, face.lambda)});
    for (const auto& part : face.parts) blocks.push_back(part);
  }
  if (nodes.empty() && d.sum() > 1) return std::nullopt;

  data.blocks = blocks;
  data.tree = nodes;
  for (const auto& b : blocks) {
    long w = 0;
    for (auto [lo, hi] : b.ranges())
      for (int s = lo; s < hi; ++s) w += chi[s];
    data.partition.push_back({b.dims, w});
  }
  data.component = component_of_parts(q, d, blocks);

  IVec lambda_term = partition_cocharacter(blocks, n);
  RVec chi_a = -rho_negative(d, lambda_term) - delta;
  for (const auto& node : data.tree) chi_a -= node.r * to_rational(node.n_pos);
  data.chi_a = chi_a;
  for (size_t i = 0; i < blocks.size(); ++i) {
    RVec dv = RVec::Zero(d.size());
    for (Eigen::Index v = 0; v < d.size(); ++v)
      if (blocks[i].dims[v] > 0) dv[v] = -chi_a[blocks[i].start[v]];
    data.delta_parts.push_back(dv);
  }
  return data;
}

}  // namespace

std::vector<AdmissibleData> enumerate_admissible(const Quiver& q,
                                                 const DimVector& d, long w,
                                                 const RVec& delta_vertex,
                                                 AdmissibleKind kind,
                                                 int window) {
  std::vector<AdmissibleData> out;
  std::map<std::string, size_t> seen;

  auto insert = [&](AdmissibleData data) {
    std::string key = encode_partition(data.partition);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, out.size());
      out.push_back(std::move(data));
    } else {
      // Witness independence: the tree is a function of the partition.
      const auto& prior = out[it->second];
      if (prior.tree.size() != data.tree.size())
        throw Error("witness-dependence",
                    "two witnesses of one partition produced different trees",
                    {{"partition", key}});
      for (size_t i = 0; i < data.tree.size(); ++i)
        if (prior.tree[i].r != data.tree[i].r ||
            prior.tree[i].lambda != data.tree[i].lambda)
          throw Error("witness-dependence",
                      "two witnesses of one partition produced different trees",
                      {{"partition", key}});
    }
  };

  if (kind == AdmissibleKind::S) {
    for (const auto& chi : dominant_box(d, w, window))
      insert(associated_partition(q, d, delta_vertex, chi));
    return out;
  }
  if (kind == AdmissibleKind::T) {
    if (d.sum() == 1) {
      out.push_back(trivial_partition_data(q, d, delta_vertex, w));
      return out;
    }
    for (const auto& chi : dominant_box(d, w, window))
      if (auto data = t_partition_of(q, d, delta_vertex, chi))
        insert(std::move(*data));
    return out;
  }

  // U: compositions of S-partitions refined by per-part T-partitions.
  for (const auto& base : enumerate_admissible(q, d, w, delta_vertex,
                                               AdmissibleKind::S, window)) {
    std::vector<std::vector<Partition>> options;
    for (size_t j = 0; j < base.partition.size(); ++j) {
      const auto& part = base.partition[j];
      std::vector<Partition> opts;
      for (const auto& t :
           enumerate_admissible(q, part.d, part.w, base.delta_parts[j],
                                AdmissibleKind::T, window))
        opts.push_back(t.partition);
      options.push_back(std::move(opts));
    }
    std::vector<Partition> acc{{}};
    for (const auto& opts : options) {
      std::vector<Partition> next;
      for (const auto& prefix : acc)
        for (const auto& choice : opts) {
          Partition joined = prefix;
          joined.insert(joined.end(), choice.begin(), choice.end());
          next.push_back(std::move(joined));
        }
      acc = std::move(next);
    }
    for (auto& partition : acc) {
      AdmissibleData data;
      data.partition = std::move(partition);
      std::vector<DimVector> dims;
      for (const auto& p : data.partition) dims.push_back(p.d);
      data.blocks = split_block(root_block(d), dims);
      data.component = component_of_parts(q, d, data.blocks);
      std::string key = encode_partition(data.partition);
      if (!seen.count(key)) {
        seen.emplace(key, out.size());
        out.push_back(std::move(data));
      }
    }
  }
  return out;
}

bool is_admissible_s(const Quiver& q, const DimVector& d,
                     const RVec& delta_vertex, const Partition& a) {
  long w = 0;
  long max_w = 0;
  for (const auto& p : a) {
    w += p.w;
    max_w = std::max(max_w, std::abs(p.w));
  }
  long weight_count = 0;
  for (auto [s, t] : q.edges) weight_count += static_cast<long>(d[s]) * d[t];
  long max_delta = 0;
  for (Eigen::Index v = 0; v < delta_vertex.size(); ++v)
    max_delta = std::max(max_delta,
                         std::abs(ceil_long(delta_vertex[v])));
  const int window = static_cast<int>(max_w + weight_count + max_delta);
  const std::string key = encode_partition(a);
  for (const auto& chi : dominant_box(d, w, window))
    if (encode_partition(
            associated_partition(q, d, delta_vertex, chi).partition) == key)
      return true;
  return false;
}

}  // namespace kha
