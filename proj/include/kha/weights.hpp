#pragma once

// Weight-lattice combinatorics for G(d) = prod_i GL(d_i): slot layout, the
// structure weights rho / nu / tau, cocharacters of ordered partitions, the
// shifted-Weyl straightening, and the boundary data w_{e,f}, N_{e,f},
// rho_{e,f}, L_{e,f} attached to a two-part split.
//
// Conventions (pinned by the test suite):
//   - a weight is dominant iff its coordinates are non-increasing within
//     each vertex block; positive roots are beta_i - beta_j for i < j;
//   - antidominant cocharacters have non-decreasing values, so the canonical
//     cocharacter of an ordered partition puts strictly increasing values on
//     consecutive blocks, balanced to lie in SG(d).

#include <optional>
#include <utility>
#include <vector>

#include "kha/quiver.hpp"

namespace kha {

struct Slots {
  DimVector dims;
  IVec offset;  // per vertex, offset[v] = first global slot of vertex v
  int total = 0;
};

Slots slots_of(const DimVector& d);

// A block is a sub-dimension vector occupying a consecutive slot range at
// each vertex. The root block covers all of M(d); partitions refine blocks.
struct Block {
  DimVector dims;
  IVec start;  // global slot of the block's first slot at each vertex

  int total() const { return dims.sum(); }
  /// Slot ranges [begin, end) of this block, one per vertex with dims > 0.
  std::vector<std::pair<int, int>> ranges() const;
};

Block root_block(const DimVector& d);

/// Consecutive sub-blocks realizing an ordered partition of `b.dims`.
/// Parts must be nonzero and sum to b.dims.
std::vector<Block> split_block(const Block& b,
                               const std::vector<DimVector>& parts);

/// All ordered partitions of d into k >= min_parts nonzero parts.
std::vector<std::vector<DimVector>> ordered_partitions(const DimVector& d,
                                                       int min_parts = 1);

/// Weights of R restricted to a block (edges acting inside the block).
std::vector<SlotWeight> block_weights(const Quiver& q, const Block& b);

/// rho restricted to a block: ((n-1)/2, (n-3)/2, ...) on each vertex range.
RVec block_rho(const Block& b, int total_slots);

/// tau restricted to a block: 1/|b| on each block slot.
RVec block_tau(const Block& b, int total_slots);

struct StructureWeights {
  RVec rho;
  RVec nu;
  RVec tau;
};

/// rho, nu = sum of simple weights, tau = nu / <1_d, nu>. Requires d != 0.
StructureWeights structure_weights(const DimVector& d);

/// Natural pairing between a cocharacter and a weight.
Rational pair_weight(const IVec& cochar, const RVec& chi);
long pair_weight(const IVec& cochar, const IVec& chi);

/// Canonical antidominant SG cocharacter of an ordered partition of a block:
/// strictly increasing integer values on consecutive sub-blocks, sum of all
/// coordinates zero, divided by the content gcd. Zero outside the block.
IVec partition_cocharacter(const std::vector<Block>& parts, int total_slots);

struct Straightened {
  RVec dominant;  // w(chi + rho) - rho
  long length;    // inversion count of the sorting Weyl element
};

/// Shifted-Weyl straightening of chi relative to a block structure. Returns
/// nullopt when chi + rho has a repeated coordinate inside some block range
/// (the class is zero). Blocks default to the whole vertex ranges.
std::optional<Straightened> dot_straighten(const std::vector<Block>& blocks,
                                           const RVec& chi, int total_slots);

bool is_dominant(const std::vector<Block>& blocks, const RVec& chi);

// A Weyl element is a block-preserving slot permutation; perm[i] is the
// image slot of slot i, and (w chi)[perm[i]] = chi[i].
struct WeylElement {
  IVec perm;

  RVec apply(const RVec& chi) const;
  IVec apply(const IVec& chi) const;
  WeylElement inverse() const;
  WeylElement compose(const WeylElement& then) const;  // this followed by then
};

WeylElement identity_weyl(int total_slots);

/// Full Weyl orbit of chi under per-vertex-range permutations of a block
/// structure (set of distinct images).
std::vector<RVec> weyl_orbit(const std::vector<Block>& blocks, const RVec& chi,
                             int total_slots);

/// Uniformly random block permutation for property tests.
WeylElement random_weyl(const std::vector<Block>& blocks, int total_slots,
                        unsigned seed);

struct LeviBoundary {
  WeylElement w_ef;  // block rotation putting the f-block first
  IVec n_ef;         // sum of weights pairing negatively with lambda_{e,f}
  RVec rho_ef;       // half-sum of positive roots pairing negatively
  IVec l_ef;         // N_{e,f} - 2 rho_{e,f}
};

/// Boundary data of the two-part split (e, f) of d = e + f.
LeviBoundary levi_boundary_data(const Quiver& q, const DimVector& e,
                                const DimVector& f);

}  // namespace kha
