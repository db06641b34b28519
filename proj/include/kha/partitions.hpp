#pragma once

// Ordered partitions of (d, w): refinement, the partition associated to a
// dominant weight through the standard form, the admissible sets S/T/U
// (enumerated inside an explicit weight window), and the comparison that
// orders the semi-orthogonal decomposition.

#include <string>
#include <vector>

#include "kha/polytope.hpp"
#include "kha/quiver.hpp"

namespace kha {

struct PartitionPart {
  DimVector d;
  long w = 0;

  friend bool operator==(const PartitionPart& a, const PartitionPart& b) {
    return a.d == b.d && a.w == b.w;
  }
};

using Partition = std::vector<PartitionPart>;

std::string encode_partition(const Partition& a);

/// True when consecutive blocks of `fine` sum to the parts of `coarse`
/// (both dimensions and gradings). Partitions must share the ambient (d, w).
bool refines(const Partition& fine, const Partition& coarse);

struct DescentNode {
  IVec lambda;
  Rational r;
  IVec n_pos;
  int parent = -1;
  long saturated = 0;  // weight copies pairing positively with lambda
};

// A partition together with the descent data of its witnesses: the tree of
// (lambda_j, r_j), the weight chi_A, and the per-factor Weyl-invariant
// weights delta_{Ai} with -chi_A = sum_i delta_{Ai}.
struct AdmissibleData {
  Partition partition;
  std::vector<Block> blocks;  // terminal blocks in the ambient layout
  std::vector<DescentNode> tree;
  RVec chi_a;                  // ambient slots; empty for bare partitions
  std::vector<RVec> delta_parts;  // per part, one rational per vertex
  std::vector<int> component;  // connected component index per part
};

/// Runs the standard form on chi + rho + delta and reads off the partition,
/// tree, chi_A and delta_{Ai}. chi must be dominant integral.
AdmissibleData associated_partition(const Quiver& q, const DimVector& d,
                                    const RVec& delta_vertex, const IVec& chi);

/// The (r, p) class of a partition: the top descent datum, or the bottom
/// marker (1/2, 0) for trivial trees.
RP partition_rp(const AdmissibleData& a);

enum class SodOrder { Before, After, Both, Equal };

/// The comparison of Subsection compadm: lexicographic on the r sequences,
/// then on the cocharacter patterns; per-component on disconnected supports
/// (partitions whose component gradings disagree are doubly orthogonal).
SodOrder compadm_precedes(const Quiver& q, const DimVector& d,
                          const AdmissibleData& a, const AdmissibleData& b);

enum class AdmissibleKind { S, T, U };

/// Enumerates the admissible partitions reachable from dominant integral
/// weights with entries bounded by `window`. Complete within the window and
/// monotone in it; the true sets are infinite in general.
std::vector<AdmissibleData> enumerate_admissible(const Quiver& q,
                                                 const DimVector& d, long w,
                                                 const RVec& delta_vertex,
                                                 AdmissibleKind kind,
                                                 int window);

/// Witness search inside the window derived from the partition's data.
/// "false" means no witness was found within that window.
bool is_admissible_s(const Quiver& q, const DimVector& d,
                     const RVec& delta_vertex, const Partition& a);

/// All dominant integral weights with |entries| <= window and total w.
std::vector<IVec> dominant_box(const DimVector& d, long w, int window);

}  // namespace kha
