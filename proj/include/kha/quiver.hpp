#pragma once

// Symmetric quivers, dimension vectors, the Euler form, and the weight
// multiset of the representation space R(d).

#include <string>
#include <utility>
#include <vector>

#include "kha/rational.hpp"

namespace kha {

struct Quiver {
  std::vector<std::string> vertices;       // distinct ids, fixed order
  std::vector<std::pair<int, int>> edges;  // (source, target) vertex indices

  int num_vertices() const { return static_cast<int>(vertices.size()); }

  /// adjacency(i, j) = number of edges i -> j. Symmetric by construction.
  Eigen::MatrixXi adjacency() const;

  int vertex_index(const std::string& id) const;  // -1 when absent
};

/// Validates distinct ids, endpoint existence and edge-count symmetry.
/// Throws Error{"symmetry-violation"} naming the offending ordered pair.
Quiver make_quiver(std::vector<std::string> vertices,
                   std::vector<std::pair<int, int>> edges);

/// Loads a quiver document: `vertices: [a, b]` / `edges: [[a, b], [b, a]]`.
Quiver load_quiver_text(const std::string& text);
Quiver load_quiver_file(const std::string& path);

/// Built-in quivers: "jordan", "loop2", "kronecker", "point".
/// Returns nullopt for unknown names.
std::optional<Quiver> builtin_quiver(const std::string& name);

// A dimension vector is indexed by the quiver's vertices.
using DimVector = IVec;

DimVector parse_dim_vector(const Quiver& q, const std::string& text);

/// chi(d, e) = sum_i d_i e_i - sum_{a in E} d_{s(a)} e_{t(a)}.
long euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

// Weights of R(d) are slot differences; `plus == minus` encodes the zero
// weight (a loop acting on a single summand).
struct SlotWeight {
  int plus;
  int minus;
  bool is_zero() const { return plus == minus; }
};

/// The multiset of T(d)-weights of R(d), one entry per edge and index pair,
/// in global slot coordinates. Size is exactly sum_a d_{s(a)} d_{t(a)}.
std::vector<SlotWeight> rep_weights(const Quiver& q, const DimVector& d);

/// Dense form of a slot weight in M(d).
IVec weight_vector(const SlotWeight& w, int total_slots);

}  // namespace kha
