#pragma once

// The weight-polytope machinery: membership of chi in the scaled region r*W
// (W = Minkowski sum of segments [0, beta] over the weights of R(d), spread
// by the tau line), the (r, p) invariant, face cocharacters, and the
// standard-form descent. Everything is decided by exact rational LPs.
//
// Supports that are disconnected, or whose quiver is a single loop-free
// vertex, delegate to per-component regions: each connected component uses
// its own tau line. `in_scaled_region` is the one exception — it is the
// literal region membership with the single global tau line, which agrees
// with the per-component reading exactly when the support is connected.

#include <optional>
#include <vector>

#include "kha/quiver.hpp"
#include "kha/weights.hpp"

namespace kha {

struct RegionWitness {
  std::vector<Rational> coeff;  // one entry per rep_weights(q, d) element
  Rational line;                // coefficient of tau_d
};

/// Decides chi in r*W with coefficients in [-r, 0]; returns a witness that
/// re-verifies by substitution, or nullopt when infeasible.
std::optional<RegionWitness> in_scaled_region(const Quiver& q,
                                              const DimVector& d,
                                              const RVec& chi,
                                              const Rational& r);

/// Smallest r >= 0 with chi in r*W, exact. Per-component on disconnected
/// supports; throws Error{"qo-off-line"} when a loop-free single-vertex
/// component carries a weight off its tau line.
Rational r_invariant(const Quiver& q, const DimVector& d, const RVec& chi);

/// Minimal number of saturated coefficients c_beta = -r among witnesses at
/// level r = r_invariant(chi) > 0.
long p_invariant(const Quiver& q, const DimVector& d, const RVec& chi,
                 const Rational& r);

struct RP {
  Rational r;
  long p = 0;

  friend bool operator==(const RP& a, const RP& b) = default;
  friend bool operator<(const RP& a, const RP& b) {
    return a.r < b.r || (a.r == b.r && a.p < b.p);
  }
};

RP rp_invariant(const Quiver& q, const DimVector& d, const RVec& chi);

struct FaceData {
  std::vector<Block> parts;  // the ordered partition carried by the face
  IVec lambda;               // canonical antidominant cocharacter
  IVec n_pos;                // N^{lambda > 0}, sum of positively-paired weights
};

/// The unique maximal antidominant cocharacter class lambda with
/// chi in F_r(lambda)^int, for dominant chi with r = r_invariant(chi) > 0.
/// Throws Error{"non-unique-face"} when maximality fails to be unique.
FaceData face_cocharacter(const Quiver& q, const DimVector& d, const RVec& chi,
                          const Rational& r);

/// Scoped variants used by the descent (chi is read on the block's slots).
Rational r_invariant_scoped(const Quiver& q, const Block& scope,
                            const RVec& chi, int total_slots);
FaceData face_cocharacter_scoped(const Quiver& q, const Block& scope,
                                 const RVec& chi, const Rational& r,
                                 int total_slots);

struct StandardFormNode {
  std::vector<Block> parts;
  IVec lambda;
  Rational r;    // descent coefficient, > 1/2
  IVec n_pos;    // N_j in the reconstruction chi = -sum r_j N_j + psi
  int parent;    // index into nodes, -1 for roots
};

// The iterated face descent of a dominant real weight: a tree of cocharacter
// nodes with strictly decreasing r along paths, a residual psi lying in the
// half region of the terminal Levi, and the terminal blocks themselves.
// Loop-free single-vertex components split into unit leaves with no nodes.
struct StandardForm {
  std::vector<StandardFormNode> nodes;
  RVec residual;
  std::vector<Block> terminal;
};

StandardForm standard_form(const Quiver& q, const DimVector& d,
                           const RVec& chi);

/// Terminal residual check: psi in s*W(L) for the terminal Levi, i.e.
/// per-factor zonotope membership at level s plus equal per-factor slopes
/// inside each connected component of the support.
bool in_levi_region(const Quiver& q, const std::vector<Block>& terminal,
                    const RVec& psi, const Rational& s, int total_slots);

/// Connected components of the support of a block (per-vertex masks).
std::vector<Block> support_components(const Quiver& q, const Block& scope);

/// True when the block's support is a single loop-free vertex.
bool is_loop_free_point(const Quiver& q, const Block& scope);

}  // namespace kha
