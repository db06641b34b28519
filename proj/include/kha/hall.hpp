#pragma once

// K_0-level Hall algebra operations: the cotangent weight n_lambda, the
// Borel-Weyl-Bott expansion of Hall induction, multiplication, character
// restriction to a Levi, the graded coproduct cut, and the signed
// monomial-twisted swap of adjacent Levi factors.

#include "kha/kclass.hpp"
#include "kha/quiver.hpp"
#include "kha/schur.hpp"
#include "kha/weights.hpp"

namespace kha {

/// n_lambda = sum of positive lambda-pairings over the weights of R(d)
/// minus the same sum over the roots of G(d). Requires lambda in SG(d)
/// (coordinates summing to zero).
Rational n_lambda(const Quiver& q, const DimVector& d, const IVec& lambda);

/// Hall induction of the Levi highest-weight bundle Gamma(chi) along the
/// ordered partition `parts` of d: the alternating-subset expansion
///   sum_I (-1)^{|I| - l(I)} [Gamma((chi - sigma_I)^+)]
/// over subsets I of the lambda-negative weights of R(d), with vanished
/// straightenings dropped. chi is Levi-dominant in the concatenated layout.
KClass induct(const Quiver& q, const DimVector& d,
              const std::vector<DimVector>& parts, const IVec& chi);

/// Single-shot induction of every term of a Levi class.
KClass induct_levi(const Quiver& q, const LeviKClass& y);

/// Hall product; x's weights occupy the first block of each vertex.
KClass multiply(const Quiver& q, const KClass& x, const KClass& y);

/// Branching of each basis class to the Levi of an ordered partition,
/// one Littlewood-Richardson factor per vertex. Output gradings are mixed,
/// so the result is an ungraded Levi class.
LeviKClass restrict_to_levi(const Quiver& q, const DimVector& d,
                            const std::vector<DimVector>& parts,
                            const IVec& chi);
LeviKClass restrict_to_levi(const Quiver& q, const KClass& x,
                            const std::vector<DimVector>& parts);

/// Coproduct component: restrict and keep exactly the terms whose
/// mu-weight equals -n_mu/2 - <mu, delta> for every threshold coarsening mu
/// of the partition's cocharacter. delta is one rational per vertex.
LeviKClass coproduct_cut(const Quiver& q, const KClass& x,
                         const std::vector<LeviPart>& parts,
                         const RVec& delta_vertex);

/// The swap of the two factors of a Levi class:
///   y -> (-1)^{chi(e,f)} w_{e,f}(y) q^{L_{f,e}},
/// an involution on two-factor classes.
LeviKClass swap_factors(const Quiver& q, const LeviKClass& y);

/// Adjacent-factor swap inside a longer Levi class.
LeviKClass swap_adjacent(const Quiver& q, const LeviKClass& y, int i);

/// sw_sigma realized by adjacent transpositions along a fixed reduced word;
/// sigma[i] is the new position of factor i.
LeviKClass swap_by(const Quiver& q, const LeviKClass& y,
                   const std::vector<int>& sigma);

/// Per-slot embedding of a per-vertex (Weyl-invariant) weight.
RVec embed_vertex_weight(const DimVector& d, const RVec& delta_vertex);

}  // namespace kha
