#pragma once

// GL(n) character combinatorics: branching of an irreducible highest-weight
// module to GL(e) x GL(f), full weight multisets, and the Weyl dimension
// formula. Dominant weights are non-increasing integer vectors; negative
// entries are handled by a determinant twist.
//
// Two independent routes compute the same branching: a Littlewood-Richardson
// tableau count (the default) and a peeling of the full weight multiset
// (the cross-check). Keep both honest.

#include <map>
#include <vector>

#include "kha/rational.hpp"

namespace kha {

using GlWeight = std::vector<int>;  // non-increasing, one entry per slot

/// Multiplicities of Gamma(mu) x Gamma(nu) in Gamma(lam)|_{GL(e) x GL(f)},
/// via Littlewood-Richardson skew tableaux. lam has e + f entries.
std::map<std::pair<GlWeight, GlWeight>, long> branch_gl(const GlWeight& lam,
                                                        int e, int f);

/// Same branching computed by peeling the weight multiset of Gamma(lam);
/// shares no code path with branch_gl.
std::map<std::pair<GlWeight, GlWeight>, long> branch_gl_by_weights(
    const GlWeight& lam, int e, int f);

/// All T(n)-weights of Gamma(lam) with multiplicities.
std::map<GlWeight, long> gl_weight_multiset(const GlWeight& lam);

/// dim Gamma(lam) = prod_{i<j} (lam_i - lam_j + j - i) / (j - i).
mpz_class weyl_dim(const GlWeight& lam);

}  // namespace kha
