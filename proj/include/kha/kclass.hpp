#pragma once

// Sparse K-theory classes in the [O tensor Gamma(chi)] basis: exact rational
// coefficients keyed by dominant integral weights, graded by (d, w), plus
// the Levi variant whose keys are concatenated per-factor weights.

#include <map>
#include <vector>

#include "kha/quiver.hpp"
#include "kha/weights.hpp"

namespace kha {

struct LexLess {
  bool operator()(const IVec& a, const IVec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

using TermMap = std::map<IVec, Rational, LexLess>;

struct KClass {
  DimVector d;
  long w = 0;
  TermMap terms;

  void add(const IVec& chi, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms.try_emplace(chi, coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second == 0) terms.erase(it);
    }
  }
  void add_all(const KClass& other, const Rational& scale = 1) {
    for (const auto& [chi, c] : other.terms) add(chi, c * scale);
  }
  bool is_zero() const { return terms.empty(); }

  friend bool operator==(const KClass& a, const KClass& b) {
    return a.d == b.d && a.w == b.w && a.terms == b.terms;
  }
};

/// A single basis class [Gamma(chi)] on (d, <1_d, chi>).
KClass basis_class(const DimVector& d, const IVec& chi);

struct LeviPart {
  DimVector d;
  long w = 0;

  friend bool operator==(const LeviPart& a, const LeviPart& b) = default;
};

// Terms are concatenated per-factor dominant weights in the block layout of
// sum(parts). `graded` records whether every term respects the per-factor
// gradings in `parts` (restriction output mixes gradings; coproducts and
// swaps keep them sharp).
struct LeviKClass {
  std::vector<LeviPart> parts;
  bool graded = true;
  TermMap terms;

  void add(const IVec& chi, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms.try_emplace(chi, coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second == 0) terms.erase(it);
    }
  }
  bool is_zero() const { return terms.empty(); }

  DimVector total_dims() const;
  /// Blocks of the parts inside the ambient slot layout.
  std::vector<Block> blocks() const;

  friend bool operator==(const LeviKClass& a, const LeviKClass& b) {
    return a.parts == b.parts && a.terms == b.terms;
  }
};

/// Splits a concatenated weight into per-part weights, each in the part's
/// own slot order (vertex by vertex).
std::vector<std::vector<int>> split_weight(const IVec& chi,
                                           const std::vector<Block>& blocks);

/// Concatenates per-part weights (given in each part's own slot layout)
/// into the ambient layout of the listed blocks.
IVec join_weight(const std::vector<std::vector<int>>& part_weights,
                 const std::vector<Block>& blocks, int total_slots);

}  // namespace kha
