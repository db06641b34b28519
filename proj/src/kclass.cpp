#include "kha/kclass.hpp"

#include "kha/error.hpp"

namespace kha {

KClass basis_class(const DimVector& d, const IVec& chi) {
  KClass x;
  x.d = d;
  x.w = chi.sum();
  x.add(chi, 1);
  return x;
}

DimVector LeviKClass::total_dims() const {
  if (parts.empty()) return DimVector();
  DimVector d = DimVector::Zero(parts.front().d.size());
  for (const auto& p : parts) d += p.d;
  return d;
}

std::vector<Block> LeviKClass::blocks() const {
  std::vector<DimVector> dims;
  for (const auto& p : parts) dims.push_back(p.d);
  return split_block(root_block(total_dims()), dims);
}

std::vector<std::vector<int>> split_weight(const IVec& chi,
                                           const std::vector<Block>& blocks) {
  std::vector<std::vector<int>> out;
  for (const auto& b : blocks) {
    std::vector<int> part;
    for (auto [lo, hi] : b.ranges())
      for (int s = lo; s < hi; ++s) part.push_back(chi[s]);
    out.push_back(std::move(part));
  }
  return out;
}

IVec join_weight(const std::vector<std::vector<int>>& part_weights,
                 const std::vector<Block>& blocks, int total_slots) {
  if (part_weights.size() != blocks.size())
    throw Error("partition-mismatch", "one weight per block required");
  IVec chi = IVec::Zero(total_slots);
  for (size_t i = 0; i < blocks.size(); ++i) {
    size_t at = 0;
    for (auto [lo, hi] : blocks[i].ranges())
      for (int s = lo; s < hi; ++s) chi[s] = part_weights[i].at(at++);
    if (at != part_weights[i].size())
      throw Error("partition-mismatch", "weight length does not fit block");
  }
  return chi;
}

}  // namespace kha
