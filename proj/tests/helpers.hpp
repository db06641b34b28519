#pragma once

#include <initializer_list>

#include "kha/quiver.hpp"
#include "kha/weights.hpp"

namespace kha::testing {

inline RVec rvec(std::initializer_list<Rational> entries) {
  RVec v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& e : entries) v[i++] = e;
  return v;
}

inline IVec ivec(std::initializer_list<int> entries) {
  IVec v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (int e : entries) v[i++] = e;
  return v;
}

inline DimVector dims(std::initializer_list<int> entries) {
  return ivec(entries);
}

}  // namespace kha::testing
