#pragma once

// Exact rational scalar used throughout the library, plus the Eigen glue
// needed to put it inside dense matrices. All arithmetic in this project is
// exact; there is no floating point anywhere in the core.

#include <Eigen/Core>
#include <gmpxx.h>

#include <optional>
#include <string>

namespace Eigen {

// Must precede any instantiation of Matrix<mpq_class, ...>.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace kha {

using Rational = mpq_class;

using RVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using IVec = Eigen::VectorXi;

/// p/q in lowest terms. The raw two-argument mpq_class constructor does not
/// canonicalize, which silently breaks exact comparisons — use this instead.
inline Rational frac(long num, long den) {
  Rational x(num, den);
  x.canonicalize();
  return x;
}

/// Renders p/q with the denominator omitted when it is 1.
std::string to_string(const Rational& x);

/// Parses "p", "-p/q", etc. Returns nullopt on malformed input or q == 0.
std::optional<Rational> parse_rational(const std::string& text);

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

/// Floor of an exact rational as a plain long (values are desk-scale here).
long floor_long(const Rational& x);
long ceil_long(const Rational& x);

inline RVec to_rational(const IVec& v) {
  RVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

}  // namespace kha
