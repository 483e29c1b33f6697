#pragma once

#include <vector>

#include "sl3trop/arith.hpp"

namespace sl3t {

using RatMatrix = std::vector<RatVec>;  // row major
using IntMatrix = std::vector<IntVec>;

RatMatrix to_rat(const IntMatrix& m);
std::size_t rank(RatMatrix m);
std::size_t rank(const IntMatrix& m);

// throws Error(Singular) for non-square or singular input
RatMatrix inverse(const RatMatrix& m);

// Inverse stored as an integer matrix over a common positive denominator.
struct IntegerInverse {
  IntMatrix num;
  Int den;

  // returns num * v / den
  RatVec apply(const IntVec& v) const;
};

IntegerInverse integer_inverse(const IntMatrix& m);

// Columns of the result are the given vectors.
IntMatrix columns_to_matrix(const std::vector<IntVec>& cols);

}  // namespace sl3t
