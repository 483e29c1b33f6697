#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sl3trop/arith.hpp"
#include "sl3trop/linalg.hpp"
#include "sl3trop/triangulation.hpp"

namespace sl3t {

// 3*beta = plus[0] + plus[1] - minus[0] - minus[1]; minus[1] == -1 marks a corner rhombus
struct Rhombus {
  std::array<int, 2> plus{};
  std::array<int, 2> minus{};
  bool corner() const { return minus[1] < 0; }
};

// Per face, per pointing (stored corner order), emits corner, first interior, second interior.
std::vector<Rhombus> rhombus_table(const DottedTriangulation& t);

RatVec rhombus_numbers(const IntVec& c, const DottedTriangulation& t);
bool is_in_ktgs_cone(const IntVec& c, const DottedTriangulation& t);

using Point = std::vector<std::int64_t>;
using Membership = std::function<bool(std::span<const std::int64_t>)>;

struct ConeOracle {
  std::size_t dim = 0;
  Membership contains;
  // Optional pruning. Coordinates are assigned in `order`; prefix_ok(p, depth) is
  // called once the first `depth` of them are fixed and may reject every completion.
  std::vector<std::size_t> order;
  std::function<bool(std::span<const std::int64_t>, std::size_t)> prefix_ok;
};

ConeOracle ktgs_oracle(const DottedTriangulation& t);

struct HilbertBasis {
  std::vector<Point> elements;
  std::int64_t bound = 0;
  std::size_t cone_points = 0;  // nonzero cone points with sum <= bound, all decomposed
};

HilbertBasis hilbert_basis(const ConeOracle& oracle, std::int64_t bound);
HilbertBasis hilbert_basis(const Membership& oracle, std::size_t dim, std::int64_t bound);

// exhaustive test over all 0 != y != x with y <= x
bool is_irreducible(const Membership& oracle, std::span<const std::int64_t> x);

// indices into basis summing to x, or nullopt
std::optional<std::vector<std::size_t>> decompose_over(const Membership& oracle,
                                                       const std::vector<Point>& basis,
                                                       const Point& x);

// c = sum lambda_j generators_j with lambda nonnegative integral
IntVec decompose_in_sector(const IntVec& c, const std::vector<IntVec>& generators);
IntVec decompose_with(const IntVec& c, const IntegerInverse& inv);

}  // namespace sl3t
