#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "sl3trop/arith.hpp"
#include "sl3trop/linalg.hpp"
#include "sl3trop/webs.hpp"

namespace sl3t {

using XVector = std::array<Rat, 4>;

XVector make_x(std::int64_t x1, std::int64_t x2, std::int64_t x3, std::int64_t x4);

// 18 rhombus numbers of the square; top pointings a,b,c then bottom d,b,c
RatVec theta(const IntVec& c);

struct PhiImage {
  std::array<Rat, 8> head;  // beta 1,2,4,5,7,8,10,11
  XVector x;
};

// throws Error(NotInVT) naming the first violated relation
PhiImage phi(const RatVec& betas);
XVector x_coords(const IntVec& c);

inline constexpr int kSectorCount = 42;

// sign[k] = +1 for X_k >= 0, -1 for X_k <= 0; each extra row r means r.X >= 0
struct SectorSystem {
  std::array<int, 4> sign;
  std::vector<std::array<int, 4>> extra;
};

const SectorSystem& sector_system(int i);
bool in_sector(const XVector& x, int i);
std::vector<int> sector_of(const XVector& x);

// Q_i as 1-based web indices, in listing order (the x, y, z, t parameters)
const std::array<int, 4>& sector_webs(int i);
// rows are the X-images of the Q_i webs
std::array<std::array<int, 4>, 4> sector_matrix(int i);
// 8 corner arcs followed by Q_i
std::vector<IntVec> sector_generators(int i);
const IntegerInverse& sector_inverse(int i);

// "+-+-" style closed orthant patterns and the sectors that tile them
const std::vector<std::pair<std::string, std::vector<int>>>& orthant_decompositions();

struct WallCrossing {
  int from;
  int web;      // removed from Q_from
  int to;
  int swapped;  // added in Q_to
};

struct WallGraph {
  std::vector<std::pair<int, int>> edges;     // i < l
  std::vector<std::vector<int>> neighbors;    // 1-based, neighbors[0] unused
  std::vector<WallCrossing> crossings;
};

WallGraph wall_graph();
WallCrossing cross_wall(int sector, int web);

struct SkeinRelation {
  std::vector<int> lhs;
  std::vector<int> rhs;
};

const std::vector<SkeinRelation>& skein_relations();

struct RelationsReport {
  bool pass = true;
  std::vector<bool> holds;
  std::size_t relation_rank = 0;
  std::size_t kernel_dim = 0;
};

RelationsReport verify_relations();

// least sector containing x, solved exactly for the family parameters
SquareWebSchematic solve_cornerless(const XVector& x);

}  // namespace sl3t
