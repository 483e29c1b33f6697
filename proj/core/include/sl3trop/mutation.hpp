#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sl3trop/arith.hpp"
#include "sl3trop/triangulation.hpp"

namespace sl3t {

// One flip T -> T' at frame.edge, read in the frame of T.
struct MutationStep {
  QuadFrame frame;
};

MutationStep mutation_step(const DottedTriangulation& t, int e);

// Rewrites the four y-dots with z1..z4; everything else is copied.
IntVec flip_mutation(const IntVec& c, const QuadFrame& frame);
inline IntVec flip_mutation(const IntVec& c, const MutationStep& s) { return flip_mutation(c, s.frame); }

IntVec compose_flips(const IntVec& c, const FlipSequence& seq);

// v[i] = d[sigma[i]], i.e. the inverse permutation map applied to d
IntVec pull_back(const IntVec& d, const std::vector<int>& sigma);

struct LoopReport {
  bool pass = true;
  std::size_t samples = 0;
  std::vector<int> sigma;
  std::optional<IntVec> counterexample;
  std::optional<IntVec> got;
  std::optional<IntVec> expected;
};

// Checks compose_flips(c) == sigma(c) on random c in [-range, range]^N.
LoopReport verify_flip_loop(const FlipSequence& loop, std::size_t samples, std::int64_t range, std::uint64_t seed);

}  // namespace sl3t
