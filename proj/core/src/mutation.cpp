#include "sl3trop/mutation.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "sl3trop/errors.hpp"

namespace sl3t {

MutationStep mutation_step(const DottedTriangulation& t, int e) { return {quad_around_edge(t, e)}; }

IntVec flip_mutation(const IntVec& c, const QuadFrame& frame) {
  const auto s = frame.slots();
  for (int d : s)
    if (d < 0 || static_cast<std::size_t>(d) >= c.size())
      throw Error(ErrorKind::LengthMismatch, "frame dot " + std::to_string(d + 1) + " outside point of length " +
                                                 std::to_string(c.size()));
  for (auto [i, j] : frame.coincidences)
    if (i >= 8 && j >= 8) throw Error(ErrorKind::InvalidInput, "frame has aliased y-slots");

  // read everything before writing: x-slots may alias y-slots on self-glued quads
  std::array<Int, 12> v;
  for (std::size_t k = 0; k < 12; ++k) v[k] = c[static_cast<std::size_t>(s[k])];
  const Int &x1 = v[0], &x2 = v[1], &x3 = v[2], &x4 = v[3], &x5 = v[4], &x6 = v[5], &x7 = v[6], &x8 = v[7];
  const Int &y1 = v[8], &y2 = v[9], &y3 = v[10], &y4 = v[11];

  Int z2 = Int(std::max<Int>(x2 + y3, y1 + x3)) - y2;
  Int z4 = Int(std::max<Int>(y1 + x6, x7 + y3)) - y4;
  Int z1 = Int(std::max<Int>(x1 + z4, x8 + z2)) - y1;
  Int z3 = Int(std::max<Int>(z2 + x5, z4 + x4)) - y3;

  IntVec out = c;
  out[static_cast<std::size_t>(frame.y[0])] = z1;
  out[static_cast<std::size_t>(frame.y[1])] = z2;
  out[static_cast<std::size_t>(frame.y[2])] = z3;
  out[static_cast<std::size_t>(frame.y[3])] = z4;
  return out;
}

IntVec compose_flips(const IntVec& c, const FlipSequence& seq) {
  IntVec v = c;
  for (std::size_t i = 0; i < seq.edges.size(); ++i) v = flip_mutation(v, quad_around_edge(seq.states[i], seq.edges[i]));
  return v;
}

IntVec pull_back(const IntVec& d, const std::vector<int>& sigma) {
  if (d.size() != sigma.size()) throw Error(ErrorKind::LengthMismatch, "permutation and point differ in length");
  IntVec v(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) v[i] = d[static_cast<std::size_t>(sigma[i])];
  return v;
}

LoopReport verify_flip_loop(const FlipSequence& loop, std::size_t samples, std::int64_t range, std::uint64_t seed) {
  LoopReport rep;
  rep.sigma = permutation_between(loop.states.front(), loop.states.back());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-range, range);
  const std::size_t n = loop.states.front().dot_count();
  for (std::size_t s = 0; s < samples; ++s) {
    IntVec c(n);
    for (auto& x : c) x = dist(rng);
    IntVec d = compose_flips(c, loop);
    IntVec back = pull_back(d, rep.sigma);
    ++rep.samples;
    if (back != c) {
      rep.pass = false;
      rep.counterexample = c;
      rep.got = d;
      IntVec expected(n);
      for (std::size_t i = 0; i < n; ++i) expected[static_cast<std::size_t>(rep.sigma[i])] = c[i];
      rep.expected = expected;
      break;
    }
  }
  return rep;
}

}  // namespace sl3t
