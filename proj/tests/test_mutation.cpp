#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "sl3trop/errors.hpp"
#include "sl3trop/mutation.hpp"
#include "sl3trop/square_geometry.hpp"
#include "sl3trop/tropical_cone.hpp"

using namespace sl3t;

namespace {

IntVec web(int i) { return oracle::to_int(oracle::kWebs[static_cast<std::size_t>(i - 1)]); }

IntVec square_mutate(const IntVec& c) { return flip_mutation(c, mutation_step(build_square(), kSquareDiagonal)); }

// exchange relations written out directly for the square's slot order
std::array<std::int64_t, 4> z_oracle(const std::array<std::int64_t, 12>& c) {
  auto [x1, x2, x3, x4, x5, x6, x7, x8, y1, y2, y3, y4] = c;
  std::int64_t z2 = std::max(x2 + y3, y1 + x3) - y2;
  std::int64_t z4 = std::max(y1 + x6, x7 + y3) - y4;
  std::int64_t z1 = std::max(x1 + z4, x8 + z2) - y1;
  std::int64_t z3 = std::max(z2 + x5, z4 + x4) - y3;
  return {z1, z2, z3, z4};
}

IntVec random_cone_point(std::mt19937_64& rng, int max_coeff = 10) {
  std::uniform_int_distribution<int> d(0, max_coeff);
  IntVec c(12, 0);
  for (int i = 1; i <= 22; ++i) c = add(c, scale(Int(d(rng)), web(i)));
  return c;
}

}  // namespace

TEST(Mutation, FamilyOneExample) {
  IntVec c = oracle::to_int(std::array{7, 5, 2, 1, 7, 5, 2, 1, 8, 6, 8, 6});
  EXPECT_EQ(square_mutate(c), oracle::to_int(std::array{7, 5, 2, 1, 7, 5, 2, 1, 6, 7, 6, 7}));
}

TEST(Mutation, FamilySevenExample) {
  IntVec c = oracle::to_int(std::array{3, 3, 4, 5, 6, 3, 8, 4, 7, 7, 11, 8});
  EXPECT_EQ(square_mutate(c), oracle::to_int(std::array{3, 3, 4, 5, 6, 3, 8, 4, 7, 7, 5, 11}));
}

TEST(Mutation, Zero) { EXPECT_EQ(square_mutate(IntVec(12, 0)), IntVec(12, 0)); }

TEST(Mutation, MatchesExchangeRelationsOnZ12) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int s = 0; s < 1000; ++s) {
    std::array<std::int64_t, 12> a{};
    for (auto& v : a) v = d(rng);
    IntVec c(a.begin(), a.end());
    IntVec m = square_mutate(c);
    auto z = z_oracle(a);
    for (std::size_t i = 0; i < 8; ++i) ASSERT_EQ(m[i], c[i]);
    for (std::size_t i = 0; i < 4; ++i) ASSERT_EQ(m[8 + i], z[i]);
  }
}

TEST(Mutation, OnlyYDotsChangeInPentagon) {
  auto p = build_pentagon_base();
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int e : {5, 6}) {
    auto step = mutation_step(p, e);
    for (int s = 0; s < 50; ++s) {
      IntVec c;
      for (int i = 0; i < 17; ++i) c.emplace_back(d(rng));
      IntVec m = flip_mutation(c, step);
      for (std::size_t i = 0; i < 17; ++i) {
        bool is_y = std::find(step.frame.y.begin(), step.frame.y.end(), static_cast<int>(i)) != step.frame.y.end();
        if (!is_y) {
          EXPECT_EQ(m[i], c[i]);
        }
      }
    }
  }
}

TEST(Mutation, ConePreservedAndInvolutive) {
  auto sq = build_square();
  auto flipped = flip(sq, kSquareDiagonal);
  auto back = make_flip_sequence(sq, {kSquareDiagonal, kSquareDiagonal});
  std::mt19937_64 rng(4);
  for (int s = 0; s < 1000; ++s) {
    IntVec c = random_cone_point(rng);
    IntVec m = square_mutate(c);
    ASSERT_TRUE(std::all_of(m.begin(), m.end(), [](const Int& v) { return v >= 0; }));
    ASSERT_TRUE(is_in_ktgs_cone(m, flipped));
    ASSERT_EQ(compose_flips(c, back), c);
  }
}

TEST(Mutation, CornerAdditivity) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<int> d(0, 6);
  for (int s = 0; s < 500; ++s) {
    IntVec r(12, 0);
    for (int i = 1; i <= 8; ++i) r = add(r, scale(Int(d(rng)), web(i)));
    IntVec c = random_cone_point(rng);
    ASSERT_EQ(square_mutate(add(r, c)), add(square_mutate(r), square_mutate(c)));
  }
}

TEST(Mutation, CornerlessFaceIdentities) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> d(0, 7);
  for (int sector = 1; sector <= kSectorCount; ++sector) {
    for (int s = 0; s < 20; ++s) {
      IntVec c(12, 0);
      for (int w : sector_webs(sector)) c = add(c, scale(Int(d(rng)), web(w)));
      IntVec m = square_mutate(c);
      // a face dot at a corner of the square equals the sum of the two dots beside it
      EXPECT_EQ(m[9], c[1] + c[2]) << sector;
      EXPECT_EQ(m[11], c[5] + c[6]) << sector;
      EXPECT_EQ(c[8], c[0] + c[7]) << sector;
      EXPECT_EQ(c[10], c[3] + c[4]) << sector;
    }
  }
}

TEST(Mutation, SelfGluedTorusFrames) {
  auto t = build_once_punctured_torus();
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int e = 0; e < 3; ++e) {
    auto seq = make_flip_sequence(t, {e, e});
    auto report = verify_flip_loop(seq, 200, 20, 9);
    EXPECT_TRUE(report.pass) << e;
    // the frame reads the repeated x-slots from one dot
    auto frame = quad_around_edge(t, e);
    IntVec c;
    for (int i = 0; i < 8; ++i) c.emplace_back(d(rng));
    IntVec m = flip_mutation(c, frame);
    std::array<std::int64_t, 12> a{};
    auto slots = frame.slots();
    for (std::size_t k = 0; k < 12; ++k) a[k] = static_cast<std::int64_t>(c[static_cast<std::size_t>(slots[k])]);
    auto z = z_oracle(a);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(m[static_cast<std::size_t>(frame.y[k])], z[k]);
  }
}

TEST(Compose, EmptySequence) {
  auto seq = make_flip_sequence(build_pentagon_base(), {});
  IntVec c;
  for (int i = 0; i < 17; ++i) c.emplace_back(i - 8);
  EXPECT_EQ(compose_flips(c, seq), c);
  EXPECT_TRUE(verify_flip_loop(seq, 10, 5, 0).pass);
}

TEST(Compose, PentagonLoops) {
  auto five = make_flip_sequence(build_pentagon_base(), pentagon_flip_edges(5));
  auto r5 = verify_flip_loop(five, 1000, 50, 0);
  EXPECT_TRUE(r5.pass);
  EXPECT_EQ(r5.samples, 1000u);
  for (int i = 0; i < 7; ++i) EXPECT_EQ(r5.sigma[static_cast<std::size_t>(i)] + 1, oracle::kSigma5[static_cast<std::size_t>(i)]);

  auto all = make_flip_sequence(build_pentagon_base(), pentagon_flip_edges(35));
  auto r35 = verify_flip_loop(all, 1000, 50, 0);
  EXPECT_TRUE(r35.pass);
  for (std::size_t i = 0; i < r35.sigma.size(); ++i) EXPECT_EQ(r35.sigma[i], static_cast<int>(i));
}

TEST(Compose, PullBackInvertsPermutationOnFiveLoop) {
  auto five = make_flip_sequence(build_pentagon_base(), pentagon_flip_edges(5));
  auto sigma = permutation_between(five.states.front(), five.states.back());
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> d(-50, 50);
  for (int s = 0; s < 100; ++s) {
    IntVec c;
    for (int i = 0; i < 17; ++i) c.emplace_back(d(rng));
    EXPECT_EQ(pull_back(compose_flips(c, five), sigma), c);
  }
}

TEST(Compose, BrokenLoopIsReported) {
  // a single flip does not close up
  auto seq = make_flip_sequence(build_pentagon_base(), {5});
  EXPECT_THROW(verify_flip_loop(seq, 10, 5, 0), Error);
}
