#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sl3trop/errors.hpp"
#include "sl3trop/square_geometry.hpp"
#include "sl3trop/tropical_cone.hpp"

using namespace sl3t;

namespace {

IntVec web(int i) { return oracle::to_int(oracle::kWebs[static_cast<std::size_t>(i - 1)]); }

std::array<std::int64_t, 12> as12(const IntVec& v) {
  std::array<std::int64_t, 12> a{};
  for (std::size_t i = 0; i < 12; ++i) a[i] = static_cast<std::int64_t>(v[i]);
  return a;
}

std::set<Point> as_set(const std::vector<Point>& v) { return {v.begin(), v.end()}; }

// membership in the Z_+-span of nonzero nonnegative generators, by subtraction search
bool in_span(const std::vector<Point>& gens, Point p) {
  if (std::all_of(p.begin(), p.end(), [](std::int64_t v) { return v == 0; })) return true;
  if (std::any_of(p.begin(), p.end(), [](std::int64_t v) { return v < 0; })) return false;
  for (const auto& g : gens) {
    Point q = p;
    for (std::size_t i = 0; i < q.size(); ++i) q[i] -= g[i];
    if (in_span(gens, q)) return true;
  }
  return false;
}

Membership span_oracle(std::vector<Point> gens) {
  return [gens](std::span<const std::int64_t> p) { return in_span(gens, Point(p.begin(), p.end())); };
}

// the square's rhombus numbers reordered into theta's listing
RatVec square_listing(const RatVec& r) {
  RatVec out;
  for (std::size_t k : {0, 1, 2, 3, 4, 5, 6, 7, 8, 12, 13, 14, 9, 10, 11, 15, 16, 17}) out.push_back(r[k]);
  return out;
}

}  // namespace

TEST(Rhombus, TableShape) {
  auto t = build_square();
  auto table = rhombus_table(t);
  ASSERT_EQ(table.size(), 18u);
  for (std::size_t k = 0; k < 18; ++k) EXPECT_EQ(table[k].corner(), k % 3 == 0);
  EXPECT_EQ(rhombus_table(build_triangle()).size(), 9u);
  EXPECT_EQ(rhombus_table(build_pentagon_base()).size(), 27u);
}

TEST(Rhombus, CornerArcOfFirstCorner) {
  auto r = square_listing(rhombus_numbers(web(1), build_square()));
  for (std::size_t k = 0; k < 18; ++k) EXPECT_EQ(r[k], Rat(k == 0 ? 1 : 0)) << k;
}

TEST(Rhombus, ZeroPoint) {
  auto r = rhombus_numbers(IntVec(12, 0), build_square());
  ASSERT_EQ(r.size(), 18u);
  for (const auto& b : r) EXPECT_EQ(b, 0);
}

TEST(Rhombus, TinToutListing) {
  auto r = square_listing(rhombus_numbers(web(18), build_square()));
  const int want[18] = {0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1};
  for (std::size_t k = 0; k < 18; ++k) EXPECT_EQ(r[k], Rat(want[k])) << k;
}

TEST(Rhombus, MatchesHandWrittenFormulasOnRandomPoints) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-20, 20);
  auto t = build_square();
  for (int s = 0; s < 300; ++s) {
    IntVec c;
    for (int i = 0; i < 12; ++i) c.emplace_back(d(rng));
    auto r = square_listing(rhombus_numbers(c, t));
    auto want = oracle::triple_betas(as12(c));
    for (std::size_t k = 0; k < 18; ++k) EXPECT_EQ(r[k] * 3, Rat(want[k])) << k;
  }
}

TEST(Rhombus, LinearInC) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-9, 9);
  auto t = build_pentagon_base();
  for (int s = 0; s < 50; ++s) {
    IntVec a, b;
    for (int i = 0; i < 17; ++i) {
      a.emplace_back(d(rng));
      b.emplace_back(d(rng));
    }
    auto ra = rhombus_numbers(a, t), rb = rhombus_numbers(b, t), rab = rhombus_numbers(add(a, scale(Int(2), b)), t);
    for (std::size_t k = 0; k < ra.size(); ++k) EXPECT_EQ(rab[k], ra[k] + 2 * rb[k]);
  }
}

TEST(Rhombus, LengthMismatch) {
  try {
    rhombus_numbers(IntVec(11, 0), build_square());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
  }
  EXPECT_THROW(is_in_ktgs_cone(IntVec(7, 0), build_square()), Error);
}

TEST(Cone, Examples) {
  auto t = build_square();
  EXPECT_TRUE(is_in_ktgs_cone(oracle::to_int(std::array{7, 5, 2, 1, 7, 5, 2, 1, 8, 6, 8, 6}), t));
  EXPECT_TRUE(is_in_ktgs_cone(IntVec(12, 0), t));
  EXPECT_FALSE(is_in_ktgs_cone(oracle::to_int(std::array{7, 5, 2, 1, 7, 5, 2, 1, 9, 6, 8, 6}), t));
  // negative entry with valid betas is still outside
  IntVec neg = web(1);
  for (auto& v : neg) v = -v;
  EXPECT_FALSE(is_in_ktgs_cone(neg, t));
}

TEST(Cone, AgreesWithOracleOnBox) {
  auto t = build_square();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(0, 6);
  int inside = 0;
  for (int s = 0; s < 20000; ++s) {
    std::array<std::int64_t, 12> a{};
    for (auto& v : a) v = d(rng);
    IntVec c(a.begin(), a.end());
    bool want = oracle::in_square_cone(a);
    inside += want;
    ASSERT_EQ(is_in_ktgs_cone(c, t), want);
  }
  // sums of basis webs are always inside
  for (int i = 1; i <= 22; ++i)
    for (int j = 1; j <= 22; ++j) EXPECT_TRUE(is_in_ktgs_cone(add(web(i), web(j)), t));
}

TEST(Cone, SquareKernelRelations) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-30, 30);
  for (int s = 0; s < 200; ++s) {
    IntVec c;
    for (int i = 0; i < 12; ++i) c.emplace_back(d(rng));
    auto b = square_listing(rhombus_numbers(c, build_square()));
    auto B = [&](int k) { return b[static_cast<std::size_t>(k - 1)]; };
    EXPECT_EQ(B(3) - B(2), B(6) - B(5));
    EXPECT_EQ(B(6) - B(5), B(9) - B(8));
    EXPECT_EQ(B(4) - B(13), B(17) - B(9));
    EXPECT_EQ(B(12) - B(11), B(15) - B(14));
    EXPECT_EQ(B(15) - B(14), B(18) - B(17));
    EXPECT_EQ(B(16) - B(7), B(5) - B(15));
  }
}

TEST(Hilbert, StandardBasis) {
  auto hb = hilbert_basis([](std::span<const std::int64_t>) { return true; }, 3, 4);
  EXPECT_EQ(as_set(hb.elements), (std::set<Point>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
}

TEST(Hilbert, PlaneMonoid) {
  auto in = span_oracle({{1, 0}, {1, 1}, {0, 2}});
  auto hb = hilbert_basis(in, 2, 6);
  EXPECT_EQ(as_set(hb.elements), (std::set<Point>{{1, 0}, {1, 1}, {0, 2}}));
}

TEST(Hilbert, ThreeDimensionalExample) {
  auto in = span_oracle({{0, 1, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
  auto hb = hilbert_basis(in, 3, 6);
  EXPECT_EQ(as_set(hb.elements), (std::set<Point>{{0, 1, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
}

TEST(Hilbert, DimensionZero) {
  auto hb = hilbert_basis([](std::span<const std::int64_t>) { return true; }, 0, 5);
  EXPECT_TRUE(hb.elements.empty());
}

TEST(Hilbert, NotAMonoid) {
  // contains (1,0) and (0,1) but not (1,1)
  auto in = [](std::span<const std::int64_t> p) { return !(p[0] == 1 && p[1] == 1); };
  try {
    hilbert_basis(in, 2, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DecompositionFailure);
  }
}

TEST(Hilbert, Triangle) {
  auto hb = hilbert_basis(ktgs_oracle(build_triangle()), 12);
  std::set<Point> want;
  for (const auto& g : oracle::kTriangle) want.insert(Point(g.begin(), g.end()));
  EXPECT_EQ(as_set(hb.elements), want);
  EXPECT_EQ(hb.elements.size(), 8u);
}

TEST(Hilbert, Square) {
  auto hb = hilbert_basis(ktgs_oracle(build_square()), 24);
  std::set<Point> want;
  for (const auto& g : oracle::kWebs) want.insert(Point(g.begin(), g.end()));
  EXPECT_EQ(as_set(hb.elements), want);
  EXPECT_EQ(hb.elements.size(), 22u);
  Membership m = [](std::span<const std::int64_t> p) {
    std::array<std::int64_t, 12> a{};
    std::copy(p.begin(), p.end(), a.begin());
    return oracle::in_square_cone(a);
  };
  for (const auto& e : hb.elements) EXPECT_TRUE(is_irreducible(m, e));
}

TEST(Hilbert, RemovingAnElementBreaksDecomposition) {
  auto in = span_oracle({{1, 0}, {1, 1}, {0, 2}});
  std::vector<Point> basis = {{1, 0}, {1, 1}, {0, 2}};
  for (std::size_t k = 0; k < basis.size(); ++k) {
    auto smaller = basis;
    smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
    EXPECT_FALSE(decompose_over(in, smaller, basis[k]).has_value());
  }
  auto d = decompose_over(in, basis, {3, 4});
  ASSERT_TRUE(d.has_value());
  Point sum{0, 0};
  for (auto i : *d) {
    sum[0] += basis[i][0];
    sum[1] += basis[i][1];
  }
  EXPECT_EQ(sum, (Point{3, 4}));
}

TEST(Decompose, AllOnes) {
  auto gens = sector_generators(29);
  IntVec c(12, 0);
  for (const auto& g : gens) c = add(c, g);
  EXPECT_EQ(decompose_in_sector(c, gens), IntVec(12, 1));
}

TEST(Decompose, FamilyOneInSector29) {
  // generators: 8 corner arcs then [L_b,T_out], [R_b,L_c], [L_b,R_c], [T_out,L_c]
  std::vector<IntVec> gens;
  for (int w : {1, 2, 3, 4, 5, 6, 7, 8, 13, 20, 19, 10}) gens.push_back(web(w));
  IntVec lambda = decompose_in_sector(oracle::to_int(oracle::family1(1, 1, 1, 1)), gens);
  EXPECT_EQ(lambda, oracle::to_int(std::array{0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1}));
}

TEST(Decompose, NegativeOutsideSector) {
  std::vector<IntVec> gens;
  for (int w : {1, 2, 3, 4, 5, 6, 7, 8, 13, 20, 19, 10}) gens.push_back(web(w));
  // [R_b,T_in] spans sector 30 but not 29
  try {
    decompose_in_sector(web(15), gens);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NegativeCoefficient);
  }
}

TEST(Decompose, NonIntegral) {
  std::vector<IntVec> gens;
  for (int i = 0; i < 12; ++i) {
    IntVec g(12, 0);
    g[static_cast<std::size_t>(i)] = 2;
    gens.push_back(g);
  }
  IntVec c(12, 2);
  c[0] = 1;
  try {
    decompose_in_sector(c, gens);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonIntegral);
  }
}

TEST(Decompose, Singular) {
  std::vector<IntVec> gens(12, IntVec(12, 0));
  EXPECT_THROW(decompose_in_sector(IntVec(12, 0), gens), Error);
}

TEST(Decompose, CachedInverseAgrees) {
  for (int s = 1; s <= kSectorCount; ++s) {
    auto gens = sector_generators(s);
    IntVec c(12, 0);
    for (std::size_t j = 0; j < gens.size(); ++j) c = add(c, scale(Int(static_cast<long>(j % 3)), gens[j]));
    EXPECT_EQ(decompose_with(c, sector_inverse(s)), decompose_in_sector(c, gens)) << s;
  }
}
