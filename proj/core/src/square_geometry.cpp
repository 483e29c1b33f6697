#include "sl3trop/square_geometry.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <string>

#include "sl3trop/errors.hpp"
#include "sl3trop/tropical_cone.hpp"

namespace sl3t {

XVector make_x(std::int64_t x1, std::int64_t x2, std::int64_t x3, std::int64_t x4) {
  return {Rat(x1), Rat(x2), Rat(x3), Rat(x4)};
}

RatVec theta(const IntVec& c) {
  static const DottedTriangulation sq = build_square();
  RatVec g = rhombus_numbers(c, sq);
  // bottom face is stored with corners b, d, c; listed order is d, b, c
  RatVec out(g.begin(), g.begin() + 9);
  out.insert(out.end(), g.begin() + 12, g.begin() + 15);
  out.insert(out.end(), g.begin() + 9, g.begin() + 12);
  out.insert(out.end(), g.begin() + 15, g.end());
  return out;
}

PhiImage phi(const RatVec& b) {
  if (b.size() != 18) throw Error(ErrorKind::LengthMismatch, "expected 18 rhombus numbers");
  auto B = [&](int i) -> const Rat& { return b[static_cast<std::size_t>(i - 1)]; };
  struct Rel {
    int p, q, r, s;
    const char* text;
  };
  static const Rel rels[] = {
      {3, 2, 6, 5, "b3-b2 = b6-b5"},    {3, 2, 9, 8, "b3-b2 = b9-b8"},
      {4, 13, 17, 9, "b4-b13 = b17-b9"}, {12, 11, 15, 14, "b12-b11 = b15-b14"},
      {12, 11, 18, 17, "b12-b11 = b18-b17"}, {16, 7, 5, 15, "b16-b7 = b5-b15"},
  };
  for (const Rel& r : rels)
    if (B(r.p) - B(r.q) != B(r.r) - B(r.s)) throw Error(ErrorKind::NotInVT, std::string("relation violated: ") + r.text);
  PhiImage out;
  out.head = {B(1), B(2), B(4), B(5), B(7), B(8), B(10), B(11)};
  out.x = {B(3) - B(2), B(4) - B(13), B(12) - B(11), B(16) - B(7)};
  return out;
}

XVector x_coords(const IntVec& c) {
  if (c.size() != 12) throw Error(ErrorKind::LengthMismatch, "square points have 12 coordinates");
  return phi(theta(c)).x;
}

namespace {

void check_sector(int i) {
  if (i < 1 || i > kSectorCount) throw Error(ErrorKind::InvalidInput, "sector " + std::to_string(i) + " out of range");
}

std::array<int, 4> signs(const char* p) {
  std::array<int, 4> s{};
  for (std::size_t k = 0; k < 4; ++k) s[k] = p[k] == '+' ? 1 : -1;
  return s;
}

const std::vector<SectorSystem>& systems() {
  using R = std::array<int, 4>;
  static const std::vector<SectorSystem> table = {
      {signs("-++-"), {R{0, 0, -1, -1}}},
      {signs("+++-"), {R{0, 0, -1, -1}}},
      {signs("-+--"), {R{0, 1, 1, 0}}},
      {signs("++--"), {R{0, 1, 1, 0}}},
      {signs("-++-"), {R{-1, 0, -1, -1}, R{0, 0, 1, 1}}},
      {signs("-+++"), {R{1, 0, 1, 1}, R{-1, 0, 0, -1}}},
      {signs("--+-"), {R{-1, 0, -1, -1}, R{0, 0, 1, 1}}},
      {signs("--++"), {R{1, 0, 1, 1}, R{-1, 0, 0, -1}}},
      {signs("+--+"), {R{-1, -1, 0, 0}}},
      {signs("---+"), {R{1, 0, 0, 1}}},
      {signs("+-++"), {R{-1, -1, 0, 0}}},
      {signs("--++"), {R{1, 0, 0, 1}}},
      {signs("+--+"), {R{-1, -1, -1, 0}, R{1, 1, 0, 0}}},
      {signs("++-+"), {R{1, 1, 1, 0}, R{0, -1, -1, 0}}},
      {signs("+---"), {R{-1, -1, -1, 0}, R{1, 1, 0, 0}}},
      {signs("++--"), {R{1, 1, 1, 0}, R{0, -1, -1, 0}}},
      {signs("+-+-"), {R{1, 1, 0, 0}, R{0, 0, -1, -1}}},
      {signs("-+--"), {R{0, -1, -1, 0}}},
      {signs("---+"), {R{-1, 0, 0, -1}}},
      {signs("+-+-"), {R{-1, -1, 0, 0}, R{0, 0, 1, 1}}},
      {signs("+-+-"), {R{-1, -1, 0, 0}, R{0, 0, -1, -1}}},
      {signs("+---"), {R{-1, -1, 0, 0}}},
      {signs("--+-"), {R{0, 0, -1, -1}}},
      {signs("----"), {}},
      {signs("+-++"), {R{1, 1, 0, 0}}},
      {signs("-+-+"), {R{1, 0, 0, 1}, R{0, -1, -1, 0}}},
      {signs("-+-+"), {R{-1, 0, 0, -1}, R{0, 1, 1, 0}}},
      {signs("+++-"), {R{0, 0, 1, 1}}},
      {signs("++++"), {}},
      {signs("++-+"), {R{0, 1, 1, 0}}},
      {signs("-+++"), {R{1, 0, 0, 1}}},
      {signs("-+-+"), {R{1, 0, 0, 1}, R{0, 1, 1, 0}}},
      {signs("+-+-"), {R{1, 1, 0, 0}, R{0, 0, 1, 1}}},
      {signs("-+-+"), {R{-1, 0, 0, -1}, R{0, -1, -1, 0}}},
      {signs("-+++"), {R{-1, 0, -1, -1}}},
      {signs("-++-"), {R{1, 0, 1, 1}}},
      {signs("--++"), {R{-1, 0, -1, -1}}},
      {signs("--+-"), {R{1, 0, 1, 1}}},
      {signs("+--+"), {R{1, 1, 1, 0}}},
      {signs("++-+"), {R{-1, -1, -1, 0}}},
      {signs("+---"), {R{1, 1, 1, 0}}},
      {signs("++--"), {R{-1, -1, -1, 0}}},
  };
  return table;
}

const std::array<std::array<int, 4>, kSectorCount>& q_table() {
  static const std::array<std::array<int, 4>, kSectorCount> q = {{
      {11, 16, 21, 20}, {10, 16, 21, 20}, {11, 20, 15, 21}, {10, 20, 15, 21}, {18, 11, 16, 20},
      {13, 18, 12, 20}, {11, 22, 18, 16}, {18, 22, 13, 12}, {9, 22, 14, 19},  {12, 22, 14, 19},
      {9, 22, 13, 19},  {12, 22, 13, 19}, {17, 9, 14, 19},  {10, 15, 17, 19}, {17, 9, 14, 21},
      {10, 15, 17, 21}, {9, 10, 21, 16},  {11, 15, 14, 21}, {11, 22, 14, 12}, {9, 22, 13, 16},
      {9, 22, 16, 21},  {9, 22, 14, 21},  {11, 22, 16, 21}, {11, 22, 14, 21}, {10, 9, 13, 19},
      {12, 15, 14, 19}, {11, 20, 15, 12}, {10, 20, 13, 16}, {13, 20, 19, 10}, {15, 20, 19, 10},
      {12, 20, 13, 19}, {12, 20, 15, 19}, {9, 10, 13, 16},  {11, 15, 14, 12}, {18, 11, 12, 20},
      {18, 20, 13, 16}, {11, 22, 18, 12}, {18, 22, 13, 16}, {10, 9, 17, 19},  {17, 15, 14, 19},
      {10, 9, 17, 21},  {15, 17, 14, 21},
  }};
  return q;
}

}  // namespace

const SectorSystem& sector_system(int i) {
  check_sector(i);
  return systems()[static_cast<std::size_t>(i - 1)];
}

bool in_sector(const XVector& x, int i) {
  const SectorSystem& s = sector_system(i);
  for (std::size_t k = 0; k < 4; ++k)
    if (s.sign[k] * x[k] < 0) return false;
  for (const auto& r : s.extra) {
    Rat v = 0;
    for (std::size_t k = 0; k < 4; ++k) v += r[k] * x[k];
    if (v < 0) return false;
  }
  return true;
}

std::vector<int> sector_of(const XVector& x) {
  std::vector<int> out;
  for (int i = 1; i <= kSectorCount; ++i)
    if (in_sector(x, i)) out.push_back(i);
  return out;
}

const std::array<int, 4>& sector_webs(int i) {
  check_sector(i);
  return q_table()[static_cast<std::size_t>(i - 1)];
}

std::array<std::array<int, 4>, 4> sector_matrix(int i) {
  std::array<std::array<int, 4>, 4> m{};
  const auto& q = sector_webs(i);
  for (std::size_t r = 0; r < 4; ++r) {
    XVector x = x_coords(square_web_coords(q[r]));
    for (std::size_t k = 0; k < 4; ++k) m[r][k] = static_cast<int>(boost::multiprecision::numerator(x[k]));
  }
  return m;
}

std::vector<IntVec> sector_generators(int i) {
  std::vector<IntVec> g;
  for (int w = 1; w <= 8; ++w) g.push_back(square_web_coords(w));
  for (int w : sector_webs(i)) g.push_back(square_web_coords(w));
  return g;
}

namespace {

template <class Make>
const IntegerInverse& cached(std::vector<IntegerInverse>& cache, std::once_flag& flag, int i, Make make) {
  std::call_once(flag, [&] {
    for (int s = 1; s <= kSectorCount; ++s) cache.push_back(make(s));
  });
  return cache[static_cast<std::size_t>(i - 1)];
}

const IntegerInverse& transposed_matrix_inverse(int i) {
  static std::vector<IntegerInverse> cache;
  static std::once_flag flag;
  check_sector(i);
  return cached(cache, flag, i, [](int s) {
    auto m = sector_matrix(s);
    IntMatrix t(4, IntVec(4));
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t k = 0; k < 4; ++k) t[k][r] = m[r][k];
    return integer_inverse(t);
  });
}

}  // namespace

const IntegerInverse& sector_inverse(int i) {
  static std::vector<IntegerInverse> cache;
  static std::once_flag flag;
  check_sector(i);
  return cached(cache, flag, i, [](int s) { return integer_inverse(columns_to_matrix(sector_generators(s))); });
}

const std::vector<std::pair<std::string, std::vector<int>>>& orthant_decompositions() {
  static const std::vector<std::pair<std::string, std::vector<int>>> table = {
      {"----", {24}},         {"++++", {29}},         {"+++-", {2, 28}},      {"-+--", {3, 18}},
      {"-+++", {6, 31, 35}},  {"--+-", {7, 23, 38}},  {"---+", {10, 19}},     {"+-++", {11, 25}},
      {"++-+", {14, 30, 40}}, {"+---", {15, 22, 41}}, {"-++-", {1, 5, 36}},   {"++--", {4, 16, 42}},
      {"--++", {8, 12, 37}},  {"+--+", {9, 13, 39}},  {"+-+-", {17, 20, 21, 33}}, {"-+-+", {26, 27, 32, 34}},
  };
  return table;
}

WallCrossing cross_wall(int sector, int web) {
  const auto& q = sector_webs(sector);
  if (std::find(q.begin(), q.end(), web) == q.end())
    throw Error(ErrorKind::InvalidInput, "web " + std::to_string(web) + " is not in Q_" + std::to_string(sector));
  std::set<int> keep(q.begin(), q.end());
  keep.erase(web);
  for (int l = 1; l <= kSectorCount; ++l) {
    if (l == sector) continue;
    const auto& ql = sector_webs(l);
    std::set<int> other(ql.begin(), ql.end());
    if (std::includes(other.begin(), other.end(), keep.begin(), keep.end())) {
      for (int w : ql)
        if (!keep.count(w)) return {sector, web, l, w};
    }
  }
  throw Error(ErrorKind::InvalidInput, "no sector across the wall opposite web " + std::to_string(web));
}

WallGraph wall_graph() {
  WallGraph g;
  g.neighbors.assign(kSectorCount + 1, {});
  for (int i = 1; i <= kSectorCount; ++i) {
    const auto& qi = sector_webs(i);
    for (int l = i + 1; l <= kSectorCount; ++l) {
      const auto& ql = sector_webs(l);
      int common = 0;
      for (int a : qi)
        if (std::find(ql.begin(), ql.end(), a) != ql.end()) ++common;
      if (common == 3) {
        g.edges.emplace_back(i, l);
        g.neighbors[static_cast<std::size_t>(i)].push_back(l);
        g.neighbors[static_cast<std::size_t>(l)].push_back(i);
      }
    }
  }
  for (int i = 1; i <= kSectorCount; ++i)
    for (int w : sector_webs(i)) g.crossings.push_back(cross_wall(i, w));
  return g;
}

const std::vector<SkeinRelation>& skein_relations() {
  static const std::vector<SkeinRelation> rels = {
      {{11, 10}, {2, 4, 6}},     {{10, 12}, {2, 6, 19}}, {{14, 13}, {4, 6, 8}},  {{13, 15, 9}, {4, 3, 8, 10}},
      {{16, 19}, {13, 5}},       {{17, 13}, {4, 8, 10}}, {{18, 10}, {2, 6, 13}}, {{9, 20}, {3, 10}},
      {{19, 21}, {4, 5}},        {{10, 22}, {9, 6}},
  };
  return rels;
}

RelationsReport verify_relations() {
  RelationsReport rep;
  IntMatrix relation_vectors;
  for (const auto& r : skein_relations()) {
    IntVec l(12, Int(0)), rr(12, Int(0));
    IntVec vec(kSquareWebCount, Int(0));
    for (int w : r.lhs) {
      l = add(l, square_web_coords(w));
      vec[static_cast<std::size_t>(w - 1)] += 1;
    }
    for (int w : r.rhs) {
      rr = add(rr, square_web_coords(w));
      vec[static_cast<std::size_t>(w - 1)] -= 1;
    }
    rep.holds.push_back(l == rr);
    rep.pass = rep.pass && l == rr;
    relation_vectors.push_back(vec);
  }
  rep.relation_rank = rank(relation_vectors);
  IntMatrix evaluation;
  for (int w = 1; w <= kSquareWebCount; ++w) evaluation.push_back(square_web_coords(w));
  rep.kernel_dim = static_cast<std::size_t>(kSquareWebCount) - rank(evaluation);
  rep.pass = rep.pass && rep.relation_rank == 10 && rep.kernel_dim == 10;
  return rep;
}

SquareWebSchematic solve_cornerless(const XVector& x) {
  IntVec target;
  for (const auto& v : x) {
    if (!is_integer(v)) throw Error(ErrorKind::InvalidInput, "X-coordinates must be integers");
    target.push_back(boost::multiprecision::numerator(v));
  }
  std::vector<int> s = sector_of(x);
  if (s.empty()) throw Error(ErrorKind::DecompositionFailure, "no sector contains the X-vector");
  const int i = s.front();
  IntVec p = decompose_with(target, transposed_matrix_inverse(i));
  return family_schematic(i, {p[0], p[1], p[2], p[3]});
}

}  // namespace sl3t
