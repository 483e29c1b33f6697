#include "suites.hpp"

#include <random>

#include "json.hpp"
#include "sl3trop/json_io.hpp"
#include "sl3trop/mutation.hpp"
#include "sl3trop/square_geometry.hpp"
#include "sl3trop/tropical_cone.hpp"
#include "sl3trop/webs.hpp"

namespace sl3t::cli {

using nlohmann::json;

namespace {

json loop_json(const LoopReport& r) {
  json j{{"pass", r.pass}, {"samples", r.samples}};
  json sigma = json::array();
  for (int s : r.sigma) sigma.push_back(s + 1);
  j["sigma"] = sigma;
  if (r.counterexample) {
    j["counterexample"] = json::parse(point_to_json(*r.counterexample));
    j["got"] = json::parse(point_to_json(*r.got));
    j["expected"] = json::parse(point_to_json(*r.expected));
  }
  return j;
}

IntVec random_cone_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(0, 10);
  IntVec c(12, Int(0));
  for (int w = 1; w <= kSquareWebCount; ++w) c = add(c, scale(Int(coef(rng)), square_web_coords(w)));
  return c;
}

std::string xs(const XVector& x) {
  json j = json::array();
  for (const auto& v : x) j.push_back(rat_to_string(v));
  return j.dump();
}

}  // namespace

SuiteResult suite_pentagon(const SuiteOptions& o) {
  FlipSequence loop35 = make_flip_sequence(build_pentagon_base(), pentagon_flip_edges(35));
  FlipSequence loop5{{loop35.states.begin(), loop35.states.begin() + 6}, {loop35.edges.begin(), loop35.edges.begin() + 5}};
  LoopReport r5 = verify_flip_loop(loop5, o.samples, o.range, o.seed);
  LoopReport r35 = verify_flip_loop(loop35, o.samples, o.range, o.seed);
  bool identity = true;
  for (std::size_t i = 0; i < r35.sigma.size(); ++i) identity = identity && r35.sigma[i] == static_cast<int>(i);
  bool pass = r5.pass && r35.pass && identity;
  json j{{"pass", pass}, {"five_flip", loop_json(r5)}, {"thirty_five_flip", loop_json(r35)},
         {"thirty_five_sigma_is_identity", identity}};
  return {pass, j.dump()};
}

SuiteResult suite_naturality(const SuiteOptions& o) {
  const QuadFrame frame = quad_around_edge(build_square(), kSquareDiagonal);
  const DottedTriangulation flipped = flip(build_square(), kSquareDiagonal);
  std::mt19937_64 rng(o.seed);
  std::size_t n = 0;
  for (; n < o.samples; ++n) {
    IntVec c = random_cone_point(rng);
    IntVec m = flip_mutation(c, frame);
    bool nonneg = std::all_of(m.begin(), m.end(), [](const Int& v) { return v >= 0; });
    bool cone = is_in_ktgs_cone(m, flipped);
    IntVec via_webs = from_flipped_frame(square_coords(flip_web(square_inverse(c))));
    if (!nonneg || !cone || via_webs != m) {
      json j{{"pass", false},
             {"samples", n + 1},
             {"point", json::parse(point_to_json(c))},
             {"mutated", json::parse(point_to_json(m))},
             {"via_webs", json::parse(point_to_json(via_webs))},
             {"nonnegative", nonneg},
             {"in_flipped_cone", cone}};
      return {false, j.dump()};
    }
  }
  return {true, json{{"pass", true}, {"samples", n}}.dump()};
}

SuiteResult suite_involution(const SuiteOptions& o) {
  const QuadFrame there = quad_around_edge(build_square(), kSquareDiagonal);
  const QuadFrame back = quad_around_edge(flip(build_square(), kSquareDiagonal), kSquareDiagonal);
  std::mt19937_64 rng(o.seed);
  std::size_t n = 0;
  for (; n < o.samples; ++n) {
    IntVec c = random_cone_point(rng);
    IntVec r = flip_mutation(flip_mutation(c, there), back);
    if (r != c) {
      json j{{"pass", false}, {"samples", n + 1}, {"point", json::parse(point_to_json(c))},
             {"result", json::parse(point_to_json(r))}};
      return {false, j.dump()};
    }
  }
  return {true, json{{"pass", true}, {"samples", n}}.dump()};
}

SuiteResult suite_relations(const SuiteOptions&) {
  RelationsReport r = verify_relations();
  json j{{"pass", r.pass}, {"holds", r.holds}, {"relation_rank", r.relation_rank}, {"kernel_dim", r.kernel_dim}};
  return {r.pass, j.dump()};
}

SuiteResult suite_sectors(const SuiteOptions& o) {
  const int s = o.scan;
  std::size_t points = 0, uncovered = 0, orthant_failures = 0;
  json first_uncovered;
  const auto& orthants = orthant_decompositions();
  for (int a = -s; a <= s; ++a)
    for (int b = -s; b <= s; ++b)
      for (int c = -s; c <= s; ++c)
        for (int d = -s; d <= s; ++d) {
          XVector x = make_x(a, b, c, d);
          ++points;
          auto in = sector_of(x);
          if (in.empty()) {
            if (uncovered++ == 0) first_uncovered = json::parse(xs(x));
          }
          for (const auto& [pattern, list] : orthants) {
            bool in_orthant = true;
            const int v[4] = {a, b, c, d};
            for (std::size_t k = 0; k < 4; ++k)
              if ((pattern[k] == '+' && v[k] < 0) || (pattern[k] == '-' && v[k] > 0)) in_orthant = false;
            bool in_union = false;
            for (int i : list) in_union = in_union || in_sector(x, i);
            if (in_orthant != in_union) ++orthant_failures;
          }
        }
  WallGraph g = wall_graph();
  bool regular = true;
  for (int i = 1; i <= kSectorCount; ++i) regular = regular && g.neighbors[static_cast<std::size_t>(i)].size() == 4;
  bool pass = uncovered == 0 && orthant_failures == 0 && regular && g.edges.size() == 84;
  json j{{"pass", pass},           {"scan", s},
         {"points", points},       {"uncovered", uncovered},
         {"orthant_failures", orthant_failures}, {"four_regular", regular},
         {"wall_edges", g.edges.size()}};
  if (uncovered) j["first_uncovered"] = first_uncovered;
  return {pass, j.dump()};
}

SuiteResult suite_cornerless(const SuiteOptions& o) {
  const int s = o.scan;
  std::size_t points = 0;
  for (int a = -s; a <= s; ++a)
    for (int b = -s; b <= s; ++b)
      for (int c = -s; c <= s; ++c)
        for (int d = -s; d <= s; ++d) {
          XVector x = make_x(a, b, c, d);
          ++points;
          SquareWebSchematic w = solve_cornerless(x);
          bool ok = x_coords(square_coords(w)) == x;
          for (const auto& p : w.params) ok = ok && p >= 0;
          if (!ok) {
            json j{{"pass", false}, {"x", json::parse(xs(x))}, {"family", w.family.value_or(0)}};
            return {false, j.dump()};
          }
        }
  return {true, json{{"pass", true}, {"scan", s}, {"points", points}}.dump()};
}

}  // namespace sl3t::cli
