#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "oracles.hpp"
#include "sl3trop/errors.hpp"
#include "sl3trop/json_io.hpp"
#include "sl3trop/square_geometry.hpp"
#include "sl3trop/webs.hpp"

using namespace sl3t;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  json out;
  std::string raw;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "sl3trop");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  json j;
  try {
    j = json::parse(out.str());
  } catch (const json::exception&) {
  }
  return {code, j, out.str()};
}

}  // namespace

TEST(Json, PointRoundTrip) {
  IntVec c = oracle::to_int(std::array{7, 5, 2, 1, 7, 5, 2, 1, 8, 6, 8, 6});
  EXPECT_EQ(point_from_json(point_to_json(c)), c);
  IntVec big{Int("123456789012345678901234567890"), Int(-4)};
  EXPECT_EQ(point_from_json(point_to_json(big)), big);
  EXPECT_THROW(point_from_json("[1, 2.5]"), Error);
  EXPECT_THROW(point_from_json("{\"a\": 1}"), Error);
  EXPECT_THROW(point_from_json("[1,"), Error);
}

TEST(Json, RhombiAreFractionStrings) {
  RatVec r{Rat(1, 3), Rat(-2), Rat(0)};
  json j = json::parse(rhombi_to_json(r));
  EXPECT_EQ(j[0], "1/3");
  EXPECT_EQ(j[1], "-2/1");
  EXPECT_EQ(rhombi_from_json(rhombi_to_json(r)), r);
}

TEST(Json, TriangulationRoundTrip) {
  for (const auto& t : {build_triangle(), build_square(), build_pentagon_base(), build_once_punctured_torus()}) {
    auto back = triangulation_from_json(triangulation_to_json(t));
    EXPECT_TRUE(back == t);
  }
  auto flipped = flip(build_square(), kSquareDiagonal);
  EXPECT_TRUE(triangulation_from_json(triangulation_to_json(flipped)) == flipped);
}

TEST(Json, TriangulationReversedSides) {
  json j = json::parse(triangulation_to_json(build_square()));
  // bottom face uses the diagonal backwards
  EXPECT_EQ(j["faces"][1][2], -(kSquareDiagonal + 1));
  EXPECT_EQ(j["dots"]["1"]["edge"], 0);
  EXPECT_EQ(j["dots"]["9"]["face"], 0);
}

TEST(Json, TriangulationValidation) {
  json j = json::parse(triangulation_to_json(build_square()));
  j["boundary"] = {0, 1, 2};
  EXPECT_THROW(triangulation_from_json(j.dump()), Error);
  json k = json::parse(triangulation_to_json(build_square()));
  k["dots"].erase("3");
  EXPECT_THROW(triangulation_from_json(k.dump()), Error);
  EXPECT_THROW(triangulation_from_json("{\"faces\": []}"), Error);
}

TEST(Json, SchematicRoundTrip) {
  TriangleSchematic s;
  s.dir = Honeycomb::In;
  s.size = 2;
  s.arcs = {1, 0, 3, 0, 0, 5};
  auto back = schematics_from_json(schematics_to_json({s, TriangleSchematic{}}), 2);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0], s);
  EXPECT_TRUE(back[1].empty());
  json j = json::parse(schematics_to_json({s}));
  EXPECT_EQ(j["faces"]["0"]["honeycomb"]["dir"], "in");
  EXPECT_THROW(schematics_from_json("{\"faces\":{\"0\":{\"arcs\":[1,2,3]}}}", 1), Error);
}

TEST(Json, SquareSchematicRoundTrip) {
  for (int i = 1; i <= kSquareWebCount; ++i) EXPECT_EQ(square_schematic_from_json(square_schematic_to_json(square_web(i))), square_web(i));
  auto s = square_inverse(oracle::to_int(oracle::family3(1, 2, 0, 1)));
  auto back = square_schematic_from_json(square_schematic_to_json(s));
  EXPECT_EQ(back, s);
  EXPECT_EQ(back.family, s.family);
  EXPECT_EQ(back.params, s.params);
}

TEST(Cli, MemberFamilyOne) {
  CliRun r = run({"member", "--surface", "square", "--point", "[7,5,2,1,7,5,2,1,8,6,8,6]"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out["in_cone"], true);
  EXPECT_EQ(r.out["rhombi"].size(), 18u);
}

TEST(Cli, MemberErrors) {
  CliRun r = run({"member", "--surface", "square", "--point", "[]"});
  EXPECT_EQ(r.code, cli::kDomainError);
  EXPECT_EQ(r.out["error"], "length mismatch");
  EXPECT_EQ(run({"member", "--surface", "square", "--point", "[1,"}).code, cli::kDomainError);
  EXPECT_EQ(run({"member", "--surface", "hexagon", "--point", "[]"}).code, cli::kDomainError);
  EXPECT_EQ(run({"member", "--bogus"}).code, cli::kDomainError);
}

TEST(Cli, Mutate) {
  CliRun r = run({"mutate", "--point", "[3,3,4,5,6,3,8,4,7,7,11,8]"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out["point"], json::parse("[3,3,4,5,6,3,8,4,7,7,5,11]"));
  EXPECT_EQ(run({"mutate", "--edge", "0", "--point", "[0,0,0,0,0,0,0,0,0,0,0,0]"}).out["error"], "boundary edge");
}

TEST(Cli, MutateFromFile) {
  std::string path = ::testing::TempDir() + "pentagon.json";
  {
    std::ofstream f(path);
    f << triangulation_to_json(build_pentagon_base());
  }
  CliRun r = run({"mutate", "--surface", "file", "--triangulation", path, "--edge", "5", "--point",
               "[0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0]"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out["point"].size(), 17u);
  EXPECT_EQ(r.out["triangulation"]["faces"].size(), 3u);
  std::remove(path.c_str());
}

TEST(Cli, Hilbert) {
  CliRun r = run({"hilbert", "--surface", "triangle"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out["count"], 8);
  EXPECT_EQ(r.out["bound"], 12);
}

TEST(Cli, ClassifyAndInvert) {
  CliRun c = run({"classify", "--point", "[7,5,2,1,7,5,2,1,8,6,8,6]"});
  EXPECT_EQ(c.out["family"], 29);
  EXPECT_EQ(c.out["x"], json::parse("[1,1,1,1]"));
  CliRun i = run({"invert", "--point", "[7,5,2,1,7,5,2,1,8,6,8,6]"});
  EXPECT_EQ(i.code, cli::kOk);
  EXPECT_EQ(square_schematic_from_json(i.raw).family, 29);
  CliRun t = run({"invert", "--surface", "triangle", "--point", "[2,1,2,1,2,1,3]"});
  EXPECT_EQ(t.out["faces"]["0"]["honeycomb"]["dir"], "out");
  EXPECT_EQ(run({"invert", "--surface", "torus", "--point", "[0,0,0,0,0,0,0,0]"}).code, cli::kDomainError);
}

TEST(Cli, FlipWeb) {
  CliRun r = run({"flipweb", "--point", "[7,5,2,1,7,5,2,1,8,6,8,6]"});
  EXPECT_EQ(r.code, cli::kOk);
  IntVec p = point_from_json(r.out["point"].dump());
  EXPECT_EQ(from_flipped_frame(p), oracle::to_int(std::array{7, 5, 2, 1, 7, 5, 2, 1, 6, 7, 6, 7}));
  CliRun s = run({"flipweb", "--schematic", square_schematic_to_json(square_web(17))});
  EXPECT_EQ(s.code, cli::kOk);
  EXPECT_EQ(run({"flipweb"}).code, cli::kDomainError);
}

TEST(Cli, WallsAndSolve) {
  CliRun w = run({"walls"});
  EXPECT_EQ(w.out["edges"].size(), 84u);
  CliRun d = run({"walls", "--format", "dot"});
  EXPECT_NE(d.raw.find("graph walls"), std::string::npos);
  EXPECT_NE(d.raw.find("29 -- 30;"), std::string::npos);
  CliRun s = run({"solve-x", "--point", "[1,2,-1,3]"});
  EXPECT_EQ(s.out["family"], 30);
  EXPECT_EQ(s.out["params"], json::parse("[1,1,3,1]"));
  EXPECT_EQ(run({"solve-x", "--point", "[1,2]"}).code, cli::kDomainError);
}

TEST(Cli, VerifySuites) {
  CliRun p = run({"verify", "pentagon", "--samples", "10", "--range", "5"});
  EXPECT_EQ(p.code, cli::kOk);
  EXPECT_EQ(p.out["pass"], true);
  EXPECT_EQ(run({"verify", "relations"}).out["pass"], true);
  EXPECT_EQ(run({"verify", "involution", "--samples", "50"}).out["pass"], true);
  EXPECT_EQ(run({"verify", "nothing"}).code, cli::kDomainError);
  // same seed, same output
  EXPECT_EQ(run({"verify", "naturality", "--samples", "20", "--seed", "3"}).raw,
            run({"verify", "naturality", "--samples", "20", "--seed", "3"}).raw);
}
