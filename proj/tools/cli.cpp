#include "cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sl3trop/errors.hpp"
#include "sl3trop/json_io.hpp"
#include "sl3trop/mutation.hpp"
#include "sl3trop/square_geometry.hpp"
#include "sl3trop/tropical_cone.hpp"
#include "sl3trop/webs.hpp"
#include "suites.hpp"

namespace sl3t::cli {

using nlohmann::json;

namespace {

struct VerifyFailed {
  std::string json;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DottedTriangulation load_surface(const std::string& surface, const std::string& file) {
  if (surface == "triangle") return build_triangle();
  if (surface == "square") return build_square();
  if (surface == "pentagon") return build_pentagon_base();
  if (surface == "torus") return build_once_punctured_torus();
  if (surface == "file") {
    if (file.empty()) throw Error(ErrorKind::InvalidInput, "--surface file needs --triangulation");
    return triangulation_from_json(read_file(file));
  }
  throw Error(ErrorKind::InvalidInput, "unknown surface '" + surface + "'");
}

json j(const std::string& text) { return json::parse(text); }

json x_json(const XVector& x) {
  json a = json::array();
  for (const auto& v : x) a.push_back(j(point_to_json({boost::multiprecision::numerator(v)})).at(0));
  return a;
}

XVector x_from(const IntVec& v) {
  if (v.size() != 4) throw Error(ErrorKind::LengthMismatch, "X-vectors have 4 entries");
  return {Rat(v[0]), Rat(v[1]), Rat(v[2]), Rat(v[3])};
}

void emit_suite(std::ostream& out, const SuiteResult& r) {
  if (!r.pass) throw VerifyFailed{r.json};
  out << r.json << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"SL3 tropical coordinates: cones, mutation, webs and square sectors", "sl3trop"};
  app.require_subcommand(1);

  std::string surface = "square", tri_file, point, schematic, format = "json", suite;
  int edge = -1, scan = 6;
  std::int64_t bound = 0, range = 50;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;

  auto add_surface = [&](CLI::App* c) {
    c->add_option("--surface", surface, "triangle|square|pentagon|torus|file")->capture_default_str();
    c->add_option("--triangulation", tri_file, "triangulation JSON file (with --surface file)");
  };

  auto* member = app.add_subcommand("member", "KTGS cone membership and rhombus numbers");
  add_surface(member);
  member->add_option("--point", point, "JSON array")->required();

  auto* mutate = app.add_subcommand("mutate", "tropical mutation for one flip");
  add_surface(mutate);
  mutate->add_option("--edge", edge, "interior edge id (default: the square's diagonal)");
  mutate->add_option("--point", point, "JSON array")->required();

  auto* hilbert = app.add_subcommand("hilbert", "bounded Hilbert basis of the KTGS cone");
  add_surface(hilbert);
  hilbert->add_option("--bound", bound, "coordinate-sum bound (default 12 triangle, 24 otherwise)");

  auto* classify = app.add_subcommand("classify", "sectors and families of a square cone point");
  classify->add_option("--point", point, "JSON array of 12")->required();

  auto* invert = app.add_subcommand("invert", "web schematic of a cone point (triangle or square)");
  add_surface(invert);
  invert->add_option("--point", point, "JSON array")->required();

  auto* flipweb = app.add_subcommand("flipweb", "the same web read in the flipped square");
  flipweb->add_option("--schematic", schematic, "square schematic JSON");
  flipweb->add_option("--point", point, "square cone point instead of a schematic");

  auto* sectors = app.add_subcommand("sectors", "cover, orthant and wall checks on a lattice scan");
  sectors->add_option("--scan", scan, "scan |X_i| <= scan")->capture_default_str();

  auto* walls = app.add_subcommand("walls", "wall graph of the 42 sectors");
  walls->add_option("--format", format, "json|dot")->capture_default_str();

  auto* solvex = app.add_subcommand("solve-x", "cornerless web with given X-coordinates");
  solvex->add_option("--point", point, "JSON array of 4 integers")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "pentagon|naturality|involution|relations|sectors|cornerless|all")->required();
  verify->add_option("--samples", samples)->capture_default_str();
  verify->add_option("--range", range)->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();
  verify->add_option("--scan", scan)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kDomainError;
  }

  try {
    if (*member) {
      DottedTriangulation t = load_surface(surface, tri_file);
      IntVec c = point_from_json(point);
      bool in = is_in_ktgs_cone(c, t);
      out << json{{"in_cone", in}, {"rhombi", j(rhombi_to_json(rhombus_numbers(c, t)))}}.dump() << "\n";
    } else if (*mutate) {
      DottedTriangulation t = load_surface(surface, tri_file);
      if (edge < 0) {
        if (surface != "square") throw Error(ErrorKind::InvalidInput, "--edge is required for this surface");
        edge = kSquareDiagonal;
      }
      IntVec c = point_from_json(point);
      if (c.size() != t.dot_count()) throw Error(ErrorKind::LengthMismatch, "point length does not match the triangulation");
      IntVec m = flip_mutation(c, quad_around_edge(t, edge));
      out << json{{"point", j(point_to_json(m))}, {"triangulation", j(triangulation_to_json(flip(t, edge)))}}.dump()
          << "\n";
    } else if (*hilbert) {
      DottedTriangulation t = load_surface(surface, tri_file);
      if (bound <= 0) bound = surface == "triangle" ? 12 : 24;
      HilbertBasis hb = hilbert_basis(ktgs_oracle(t), bound);
      json el = json::array();
      for (const auto& p : hb.elements) el.push_back(p);
      out << json{{"count", hb.elements.size()}, {"bound", hb.bound}, {"cone_points", hb.cone_points}, {"elements", el}}
                 .dump()
          << "\n";
    } else if (*classify) {
      IntVec c = point_from_json(point);
      std::vector<int> fam = classify_family(c);
      XVector x = x_coords(c);
      json r{{"x", x_json(x)}, {"sectors", sector_of(x)}, {"families", fam}};
      if (!fam.empty()) r["family"] = fam.front();
      out << r.dump() << "\n";
    } else if (*invert) {
      IntVec c = point_from_json(point);
      if (surface == "triangle") {
        out << schematics_to_json({triangle_inverse(c)}) << "\n";
      } else if (surface == "square") {
        out << square_schematic_to_json(square_inverse(c)) << "\n";
      } else {
        throw Error(ErrorKind::InvalidInput, "inversion is implemented for the triangle and the square only");
      }
    } else if (*flipweb) {
      SquareWebSchematic s;
      if (!schematic.empty()) s = square_schematic_from_json(schematic);
      else if (!point.empty()) s = square_inverse(point_from_json(point));
      else throw Error(ErrorKind::InvalidInput, "flipweb needs --schematic or --point");
      SquareWebSchematic f = flip_web(s);
      out << json{{"schematic", j(square_schematic_to_json(f))}, {"point", j(point_to_json(square_coords(f)))}}.dump()
          << "\n";
    } else if (*sectors) {
      SuiteOptions o;
      o.scan = scan;
      emit_suite(out, suite_sectors(o));
    } else if (*walls) {
      WallGraph g = wall_graph();
      if (format == "dot") {
        out << "graph walls {\n";
        for (auto [a, b] : g.edges) out << "  " << a << " -- " << b << ";\n";
        out << "}\n";
      } else if (format == "json") {
        json cr = json::array();
        for (const auto& w : g.crossings)
          cr.push_back({{"from", w.from}, {"web", w.web}, {"to", w.to}, {"swapped", w.swapped}});
        out << json{{"edges", g.edges}, {"crossings", cr}}.dump() << "\n";
      } else {
        throw Error(ErrorKind::InvalidInput, "unknown format '" + format + "'");
      }
    } else if (*solvex) {
      out << square_schematic_to_json(solve_cornerless(x_from(point_from_json(point)))) << "\n";
    } else if (*verify) {
      SuiteOptions o{samples, range, seed, scan};
      using Fn = SuiteResult (*)(const SuiteOptions&);
      const std::vector<std::pair<std::string, Fn>> all = {
          {"pentagon", suite_pentagon},     {"naturality", suite_naturality}, {"involution", suite_involution},
          {"relations", suite_relations},   {"sectors", suite_sectors},       {"cornerless", suite_cornerless},
      };
      if (suite == "all") {
        json r = json::object();
        bool pass = true;
        for (const auto& [name, fn] : all) {
          SuiteResult s = fn(o);
          pass = pass && s.pass;
          r[name] = j(s.json);
        }
        r["pass"] = pass;
        emit_suite(out, {pass, r.dump()});
      } else {
        auto it = std::find_if(all.begin(), all.end(), [&](const auto& p) { return p.first == suite; });
        if (it == all.end()) throw Error(ErrorKind::InvalidInput, "unknown suite '" + suite + "'");
        emit_suite(out, it->second(o));
      }
    }
  } catch (const VerifyFailed& v) {
    out << v.json << "\n";
    return kVerifyFailed;
  } catch (const Error& e) {
    out << json{{"error", kind_name(e.kind())}, {"message", e.what()}}.dump() << "\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace sl3t::cli
