#include "sl3trop/json_io.hpp"

#include <set>

#include "json.hpp"
#include "sl3trop/errors.hpp"

namespace sl3t {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Int(j.get<std::uint64_t>()) : Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorKind::InvalidInput, "expected an integer, got " + j.dump());
}

int small_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(ErrorKind::InvalidInput, std::string("expected integer ") + what);
  return j.get<int>();
}

const char* dir_name(Honeycomb d) {
  switch (d) {
    case Honeycomb::Out: return "out";
    case Honeycomb::In: return "in";
    default: return "none";
  }
}

json schematic_json(const TriangleSchematic& s) {
  json arcs = json::array();
  for (const auto& a : s.arcs) arcs.push_back(int_to_json(a));
  return {{"honeycomb", {{"dir", dir_name(s.dir)}, {"size", int_to_json(s.size)}}}, {"arcs", arcs}};
}

TriangleSchematic schematic_from(const json& j) {
  TriangleSchematic s;
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "face schematic must be an object");
  if (j.contains("honeycomb")) {
    const json& h = j.at("honeycomb");
    std::string dir = h.value("dir", "none");
    if (dir == "out") s.dir = Honeycomb::Out;
    else if (dir == "in") s.dir = Honeycomb::In;
    else if (dir == "none") s.dir = Honeycomb::None;
    else throw Error(ErrorKind::InvalidInput, "unknown honeycomb direction '" + dir + "'");
    s.size = h.contains("size") ? int_from_json(h.at("size")) : Int(0);
  }
  if (j.contains("arcs")) {
    const json& a = j.at("arcs");
    if (!a.is_array() || a.size() != 6) throw Error(ErrorKind::InvalidInput, "arcs must have 6 entries");
    for (std::size_t i = 0; i < 6; ++i) s.arcs[i] = int_from_json(a[i]);
  }
  if (!s.valid()) throw Error(ErrorKind::InvalidInput, "invalid face schematic " + j.dump());
  return s;
}

}  // namespace

std::string point_to_json(const IntVec& c) {
  json j = json::array();
  for (const auto& v : c) j.push_back(int_to_json(v));
  return j.dump();
}

IntVec point_from_json(std::string_view text) {
  json j = parse(text);
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "point must be a JSON array");
  IntVec c;
  for (const auto& v : j) c.push_back(int_from_json(v));
  return c;
}

std::string rhombi_to_json(const RatVec& r) {
  json j = json::array();
  for (const auto& v : r) {
    auto n = boost::multiprecision::numerator(v);
    auto d = boost::multiprecision::denominator(v);
    j.push_back(n.str() + "/" + d.str());
  }
  return j.dump();
}

RatVec rhombi_from_json(std::string_view text) {
  json j = parse(text);
  if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "rhombus vector must be a JSON array");
  RatVec r;
  for (const auto& v : j) {
    if (v.is_string()) r.push_back(rat_from_string(v.get<std::string>()));
    else r.emplace_back(int_from_json(v));
  }
  return r;
}

std::string triangulation_to_json(const DottedTriangulation& t) {
  json faces = json::array();
  for (const Face& f : t.faces()) {
    json row = json::array();
    for (const HalfEdge& h : f) row.push_back(h.reversed ? -(h.edge + 1) : h.edge);
    faces.push_back(row);
  }
  json dots = json::object();
  for (int e = 0; e < t.num_edges(); ++e)
    for (int s = 0; s < 2; ++s) dots[std::to_string(t.edge_dot(e, s) + 1)] = {{"edge", e}, {"slot", s}};
  for (int f = 0; f < t.num_faces(); ++f) dots[std::to_string(t.face_dot(f) + 1)] = {{"face", f}};
  return json{{"faces", faces}, {"boundary", t.boundary_edges()}, {"dots", dots}}.dump();
}

DottedTriangulation triangulation_from_json(std::string_view text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("faces") || !j.contains("dots"))
    throw Error(ErrorKind::InvalidInput, "triangulation needs 'faces' and 'dots'");
  std::vector<Face> faces;
  int num_edges = 0;
  for (const auto& row : j.at("faces")) {
    if (!row.is_array() || row.size() != 3) throw Error(ErrorKind::InvalidInput, "each face needs 3 sides");
    Face f;
    for (std::size_t k = 0; k < 3; ++k) {
      int v = small_int(row[k], "edge id");
      f[k] = v >= 0 ? HalfEdge{v, false} : HalfEdge{-v - 1, true};
      num_edges = std::max(num_edges, f[k].edge + 1);
    }
    faces.push_back(f);
  }
  std::vector<std::array<int, 2>> edge_dots(static_cast<std::size_t>(num_edges), {-1, -1});
  std::vector<int> face_dots(faces.size(), -1);
  for (const auto& [label, where] : j.at("dots").items()) {
    int d;
    try {
      d = std::stoi(label) - 1;
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidInput, "dot label '" + label + "' is not an integer");
    }
    if (where.contains("edge")) {
      int e = small_int(where.at("edge"), "edge");
      int s = small_int(where.value("slot", json(0)), "slot");
      if (e < 0 || e >= num_edges || s < 0 || s > 1)
        throw Error(ErrorKind::InvalidInput, "dot " + label + " points to a bad edge slot");
      edge_dots[static_cast<std::size_t>(e)][static_cast<std::size_t>(s)] = d;
    } else if (where.contains("face")) {
      int f = small_int(where.at("face"), "face");
      if (f < 0 || f >= static_cast<int>(faces.size())) throw Error(ErrorKind::InvalidInput, "dot " + label + " points to a bad face");
      face_dots[static_cast<std::size_t>(f)] = d;
    } else {
      throw Error(ErrorKind::InvalidInput, "dot " + label + " needs 'edge' or 'face'");
    }
  }
  DottedTriangulation t(std::move(faces), num_edges, std::move(edge_dots), std::move(face_dots));
  if (j.contains("boundary")) {
    std::set<int> given;
    for (const auto& e : j.at("boundary")) given.insert(small_int(e, "boundary edge"));
    auto actual = t.boundary_edges();
    if (given != std::set<int>(actual.begin(), actual.end()))
      throw Error(ErrorKind::InvalidInput, "'boundary' does not match the edges used by one face");
  }
  return t;
}

std::string schematics_to_json(const std::vector<TriangleSchematic>& per_face) {
  json faces = json::object();
  for (std::size_t f = 0; f < per_face.size(); ++f) faces[std::to_string(f)] = schematic_json(per_face[f]);
  return json{{"faces", faces}}.dump();
}

std::vector<TriangleSchematic> schematics_from_json(std::string_view text, int num_faces) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("faces") || !j.at("faces").is_object())
    throw Error(ErrorKind::InvalidInput, "schematic needs a 'faces' object");
  std::vector<TriangleSchematic> out(static_cast<std::size_t>(num_faces));
  for (const auto& [key, val] : j.at("faces").items()) {
    int f = -1;
    try {
      f = std::stoi(key);
    } catch (const std::exception&) {
    }
    if (f < 0 || f >= num_faces) throw Error(ErrorKind::InvalidInput, "unknown face '" + key + "'");
    out[static_cast<std::size_t>(f)] = schematic_from(val);
  }
  return out;
}

std::string square_schematic_to_json(const SquareWebSchematic& s) {
  json j = json::parse(schematics_to_json({s.top, s.bottom}));
  if (s.family) {
    json params = json::array(), corners = json::array();
    for (const auto& p : s.params) params.push_back(int_to_json(p));
    for (const auto& c : s.corner_arcs) corners.push_back(int_to_json(c));
    j["family"] = *s.family;
    j["params"] = params;
    j["corner_arcs"] = corners;
  }
  return j.dump();
}

SquareWebSchematic square_schematic_from_json(std::string_view text) {
  auto faces = schematics_from_json(text, 2);
  SquareWebSchematic s;
  s.top = faces[0];
  s.bottom = faces[1];
  json j = parse(text);
  if (!j.contains("family")) return s;
  int family = small_int(j.at("family"), "family");
  if (family < 1 || family > 42) throw Error(ErrorKind::InvalidInput, "family must be in 1..42");
  auto read4 = [&](const char* key, auto& out) {
    if (!j.contains(key)) return;
    const json& a = j.at(key);
    if (!a.is_array() || a.size() != out.size())
      throw Error(ErrorKind::InvalidInput, std::string("'") + key + "' has the wrong length");
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = int_from_json(a[k]);
  };
  read4("params", s.params);
  read4("corner_arcs", s.corner_arcs);
  if (!(family_schematic(family, s.params, s.corner_arcs) == s))
    throw Error(ErrorKind::InvalidInput, "family data does not match the faces");
  s.family = family;
  return s;
}

}  // namespace sl3t
