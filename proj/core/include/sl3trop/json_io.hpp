#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sl3trop/arith.hpp"
#include "sl3trop/triangulation.hpp"
#include "sl3trop/webs.hpp"

namespace sl3t {

// [1, 2, ...]; entries beyond 64 bits are written as decimal strings
std::string point_to_json(const IntVec& c);
IntVec point_from_json(std::string_view text);

// ["p/q", ...]
std::string rhombi_to_json(const RatVec& r);
RatVec rhombi_from_json(std::string_view text);

// {"faces":[[e,e,e],...],"boundary":[...],"dots":{"label":{"edge":e,"slot":s}|{"face":f}}}
// A reversed side is written -(e+1).
std::string triangulation_to_json(const DottedTriangulation& t);
DottedTriangulation triangulation_from_json(std::string_view text);

// {"faces":{"0":{"honeycomb":{"dir":"out","size":n},"arcs":[v,w,t,u,z,y]},...}}
std::string schematics_to_json(const std::vector<TriangleSchematic>& per_face);
std::vector<TriangleSchematic> schematics_from_json(std::string_view text, int num_faces);

// square: faces "0" (top) and "1" (bottom), plus family data when present
std::string square_schematic_to_json(const SquareWebSchematic& s);
SquareWebSchematic square_schematic_from_json(std::string_view text);

}  // namespace sl3t
