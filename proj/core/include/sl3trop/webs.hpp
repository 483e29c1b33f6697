#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sl3trop/arith.hpp"
#include "sl3trop/triangulation.hpp"

namespace sl3t {

enum class Honeycomb { None, Out, In };

// index into TriangleSchematic::arcs, ordered (v, w, t, u, z, y)
enum ArcSlot { kLa = 0, kRa = 1, kLb = 2, kRb = 3, kLc = 4, kRc = 5 };

// One honeycomb plus corner arcs in an ideal triangle with corners a, b, c
// counterclockwise. size == 0 iff dir == None.
struct TriangleSchematic {
  Honeycomb dir = Honeycomb::None;
  Int size = 0;
  std::array<Int, 6> arcs{};

  bool valid() const;
  bool empty() const;
  bool operator==(const TriangleSchematic&) const = default;
};

TriangleSchematic operator+(const TriangleSchematic& a, const TriangleSchematic& b);
TriangleSchematic operator*(const Int& k, const TriangleSchematic& s);

enum class TriangleGenerator { Ra, La, Rb, Lb, Rc, Lc, Tout, Tin };

// columns of the 8 x 7 generator table, dots ordered
// (ab near a, ab near b, bc near b, bc near c, ca near c, ca near a, face)
IntVec triangle_generator(TriangleGenerator g);
IntVec triangle_coords(const TriangleSchematic& s);
TriangleSchematic triangle_inverse(const IntVec& c);

// per_face[f] is read in face f's stored side order
IntVec glue_coords(const std::vector<TriangleSchematic>& per_face, const DottedTriangulation& t);

// Web in the square a,b,d,c with diagonal bc. The bottom triangle's local
// corners a, b, c are the square's b, d, c.
struct SquareWebSchematic {
  TriangleSchematic top;
  TriangleSchematic bottom;
  std::optional<int> family;
  std::array<Int, 4> params{};       // (x, y, z, t) on the family's four webs
  std::array<Int, 8> corner_arcs{};  // Ra, La, Rb, Lb, Rc, Lc, Rd, Ld

  bool operator==(const SquareWebSchematic& o) const { return top == o.top && bottom == o.bottom; }
};

SquareWebSchematic operator+(const SquareWebSchematic& a, const SquareWebSchematic& b);
SquareWebSchematic operator*(const Int& k, const SquareWebSchematic& s);

IntVec square_coords(const SquareWebSchematic& s);

// The 22 Hilbert basis webs, 1-based: 1..8 corner arcs Ra La Rb Lb Rc Lc Rd Ld,
// 9..22 the cornerless ones.
inline constexpr int kSquareWebCount = 22;
const SquareWebSchematic& square_web(int i);
const std::string& square_web_name(int i);
const IntVec& square_web_coords(int i);

SquareWebSchematic family_schematic(int sector, const std::array<Int, 4>& params,
                                    const std::array<Int, 8>& corners = {});

// every sector whose generators give a nonnegative integral decomposition
std::vector<int> classify_family(const IntVec& c);
SquareWebSchematic square_inverse(const IntVec& c);

// the flipped square read in its own standard frame (a',b',d',c') = (c,a,b,d)
IntVec to_flipped_frame(const IntVec& mutated);
IntVec from_flipped_frame(const IntVec& v);
SquareWebSchematic flip_web(const SquareWebSchematic& s);

}  // namespace sl3t
