#include "sl3trop/webs.hpp"

#include <string>

#include "sl3trop/errors.hpp"
#include "sl3trop/linalg.hpp"
#include "sl3trop/mutation.hpp"
#include "sl3trop/square_geometry.hpp"
#include "sl3trop/tropical_cone.hpp"

namespace sl3t {

bool TriangleSchematic::valid() const {
  if (size < 0) return false;
  if ((size == 0) != (dir == Honeycomb::None)) return false;
  for (const auto& a : arcs)
    if (a < 0) return false;
  return true;
}

bool TriangleSchematic::empty() const {
  if (size != 0) return false;
  for (const auto& a : arcs)
    if (a != 0) return false;
  return true;
}

TriangleSchematic operator+(const TriangleSchematic& a, const TriangleSchematic& b) {
  TriangleSchematic s;
  if (a.size != 0 && b.size != 0 && a.dir != b.dir)
    throw Error(ErrorKind::InvalidInput, "cannot add an in-honeycomb to an out-honeycomb");
  s.size = a.size + b.size;
  s.dir = a.size != 0 ? a.dir : b.dir;
  if (s.size == 0) s.dir = Honeycomb::None;
  for (std::size_t i = 0; i < 6; ++i) s.arcs[i] = a.arcs[i] + b.arcs[i];
  return s;
}

TriangleSchematic operator*(const Int& k, const TriangleSchematic& s) {
  if (k < 0) throw Error(ErrorKind::InvalidInput, "negative multiple of a schematic");
  TriangleSchematic r;
  r.size = k * s.size;
  r.dir = r.size == 0 ? Honeycomb::None : s.dir;
  for (std::size_t i = 0; i < 6; ++i) r.arcs[i] = k * s.arcs[i];
  return r;
}

IntVec triangle_generator(TriangleGenerator g) {
  static const int table[8][7] = {
      {2, 1, 0, 0, 1, 2, 1},  // Ra
      {1, 2, 0, 0, 2, 1, 2},  // La
      {1, 2, 2, 1, 0, 0, 1},  // Rb
      {2, 1, 1, 2, 0, 0, 2},  // Lb
      {0, 0, 1, 2, 2, 1, 1},  // Rc
      {0, 0, 2, 1, 1, 2, 2},  // Lc
      {2, 1, 2, 1, 2, 1, 3},  // Tout
      {1, 2, 1, 2, 1, 2, 3},  // Tin
  };
  const auto& row = table[static_cast<int>(g)];
  return IntVec(std::begin(row), std::end(row));
}

IntVec triangle_coords(const TriangleSchematic& s) {
  if (!s.valid()) throw Error(ErrorKind::InvalidInput, "invalid triangle schematic");
  IntVec c(7, Int(0));
  auto acc = [&](TriangleGenerator g, const Int& k) {
    if (k == 0) return;
    IntVec col = triangle_generator(g);
    for (std::size_t i = 0; i < 7; ++i) c[i] += k * col[i];
  };
  if (s.dir == Honeycomb::Out) acc(TriangleGenerator::Tout, s.size);
  if (s.dir == Honeycomb::In) acc(TriangleGenerator::Tin, s.size);
  acc(TriangleGenerator::La, s.arcs[kLa]);
  acc(TriangleGenerator::Ra, s.arcs[kRa]);
  acc(TriangleGenerator::Lb, s.arcs[kLb]);
  acc(TriangleGenerator::Rb, s.arcs[kRb]);
  acc(TriangleGenerator::Lc, s.arcs[kLc]);
  acc(TriangleGenerator::Rc, s.arcs[kRc]);
  return c;
}

namespace {

const IntegerInverse& triangle_sector_inverse(Honeycomb dir) {
  static const auto make = [](TriangleGenerator h) {
    std::vector<IntVec> cols;
    for (auto g : {TriangleGenerator::La, TriangleGenerator::Ra, TriangleGenerator::Lb, TriangleGenerator::Rb,
                   TriangleGenerator::Lc, TriangleGenerator::Rc, h})
      cols.push_back(triangle_generator(g));
    return integer_inverse(columns_to_matrix(cols));
  };
  static const IntegerInverse out_inv = make(TriangleGenerator::Tout);
  static const IntegerInverse in_inv = make(TriangleGenerator::Tin);
  return dir == Honeycomb::Out ? out_inv : in_inv;
}

}  // namespace

TriangleSchematic triangle_inverse(const IntVec& c) {
  static const DottedTriangulation tri = build_triangle();
  if (!is_in_ktgs_cone(c, tri)) throw Error(ErrorKind::NotInCone, "point is not in the triangle cone");
  for (Honeycomb dir : {Honeycomb::Out, Honeycomb::In}) {
    IntVec lam;
    try {
      lam = decompose_with(c, triangle_sector_inverse(dir));
    } catch (const Error&) {
      continue;
    }
    TriangleSchematic s;
    for (std::size_t i = 0; i < 6; ++i) s.arcs[i] = lam[i];
    s.size = lam[6];
    s.dir = s.size == 0 ? Honeycomb::None : dir;
    return s;
  }
  throw Error(ErrorKind::DecompositionFailure, "no honeycomb sector contains the point");
}

IntVec glue_coords(const std::vector<TriangleSchematic>& per_face, const DottedTriangulation& t) {
  if (per_face.size() != static_cast<std::size_t>(t.num_faces()))
    throw Error(ErrorKind::LengthMismatch, "need one schematic per face");
  IntVec c(t.dot_count(), Int(0));
  std::vector<int> owner(t.dot_count(), -1);
  for (int f = 0; f < t.num_faces(); ++f) {
    IntVec local = triangle_coords(per_face[static_cast<std::size_t>(f)]);
    c[static_cast<std::size_t>(t.face_dot(f))] = local[6];
    for (int k = 0; k < 3; ++k) {
      const int e = t.face(f)[static_cast<std::size_t>(k)].edge;
      for (int w = 0; w < 2; ++w) {
        const auto d = static_cast<std::size_t>(t.side_dot(f, k, w));
        const Int& v = local[static_cast<std::size_t>(2 * k + w)];
        if (owner[d] >= 0 && c[d] != v) {
          // report the edge pair as seen from both faces, tail first
          auto pair_from = [&](const IntVec& src, int face, int side) {
            const HalfEdge h = t.face(face)[static_cast<std::size_t>(side)];
            Int s0 = src[static_cast<std::size_t>(2 * side)], s1 = src[static_cast<std::size_t>(2 * side + 1)];
            if (h.reversed) std::swap(s0, s1);
            return "(" + s0.str() + "," + s1.str() + ")";
          };
          int of = owner[d];
          int oside = 0;
          for (int kk = 0; kk < 3; ++kk)
            if (t.face(of)[static_cast<std::size_t>(kk)].edge == e) oside = kk;
          IntVec other = triangle_coords(per_face[static_cast<std::size_t>(of)]);
          throw Error(ErrorKind::EdgeMismatch, "edge " + std::to_string(e) + ": face " + std::to_string(of) + " gives " +
                                                   pair_from(other, of, oside) + ", face " + std::to_string(f) +
                                                   " gives " + pair_from(local, f, k));
        }
        c[d] = v;
        owner[d] = f;
      }
    }
  }
  return c;
}

SquareWebSchematic operator+(const SquareWebSchematic& a, const SquareWebSchematic& b) {
  SquareWebSchematic s;
  s.top = a.top + b.top;
  s.bottom = a.bottom + b.bottom;
  for (std::size_t i = 0; i < 8; ++i) s.corner_arcs[i] = a.corner_arcs[i] + b.corner_arcs[i];
  if (a.family && b.family && *a.family == *b.family) {
    s.family = a.family;
    for (std::size_t i = 0; i < 4; ++i) s.params[i] = a.params[i] + b.params[i];
  }
  return s;
}

SquareWebSchematic operator*(const Int& k, const SquareWebSchematic& s) {
  SquareWebSchematic r;
  r.top = k * s.top;
  r.bottom = k * s.bottom;
  r.family = s.family;
  for (std::size_t i = 0; i < 4; ++i) r.params[i] = k * s.params[i];
  for (std::size_t i = 0; i < 8; ++i) r.corner_arcs[i] = k * s.corner_arcs[i];
  return r;
}

IntVec square_coords(const SquareWebSchematic& s) {
  static const DottedTriangulation sq = build_square();
  return glue_coords({s.top, s.bottom}, sq);
}

namespace {

enum class Piece { None, Ra, La, Rb, Lb, Rc, Lc, Rd, Ld, Tout, Tin };

TriangleSchematic top_piece(Piece p) {
  TriangleSchematic s;
  switch (p) {
    case Piece::None: break;
    case Piece::Ra: s.arcs[kRa] = 1; break;
    case Piece::La: s.arcs[kLa] = 1; break;
    case Piece::Rb: s.arcs[kRb] = 1; break;
    case Piece::Lb: s.arcs[kLb] = 1; break;
    case Piece::Rc: s.arcs[kRc] = 1; break;
    case Piece::Lc: s.arcs[kLc] = 1; break;
    case Piece::Tout: s.dir = Honeycomb::Out; s.size = 1; break;
    case Piece::Tin: s.dir = Honeycomb::In; s.size = 1; break;
    default: throw Error(ErrorKind::InvalidInput, "corner d is not in the top triangle");
  }
  return s;
}

// square corners b, d, c are the bottom triangle's local a, b, c
TriangleSchematic bottom_piece(Piece p) {
  TriangleSchematic s;
  switch (p) {
    case Piece::None: break;
    case Piece::Rb: s.arcs[kRa] = 1; break;
    case Piece::Lb: s.arcs[kLa] = 1; break;
    case Piece::Rd: s.arcs[kRb] = 1; break;
    case Piece::Ld: s.arcs[kLb] = 1; break;
    case Piece::Rc: s.arcs[kRc] = 1; break;
    case Piece::Lc: s.arcs[kLc] = 1; break;
    case Piece::Tout: s.dir = Honeycomb::Out; s.size = 1; break;
    case Piece::Tin: s.dir = Honeycomb::In; s.size = 1; break;
    default: throw Error(ErrorKind::InvalidInput, "corner a is not in the bottom triangle");
  }
  return s;
}

struct WebTable {
  std::vector<SquareWebSchematic> webs;
  std::vector<std::string> names;
  std::vector<IntVec> coords;
};

const WebTable& web_table() {
  static const WebTable table = [] {
    struct Row {
      const char* name;
      Piece top, bottom;
    };
    const Row rows[kSquareWebCount] = {
        {"[R_a]", Piece::Ra, Piece::None},          {"[L_a]", Piece::La, Piece::None},
        {"[R_b]", Piece::Rb, Piece::Rb},            {"[L_b]", Piece::Lb, Piece::Lb},
        {"[R_c]", Piece::Rc, Piece::Rc},            {"[L_c]", Piece::Lc, Piece::Lc},
        {"[R_d]", Piece::None, Piece::Rd},          {"[L_d]", Piece::None, Piece::Ld},
        {"[T_out,R_b]", Piece::Tout, Piece::Rb},    {"[T_out,L_c]", Piece::Tout, Piece::Lc},
        {"[T_in,L_b]", Piece::Tin, Piece::Lb},      {"[T_in,R_c]", Piece::Tin, Piece::Rc},
        {"[L_b,T_out]", Piece::Lb, Piece::Tout},    {"[L_c,T_in]", Piece::Lc, Piece::Tin},
        {"[R_b,T_in]", Piece::Rb, Piece::Tin},      {"[R_c,T_out]", Piece::Rc, Piece::Tout},
        {"[T_out,T_in]", Piece::Tout, Piece::Tin},  {"[T_in,T_out]", Piece::Tin, Piece::Tout},
        {"[L_b,R_c]", Piece::Lb, Piece::Rc},        {"[R_b,L_c]", Piece::Rb, Piece::Lc},
        {"[R_c,L_b]", Piece::Rc, Piece::Lb},        {"[L_c,R_b]", Piece::Lc, Piece::Rb},
    };
    WebTable t;
    for (int i = 0; i < kSquareWebCount; ++i) {
      SquareWebSchematic s;
      s.top = top_piece(rows[i].top);
      s.bottom = bottom_piece(rows[i].bottom);
      if (i < 8) s.corner_arcs[static_cast<std::size_t>(i)] = 1;
      t.webs.push_back(s);
      t.names.emplace_back(rows[i].name);
      t.coords.push_back(square_coords(s));
    }
    return t;
  }();
  return table;
}

void check_web(int i) {
  if (i < 1 || i > kSquareWebCount) throw Error(ErrorKind::InvalidInput, "web index " + std::to_string(i) + " out of range");
}

}  // namespace

const SquareWebSchematic& square_web(int i) {
  check_web(i);
  return web_table().webs[static_cast<std::size_t>(i - 1)];
}

const std::string& square_web_name(int i) {
  check_web(i);
  return web_table().names[static_cast<std::size_t>(i - 1)];
}

const IntVec& square_web_coords(int i) {
  check_web(i);
  return web_table().coords[static_cast<std::size_t>(i - 1)];
}

SquareWebSchematic family_schematic(int sector, const std::array<Int, 4>& params, const std::array<Int, 8>& corners) {
  const auto& q = sector_webs(sector);
  SquareWebSchematic s;
  for (std::size_t i = 0; i < 8; ++i)
    if (corners[i] != 0) s = s + corners[i] * square_web(static_cast<int>(i) + 1);
  for (std::size_t j = 0; j < 4; ++j)
    if (params[j] != 0) s = s + params[j] * square_web(q[j]);
  s.family = sector;
  s.params = params;
  s.corner_arcs = corners;
  return s;
}

namespace {

void check_square_cone(const IntVec& c) {
  static const DottedTriangulation sq = build_square();
  if (!is_in_ktgs_cone(c, sq)) throw Error(ErrorKind::NotInCone, "point is not in the square cone");
}

}  // namespace

std::vector<int> classify_family(const IntVec& c) {
  check_square_cone(c);
  std::vector<int> out;
  for (int i : sector_of(x_coords(c))) {
    try {
      decompose_with(c, sector_inverse(i));
      out.push_back(i);
    } catch (const Error&) {
    }
  }
  return out;
}

SquareWebSchematic square_inverse(const IntVec& c) {
  check_square_cone(c);
  for (int i : sector_of(x_coords(c))) {
    IntVec lam;
    try {
      lam = decompose_with(c, sector_inverse(i));
    } catch (const Error&) {
      continue;
    }
    std::array<Int, 8> corners;
    std::array<Int, 4> params;
    for (std::size_t j = 0; j < 8; ++j) corners[j] = lam[j];
    for (std::size_t j = 0; j < 4; ++j) params[j] = lam[8 + j];
    return family_schematic(i, params, corners);
  }
  throw Error(ErrorKind::DecompositionFailure, "no sector decomposes the point");
}

namespace {

const std::array<int, 12>& flipped_slots() {
  static const std::array<int, 12> slots = [] {
    DottedTriangulation t = flip(build_square(), kSquareDiagonal);
    return quad_around_edge(t, kSquareDiagonal).slots();
  }();
  return slots;
}

}  // namespace

IntVec to_flipped_frame(const IntVec& mutated) {
  if (mutated.size() != 12) throw Error(ErrorKind::LengthMismatch, "square points have 12 coordinates");
  IntVec v(12);
  const auto& s = flipped_slots();
  for (std::size_t k = 0; k < 12; ++k) v[k] = mutated[static_cast<std::size_t>(s[k])];
  return v;
}

IntVec from_flipped_frame(const IntVec& v) {
  if (v.size() != 12) throw Error(ErrorKind::LengthMismatch, "square points have 12 coordinates");
  IntVec m(12);
  const auto& s = flipped_slots();
  for (std::size_t k = 0; k < 12; ++k) m[static_cast<std::size_t>(s[k])] = v[k];
  return m;
}

SquareWebSchematic flip_web(const SquareWebSchematic& s) {
  static const QuadFrame frame = quad_around_edge(build_square(), kSquareDiagonal);
  IntVec mutated = flip_mutation(square_coords(s), frame);
  return square_inverse(to_flipped_frame(mutated));
}

}  // namespace sl3t
