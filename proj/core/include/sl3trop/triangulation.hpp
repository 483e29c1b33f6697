#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace sl3t {

struct MarkedSurface {
  int genus = 0;
  std::vector<int> boundary_marked;  // marked points per boundary component, 0 = puncture
};

int euler_characteristic(const MarkedSurface& s);
// chi(S) < d/2 with d the number of boundary marked points
bool euler_condition(const MarkedSurface& s);

struct HalfEdge {
  int edge = 0;
  bool reversed = false;
  bool operator==(const HalfEdge&) const = default;
};

HalfEdge operator~(HalfEdge h);

// Sides listed counterclockwise.
using Face = std::array<HalfEdge, 3>;

// Ideal triangulation stored as an oriented combinatorial map, plus one dot
// per face and two per edge. Dot indices are 0-based; labels are index+1.
class DottedTriangulation {
 public:
  DottedTriangulation(std::vector<Face> faces, int num_edges,
                      std::vector<std::array<int, 2>> edge_dots,
                      std::vector<int> face_dots);

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int f) const { return faces_.at(static_cast<std::size_t>(f)); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  int num_edges() const { return num_edges_; }
  std::size_t dot_count() const { return 2 * static_cast<std::size_t>(num_edges_) + faces_.size(); }

  // slot 0 sits near the tail of the edge
  int edge_dot(int e, int slot) const { return edge_dots_.at(static_cast<std::size_t>(e))[slot]; }
  int face_dot(int f) const { return face_dots_.at(static_cast<std::size_t>(f)); }
  const std::vector<std::array<int, 2>>& edge_dots() const { return edge_dots_; }
  const std::vector<int>& face_dots() const { return face_dots_; }

  // dot on side k of face f; which = 0 near the start of the side, 1 near its end
  int side_dot(int f, int k, int which) const;

  bool is_boundary(int e) const { return occurrences(e).size() == 1; }
  std::vector<int> boundary_edges() const;
  // (face, side) pairs where edge e occurs
  std::vector<std::pair<int, int>> occurrences(int e) const;

  MarkedSurface surface() const;

  bool operator==(const DottedTriangulation&) const = default;

 private:
  std::vector<Face> faces_;
  int num_edges_;
  std::vector<std::array<int, 2>> edge_dots_;
  std::vector<int> face_dots_;
  std::vector<std::vector<std::pair<int, int>>> occ_;
};

struct QuadFrame {
  std::array<int, 8> x{};
  std::array<int, 4> y{};
  int edge = -1;
  int top_face = -1;
  int bottom_face = -1;
  // pairs of slots (0..11, x1..x8 then y1..y4) that carry the same dot
  std::vector<std::pair<int, int>> coincidences;

  std::array<int, 12> slots() const;
  bool self_glued() const { return !coincidences.empty(); }
};

QuadFrame quad_around_edge(const DottedTriangulation& t, int e);
DottedTriangulation flip(const DottedTriangulation& t, int e);

bool same_topology(const DottedTriangulation& t1, const DottedTriangulation& t2);
// sigma[i] = dot of t2 sitting where dot i sits in t1
std::vector<int> permutation_between(const DottedTriangulation& t1, const DottedTriangulation& t2);

struct FlipSequence {
  std::vector<DottedTriangulation> states;  // states.size() == edges.size() + 1
  std::vector<int> edges;
};

FlipSequence make_flip_sequence(const DottedTriangulation& t0, const std::vector<int>& edges);

DottedTriangulation build_triangle();
DottedTriangulation build_square();
DottedTriangulation build_pentagon_base();
DottedTriangulation build_once_punctured_torus();

inline constexpr int kSquareDiagonal = 4;

// diagonal ids 5,6,5,6,... of the rotating pentagon loop
std::vector<int> pentagon_flip_edges(std::size_t count);

}  // namespace sl3t
