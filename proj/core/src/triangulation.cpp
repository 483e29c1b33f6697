#include "sl3trop/triangulation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <string>

#include "sl3trop/errors.hpp"

namespace sl3t {

int euler_characteristic(const MarkedSurface& s) {
  return 2 - 2 * s.genus - static_cast<int>(s.boundary_marked.size());
}

bool euler_condition(const MarkedSurface& s) {
  int d = std::accumulate(s.boundary_marked.begin(), s.boundary_marked.end(), 0);
  return 2 * euler_characteristic(s) < d;
}

HalfEdge operator~(HalfEdge h) { return {h.edge, !h.reversed}; }

namespace {

std::string str(int v) { return std::to_string(v); }

}  // namespace

DottedTriangulation::DottedTriangulation(std::vector<Face> faces, int num_edges,
                                         std::vector<std::array<int, 2>> edge_dots,
                                         std::vector<int> face_dots)
    : faces_(std::move(faces)),
      num_edges_(num_edges),
      edge_dots_(std::move(edge_dots)),
      face_dots_(std::move(face_dots)) {
  if (faces_.empty() || num_edges_ <= 0)
    throw Error(ErrorKind::InvalidInput, "triangulation needs at least one face and one edge");
  if (edge_dots_.size() != static_cast<std::size_t>(num_edges_) || face_dots_.size() != faces_.size())
    throw Error(ErrorKind::InvalidInput, "dot tables do not match edge/face counts");

  occ_.assign(static_cast<std::size_t>(num_edges_), {});
  for (int f = 0; f < num_faces(); ++f) {
    const Face& fc = faces_[static_cast<std::size_t>(f)];
    for (int k = 0; k < 3; ++k) {
      int e = fc[k].edge;
      if (e < 0 || e >= num_edges_)
        throw Error(ErrorKind::InvalidInput, "face " + str(f) + " uses unknown edge " + str(e));
      occ_[static_cast<std::size_t>(e)].emplace_back(f, k);
    }
    if (fc[0].edge == fc[1].edge || fc[1].edge == fc[2].edge || fc[0].edge == fc[2].edge)
      throw Error(ErrorKind::SelfFolded, "face " + str(f) + " has a repeated side");
  }
  for (int e = 0; e < num_edges_; ++e) {
    const auto& o = occ_[static_cast<std::size_t>(e)];
    if (o.empty() || o.size() > 2)
      throw Error(ErrorKind::InvalidInput, "edge " + str(e) + " occurs " + str(static_cast<int>(o.size())) + " times");
    if (o.size() == 2) {
      bool r0 = faces_[static_cast<std::size_t>(o[0].first)][o[0].second].reversed;
      bool r1 = faces_[static_cast<std::size_t>(o[1].first)][o[1].second].reversed;
      if (r0 == r1)
        throw Error(ErrorKind::InvalidInput, "edge " + str(e) + " is traversed twice in the same direction");
    }
  }

  std::vector<int> seen(dot_count(), 0);
  auto mark = [&](int d) {
    if (d < 0 || static_cast<std::size_t>(d) >= seen.size() || seen[static_cast<std::size_t>(d)]++)
      throw Error(ErrorKind::InvalidInput, "dot labels are not a bijection onto 1.." + str(static_cast<int>(seen.size())));
  };
  for (const auto& ed : edge_dots_) {
    mark(ed[0]);
    mark(ed[1]);
  }
  for (int d : face_dots_) mark(d);
}

int DottedTriangulation::side_dot(int f, int k, int which) const {
  const HalfEdge& h = face(f)[static_cast<std::size_t>(k)];
  int slot = h.reversed ? 1 - which : which;
  return edge_dot(h.edge, slot);
}

std::vector<int> DottedTriangulation::boundary_edges() const {
  std::vector<int> out;
  for (int e = 0; e < num_edges_; ++e)
    if (is_boundary(e)) out.push_back(e);
  return out;
}

std::vector<std::pair<int, int>> DottedTriangulation::occurrences(int e) const {
  if (e < 0 || e >= num_edges_) throw Error(ErrorKind::InvalidInput, "unknown edge " + str(e));
  return occ_[static_cast<std::size_t>(e)];
}

MarkedSurface DottedTriangulation::surface() const {
  // endpoints: 2e = tail of e, 2e+1 = head of e
  std::vector<int> parent(2 * static_cast<std::size_t>(num_edges_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    return v;
  };
  auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
  auto start = [](HalfEdge h) { return 2 * h.edge + (h.reversed ? 1 : 0); };
  auto end = [](HalfEdge h) { return 2 * h.edge + (h.reversed ? 0 : 1); };
  for (const Face& f : faces_)
    for (int k = 0; k < 3; ++k) unite(end(f[k]), start(f[(k + 1) % 3]));

  std::map<int, int> vertex_id;
  for (int v = 0; v < 2 * num_edges_; ++v) vertex_id.emplace(find(v), static_cast<int>(vertex_id.size()));
  const int V = static_cast<int>(vertex_id.size());

  std::vector<int> bparent(static_cast<std::size_t>(V));
  std::iota(bparent.begin(), bparent.end(), 0);
  auto bfind = [&](int v) {
    while (bparent[static_cast<std::size_t>(v)] != v) v = bparent[static_cast<std::size_t>(v)];
    return v;
  };
  std::vector<bool> on_boundary(static_cast<std::size_t>(V), false);
  std::vector<int> bedges = boundary_edges();
  for (int e : bedges) {
    int a = vertex_id[find(2 * e)], b = vertex_id[find(2 * e + 1)];
    on_boundary[static_cast<std::size_t>(a)] = on_boundary[static_cast<std::size_t>(b)] = true;
    bparent[static_cast<std::size_t>(bfind(a))] = bfind(b);
  }
  std::map<int, int> marks;
  for (int e : bedges) marks[bfind(vertex_id[find(2 * e)])]++;

  MarkedSurface s;
  for (const auto& [root, count] : marks) s.boundary_marked.push_back(count);
  int punctures = 0;
  for (int v = 0; v < V; ++v)
    if (!on_boundary[static_cast<std::size_t>(v)]) ++punctures;
  for (int i = 0; i < punctures; ++i) s.boundary_marked.push_back(0);

  int chi = V - num_edges_ + num_faces() - punctures;
  int b = static_cast<int>(s.boundary_marked.size());
  s.genus = (2 - chi - b) / 2;
  return s;
}

std::array<int, 12> QuadFrame::slots() const {
  std::array<int, 12> s{};
  std::copy(x.begin(), x.end(), s.begin());
  std::copy(y.begin(), y.end(), s.begin() + 8);
  return s;
}

namespace {

Face rotate(const Face& f, int k) {
  return {f[static_cast<std::size_t>(k % 3)], f[static_cast<std::size_t>((k + 1) % 3)],
          f[static_cast<std::size_t>((k + 2) % 3)]};
}

struct QuadSides {
  QuadFrame frame;
  Face top;     // rotated so side 0 is the diagonal b->c
  Face bottom;  // rotated so side 0 is c->b
};

QuadSides quad_sides(const DottedTriangulation& t, int e) {
  auto occ = t.occurrences(e);
  if (occ.size() != 2) throw Error(ErrorKind::BoundaryEdge, "edge " + str(e) + " is a boundary edge");
  if (t.face(occ[0].first)[static_cast<std::size_t>(occ[0].second)].reversed) std::swap(occ[0], occ[1]);
  auto [f1, k1] = occ[0];
  auto [f2, k2] = occ[1];

  QuadSides q;
  q.top = rotate(t.face(f1), k1);
  q.bottom = rotate(t.face(f2), k2);
  // the new faces are (ab, bd, da) and (ad, dc, ca)
  if (q.top[2].edge == q.bottom[1].edge || q.bottom[2].edge == q.top[1].edge)
    throw Error(ErrorKind::SelfFolded, "flipping edge " + str(e) + " creates a self-folded triangle");

  auto dot = [&](HalfEdge h, int which) { return t.edge_dot(h.edge, h.reversed ? 1 - which : which); };
  QuadFrame& fr = q.frame;
  fr.edge = e;
  fr.top_face = f1;
  fr.bottom_face = f2;
  fr.x = {dot(q.top[2], 0), dot(q.top[2], 1),         // ab
          dot(q.bottom[1], 0), dot(q.bottom[1], 1),   // bd
          dot(q.bottom[2], 0), dot(q.bottom[2], 1),   // dc
          dot(q.top[1], 0), dot(q.top[1], 1)};        // ca
  fr.y = {t.face_dot(f1), dot(q.top[0], 0), t.face_dot(f2), dot(q.top[0], 1)};

  auto s = fr.slots();
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j)
      if (s[static_cast<std::size_t>(i)] == s[static_cast<std::size_t>(j)]) fr.coincidences.emplace_back(i, j);
  return q;
}

}  // namespace

QuadFrame quad_around_edge(const DottedTriangulation& t, int e) { return quad_sides(t, e).frame; }

DottedTriangulation flip(const DottedTriangulation& t, int e) {
  QuadSides q = quad_sides(t, e);
  const QuadFrame& fr = q.frame;
  std::vector<Face> faces = t.faces();
  const HalfEdge ad{e, false};
  faces[static_cast<std::size_t>(fr.top_face)] = {q.top[2], q.bottom[1], ~ad};
  faces[static_cast<std::size_t>(fr.bottom_face)] = {ad, q.bottom[2], q.top[1]};
  auto edge_dots = t.edge_dots();
  auto face_dots = t.face_dots();
  edge_dots[static_cast<std::size_t>(e)] = {fr.y[0], fr.y[2]};
  face_dots[static_cast<std::size_t>(fr.top_face)] = fr.y[1];
  face_dots[static_cast<std::size_t>(fr.bottom_face)] = fr.y[3];
  return DottedTriangulation(std::move(faces), t.num_edges(), std::move(edge_dots), std::move(face_dots));
}

namespace {

// face map of t1 into t2: image face and rotation (side k -> side k+r)
using FaceMap = std::vector<std::pair<int, int>>;

bool try_iso(const DottedTriangulation& t1, const DottedTriangulation& t2, int g0, int r0, bool closed,
             FaceMap& out) {
  const int F = t1.num_faces();
  FaceMap m(static_cast<std::size_t>(F), {-1, 0});
  std::vector<int> used(static_cast<std::size_t>(F), 0);
  std::queue<int> todo;
  m[0] = {g0, r0};
  used[static_cast<std::size_t>(g0)] = 1;
  todo.push(0);
  int mapped = 1;
  while (!todo.empty()) {
    int f = todo.front();
    todo.pop();
    auto [g, r] = m[static_cast<std::size_t>(f)];
    for (int k = 0; k < 3; ++k) {
      int kk = (k + r) % 3;
      int e1 = t1.face(f)[static_cast<std::size_t>(k)].edge;
      int e2 = t2.face(g)[static_cast<std::size_t>(kk)].edge;
      bool b1 = t1.is_boundary(e1), b2 = t2.is_boundary(e2);
      if (b1 != b2) return false;
      if ((b1 || closed) && e1 != e2) return false;
      if (b1) continue;
      auto o1 = t1.occurrences(e1);
      auto o2 = t2.occurrences(e2);
      auto other1 = o1[0] == std::make_pair(f, k) ? o1[1] : o1[0];
      auto other2 = o2[0] == std::make_pair(g, kk) ? o2[1] : o2[0];
      int rr = ((other2.second - other1.second) % 3 + 3) % 3;
      auto& slot = m[static_cast<std::size_t>(other1.first)];
      if (slot.first == -1) {
        if (used[static_cast<std::size_t>(other2.first)]) return false;
        used[static_cast<std::size_t>(other2.first)] = 1;
        slot = {other2.first, rr};
        ++mapped;
        todo.push(other1.first);
      } else if (slot != std::make_pair(other2.first, rr)) {
        return false;
      }
    }
  }
  if (mapped != F) return false;
  out = std::move(m);
  return true;
}

std::vector<FaceMap> all_isos(const DottedTriangulation& t1, const DottedTriangulation& t2) {
  std::vector<FaceMap> out;
  if (t1.num_faces() != t2.num_faces() || t1.num_edges() != t2.num_edges()) return out;
  const bool closed = t1.boundary_edges().empty();
  for (int g = 0; g < t2.num_faces(); ++g)
    for (int r = 0; r < 3; ++r) {
      FaceMap m;
      if (try_iso(t1, t2, g, r, closed, m)) out.push_back(std::move(m));
    }
  return out;
}

std::vector<int> sigma_of(const DottedTriangulation& t1, const DottedTriangulation& t2, const FaceMap& m) {
  std::vector<int> sigma(t1.dot_count(), -1);
  for (int f = 0; f < t1.num_faces(); ++f) {
    auto [g, r] = m[static_cast<std::size_t>(f)];
    sigma[static_cast<std::size_t>(t1.face_dot(f))] = t2.face_dot(g);
    for (int k = 0; k < 3; ++k)
      for (int w = 0; w < 2; ++w)
        sigma[static_cast<std::size_t>(t1.side_dot(f, k, w))] = t2.side_dot(g, (k + r) % 3, w);
  }
  return sigma;
}

}  // namespace

bool same_topology(const DottedTriangulation& t1, const DottedTriangulation& t2) {
  return !all_isos(t1, t2).empty();
}

std::vector<int> permutation_between(const DottedTriangulation& t1, const DottedTriangulation& t2) {
  auto isos = all_isos(t1, t2);
  if (isos.empty()) throw Error(ErrorKind::TopologyMismatch, "triangulations are not the same topological triangulation");
  // symmetric closed surfaces admit several identifications; keep the one moving the fewest dots
  std::vector<int> best;
  long best_fixed = -1;
  for (const auto& m : isos) {
    auto sigma = sigma_of(t1, t2, m);
    long fixed = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) fixed += sigma[i] == static_cast<int>(i);
    if (fixed > best_fixed) {
      best_fixed = fixed;
      best = std::move(sigma);
    }
  }
  return best;
}

FlipSequence make_flip_sequence(const DottedTriangulation& t0, const std::vector<int>& edges) {
  FlipSequence s;
  s.states.reserve(edges.size() + 1);
  s.states.push_back(t0);
  for (int e : edges) s.states.push_back(flip(s.states.back(), e));
  s.edges = edges;
  return s;
}

DottedTriangulation build_triangle() {
  // sides ab, bc, ca; dots ab near a, ab near b, bc near b, bc near c, ca near c, ca near a, face
  return DottedTriangulation({Face{HalfEdge{0, false}, HalfEdge{1, false}, HalfEdge{2, false}}}, 3,
                             {{0, 1}, {2, 3}, {4, 5}}, {6});
}

DottedTriangulation build_square() {
  // corners a,b,d,c counterclockwise, diagonal bc
  // edges: 0 ab, 1 bd, 2 dc, 3 ca, 4 bc
  std::vector<Face> faces = {
      Face{HalfEdge{0, false}, HalfEdge{4, false}, HalfEdge{3, false}},  // a b c
      Face{HalfEdge{1, false}, HalfEdge{2, false}, HalfEdge{4, true}},   // b d c
  };
  return DottedTriangulation(std::move(faces), 5, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {9, 11}}, {8, 10});
}

DottedTriangulation build_pentagon_base() {
  // vertices 0..4 counterclockwise; edges 0..4 are (k,k+1), 5 = 02, 6 = 03
  std::vector<Face> faces = {
      Face{HalfEdge{0, false}, HalfEdge{1, false}, HalfEdge{5, true}},
      Face{HalfEdge{5, false}, HalfEdge{2, false}, HalfEdge{6, true}},
      Face{HalfEdge{6, false}, HalfEdge{3, false}, HalfEdge{4, false}},
  };
  std::vector<std::array<int, 2>> edge_dots(7);
  for (int k = 0; k < 5; ++k) edge_dots[static_cast<std::size_t>(k)] = {7 + 2 * k, 8 + 2 * k};
  edge_dots[5] = {0, 3};
  edge_dots[6] = {1, 6};
  return DottedTriangulation(std::move(faces), 7, std::move(edge_dots), {2, 5, 4});
}

DottedTriangulation build_once_punctured_torus() {
  // edges A=0, B=1, C=2
  std::vector<Face> faces = {
      Face{HalfEdge{0, false}, HalfEdge{1, false}, HalfEdge{2, true}},
      Face{HalfEdge{2, false}, HalfEdge{0, true}, HalfEdge{1, true}},
  };
  return DottedTriangulation(std::move(faces), 3, {{0, 1}, {2, 3}, {4, 5}}, {6, 7});
}

std::vector<int> pentagon_flip_edges(std::size_t count) {
  std::vector<int> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = (i % 2 == 0) ? 5 : 6;
  return out;
}

}  // namespace sl3t
