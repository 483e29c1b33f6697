#include "sl3trop/tropical_cone.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <type_traits>

#include "sl3trop/errors.hpp"

namespace sl3t {

std::vector<Rhombus> rhombus_table(const DottedTriangulation& t) {
  std::vector<Rhombus> out;
  out.reserve(9 * static_cast<std::size_t>(t.num_faces()));
  for (int f = 0; f < t.num_faces(); ++f) {
    const int F = t.face_dot(f);
    auto S = [&](int k, int w) { return t.side_dot(f, k % 3, w); };
    for (int p = 0; p < 3; ++p) {
      out.push_back({{S(p, 0), S(p + 2, 1)}, {F, -1}});
      out.push_back({{S(p, 1), F}, {S(p + 1, 0), S(p, 0)}});
      out.push_back({{F, S(p + 2, 0)}, {S(p + 1, 1), S(p + 2, 1)}});
    }
  }
  return out;
}

namespace {

void check_length(std::size_t n, const DottedTriangulation& t) {
  if (n != t.dot_count())
    throw Error(ErrorKind::LengthMismatch, "point has length " + std::to_string(n) + ", expected " +
                                               std::to_string(t.dot_count()));
}

template <class V>
auto triple_beta(const V& c, const Rhombus& r) {
  using T = std::decay_t<decltype(c[0])>;
  T v = c[static_cast<std::size_t>(r.plus[0])] + c[static_cast<std::size_t>(r.plus[1])] -
           c[static_cast<std::size_t>(r.minus[0])];
  if (!r.corner()) v -= c[static_cast<std::size_t>(r.minus[1])];
  return v;
}

}  // namespace

RatVec rhombus_numbers(const IntVec& c, const DottedTriangulation& t) {
  check_length(c.size(), t);
  RatVec out;
  for (const Rhombus& r : rhombus_table(t)) out.emplace_back(triple_beta(c, r), Int(3));
  return out;
}

bool is_in_ktgs_cone(const IntVec& c, const DottedTriangulation& t) {
  check_length(c.size(), t);
  for (const auto& v : c)
    if (v < 0) return false;
  for (const Rhombus& r : rhombus_table(t)) {
    Int b = triple_beta(c, r);
    if (b < 0 || b % 3 != 0) return false;
  }
  return true;
}

ConeOracle ktgs_oracle(const DottedTriangulation& t) {
  ConeOracle o;
  o.dim = t.dot_count();
  auto table = rhombus_table(t);

  // face by face: face dot first, then the side dots not yet placed
  std::vector<int> pos(o.dim, -1);
  for (int f = 0; f < t.num_faces(); ++f) {
    auto place = [&](int d) {
      if (pos[static_cast<std::size_t>(d)] < 0) {
        pos[static_cast<std::size_t>(d)] = static_cast<int>(o.order.size());
        o.order.push_back(static_cast<std::size_t>(d));
      }
    };
    place(t.face_dot(f));
    for (int k = 0; k < 3; ++k) {
      place(t.side_dot(f, k, 0));
      place(t.side_dot(f, k, 1));
    }
  }

  // rhombi grouped by the depth at which their last dot is fixed
  std::vector<std::vector<Rhombus>> at_depth(o.dim + 1);
  for (const Rhombus& r : table) {
    int last = std::max({pos[static_cast<std::size_t>(r.plus[0])], pos[static_cast<std::size_t>(r.plus[1])],
                         pos[static_cast<std::size_t>(r.minus[0])],
                         r.corner() ? -1 : pos[static_cast<std::size_t>(r.minus[1])]});
    at_depth[static_cast<std::size_t>(last + 1)].push_back(r);
  }

  o.contains = [table](std::span<const std::int64_t> p) {
    for (auto v : p)
      if (v < 0) return false;
    for (const Rhombus& r : table) {
      std::int64_t b = triple_beta(p, r);
      if (b < 0 || b % 3 != 0) return false;
    }
    return true;
  };
  o.prefix_ok = [at_depth](std::span<const std::int64_t> p, std::size_t depth) {
    for (const Rhombus& r : at_depth[depth]) {
      std::int64_t b = triple_beta(p, r);
      if (b < 0 || b % 3 != 0) return false;
    }
    return true;
  };
  return o;
}

namespace {

std::int64_t total(const Point& p) { return std::accumulate(p.begin(), p.end(), std::int64_t{0}); }

bool leq(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Point minus(const Point& a, const Point& b) {
  Point d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

void enumerate(const ConeOracle& o, std::size_t depth, std::int64_t budget, Point& p, std::vector<Point>& out) {
  if (depth == o.dim) {
    if (o.contains(p)) out.push_back(p);
    return;
  }
  const std::size_t coord = o.order[depth];
  for (std::int64_t v = 0; v <= budget; ++v) {
    p[coord] = v;
    if (o.prefix_ok && !o.prefix_ok(p, depth + 1)) continue;
    enumerate(o, depth + 1, budget - v, p, out);
  }
  p[coord] = 0;
}

}  // namespace

HilbertBasis hilbert_basis(const ConeOracle& oracle, std::int64_t bound) {
  HilbertBasis hb;
  hb.bound = bound;
  if (oracle.dim == 0 || bound <= 0) return hb;
  if (!oracle.order.empty() && oracle.order.size() != oracle.dim)
    throw Error(ErrorKind::InvalidInput, "coordinate order has the wrong length");

  ConeOracle o = oracle;
  if (o.order.empty()) {
    o.order.resize(o.dim);
    std::iota(o.order.begin(), o.order.end(), std::size_t{0});
  }
  Point zero(o.dim, 0);
  if (!o.contains(zero)) throw Error(ErrorKind::DecompositionFailure, "oracle rejects the origin");

  std::vector<Point> points;
  Point p(o.dim, 0);
  enumerate(o, 0, bound, p, points);
  std::erase(points, zero);
  std::stable_sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    auto sa = total(a), sb = total(b);
    return sa != sb ? sa < sb : a < b;
  });
  hb.cone_points = points.size();

  for (const Point& x : points) {
    bool reducible = false;
    for (const Point& h : hb.elements) {
      if (leq(h, x) && o.contains(minus(x, h))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) hb.elements.push_back(x);
  }

  // closure within the bound; a failure means the oracle is not a monoid
  for (std::size_t i = 0; i < hb.elements.size(); ++i)
    for (std::size_t j = i; j < hb.elements.size(); ++j) {
      const Point& a = hb.elements[i];
      const Point& b = hb.elements[j];
      if (total(a) + total(b) > bound) continue;
      Point s(a.size());
      for (std::size_t k = 0; k < s.size(); ++k) s[k] = a[k] + b[k];
      if (!o.contains(s))
        throw Error(ErrorKind::DecompositionFailure, "oracle is not closed under addition within the bound");
    }
  for (const Point& h : hb.elements)
    if (!is_irreducible(o.contains, h))
      throw Error(ErrorKind::DecompositionFailure, "oracle is not closed under addition within the bound");
  return hb;
}

HilbertBasis hilbert_basis(const Membership& oracle, std::size_t dim, std::int64_t bound) {
  ConeOracle o;
  o.dim = dim;
  o.contains = oracle;
  return hilbert_basis(o, bound);
}

bool is_irreducible(const Membership& oracle, std::span<const std::int64_t> x) {
  const std::size_t n = x.size();
  Point px(x.begin(), x.end());
  if (std::all_of(px.begin(), px.end(), [](auto v) { return v == 0; })) return false;
  Point y(n, 0);
  Point rest(n);
  // odometer over 0 <= y <= x
  while (true) {
    std::size_t i = 0;
    while (i < n && y[i] == px[i]) y[i++] = 0;
    if (i == n) break;
    ++y[i];
    if (y == px) continue;
    for (std::size_t k = 0; k < n; ++k) rest[k] = px[k] - y[k];
    if (oracle(y) && oracle(rest)) return false;
  }
  return true;
}

namespace {

bool decompose_rec(const Membership& oracle, const std::vector<Point>& basis, const Point& x,
                   std::vector<std::size_t>& acc, std::set<Point>& dead) {
  if (std::all_of(x.begin(), x.end(), [](auto v) { return v == 0; })) return true;
  if (dead.count(x)) return false;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != x.size() || !leq(basis[i], x)) continue;
    Point r = minus(x, basis[i]);
    if (!oracle(r)) continue;
    acc.push_back(i);
    if (decompose_rec(oracle, basis, r, acc, dead)) return true;
    acc.pop_back();
  }
  dead.insert(x);
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> decompose_over(const Membership& oracle, const std::vector<Point>& basis,
                                                       const Point& x) {
  std::vector<std::size_t> acc;
  std::set<Point> dead;
  if (decompose_rec(oracle, basis, x, acc, dead)) return acc;
  return std::nullopt;
}

IntVec decompose_with(const IntVec& c, const IntegerInverse& inv) {
  if (!inv.num.empty() && inv.num[0].size() != c.size())
    throw Error(ErrorKind::LengthMismatch, "point has length " + std::to_string(c.size()) + ", expected " +
                                               std::to_string(inv.num[0].size()));
  RatVec lam = inv.apply(c);
  for (std::size_t j = 0; j < lam.size(); ++j)
    if (lam[j] < 0)
      throw Error(ErrorKind::NegativeCoefficient, "coefficient " + std::to_string(j + 1) + " is " + rat_to_string(lam[j]));
  IntVec out;
  out.reserve(lam.size());
  for (std::size_t j = 0; j < lam.size(); ++j) {
    if (!is_integer(lam[j]))
      throw Error(ErrorKind::NonIntegral, "coefficient " + std::to_string(j + 1) + " is " + rat_to_string(lam[j]));
    out.push_back(boost::multiprecision::numerator(lam[j]));
  }
  return out;
}

IntVec decompose_in_sector(const IntVec& c, const std::vector<IntVec>& generators) {
  if (generators.empty() || generators.size() != c.size())
    throw Error(ErrorKind::Singular, "need as many generators as coordinates");
  for (const auto& g : generators)
    if (g.size() != c.size()) throw Error(ErrorKind::LengthMismatch, "generator length differs from point length");
  return decompose_with(c, integer_inverse(columns_to_matrix(generators)));
}

}  // namespace sl3t
