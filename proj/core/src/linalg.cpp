#include "sl3trop/linalg.hpp"


#include "sl3trop/errors.hpp"

namespace sl3t {

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i].assign(m[i].begin(), m[i].end());
  return r;
}

std::size_t rank(RatMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::size_t rank(const IntMatrix& m) { return rank(to_rat(m)); }

RatMatrix inverse(const RatMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorKind::Singular, "inverse: matrix is not square");
  RatMatrix a = m;
  RatMatrix inv(n, RatVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::Singular, "inverse: matrix is singular");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    Rat p = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= p;
      inv[c][j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

RatVec IntegerInverse::apply(const IntVec& v) const {
  RatVec out(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i].size() != v.size()) throw Error(ErrorKind::LengthMismatch, "apply: length mismatch");
    Int s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += num[i][j] * v[j];
    out[i] = Rat(s, den);
  }
  return out;
}

IntegerInverse integer_inverse(const IntMatrix& m) {
  RatMatrix inv = inverse(to_rat(m));
  Int den = 1;
  for (const auto& row : inv)
    for (const auto& x : row) {
      Int d = boost::multiprecision::denominator(x);
      den = den / boost::multiprecision::gcd(den, d) * d;
    }
  IntegerInverse out;
  out.den = den;
  out.num.resize(inv.size());
  for (std::size_t i = 0; i < inv.size(); ++i) {
    out.num[i].resize(inv[i].size());
    for (std::size_t j = 0; j < inv[i].size(); ++j) {
      Rat scaled = inv[i][j] * den;
      out.num[i][j] = boost::multiprecision::numerator(scaled);
    }
  }
  return out;
}

IntMatrix columns_to_matrix(const std::vector<IntVec>& cols) {
  if (cols.empty()) return {};
  const std::size_t n = cols[0].size();
  IntMatrix m(n, IntVec(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != n) throw Error(ErrorKind::LengthMismatch, "columns differ in length");
    for (std::size_t i = 0; i < n; ++i) m[i][j] = cols[j][i];
  }
  return m;
}

}  // namespace sl3t
