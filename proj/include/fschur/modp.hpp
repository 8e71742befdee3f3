#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

// Small dense linear algebra over GF(p) for the character-table engine.
// Primes here are tiny (a few thousand), so inverses, square roots and
// primitive roots are all found by direct search.

namespace fschur {
namespace modp {

using i64 = std::int64_t;
using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;  // row-major

inline i64 mul(i64 a, i64 b, i64 p) { return (a * b) % p; }

inline i64 pow(i64 a, i64 e, i64 p) {
  a %= p;
  if (a < 0) a += p;
  i64 r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline i64 inv(i64 a, i64 p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::logic_error("modp: inverse of zero");
  return pow(a, p - 2, p);
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Smallest prime p with p = 1 (mod e) and p > lower.
inline i64 dixon_prime(i64 e, i64 lower) {
  i64 p = ((lower / e) + 1) * e + 1;
  while (!is_prime(p)) p += e;
  return p;
}

inline std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> out;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

inline i64 smallest_primitive_root(i64 p) {
  auto qs = prime_factors(p - 1);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (i64 q : qs)
      if (pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("modp: no primitive root found");
}

// Square root of a in GF(p), returned in [1, (p-1)/2]; checked by the caller
// against its expected range.
inline i64 sqrt_in_half_range(i64 a, i64 p) {
  a %= p;
  for (i64 r = 1; r <= (p - 1) / 2; ++r)
    if (mul(r, r, p) == a) return r;
  throw std::logic_error("modp: value has no square root");
}

inline Vec mat_vec(const Mat& m, const Vec& v, i64 p) {
  Vec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    i64 acc = 0;
    for (std::size_t j = 0; j < v.size(); ++j) acc = (acc + m[i][j] * v[j]) % p;
    out[i] = acc;
  }
  return out;
}

// In-place reduced row echelon form; returns the pivot column of each row.
inline std::vector<int> rref(Mat& m, i64 p) {
  std::vector<int> pivots;
  std::size_t row = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] % p == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    i64 s = inv(m[row][col], p);
    for (auto& x : m[row]) x = mul(x % p + p, s, p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] % p == 0) continue;
      i64 f = m[i][col] % p;
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * m[row][j]) % p + p) % p;
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);  // drop zero rows
  return pivots;
}

// Basis of the kernel of m (as row vectors), deterministic: one vector per
// free column, in increasing column order.
inline Mat kernel(Mat m, i64 p) {
  std::size_t cols = m.empty() ? 0 : m[0].size();
  auto pivots = rref(m, p);
  std::vector<int> pivot_of_col(cols, -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = static_cast<int>(r);
  Mat out;
  for (std::size_t col = 0; col < cols; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    Vec v(cols, 0);
    v[col] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = (p - m[r][col] % p) % p;
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial (monic, coefficient of x^i at index i) via
// reduction to upper Hessenberg form with pivoting; valid over any GF(p).
inline Vec charpoly(Mat h, i64 p) {
  const std::size_t n = h.size();
  for (auto& row : h)
    for (auto& x : row) x = (x % p + p) % p;

  for (std::size_t m = 0; m + 2 < n; ++m) {
    std::size_t sel = m + 1;
    while (sel < n && h[sel][m] == 0) ++sel;
    if (sel == n) continue;
    if (sel != m + 1) {
      std::swap(h[sel], h[m + 1]);
      for (std::size_t i = 0; i < n; ++i) std::swap(h[i][sel], h[i][m + 1]);
    }
    i64 piv = inv(h[m + 1][m], p);
    for (std::size_t i = m + 2; i < n; ++i) {
      if (h[i][m] == 0) continue;
      i64 t = mul(h[i][m], piv, p);
      for (std::size_t j = 0; j < n; ++j) h[i][j] = ((h[i][j] - t * h[m + 1][j]) % p + p) % p;
      for (std::size_t j = 0; j < n; ++j) h[j][m + 1] = (h[j][m + 1] + t * h[j][i]) % p;
    }
  }

  // p_m(x) = (x - h[m-1][m-1]) p_{m-1}(x)
  //          - sum_k h[m-1-k][m-1] (prod of k subdiagonals) p_{m-1-k}(x)
  std::vector<Vec> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Vec pm(m + 1, 0);
    const Vec& prev = polys[m - 1];
    for (std::size_t i = 0; i < prev.size(); ++i) {
      pm[i + 1] = (pm[i + 1] + prev[i]) % p;
      pm[i] = ((pm[i] - h[m - 1][m - 1] * prev[i]) % p + p) % p;
    }
    i64 sub = 1;
    for (std::size_t k = 1; k < m; ++k) {
      sub = mul(sub, h[m - k][m - k - 1], p);
      if (sub == 0) break;
      i64 coef = mul(sub, h[m - 1 - k][m - 1], p);
      if (coef == 0) continue;
      const Vec& pk = polys[m - 1 - k];
      for (std::size_t i = 0; i < pk.size(); ++i) pm[i] = ((pm[i] - coef * pk[i]) % p + p) % p;
    }
    polys[m] = std::move(pm);
  }
  return polys[n];
}

inline i64 eval_poly(const Vec& poly, i64 x, i64 p) {
  i64 acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = (mul(acc, x, p) + poly[i]) % p;
  return acc;
}

// All roots in GF(p), ascending.
inline Vec poly_roots(const Vec& poly, i64 p) {
  Vec roots;
  for (i64 x = 0; x < p; ++x)
    if (eval_poly(poly, x, p) == 0) roots.push_back(x);
  return roots;
}

}  // namespace modp
}  // namespace fschur
