#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace wreath::mod {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

inline u64 mul(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
inline u64 add(u64 a, u64 b, u64 p) { return (a + b) % p; }
inline u64 sub(u64 a, u64 b, u64 p) { return (a + p - b % p) % p; }

inline u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 inv(u64 a, u64 p) {
  if (a % p == 0) throw ConsistencyError("division by zero mod " + std::to_string(p));
  return pow(a, p - 2, p);
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Smallest prime p with p = 1 mod e and p > lower.
inline u64 prime_above(u64 e, u64 lower, u64 limit) {
  if (e == 0) e = 1;
  u64 p = (lower / e) * e + 1;
  if (p <= lower) p += e;
  for (; p <= limit; p += e)
    if (is_prime(p)) return p;
  throw ResourceError("no prime = 1 mod " + std::to_string(e) + " below the search limit " +
                      std::to_string(limit));
}

/// Primitive root modulo the prime p.
inline u64 primitive_root(u64 p) {
  if (p == 2) return 1;
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : factors)
      if (pow(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw ConsistencyError("no primitive root");
}

/// A fixed primitive e-th root of unity mod p (p = 1 mod e).
inline u64 root_of_unity(u64 e, u64 p) {
  if ((p - 1) % e != 0) throw InvalidArgument("p - 1 is not divisible by the root order");
  return pow(primitive_root(p), (p - 1) / e, p);
}

/// Signed integer to residue.
inline u64 from_signed(long long v, u64 p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return static_cast<u64>(r);
}

/// Reduces rows of m in place to reduced row echelon form.  Returns pivot columns.
inline std::vector<int> rref(Mat& m, u64 p) {
  std::vector<int> pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] % p) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    u64 iv = inv(m[r][c], p);
    for (auto& x : m[r]) x = mul(x, iv, p);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      u64 f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] = sub(m[i][j], mul(f, m[r][j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

/// Basis of {x : A x = 0}.
inline Mat nullspace(Mat a, u64 p) {
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  auto pivots = rref(a, p);
  std::vector<bool> is_piv(cols, false);
  for (int c : pivots) is_piv[c] = true;
  Mat basis;
  for (int free = 0; free < cols; ++free) {
    if (is_piv[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = sub(0, a[i][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Characteristic polynomial det(xI - A), coefficients low degree first.
/// Hessenberg reduction followed by the standard recurrence.
inline Vec charpoly(Mat h, u64 p) {
  const int d = static_cast<int>(h.size());
  for (int j = 0; j + 2 < d; ++j) {
    int piv = -1;
    for (int i = j + 1; i < d; ++i)
      if (h[i][j]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (int r = 0; r < d; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    u64 iv = inv(h[j + 1][j], p);
    for (int r = j + 2; r < d; ++r) {
      if (!h[r][j]) continue;
      u64 u = mul(h[r][j], iv, p);
      for (int c = 0; c < d; ++c) h[r][c] = sub(h[r][c], mul(u, h[j + 1][c], p), p);
      for (int rr = 0; rr < d; ++rr) h[rr][j + 1] = add(h[rr][j + 1], mul(u, h[rr][r], p), p);
    }
  }
  // polys[m] = charpoly of the leading m x m block.
  std::vector<Vec> polys(d + 1);
  polys[0] = {1};
  for (int m = 1; m <= d; ++m) {
    Vec q(m + 1, 0);
    const Vec& prev = polys[m - 1];
    for (std::size_t i = 0; i < prev.size(); ++i) {
      q[i + 1] = add(q[i + 1], prev[i], p);
      q[i] = sub(q[i], mul(h[m - 1][m - 1], prev[i], p), p);
    }
    u64 prod = 1;
    for (int i = m - 1; i >= 1; --i) {
      prod = mul(prod, h[i][i - 1], p);
      u64 coef = mul(h[i - 1][m - 1], prod, p);
      if (!coef) continue;
      const Vec& pi = polys[i - 1];
      for (std::size_t t = 0; t < pi.size(); ++t) q[t] = sub(q[t], mul(coef, pi[t], p), p);
    }
    polys[m] = std::move(q);
  }
  return polys[d];
}

/// Distinct roots of a polynomial in F_p, by exhaustive evaluation.
inline Vec roots(const Vec& poly, u64 p) {
  Vec out;
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg == 1) {
    out.push_back(mul(sub(0, poly[0], p), inv(poly[1], p), p));
    return out;
  }
  for (u64 x = 0; x < p && static_cast<int>(out.size()) < deg; ++x) {
    u64 v = 0;
    for (int i = deg; i >= 0; --i) v = add(mul(v, x, p), poly[i], p);
    if (v == 0) out.push_back(x);
  }
  return out;
}

}  // namespace wreath::mod
