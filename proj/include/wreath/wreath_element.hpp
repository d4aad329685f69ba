#pragma once

#include <string>
#include <vector>

#include "bn_theory.hpp"
#include "perm.hpp"

namespace wreath {

/// Element (f, sigma) of (Z/r) wr S_n.  sigma is stored 0-based: sigma[i] is the
/// image of coordinate i.  The law is (f,g)(f',g') = (f + g.f', gg') with
/// (g.f')(x) = f'(g^{-1} x).
struct WreathElement {
  int r = 2;
  std::vector<int> f;
  std::vector<int> sigma;

  WreathElement() = default;
  WreathElement(int modulus, std::vector<int> flips, std::vector<int> perm)
      : r(modulus), f(std::move(flips)), sigma(std::move(perm)) {
    if (r < 1) throw InvalidArgument("modulus must be positive");
    if (f.size() != sigma.size()) throw InvalidArgument("f and sigma lengths differ");
    std::vector<bool> seen(sigma.size(), false);
    for (int s : sigma) {
      if (s < 0 || s >= static_cast<int>(sigma.size()) || seen[s])
        throw InvalidArgument("sigma is not a permutation");
      seen[s] = true;
    }
    for (int& x : f) x = ((x % r) + r) % r;
  }

  static WreathElement identity(int r, int n) {
    std::vector<int> s(n);
    for (int i = 0; i < n; ++i) s[i] = i;
    return {r, std::vector<int>(n, 0), s};
  }
  /// Base-group element with the given coordinates and trivial sigma.
  static WreathElement flips(int r, std::vector<int> f) {
    int n = static_cast<int>(f.size());
    WreathElement e = identity(r, n);
    e.f = std::move(f);
    for (int& x : e.f) x = ((x % r) + r) % r;
    return e;
  }
  /// Passive element (0, sigma).
  static WreathElement passive(int r, std::vector<int> sigma) {
    return {r, std::vector<int>(sigma.size(), 0), std::move(sigma)};
  }

  int n() const { return static_cast<int>(f.size()); }
  bool is_identity() const {
    for (int i = 0; i < n(); ++i)
      if (f[i] != 0 || sigma[i] != i) return false;
    return true;
  }
  /// Number of nonzero coordinates of f.
  int flip_count() const {
    int c = 0;
    for (int x : f) c += x != 0;
    return c;
  }
  Perm sigma_perm() const { return Perm::from_images(sigma); }

  /// "[f1,...,fn|s1,...,sn]" with sigma 1-based.
  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < n(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    s += "|";
    for (int i = 0; i < n(); ++i) s += (i ? "," : "") + std::to_string(sigma[i] + 1);
    return s + "]";
  }

  friend bool operator==(const WreathElement& a, const WreathElement& b) {
    return a.r == b.r && a.f == b.f && a.sigma == b.sigma;
  }
};

inline WreathElement group_op(const WreathElement& x, const WreathElement& y) {
  if (x.r != y.r || x.n() != y.n()) throw InvalidArgument("group_op: ambient groups differ");
  const int n = x.n();
  std::vector<int> xinv(n);
  for (int i = 0; i < n; ++i) xinv[x.sigma[i]] = i;
  WreathElement z;
  z.r = x.r;
  z.f.resize(n);
  z.sigma.resize(n);
  for (int i = 0; i < n; ++i) {
    z.f[i] = (x.f[i] + y.f[xinv[i]]) % x.r;
    z.sigma[i] = x.sigma[y.sigma[i]];
  }
  return z;
}

inline WreathElement operator*(const WreathElement& x, const WreathElement& y) { return group_op(x, y); }

inline WreathElement inverse(const WreathElement& x) {
  const int n = x.n();
  WreathElement z;
  z.r = x.r;
  z.f.resize(n);
  z.sigma.resize(n);
  for (int i = 0; i < n; ++i) {
    z.sigma[x.sigma[i]] = i;
    z.f[i] = (x.r - x.f[x.sigma[i]]) % x.r;
  }
  return z;
}

/// Permutation of r*n points.  Point i*r + a is the pair (i, a); the element
/// sends it to (sigma(i), a + f(sigma(i))).  For r = 2 this is f~_1...f~_n sigma~.
inline Perm embed_sym(const WreathElement& x) {
  const int r = x.r, n = x.n();
  std::vector<int> img(r * n);
  for (int i = 0; i < n; ++i) {
    int t = x.sigma[i];
    for (int a = 0; a < r; ++a) img[i * r + a] = t * r + (a + x.f[t]) % r;
  }
  return Perm::from_images(img);
}

/// Inverse of embed_sym on its image.
inline WreathElement decode(const Perm& p, int r) {
  if (r <= 0 || p.degree() % r != 0) throw InvalidArgument("decode: degree not divisible by r");
  const int n = p.degree() / r;
  WreathElement x = WreathElement::identity(r, n);
  for (int i = 0; i < n; ++i) {
    int t = p[i * r] / r;
    x.sigma[i] = t;
    x.f[t] = p[i * r] % r;
  }
  if (embed_sym(x) != p) throw InvalidArgument("decode: permutation does not preserve the blocks");
  return x;
}

inline SignedClass signed_cycle_type(const WreathElement& x) {
  if (x.r != 2) throw InvalidArgument("signed_cycle_type requires r = 2");
  std::vector<int> pos, neg;
  for (const auto& c : x.sigma_perm().cycles()) {
    int s = 0;
    for (int i : c) s += x.f[i];
    (s % 2 ? neg : pos).push_back(static_cast<int>(c.size()));
  }
  std::sort(pos.rbegin(), pos.rend());
  std::sort(neg.rbegin(), neg.rend());
  return {Partition(pos), Partition(neg)};
}

/// Cycle type of sigma.
inline Partition cycle_type(const Perm& p) {
  std::vector<int> v;
  for (const auto& c : p.cycles()) v.push_back(static_cast<int>(c.size()));
  std::sort(v.rbegin(), v.rend());
  return Partition(v);
}

/// Restriction to a block of consecutive coordinates [start, start+len) that
/// sigma preserves.
inline WreathElement block_part(const WreathElement& x, int start, int len) {
  WreathElement y = WreathElement::identity(x.r, len);
  for (int i = 0; i < len; ++i) {
    int t = x.sigma[start + i] - start;
    if (t < 0 || t >= len) throw InvalidArgument("element does not preserve the coordinate block");
    y.sigma[i] = t;
    y.f[i] = x.f[start + i];
  }
  return y;
}

/// Places x on coordinates [offset, offset + x.n()) of a group of index n.
inline WreathElement shift(const WreathElement& x, int offset, int n) {
  WreathElement y = WreathElement::identity(x.r, n);
  for (int i = 0; i < x.n(); ++i) {
    y.f[offset + i] = x.f[i];
    y.sigma[offset + i] = x.sigma[i] + offset;
  }
  return y;
}

}  // namespace wreath
