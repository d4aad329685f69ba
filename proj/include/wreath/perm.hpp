#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "errors.hpp"

namespace wreath {

/// Permutation of {0..degree-1} in one-line notation.
/// Product convention: (p * q)(x) = p(q(x)), so q acts first.
class Perm {
 public:
  static constexpr int kMaxPackedDegree = 16;

  Perm() = default;
  explicit Perm(int degree) : img_(degree) { std::iota(img_.begin(), img_.end(), 0); }
  explicit Perm(std::vector<std::uint8_t> img) : img_(std::move(img)) {
    std::vector<bool> seen(img_.size(), false);
    for (auto v : img_) {
      if (v >= img_.size() || seen[v]) throw InvalidArgument("not a permutation");
      seen[v] = true;
    }
  }
  static Perm from_images(const std::vector<int>& img) {
    std::vector<std::uint8_t> v(img.begin(), img.end());
    for (int x : img)
      if (x < 0 || x > 255) throw InvalidArgument("permutation image out of range");
    return Perm(std::move(v));
  }
  /// Product of the given cycles (each a list of points) on `degree` points.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Perm p(degree);
    for (const auto& c : cycles)
      for (std::size_t i = 0; i < c.size(); ++i) p.img_[c[i]] = static_cast<std::uint8_t>(c[(i + 1) % c.size()]);
    return Perm(p.img_);
  }

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int x) const { return img_[x]; }
  const std::vector<std::uint8_t>& images() const { return img_; }

  Perm operator*(const Perm& q) const {
    if (q.degree() != degree()) throw InvalidArgument("permutation degrees differ");
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) r.img_[x] = img_[q.img_[x]];
    return r;
  }
  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) r.img_[img_[x]] = static_cast<std::uint8_t>(x);
    return r;
  }
  bool is_identity() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
      if (img_[x] != x) return false;
    return true;
  }
  /// +1 or -1.
  int sign() const {
    int s = 1;
    for (const auto& c : cycles())
      if (c.size() % 2 == 0) s = -s;
    return s;
  }
  int order() const {
    int o = 1;
    for (const auto& c : cycles()) o = std::lcm(o, static_cast<int>(c.size()));
    return o;
  }
  /// Cycles including fixed points, each starting at its least point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t s = 0; s < img_.size(); ++s) {
      if (seen[s]) continue;
      std::vector<int> c;
      for (int x = static_cast<int>(s); !seen[x]; x = img_[x]) {
        seen[x] = true;
        c.push_back(x);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  /// 4 bits per point, first point most significant, so codes order like the
  /// one-line words.  Requires degree <= 16.
  std::uint64_t code() const {
    if (img_.size() > kMaxPackedDegree)
      throw ResourceError("permutation degree " + std::to_string(img_.size()) +
                          " exceeds the packed-code limit of 16 points");
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < img_.size(); ++i) c |= std::uint64_t(img_[i]) << (4 * (15 - i));
    return c;
  }
  static Perm from_code(std::uint64_t c, int degree) {
    Perm p;
    p.img_.resize(degree);
    for (int i = 0; i < degree; ++i) p.img_[i] = static_cast<std::uint8_t>((c >> (4 * (15 - i))) & 0xF);
    return p;
  }

  /// One-line notation, 1-based.
  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < img_.size(); ++i) s += (i ? "," : "") + std::to_string(img_[i] + 1);
    return s + "]";
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

 private:
  std::vector<std::uint8_t> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : p.images()) h = (h ^ v) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

/// Budgets for explicit group computations.  Exceeding any of them raises
/// ResourceError; nothing is silently truncated.
struct Budget {
  std::size_t max_order = 50000;         // elements in any materialized group
  std::size_t lattice_order = 400;       // largest group whose subgroup lattice is searched
  std::size_t max_subgroups = 200000;    // raw subgroups visited by a lattice search
  std::uint64_t prime_search_limit = 1u << 30;
  unsigned threads = 1;
};

/// A finite permutation group with its element list materialized.
/// Elements are sorted by packed code, so element indices do not depend on
/// the generating set.  Index 0 is the identity.
class FiniteGroup {
 public:
  static std::shared_ptr<const FiniteGroup> generate(int degree, std::vector<Perm> gens,
                                                     const Budget& budget = {}) {
    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->degree_ = degree;
    if (degree > Perm::kMaxPackedDegree)
      throw ResourceError("cannot materialize a group on " + std::to_string(degree) +
                          " points (limit 16)");
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Perm& p) { return p.is_identity(); }),
               gens.end());
    for (const auto& p : gens)
      if (p.degree() != degree) throw InvalidArgument("generator degree mismatch");
    g->gens_ = std::move(gens);

    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> codes;
    std::deque<Perm> queue;
    Perm id(degree);
    seen.insert(id.code());
    codes.push_back(id.code());
    queue.push_back(id);
    while (!queue.empty()) {
      Perm x = std::move(queue.front());
      queue.pop_front();
      for (const auto& s : g->gens_) {
        Perm y = x * s;
        std::uint64_t c = y.code();
        if (seen.insert(c).second) {
          if (codes.size() >= budget.max_order)
            throw ResourceError("group order exceeds the element budget of " +
                                std::to_string(budget.max_order));
          codes.push_back(c);
          queue.push_back(std::move(y));
        }
      }
    }
    std::sort(codes.begin(), codes.end());
    g->codes_ = std::move(codes);
    g->index_.reserve(g->codes_.size() * 2);
    for (std::uint32_t i = 0; i < g->codes_.size(); ++i) g->index_.emplace(g->codes_[i], i);
    return g;
  }

  int degree() const { return degree_; }
  std::size_t order() const { return codes_.size(); }
  const std::vector<Perm>& generators() const { return gens_; }
  std::uint64_t code(std::size_t i) const { return codes_[i]; }
  const std::vector<std::uint64_t>& codes() const { return codes_; }
  Perm element(std::size_t i) const { return Perm::from_code(codes_[i], degree_); }

  /// Index of the element, or -1 when it is not in the group.
  long index_of(std::uint64_t code) const {
    auto it = index_.find(code);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
  }
  long index_of(const Perm& p) const { return p.degree() == degree_ ? index_of(p.code()) : -1; }
  bool contains(const Perm& p) const { return index_of(p) >= 0; }
  bool contains(const FiniteGroup& k) const {
    if (k.degree_ != degree_) return false;
    for (auto c : k.codes_)
      if (index_of(c) < 0) return false;
    return true;
  }

  /// FNV-1a digest of the sorted element codes and the degree.
  std::string digest() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
      for (int b = 0; b < 8; ++b) h = (h ^ ((v >> (8 * b)) & 0xFF)) * 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(degree_));
    for (auto c : codes_) mix(c);
    static const char* hex = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) s[i] = hex[h & 0xF];
    return s;
  }

 private:
  FiniteGroup() = default;
  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<std::uint64_t> codes_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// The symmetric group on n points with Coxeter generators.
inline GroupPtr symmetric_group(int n, const Budget& budget = {}) {
  std::vector<Perm> gens;
  for (int i = 0; i + 1 < n; ++i) gens.push_back(Perm::from_cycles(n, {{i, i + 1}}));
  return FiniteGroup::generate(n, gens, budget);
}

/// Subgroup of a materialized group generated by the given elements.
inline GroupPtr subgroup_of(const FiniteGroup& g, std::vector<Perm> gens, const Budget& budget = {}) {
  for (const auto& p : gens)
    if (!g.contains(p)) throw InvalidArgument("generator is not in the ambient group");
  return FiniteGroup::generate(g.degree(), std::move(gens), budget);
}

}  // namespace wreath
