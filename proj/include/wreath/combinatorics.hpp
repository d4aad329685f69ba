#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace wreath {

using Integer = boost::multiprecision::cpp_int;

/// Weakly decreasing sequence of positive parts.  The empty partition is valid.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
        throw InvalidArgument("not a partition: " + to_string_raw(parts_));
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// Row length, zero past the last row.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }

  bool contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i)
      if (inner[i] > (*this)[i]) return false;
    return true;
  }

  std::string to_string() const { return to_string_raw(parts_); }

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

 private:
  static std::string to_string_raw(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + "]";
  }

  std::vector<int> parts_;
};

/// Sequence of nonnegative integers (zero parts allowed).
using Composition = std::vector<int>;

/// Canonical order: larger size first, then reverse lexicographic.
/// For partitions of 3 this lists (3), (2,1), (1,1,1).
inline bool partition_before(const Partition& a, const Partition& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa > sb;
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(),
                                      a.parts().end());
}

struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const { return partition_before(a, b); }
};

inline Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline Partition conjugate(const Partition& p) {
  std::vector<int> out(p.empty() ? 0 : p[0], 0);
  for (int row : p.parts())
    for (int c = 0; c < row; ++c) ++out[c];
  return Partition(std::move(out));
}

/// All partitions of n, in canonical (reverse lexicographic) order.
inline std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InvalidArgument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(rest, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rest - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

enum class Strip { Horizontal, Vertical };

namespace detail {

inline Partition add_box(const Partition& p, int row) {
  std::vector<int> v = p.parts();
  if (row == static_cast<int>(v.size()))
    v.push_back(1);
  else
    ++v[row];
  return Partition(std::move(v));
}

inline std::vector<int> addable_rows(const Partition& p) {
  std::vector<int> rows;
  for (int i = 0; i <= p.length(); ++i)
    if (i == 0 || p[i] < p[i - 1]) rows.push_back(i);
  return rows;
}

inline void sort_unique(std::vector<Partition>& v) {
  std::sort(v.begin(), v.end(), PartitionOrder{});
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

/// Shapes obtained by adding k in {1,2} boxes as a horizontal or vertical strip.
/// For k = 1 the orientation is ignored.
inline std::vector<Partition> add_strip(const Partition& p, int k, Strip orientation) {
  if (k != 1 && k != 2) throw InvalidArgument("add_strip: k must be 1 or 2");
  std::vector<Partition> out;
  for (int r : detail::addable_rows(p)) {
    Partition q = detail::add_box(p, r);
    if (k == 1) {
      out.push_back(q);
      continue;
    }
    for (int r2 : detail::addable_rows(q)) {
      Partition s = detail::add_box(q, r2);
      // The two new boxes sit at (r, p[r]) and (r2, q[r2]).
      int c1 = p[r], c2 = q[r2];
      bool ok = orientation == Strip::Horizontal ? c1 != c2 : r != r2;
      if (ok) out.push_back(s);
    }
  }
  detail::sort_unique(out);
  return out;
}

/// Number of Littlewood-Richardson tableaux of shape outer/inner and content weight.
/// Returns 0 when sizes do not add up or inner is not contained in outer.
inline Integer lr_coefficient(const Partition& outer, const Partition& inner,
                              const Partition& weight) {
  if (inner.size() + weight.size() != outer.size() || !outer.contains(inner)) return 0;
  const int rows = outer.length();
  const int letters = weight.length();
  if (letters == 0) return 1;

  std::vector<std::vector<int>> tab(rows);
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < rows; ++r) {
    tab[r].assign(outer[r], 0);
    for (int c = outer[r] - 1; c >= inner[r]; --c) cells.emplace_back(r, c);
  }
  std::vector<int> used(letters + 1, 0);
  std::int64_t count = 0;

  std::function<void(std::size_t)> fill = [&](std::size_t idx) {
    if (idx == cells.size()) {
      ++count;
      return;
    }
    auto [r, c] = cells[idx];
    int hi = letters;
    if (c + 1 < outer[r]) hi = std::min(hi, tab[r][c + 1]);
    int lo = 1;
    if (r > 0 && c >= inner[r - 1]) lo = tab[r - 1][c] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (used[v] >= weight[v - 1]) continue;
      if (v > 1 && used[v] >= used[v - 1]) continue;
      ++used[v];
      tab[r][c] = v;
      fill(idx + 1);
      --used[v];
    }
    tab[r][c] = 0;
  };
  fill(0);
  return Integer(count);
}

/// Coefficients c^nu_{lambda,mu}, restricted to nu contained in bound when given.
inline std::map<Partition, Integer, PartitionOrder> lr_product(const Partition& lambda,
                                                                const Partition& mu,
                                                                const Partition* bound = nullptr) {
  std::map<Partition, Integer, PartitionOrder> out;
  for (const Partition& nu : partitions_of(lambda.size() + mu.size())) {
    if (bound && !bound->contains(nu)) continue;
    Integer c = lr_coefficient(nu, lambda, mu);
    if (c != 0) out.emplace(nu, c);
  }
  return out;
}

/// Multiplicity of S^target in the induction from the Young subgroup S(a)
/// of the outer tensor product of the given Specht modules.
inline Integer induced_multiplicity_sym(const Composition& a, const std::vector<Partition>& factors,
                                        const Partition& target) {
  if (a.size() != factors.size())
    throw InvalidArgument("induced_multiplicity_sym: composition and factor counts differ");
  int total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || factors[i].size() != a[i])
      throw InvalidArgument("induced_multiplicity_sym: factor " + std::to_string(i) +
                            " has the wrong size");
    total += a[i];
  }
  if (total != target.size())
    throw InvalidArgument("induced_multiplicity_sym: composition total differs from target size");

  std::map<Partition, Integer, PartitionOrder> cur{{Partition{}, Integer(1)}};
  for (const Partition& f : factors) {
    std::map<Partition, Integer, PartitionOrder> next;
    for (const auto& [nu, m] : cur)
      for (const auto& [rho, c] : lr_product(nu, f, &target)) next[rho] += m * c;
    cur = std::move(next);
  }
  auto it = cur.find(target);
  return it == cur.end() ? Integer(0) : it->second;
}

/// Number of standard Young tableaux, by the hook length formula.
inline Integer dimension_sym(const Partition& p) {
  Integer hooks = 1;
  Partition pc = conjugate(p);
  for (int r = 0; r < p.length(); ++r)
    for (int c = 0; c < p[r]; ++c) hooks *= (p[r] - c - 1) + (pc[c] - r - 1) + 1;
  return factorial(p.size()) / hooks;
}

/// Rim hooks of length k: (remaining partition, leg length) pairs.
inline std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& p, int k) {
  std::vector<std::pair<Partition, int>> out;
  const int len = p.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = p[i] + (len - 1 - i);
  for (int i = 0; i < len; ++i) {
    int b = beta[i] - k;
    if (b < 0 || std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
    int height = 0;
    for (int j = 0; j < len; ++j)
      if (beta[j] > b && beta[j] < beta[i]) ++height;
    std::vector<int> nb = beta;
    nb[i] = b;
    std::sort(nb.rbegin(), nb.rend());
    std::vector<int> parts(len);
    for (int j = 0; j < len; ++j) parts[j] = nb[j] - (len - 1 - j);
    out.emplace_back(Partition(std::move(parts)), height);
  }
  return out;
}

namespace detail {

inline Integer mn_recurse(const Partition& p, const std::vector<int>& cycles, std::size_t idx) {
  if (idx == cycles.size()) return p.empty() ? 1 : 0;
  if (cycles[idx] == 1) return dimension_sym(p);  // the rest are fixed points
  Integer total = 0;
  for (const auto& [rest, height] : remove_rim_hooks(p, cycles[idx])) {
    Integer v = mn_recurse(rest, cycles, idx + 1);
    total += (height % 2) ? -v : v;
  }
  return total;
}

}  // namespace detail

/// chi^p at the class of the given cycle type (Murnaghan-Nakayama).
inline Integer sym_char_value(const Partition& p, const Partition& cycle_type) {
  if (p.size() != cycle_type.size())
    throw InvalidArgument("sym_char_value: " + p.to_string() + " and cycle type " +
                          cycle_type.to_string() + " have different sizes");
  return detail::mn_recurse(p, cycle_type.parts(), 0);
}

/// Order of the centralizer of a permutation with the given cycle type.
inline Integer centralizer_order(const Partition& cycle_type) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int c : cycle_type.parts()) ++mult[c];
  for (auto [len, m] : mult) {
    for (int i = 0; i < m; ++i) z *= len;
    z *= factorial(m);
  }
  return z;
}

inline bool operator<(const Partition& a, const Partition& b) { return partition_before(a, b); }

}  // namespace wreath
