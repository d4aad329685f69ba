#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_set>
#include <vector>

#include "groups.hpp"

namespace wreath {

/// Element subset of a small group, as a bitset over its element indices.
using ElementSet = std::vector<std::uint64_t>;

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : s) h = (h ^ w) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

/// One conjugacy class of subgroups found by the lattice search.
struct SubgroupClass {
  ElementSet canonical;                  // least member of the class, bitwise
  std::vector<std::uint32_t> elements;   // a representative, sorted indices
  std::vector<std::uint32_t> gens;       // generators of that representative
  std::size_t conjugates = 1;            // number of subgroups in the class

  std::size_t order() const { return elements.size(); }
};

/// Multiplication and conjugation tables of a group small enough for lattice
/// search.
class SmallGroupTables {
 public:
  SmallGroupTables(const FiniteGroup& g, const Budget& budget) : g_(g) {
    if (g.order() > budget.lattice_order)
      throw ResourceError("lattice search needs |G| <= " + std::to_string(budget.lattice_order) + ", got " +
                          std::to_string(g.order()));
    const std::size_t n = g.order();
    words_ = (n + 63) / 64;
    std::vector<Perm> el;
    for (std::size_t i = 0; i < n; ++i) el.push_back(g.element(i));
    mult_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) mult_[i * n + j] = static_cast<std::uint32_t>(g.index_of(el[i] * el[j]));
    inv_.resize(n);
    for (std::size_t i = 0; i < n; ++i) inv_[i] = static_cast<std::uint32_t>(g.index_of(el[i].inverse()));
    for (const auto& s : g.generators()) gen_idx_.push_back(static_cast<std::uint32_t>(g.index_of(s)));
  }

  std::size_t order() const { return g_.order(); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mult_[a * g_.order() + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }

  ElementSet empty_set() const { return ElementSet(words_, 0); }
  static bool has(const ElementSet& s, std::uint32_t i) { return (s[i >> 6] >> (i & 63)) & 1; }
  static void set(ElementSet& s, std::uint32_t i) { s[i >> 6] |= std::uint64_t{1} << (i & 63); }

  std::vector<std::uint32_t> members(const ElementSet& s) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < order(); ++i)
      if (has(s, i)) out.push_back(i);
    return out;
  }

  /// Subgroup generated by the given elements.
  ElementSet closure(const std::vector<std::uint32_t>& gens) const {
    ElementSet s = empty_set();
    std::vector<std::uint32_t> list{0};
    set(s, 0);
    for (std::size_t head = 0; head < list.size(); ++head)
      for (auto x : gens) {
        std::uint32_t y = mul(list[head], x);
        if (!has(s, y)) {
          set(s, y);
          list.push_back(y);
        }
      }
    return s;
  }

  ElementSet conjugate(const ElementSet& s, std::uint32_t x) const {
    ElementSet out = empty_set();
    const std::uint32_t xi = inv(x);
    for (std::uint32_t i = 0; i < order(); ++i)
      if (has(s, i)) set(out, mul(mul(x, i), xi));
    return out;
  }

  /// All conjugates of s under the ambient group.
  std::vector<ElementSet> orbit(const ElementSet& s) const {
    std::vector<ElementSet> out{s};
    std::unordered_set<ElementSet, ElementSetHash> seen{s};
    for (std::size_t head = 0; head < out.size(); ++head)
      for (auto x : gen_idx_) {
        ElementSet t = conjugate(out[head], x);
        if (seen.insert(t).second) out.push_back(std::move(t));
      }
    return out;
  }

 private:
  const FiniteGroup& g_;
  std::size_t words_ = 0;
  std::vector<std::uint32_t> mult_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> gen_idx_;
};

/// Subgroups of g up to conjugacy.  Representatives are extended one element
/// at a time starting from the trivial group, which reaches every class.
/// Sorted by order, then by canonical bitset.
inline std::vector<SubgroupClass> subgroups_up_to_conjugacy(const FiniteGroup& g, const Budget& budget = {}) {
  SmallGroupTables t(g, budget);
  const std::uint32_t order = static_cast<std::uint32_t>(g.order());
  std::vector<SubgroupClass> classes;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::size_t total = 0;

  auto add_class = [&](const ElementSet& s, std::vector<std::uint32_t> gens) {
    auto orb = t.orbit(s);
    total += orb.size();
    if (total > budget.max_subgroups)
      throw ResourceError("lattice search exceeds the subgroup budget of " + std::to_string(budget.max_subgroups));
    SubgroupClass c;
    c.canonical = *std::min_element(orb.begin(), orb.end());
    c.elements = t.members(s);
    c.gens = std::move(gens);
    c.conjugates = orb.size();
    for (auto& o : orb) seen.insert(std::move(o));
    classes.push_back(std::move(c));
  };

  add_class(t.closure({}), {});
  for (std::size_t head = 0; head < classes.size(); ++head) {
    const std::vector<std::uint32_t> base_gens = classes[head].gens;
    ElementSet rep = t.empty_set();
    for (auto e : classes[head].elements) t.set(rep, e);
    const std::vector<std::uint32_t> rep_elems = classes[head].elements;
    ElementSet covered = rep;
    for (std::uint32_t x = 0; x < order; ++x) {
      if (t.has(covered, x)) continue;
      // <R, x> = <R, x r> for r in R, so the whole coset is handled at once.
      for (auto r : rep_elems) t.set(covered, t.mul(x, r));
      std::vector<std::uint32_t> gens = base_gens;
      gens.push_back(x);
      ElementSet u = t.closure(gens);
      if (seen.count(u)) continue;
      add_class(u, std::move(gens));
    }
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.canonical < b.canonical;
  });
  return classes;
}

/// Total number of subgroups (not up to conjugacy) in a class list.
inline std::size_t raw_subgroup_count(const std::vector<SubgroupClass>& classes) {
  std::size_t s = 0;
  for (const auto& c : classes) s += c.conjugates;
  return s;
}

/// The representative of a lattice class as a permutation group.
inline GroupPtr materialize(const FiniteGroup& g, const SubgroupClass& c, const Budget& budget = {}) {
  std::vector<Perm> gens;
  for (auto i : c.gens) gens.push_back(g.element(i));
  return FiniteGroup::generate(g.degree(), gens, budget);
}

/// The representative of a lattice class of (Z/r) wr S_n as a Subgroup.
inline Subgroup lattice_subgroup(const FiniteGroup& g, const SubgroupClass& c, int r) {
  std::vector<WreathElement> gens;
  for (auto i : c.gens) gens.push_back(decode(g.element(i), r));
  return Subgroup(r, g.degree() / r, gens);
}

/// Whether a and b (subgroups of g) are conjugate in g.  Screens by order and
/// by the ambient class distribution when class_of is given, then walks the
/// conjugation orbit of a until b appears.
inline bool are_conjugate(const FiniteGroup& g, const FiniteGroup& a, const FiniteGroup& b,
                          const std::vector<std::uint32_t>* class_of = nullptr,
                          std::size_t orbit_budget = 200000) {
  if (a.order() != b.order() || a.degree() != g.degree() || b.degree() != g.degree()) return false;
  if (!g.contains(a) || !g.contains(b)) throw InvalidArgument("are_conjugate: subgroup not in the ambient group");
  if (a.codes() == b.codes()) return true;
  if (class_of) {
    std::vector<std::uint32_t> ca, cb;
    for (auto c : a.codes()) ca.push_back((*class_of)[g.index_of(c)]);
    for (auto c : b.codes()) cb.push_back((*class_of)[g.index_of(c)]);
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return false;
  }
  const int deg = g.degree();
  std::vector<Perm> gens = g.generators(), gens_inv;
  for (const auto& s : gens) gens_inv.push_back(s.inverse());
  using Codes = std::vector<std::uint64_t>;
  struct CodesHash {
    std::size_t operator()(const Codes& s) const {
      std::uint64_t h = 1469598103934665603ull;
      for (auto w : s) h = (h ^ w) * 1099511628211ull;
      return static_cast<std::size_t>(h);
    }
  };
  std::unordered_set<Codes, CodesHash> seen{a.codes()};
  std::deque<Codes> queue{a.codes()};
  while (!queue.empty()) {
    Codes cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Codes next;
      next.reserve(cur.size());
      for (auto c : cur) next.push_back((gens[k] * Perm::from_code(c, deg) * gens_inv[k]).code());
      std::sort(next.begin(), next.end());
      if (next == b.codes()) return true;
      if (seen.insert(next).second) {
        if (seen.size() > orbit_budget)
          throw ResourceError("conjugacy orbit exceeds the budget of " + std::to_string(orbit_budget));
        queue.push_back(std::move(next));
      }
    }
  }
  return false;
}

}  // namespace wreath
