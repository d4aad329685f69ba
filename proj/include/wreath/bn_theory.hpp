#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "combinatorics.hpp"

namespace wreath {

/// Label (lambda, mu) of the irreducible S^{lambda,mu} of B_n, n = |lambda| + |mu|.
struct BnIrrepLabel {
  Partition lambda;
  Partition mu;

  int n() const { return lambda.size() + mu.size(); }
  std::string to_string() const { return "(" + lambda.to_string() + "," + mu.to_string() + ")"; }

  friend bool operator==(const BnIrrepLabel& a, const BnIrrepLabel& b) {
    return a.lambda == b.lambda && a.mu == b.mu;
  }
  friend bool operator!=(const BnIrrepLabel& a, const BnIrrepLabel& b) { return !(a == b); }
  /// lambda-major, both coordinates in canonical partition order.
  friend bool operator<(const BnIrrepLabel& a, const BnIrrepLabel& b) {
    if (a.lambda != b.lambda) return partition_before(a.lambda, b.lambda);
    return partition_before(a.mu, b.mu);
  }
};

/// The four linear characters of B_n.  The encoding is the Klein group Z/2 x Z/2
/// with bit 0 for eps and bit 1 for delta, so composition is xor.
enum class LinearChar { One = 0, Eps = 1, Delta = 2, EpsDelta = 3 };

inline LinearChar operator*(LinearChar a, LinearChar b) {
  return static_cast<LinearChar>(static_cast<int>(a) ^ static_cast<int>(b));
}

inline const char* to_string(LinearChar c) {
  switch (c) {
    case LinearChar::One: return "one";
    case LinearChar::Eps: return "eps";
    case LinearChar::Delta: return "delta";
    case LinearChar::EpsDelta: return "epsdelta";
  }
  return "?";
}

/// Conjugacy class of B_n: cycle lengths with even (pos) and odd (neg) sign-flip sums.
struct SignedClass {
  Partition pos;
  Partition neg;

  int n() const { return pos.size() + neg.size(); }
  std::string to_string() const { return "(" + pos.to_string() + "," + neg.to_string() + ")"; }
  friend bool operator==(const SignedClass& a, const SignedClass& b) {
    return a.pos == b.pos && a.neg == b.neg;
  }
  friend bool operator<(const SignedClass& a, const SignedClass& b) {
    if (a.pos != b.pos) return partition_before(a.pos, b.pos);
    return partition_before(a.neg, b.neg);
  }
};

/// Irreducible of (Z/r) wr S_n: blocks[d] is the partition attached to the
/// linear character x -> zeta^{d x} of Z/r.  d = 0 is the trivial character.
struct AbelianWreathLabel {
  int r = 2;
  std::vector<Partition> blocks;

  AbelianWreathLabel() = default;
  AbelianWreathLabel(int modulus, std::vector<Partition> b) : r(modulus), blocks(std::move(b)) {
    if (r < 2) throw InvalidArgument("modulus must be at least 2");
    if (static_cast<int>(blocks.size()) > r)
      throw InvalidArgument("more blocks than residues mod " + std::to_string(r));
    blocks.resize(r);
  }
  static AbelianWreathLabel from_bn(const BnIrrepLabel& l) { return {2, {l.lambda, l.mu}}; }

  int n() const {
    int s = 0;
    for (const auto& b : blocks) s += b.size();
    return s;
  }
  Composition block_sizes() const {
    Composition c;
    for (const auto& b : blocks) c.push_back(b.size());
    return c;
  }
  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? "," : "") + blocks[i].to_string();
    return s + ")";
  }
  friend bool operator==(const AbelianWreathLabel& a, const AbelianWreathLabel& b) {
    return a.r == b.r && a.blocks == b.blocks;
  }
  friend bool operator<(const AbelianWreathLabel& a, const AbelianWreathLabel& b) {
    if (a.r != b.r) return a.r < b.r;
    for (std::size_t i = 0; i < a.blocks.size(); ++i)
      if (a.blocks[i] != b.blocks[i]) return partition_before(a.blocks[i], b.blocks[i]);
    return false;
  }
};

/// Sorted (label, multiplicity) pairs.
template <class Label>
class Multiset {
 public:
  struct Entry {
    Label label;
    Integer mult;
    friend bool operator==(const Entry& a, const Entry& b) {
      return a.label == b.label && a.mult == b.mult;
    }
  };

  void add(const Label& l, const Integer& m = 1) {
    if (m == 0) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), l,
                               [](const Entry& e, const Label& x) { return e.label < x; });
    if (it != entries_.end() && it->label == l) {
      it->mult += m;
      if (it->mult == 0) entries_.erase(it);
    } else {
      entries_.insert(it, Entry{l, m});
    }
  }
  void add_all(const Multiset& other) {
    for (const auto& e : other.entries_) add(e.label, e.mult);
  }

  Integer count(const Label& l) const {
    for (const auto& e : entries_)
      if (e.label == l) return e.mult;
    return 0;
  }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool multiplicity_free() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.mult == 1; });
  }
  friend bool operator==(const Multiset& a, const Multiset& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const Multiset& a, const Multiset& b) { return !(a == b); }

 private:
  std::vector<Entry> entries_;
};

using LabelMultiset = Multiset<BnIrrepLabel>;

inline LabelMultiset make_multiset(std::initializer_list<BnIrrepLabel> labels) {
  LabelMultiset m;
  for (const auto& l : labels) m.add(l);
  return m;
}

/// All labels of B_n in canonical order.
inline std::vector<BnIrrepLabel> bn_labels(int n) {
  std::vector<BnIrrepLabel> out;
  for (int k = n; k >= 0; --k)
    for (const auto& l : partitions_of(k))
      for (const auto& m : partitions_of(n - k)) out.push_back({l, m});
  return out;
}

/// All signed classes of B_n in canonical order.
inline std::vector<SignedClass> signed_classes(int n) {
  std::vector<SignedClass> out;
  for (int k = n; k >= 0; --k)
    for (const auto& p : partitions_of(k))
      for (const auto& q : partitions_of(n - k)) out.push_back({p, q});
  return out;
}

inline Integer bn_order(int n) {
  Integer r = factorial(n);
  for (int i = 0; i < n; ++i) r *= 2;
  return r;
}

/// Number of elements of B_n in the class.
inline Integer signed_class_size(const SignedClass& c) {
  Integer z = 1;
  for (const Partition* p : {&c.pos, &c.neg}) {
    Integer zp = centralizer_order(*p);
    for (int i = 0; i < p->length(); ++i) zp *= 2;
    z *= zp;
  }
  return bn_order(c.n()) / z;
}

inline BnIrrepLabel twist(const BnIrrepLabel& l, LinearChar chi) {
  switch (chi) {
    case LinearChar::One: return l;
    case LinearChar::Delta: return {l.mu, l.lambda};
    case LinearChar::Eps: return {conjugate(l.lambda), conjugate(l.mu)};
    case LinearChar::EpsDelta: return {conjugate(l.mu), conjugate(l.lambda)};
  }
  return l;
}

inline Integer dim_bn(const BnIrrepLabel& l) {
  return binomial(l.n(), l.mu.size()) * dimension_sym(l.lambda) * dimension_sym(l.mu);
}

/// The B_1 factor in B_{n-1} x B_1 (or the trivial S_1 for the passive case).
enum class B1Factor { PosOne, NegOne, PassiveS1 };

/// Induction from B_{n-1} x B_1 (or B_{n-1} x S_1) to B_n.
inline LabelMultiset branch_up_b1(const BnIrrepLabel& l, B1Factor factor) {
  LabelMultiset out;
  if (factor != B1Factor::NegOne)
    for (const auto& t : add_strip(l.lambda, 1, Strip::Horizontal)) out.add({t, l.mu});
  if (factor != B1Factor::PosOne)
    for (const auto& r : add_strip(l.mu, 1, Strip::Horizontal)) out.add({l.lambda, r});
  return out;
}

namespace detail {

inline void add_strip_terms(LabelMultiset& out, const BnIrrepLabel& l, bool on_lambda, Strip s) {
  const Partition& base = on_lambda ? l.lambda : l.mu;
  for (const auto& p : add_strip(base, 2, s)) out.add(on_lambda ? BnIrrepLabel{p, l.mu} : BnIrrepLabel{l.lambda, p});
}

inline void add_box_each(LabelMultiset& out, const BnIrrepLabel& l) {
  for (const auto& t : add_strip(l.lambda, 1, Strip::Horizontal))
    for (const auto& r : add_strip(l.mu, 1, Strip::Horizontal)) out.add({t, r});
}

}  // namespace detail

/// The five B_2 labels.
inline std::vector<BnIrrepLabel> b2_labels() { return bn_labels(2); }

/// Induction from B_{n-2} x B_2 to B_n of S^{lambda,mu} (x) W.
inline LabelMultiset branch_up_b2(const BnIrrepLabel& l, const BnIrrepLabel& w) {
  LabelMultiset out;
  const Partition two{2}, one_one{1, 1}, one{1}, none{};
  if (w == BnIrrepLabel{two, none}) {
    detail::add_strip_terms(out, l, true, Strip::Horizontal);
  } else if (w == BnIrrepLabel{one_one, none}) {
    detail::add_strip_terms(out, l, true, Strip::Vertical);
  } else if (w == BnIrrepLabel{one, one}) {
    detail::add_box_each(out, l);
  } else if (w == BnIrrepLabel{none, one_one}) {
    detail::add_strip_terms(out, l, false, Strip::Vertical);
  } else if (w == BnIrrepLabel{none, two}) {
    detail::add_strip_terms(out, l, false, Strip::Horizontal);
  } else {
    throw InvalidArgument("branch_up_b2: " + w.to_string() + " is not a label of B_2");
  }
  return out;
}

/// Order-4 and order-2 subgroups of B_2 with explicit branching formulas.
enum class Sub2 { D2, H2, S2bar };

inline int sub2_irreducible_count(Sub2 s) { return s == Sub2::S2bar ? 2 : 4; }

/// Labels of B_2 occurring in the induction of irreducible w of the subgroup.
/// D2:  V0 = res S^{(2),0},  V1 = res S^{(11),0},  V2 + V3 = res S^{(1),(1)}.
/// H2:  V0 = res S^{(2),0},  V2 = res S^{(11),0},  V1 + V3 = res S^{(1),(1)}.
/// S2bar: 0 is trivial, 1 is the sign.
inline std::vector<BnIrrepLabel> sub2_induced_labels(Sub2 s, int w) {
  if (w < 0 || w >= sub2_irreducible_count(s))
    throw InvalidArgument("branch_up_sub2: irreducible index " + std::to_string(w) +
                          " out of range");
  const Partition two{2}, one_one{1, 1}, one{1}, none{};
  const BnIrrepLabel triv{two, none}, sgn{one_one, none}, mid{one, one}, dtriv{none, two},
      dsgn{none, one_one};
  switch (s) {
    case Sub2::D2:
      if (w == 0) return {triv, dtriv};
      if (w == 1) return {sgn, dsgn};
      return {mid};
    case Sub2::H2:
      if (w == 0) return {triv, dsgn};
      if (w == 2) return {sgn, dtriv};
      return {mid};
    case Sub2::S2bar:
      if (w == 0) return {triv, mid, dtriv};
      return {sgn, mid, dsgn};
  }
  return {};
}

/// Induction from B_{n-2} x (D_2 | H_2 | S2bar) to B_n of S^{lambda,mu} (x) V_w.
inline LabelMultiset branch_up_sub2(const BnIrrepLabel& l, Sub2 s, int w) {
  LabelMultiset out;
  for (const auto& b : sub2_induced_labels(s, w)) out.add_all(branch_up_b2(l, b));
  return out;
}

/// Multiplicity of the irreducible u of (Z/r) wr S_n in the induction of S^w
/// from the passive S_n.
inline Integer passive_induction_mult(const Partition& w, const AbelianWreathLabel& u) {
  if (w.size() != u.n())
    throw InvalidArgument("passive_induction_mult: |w| = " + std::to_string(w.size()) +
                          " but the label has n = " + std::to_string(u.n()));
  return induced_multiplicity_sym(u.block_sizes(), u.blocks, w);
}

/// Decomposition of ind from (Z/r) wr S(b) to (Z/r) wr S_{|b|} of the
/// product of the (d; S^{factor_i}) into single-block labels (d; S^lambda).
inline Multiset<AbelianWreathLabel> nail_decompose(int r, int d, const Composition& b,
                                                   const std::vector<Partition>& factors) {
  if (d < 0 || d >= r) throw InvalidArgument("nail_decompose: residue out of range");
  if (b.size() != factors.size()) throw InvalidArgument("nail_decompose: size mismatch");
  int n = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (factors[i].size() != b[i]) throw InvalidArgument("nail_decompose: size mismatch");
    n += b[i];
  }
  Multiset<AbelianWreathLabel> out;
  for (const auto& lam : partitions_of(n)) {
    Integer m = induced_multiplicity_sym(b, factors, lam);
    if (m == 0) continue;
    std::vector<Partition> blocks(r);
    blocks[d] = lam;
    out.add(AbelianWreathLabel(r, std::move(blocks)), m);
  }
  return out;
}

enum class IndexTwoKernel { KerDelta, KerEps, KerEpsDelta };

inline LinearChar cutting_char(IndexTwoKernel k) {
  switch (k) {
    case IndexTwoKernel::KerDelta: return LinearChar::Delta;
    case IndexTwoKernel::KerEps: return LinearChar::Eps;
    case IndexTwoKernel::KerEpsDelta: return LinearChar::EpsDelta;
  }
  return LinearChar::One;
}

struct CliffordResult {
  bool splits = false;
  BnIrrepLabel partner;  // set when !splits
};

inline CliffordResult clifford_split(const BnIrrepLabel& l, IndexTwoKernel k) {
  BnIrrepLabel t = twist(l, cutting_char(k));
  if (t == l) return {true, {}};
  return {false, t};
}

namespace detail {

inline Integer bn_mn(const Partition& lam, const Partition& mu, const std::vector<std::pair<int, bool>>& cycles,
                     std::size_t idx) {
  if (idx == cycles.size()) return (lam.empty() && mu.empty()) ? 1 : 0;
  auto [len, negative] = cycles[idx];
  Integer total = 0;
  for (const auto& [rest, h] : remove_rim_hooks(lam, len)) {
    Integer v = bn_mn(rest, mu, cycles, idx + 1);
    total += (h % 2) ? -v : v;
  }
  for (const auto& [rest, h] : remove_rim_hooks(mu, len)) {
    Integer v = bn_mn(lam, rest, cycles, idx + 1);
    bool flip = (h % 2 != 0) != negative;
    total += flip ? -v : v;
  }
  return total;
}

}  // namespace detail

/// Character of S^{lambda,mu} at a signed class.  Signed Murnaghan-Nakayama:
/// a rim hook removed from mu for a negative cycle picks up an extra sign.
inline Integer bn_char_value(const BnIrrepLabel& l, const SignedClass& c) {
  if (l.n() != c.n())
    throw InvalidArgument("bn_char_value: label " + l.to_string() + " and class " + c.to_string() +
                          " have different n");
  std::vector<std::pair<int, bool>> cycles;
  for (int p : c.pos.parts()) cycles.emplace_back(p, false);
  for (int p : c.neg.parts()) cycles.emplace_back(p, true);
  std::stable_sort(cycles.begin(), cycles.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  return detail::bn_mn(l.lambda, l.mu, cycles, 0);
}

}  // namespace wreath
