#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wreath_element.hpp"

namespace wreath {

// ---------------------------------------------------------------------------
// Linear characters of the factors that occur in fiber products.

/// eps, delta and their product make sense on every subgroup of B_n.
/// chi1..chi3 are the D_2 characters with kernels diag(F), S2bar, S2bar';
/// on H_2 (cyclic of order 4) chi1 sends ((1,0),(12)) to i and chi2 = chi1^2.
enum class CharKind { One, Eps, Delta, EpsDelta, Chi1, Chi2, Chi3 };

inline const char* to_string(CharKind c) {
  switch (c) {
    case CharKind::One: return "one";
    case CharKind::Eps: return "eps";
    case CharKind::Delta: return "delta";
    case CharKind::EpsDelta: return "epsdelta";
    case CharKind::Chi1: return "chi1";
    case CharKind::Chi2: return "chi2";
    case CharKind::Chi3: return "chi3";
  }
  return "?";
}

inline CharKind to_char_kind(LinearChar c) {
  switch (c) {
    case LinearChar::One: return CharKind::One;
    case LinearChar::Eps: return CharKind::Eps;
    case LinearChar::Delta: return CharKind::Delta;
    case LinearChar::EpsDelta: return CharKind::EpsDelta;
  }
  return CharKind::One;
}

/// Value zeta_order^exponent of a linear character.
struct RootValue {
  int exponent = 0;
  int order = 1;
  int sign() const { return exponent == 0 ? 1 : (2 * exponent == order ? -1 : 0); }
};

enum class SmallDomain { Generic, D2, H2 };

namespace detail {

inline int parity_of(const std::vector<int>& f) {
  int s = 0;
  for (int x : f) s += x;
  return s % 2;
}

inline int odd_sigma(const WreathElement& x) { return x.sigma_perm().sign() < 0 ? 1 : 0; }

inline bool in_d2(const WreathElement& x) { return x.n() == 2 && x.f[0] == x.f[1]; }
inline bool in_h2(const WreathElement& x) {
  return x.n() == 2 && ((x.f[0] + x.f[1]) % 2) == odd_sigma(x);
}

}  // namespace detail

/// Value of a linear character.  For eps/delta the domain is all of B_n;
/// chi1..chi3 require the domain D_2 or H_2.
inline RootValue linear_char_value(CharKind chi, const WreathElement& x,
                                   SmallDomain domain = SmallDomain::Generic) {
  if (x.r != 2) throw InvalidArgument("linear characters are defined for r = 2");
  const int e = detail::odd_sigma(x), d = detail::parity_of(x.f);
  switch (chi) {
    case CharKind::One: return {0, 1};
    case CharKind::Eps: return {e, 2};
    case CharKind::Delta: return {d, 2};
    case CharKind::EpsDelta: return {(e + d) % 2, 2};
    default: break;
  }
  if (domain == SmallDomain::D2) {
    if (!detail::in_d2(x)) throw InvalidArgument("element is not in D_2");
    if (chi == CharKind::Chi1) return {e, 2};
    if (chi == CharKind::Chi2) return {x.f[0], 2};
    return {(e + x.f[0]) % 2, 2};
  }
  if (domain == SmallDomain::H2) {
    if (!detail::in_h2(x)) throw InvalidArgument("element is not in H_2");
    // H_2 = <c> with c = ((1,0),(12)), c^2 = ((1,1),id), c^3 = ((0,1),(12)).
    int k = 0;
    if (e == 0) k = x.f[0] ? 2 : 0;
    else k = x.f[0] ? 1 : 3;
    int power = chi == CharKind::Chi1 ? 1 : (chi == CharKind::Chi2 ? 2 : 3);
    int ex = (k * power) % 4;
    if (ex % 2 == 0) return {ex / 2, 2};
    return {ex, 4};
  }
  throw InvalidArgument(std::string("character ") + to_string(chi) + " needs the domain D(2) or H(2)");
}

// ---------------------------------------------------------------------------
// Descriptors.

enum class Family {
  Full,        // B(n) = F wr S_n
  Dn,          // ker delta
  Hn,          // ker eps*delta
  Jn,          // D_n meet H_n
  FwrAn,       // F wr A_n
  PassiveSn,   // {(0, sigma)}
  PassiveAn,   // {(0, sigma) : sigma even}
  Yn,          // {(0,s): s even} u {(1,s): s odd}
  DiagFSn,     // diag(F) x S_n
  DiagFAn,     // diag(F) x A_n
  Diag,        // diag(F)
  Base,        // F^n
  Trivial,     // {id}
  SbarPrime,   // {id, ((1,1),(12))}, only n = 2
  YoungWreath, // F wr S(a)
  Product,     // blocks of consecutive coordinates
  TwistedDiagonal,  // (A x B_1)_chi
  FiberProduct,     // {(a,b) : chiA(a) = chiB(b)}
  Raw
};

struct SubgroupDescriptor {
  Family family = Family::Trivial;
  int n = 0;                              // wreath index for the atomic families
  Composition composition;                // YoungWreath
  std::vector<SubgroupDescriptor> parts;  // Product (>=2), TwistedDiagonal (1), FiberProduct (2)
  CharKind char_a = CharKind::One;
  CharKind char_b = CharKind::One;
  int r = 2;                              // Raw
  std::vector<WreathElement> raw_gens;    // Raw

  static SubgroupDescriptor atom(Family f, int n) {
    SubgroupDescriptor d;
    d.family = f;
    d.n = n;
    return d;
  }
  static SubgroupDescriptor young(Composition a) {
    SubgroupDescriptor d;
    d.family = Family::YoungWreath;
    d.composition = std::move(a);
    return d;
  }
  static SubgroupDescriptor product(std::vector<SubgroupDescriptor> parts) {
    SubgroupDescriptor d;
    d.family = Family::Product;
    for (auto& p : parts) {
      if (p.family == Family::Product)
        for (auto& q : p.parts) d.parts.push_back(std::move(q));
      else
        d.parts.push_back(std::move(p));
    }
    return d;
  }
  static SubgroupDescriptor twisted(SubgroupDescriptor a, LinearChar chi) {
    SubgroupDescriptor d;
    d.family = Family::TwistedDiagonal;
    d.parts.push_back(std::move(a));
    d.char_a = to_char_kind(chi);
    return d;
  }
  static SubgroupDescriptor fiber(SubgroupDescriptor a, CharKind ca, SubgroupDescriptor b, CharKind cb) {
    SubgroupDescriptor d;
    d.family = Family::FiberProduct;
    d.parts.push_back(std::move(a));
    d.parts.push_back(std::move(b));
    d.char_a = ca;
    d.char_b = cb;
    return d;
  }
  static SubgroupDescriptor raw(int r, int n, std::vector<WreathElement> gens) {
    SubgroupDescriptor d;
    d.family = Family::Raw;
    d.r = r;
    d.n = n;
    d.raw_gens = std::move(gens);
    return d;
  }

  /// Wreath index of the ambient group this descriptor lives in.
  int wreath_n() const {
    switch (family) {
      case Family::YoungWreath: {
        int s = 0;
        for (int a : composition) s += a;
        return s;
      }
      case Family::Product: {
        int s = 0;
        for (const auto& p : parts) s += p.wreath_n();
        return s;
      }
      case Family::TwistedDiagonal: return parts.at(0).wreath_n() + 1;
      case Family::FiberProduct: return parts.at(0).wreath_n() + parts.at(1).wreath_n();
      default: return n;
    }
  }

  /// Twisted diagonals are rewritten as fiber products with B(1):delta;
  /// single-part products are unwrapped.
  SubgroupDescriptor normalized() const {
    SubgroupDescriptor d = *this;
    for (auto& p : d.parts) p = p.normalized();
    if (d.family == Family::TwistedDiagonal)
      return fiber(d.parts[0], d.char_a, atom(Family::Full, 1), CharKind::Delta);
    if (d.family == Family::Product && d.parts.size() == 1) return d.parts[0];
    return d;
  }
};

// ---------------------------------------------------------------------------
// Subgroups.

/// A subgroup of (Z/r) wr S_n given by generators; the element set is built
/// on first use and shared by copies.
class Subgroup {
 public:
  Subgroup() : Subgroup(2, 0, {}) {}
  Subgroup(int r, int n, std::vector<WreathElement> gens, std::string label = {})
      : state_(std::make_shared<State>()) {
    for (const auto& g : gens)
      if (g.r != r || g.n() != n) throw InvalidArgument("generator does not lie in the ambient group");
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const WreathElement& g) { return g.is_identity(); }),
               gens.end());
    state_->r = r;
    state_->n = n;
    state_->gens = std::move(gens);
    state_->label = std::move(label);
  }

  int r() const { return state_->r; }
  int n() const { return state_->n; }
  const std::vector<WreathElement>& generators() const { return state_->gens; }
  const std::string& label() const { return state_->label; }

  std::vector<Perm> perm_generators() const {
    std::vector<Perm> out;
    for (const auto& g : state_->gens) out.push_back(embed_sym(g));
    return out;
  }

  /// The element set as a permutation group on r*n points.  The budget of the
  /// first call applies.
  const FiniteGroup& group(const Budget& budget = {}) const { return *group_ptr(budget); }
  GroupPtr group_ptr(const Budget& budget = {}) const {
    std::call_once(state_->once, [&] {
      state_->group = FiniteGroup::generate(r() * n(), perm_generators(), budget);
    });
    return state_->group;
  }
  std::size_t order(const Budget& budget = {}) const { return group(budget).order(); }

  std::vector<WreathElement> elements(const Budget& budget = {}) const {
    const auto& g = group(budget);
    std::vector<WreathElement> out;
    out.reserve(g.order());
    for (std::size_t i = 0; i < g.order(); ++i) out.push_back(decode(g.element(i), r()));
    return out;
  }

  bool contains(const WreathElement& x, const Budget& budget = {}) const {
    return group(budget).contains(embed_sym(x));
  }

  /// Digest of the canonical sorted element encoding.
  std::string fingerprint(const Budget& budget = {}) const { return group(budget).digest(); }

 private:
  struct State {
    int r = 2, n = 0;
    std::vector<WreathElement> gens;
    std::string label;
    std::once_flag once;
    GroupPtr group;
  };
  std::shared_ptr<State> state_;
};

namespace detail {

inline WreathElement unit_flip(int r, int n, int i) {
  std::vector<int> f(n, 0);
  f[i] = 1;
  return WreathElement::flips(r, f);
}

inline WreathElement pair_flip(int r, int n, int i, int j) {
  std::vector<int> f(n, 0);
  f[i] = 1;
  f[j] = 1;
  return WreathElement::flips(r, f);
}

inline WreathElement transposition(int r, int n, int i, int j) {
  std::vector<int> s(n);
  for (int k = 0; k < n; ++k) s[k] = k;
  std::swap(s[i], s[j]);
  return WreathElement::passive(r, s);
}

inline WreathElement three_cycle(int r, int n, int a, int b, int c) {
  std::vector<int> s(n);
  for (int k = 0; k < n; ++k) s[k] = k;
  s[a] = b;
  s[b] = c;
  s[c] = a;
  return WreathElement::passive(r, s);
}

inline std::vector<WreathElement> coxeter_s(int r, int n) {
  std::vector<WreathElement> g;
  for (int i = 0; i + 1 < n; ++i) g.push_back(transposition(r, n, i, i + 1));
  return g;
}

inline std::vector<WreathElement> alternating_gens(int r, int n) {
  std::vector<WreathElement> g;
  for (int i = 2; i < n; ++i) g.push_back(three_cycle(r, n, 0, 1, i));
  return g;
}

inline std::vector<WreathElement> even_flips(int r, int n) {
  std::vector<WreathElement> g;
  for (int i = 0; i + 1 < n; ++i) g.push_back(pair_flip(r, n, i, i + 1));
  return g;
}

inline void append(std::vector<WreathElement>& a, const std::vector<WreathElement>& b) {
  a.insert(a.end(), b.begin(), b.end());
}

inline void require_r2(int r, const char* what) {
  if (r != 2) throw InvalidArgument(std::string(what) + " is only defined for r = 2");
}

inline SmallDomain domain_of(const SubgroupDescriptor& d) {
  if (d.family == Family::Dn && d.n == 2) return SmallDomain::D2;
  if (d.family == Family::Hn && d.n == 2) return SmallDomain::H2;
  return SmallDomain::Generic;
}

inline int char_bit(CharKind c, const WreathElement& x, SmallDomain dom) {
  RootValue v = linear_char_value(c, x, dom);
  if (v.order > 2) throw InvalidArgument(std::string("character ") + to_string(c) +
                                         " has order 4 and cannot cut out an index-2 subgroup");
  return v.exponent;
}

/// Generators of the kernel of an order-2 character (Schreier generators for
/// the transversal {1, t}), plus t itself when the character is nontrivial.
inline std::pair<std::vector<WreathElement>, std::optional<WreathElement>> kernel_gens(
    const std::vector<WreathElement>& gens, CharKind c, SmallDomain dom) {
  std::optional<WreathElement> t;
  for (const auto& g : gens)
    if (char_bit(c, g, dom)) {
      t = g;
      break;
    }
  if (!t) return {gens, std::nullopt};
  WreathElement tinv = inverse(*t);
  std::vector<WreathElement> out;
  for (const auto& g : gens) {
    if (char_bit(c, g, dom)) {
      out.push_back(g * tinv);
      out.push_back(*t * g);
    } else {
      out.push_back(g);
      out.push_back(*t * g * tinv);
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const WreathElement& x) { return x.is_identity(); }),
            out.end());
  return {out, t};
}

}  // namespace detail

/// Generators of the described subgroup of (Z/r) wr S_{d.wreath_n()}.
inline std::vector<WreathElement> descriptor_generators(const SubgroupDescriptor& d, int r = 2) {
  using namespace detail;
  const int n = d.n;
  std::vector<WreathElement> g;
  auto need_n = [&](int lo) {
    if (n < lo) throw InvalidArgument("descriptor needs n >= " + std::to_string(lo));
  };
  switch (d.family) {
    case Family::Full:
      need_n(0);
      if (n > 0) g.push_back(unit_flip(r, n, 0));
      append(g, coxeter_s(r, n));
      return g;
    case Family::Base:
      need_n(0);
      for (int i = 0; i < n; ++i) g.push_back(unit_flip(r, n, i));
      return g;
    case Family::Trivial:
      need_n(0);
      return g;
    case Family::Dn:
      require_r2(r, "D(n)");
      need_n(1);
      append(g, even_flips(r, n));
      append(g, coxeter_s(r, n));
      return g;
    case Family::Hn:
      require_r2(r, "H(n)");
      need_n(1);
      append(g, even_flips(r, n));
      for (auto s : coxeter_s(r, n)) {
        s.f[0] = 1;
        g.push_back(s);
      }
      return g;
    case Family::Jn:
      require_r2(r, "J(n)");
      need_n(1);
      append(g, even_flips(r, n));
      append(g, alternating_gens(r, n));
      return g;
    case Family::FwrAn:
      need_n(1);
      for (int i = 0; i < n; ++i) g.push_back(unit_flip(r, n, i));
      append(g, alternating_gens(r, n));
      return g;
    case Family::PassiveSn:
      need_n(1);
      return coxeter_s(r, n);
    case Family::PassiveAn:
      need_n(1);
      return alternating_gens(r, n);
    case Family::Yn:
      require_r2(r, "Y(n)");
      need_n(1);
      for (auto s : coxeter_s(r, n)) {
        std::fill(s.f.begin(), s.f.end(), 1);
        g.push_back(s);
      }
      return g;
    case Family::Diag:
    case Family::DiagFSn:
    case Family::DiagFAn:
      need_n(1);
      g.push_back(WreathElement::flips(r, std::vector<int>(n, 1)));
      if (d.family == Family::DiagFSn) append(g, coxeter_s(r, n));
      if (d.family == Family::DiagFAn) append(g, alternating_gens(r, n));
      return g;
    case Family::SbarPrime: {
      require_r2(r, "Sp(2)");
      if (n != 2) throw InvalidArgument("Sp is only defined for n = 2");
      g.push_back(WreathElement(r, {1, 1}, {1, 0}));
      return g;
    }
    case Family::YoungWreath: {
      std::vector<SubgroupDescriptor> parts;
      for (int a : d.composition) {
        if (a < 0) throw InvalidArgument("young: negative part");
        parts.push_back(SubgroupDescriptor::atom(Family::Full, a));
      }
      return descriptor_generators(SubgroupDescriptor::product(parts), r);
    }
    case Family::Product: {
      const int total = d.wreath_n();
      int offset = 0;
      for (const auto& p : d.parts) {
        for (const auto& x : descriptor_generators(p, r)) g.push_back(shift(x, offset, total));
        offset += p.wreath_n();
      }
      return g;
    }
    case Family::TwistedDiagonal:
      return descriptor_generators(d.normalized(), r);
    case Family::FiberProduct: {
      require_r2(r, "fiber products");
      const auto& a = d.parts.at(0);
      const auto& b = d.parts.at(1);
      const int na = a.wreath_n(), nb = b.wreath_n(), total = na + nb;
      auto [ka, ta] = kernel_gens(descriptor_generators(a, r), d.char_a, domain_of(a));
      auto [kb, tb] = kernel_gens(descriptor_generators(b, r), d.char_b, domain_of(b));
      for (const auto& x : ka) g.push_back(shift(x, 0, total));
      for (const auto& x : kb) g.push_back(shift(x, na, total));
      // With one character trivial the result is ker x full factor, already listed.
      if (ta && tb) g.push_back(shift(*ta, 0, total) * shift(*tb, na, total));
      return g;
    }
    case Family::Raw:
      for (const auto& x : d.raw_gens)
        if (x.r != d.r || x.n() != d.n) throw InvalidArgument("raw generator has the wrong shape");
      return d.raw_gens;
  }
  return g;
}

inline std::string to_string(const SubgroupDescriptor& d);

inline Subgroup make_subgroup(const SubgroupDescriptor& d, int r = 2) {
  int rr = d.family == Family::Raw ? d.r : r;
  return Subgroup(rr, d.wreath_n(), descriptor_generators(d, rr), to_string(d));
}

/// The ambient group (Z/r) wr S_n.
inline Subgroup full_group(int n, int r = 2) {
  return make_subgroup(SubgroupDescriptor::atom(Family::Full, n), r);
}

/// Order of the described subgroup from the family formulas, without
/// materializing it.  Raw descriptors are materialized.
inline Integer descriptor_order(const SubgroupDescriptor& d, int r = 2) {
  auto fact = [](int n) { return factorial(n); };
  Integer rn = 1;
  for (int i = 0; i < d.n; ++i) rn *= r;
  const int n = d.n;
  switch (d.family) {
    case Family::Full: return rn * fact(n);
    case Family::Dn: case Family::Hn: return n >= 1 ? rn * fact(n) / 2 : Integer(1);
    case Family::Jn: return n >= 2 ? rn * fact(n) / 4 : Integer(1);
    case Family::FwrAn: return n >= 2 ? rn * fact(n) / 2 : rn;
    case Family::PassiveSn: case Family::Yn: return fact(n);
    case Family::PassiveAn: return n >= 2 ? fact(n) / 2 : Integer(1);
    case Family::DiagFSn: return r * fact(n);
    case Family::DiagFAn: return n >= 2 ? r * fact(n) / 2 : Integer(r);
    case Family::Diag: return r;
    case Family::Base: return rn;
    case Family::Trivial: return 1;
    case Family::SbarPrime: return 2;
    case Family::YoungWreath: {
      Integer o = 1;
      for (int a : d.composition) o *= descriptor_order(SubgroupDescriptor::atom(Family::Full, a), r);
      return o;
    }
    case Family::Product: {
      Integer o = 1;
      for (const auto& p : d.parts) o *= descriptor_order(p, r);
      return o;
    }
    case Family::TwistedDiagonal: return descriptor_order(d.normalized(), r);
    case Family::FiberProduct: {
      const auto& a = d.parts.at(0);
      const auto& b = d.parts.at(1);
      bool ta = detail::kernel_gens(descriptor_generators(a, r), d.char_a, detail::domain_of(a)).second.has_value();
      bool tb = detail::kernel_gens(descriptor_generators(b, r), d.char_b, detail::domain_of(b)).second.has_value();
      Integer o = descriptor_order(a, r) * descriptor_order(b, r);
      return ta || tb ? o / 2 : o;
    }
    case Family::Raw: return Integer(make_subgroup(d, r).order());
  }
  return 1;
}

// ---------------------------------------------------------------------------
// Projection data.

/// gamma_K: the image of K in S_n, as a permutation group on n points.
inline GroupPtr gamma(const Subgroup& k, const Budget& budget = {}) {
  std::vector<Perm> gens;
  for (const auto& g : k.generators()) gens.push_back(g.sigma_perm());
  return FiniteGroup::generate(k.n(), gens, budget);
}

/// Elements of K lying over sigma = g.
inline std::vector<WreathElement> gamma_fiber(const Subgroup& k, const Perm& g, const Budget& budget = {}) {
  std::vector<WreathElement> out;
  for (auto& x : k.elements(budget))
    if (x.sigma_perm() == g) out.push_back(std::move(x));
  return out;
}

/// Least number of nonzero coordinates over nonidentity elements of Gamma^id.
inline std::optional<int> m_value(const Subgroup& k, const Budget& budget = {}) {
  std::optional<int> best;
  for (const auto& x : gamma_fiber(k, Perm(k.n()), budget)) {
    if (x.is_identity()) continue;
    int c = x.flip_count();
    if (!best || c < *best) best = c;
  }
  return best;
}

namespace detail {

inline void require_split(const Subgroup& k, int kk) {
  const int n = k.n();
  if (kk < 0 || kk > n) throw InvalidArgument("lambda_split: k out of range");
  for (const auto& g : k.generators())
    for (int i = 0; i < n; ++i)
      if ((i < n - kk) != (g.sigma[i] < n - kk))
        throw InvalidArgument("gamma_K is not contained in S_{n-k} x S_k");
}

}  // namespace detail

/// Component projections of K inside B_{n-k} x B_k, as subgroups of B_{n-k} and B_k.
inline std::pair<Subgroup, Subgroup> lambda_split(const Subgroup& k, int kk) {
  detail::require_split(k, kk);
  const int n = k.n();
  std::vector<WreathElement> ga, gb;
  for (const auto& g : k.generators()) {
    ga.push_back(block_part(g, 0, n - kk));
    gb.push_back(block_part(g, n - kk, kk));
  }
  return {Subgroup(k.r(), n - kk, ga), Subgroup(k.r(), kk, gb)};
}

/// L = { a : (a, id) in K }, a subgroup of B_{n-k}.
inline Subgroup aux_L(const Subgroup& k, int kk, const Budget& budget = {}) {
  detail::require_split(k, kk);
  const int n = k.n();
  std::vector<WreathElement> gens;
  for (const auto& x : k.elements(budget)) {
    if (block_part(x, n - kk, kk).is_identity()) gens.push_back(block_part(x, 0, n - kk));
  }
  return Subgroup(k.r(), n - kk, gens);
}

/// The outer automorphism (f, s) -> (f + 1, s) for odd s of B_n.
inline WreathElement psi_automorphism(const WreathElement& x) {
  if (x.r != 2) throw InvalidArgument("psi is defined for r = 2");
  WreathElement y = x;
  if (x.sigma_perm().sign() < 0)
    for (int& v : y.f) v ^= 1;
  return y;
}

}  // namespace wreath

#include "descriptor_text.hpp"
