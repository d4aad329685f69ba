#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "char_oracle.hpp"
#include "lattice.hpp"

namespace wreath {

enum class Verdict { StrongGelfand, Not, OutsideFastPath };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::StrongGelfand: return "strong_gelfand";
    case Verdict::Not: return "not_strong_gelfand";
    case Verdict::OutsideFastPath: return "outside_fast_path";
  }
  return "?";
}

/// Which block of the projection gamma_K an entry belongs to.
enum class GammaBlock { Sn, An, Sn1S1, Sn2S2, Small };

inline const char* to_string(GammaBlock b) {
  switch (b) {
    case GammaBlock::Sn: return "S_n";
    case GammaBlock::An: return "A_n";
    case GammaBlock::Sn1S1: return "S_{n-1}xS_1";
    case GammaBlock::Sn2S2: return "S_{n-2}xS_2";
    case GammaBlock::Small: return "small";
  }
  return "?";
}

/// Condition on n under which a catalog entry is strong Gelfand.
enum class Rule { Always, Never, IfOdd, IfEven, IfAtMost5, IfNot2Mod4, IfN3 };

inline bool rule_holds(Rule r, int n) {
  switch (r) {
    case Rule::Always: return true;
    case Rule::Never: return false;
    case Rule::IfOdd: return n % 2 == 1;
    case Rule::IfEven: return n % 2 == 0;
    case Rule::IfAtMost5: return n <= 5;
    case Rule::IfNot2Mod4: return n % 4 != 2;
    case Rule::IfN3: return n == 3;
  }
  return false;
}

inline const char* rule_text(Rule r) {
  switch (r) {
    case Rule::Always: return "always";
    case Rule::Never: return "never";
    case Rule::IfOdd: return "n odd";
    case Rule::IfEven: return "n even";
    case Rule::IfAtMost5: return "n <= 5";
    case Rule::IfNot2Mod4: return "n != 2 mod 4";
    case Rule::IfN3: return "n = 3";
  }
  return "?";
}

struct CatalogEntry {
  std::string key;    // stable name with m for the complement index
  GammaBlock block;
  Rule rule;
  int min_n;          // entry exists for min_n <= n <= max_n
  int max_n;
  int min_n_negative; // below this a failed rule gives OutsideFastPath
  bool in_table;      // a row of the large-n table when the rule holds
  std::string conjugate_of;  // key of a conjugate entry, collapsed in counts
  std::function<SubgroupDescriptor(int)> build;
  std::string note;

  bool exists_at(int n) const { return n >= min_n && n <= max_n; }
};

namespace detail {

inline SubgroupDescriptor at(Family f, int n) { return SubgroupDescriptor::atom(f, n); }
inline SubgroupDescriptor prod(SubgroupDescriptor a, SubgroupDescriptor b) {
  return SubgroupDescriptor::product({std::move(a), std::move(b)});
}

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  constexpr int kAny = 1 << 20;
  auto add = [&](std::string key, GammaBlock b, Rule r, int min_n, int max_n, int neg, bool table,
                 std::function<SubgroupDescriptor(int)> f, std::string note = {}, std::string conj = {}) {
    c.push_back({std::move(key), b, r, min_n, max_n, neg, table, std::move(conj), std::move(f), std::move(note)});
  };
  using F = Family;

  // gamma_K = S_n
  add("B(n)", GammaBlock::Sn, Rule::Always, 2, kAny, 2, true, [](int n) { return at(F::Full, n); });
  add("D(n)", GammaBlock::Sn, Rule::Always, 2, kAny, 2, true, [](int n) { return at(F::Dn, n); });
  add("H(n)", GammaBlock::Sn, Rule::Always, 2, kAny, 2, true, [](int n) { return at(F::Hn, n); });
  add("S(n)", GammaBlock::Sn, Rule::IfAtMost5, 2, kAny, 2, false, [](int n) { return at(F::PassiveSn, n); });
  add("Y(n)", GammaBlock::Sn, Rule::IfAtMost5, 2, kAny, 2, false, [](int n) { return at(F::Yn, n); });
  add("diagS(n)", GammaBlock::Sn, Rule::IfAtMost5, 2, kAny, 2, false, [](int n) { return at(F::DiagFSn, n); });

  // gamma_K = A_n
  add("FA(n)", GammaBlock::An, Rule::Always, 3, kAny, 3, true, [](int n) { return at(F::FwrAn, n); });
  add("J(n)", GammaBlock::An, Rule::IfNot2Mod4, 3, kAny, 3, true, [](int n) { return at(F::Jn, n); });
  add("diagA(n)", GammaBlock::An, Rule::IfN3, 3, kAny, 3, false, [](int n) { return at(F::DiagFAn, n); });
  add("A(n)", GammaBlock::An, Rule::IfN3, 3, kAny, 3, false, [](int n) { return at(F::PassiveAn, n); });

  // gamma_K = S_{n-1} x S_1, m = n - 1
  auto b1 = [](F left, F right) {
    return [left, right](int n) { return prod(at(left, n - 1), at(right, 1)); };
  };
  auto tw = [](F left, LinearChar chi) {
    return [left, chi](int n) { return SubgroupDescriptor::twisted(at(left, n - 1), chi); };
  };
  const GammaBlock g1 = GammaBlock::Sn1S1;
  add("B(m)xB(1)", g1, Rule::Always, 3, kAny, 3, true, b1(F::Full, F::Full));
  add("B(m)xtriv(1)", g1, Rule::Always, 3, kAny, 3, true, b1(F::Full, F::Trivial));
  add("D(m)xB(1)", g1, Rule::Always, 3, kAny, 3, true, b1(F::Dn, F::Full));
  add("D(m)xtriv(1)", g1, Rule::IfOdd, 3, kAny, 3, true, b1(F::Dn, F::Trivial));
  add("H(m)xB(1)", g1, Rule::Always, 3, kAny, 3, true, b1(F::Hn, F::Full));
  add("H(m)xtriv(1)", g1, Rule::IfOdd, 3, kAny, 3, true, b1(F::Hn, F::Trivial));
  add("twist(B(m),delta)", g1, Rule::IfOdd, 3, kAny, 3, true, tw(F::Full, LinearChar::Delta));
  add("twist(B(m),epsdelta)", g1, Rule::IfOdd, 3, kAny, 3, true, tw(F::Full, LinearChar::EpsDelta));
  add("twist(B(m),eps)", g1, Rule::Always, 3, kAny, 3, true, tw(F::Full, LinearChar::Eps));
  add("twist(D(m),epsdelta)", g1, Rule::IfOdd, 3, kAny, 3, true, tw(F::Dn, LinearChar::EpsDelta));
  add("twist(H(m),delta)", g1, Rule::IfOdd, 3, kAny, 3, true, tw(F::Hn, LinearChar::Delta));

  // gamma_K = S_{n-2} x S_2, m = n - 2.  Negative claims are proven for n >= 8.
  const GammaBlock g2 = GammaBlock::Sn2S2;
  constexpr int kNeg2 = 8;
  auto b2 = [](F left, F right) {
    return [left, right](int n) { return prod(at(left, n - 2), at(right, 2)); };
  };
  auto fib = [](F left, CharKind ca, F right, CharKind cb) {
    return [=](int n) { return SubgroupDescriptor::fiber(at(left, n - 2), ca, at(right, 2), cb); };
  };
  add("B(m)xB(2)", g2, Rule::Always, 4, kAny, kNeg2, true, b2(F::Full, F::Full));
  add("B(m)xD(2)", g2, Rule::Always, 4, kAny, kNeg2, true, b2(F::Full, F::Dn));
  add("B(m)xS(2)", g2, Rule::Always, 4, kAny, kNeg2, true, b2(F::Full, F::PassiveSn));
  add("B(m)xH(2)", g2, Rule::Always, 4, kAny, kNeg2, true, b2(F::Full, F::Hn));
  for (F left : {F::Dn, F::Hn})
    for (F right : {F::Dn, F::Full, F::Hn}) {
      std::string key = std::string(left == F::Dn ? "D" : "H") + "(m)x" +
                        (right == F::Dn ? "D" : right == F::Full ? "B" : "H") + "(2)";
      add(key, g2, Rule::IfOdd, 4, kAny, kNeg2, true, b2(left, right));
    }
  add("D(m)xS(2)", g2, Rule::Never, 4, kAny, kNeg2, false, b2(F::Dn, F::PassiveSn));
  add("H(m)xS(2)", g2, Rule::Never, 4, kAny, kNeg2, false, b2(F::Hn, F::PassiveSn));
  add("fiber(B(m):delta,S(2):eps)", g2, Rule::Never, 4, kAny, kNeg2, false,
      fib(F::Full, CharKind::Delta, F::PassiveSn, CharKind::Eps));
  add("fiber(B(m):epsdelta,S(2):eps)", g2, Rule::Never, 4, kAny, kNeg2, false,
      fib(F::Full, CharKind::EpsDelta, F::PassiveSn, CharKind::Eps));

  // Index-2 fibers of B(m) x D(2).  The large-n table lists three of them without
  // a parity condition; per character the parity alternates, and the chi3 forms
  // are conjugate to the chi2 forms.
  const std::string d2note = "three classes up to conjugacy in either parity";
  for (CharKind ca : {CharKind::Delta, CharKind::EpsDelta}) {
    std::string cs = to_string(ca);
    add("fiber(B(m):" + cs + ",D(2):chi1)", g2, Rule::IfOdd, 4, kAny, kNeg2, true,
        fib(F::Full, ca, F::Dn, CharKind::Chi1), d2note);
    add("fiber(B(m):" + cs + ",D(2):chi2)", g2, Rule::IfEven, 4, kAny, kNeg2, true,
        fib(F::Full, ca, F::Dn, CharKind::Chi2), d2note);
    add("fiber(B(m):" + cs + ",D(2):chi3)", g2, Rule::IfEven, 4, kAny, kNeg2, false,
        fib(F::Full, ca, F::Dn, CharKind::Chi3), d2note, "fiber(B(m):" + cs + ",D(2):chi2)");
  }
  add("fiber(B(m):eps,D(2):chi2)", g2, Rule::Always, 4, kAny, kNeg2, true,
      fib(F::Full, CharKind::Eps, F::Dn, CharKind::Chi2), d2note);
  add("fiber(B(m):eps,D(2):chi3)", g2, Rule::Always, 4, kAny, kNeg2, false,
      fib(F::Full, CharKind::Eps, F::Dn, CharKind::Chi3), d2note, "fiber(B(m):eps,D(2):chi2)");
  add("fiber(B(m):eps,D(2):chi1)", g2, Rule::Never, 4, kAny, kNeg2, false,
      fib(F::Full, CharKind::Eps, F::Dn, CharKind::Chi1));

  // Index-2 fibers of B(m) x H(2): only chi2 has order 2.
  add("fiber(B(m):delta,H(2):chi2)", g2, Rule::IfOdd, 4, kAny, kNeg2, true,
      fib(F::Full, CharKind::Delta, F::Hn, CharKind::Chi2));
  add("fiber(B(m):epsdelta,H(2):chi2)", g2, Rule::IfOdd, 4, kAny, kNeg2, true,
      fib(F::Full, CharKind::EpsDelta, F::Hn, CharKind::Chi2));
  add("fiber(B(m):eps,H(2):chi2)", g2, Rule::Never, 4, kAny, kNeg2, false,
      fib(F::Full, CharKind::Eps, F::Hn, CharKind::Chi2));

  // Index-2 fibers of B(m) x B(2).
  for (CharKind ca : {CharKind::Delta, CharKind::EpsDelta, CharKind::Eps})
    for (CharKind cb : {CharKind::Delta, CharKind::EpsDelta, CharKind::Eps}) {
      bool positive = ca != CharKind::Eps;
      add(std::string("fiber(B(m):") + to_string(ca) + ",B(2):" + to_string(cb) + ")", g2,
          positive ? Rule::IfOdd : Rule::Never, 4, kAny, kNeg2, positive, fib(F::Full, ca, F::Full, cb));
    }

  // Small cases.
  add("S(2)xB(1)", GammaBlock::Small, Rule::IfN3, 3, 3, 3, false,
      [](int) { return prod(at(F::PassiveSn, 2), at(F::Full, 1)); }, "extra class found by search at n = 3");
  add("B(1)xtriv(1)", GammaBlock::Small, Rule::Always, 2, 2, 2, false, b1(F::Full, F::Trivial),
      "gamma_K trivial in B(2)");
  add("triv(1)xB(1)", GammaBlock::Small, Rule::Always, 2, 2, 2, false,
      [](int) { return prod(at(F::Trivial, 1), at(F::Full, 1)); }, "gamma_K trivial in B(2)", "B(1)xtriv(1)");
  add("base(2)", GammaBlock::Small, Rule::Always, 2, 2, 2, false, [](int) { return at(F::Base, 2); },
      "gamma_K trivial in B(2)");
  add("Sp(2)", GammaBlock::Small, Rule::Always, 2, 2, 2, false, [](int) { return at(F::SbarPrime, 2); },
      "conjugate of the passive S_2 in B(2)", "S(n)");
  add("diag(2)", GammaBlock::Small, Rule::Never, 2, 2, 2, false, [](int) { return at(F::Diag, 2); },
      "gamma_K trivial in B(2)");
  add("triv(2)", GammaBlock::Small, Rule::Never, 2, 2, 2, false, [](int) { return at(F::Trivial, 2); },
      "gamma_K trivial in B(2)");
  return c;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = detail::build_catalog();
  return c;
}

inline const CatalogEntry& catalog_entry(const std::string& key) {
  for (const auto& e : catalog())
    if (e.key == key) return e;
  throw InvalidArgument("no catalog entry '" + key + "'");
}

/// Rewrites a descriptor into a canonical text: twists become fibers, Young
/// wreaths become products of B factors, empty factors vanish and index-1
/// atoms collapse to B(1) or triv(1).
inline SubgroupDescriptor canonical_descriptor(const SubgroupDescriptor& d0) {
  SubgroupDescriptor d = d0.normalized();
  switch (d.family) {
    case Family::YoungWreath: {
      std::vector<SubgroupDescriptor> parts;
      for (int a : d.composition) parts.push_back(SubgroupDescriptor::atom(Family::Full, a));
      return canonical_descriptor(SubgroupDescriptor::product(parts));
    }
    case Family::Product: {
      std::vector<SubgroupDescriptor> parts;
      for (const auto& p : d.parts) {
        SubgroupDescriptor q = canonical_descriptor(p);
        if (q.wreath_n() == 0) continue;
        parts.push_back(std::move(q));
      }
      if (parts.empty()) return SubgroupDescriptor::atom(Family::Trivial, 0);
      if (parts.size() == 1) return parts[0];
      return SubgroupDescriptor::product(std::move(parts));
    }
    case Family::FiberProduct:
      for (auto& p : d.parts) p = canonical_descriptor(p);
      return d;
    case Family::Raw:
      return d;
    default:
      if (d.n == 1) {
        switch (d.family) {
          case Family::Full: case Family::FwrAn: case Family::Diag: case Family::Base:
          case Family::DiagFSn: case Family::DiagFAn:
            return SubgroupDescriptor::atom(Family::Full, 1);
          default:
            return SubgroupDescriptor::atom(Family::Trivial, 1);
        }
      }
      return d;
  }
}

inline std::string canonical_text(const SubgroupDescriptor& d) { return to_string(canonical_descriptor(d)); }

struct FamilyDecision {
  SubgroupDescriptor descriptor;
  int n = 0;
  Verdict verdict = Verdict::OutsideFastPath;
  std::string source;
  std::string key;  // matching catalog entry, empty when none
};

inline std::string decision_source(const CatalogEntry& e) {
  std::string s = std::string("gamma ") + to_string(e.block) + ": strong Gelfand iff " + rule_text(e.rule);
  if (e.rule == Rule::Always) s = std::string("gamma ") + to_string(e.block) + ": always strong Gelfand";
  if (e.rule == Rule::Never) s = std::string("gamma ") + to_string(e.block) + ": never strong Gelfand";
  if (!e.note.empty()) s += " (" + e.note + ")";
  return s;
}

/// Verdict of the named-family rules.  Exact lookup of the canonical
/// descriptor text among the catalog entries instantiated at n.
inline FamilyDecision family_decision(const SubgroupDescriptor& d, int n) {
  FamilyDecision out;
  out.descriptor = d;
  out.n = n;
  if (d.wreath_n() != n) {
    out.source = "descriptor index " + std::to_string(d.wreath_n()) + " differs from n";
    return out;
  }
  const std::string text = canonical_text(d);
  for (const auto& e : catalog()) {
    if (!e.exists_at(n)) continue;
    if (canonical_text(e.build(n)) != text) continue;
    bool sg = rule_holds(e.rule, n);
    out.key = e.key;
    if (sg) {
      out.verdict = Verdict::StrongGelfand;
      out.source = decision_source(e);
    } else if (n >= e.min_n_negative) {
      out.verdict = Verdict::Not;
      out.source = decision_source(e);
    } else {
      out.source = decision_source(e) + "; negative claim proven only for n >= " + std::to_string(e.min_n_negative);
    }
    return out;
  }
  out.source = "not a classified family";
  return out;
}

// ---------------------------------------------------------------------------
// gamma gate.

struct GateResult {
  bool pass = true;
  std::string reason;
};

/// For n >= 7 a strong Gelfand K has gamma_K among S_n, A_n, S_{n-1}xS_1 and
/// S_{n-2}xS_2 up to relabeling.  The check uses the orbits of gamma_K and its
/// order.  Inactive below 7.
inline GateResult gamma_gate(const Subgroup& k, int n, const Budget& budget = {}) {
  if (k.r() != 2) throw InvalidArgument("gamma_gate requires r = 2");
  if (n < 7) return {true, "gate inactive for n < 7"};
  // orbits of gamma_K on {0..n-1}
  std::vector<int> comp(n);
  for (int i = 0; i < n; ++i) comp[i] = i;
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (const auto& g : k.generators())
    for (int i = 0; i < n; ++i) comp[find(i)] = find(g.sigma[i]);
  std::map<int, int> sizes;
  for (int i = 0; i < n; ++i) ++sizes[find(i)];
  std::vector<int> orbit_sizes;
  for (auto& [root, s] : sizes) orbit_sizes.push_back(s);
  std::sort(orbit_sizes.rbegin(), orbit_sizes.rend());

  Budget b = budget;
  b.max_order = std::max<std::size_t>(b.max_order, 4000000);
  const std::size_t order = gamma(k, b)->order();
  auto fact = [](int m) {
    std::size_t f = 1;
    for (int i = 2; i <= m; ++i) f *= static_cast<std::size_t>(i);
    return f;
  };
  if (orbit_sizes == std::vector<int>{n}) {
    if (order == fact(n)) return {true, "gamma_K = S_n"};
    if (order == fact(n) / 2) return {true, "gamma_K = A_n"};
  }
  if (orbit_sizes == std::vector<int>{n - 1, 1} && order == fact(n - 1)) return {true, "gamma_K = S_{n-1}xS_1"};
  if (orbit_sizes == std::vector<int>{n - 2, 2} && order == fact(n - 2) * 2) return {true, "gamma_K = S_{n-2}xS_2"};
  std::string orbits;
  for (std::size_t i = 0; i < orbit_sizes.size(); ++i) orbits += (i ? "," : "") + std::to_string(orbit_sizes[i]);
  return {false, "gamma_K has orbits (" + orbits + ") and order " + std::to_string(order) +
                     ", not one of S_n, A_n, S_{n-1}xS_1, S_{n-2}xS_2"};
}

// ---------------------------------------------------------------------------
// Table rows.

struct TableRow {
  std::string key;
  SubgroupDescriptor descriptor;
  GammaBlock block;
};

/// The rows of the large-n table valid at n, one per conjugacy class.
inline std::vector<TableRow> instantiate_table1(int n) {
  if (n < 4) throw InvalidArgument("the table is instantiated for n >= 4");
  std::vector<TableRow> rows;
  for (const auto& e : catalog()) {
    if (!e.in_table || !e.exists_at(n) || !rule_holds(e.rule, n)) continue;
    rows.push_back({e.key, e.build(n), e.block});
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Classification.

enum class Method { Fast, Oracle, Both };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::Fast: return "fast";
    case Method::Oracle: return "oracle";
    case Method::Both: return "both";
  }
  return "?";
}

inline Method to_method(const std::string& s) {
  if (s == "fast") return Method::Fast;
  if (s == "oracle") return Method::Oracle;
  if (s == "both") return Method::Both;
  throw InvalidArgument("method must be fast, oracle or both");
}

struct WitnessInfo {
  BnIrrepLabel chi;
  std::size_t psi = 0;
  std::uint64_t multiplicity = 0;
  std::uint64_t chi_degree = 0;
  std::uint64_t psi_degree = 0;
};

struct ClassRow {
  std::string descriptor;
  std::size_t order = 0;
  Verdict verdict = Verdict::OutsideFastPath;
  std::optional<Verdict> fast_verdict;    // method both
  std::optional<Verdict> oracle_verdict;  // method both
  std::string source;
  std::size_t conjugates = 0;  // 0 when unknown
  std::optional<WitnessInfo> witness;
};

struct ClassificationReport {
  int n = 0;
  Method method = Method::Fast;
  bool exhaustive = false;
  std::vector<ClassRow> rows;
  std::size_t strong_gelfand = 0;
  std::size_t total = 0;
  std::optional<std::size_t> raw_strong_gelfand;  // counting conjugates separately
  std::optional<std::size_t> raw_total;
  std::vector<std::string> notes;
};

namespace detail {

inline std::optional<WitnessInfo> witness_info(const GelfandResult& r, const LabeledTable& lt,
                                               Oracle& oracle, const FiniteGroup& k) {
  if (r.holds || !r.witness) return std::nullopt;
  WitnessInfo w;
  w.chi = lt.labels.at(r.witness->chi);
  w.psi = r.witness->psi;
  w.multiplicity = r.witness->multiplicity;
  w.chi_degree = r.witness->chi_degree;
  w.psi_degree = r.witness->psi_degree;
  (void)oracle;
  (void)k;
  return w;
}

inline std::string raw_text(const FiniteGroup& g, const SubgroupClass& c, int n) {
  std::vector<WreathElement> gens;
  for (auto i : c.gens) gens.push_back(decode(g.element(i), 2));
  return to_string(SubgroupDescriptor::raw(2, n, gens));
}

}  // namespace detail

/// Oracle verdict for one subgroup of B_n.
inline std::pair<Verdict, std::optional<WitnessInfo>> oracle_verdict(Oracle& oracle, const LabeledTable& lt,
                                                                      const FiniteGroup& k) {
  auto r = oracle.is_strong_gelfand(*lt.group, k);
  return {r.holds ? Verdict::StrongGelfand : Verdict::Not, detail::witness_info(r, lt, oracle, k)};
}

/// Catalog entries at n with their subgroups deduplicated up to conjugacy in
/// B_n (when B_n can be materialized) or by the recorded conjugate pairs.
struct FastRow {
  const CatalogEntry* entry;
  SubgroupDescriptor descriptor;
  FamilyDecision decision;
  std::vector<std::string> merged;  // keys of conjugate duplicates
};

inline std::vector<FastRow> fast_rows(int n, Oracle* oracle = nullptr, bool dedupe_by_group = true) {
  std::vector<FastRow> rows;
  for (const auto& e : catalog()) {
    if (!e.exists_at(n)) continue;
    SubgroupDescriptor d = e.build(n);
    rows.push_back({&e, d, family_decision(d, n), {}});
  }
  std::vector<FastRow> out;
  if (oracle && dedupe_by_group && 2 * n <= Perm::kMaxPackedDegree) {
    const Budget& budget = oracle->budget();
    GroupPtr g = full_group(n).group_ptr(budget);
    auto cc = oracle->classes(*g);
    std::vector<GroupPtr> kept;
    for (auto& r : rows) {
      GroupPtr k = make_subgroup(r.descriptor).group_ptr(budget);
      bool dup = false;
      for (std::size_t i = 0; i < kept.size(); ++i)
        if (are_conjugate(*g, *kept[i], *k, &cc->class_of)) {
          out[i].merged.push_back(r.entry->key);
          // prefer a verdict over OutsideFastPath when one of the names carries it
          if (out[i].decision.verdict == Verdict::OutsideFastPath && r.decision.verdict != Verdict::OutsideFastPath)
            out[i].decision = r.decision;
          dup = true;
          break;
        }
      if (!dup) {
        kept.push_back(k);
        out.push_back(r);
      }
    }
    return out;
  }
  for (auto& r : rows) {
    bool dup = false;
    if (!r.entry->conjugate_of.empty())
      for (auto& o : out)
        if (o.entry->key == r.entry->conjugate_of) {
          o.merged.push_back(r.entry->key);
          dup = true;
        }
    if (!dup) out.push_back(r);
  }
  return out;
}

inline ClassificationReport classify_fast(int n, Oracle* oracle) {
  ClassificationReport rep;
  rep.n = n;
  rep.method = Method::Fast;
  rep.exhaustive = n >= 8;
  bool can_dedupe = oracle && n <= 6;
  for (auto& r : fast_rows(n, can_dedupe ? oracle : nullptr)) {
    if (r.decision.verdict != Verdict::StrongGelfand) continue;
    ClassRow row;
    row.descriptor = to_string(r.descriptor);
    row.order = static_cast<std::size_t>(descriptor_order(r.descriptor));
    row.verdict = Verdict::StrongGelfand;
    row.source = r.decision.source;
    for (const auto& m : r.merged) row.source += "; conjugate to " + m;
    rep.rows.push_back(std::move(row));
  }
  rep.strong_gelfand = rep.rows.size();
  rep.total = rep.rows.size();
  if (!rep.exhaustive)
    rep.notes.push_back("fast path lists the named families only; not exhaustive for n <= 7");
  if (!can_dedupe)
    rep.notes.push_back("conjugate duplicates collapsed by the recorded pairs, not by group computation");
  return rep;
}

inline ClassificationReport classify_oracle(int n, Oracle& oracle, bool with_fast) {
  const Budget& budget = oracle.budget();
  ClassificationReport rep;
  rep.n = n;
  rep.method = with_fast ? Method::Both : Method::Oracle;
  rep.exhaustive = true;
  LabeledTable lt = label_table(oracle, n);
  const FiniteGroup& g = *lt.group;
  auto classes = subgroups_up_to_conjugacy(g, budget);
  SmallGroupTables tables(g, budget);

  // canonical bitset -> catalog rows naming that class
  std::map<ElementSet, std::vector<FastRow>> names;
  for (auto& r : fast_rows(n, nullptr, false)) {
    GroupPtr k = make_subgroup(r.descriptor).group_ptr(budget);
    ElementSet s = tables.empty_set();
    for (auto c : k->codes()) SmallGroupTables::set(s, static_cast<std::uint32_t>(g.index_of(c)));
    auto orb = tables.orbit(s);
    names[*std::min_element(orb.begin(), orb.end())].push_back(r);
  }

  std::size_t raw_sg = 0, raw_total = 0;
  std::vector<std::string> disagreements;
  for (const auto& c : classes) {
    GroupPtr k = materialize(g, c, budget);
    auto [v, w] = oracle_verdict(oracle, lt, *k);
    ClassRow row;
    row.order = c.order();
    row.conjugates = c.conjugates;
    row.verdict = v;
    row.witness = w;
    row.source = "oracle: subgroup lattice search";
    auto it = names.find(c.canonical);
    if (it != names.end()) {
      row.descriptor = to_string(it->second.front().descriptor);
      std::optional<Verdict> fv;
      std::string fsource;
      for (const auto& r : it->second) {
        if (r.entry->key != it->second.front().entry->key)
          row.source += "; also named " + to_string(r.descriptor);
        if (r.decision.verdict != Verdict::OutsideFastPath && !fv) {
          fv = r.decision.verdict;
          fsource = r.decision.source;
        }
      }
      if (with_fast) {
        row.fast_verdict = fv.value_or(Verdict::OutsideFastPath);
        row.oracle_verdict = v;
        if (fv) row.source += "; fast path: " + fsource;
        if (fv && *fv != v)
          disagreements.push_back(row.descriptor + ": fast " + to_string(*fv) + ", oracle " + to_string(v));
      }
    } else {
      row.descriptor = detail::raw_text(g, c, n);
      if (with_fast) {
        row.fast_verdict = Verdict::OutsideFastPath;
        row.oracle_verdict = v;
      }
    }
    raw_total += c.conjugates;
    if (v == Verdict::StrongGelfand) {
      ++rep.strong_gelfand;
      raw_sg += c.conjugates;
    }
    rep.rows.push_back(std::move(row));
  }
  if (with_fast) {
    // every strong Gelfand catalog claim must appear among the oracle classes
    for (auto& [canon, rows] : names)
      for (const auto& r : rows)
        if (r.decision.verdict == Verdict::StrongGelfand) {
          bool found = false;
          for (const auto& c : classes)
            if (c.canonical == canon) found = true;
          if (!found) disagreements.push_back(to_string(r.descriptor) + ": not found in the lattice");
        }
  }
  rep.total = classes.size();
  rep.raw_strong_gelfand = raw_sg;
  rep.raw_total = raw_total;
  if (!disagreements.empty()) {
    std::string msg = "fast path and oracle disagree at n = " + std::to_string(n) + ":";
    for (const auto& d : disagreements) msg += "\n  " + d;
    throw ConsistencyError(msg);
  }
  return rep;
}

/// Classification of strong Gelfand subgroups of B_n up to conjugacy.
inline ClassificationReport enumerate_strong_gelfand(int n, Method method, Oracle& oracle) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  if (method == Method::Fast) return classify_fast(n, &oracle);
  return classify_oracle(n, oracle, method == Method::Both);
}

// ---------------------------------------------------------------------------
// Cross validation of family rules against the oracle.

struct CrossRow {
  std::string key;
  std::string descriptor;
  bool in_table = false;  // a table row at this n
  Verdict fast = Verdict::OutsideFastPath;
  Verdict oracle = Verdict::OutsideFastPath;
  std::string source;
  std::optional<WitnessInfo> witness;
  bool agree() const { return fast == Verdict::OutsideFastPath || fast == oracle; }
};

struct CrossReport {
  int n = 0;
  std::vector<CrossRow> rows;
  std::vector<std::string> notes;

  bool ok() const {
    for (const auto& r : rows)
      if (!r.agree()) return false;
    return true;
  }
  std::size_t checked() const {
    std::size_t c = 0;
    for (const auto& r : rows) c += r.fast != Verdict::OutsideFastPath;
    return c;
  }
};

/// Every catalog entry instantiable at n: fast verdict against oracle verdict.
/// With table_only, restricted to the table rows valid at n.
inline CrossReport cross_validate(int n, Oracle& oracle, bool table_only = false) {
  CrossReport rep;
  rep.n = n;
  LabeledTable lt = label_table(oracle, n);
  for (const auto& e : catalog()) {
    if (!e.exists_at(n)) continue;
    bool table_row = e.in_table && rule_holds(e.rule, n);
    if (table_only && !table_row) continue;
    SubgroupDescriptor d = e.build(n);
    FamilyDecision fd = family_decision(d, n);
    GroupPtr k = make_subgroup(d).group_ptr(oracle.budget());
    auto [v, w] = oracle_verdict(oracle, lt, *k);
    CrossRow row;
    row.key = e.key;
    row.descriptor = to_string(d);
    row.in_table = table_row;
    row.fast = fd.verdict;
    row.oracle = v;
    row.source = fd.source;
    row.witness = w;
    rep.rows.push_back(std::move(row));
  }
  // which reading of the D(2) fiber rows the oracle supports
  std::vector<std::string> d2_sg;
  for (const auto& r : rep.rows)
    if (r.key.find(",D(2):chi") != std::string::npos && r.oracle == Verdict::StrongGelfand) d2_sg.push_back(r.key);
  if (n >= 4) {
    std::string s = "D(2) fiber rows strong Gelfand per oracle at n = " + std::to_string(n) + ":";
    for (const auto& k : d2_sg) s += " " + k;
    rep.notes.push_back(s);
  }
  return rep;
}

}  // namespace wreath
