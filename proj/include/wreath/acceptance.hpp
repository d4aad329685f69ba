#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "classifier.hpp"
#include "descriptor_text.hpp"
#include "oracle_checks.hpp"

namespace wreath {

enum class Status { Pass, Fail, Skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
  }
  return "?";
}

struct CriterionResult {
  std::string id;
  std::string name;
  Status status = Status::Skipped;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  bool slow = false;
  std::optional<std::filesystem::path> cache_dir;
  Budget budget;
};

namespace accept {

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Accumulates failures with a bounded message.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) msg_ += (msg_.empty() ? "" : "; ") + what;
  }
  std::size_t checks() const { return checks_; }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed: " + msg_};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string msg_;
};

inline Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
inline BnIrrepLabel L(std::initializer_list<int> la, std::initializer_list<int> mu) { return {P(la), P(mu)}; }

inline WreathElement elem(std::vector<int> f, std::vector<int> sigma1) {
  for (int& s : sigma1) --s;
  return WreathElement(2, std::move(f), std::move(sigma1));
}

inline GroupPtr group_of(const std::vector<WreathElement>& gens, int n, const Budget& b) {
  return Subgroup(2, n, gens).group_ptr(b);
}

inline Subgroup desc(const std::string& text, int r = 2) { return make_subgroup(parse_descriptor(text, -1, r), r); }

// ---------------------------------------------------------------------------

inline Outcome b2_table(Oracle& o) {
  // rows in the order (2),0 | (1^2),0 | (1),(1) | 0,(2) | 0,(1^2)
  // columns (1^2),0 | (2),0 | (1),(1) | 0,(1^2) | 0,(2)
  const std::vector<BnIrrepLabel> labels = {L({2}, {}), L({1, 1}, {}), L({1}, {1}), L({}, {2}), L({}, {1, 1})};
  const std::vector<SignedClass> cols = {{P({1, 1}), P({})}, {P({2}), P({})}, {P({1}), P({1})},
                                         {P({}), P({1, 1})}, {P({}), P({2})}};
  const int frozen[5][5] = {{1, 1, 1, 1, 1}, {1, -1, 1, 1, -1}, {2, 0, 0, -2, 0}, {1, 1, -1, 1, -1}, {1, -1, -1, 1, 1}};
  Checker c;
  GroupPtr g = full_group(2).group_ptr(o.budget());
  auto t = o.table(*g);
  const auto& cc = *t->classes;
  c.expect(t->size() == 5, "B(2) table has " + std::to_string(t->size()) + " rows");
  // oracle columns in frozen column order, located by signed cycle type
  std::vector<std::size_t> col_of(5, 0);
  for (std::size_t j = 0; j < 5; ++j) {
    int hits = 0;
    for (std::size_t k = 0; k < cc.count(); ++k)
      if (signed_cycle_type(decode(g->element(cc.reps[k]), 2)) == cols[j]) {
        col_of[j] = k;
        ++hits;
      }
    c.expect(hits == 1, "signed class " + cols[j].to_string() + " found " + std::to_string(hits) + " times");
  }
  // each frozen row must be exactly one oracle row
  std::set<std::size_t> used;
  for (std::size_t i = 0; i < 5; ++i) {
    int found = -1;
    for (std::size_t a = 0; a < t->size(); ++a) {
      bool eq = true;
      for (std::size_t j = 0; j < 5; ++j) eq = eq && t->rows[a][col_of[j]] == mod::from_signed(frozen[i][j], t->prime);
      if (eq) found = static_cast<int>(a);
    }
    c.expect(found >= 0 && used.insert(found).second, "row " + labels[i].to_string() + " not in the oracle table");
    for (std::size_t j = 0; j < 5; ++j)
      c.expect(bn_char_value(labels[i], cols[j]) == frozen[i][j],
               "bn_char_value " + labels[i].to_string() + " at " + cols[j].to_string());
  }
  // the label matcher agrees with the frozen rows
  auto lt = label_table(o, 2);
  for (std::size_t i = 0; i < 5; ++i) {
    std::size_t a = lt.row_of(labels[i]);
    for (std::size_t j = 0; j < 5; ++j)
      c.expect(lt.table->rows[a][col_of[j]] == mod::from_signed(frozen[i][j], t->prime),
               "labeled row " + labels[i].to_string());
  }
  return c.outcome("25 values match");
}

inline Outcome b2_verdicts(Oracle& o) {
  Checker c;
  const Budget& b = o.budget();
  GroupPtr g = full_group(2).group_ptr(b);
  const WreathElement id = elem({0, 0}, {1, 2});
  const std::vector<std::pair<std::string, std::vector<WreathElement>>> sg = {
      {"B2", {elem({1, 0}, {1, 2}), elem({0, 0}, {2, 1})}},
      {"D2", {elem({1, 1}, {1, 2}), elem({0, 0}, {2, 1})}},
      {"H2", {elem({1, 1}, {1, 2}), elem({1, 0}, {2, 1}), elem({0, 1}, {2, 1})}},
      {"Sbar2", {elem({0, 0}, {2, 1})}},
      {"Sbar2'", {elem({1, 1}, {2, 1})}},
      {"Fx0", {elem({1, 0}, {1, 2})}},
      {"0xF", {elem({0, 1}, {1, 2})}},
      {"F wr id", {elem({1, 0}, {1, 2}), elem({0, 1}, {1, 2})}},
  };
  const std::vector<std::size_t> orders = {8, 4, 4, 2, 2, 2, 2, 4};
  for (std::size_t i = 0; i < sg.size(); ++i) {
    GroupPtr k = group_of(sg[i].second, 2, b);
    c.expect(k->order() == orders[i], sg[i].first + " has order " + std::to_string(k->order()));
    c.expect(o.is_strong_gelfand(*g, *k).holds, sg[i].first + " not strong Gelfand");
  }
  for (const auto& [name, gens] : std::vector<std::pair<std::string, std::vector<WreathElement>>>{
           {"diag", {elem({1, 1}, {1, 2})}}, {"trivial", {id}}}) {
    GroupPtr k = group_of(gens, 2, b);
    auto r = o.is_strong_gelfand(*g, *k);
    c.expect(!r.holds, name + " reported strong Gelfand");
    c.expect(r.witness && r.witness->multiplicity == 2, name + " witness multiplicity is not 2");
  }
  // named descriptors give the same element sets
  c.expect(desc("D(2)").group_ptr(b)->codes() == group_of(sg[1].second, 2, b)->codes(), "D(2) element set");
  c.expect(desc("H(2)").group_ptr(b)->codes() == group_of(sg[2].second, 2, b)->codes(), "H(2) element set");
  c.expect(desc("S(2)").group_ptr(b)->codes() == group_of(sg[3].second, 2, b)->codes(), "S(2) element set");
  c.expect(desc("Sp(2)").group_ptr(b)->codes() == group_of(sg[4].second, 2, b)->codes(), "Sp(2) element set");
  // Sbar2' = x Sbar2 x^-1 with x = ((0,1),(1 2))
  const WreathElement x = elem({0, 1}, {2, 1});
  const WreathElement s = elem({0, 0}, {2, 1});
  c.expect(x * s * inverse(x) == elem({1, 1}, {2, 1}), "x Sbar2 x^-1 is not Sbar2'");
  GroupPtr a = group_of(sg[3].second, 2, b), a2 = group_of(sg[4].second, 2, b);
  c.expect(are_conjugate(*g, *a, *a2), "Sbar2 and Sbar2' not conjugate");
  // lattice: 6 classes, 8 subgroups
  auto rep = classify_oracle(2, o, true);
  c.expect(rep.strong_gelfand == 6, "B(2) has " + std::to_string(rep.strong_gelfand) + " strong Gelfand classes");
  c.expect(rep.raw_strong_gelfand == 8u, "raw strong Gelfand subgroups of B(2) differ from 8");
  c.expect(rep.total == 8, "B(2) has " + std::to_string(rep.total) + " subgroup classes");
  return c.outcome("8 subgroups strong Gelfand (6 classes); diag and trivial fail with multiplicity 2; Sbar2 ~ Sbar2'");
}

inline Outcome lattice_count(Oracle& o, int n, std::size_t expected, const std::string& must_contain = {}) {
  Checker c;
  auto rep = classify_oracle(n, o, true);
  c.expect(rep.strong_gelfand == expected, "got " + std::to_string(rep.strong_gelfand) + " strong Gelfand classes");
  if (!must_contain.empty()) {
    const std::string want = canonical_text(parse_descriptor(must_contain));
    bool found = false;
    for (const auto& r : rep.rows)
      if (r.verdict == Verdict::StrongGelfand && r.descriptor.rfind("raw(", 0) != 0 &&
          canonical_text(parse_descriptor(r.descriptor)) == want)
        found = true;
    c.expect(found, must_contain + " missing");
  }
  std::ostringstream s;
  s << rep.strong_gelfand << " of " << rep.total << " classes strong Gelfand (raw " << rep.raw_strong_gelfand.value_or(0)
    << " of " << rep.raw_total.value_or(0) << ")";
  return c.outcome(s.str());
}

inline Outcome family_over(Oracle& o, const std::string& name, const std::vector<std::pair<int, bool>>& cases) {
  Checker c;
  std::string s;
  for (auto [n, expect] : cases) {
    GroupPtr g = full_group(n).group_ptr(o.budget());
    GroupPtr k = desc(name + "(" + std::to_string(n) + ")").group_ptr(o.budget());
    bool got = o.is_strong_gelfand(*g, *k).holds;
    c.expect(got == expect, name + "(" + std::to_string(n) + ") gave " + (got ? "true" : "false"));
    s += (s.empty() ? "" : ", ") + name + "(" + std::to_string(n) + ")=" + (got ? "SG" : "not");
  }
  return c.outcome(s);
}

inline Outcome cross(Oracle& o, int n) {
  Checker c;
  CrossReport rep = cross_validate(n, o);
  std::size_t table_rows = 0;
  for (const auto& r : rep.rows) {
    std::string w = r.witness ? " witness " + r.witness->chi.to_string() + " mult " +
                                    std::to_string(r.witness->multiplicity)
                              : "";
    c.expect(r.agree(), r.descriptor + ": fast " + to_string(r.fast) + ", oracle " + to_string(r.oracle) + w);
    if (r.in_table) {
      ++table_rows;
      c.expect(r.fast != Verdict::OutsideFastPath, r.descriptor + ": table row without a fast verdict");
    }
  }
  return c.outcome(std::to_string(rep.checked()) + " of " + std::to_string(rep.rows.size()) + " family rows checked, " +
                   std::to_string(table_rows) + " table rows agree");
}

/// Row set of the large-n table written out directly from its parity rules.
inline std::set<std::string> expected_table(int n) {
  const bool odd = n % 2 == 1;
  const std::string N = std::to_string(n), m1 = std::to_string(n - 1), m2 = std::to_string(n - 2);
  std::vector<std::string> rows = {"B(" + N + ")", "D(" + N + ")", "H(" + N + ")", "FA(" + N + ")"};
  if (n % 4 != 2) rows.push_back("J(" + N + ")");
  for (std::string s : {"B(#)xB(1)", "B(#)xtriv(1)", "D(#)xB(1)", "H(#)xB(1)", "twist(B(#), eps)"}) rows.push_back(s);
  if (odd)
    for (std::string s : {"D(#)xtriv(1)", "H(#)xtriv(1)", "twist(B(#), delta)", "twist(B(#), epsdelta)",
                          "twist(D(#), epsdelta)", "twist(H(#), delta)"})
      rows.push_back(s);
  for (std::string s : {"B(@)xB(2)", "B(@)xD(2)", "B(@)xS(2)", "B(@)xH(2)"}) rows.push_back(s);
  if (odd) {
    for (std::string a : {"D", "H"})
      for (std::string b : {"D", "B", "H"}) rows.push_back(a + "(@)x" + b + "(2)");
    for (std::string a : {"delta", "epsdelta"})
      for (std::string b : {"delta", "epsdelta", "eps"}) rows.push_back("fiber(B(@):" + a + ", B(2):" + b + ")");
    rows.push_back("fiber(B(@):delta, H(2):chi2)");
    rows.push_back("fiber(B(@):epsdelta, H(2):chi2)");
    rows.push_back("fiber(B(@):delta, D(2):chi1)");
    rows.push_back("fiber(B(@):epsdelta, D(2):chi1)");
  } else {
    rows.push_back("fiber(B(@):delta, D(2):chi2)");
    rows.push_back("fiber(B(@):epsdelta, D(2):chi2)");
  }
  rows.push_back("fiber(B(@):eps, D(2):chi2)");
  std::set<std::string> out;
  for (auto s : rows) {
    for (auto p = s.find('#'); p != std::string::npos; p = s.find('#')) s.replace(p, 1, m1);
    for (auto p = s.find('@'); p != std::string::npos; p = s.find('@')) s.replace(p, 1, m2);
    out.insert(canonical_text(parse_descriptor(s)));
  }
  return out;
}

inline Outcome table_rows(const std::vector<std::pair<int, std::size_t>>& cases) {
  Checker c;
  std::string s;
  for (auto [n, count] : cases) {
    auto want = expected_table(n);
    std::set<std::string> got;
    for (const auto& r : instantiate_table1(n)) {
      got.insert(canonical_text(r.descriptor));
      c.expect(family_decision(r.descriptor, n).verdict == Verdict::StrongGelfand,
               to_string(r.descriptor) + " has no positive fast verdict");
    }
    c.expect(got == want, "row set differs at n = " + std::to_string(n));
    c.expect(got.size() == count, std::to_string(got.size()) + " rows at n = " + std::to_string(n));
    s += (s.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " + std::to_string(got.size()) + " rows";
  }
  return c.outcome(s);
}

// ---------------------------------------------------------------------------

inline Outcome branching(Oracle& o, int max_n) {
  Checker c;
  const SubgroupDescriptor b1 = parse_descriptor("B(1)"), triv1 = parse_descriptor("triv(1)");
  const SubgroupDescriptor b2 = parse_descriptor("B(2)");
  const std::vector<std::pair<Sub2, SubgroupDescriptor>> subs = {
      {Sub2::D2, parse_descriptor("D(2)")}, {Sub2::H2, parse_descriptor("H(2)")}, {Sub2::S2bar, parse_descriptor("S(2)")}};
  for (int n = 2; n <= max_n; ++n) {
    const std::uint64_t p = label_table(o, n).table->prime;
    const std::size_t pos = bn_row(o, L({1}, {}), p), neg = bn_row(o, L({}, {1}), p);
    for (const auto& l : bn_labels(n - 1)) {
      const std::string at = l.to_string() + " n=" + std::to_string(n);
      c.expect(branch_up_b1(l, B1Factor::PosOne) == oracle_induce_product(o, n, l, b1, pos), "B1 +1 " + at);
      c.expect(branch_up_b1(l, B1Factor::NegOne) == oracle_induce_product(o, n, l, b1, neg), "B1 -1 " + at);
      c.expect(branch_up_b1(l, B1Factor::PassiveS1) == oracle_induce_product(o, n, l, triv1, 0), "B1 passive " + at);
    }
    if (n < 3) continue;
    for (const auto& l : bn_labels(n - 2)) {
      const std::string at = l.to_string() + " n=" + std::to_string(n);
      for (const auto& w : bn_labels(2))
        c.expect(branch_up_b2(l, w) == oracle_induce_product(o, n, l, b2, bn_row(o, w, p)),
                 "B2 " + w.to_string() + " " + at);
      for (const auto& [s, d] : subs) {
        auto rows = sub2_rows(o, s, p);
        for (int w = 0; w < sub2_irreducible_count(s); ++w)
          c.expect(branch_up_sub2(l, s, w) == oracle_induce_product(o, n, l, d, rows[w]),
                   "sub2 " + to_string(d) + "#" + std::to_string(w) + " " + at);
      }
    }
  }
  return c.outcome(std::to_string(c.checks()) + " multisets equal for n <= " + std::to_string(max_n));
}

inline Outcome multiplicity(Oracle& o) {
  Checker c;
  for (int r : {2, 3})
    for (int n = 1; n <= 4; ++n) {
      GroupPtr g = full_group(n, r).group_ptr(o.budget());
      auto cc = o.classes(*g);
      auto t = o.table(*g);
      const std::uint64_t p = t->prime;
      auto labels = abelian_labels(r, n);
      c.expect(labels.size() == t->size(), "label count differs from class count");
      GroupPtr sn = symmetric_group(n);
      std::vector<std::size_t> passive_class(sn->order());
      for (std::size_t e = 0; e < sn->order(); ++e) {
        const Perm pe = sn->element(e);
        std::vector<int> im(pe.images().begin(), pe.images().end());
        passive_class[e] = cc->class_of[g->index_of(embed_sym(WreathElement::passive(r, im)))];
      }
      std::set<std::vector<std::uint64_t>> seen;
      for (const auto& u : labels) {
        auto U = wreath_irrep_character(*g, *cc, r, u, p);
        c.expect(std::find(t->rows.begin(), t->rows.end(), U) != t->rows.end(), u.to_string() + " not a table row");
        c.expect(seen.insert(U).second, u.to_string() + " repeats a character");
        for (const auto& w : partitions_of(n)) {
          std::uint64_t s = 0;
          for (std::size_t e = 0; e < sn->order(); ++e) {
            auto chi = mod::from_signed(static_cast<long long>(sym_char_value(w, cycle_type(sn->element(e)))), p);
            s = mod::add(s, mod::mul(U[passive_class[e]], chi, p), p);
          }
          s = mod::mul(s, mod::inv(sn->order() % p, p), p);
          c.expect(Integer(s) == passive_induction_mult(w, u),
                   "r=" + std::to_string(r) + " " + u.to_string() + " w=" + w.to_string());
        }
      }
    }
  Integer big = passive_induction_mult(P({4, 3, 2, 1}), AbelianWreathLabel(2, {P({3, 2, 1}), P({3, 1})}));
  c.expect(big == 3, "n=10 witness gave " + big.str());
  return c.outcome(std::to_string(c.checks()) + " checks; n=10 witness multiplicity 3");
}

// ---------------------------------------------------------------------------

inline Outcome orthogonality(Oracle& o) {
  Checker c;
  for (int n = 1; n <= 4; ++n) {
    GroupPtr g = full_group(n).group_ptr(o.budget());
    auto t = o.table(*g);
    c.expect(rows_orthogonal(*t), "rows of B(" + std::to_string(n) + ")");
    c.expect(columns_orthogonal(*t), "columns of B(" + std::to_string(n) + ")");
    std::uint64_t sq = 0;
    for (auto d : t->degrees) sq += d * d;
    c.expect(sq == g->order(), "degree squares of B(" + std::to_string(n) + ")");
  }
  for (int r : {3, 4}) {
    GroupPtr g = full_group(2, r).group_ptr(o.budget());
    auto t = o.table(*g);
    c.expect(rows_orthogonal(*t) && columns_orthogonal(*t), "Z/" + std::to_string(r) + " wr S2");
  }
  for (int n = 1; n <= 5; ++n) {
    auto labels = bn_labels(n);
    auto cls = signed_classes(n);
    for (std::size_t a = 0; a < labels.size(); ++a) {
      c.expect(bn_char_value(labels[a], SignedClass{Partition(std::vector<int>(n, 1)), P({})}) == dim_bn(labels[a]),
               "identity value of " + labels[a].to_string());
      for (std::size_t b = a; b < labels.size(); ++b) {
        Integer s = 0;
        for (const auto& k : cls) s += signed_class_size(k) * bn_char_value(labels[a], k) * bn_char_value(labels[b], k);
        c.expect(s == (a == b ? bn_order(n) : Integer(0)), "analytic rows " + labels[a].to_string() + "," +
                                                                labels[b].to_string());
      }
    }
  }
  return c.outcome("oracle tables B(1..4), Z/3 and Z/4 wr S2; analytic rows n <= 5");
}

inline Outcome reciprocity(Oracle& o) {
  Checker c;
  GroupPtr g = full_group(3).group_ptr(o.budget());
  std::size_t pairs = 0;
  for (const auto& cl : subgroups_up_to_conjugacy(*g, o.budget())) {
    GroupPtr k = materialize(*g, cl, o.budget());
    auto m = o.restriction_matrix(*g, *k);
    for (std::size_t psi = 0; psi < m.front().size(); ++psi) {
      auto direct = o.induce_direct(*g, *k, psi);
      for (std::size_t chi = 0; chi < m.size(); ++chi) c.expect(direct[chi] == m[chi][psi], "pair in class");
      ++pairs;
    }
  }
  return c.outcome(std::to_string(pairs) + " induced characters over the B(3) lattice");
}

inline Integer abelian_dim(const AbelianWreathLabel& u) {
  Integer d = factorial(u.n());
  for (const auto& b : u.blocks) d = d / factorial(b.size()) * dimension_sym(b);
  return d;
}

inline Outcome dimensions() {
  Checker c;
  auto total = [](const LabelMultiset& m) {
    Integer s = 0;
    for (const auto& e : m.entries()) s += e.mult * dim_bn(e.label);
    return s;
  };
  for (int n = 2; n <= 6; ++n) {
    for (const auto& l : bn_labels(n - 1)) {
      c.expect(total(branch_up_b1(l, B1Factor::PosOne)) == n * dim_bn(l), "b1 +1 " + l.to_string());
      c.expect(total(branch_up_b1(l, B1Factor::NegOne)) == n * dim_bn(l), "b1 -1 " + l.to_string());
      c.expect(total(branch_up_b1(l, B1Factor::PassiveS1)) == 2 * n * dim_bn(l), "b1 passive " + l.to_string());
    }
    for (const auto& l : bn_labels(n - 2)) {
      const Integer idx = binomial(n, 2);
      for (const auto& w : bn_labels(2))
        c.expect(total(branch_up_b2(l, w)) == idx * dim_bn(l) * dim_bn(w), "b2 " + l.to_string());
      for (Sub2 s : {Sub2::D2, Sub2::H2, Sub2::S2bar})
        for (int w = 0; w < sub2_irreducible_count(s); ++w)
          c.expect(total(branch_up_sub2(l, s, w)) == idx * (s == Sub2::S2bar ? 4 : 2) * dim_bn(l),
                   "sub2 " + l.to_string());
    }
  }
  for (int r : {2, 3})
    for (int n = 1; n <= 5; ++n) {
      Integer base = 1;
      for (int i = 0; i < n; ++i) base *= r;
      for (const auto& w : partitions_of(n)) {
        Integer s = 0;
        for (const auto& u : abelian_labels(r, n)) s += passive_induction_mult(w, u) * abelian_dim(u);
        c.expect(s == base * dimension_sym(w), "passive r=" + std::to_string(r) + " w=" + w.to_string());
      }
    }
  return c.outcome(std::to_string(c.checks()) + " dimension identities for n <= 6");
}

inline Outcome twists() {
  Checker c;
  const LinearChar all[] = {LinearChar::One, LinearChar::Eps, LinearChar::Delta, LinearChar::EpsDelta};
  for (int n = 0; n <= 6; ++n)
    for (const auto& l : bn_labels(n)) {
      c.expect(twist(l, LinearChar::One) == l, "identity twist");
      for (auto a : all) {
        c.expect(dim_bn(twist(l, a)) == dim_bn(l), "twist keeps dimension");
        for (auto b : all) c.expect(twist(twist(l, a), b) == twist(l, a * b), "composition law");
      }
    }
  return c.outcome(std::to_string(c.checks()) + " twist identities for n <= 6");
}

inline Outcome clifford(Oracle& o) {
  Checker c;
  const std::vector<std::pair<IndexTwoKernel, std::string>> kernels = {
      {IndexTwoKernel::KerDelta, "D"}, {IndexTwoKernel::KerEps, "FA"}, {IndexTwoKernel::KerEpsDelta, "H"}};
  for (int n = 2; n <= 5; ++n) {
    LabeledTable lt = label_table(o, n);
    for (const auto& [kind, name] : kernels) {
      GroupPtr k = desc(name + "(" + std::to_string(n) + ")").group_ptr(o.budget());
      auto m = o.restriction_matrix(*lt.group, *k);
      for (std::size_t a = 0; a < m.size(); ++a) {
        const auto& l = lt.labels[a];
        std::size_t parts = 0;
        bool mult_free = true;
        for (auto x : m[a]) {
          parts += x != 0;
          mult_free = mult_free && x <= 1;
        }
        auto cs = clifford_split(l, kind);
        const std::string at = l.to_string() + " to " + name + "(" + std::to_string(n) + ")";
        c.expect(mult_free, at + " not multiplicity free");
        if (cs.splits) {
          c.expect(parts == 2, at + " should split");
        } else {
          c.expect(parts == 1, at + " should stay irreducible");
          c.expect(m[lt.row_of(cs.partner)] == m[a], at + " partner restricts differently");
        }
      }
    }
  }
  return c.outcome("restrictions to D(n), FA(n), H(n) for 2 <= n <= 5");
}

inline Outcome reduction(Oracle& o) {
  Checker c;
  std::string s;
  for (int n : {3, 4}) {
    LabeledTable lt = label_table(o, n);
    GroupPtr sn = symmetric_group(n);
    std::size_t sg = 0;
    for (const auto& cl : subgroups_up_to_conjugacy(*lt.group, o.budget())) {
      Subgroup k = lattice_subgroup(*lt.group, cl, 2);
      if (!o.is_strong_gelfand(*lt.group, *k.group_ptr(o.budget())).holds) continue;
      ++sg;
      GroupPtr gk = gamma(k, o.budget());
      c.expect(o.is_strong_gelfand(*sn, *gk).holds, "gamma of a strong Gelfand class fails at n = " + std::to_string(n));
    }
    s += (s.empty() ? "" : ", ") + std::to_string(sg) + " classes at n=" + std::to_string(n);
  }
  return c.outcome(s);
}

inline Outcome abelian_spots(Oracle& o) {
  Checker c;
  for (int r : {3, 4}) {
    GroupPtr g = full_group(2, r).group_ptr(o.budget());
    GroupPtr k = desc("S(2)", r).group_ptr(o.budget());
    c.expect(k->order() == 2, "passive S2 order");
    c.expect(o.is_strong_gelfand(*g, *k).holds, "Z/" + std::to_string(r) + " wr S2 with passive S2");
  }
  GroupPtr g = full_group(3, 3).group_ptr(o.budget());
  GroupPtr k = desc("B(2)xtriv(1)", 3).group_ptr(o.budget());
  c.expect(k->order() == 18, "Z/3 wr S2 order");
  c.expect(o.is_strong_gelfand(*g, *k).holds, "Z/3 wr S3 with Z/3 wr S2");
  return c.outcome("Z/3, Z/4 wr S2 over passive S2; Z/3 wr S3 over Z/3 wr S2");
}

/// S3 wr S_n on 3n points: n = 2 against S3 x S3, n = 3 against
/// S3 wr (S2 x S1).
inline Outcome nonabelian_spot(Oracle& o, int n) {
  Checker c;
  const int deg = 3 * n;
  std::vector<Perm> base, swap;
  for (int b = 0; b < n; ++b) {
    base.push_back(Perm::from_cycles(deg, {{3 * b, 3 * b + 1}}));
    base.push_back(Perm::from_cycles(deg, {{3 * b, 3 * b + 1, 3 * b + 2}}));
  }
  for (int b = 0; b + 1 < n; ++b)
    swap.push_back(Perm::from_cycles(deg, {{3 * b, 3 * b + 3}, {3 * b + 1, 3 * b + 4}, {3 * b + 2, 3 * b + 5}}));
  std::vector<Perm> gg = base, kg = base;
  gg.insert(gg.end(), swap.begin(), swap.end());
  if (n == 3) kg.push_back(swap[0]);  // S3 wr (S2 x S1)
  GroupPtr g = FiniteGroup::generate(deg, gg, o.budget());
  GroupPtr k = FiniteGroup::generate(deg, kg, o.budget());
  std::size_t go = 1, ko = 1;
  for (int i = 0; i < n; ++i) go *= 6 * (i + 1);
  ko = n == 2 ? 36 : 432;
  c.expect(g->order() == go, "ambient order " + std::to_string(g->order()));
  c.expect(k->order() == ko, "subgroup order " + std::to_string(k->order()));
  c.expect(o.is_strong_gelfand(*g, *k).holds, "not strong Gelfand");
  return c.outcome("S3 wr S" + std::to_string(n) + " (order " + std::to_string(g->order()) + ") over order " +
                   std::to_string(k->order()));
}

}  // namespace accept

/// Runs every acceptance criterion; slow ones report SKIPPED unless enabled.
/// The callback sees each result as soon as it is known.
inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                                   const std::function<void(const CriterionResult&)>& on_result = {}) {
  Oracle oracle(opt.budget, opt.cache_dir);
  std::vector<CriterionResult> out;
  auto run = [&](std::string id, std::string name, bool slow, std::function<accept::Outcome()> body) {
    CriterionResult r{std::move(id), std::move(name), Status::Skipped, "", 0};
    if (slow && !opt.slow) {
      r.detail = "slow-gated; enable with --slow or WREATH_SLOW=1";
    } else {
      auto t0 = std::chrono::steady_clock::now();
      try {
        auto o = body();
        r.status = o.pass ? Status::Pass : Status::Fail;
        r.detail = o.detail;
      } catch (const std::exception& e) {
        r.status = Status::Fail;
        r.detail = std::string("exception: ") + e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  };
  using namespace accept;
  run("1", "B2 character table equals the frozen 25 values", false, [&] { return b2_table(oracle); });
  run("2", "B2 subgroup verdicts and the Sbar2 conjugate pair", false, [&] { return b2_verdicts(oracle); });
  run("3", "B3 lattice has 22 strong Gelfand classes incl. S(2)xB(1)", false,
      [&] { return lattice_count(oracle, 3, 22, "S(2)xB(1)"); });
  run("4", "B4 lattice has 32 strong Gelfand classes", true, [&] { return lattice_count(oracle, 4, 32); });
  run("4b", "B5 lattice has 43 strong Gelfand classes (stretch)", true, [&] {
    Budget b = opt.budget;
    b.lattice_order = std::max<std::size_t>(b.lattice_order, 3840);
    b.max_subgroups = std::max<std::size_t>(b.max_subgroups, 5000000);
    Oracle big(b, opt.cache_dir);
    return lattice_count(big, 5, 43);
  });
  run("5", "passive S(n) strong Gelfand for n = 2..5", false,
      [&] { return family_over(oracle, "S", {{2, true}, {3, true}, {4, true}, {5, true}}); });
  run("5b", "passive S(6) not strong Gelfand", true, [&] { return family_over(oracle, "S", {{6, false}}); });
  run("6", "J(n) strong Gelfand for n = 3, 4, 5", false,
      [&] { return family_over(oracle, "J", {{3, true}, {4, true}, {5, true}}); });
  run("6b", "J(6) not strong Gelfand", true, [&] { return family_over(oracle, "J", {{6, false}}); });
  run("7", "family rules agree with the oracle at n = 5", false, [&] { return cross(oracle, 5); });
  run("7b", "family rules agree with the oracle at n = 6", true, [&] { return cross(oracle, 6); });
  run("7c", "large-n table rows at n = 8, 9", false, [&] { return table_rows({{8, 17}, {9, 37}}); });
  run("8", "branching rules equal oracle inductions for n <= 5", false, [&] { return branching(oracle, 5); });
  run("9", "passive induction multiplicities for r = 2, 3 and n <= 4", false, [&] { return multiplicity(oracle); });
  run("10a", "character orthogonality and degree-square sums", false, [&] { return orthogonality(oracle); });
  run("10b", "Frobenius reciprocity over the B3 lattice", false, [&] { return reciprocity(oracle); });
  run("10c", "dimension bookkeeping for branchings n <= 6", false, [] { return dimensions(); });
  run("10d", "twist composition laws n <= 6", false, [] { return twists(); });
  run("10e", "Clifford splitting agrees with restrictions n <= 5", false, [&] { return clifford(oracle); });
  run("10f", "strong Gelfand in B(n) implies gamma strong Gelfand in S(n), n = 3, 4", false,
      [&] { return reduction(oracle); });
  run("11", "abelian F spot checks", false, [&] { return abelian_spots(oracle); });
  run("12", "S3 wr S2 over S3 x S3", false, [&] { return nonabelian_spot(oracle, 2); });
  run("12b", "S3 wr S3 over S3 wr (S2 x S1)", true, [&] { return nonabelian_spot(oracle, 3); });
  return out;
}

}  // namespace wreath
