#include <gtest/gtest.h>

#include <set>

#include <wreath/classifier.hpp>

using namespace wreath;

namespace {

SubgroupDescriptor P(const std::string& s) { return parse_descriptor(s); }

std::set<std::string> row_texts(const std::vector<TableRow>& rows) {
  std::set<std::string> out;
  for (const auto& r : rows) out.insert(canonical_text(r.descriptor));
  return out;
}

}  // namespace

TEST(FamilyDecision, Examples) {
  EXPECT_EQ(family_decision(P("J(6)"), 6).verdict, Verdict::Not);
  EXPECT_EQ(family_decision(P("J(7)"), 7).verdict, Verdict::StrongGelfand);
  EXPECT_EQ(family_decision(P("H(6)xtriv(1)"), 7).verdict, Verdict::StrongGelfand);
  EXPECT_EQ(family_decision(P("H(7)xtriv(1)"), 8).verdict, Verdict::Not);
  EXPECT_EQ(family_decision(P("S(6)"), 6).verdict, Verdict::Not);
  EXPECT_EQ(family_decision(P("S(5)"), 5).verdict, Verdict::StrongGelfand);
  EXPECT_EQ(family_decision(P("B(3)"), 4).verdict, Verdict::OutsideFastPath);
  EXPECT_EQ(family_decision(P("raw(2; [1,0|1,2])"), 2).verdict, Verdict::OutsideFastPath);
  EXPECT_FALSE(family_decision(P("J(6)"), 6).source.empty());
}

TEST(FamilyDecision, DescriptorSpellingsAgree) {
  EXPECT_EQ(canonical_text(P("B(6)xB(1)")), canonical_text(P("young(6,1)")));
  EXPECT_EQ(family_decision(P("young(6,1)"), 7).verdict, Verdict::StrongGelfand);
}

// The negative rows of the S_{n-2} x S_2 block are only claimed for n >= 8.
TEST(FamilyDecision, NegativeRangeOfTheTwoBlock) {
  EXPECT_EQ(family_decision(P("D(6)xD(2)"), 8).verdict, Verdict::Not);
  EXPECT_EQ(family_decision(P("D(7)xD(2)"), 9).verdict, Verdict::StrongGelfand);
  EXPECT_EQ(family_decision(P("D(2)xD(2)"), 4).verdict, Verdict::OutsideFastPath);
  EXPECT_NE(family_decision(P("D(2)xD(2)"), 4).source.find("n >= 8"), std::string::npos);
}

TEST(Table, Examples) {
  auto t9 = instantiate_table1(9);
  std::size_t fibers = 0;
  for (const auto& r : t9)
    if (r.descriptor.family == Family::FiberProduct && r.descriptor.parts.at(1).family == Family::Full &&
        r.descriptor.parts.at(1).n == 2)
      ++fibers;
  EXPECT_EQ(fibers, 6u);
  std::set<std::string> sn;
  for (const auto& r : t9)
    if (r.block == GammaBlock::Sn) sn.insert(canonical_text(r.descriptor));
  EXPECT_EQ(sn, (std::set<std::string>{canonical_text(P("B(9)")), canonical_text(P("D(9)")),
                                        canonical_text(P("H(9)"))}));
  auto t8 = row_texts(instantiate_table1(8));
  EXPECT_EQ(t8.count(canonical_text(P("D(6)xD(2)"))), 0u);
  EXPECT_EQ(row_texts(t9).count(canonical_text(P("D(7)xD(2)"))), 1u);
  EXPECT_EQ(t8.size(), 17u);
  EXPECT_EQ(t9.size(), 37u);
  EXPECT_THROW(instantiate_table1(3), InvalidArgument);
}

TEST(Table, JRowFollowsResidueModFour) {
  for (int n = 8; n <= 14; ++n)
    EXPECT_EQ(row_texts(instantiate_table1(n)).count(canonical_text(P("J(" + std::to_string(n) + ")"))),
              n % 4 == 2 ? 0u : 1u)
        << n;
}

TEST(Table, EveryRowPassesTheGammaGate) {
  for (int n : {8, 9})
    for (const auto& r : instantiate_table1(n)) {
      auto g = gamma_gate(make_subgroup(r.descriptor), n);
      EXPECT_TRUE(g.pass) << to_string(r.descriptor) << ": " << g.reason;
    }
}

TEST(Classify, SmallCounts) {
  Oracle o;
  auto b2 = enumerate_strong_gelfand(2, Method::Both, o);
  EXPECT_EQ(b2.strong_gelfand, 6u);
  EXPECT_EQ(b2.total, 8u);
  EXPECT_EQ(b2.raw_strong_gelfand, 8u);
  EXPECT_EQ(b2.raw_total, 10u);
  std::size_t rejected_with_two = 0;
  for (const auto& r : b2.rows)
    if (r.verdict == Verdict::Not) {
      ASSERT_TRUE(r.witness.has_value());
      rejected_with_two += r.witness->multiplicity == 2;
    }
  EXPECT_EQ(rejected_with_two, 2u);

  auto b3 = enumerate_strong_gelfand(3, Method::Both, o);
  EXPECT_TRUE(b3.exhaustive);
  EXPECT_EQ(b3.strong_gelfand, 22u);
  EXPECT_EQ(b3.total, 33u);
  EXPECT_EQ(b3.raw_strong_gelfand, 64u);
  EXPECT_EQ(enumerate_strong_gelfand(3, Method::Oracle, o).strong_gelfand, 22u);
}

TEST(Classify, B4Count) {
  Oracle o;
  auto b4 = enumerate_strong_gelfand(4, Method::Both, o);
  EXPECT_EQ(b4.strong_gelfand, 32u);
  EXPECT_EQ(b4.total, 193u);
  EXPECT_EQ(b4.raw_strong_gelfand, 183u);
  for (const auto& r : b4.rows)
    if (r.fast_verdict && *r.fast_verdict != Verdict::OutsideFastPath) EXPECT_EQ(*r.fast_verdict, r.verdict);
}

TEST(Classify, FastPathExhaustiveOnlyFromEight) {
  for (int n : {5, 6, 7}) EXPECT_FALSE(classify_fast(n, nullptr).exhaustive) << n;
  auto r8 = classify_fast(8, nullptr);
  EXPECT_TRUE(r8.exhaustive);
  EXPECT_EQ(r8.strong_gelfand, 17u);
}

TEST(Classify, ThreadCountDoesNotChangeRows) {
  Budget b4;
  b4.threads = 4;
  Oracle o1, o4(b4);
  auto a = enumerate_strong_gelfand(3, Method::Both, o1);
  auto b = enumerate_strong_gelfand(3, Method::Both, o4);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].descriptor, b.rows[i].descriptor);
    EXPECT_EQ(a.rows[i].verdict, b.rows[i].verdict);
  }
}

// F wr B is strong Gelfand in B_n exactly when B is strong Gelfand in S_n.
TEST(Reduction, WreathOverSymmetricSubgroups) {
  Oracle o;
  for (int n : {3, 4}) {
    const std::string N = std::to_string(n);
    GroupPtr bn = full_group(n).group_ptr();
    GroupPtr sn = symmetric_group(n);
    for (const std::string s : {"B(" + N + ")", "FA(" + N + ")", "B(" + std::to_string(n - 1) + ")xB(1)",
                                "B(" + std::to_string(n - 2) + ")xB(2)", "young(1,1," + std::to_string(n - 2) + ")"}) {
      Subgroup k = make_subgroup(P(s));
      GroupPtr b = gamma(k);
      EXPECT_EQ(o.is_strong_gelfand(*bn, *k.group_ptr()).holds, o.is_strong_gelfand(*sn, *b).holds) << s;
    }
  }
}

TEST(CrossValidate, SmallN) {
  Oracle o;
  for (int n : {3, 4}) {
    auto rep = cross_validate(n, o);
    EXPECT_TRUE(rep.ok()) << n;
    EXPECT_GT(rep.checked(), 0u);
  }
  bool diag_a3 = false;
  for (const auto& r : cross_validate(3, o).rows)
    if (r.descriptor == to_string(P("diagA(3)"))) diag_a3 = r.oracle == Verdict::StrongGelfand && r.agree();
  EXPECT_TRUE(diag_a3);
}

TEST(Gate, InactiveBelowSeven) {
  Oracle o;
  GroupPtr g = full_group(4).group_ptr();
  for (const auto& c : subgroups_up_to_conjugacy(*g)) EXPECT_TRUE(gamma_gate(lattice_subgroup(*g, c, 2), 4).pass);
}
