#include <gtest/gtest.h>

#include <set>

#include <wreath/char_oracle.hpp>
#include <wreath/groups.hpp>

using namespace wreath;

namespace {

BnIrrepLabel L(Partition la, Partition mu) { return {std::move(la), std::move(mu)}; }

Integer total_dim(const LabelMultiset& m) {
  Integer s = 0;
  for (const auto& e : m.entries()) s += e.mult * dim_bn(e.label);
  return s;
}

}  // namespace

TEST(Twist, Examples) {
  EXPECT_EQ(twist(L({2}, {1}), LinearChar::Delta), L({1}, {2}));
  EXPECT_EQ(twist(L({2}, {1}), LinearChar::EpsDelta), L({1}, {1, 1}));
  EXPECT_EQ(twist(L({2}, {1}), LinearChar::Eps), L({1, 1}, {1}));
  EXPECT_EQ(twist(L({3, 1}, {}), LinearChar::One), L({3, 1}, {}));
}

TEST(Twist, KleinFourLaw) {
  const LinearChar all[] = {LinearChar::One, LinearChar::Eps, LinearChar::Delta, LinearChar::EpsDelta};
  for (int n = 0; n <= 6; ++n)
    for (const auto& l : bn_labels(n))
      for (auto a : all)
        for (auto b : all) EXPECT_EQ(twist(twist(l, a), b), twist(l, a * b));
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dim_bn(L({4}, {})), 1);
  EXPECT_EQ(dim_bn(L({1}, {1})), 2);
  EXPECT_EQ(dim_bn(L({3, 2, 1}, {3, 1})), 10080);
}

TEST(Dimension, SquaresSumToOrder) {
  for (int n = 0; n <= 7; ++n) {
    Integer s = 0;
    for (const auto& l : bn_labels(n)) s += dim_bn(l) * dim_bn(l);
    EXPECT_EQ(s, bn_order(n));
  }
}

TEST(BranchB1, Examples) {
  EXPECT_EQ(branch_up_b1(L({1}, {1}), B1Factor::PosOne), make_multiset({L({2}, {1}), L({1, 1}, {1})}));
  EXPECT_EQ(branch_up_b1(L({1}, {1}), B1Factor::PassiveS1),
            make_multiset({L({2}, {1}), L({1, 1}, {1}), L({1}, {2}), L({1}, {1, 1})}));
  EXPECT_EQ(branch_up_b1(L({}, {1}), B1Factor::NegOne), make_multiset({L({}, {2}), L({}, {1, 1})}));
}

TEST(BranchB2, Examples) {
  EXPECT_EQ(branch_up_b2(L({}, {1}), L({}, {2})), make_multiset({L({}, {3}), L({}, {2, 1})}));
  EXPECT_EQ(branch_up_b2(L({1}, {1}), L({1}, {1})),
            make_multiset({L({2}, {2}), L({2}, {1, 1}), L({1, 1}, {2}), L({1, 1}, {1, 1})}));
  // Pieri: (2) times (2) is (4) + (3,1) + (2,2); dimensions 6 = 1 + 3 + 2
  EXPECT_EQ(branch_up_b2(L({2}, {}), L({2}, {})), make_multiset({L({4}, {}), L({3, 1}, {}), L({2, 2}, {})}));
  EXPECT_THROW(branch_up_b2(L({1}, {}), L({3}, {})), InvalidArgument);
}

TEST(BranchSub2, Examples) {
  // D2 index with induced module S^{(1),(1)}
  bool found = false;
  for (int w = 0; w < sub2_irreducible_count(Sub2::D2); ++w) {
    auto labels = sub2_induced_labels(Sub2::D2, w);
    if (labels == std::vector<BnIrrepLabel>{L({1}, {1})}) {
      found = true;
      EXPECT_EQ(branch_up_sub2(L({1}, {1}), Sub2::D2, w), branch_up_b2(L({1}, {1}), L({1}, {1})));
    }
  }
  EXPECT_TRUE(found);
  // H2 index inducing S^{(2),0} + S^{0,(1^2)}
  found = false;
  for (int w = 0; w < sub2_irreducible_count(Sub2::H2); ++w) {
    auto labels = sub2_induced_labels(Sub2::H2, w);
    std::set<BnIrrepLabel> got(labels.begin(), labels.end());
    if (got == std::set<BnIrrepLabel>{L({2}, {}), L({}, {1, 1})}) {
      found = true;
      EXPECT_EQ(branch_up_sub2(L({1}, {}), Sub2::H2, w),
                make_multiset({L({3}, {}), L({2, 1}, {}), L({1}, {1, 1})}));
    }
  }
  EXPECT_TRUE(found);
  EXPECT_THROW(branch_up_sub2(L({1}, {}), Sub2::S2bar, 2), InvalidArgument);
  EXPECT_THROW(branch_up_sub2(L({1}, {}), Sub2::D2, 4), InvalidArgument);
}

TEST(Branching, DimensionBookkeeping) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& l : bn_labels(n - 1)) {
      EXPECT_EQ(total_dim(branch_up_b1(l, B1Factor::PosOne)), n * dim_bn(l));
      EXPECT_EQ(total_dim(branch_up_b1(l, B1Factor::NegOne)), n * dim_bn(l));
      EXPECT_EQ(total_dim(branch_up_b1(l, B1Factor::PassiveS1)), 2 * n * dim_bn(l));
    }
    for (const auto& l : bn_labels(n - 2)) {
      for (const auto& w : bn_labels(2))
        EXPECT_EQ(total_dim(branch_up_b2(l, w)), binomial(n, 2) * dim_bn(l) * dim_bn(w));
      for (Sub2 s : {Sub2::D2, Sub2::H2, Sub2::S2bar})
        for (int w = 0; w < sub2_irreducible_count(s); ++w)
          EXPECT_EQ(total_dim(branch_up_sub2(l, s, w)), binomial(n, 2) * (s == Sub2::S2bar ? 4 : 2) * dim_bn(l));
    }
  }
}

TEST(PassiveInduction, Examples) {
  EXPECT_EQ(passive_induction_mult({4, 3, 2, 1}, AbelianWreathLabel(2, {{3, 2, 1}, {3, 1}})), 3);
  EXPECT_EQ(passive_induction_mult({3}, AbelianWreathLabel(2, {{2}, {1}})), 1);
  EXPECT_EQ(passive_induction_mult({2}, AbelianWreathLabel(2, {{1}, {1}})), 1);
  EXPECT_THROW(passive_induction_mult({3}, AbelianWreathLabel(2, {{1}, {1}})), InvalidArgument);
}

// passive S_n is strong Gelfand in B_n exactly up to n = 5
TEST(PassiveInduction, MaximumMultiplicity) {
  for (int n = 1; n <= 6; ++n) {
    Integer best = 0;
    for (const auto& w : partitions_of(n))
      for (const auto& l : bn_labels(n)) {
        Integer m = passive_induction_mult(w, AbelianWreathLabel(2, {l.lambda, l.mu}));
        if (m > best) best = m;
      }
    EXPECT_EQ(best, n <= 5 ? 1 : 2) << "n = " << n;
  }
}

TEST(Nail, Examples) {
  auto one = nail_decompose(2, 1, {3}, {{3}});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.entries()[0].label, AbelianWreathLabel(2, {{}, {3}}));
  EXPECT_EQ(one.entries()[0].mult, 1);

  auto reg = nail_decompose(2, 0, {1, 1}, {{1}, {1}});
  EXPECT_EQ(reg.size(), 2u);
  EXPECT_EQ(reg.count(AbelianWreathLabel(2, {{2}, {}})), 1);
  EXPECT_EQ(reg.count(AbelianWreathLabel(2, {{1, 1}, {}})), 1);

  auto six = nail_decompose(3, 2, {3, 3}, {{2, 1}, {2, 1}});
  EXPECT_EQ(six.count(AbelianWreathLabel(3, {{}, {}, {3, 2, 1}})), 2);
  EXPECT_THROW(nail_decompose(2, 0, {2}, {{1}}), InvalidArgument);
  EXPECT_THROW(nail_decompose(2, 2, {1}, {{1}}), InvalidArgument);
}

TEST(Clifford, Examples) {
  EXPECT_TRUE(clifford_split(L({1}, {1}), IndexTwoKernel::KerDelta).splits);
  auto r = clifford_split(L({2}, {}), IndexTwoKernel::KerDelta);
  EXPECT_FALSE(r.splits);
  EXPECT_EQ(r.partner, L({}, {2}));
  EXPECT_TRUE(clifford_split(L({2, 1}, {}), IndexTwoKernel::KerEps).splits);
  EXPECT_TRUE(clifford_split(L({2}, {1, 1}), IndexTwoKernel::KerEpsDelta).splits);
}

TEST(Characters, Examples) {
  EXPECT_EQ(bn_char_value(L({1}, {1}), SignedClass{{1, 1}, {}}), 2);
  EXPECT_EQ(bn_char_value(L({1}, {1}), SignedClass{{}, {1, 1}}), -2);
  EXPECT_EQ(bn_char_value(L({}, {2}), SignedClass{{1}, {1}}), -1);
  EXPECT_THROW(bn_char_value(L({1}, {1}), SignedClass{{1}, {}}), InvalidArgument);
}

TEST(Characters, FirstOrthogonality) {
  for (int n = 1; n <= 5; ++n) {
    auto labels = bn_labels(n);
    auto cls = signed_classes(n);
    EXPECT_EQ(labels.size(), cls.size());
    for (std::size_t a = 0; a < labels.size(); ++a) {
      EXPECT_EQ(bn_char_value(labels[a], SignedClass{Partition(std::vector<int>(n, 1)), {}}), dim_bn(labels[a]));
      for (std::size_t b = 0; b < labels.size(); ++b) {
        Integer s = 0;
        for (const auto& k : cls) s += signed_class_size(k) * bn_char_value(labels[a], k) * bn_char_value(labels[b], k);
        EXPECT_EQ(s, a == b ? bn_order(n) : Integer(0));
      }
    }
  }
}

// The rows computed analytically are exactly the rows of the Dixon table.
TEST(Characters, RowsEqualDixonTable) {
  Oracle o;
  for (int n = 1; n <= 4; ++n) {
    GroupPtr g = full_group(n).group_ptr();
    auto t = o.table(*g);
    const auto& cc = *t->classes;
    std::set<std::vector<std::uint64_t>> dixon(t->rows.begin(), t->rows.end()), analytic;
    for (const auto& l : bn_labels(n)) {
      std::vector<std::uint64_t> row;
      for (std::size_t c = 0; c < cc.count(); ++c) {
        auto v = bn_char_value(l, signed_cycle_type(decode(g->element(cc.reps[c]), 2)));
        row.push_back(mod::from_signed(static_cast<long long>(v), t->prime));
      }
      analytic.insert(row);
    }
    EXPECT_EQ(analytic, dixon) << "n = " << n;
  }
}
