#include <gtest/gtest.h>

#include <set>

#include <wreath/char_oracle.hpp>
#include <wreath/lattice.hpp>

using namespace wreath;

namespace {

using Set = std::vector<std::uint32_t>;

Set close(const FiniteGroup& g, const std::vector<std::uint32_t>& gens) {
  std::set<std::uint32_t> in{0};
  std::vector<std::uint32_t> queue{0};
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (auto s : gens) {
      auto y = static_cast<std::uint32_t>(g.index_of(g.element(queue[h]) * g.element(s)));
      if (in.insert(y).second) queue.push_back(y);
    }
  return {in.begin(), in.end()};
}

Set conjugate(const FiniteGroup& g, const Set& s, std::uint32_t x) {
  Perm px = g.element(x), pinv = px.inverse();
  Set out;
  for (auto e : s) out.push_back(static_cast<std::uint32_t>(g.index_of(px * g.element(e) * pinv)));
  std::sort(out.begin(), out.end());
  return out;
}

// All subgroups generated by at most three elements, and their conjugacy classes.
std::pair<std::size_t, std::size_t> brute_lattice(const FiniteGroup& g) {
  const auto order = static_cast<std::uint32_t>(g.order());
  std::set<Set> subs;
  for (std::uint32_t a = 0; a < order; ++a)
    for (std::uint32_t b = a; b < order; ++b)
      for (std::uint32_t c = b; c < order; ++c) subs.insert(close(g, {a, b, c}));
  std::set<Set> canon;
  for (const auto& s : subs) {
    Set best = s;
    for (std::uint32_t x = 0; x < order; ++x) best = std::min(best, conjugate(g, s, x));
    canon.insert(best);
  }
  return {subs.size(), canon.size()};
}

}  // namespace

TEST(Lattice, SymmetricGroups) {
  auto s3 = subgroups_up_to_conjugacy(*symmetric_group(3));
  EXPECT_EQ(s3.size(), 4u);
  EXPECT_EQ(raw_subgroup_count(s3), 6u);
  auto s4 = subgroups_up_to_conjugacy(*symmetric_group(4));
  EXPECT_EQ(s4.size(), 11u);
  EXPECT_EQ(raw_subgroup_count(s4), 30u);
  auto s5 = subgroups_up_to_conjugacy(*symmetric_group(5));
  EXPECT_EQ(s5.size(), 19u);
  EXPECT_EQ(raw_subgroup_count(s5), 156u);
}

TEST(Lattice, HyperoctahedralAgainstBruteForce) {
  for (int n : {2, 3}) {
    GroupPtr g = full_group(n).group_ptr();
    auto classes = subgroups_up_to_conjugacy(*g);
    auto [raw, up_to] = brute_lattice(*g);
    EXPECT_EQ(classes.size(), up_to) << n;
    EXPECT_EQ(raw_subgroup_count(classes), raw) << n;
  }
  auto b2 = subgroups_up_to_conjugacy(*full_group(2).group_ptr());
  EXPECT_EQ(b2.size(), 8u);
  EXPECT_EQ(raw_subgroup_count(b2), 10u);
  auto b3 = subgroups_up_to_conjugacy(*full_group(3).group_ptr());
  EXPECT_EQ(b3.size(), 33u);
  EXPECT_EQ(raw_subgroup_count(b3), 98u);
}

TEST(Lattice, B4Counts) {
  auto b4 = subgroups_up_to_conjugacy(*full_group(4).group_ptr());
  EXPECT_EQ(b4.size(), 193u);
  EXPECT_EQ(raw_subgroup_count(b4), 1659u);
}

TEST(Lattice, ClassesAreSubgroupsWithValidGenerators) {
  GroupPtr g = full_group(3).group_ptr();
  for (const auto& c : subgroups_up_to_conjugacy(*g)) {
    EXPECT_EQ(close(*g, c.gens), c.elements);
    EXPECT_EQ(g->order() % c.order(), 0u);
    EXPECT_EQ(materialize(*g, c)->order(), c.order());
    EXPECT_EQ(lattice_subgroup(*g, c, 2).order(), c.order());
    EXPECT_EQ((g->order() / c.order()) % c.conjugates, 0u);
  }
}

TEST(Lattice, BudgetsAreEnforced) {
  Budget small;
  small.lattice_order = 10;
  EXPECT_THROW(subgroups_up_to_conjugacy(*full_group(3).group_ptr(), small), ResourceError);
  Budget few;
  few.max_subgroups = 20;
  EXPECT_THROW(subgroups_up_to_conjugacy(*full_group(3).group_ptr(), few), ResourceError);
}

TEST(Conjugacy, PairsInB2AndB3) {
  GroupPtr b2 = full_group(2).group_ptr();
  auto d = [](const std::string& s) { return make_subgroup(parse_descriptor(s)).group_ptr(); };
  EXPECT_TRUE(are_conjugate(*b2, *d("S(2)"), *d("Sp(2)")));
  EXPECT_FALSE(are_conjugate(*b2, *d("S(2)"), *d("diag(2)")));
  EXPECT_TRUE(are_conjugate(*b2, *d("B(1)xtriv(1)"), *d("triv(1)xB(1)")));
  GroupPtr b3 = full_group(3).group_ptr();
  EXPECT_TRUE(are_conjugate(*b3, *d("B(2)xB(1)"), *d("B(1)xB(2)")));
  EXPECT_FALSE(are_conjugate(*b3, *d("D(3)"), *d("H(3)")));
  EXPECT_FALSE(are_conjugate(*b3, *d("B(2)xB(1)"), *symmetric_group(6)));
  GroupPtr foreign = FiniteGroup::generate(6, {Perm::from_cycles(6, {{0, 2}})});
  EXPECT_THROW(are_conjugate(*b3, *d("diag(3)"), *foreign), InvalidArgument);
}
