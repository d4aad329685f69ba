#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include <wreath/oracle_checks.hpp>

using namespace wreath;

namespace {

namespace fs = std::filesystem;

fs::path fresh_dir(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("wreath-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(d);
  return d;
}

std::uint64_t brute_prime(std::uint64_t e, std::uint64_t lower) {
  for (std::uint64_t p = lower + 1;; ++p) {
    if (p % e != 1 % e) continue;
    bool prime = p > 1;
    for (std::uint64_t d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (prime) return p;
  }
}

GroupPtr B(int n) { return full_group(n).group_ptr(); }
GroupPtr D(const std::string& s) { return make_subgroup(parse_descriptor(s)).group_ptr(); }

}  // namespace

TEST(Classes, Examples) {
  EXPECT_EQ(conjugacy_classes(*B(2)).count(), 5u);
  EXPECT_EQ(conjugacy_classes(*D("triv(3)")).count(), 1u);
  EXPECT_EQ(conjugacy_classes(*B(3)).count(), 10u);
  for (int n = 1; n <= 4; ++n) {
    ConjClasses cc = conjugacy_classes(*B(n));
    std::uint64_t total = 0;
    for (auto s : cc.sizes) total += s;
    EXPECT_EQ(total, B(n)->order());
    for (std::size_t c = 0; c < cc.count(); ++c) EXPECT_EQ(cc.inverse_map[cc.inverse_map[c]], c);
  }
}

TEST(Prime, SmallestAdmissible) {
  Oracle o;
  for (int n = 1; n <= 4; ++n) {
    GroupPtr g = B(n);
    EXPECT_EQ(o.prime_for(*g), brute_prime(o.classes(*g)->exponent, 2 * g->order())) << n;
  }
  EXPECT_EQ(o.prime_for(*B(2)), 17u);
  EXPECT_EQ(o.prime_for(*B(3)), 97u);
  EXPECT_EQ(mod::prime_above(12, 96, 1000), 97u);
  EXPECT_EQ(mod::prime_above(4, 15, 1000), 17u);
  EXPECT_THROW(mod::prime_above(4, 1000, 1004), ResourceError);
}

TEST(Tables, SymmetricGroupsMatchMurnaghanNakayama) {
  Oracle o;
  for (int n = 1; n <= 6; ++n) {
    GroupPtr g = symmetric_group(n);
    auto t = o.table(*g);
    const auto& cc = *t->classes;
    std::set<std::vector<std::uint64_t>> dixon(t->rows.begin(), t->rows.end()), mn;
    for (const auto& lam : partitions_of(n)) {
      std::vector<std::uint64_t> row;
      for (std::size_t c = 0; c < cc.count(); ++c)
        row.push_back(mod::from_signed(static_cast<long long>(sym_char_value(lam, cycle_type(g->element(cc.reps[c])))),
                                       t->prime));
      mn.insert(row);
    }
    EXPECT_EQ(mn, dixon) << "S" << n;
  }
}

TEST(Tables, OrthogonalityAndDegrees) {
  Oracle o;
  std::vector<GroupPtr> groups = {B(1), B(2), B(3), B(4), D("H(2)"), D("J(4)"), D("S(4)"), D("diagS(3)")};
  groups.push_back(full_group(2, 3).group_ptr());
  groups.push_back(full_group(3, 3).group_ptr());
  for (const auto& g : groups) {
    auto t = o.table(*g);
    EXPECT_EQ(t->size(), t->classes->count());
    EXPECT_TRUE(rows_orthogonal(*t));
    EXPECT_TRUE(columns_orthogonal(*t));
    std::uint64_t sq = 0;
    for (auto d : t->degrees) {
      EXPECT_EQ(g->order() % d, 0u);
      sq += d * d;
    }
    EXPECT_EQ(sq, g->order());
  }
}

TEST(Tables, DegreeExamples) {
  Oracle o;
  auto sorted = [](std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(sorted(o.table(*B(2))->degrees), (std::vector<std::uint64_t>{1, 1, 1, 1, 2}));
  EXPECT_EQ(sorted(o.table(*D("H(2)"))->degrees), (std::vector<std::uint64_t>{1, 1, 1, 1}));
  // squares sum to 48
  EXPECT_EQ(sorted(o.table(*B(3))->degrees), (std::vector<std::uint64_t>{1, 1, 1, 1, 2, 2, 3, 3, 3, 3}));
  std::vector<std::uint64_t> dims;
  for (const auto& l : bn_labels(3)) dims.push_back(static_cast<std::uint64_t>(dim_bn(l)));
  EXPECT_EQ(sorted(o.table(*B(3))->degrees), sorted(dims));
}

TEST(Tables, ThreadCountDoesNotChangeOutput) {
  Budget b1, b4;
  b4.threads = 4;
  Oracle o1(b1), o4(b4);
  for (int n = 2; n <= 4; ++n) {
    auto t1 = o1.table(*B(n)), t4 = o4.table(*B(n));
    EXPECT_EQ(t1->prime, t4->prime);
    EXPECT_EQ(t1->degrees, t4->degrees);
    EXPECT_EQ(t1->rows, t4->rows);
  }
}

TEST(Labels, Examples) {
  Oracle o;
  EXPECT_EQ(label_table(o, 1).labels.size(), 2u);
  auto lt = label_table(o, 2);
  EXPECT_EQ(std::set<BnIrrepLabel>(lt.labels.begin(), lt.labels.end()).size(), 5u);
  EXPECT_EQ(label_table(o, 4).labels.size(), 20u);
  // B_1: the trivial label sits on the trivial row
  auto l1 = label_table(o, 1);
  std::size_t triv = l1.row_of({Partition{1}, Partition{}});
  for (auto v : l1.table->rows[triv]) EXPECT_EQ(v, 1u);
}

TEST(Restriction, Examples) {
  Oracle o;
  GroupPtr b2 = B(2), diag = D("diag(2)");
  auto lt = label_table(o, 2);
  auto m = o.restriction_matrix(*b2, *diag);
  const std::size_t two = lt.row_of({Partition{1}, Partition{1}});
  const auto tk = o.table(*diag, lt.table->prime);
  std::size_t nontriv = tk->rows[0][1] == 1 ? 1 : 0;
  EXPECT_EQ(m[two][nontriv], 2u);
  // trivial against trivial is 1 for every subgroup of B_3
  GroupPtr b3 = B(3);
  auto t3 = o.table(*b3);
  std::size_t triv3 = 0;
  while (std::any_of(t3->rows[triv3].begin(), t3->rows[triv3].end(), [](std::uint64_t v) { return v != 1; })) ++triv3;
  for (const std::string s : {"B(3)", "D(3)", "S(3)", "triv(3)", "B(2)xB(1)", "diag(3)"}) {
    GroupPtr k = D(s);
    auto tk3 = o.table(*k, t3->prime);
    std::size_t tr = 0;
    while (std::any_of(tk3->rows[tr].begin(), tk3->rows[tr].end(), [](std::uint64_t v) { return v != 1; })) ++tr;
    EXPECT_EQ(o.restriction_mult(*b3, *k, triv3, tr), 1u) << s;
  }
  // ind of S^{(1),(1)} x (1;1) from B_2 x B_1 to B_3
  const std::uint64_t p = label_table(o, 3).table->prime;
  auto ind = oracle_induce_product(o, 3, {Partition{1}, Partition{1}}, parse_descriptor("B(1)"),
                                   bn_row(o, {Partition{1}, Partition{}}, p));
  EXPECT_EQ(ind, make_multiset({{Partition{2}, Partition{1}}, {Partition{1, 1}, Partition{1}}}));
}

TEST(Restriction, ReciprocityAgainstDirectInduction) {
  Oracle o;
  GroupPtr g = B(3);
  for (const std::string s : {"D(3)", "S(3)", "Y(3)", "B(2)xB(1)", "diagS(3)", "base(3)"}) {
    GroupPtr k = D(s);
    auto m = o.restriction_matrix(*g, *k);
    for (std::size_t psi = 0; psi < m.front().size(); ++psi) {
      auto direct = o.induce_direct(*g, *k, psi);
      for (std::size_t chi = 0; chi < m.size(); ++chi) EXPECT_EQ(direct[chi], m[chi][psi]) << s;
    }
  }
}

TEST(Gelfand, Examples) {
  Oracle o;
  EXPECT_TRUE(o.is_gelfand(*B(3), *B(3)));
  EXPECT_TRUE(o.is_strong_gelfand(*B(3), *B(3)).holds);
  EXPECT_TRUE(o.is_strong_gelfand(*B(2), *D("S(2)")).holds);
  auto r = o.is_strong_gelfand(*B(2), *D("triv(2)"));
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->multiplicity, 2u);
  EXPECT_EQ(r.witness->chi_degree, 2u);
  EXPECT_TRUE(o.is_gelfand(*B(4), *D("S(4)")));
}

TEST(Fusion, RejectsForeignSubgroup) {
  Oracle o;
  EXPECT_THROW(o.fusion(*D("H(3)"), *D("S(3)")), InvalidArgument);
  EXPECT_NO_THROW(o.fusion(*D("D(3)"), *D("S(3)")));
  // fused representatives are conjugate in G
  GroupPtr g = B(3), k = D("D(3)");
  auto fu = o.fusion(*g, *k);
  auto cg = o.classes(*g);
  auto ck = o.classes(*k);
  for (std::size_t c = 0; c < ck->count(); ++c)
    EXPECT_EQ(signed_cycle_type(decode(k->element(ck->reps[c]), 2)),
              signed_cycle_type(decode(g->element(cg->reps[fu[c]]), 2)));
}

TEST(Cache, RoundTripAndRejection) {
  const fs::path dir = fresh_dir("cache");
  GroupPtr g = B(3);
  std::shared_ptr<const CharTable> first;
  {
    Oracle o(Budget{}, dir);
    first = o.table(*g);
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
  ASSERT_EQ(files.size(), 1u);
  EXPECT_EQ(files[0].extension(), ".json");

  TableCache cache(dir);
  Oracle o;
  auto cc = o.classes(*g);
  auto loaded = cache.load(*g, cc, first->prime);
  ASSERT_TRUE(loaded.has_value());
  EXPECT_EQ(loaded->rows, first->rows);
  EXPECT_EQ(loaded->degrees, first->degrees);
  EXPECT_FALSE(cache.load(*g, cc, first->prime + 2).has_value());

  // a different version is ignored and the table recomputed
  std::string text;
  {
    std::ifstream in(files[0]);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  auto pos = text.find("\"version\":" + std::to_string(kTableCacheVersion));
  ASSERT_NE(pos, std::string::npos);
  std::string bumped = text;
  bumped.replace(pos, 11, "\"version\":9");
  { std::ofstream(files[0]) << bumped; }
  EXPECT_FALSE(cache.load(*g, cc, first->prime).has_value());
  {
    Oracle again(Budget{}, dir);
    EXPECT_EQ(again.table(*g)->rows, first->rows);
  }
  EXPECT_TRUE(cache.load(*g, cc, first->prime).has_value());

  { std::ofstream(files[0]) << "{ not json"; }
  EXPECT_FALSE(cache.load(*g, cc, first->prime).has_value());
  fs::remove_all(dir);
}

TEST(Budget, OrderLimitRaises) {
  Budget b;
  b.max_order = 100;
  EXPECT_THROW(full_group(4).group_ptr(b), ResourceError);
}
