#include <gtest/gtest.h>

#include <wreath/report.hpp>

using namespace wreath;

TEST(Parse, Partitions) {
  EXPECT_EQ(parse_partition("[3,2,1]"), (Partition{3, 2, 1}));
  EXPECT_EQ(parse_partition("3, 2,1"), (Partition{3, 2, 1}));
  EXPECT_EQ(parse_partition("[]"), Partition());
  EXPECT_EQ(parse_partition(""), Partition());
  EXPECT_THROW(parse_partition("[1,2]"), InvalidArgument);
  EXPECT_THROW(parse_partition("[2,,1]"), InvalidArgument);
  EXPECT_THROW(parse_partition("[2,x]"), InvalidArgument);
  EXPECT_THROW(parse_partition("[2,1"), InvalidArgument);
}

TEST(Parse, Labels) {
  BnIrrepLabel l = parse_label("[2,1],[1]");
  EXPECT_EQ(l.lambda, (Partition{2, 1}));
  EXPECT_EQ(l.mu, (Partition{1}));
  EXPECT_EQ(parse_label("[],[1]").lambda, Partition());
  EXPECT_EQ(parse_label("([1],[])").mu, Partition());
  EXPECT_THROW(parse_label("[1]"), InvalidArgument);
  EXPECT_THROW(parse_label("[1],[1],[1]"), InvalidArgument);
  EXPECT_THROW(parse_label("1,[1]"), InvalidArgument);
  EXPECT_EQ(parse_partition_list("[3],[],[1,1]").size(), 3u);
}

TEST(Json, PartitionsAndLabels) {
  EXPECT_EQ(to_json(Partition{3, 2, 1}).dump(), "[3,2,1]");
  EXPECT_EQ(to_json(Partition()).dump(), "[]");
  EXPECT_EQ(to_json(BnIrrepLabel{{2}, {}}).dump(), R"({"lambda":[2],"mu":[]})");
  EXPECT_EQ(to_json(Integer(7)).dump(), "7");
  Integer big = factorial(30);
  EXPECT_EQ(to_json(big).dump(), "\"" + big.str() + "\"");
  auto m = branch_up_b2({{}, {1}}, {{}, {2}});
  EXPECT_EQ(to_json(m).dump(),
            R"([{"label":{"lambda":[],"mu":[3]},"mult":1},{"label":{"lambda":[],"mu":[2,1]},"mult":1}])");
}

TEST(Json, ClassificationShapeAndDeterminism) {
  Oracle o1, o2;
  Json a = to_json(enumerate_strong_gelfand(2, Method::Both, o1));
  Json b = to_json(enumerate_strong_gelfand(2, Method::Both, o2));
  EXPECT_EQ(a.dump(), b.dump());
  for (const char* key : {"n", "method", "exhaustive", "rows", "counts", "notes"}) EXPECT_TRUE(a.contains(key)) << key;
  EXPECT_EQ(a["counts"]["strong_gelfand"], 6);
  EXPECT_EQ(a["counts"]["total"], 8);
  EXPECT_EQ(a["counts"]["raw_strong_gelfand"], 8);
  EXPECT_EQ(a["method"], "both");
  for (const auto& row : a["rows"]) {
    EXPECT_TRUE(row.contains("descriptor"));
    EXPECT_TRUE(row.contains("verdict"));
    if (row["verdict"] != "strong_gelfand") EXPECT_EQ(row["witness"]["multiplicity"], 2);
  }
}

TEST(Json, ThreadCountDoesNotChangeOutput) {
  Budget b4;
  b4.threads = 4;
  Oracle o1, o4(b4);
  EXPECT_EQ(to_json(enumerate_strong_gelfand(3, Method::Both, o1)).dump(),
            to_json(enumerate_strong_gelfand(3, Method::Both, o4)).dump());
}

TEST(Json, TableAndCross) {
  Json t = table1_json(9, instantiate_table1(9));
  EXPECT_EQ(t["count"], 37);
  EXPECT_EQ(t["rows"].size(), 37u);
  EXPECT_TRUE(t["notes"].empty());
  EXPECT_FALSE(table1_json(5, instantiate_table1(5))["notes"].empty());
  Oracle o;
  Json c = to_json(cross_validate(3, o));
  EXPECT_TRUE(c["ok"].get<bool>());
  Json fd = to_json(family_decision(parse_descriptor("J(6)"), 6));
  EXPECT_EQ(fd["verdict"], "not_strong_gelfand");
}

TEST(Json, CharacterTableOfB2) {
  Oracle o;
  GroupPtr g = full_group(2).group_ptr();
  Json t = table_json(*g, *o.table(*g), 2, 2);
  EXPECT_EQ(t["classes"].size(), 5u);
  EXPECT_EQ(t["rows"].size(), 5u);
  int negatives = 0;
  for (const auto& row : t["rows"])
    for (const auto& v : row["values"]) {
      EXPECT_GE(v.get<long>(), -2);
      EXPECT_LE(v.get<long>(), 2);
      negatives += v.get<long>() < 0;
    }
  EXPECT_GT(negatives, 0);
}

TEST(Csv, HeadersAndQuoting) {
  Oracle o;
  std::string csv = to_csv(enumerate_strong_gelfand(2, Method::Oracle, o));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "descriptor,order,verdict,source,witness_chi,witness_multiplicity");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
  EXPECT_EQ(csv_field("plain"), "plain");
  std::string m = to_csv(branch_up_b1({{1}, {1}}, B1Factor::PosOne));
  EXPECT_EQ(m.substr(0, m.find('\n')), "lambda,mu,mult");
  std::string x = to_csv(cross_validate(3, o));
  EXPECT_EQ(x.substr(0, x.find('\n')), "key,descriptor,in_table,fast,oracle,agree");
}

TEST(Text, Multisets) {
  EXPECT_EQ(to_text(branch_up_b2({{}, {1}}, {{}, {2}})), "S^([],[3]) + S^([],[2,1])\n");
  EXPECT_EQ(to_text(LabelMultiset()), "0\n");
}
