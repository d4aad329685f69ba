#include <gtest/gtest.h>

#include <set>

#include <wreath/char_oracle.hpp>
#include <wreath/classifier.hpp>
#include <wreath/descriptor_text.hpp>
#include <wreath/lattice.hpp>

using namespace wreath;

namespace {

// sigma given 1-based in one-line form
WreathElement E(std::vector<int> f, std::vector<int> sigma1) {
  for (int& s : sigma1) --s;
  return WreathElement(2, std::move(f), std::move(sigma1));
}

Subgroup D(const std::string& text, int r = 2) { return make_subgroup(parse_descriptor(text, -1, r), r); }

std::set<std::uint64_t> codes_where(int n, const std::function<bool(const WreathElement&)>& pred) {
  std::set<std::uint64_t> out;
  for (const auto& x : full_group(n).elements())
    if (pred(x)) out.insert(embed_sym(x).code());
  return out;
}

std::set<std::uint64_t> codes_of(const Subgroup& k) {
  const auto& c = k.group().codes();
  return {c.begin(), c.end()};
}

int sign_of(CharKind c, const WreathElement& x) { return linear_char_value(c, x).sign(); }

}  // namespace

TEST(Element, GroupLawExamples) {
  EXPECT_EQ(E({1, 0}, {2, 1}) * E({1, 0}, {2, 1}), E({1, 1}, {1, 2}));
  const WreathElement x = E({1, 0}, {2, 1});
  EXPECT_EQ(x * WreathElement::identity(2, 2), x);
  EXPECT_EQ(inverse(x), E({0, 1}, {2, 1}));
  EXPECT_TRUE((x * inverse(x)).is_identity());
  EXPECT_THROW(E({0, 0}, {1, 1}), InvalidArgument);
  EXPECT_THROW(E({0}, {1, 2}), InvalidArgument);
}

TEST(Element, AssociativeAndInverse) {
  for (int r : {2, 3})
    for (int n = 1; n <= 3; ++n) {
      auto el = full_group(n, r).elements();
      for (const auto& a : el) {
        EXPECT_TRUE((a * inverse(a)).is_identity());
        for (const auto& b : el) {
          EXPECT_EQ(embed_sym(a * b), embed_sym(a) * embed_sym(b));
          if (n <= 2)
            for (const auto& c : el) EXPECT_EQ((a * b) * c, a * (b * c));
        }
      }
    }
}

TEST(Element, EmbedExamples) {
  EXPECT_EQ(embed_sym(E({1, 0}, {1, 2})), Perm::from_cycles(4, {{0, 1}}));
  EXPECT_EQ(embed_sym(E({0, 0}, {2, 1})), Perm::from_cycles(4, {{0, 2}, {1, 3}}));
  EXPECT_TRUE(embed_sym(WreathElement::identity(2, 3)).is_identity());
  for (const auto& x : full_group(3, 3).elements()) EXPECT_EQ(decode(embed_sym(x), 3), x);
}

TEST(Element, SignedCycleTypeExamples) {
  EXPECT_EQ(signed_cycle_type(E({0, 0}, {1, 2})), (SignedClass{{1, 1}, {}}));
  EXPECT_EQ(signed_cycle_type(E({0, 0}, {2, 1})), (SignedClass{{2}, {}}));
  EXPECT_EQ(signed_cycle_type(E({1, 0}, {1, 2})), (SignedClass{{1}, {1}}));
}

// signed cycle type separates the conjugacy classes found by orbits
TEST(Element, SignedCycleTypeIsCompleteInvariant) {
  for (int n = 1; n <= 4; ++n) {
    GroupPtr g = full_group(n).group_ptr();
    ConjClasses cc = conjugacy_classes(*g);
    EXPECT_EQ(cc.count(), signed_classes(n).size());
    std::vector<std::optional<SignedClass>> type_of(cc.count());
    std::set<SignedClass> seen;
    for (std::size_t e = 0; e < g->order(); ++e) {
      SignedClass t = signed_cycle_type(decode(g->element(e), 2));
      auto& slot = type_of[cc.class_of[e]];
      if (!slot) {
        slot = t;
        EXPECT_TRUE(seen.insert(t).second);
      } else {
        EXPECT_EQ(*slot, t);
      }
    }
    for (const auto& c : signed_classes(n)) {
      std::size_t members = 0;
      for (std::size_t e = 0; e < g->order(); ++e) members += signed_cycle_type(decode(g->element(e), 2)) == c;
      EXPECT_EQ(Integer(members), signed_class_size(c));
    }
  }
}

TEST(LinearChars, Examples) {
  const WreathElement t = E({1, 0, 0}, {1, 2, 3});
  EXPECT_EQ(sign_of(CharKind::Delta, t), -1);
  EXPECT_EQ(sign_of(CharKind::Eps, t), 1);
  for (int i = 1; i < 4; ++i) {
    std::vector<int> s = {1, 2, 3, 4};
    std::swap(s[i - 1], s[i]);
    EXPECT_EQ(sign_of(CharKind::Eps, E({0, 0, 0, 0}, s)), -1);
  }
  EXPECT_EQ(linear_char_value(CharKind::Chi2, E({1, 1}, {1, 2}), SmallDomain::D2).sign(), -1);
  EXPECT_THROW(linear_char_value(CharKind::Chi2, E({1, 0}, {1, 2}), SmallDomain::D2), InvalidArgument);
  EXPECT_THROW(linear_char_value(CharKind::Chi1, t), InvalidArgument);
  // H_2 is cyclic of order 4: chi1 takes a primitive fourth root on the generator
  auto c = linear_char_value(CharKind::Chi1, E({1, 0}, {2, 1}), SmallDomain::H2);
  EXPECT_EQ(c.order, 4);
}

TEST(Descriptors, KernelsMatchPredicates) {
  for (int n = 1; n <= 5; ++n) {
    const std::string N = "(" + std::to_string(n) + ")";
    auto dker = codes_where(n, [](const WreathElement& x) { return sign_of(CharKind::Delta, x) == 1; });
    auto eker = codes_where(n, [](const WreathElement& x) { return sign_of(CharKind::Eps, x) == 1; });
    auto edker = codes_where(n, [](const WreathElement& x) { return sign_of(CharKind::EpsDelta, x) == 1; });
    EXPECT_EQ(codes_of(D("D" + N)), dker);
    EXPECT_EQ(codes_of(D("FA" + N)), eker);
    EXPECT_EQ(codes_of(D("H" + N)), edker);
    std::set<std::uint64_t> both;
    for (auto c : dker)
      if (edker.count(c)) both.insert(c);
    EXPECT_EQ(codes_of(D("J" + N)), both);
  }
}

TEST(Descriptors, OrderExamples) {
  Subgroup d3 = D("D(3)");
  EXPECT_EQ(d3.order(), 24u);
  for (const auto& x : d3.elements()) EXPECT_EQ(x.flip_count() % 2, 0);
  EXPECT_EQ(D("J(4)").order(), 96u);
  EXPECT_EQ(D("fiber(B(2):delta, B(1):delta)").order(), 8u);
  EXPECT_EQ(D("S(2)", 3).order(), 2u);
  EXPECT_EQ(D("B(2)", 4).order(), 32u);
}

TEST(Descriptors, FormulaOrdersMatchMaterialized) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& e : catalog()) {
      if (!e.exists_at(n)) continue;
      SubgroupDescriptor d = e.build(n);
      EXPECT_EQ(descriptor_order(d), Integer(make_subgroup(d).order())) << to_string(d);
    }
  for (std::string s : {"young(2,1)", "base(3)", "diag(3)", "diagS(3)", "diagA(4)", "A(4)", "Y(4)", "triv(3)",
                        "Sp(2)", "S(2)xS(2)", "twist(B(3), delta)"}) {
    SubgroupDescriptor d = parse_descriptor(s);
    EXPECT_EQ(descriptor_order(d), Integer(make_subgroup(d).order())) << s;
  }
}

TEST(Descriptors, TextRoundTrip) {
  for (int n = 2; n <= 9; ++n)
    for (const auto& e : catalog()) {
      if (!e.exists_at(n)) continue;
      const std::string s = to_string(e.build(n));
      EXPECT_EQ(to_string(parse_descriptor(s)), s);
    }
  SubgroupDescriptor raw = parse_descriptor("raw(2; [1,1|2,1])");
  EXPECT_EQ(make_subgroup(raw).order(), 2u);
  EXPECT_EQ(to_string(parse_descriptor(to_string(raw))), to_string(raw));
  EXPECT_EQ(parse_descriptor("D", 5).wreath_n(), 5);
}

TEST(Descriptors, ParseErrorsEchoGrammar) {
  for (std::string bad : {"Q(3)", "B(3", "fiber(B(2):delta)", "B(2)x", "raw(2; [1|1])", "twist(B(3), zeta)"}) {
    try {
      parse_descriptor(bad);
      ADD_FAILURE() << bad << " parsed";
    } catch (const InvalidArgument& e) {
      EXPECT_NE(std::string(e.what()).find("grammar"), std::string::npos) << bad;
    }
  }
}

TEST(Lattice, ClosureOfCoxeterGenerators) {
  Subgroup k(2, 2, {E({1, 0}, {1, 2}), E({0, 0}, {2, 1})});
  EXPECT_EQ(k.order(), 8u);
  GroupPtr b2 = full_group(2).group_ptr();
  GroupPtr s = D("S(2)").group_ptr(), sp = D("Sp(2)").group_ptr();
  EXPECT_TRUE(are_conjugate(*b2, *s, *sp));
  EXPECT_FALSE(are_conjugate(*b2, *s, *D("diag(2)").group_ptr()));
}

TEST(Projections, MValues) {
  for (int n = 2; n <= 4; ++n) {
    const std::string N = "(" + std::to_string(n) + ")";
    EXPECT_EQ(m_value(D("D" + N)), 2);
    EXPECT_EQ(m_value(D("diagS" + N)), n);
    EXPECT_FALSE(m_value(D("S" + N)).has_value());
  }
}

TEST(Projections, GammaFiberCosetProperty) {
  Oracle o;
  for (int n : {3, 4}) {
    GroupPtr g = full_group(n).group_ptr();
    for (const auto& cl : subgroups_up_to_conjugacy(*g, o.budget())) {
      Subgroup k = lattice_subgroup(*g, cl, 2);
      const std::size_t base = gamma_fiber(k, Perm(n)).size();
      GroupPtr gk = gamma(k);
      EXPECT_EQ(base * gk->order(), k.order());
      for (std::size_t i = 0; i < gk->order(); ++i) EXPECT_EQ(gamma_fiber(k, gk->element(i)).size(), base);
    }
  }
}

TEST(Projections, LambdaSplitAndL) {
  auto [a, b] = lambda_split(D("fiber(B(3):eps, B(1):delta)"), 1);
  EXPECT_EQ(a.order(), 48u);
  EXPECT_EQ(b.order(), 2u);
  auto [a2, b2] = lambda_split(D("B(3)xtriv(1)"), 1);
  EXPECT_EQ(b2.order(), 1u);
  EXPECT_EQ(a2.order(), 48u);
  auto [a3, b3] = lambda_split(D("D(2)xD(2)"), 2);
  EXPECT_EQ(codes_of(a3), codes_of(D("D(2)")));
  EXPECT_EQ(codes_of(b3), codes_of(D("D(2)")));
  EXPECT_EQ(codes_of(aux_L(D("D(2)xD(2)"), 2)), codes_of(D("D(2)")));
  EXPECT_EQ(codes_of(aux_L(D("fiber(B(2):delta, D(2):chi1)"), 2)), codes_of(D("D(2)")));
  EXPECT_EQ(codes_of(aux_L(D("B(3)xtriv(1)"), 1)), codes_of(D("B(3)")));
  EXPECT_THROW(lambda_split(D("B(3)"), 1), InvalidArgument);
}

TEST(Projections, YIsPsiOfPassive) {
  for (int n = 2; n <= 4; ++n) {
    std::set<std::uint64_t> image;
    for (const auto& x : D("S(" + std::to_string(n) + ")").elements()) image.insert(embed_sym(psi_automorphism(x)).code());
    EXPECT_EQ(image, codes_of(D("Y(" + std::to_string(n) + ")")));
  }
}

TEST(Gate, Examples) {
  EXPECT_FALSE(gamma_gate(D("B(5)xB(3)"), 8).pass);
  EXPECT_TRUE(gamma_gate(D("FA(8)"), 8).pass);
  EXPECT_TRUE(gamma_gate(D("B(6)xB(2)"), 8).pass);
  EXPECT_TRUE(gamma_gate(D("B(7)xtriv(1)"), 8).pass);
  EXPECT_TRUE(gamma_gate(D("B(2)xB(2)"), 4).pass);
  EXPECT_TRUE(gamma_gate(D("triv(4)"), 4).pass);
}
