#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "groups.hpp"

namespace wreath {

inline constexpr const char* kDescriptorGrammar =
    "desc  := term ('x' term)*\n"
    "term  := NAME '(' INT ')' | NAME | young '(' INT (',' INT)* ')'\n"
    "       | twist '(' desc ',' CHAR ')' | fiber '(' desc ':' CHAR ',' desc ':' CHAR ')'\n"
    "       | raw '(' INT ';' ELEM (',' ELEM)* ')' | '(' desc ')'\n"
    "NAME  := B | D | H | J | FA | S | A | Y | diagS | diagA | diag | base | triv | Sp\n"
    "CHAR  := one | eps | delta | epsdelta | chi1 | chi2 | chi3\n"
    "ELEM  := '[' f1,...,fn '|' s1,...,sn ']'   (sigma in one-line form, 1-based)\n"
    "A bare NAME takes n from the ambient group.";

namespace detail {

struct FamilyName {
  const char* name;
  Family family;
};

inline const std::vector<FamilyName>& family_names() {
  static const std::vector<FamilyName> names = {
      {"B", Family::Full},         {"D", Family::Dn},          {"H", Family::Hn},
      {"J", Family::Jn},           {"FA", Family::FwrAn},      {"S", Family::PassiveSn},
      {"A", Family::PassiveAn},    {"Y", Family::Yn},          {"diagS", Family::DiagFSn},
      {"diagA", Family::DiagFAn},  {"diag", Family::Diag},     {"base", Family::Base},
      {"triv", Family::Trivial},   {"Sp", Family::SbarPrime}};
  return names;
}

inline std::string elements_text(const std::vector<WreathElement>& gens) {
  std::string s;
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].to_string();
  return s;
}

}  // namespace detail

inline std::string to_string(const SubgroupDescriptor& d) {
  switch (d.family) {
    case Family::YoungWreath: {
      std::string s = "young(";
      for (std::size_t i = 0; i < d.composition.size(); ++i)
        s += (i ? "," : "") + std::to_string(d.composition[i]);
      return s + ")";
    }
    case Family::Product: {
      std::string s;
      for (std::size_t i = 0; i < d.parts.size(); ++i) s += (i ? "x" : "") + to_string(d.parts[i]);
      return s;
    }
    case Family::TwistedDiagonal:
      return "twist(" + to_string(d.parts.at(0)) + ", " + to_string(d.char_a) + ")";
    case Family::FiberProduct:
      return "fiber(" + to_string(d.parts.at(0)) + ":" + to_string(d.char_a) + ", " +
             to_string(d.parts.at(1)) + ":" + to_string(d.char_b) + ")";
    case Family::Raw:
      return "raw(" + std::to_string(d.n) + "; " + detail::elements_text(d.raw_gens) + ")";
    default:
      for (const auto& fn : detail::family_names())
        if (fn.family == d.family) return std::string(fn.name) + "(" + std::to_string(d.n) + ")";
  }
  return "?";
}

namespace detail {

class DescriptorParser {
 public:
  DescriptorParser(const std::string& text, int default_n, int r)
      : s_(text), default_n_(default_n), r_(r) {}

  SubgroupDescriptor parse() {
    SubgroupDescriptor d = desc();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return d;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgument("cannot parse descriptor '" + s_ + "' at offset " + std::to_string(pos_) +
                          ": " + why + "\ngrammar:\n" + kDescriptorGrammar);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string ident() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  int integer() {
    skip();
    std::size_t start = pos_;
    bool neg = pos_ < s_.size() && s_[pos_] == '-';
    if (neg) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start + (neg ? 1 : 0)) fail("expected an integer");
    return std::stoi(s_.substr(start, pos_ - start));
  }
  CharKind character() {
    std::string id = ident();
    // chi1..chi3 carry a digit
    if (id == "chi") {
      int k = integer();
      if (k < 1 || k > 3) fail("chi index must be 1, 2 or 3");
      return k == 1 ? CharKind::Chi1 : (k == 2 ? CharKind::Chi2 : CharKind::Chi3);
    }
    if (id == "one") return CharKind::One;
    if (id == "eps") return CharKind::Eps;
    if (id == "delta") return CharKind::Delta;
    if (id == "epsdelta") return CharKind::EpsDelta;
    fail("unknown character '" + id + "'");
  }

  SubgroupDescriptor desc() {
    std::vector<SubgroupDescriptor> terms{term()};
    while (peek('x')) {
      ++pos_;
      terms.push_back(term());
    }
    if (terms.size() == 1) return terms[0];
    return SubgroupDescriptor::product(std::move(terms));
  }

  WreathElement element(int n) {
    expect('[');
    std::vector<int> f, s;
    if (!peek('|')) {
      f.push_back(integer());
      while (peek(',')) {
        ++pos_;
        f.push_back(integer());
      }
    }
    expect('|');
    if (!peek(']')) {
      s.push_back(integer() - 1);
      while (peek(',')) {
        ++pos_;
        s.push_back(integer() - 1);
      }
    }
    expect(']');
    if (static_cast<int>(f.size()) != n || static_cast<int>(s.size()) != n)
      fail("raw element must have " + std::to_string(n) + " coordinates");
    return WreathElement(r_, f, s);
  }

  SubgroupDescriptor term() {
    if (peek('(')) {
      ++pos_;
      SubgroupDescriptor d = desc();
      expect(')');
      return d;
    }
    std::string id = ident();
    if (id.empty()) fail("expected a subgroup name");
    if (id == "young") {
      expect('(');
      Composition c{integer()};
      while (peek(',')) {
        ++pos_;
        c.push_back(integer());
      }
      expect(')');
      return SubgroupDescriptor::young(c);
    }
    if (id == "twist") {
      expect('(');
      SubgroupDescriptor a = desc();
      expect(',');
      CharKind c = character();
      expect(')');
      LinearChar lc;
      switch (c) {
        case CharKind::One: lc = LinearChar::One; break;
        case CharKind::Eps: lc = LinearChar::Eps; break;
        case CharKind::Delta: lc = LinearChar::Delta; break;
        case CharKind::EpsDelta: lc = LinearChar::EpsDelta; break;
        default: fail("twist takes one of one, eps, delta, epsdelta");
      }
      return SubgroupDescriptor::twisted(a, lc);
    }
    if (id == "fiber") {
      expect('(');
      SubgroupDescriptor a = desc();
      expect(':');
      CharKind ca = character();
      expect(',');
      SubgroupDescriptor b = desc();
      expect(':');
      CharKind cb = character();
      expect(')');
      return SubgroupDescriptor::fiber(a, ca, b, cb);
    }
    if (id == "raw") {
      expect('(');
      int n = integer();
      std::vector<WreathElement> gens;
      if (peek(';')) {
        ++pos_;
        gens.push_back(element(n));
        while (peek(',')) {
          ++pos_;
          gens.push_back(element(n));
        }
      }
      expect(')');
      return SubgroupDescriptor::raw(r_, n, gens);
    }
    for (const auto& fn : family_names()) {
      if (id != fn.name) continue;
      int n = default_n_;
      if (peek('(')) {
        ++pos_;
        n = integer();
        expect(')');
      } else if (n < 0) {
        fail("'" + id + "' needs an explicit (n) here");
      }
      if (n < 0) fail("n must be nonnegative");
      return SubgroupDescriptor::atom(fn.family, n);
    }
    fail("unknown subgroup name '" + id + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
  int default_n_;
  int r_;
};

}  // namespace detail

/// Parses the descriptor grammar.  A bare family name takes n = default_n.
inline SubgroupDescriptor parse_descriptor(const std::string& text, int default_n = -1, int r = 2) {
  return detail::DescriptorParser(text, default_n, r).parse();
}

}  // namespace wreath
