#pragma once

#include <cctype>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "acceptance.hpp"
#include "classifier.hpp"

namespace wreath {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Text input.

/// "[3,2,1]" or "3,2,1" or "" (empty partition).
inline Partition parse_partition(std::string s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (!t.empty() && t.front() == '[') {
    if (t.back() != ']') throw InvalidArgument("unbalanced brackets in partition '" + s + "'");
    t = t.substr(1, t.size() - 2);
  }
  std::vector<int> parts;
  std::stringstream in(t);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw InvalidArgument("empty part in partition '" + s + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw InvalidArgument("bad integer '" + item + "' in partition '" + s + "'");
    parts.push_back(v);
  }
  return Partition(parts);
}

/// Comma-separated bracketed partitions: "[2,1],[1]".
inline std::vector<Partition> parse_partition_list(const std::string& s) {
  std::vector<Partition> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',' || s[i] == '(' || s[i] == ')') {
      ++i;
      continue;
    }
    if (s[i] != '[') throw InvalidArgument("expected '[' in '" + s + "'");
    std::size_t j = s.find(']', i);
    if (j == std::string::npos) throw InvalidArgument("unbalanced brackets in '" + s + "'");
    out.push_back(parse_partition(s.substr(i, j - i + 1)));
    i = j + 1;
  }
  return out;
}

/// "[lambda],[mu]".
inline BnIrrepLabel parse_label(const std::string& s) {
  auto parts = parse_partition_list(s);
  if (parts.size() != 2) throw InvalidArgument("a B_n label needs two partitions: '" + s + "'");
  return {parts[0], parts[1]};
}

// ---------------------------------------------------------------------------
// JSON.

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Json to_json(const BnIrrepLabel& l) { return Json{{"lambda", to_json(l.lambda)}, {"mu", to_json(l.mu)}}; }

inline Json to_json(const SignedClass& c) { return Json{{"pos", to_json(c.pos)}, {"neg", to_json(c.neg)}}; }

inline Json to_json(const AbelianWreathLabel& u) {
  Json blocks = Json::array();
  for (const auto& b : u.blocks) blocks.push_back(to_json(b));
  return Json{{"r", u.r}, {"blocks", blocks}};
}

/// Multiplicities that fit in 64 bits are numbers, larger ones strings.
inline Json to_json(const Integer& v) {
  if (v >= 0 && v <= Integer(std::numeric_limits<std::int64_t>::max())) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

inline Json to_json(const LabelMultiset& m) {
  Json out = Json::array();
  for (const auto& e : m.entries()) out.push_back(Json{{"label", to_json(e.label)}, {"mult", to_json(e.mult)}});
  return out;
}

inline Json to_json(const WitnessInfo& w) {
  return Json{{"chi", to_json(w.chi)},
              {"psi", w.psi},
              {"multiplicity", w.multiplicity},
              {"chi_degree", w.chi_degree},
              {"psi_degree", w.psi_degree}};
}

inline Json to_json(const ClassificationReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j{{"descriptor", row.descriptor}, {"order", row.order}, {"verdict", to_string(row.verdict)},
           {"source", row.source}};
    if (row.conjugates) j["conjugates"] = row.conjugates;
    if (row.fast_verdict) j["fast_verdict"] = to_string(*row.fast_verdict);
    if (row.oracle_verdict) j["oracle_verdict"] = to_string(*row.oracle_verdict);
    if (row.witness) j["witness"] = to_json(*row.witness);
    rows.push_back(std::move(j));
  }
  Json counts{{"strong_gelfand", r.strong_gelfand}, {"total", r.total}};
  if (r.raw_strong_gelfand) counts["raw_strong_gelfand"] = *r.raw_strong_gelfand;
  if (r.raw_total) counts["raw_total"] = *r.raw_total;
  return Json{{"n", r.n},           {"method", to_string(r.method)}, {"exhaustive", r.exhaustive},
              {"rows", rows},       {"counts", counts},              {"notes", r.notes}};
}

inline Json to_json(const CrossReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j{{"key", row.key},
           {"descriptor", row.descriptor},
           {"in_table", row.in_table},
           {"fast", to_string(row.fast)},
           {"oracle", to_string(row.oracle)},
           {"agree", row.agree()},
           {"source", row.source}};
    if (row.witness) j["witness"] = to_json(*row.witness);
    rows.push_back(std::move(j));
  }
  return Json{{"n", r.n}, {"ok", r.ok()}, {"checked", r.checked()}, {"rows", rows}, {"notes", r.notes}};
}

inline Json to_json(const FamilyDecision& d) {
  return Json{{"descriptor", to_string(d.descriptor)},
              {"n", d.n},
              {"verdict", to_string(d.verdict)},
              {"source", d.source},
              {"family", d.key}};
}

inline Json table1_json(int n, const std::vector<TableRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back(Json{{"descriptor", to_string(r.descriptor)},
                       {"gamma", to_string(r.block)},
                       {"order", to_json(descriptor_order(r.descriptor))},
                       {"family", r.key},
                       {"source", family_decision(r.descriptor, n).source}});
  Json notes = Json::array();
  if (n < 8) notes.push_back("the table is exhaustive only for n >= 8; extra classes exist below");
  return Json{{"n", n}, {"rows", out}, {"count", rows.size()}, {"notes", notes}};
}

inline Json to_json(const CriterionResult& r) {
  return Json{{"id", r.id}, {"name", r.name}, {"status", to_string(r.status)}, {"detail", r.detail}};
}

/// Character table with class data.  Signed class types and row labels are
/// included for r = 2.
inline Json table_json(const FiniteGroup& g, const CharTable& t, int r, int n) {
  const auto& cc = *t.classes;
  Json classes = Json::array();
  for (std::size_t c = 0; c < cc.count(); ++c) {
    WreathElement x = decode(g.element(cc.reps[c]), r);
    Json j{{"size", cc.sizes[c]}, {"order", cc.rep_orders[c]}, {"rep", x.to_string()}};
    if (r == 2) j["signed_type"] = to_json(signed_cycle_type(x));
    classes.push_back(std::move(j));
  }
  // residues above p/2 print as negative integers when they are small
  auto value = [&](std::uint64_t v) -> Json {
    if (r > 2) return Json(v);
    if (v <= t.group_order) return Json(static_cast<std::int64_t>(v));
    if (t.prime - v <= t.group_order) return Json(-static_cast<std::int64_t>(t.prime - v));
    return Json(v);
  };
  std::vector<BnIrrepLabel> labels;
  if (r == 2) labels = label_rows(g, t, n);
  Json rows = Json::array();
  for (std::size_t a = 0; a < t.size(); ++a) {
    Json vals = Json::array();
    for (auto v : t.rows[a]) vals.push_back(value(v));
    Json j{{"degree", t.degrees[a]}, {"values", vals}};
    if (r == 2) j["label"] = to_json(labels[a]);
    rows.push_back(std::move(j));
  }
  return Json{{"r", r},
              {"n", n},
              {"order", t.group_order},
              {"prime", t.prime},
              {"values_mod_prime", r > 2},
              {"classes", classes},
              {"rows", rows}};
}

// ---------------------------------------------------------------------------
// CSV and plain text.

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

inline std::string to_csv(const ClassificationReport& r) {
  std::string out = "descriptor,order,verdict,source,witness_chi,witness_multiplicity\n";
  for (const auto& row : r.rows) {
    out += csv_field(row.descriptor) + "," + std::to_string(row.order) + "," + to_string(row.verdict) + "," +
           csv_field(row.source) + ",";
    if (row.witness) out += csv_field(row.witness->chi.to_string()) + "," + std::to_string(row.witness->multiplicity);
    else out += ",";
    out += "\n";
  }
  return out;
}

inline std::string to_csv(const CrossReport& r) {
  std::string out = "key,descriptor,in_table,fast,oracle,agree\n";
  for (const auto& row : r.rows)
    out += csv_field(row.key) + "," + csv_field(row.descriptor) + "," + (row.in_table ? "1" : "0") + "," +
           to_string(row.fast) + "," + to_string(row.oracle) + "," + (row.agree() ? "1" : "0") + "\n";
  return out;
}

inline std::string to_csv(const LabelMultiset& m) {
  std::string out = "lambda,mu,mult\n";
  for (const auto& e : m.entries())
    out += csv_field(e.label.lambda.to_string()) + "," + csv_field(e.label.mu.to_string()) + "," + e.mult.str() + "\n";
  return out;
}

inline std::string to_text(const ClassificationReport& r) {
  std::ostringstream s;
  s << "B(" << r.n << "), method " << to_string(r.method) << (r.exhaustive ? ", exhaustive" : ", not exhaustive")
    << "\n";
  for (const auto& row : r.rows) {
    s << "  " << to_string(row.verdict) << "  " << row.descriptor << "  |K|=" << row.order;
    if (row.witness) s << "  witness " << row.witness->chi.to_string() << " x" << row.witness->multiplicity;
    s << "\n";
  }
  s << "strong Gelfand classes: " << r.strong_gelfand << " of " << r.total;
  if (r.raw_strong_gelfand) s << " (subgroups: " << *r.raw_strong_gelfand << " of " << r.raw_total.value_or(0) << ")";
  s << "\n";
  for (const auto& n : r.notes) s << "note: " << n << "\n";
  return s.str();
}

inline std::string to_text(const LabelMultiset& m) {
  std::string s;
  for (const auto& e : m.entries())
    s += (s.empty() ? "" : " + ") + (e.mult == 1 ? std::string() : e.mult.str() + "*") + "S^" + e.label.to_string();
  return (s.empty() ? "0" : s) + "\n";
}

}  // namespace wreath
