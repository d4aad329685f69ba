// Command-line front end for the wreath library.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <wreath/acceptance.hpp>
#include <wreath/classifier.hpp>
#include <wreath/descriptor_text.hpp>
#include <wreath/oracle_checks.hpp>
#include <wreath/report.hpp>

using namespace wreath;

namespace {

constexpr int kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitResource = 3;

struct Settings {
  int n = -1;
  int r = 2;
  std::string method = "both";
  std::string format = "json";
  std::string cache_dir;
  bool no_cache = false;
  std::size_t budget_order = Budget{}.max_order;
  std::size_t budget_subgroups = Budget{}.max_subgroups;
  std::size_t budget_lattice = Budget{}.lattice_order;
  unsigned threads = 1;
  bool slow = false;
  bool seedless = false;
};

Budget budget_of(const Settings& s) {
  Budget b;
  b.max_order = s.budget_order;
  b.max_subgroups = s.budget_subgroups;
  b.lattice_order = s.budget_lattice;
  b.threads = s.threads == 0 ? 1 : s.threads;
  return b;
}

std::optional<std::filesystem::path> cache_of(const Settings& s) {
  if (s.no_cache || s.cache_dir.empty()) return std::nullopt;
  return std::filesystem::path(s.cache_dir);
}

void emit(const Settings& s, const Json& j, const std::string& csv, const std::string& text) {
  if (s.format == "csv") std::cout << csv;
  else if (s.format == "text") std::cout << text;
  else std::cout << j.dump(2) << "\n";
}

int error_out(const std::string& kind, const std::string& message, int code) {
  std::cerr << Json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << "\n";
  return code;
}

int require_n(const Settings& s) {
  if (s.n < 0) throw InvalidArgument("--n is required");
  return s.n;
}

// ---------------------------------------------------------------------------

int cmd_branch(const Settings& s, const std::string& lemma, const std::string& label_text, bool verify) {
  const BnIrrepLabel l = parse_label(label_text);
  LabelMultiset out;
  std::optional<std::pair<SubgroupDescriptor, std::size_t>> factor;  // for --verify
  int k = 0;
  auto part = [&](const std::string& prefix, int count) -> int {
    if (lemma.rfind(prefix, 0) != 0) return 0;
    int i = 0;
    try {
      i = std::stoi(lemma.substr(prefix.size()));
    } catch (const std::exception&) {
      i = 0;
    }
    if (i < 1 || i > count)
      throw InvalidArgument("part of " + prefix.substr(0, prefix.size() - 1) + " must be 1.." + std::to_string(count));
    return i;
  };
  Oracle oracle(budget_of(s), cache_of(s));
  const int n_out = l.n() + (lemma[0] == 'L' && lemma.size() > 1 && lemma[1] == '1' ? 1 : 2);
  if (s.n >= 0 && s.n != n_out)
    throw InvalidArgument("label of size " + std::to_string(l.n()) + " with " + lemma + " gives n = " +
                          std::to_string(n_out) + ", not " + std::to_string(s.n));
  std::uint64_t p = 0;
  if (verify) p = label_table(oracle, n_out).table->prime;
  if (int i = part("L1.", 3)) {
    k = 1;
    const B1Factor f[] = {B1Factor::PosOne, B1Factor::NegOne, B1Factor::PassiveS1};
    out = branch_up_b1(l, f[i - 1]);
    if (verify) {
      if (i == 3) factor = {{parse_descriptor("triv(1)"), 0}};
      else factor = {{parse_descriptor("B(1)"), bn_row(oracle, i == 1 ? BnIrrepLabel{{1}, {}} : BnIrrepLabel{{}, {1}}, p)}};
    }
  } else if (int i = part("L2.", 5)) {
    k = 2;
    const BnIrrepLabel w[] = {{{2}, {}}, {{1, 1}, {}}, {{1}, {1}}, {{}, {1, 1}}, {{}, {2}}};
    out = branch_up_b2(l, w[i - 1]);
    if (verify) factor = {{parse_descriptor("B(2)"), bn_row(oracle, w[i - 1], p)}};
  } else {
    std::optional<std::pair<Sub2, std::string>> sub;
    int idx = 0;
    if ((idx = part("D2.", 4))) sub = {{Sub2::D2, "D(2)"}};
    else if ((idx = part("H2.", 4))) sub = {{Sub2::H2, "H(2)"}};
    else if ((idx = part("S2.", 2))) sub = {{Sub2::S2bar, "S(2)"}};
    if (!sub) throw InvalidArgument("--lemma must be one of L1.1-L1.3, L2.1-L2.5, D2.1-D2.4, H2.1-H2.4, S2.1-S2.2");
    k = 2;
    out = branch_up_sub2(l, sub->first, idx - 1);
    if (verify) factor = {{parse_descriptor(sub->second), sub2_rows(oracle, sub->first, p)[idx - 1]}};
  }
  Json j{{"lemma", lemma}, {"label", to_json(l)}, {"n", l.n() + k}, {"result", to_json(out)}};
  bool ok = true;
  if (verify) {
    LabelMultiset o = oracle_induce_product(oracle, l.n() + k, l, factor->first, factor->second);
    ok = o == out;
    j["oracle"] = to_json(o);
    j["agree"] = ok;
  }
  emit(s, j, to_csv(out), to_text(out));
  return ok ? kExitOk : kExitFailure;
}

int cmd_mult(const Settings& s, const std::string& w_text, const std::string& u_text, bool with_oracle) {
  const Partition w = parse_partition(w_text);
  AbelianWreathLabel u(s.r, parse_partition_list(u_text));
  Integer m = passive_induction_mult(w, u);
  Json j{{"r", s.r}, {"w", to_json(w)}, {"label", to_json(u)}, {"multiplicity", to_json(m)}};
  bool ok = true;
  if (with_oracle) {
    Oracle oracle(budget_of(s), cache_of(s));
    std::uint64_t o = oracle_passive_mult(oracle, w, u);
    ok = Integer(o) == m;
    j["oracle_multiplicity"] = o;
    j["agree"] = ok;
  }
  emit(s, j, "w,label,multiplicity\n" + csv_field(w.to_string()) + "," + csv_field(u.to_string()) + "," + m.str() + "\n",
       "multiplicity " + m.str() + "\n");
  return ok ? kExitOk : kExitFailure;
}

int cmd_chartable(const Settings& s, bool verify) {
  const int n = require_n(s);
  Oracle oracle(budget_of(s), cache_of(s));
  GroupPtr g = full_group(n, s.r).group_ptr(oracle.budget());
  auto t = oracle.table(*g);
  // for r = 2 this also matches every row against the analytic character values
  Json j = table_json(*g, *t, s.r, n);
  bool ok = true;
  if (verify) {
    ok = rows_orthogonal(*t) && columns_orthogonal(*t);
    j["verified"] = ok;
  }
  std::string csv = "row,degree";
  for (std::size_t c = 0; c < t->classes->count(); ++c) csv += ",c" + std::to_string(c);
  csv += "\n";
  std::string text;
  std::vector<BnIrrepLabel> labels;
  if (s.r == 2) labels = label_rows(*g, *t, n);
  for (std::size_t a = 0; a < t->size(); ++a) {
    const Json& row = j["rows"][a];
    std::string name = s.r == 2 ? labels[a].to_string() : std::to_string(a);
    csv += csv_field(name) + "," + std::to_string(t->degrees[a]);
    text += name + ":";
    for (const auto& v : row["values"]) {
      csv += "," + v.dump();
      text += " " + v.dump();
    }
    csv += "\n";
    text += "\n";
  }
  emit(s, j, csv, text);
  return ok ? kExitOk : kExitFailure;
}

int cmd_check_pair(const Settings& s, const std::string& g_text, const std::string& k_text) {
  SubgroupDescriptor gd = parse_descriptor(g_text, s.n, s.r);
  const int n = gd.wreath_n();
  SubgroupDescriptor kd = parse_descriptor(k_text, n, s.r);
  if (kd.wreath_n() != n) throw InvalidArgument("the two descriptors live in different ambient groups");
  Oracle oracle(budget_of(s), cache_of(s));
  GroupPtr g = make_subgroup(gd, s.r).group_ptr(oracle.budget());
  GroupPtr k = make_subgroup(kd, s.r).group_ptr(oracle.budget());
  if (!g->contains(*k)) throw InvalidArgument(k_text + " is not a subgroup of " + g_text);
  const bool gelfand = oracle.is_gelfand(*g, *k);
  auto sg = oracle.is_strong_gelfand(*g, *k);
  Json j{{"group", to_string(gd)},        {"subgroup", to_string(kd)},   {"r", s.r},
         {"n", n},                        {"group_order", g->order()},   {"subgroup_order", k->order()},
         {"gelfand", gelfand},            {"strong_gelfand", sg.holds}, {"verdict", sg.holds}};
  std::string chi_name;
  if (sg.witness) {
    Json w{{"chi", sg.witness->chi},
           {"psi", sg.witness->psi},
           {"multiplicity", sg.witness->multiplicity},
           {"chi_degree", sg.witness->chi_degree},
           {"psi_degree", sg.witness->psi_degree}};
    if (s.r == 2 && gd.family == Family::Full) {
      auto lt = label_table(oracle, n);
      chi_name = lt.labels.at(sg.witness->chi).to_string();
      w["chi_label"] = to_json(lt.labels.at(sg.witness->chi));
    }
    j["witness"] = w;
  }
  if (s.r == 2 && gd.family == Family::Full && n >= 1) {
    auto fd = family_decision(kd, n);
    j["family_decision"] = to_json(fd);
  }
  std::string csv = "group,subgroup,gelfand,strong_gelfand,witness_multiplicity\n" + csv_field(to_string(gd)) + "," +
                    csv_field(to_string(kd)) + "," + (gelfand ? "1" : "0") + "," + (sg.holds ? "1" : "0") + "," +
                    (sg.witness ? std::to_string(sg.witness->multiplicity) : "") + "\n";
  std::string text = to_string(kd) + " in " + to_string(gd) + ": " + (sg.holds ? "strong Gelfand" : "not strong Gelfand") +
                     (gelfand ? ", Gelfand" : ", not Gelfand");
  if (sg.witness)
    text += "; witness " + (chi_name.empty() ? "row " + std::to_string(sg.witness->chi) : chi_name) + " restricts with multiplicity " +
            std::to_string(sg.witness->multiplicity);
  emit(s, j, csv, text + "\n");
  return kExitOk;
}

int cmd_table1(const Settings& s) {
  const int n = require_n(s);
  auto rows = instantiate_table1(n);
  Json j = table1_json(n, rows);
  std::string csv = "descriptor,gamma,order\n", text;
  for (const auto& r : rows) {
    csv += csv_field(to_string(r.descriptor)) + "," + csv_field(to_string(r.block)) + "," +
           descriptor_order(r.descriptor).str() + "\n";
    text += std::string(to_string(r.block)) + "  " + to_string(r.descriptor) + "\n";
  }
  text += std::to_string(rows.size()) + " rows\n";
  emit(s, j, csv, text);
  return kExitOk;
}

int cmd_classify(const Settings& s) {
  const int n = require_n(s);
  Budget b = budget_of(s);
  if (s.slow) {
    b.lattice_order = std::max<std::size_t>(b.lattice_order, 3840);
    b.max_subgroups = std::max<std::size_t>(b.max_subgroups, 5000000);
  }
  Oracle oracle(b, cache_of(s));
  auto rep = enumerate_strong_gelfand(n, to_method(s.method), oracle);
  emit(s, to_json(rep), to_csv(rep), to_text(rep));
  return kExitOk;
}

int cmd_cross(const Settings& s, bool table_only) {
  const int n = require_n(s);
  Oracle oracle(budget_of(s), cache_of(s));
  auto rep = cross_validate(n, oracle, table_only);
  std::string text;
  for (const auto& r : rep.rows)
    text += std::string(r.agree() ? "ok   " : "FAIL ") + r.descriptor + "  fast " + to_string(r.fast) + ", oracle " +
            to_string(r.oracle) + "\n";
  for (const auto& note : rep.notes) text += "note: " + note + "\n";
  emit(s, to_json(rep), to_csv(rep), text);
  return rep.ok() ? kExitOk : kExitFailure;
}

int cmd_verify(const Settings& s) {
  AcceptanceOptions opt;
  opt.slow = s.slow;
  opt.cache_dir = cache_of(s);
  opt.budget = budget_of(s);
  const bool text = s.format == "text";
  auto results = run_acceptance(opt, [&](const CriterionResult& r) {
    if (text) std::cout << to_string(r.status) << " " << r.id << " " << r.name << " (" << r.detail << ")" << std::endl;
  });
  bool ok = true;
  Json arr = Json::array();
  std::string csv = "id,name,status,detail\n";
  for (const auto& r : results) {
    ok = ok && r.status != Status::Fail;
    arr.push_back(to_json(r));
    csv += csv_field(r.id) + "," + csv_field(r.name) + "," + to_string(r.status) + "," + csv_field(r.detail) + "\n";
  }
  if (!text) emit(s, Json{{"slow", s.slow}, {"ok", ok}, {"criteria", arr}}, csv, "");
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representation theory of (Z/r) wr S_n and strong Gelfand subgroups of B_n"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--n", s.n, "Wreath index n")->envname("WREATH_N");
  app.add_option("--r", s.r, "Order of the cyclic base factor")->envname("WREATH_R")->check(CLI::Range(2, 16));
  app.add_option("--method", s.method, "fast, oracle or both")
      ->envname("WREATH_METHOD")
      ->check(CLI::IsMember({"fast", "oracle", "both"}));
  app.add_option("--format", s.format, "json, csv or text")
      ->envname("WREATH_FORMAT")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", s.cache_dir, "Character table cache directory")->envname("WREATH_CACHE_DIR");
  app.add_flag("--no-cache", s.no_cache, "Ignore the table cache")->envname("WREATH_NO_CACHE");
  app.add_option("--budget-order", s.budget_order, "Largest materialized group")->envname("WREATH_BUDGET_ORDER");
  app.add_option("--budget-subgroups", s.budget_subgroups, "Most subgroups visited by a lattice search")
      ->envname("WREATH_BUDGET_SUBGROUPS");
  app.add_option("--budget-lattice", s.budget_lattice, "Largest group whose subgroup lattice is searched")
      ->envname("WREATH_BUDGET_LATTICE");
  app.add_option("--threads", s.threads, "Worker threads for table construction")->envname("WREATH_THREADS");
  app.add_flag("--slow", s.slow, "Enable long-running checks")->envname("WREATH_SLOW");
  app.add_flag("--seedless", s.seedless, "Assert that no randomness is used (always true)")->envname("WREATH_SEEDLESS");

  std::string lemma, label, w, u, g_text, k_text;
  bool verify = false, with_oracle = false, table_only = false;
  auto* branch = app.add_subcommand("branch", "Branching rules for one label");
  branch->add_option("--lemma", lemma, "L1.1-L1.3, L2.1-L2.5, D2.1-D2.4, H2.1-H2.4, S2.1-S2.2")->required();
  branch->add_option("--label", label, "Label of the smaller group, e.g. \"[2,1],[1]\"")->required();
  branch->add_flag("--verify", verify, "Compare with the oracle induction");
  auto* mult = app.add_subcommand("mult", "Multiplicity of a label in the induction from the passive S_n");
  mult->add_option("--w", w, "Partition of n, e.g. \"[4,3,2,1]\"")->required();
  mult->add_option("--label", u, "One partition per residue, e.g. \"[3,2,1],[3,1]\"")->required();
  mult->add_flag("--oracle", with_oracle, "Also compute the multiplicity from the character table");
  auto* chartable = app.add_subcommand("chartable", "Character table of (Z/r) wr S_n");
  chartable->add_flag("--verify", verify, "Check orthogonality");
  auto* check = app.add_subcommand("check-pair", "Gelfand and strong Gelfand test for K in G");
  check->add_option("G", g_text, "Ambient descriptor")->required();
  check->add_option("K", k_text, "Subgroup descriptor")->required();
  auto* table1 = app.add_subcommand("table1", "Rows of the large-n classification table at n");
  auto* classify = app.add_subcommand("classify", "Strong Gelfand subgroups of B_n up to conjugacy");
  auto* cross = app.add_subcommand("cross", "Family rules against the oracle at n");
  cross->add_flag("--table-only", table_only, "Only the table rows valid at n");
  auto* verify_paper = app.add_subcommand("verify-paper", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return error_out("usage", e.what(), kExitUsage);
  }

  try {
    if (*branch) return cmd_branch(s, lemma, label, verify);
    if (*mult) return cmd_mult(s, w, u, with_oracle);
    if (*chartable) return cmd_chartable(s, verify);
    if (*check) return cmd_check_pair(s, g_text, k_text);
    if (*table1) return cmd_table1(s);
    if (*classify) return cmd_classify(s);
    if (*cross) return cmd_cross(s, table_only);
    if (*verify_paper) return cmd_verify(s);
  } catch (const ResourceError& e) {
    return error_out("resource", e.what(), kExitResource);
  } catch (const InvalidArgument& e) {
    return error_out("usage", e.what(), kExitUsage);
  } catch (const ConsistencyError& e) {
    return error_out("verification", e.what(), kExitFailure);
  } catch (const std::exception& e) {
    return error_out("internal", e.what(), kExitFailure);
  }
  return kExitUsage;
}
