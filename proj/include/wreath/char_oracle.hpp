#pragma once

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include <json.hpp>

#include "bn_theory.hpp"
#include "groups.hpp"
#include "modular.hpp"

namespace wreath {

/// Runs body(i) for i in [0, count) on up to `threads` threads.  Each index
/// writes only its own output slot, so results do not depend on the thread count.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, count); ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  for (auto& th : pool) th.join();
}

/// Conjugacy classes of a materialized group, in canonical order: size
/// ascending, then least element code.  Class 0 is the identity.
struct ConjClasses {
  std::vector<std::uint32_t> reps;        // element index of the least member
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> class_of;    // element index -> class id
  std::vector<std::uint32_t> inverse_map; // class id -> class of inverses
  std::vector<int> rep_orders;
  std::uint64_t exponent = 1;

  std::size_t count() const { return reps.size(); }
};

inline ConjClasses conjugacy_classes(const FiniteGroup& g) {
  const std::size_t order = g.order();
  const std::uint32_t unset = ~0u;
  std::vector<std::uint32_t> raw(order, unset);
  std::vector<std::vector<std::uint32_t>> members;
  std::vector<Perm> gens = g.generators(), gens_inv;
  for (const auto& s : gens) gens_inv.push_back(s.inverse());

  for (std::uint32_t start = 0; start < order; ++start) {
    if (raw[start] != unset) continue;
    std::uint32_t id = static_cast<std::uint32_t>(members.size());
    members.emplace_back();
    auto& cls = members.back();
    raw[start] = id;
    cls.push_back(start);
    for (std::size_t head = 0; head < cls.size(); ++head) {
      Perm x = g.element(cls[head]);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        long y = g.index_of((gens[k] * x * gens_inv[k]).code());
        if (y < 0) throw ConsistencyError("conjugate left the group");
        if (raw[y] == unset) {
          raw[y] = id;
          cls.push_back(static_cast<std::uint32_t>(y));
        }
      }
    }
  }
  std::vector<std::uint32_t> perm(members.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::vector<std::uint32_t> least(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    least[i] = *std::min_element(members[i].begin(), members[i].end());
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (members[a].size() != members[b].size()) return members[a].size() < members[b].size();
    return least[a] < least[b];
  });
  std::vector<std::uint32_t> rank(members.size());
  for (std::uint32_t i = 0; i < perm.size(); ++i) rank[perm[i]] = i;

  ConjClasses cc;
  cc.class_of.resize(order);
  for (std::size_t e = 0; e < order; ++e) cc.class_of[e] = rank[raw[e]];
  for (auto old : perm) {
    cc.reps.push_back(least[old]);
    cc.sizes.push_back(members[old].size());
  }
  for (std::size_t c = 0; c < cc.count(); ++c) {
    Perm x = g.element(cc.reps[c]);
    cc.inverse_map.push_back(cc.class_of[g.index_of(x.inverse())]);
    cc.rep_orders.push_back(x.order());
    cc.exponent = std::lcm<std::uint64_t>(cc.exponent, x.order());
  }
  return cc;
}

/// Irreducible characters as residues mod a prime p with p = 1 mod exponent
/// and p > 2|G|.  Rows are sorted by degree, then by residues.
struct CharTable {
  std::uint64_t prime = 0;
  std::uint64_t group_order = 0;
  std::shared_ptr<const ConjClasses> classes;
  std::vector<std::uint64_t> degrees;
  std::vector<std::vector<std::uint64_t>> rows;

  std::size_t size() const { return rows.size(); }
};

namespace detail {

/// Structure constants a[j][i][l] = #{x in C_i : x^{-1} z_l in C_j}.
inline std::vector<mod::Mat> class_matrices(const FiniteGroup& g, const ConjClasses& cc, std::uint64_t p,
                                            unsigned threads) {
  const std::size_t k = cc.count(), order = g.order();
  std::vector<std::vector<std::uint32_t>> tallies(k);  // tallies[l][j * k + i]
  std::vector<Perm> inverses;
  inverses.reserve(order);
  for (std::size_t x = 0; x < order; ++x) inverses.push_back(g.element(x).inverse());
  parallel_for(k, threads, [&](std::size_t l) {
    auto& t = tallies[l];
    t.assign(k * k, 0);
    Perm z = g.element(cc.reps[l]);
    for (std::size_t x = 0; x < order; ++x) {
      long y = g.index_of((inverses[x] * z).code());
      ++t[cc.class_of[y] * k + cc.class_of[x]];
    }
  });
  std::vector<mod::Mat> m(k, mod::Mat(k, mod::Vec(k, 0)));
  for (std::size_t l = 0; l < k; ++l)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i) m[j][i][l] = tallies[l][j * k + i] % p;
  return m;
}

}  // namespace detail

/// Dixon's method: simultaneous eigenvectors of the class matrices over F_p.
/// Class matrices are used in ascending class order; no randomness.
inline CharTable dixon_table(const FiniteGroup& g, std::shared_ptr<const ConjClasses> cc, std::uint64_t p,
                             unsigned threads = 1) {
  using namespace mod;
  const std::size_t k = cc->count();
  const u64 order = g.order();
  if ((p - 1) % cc->exponent != 0 || p <= 2 * order)
    throw InvalidArgument("prime " + std::to_string(p) + " is not admissible for this group");

  std::vector<Mat> cm = detail::class_matrices(g, *cc, p, threads);

  struct Space {
    Mat basis;  // rref rows
    std::vector<int> pivots;
  };
  std::vector<Space> spaces;
  {
    Space all;
    for (std::size_t i = 0; i < k; ++i) {
      Vec v(k, 0);
      v[i] = 1;
      all.basis.push_back(v);
      all.pivots.push_back(static_cast<int>(i));
    }
    spaces.push_back(std::move(all));
  }
  for (std::size_t j = 1; j < k && spaces.size() < k; ++j) {
    std::vector<Space> next;
    for (auto& sp : spaces) {
      const std::size_t d = sp.basis.size();
      if (d == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      // A[i][c] = coordinate i of M_j b_c.
      Mat a(d, Vec(d, 0));
      for (std::size_t c = 0; c < d; ++c) {
        const Vec& b = sp.basis[c];
        for (std::size_t i = 0; i < d; ++i) {
          const Vec& row = cm[j][sp.pivots[i]];
          u64 s = 0;
          for (std::size_t l = 0; l < k; ++l)
            if (b[l]) s = add(s, mul(row[l], b[l], p), p);
          a[i][c] = s;
        }
      }
      Vec eig = roots(charpoly(a, p), p);
      if (eig.size() == 1) {
        next.push_back(std::move(sp));
        continue;
      }
      std::size_t total = 0;
      for (u64 lam : eig) {
        Mat shifted = a;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = sub(shifted[i][i], lam, p);
        Mat ns = nullspace(shifted, p);
        Space part;
        for (const Vec& y : ns) {
          Vec v(k, 0);
          for (std::size_t c = 0; c < d; ++c)
            if (y[c])
              for (std::size_t l = 0; l < k; ++l) v[l] = add(v[l], mul(y[c], sp.basis[c][l], p), p);
          part.basis.push_back(std::move(v));
        }
        part.pivots = rref(part.basis, p);
        total += part.basis.size();
        next.push_back(std::move(part));
      }
      if (total != d) throw ConsistencyError("class matrix is not diagonalizable mod p");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) throw ConsistencyError("eigenspaces did not separate into one-dimensional pieces");

  CharTable t;
  t.prime = p;
  t.group_order = order;
  t.classes = cc;
  struct Row {
    u64 degree;
    Vec values;
  };
  std::vector<Row> rows;
  for (const auto& sp : spaces) {
    Vec w = sp.basis[0];
    if (w[0] == 0) throw ConsistencyError("central character vanishes on the identity");
    u64 iv = inv(w[0], p);
    for (auto& x : w) x = mul(x, iv, p);
    u64 s = 0;
    for (std::size_t i = 0; i < k; ++i)
      s = add(s, mul(mul(w[i], w[cc->inverse_map[i]], p), inv(cc->sizes[i] % p, p), p), p);
    u64 d2 = mul(order % p, inv(s, p), p);
    u64 d = static_cast<u64>(std::llround(std::sqrt(static_cast<long double>(d2))));
    while (d * d > d2) --d;
    while ((d + 1) * (d + 1) <= d2) ++d;
    if (d * d != d2 || d == 0 || order % d != 0)
      throw ConsistencyError("degree recovery failed (d^2 = " + std::to_string(d2) + ")");
    Vec values(k);
    for (std::size_t i = 0; i < k; ++i) values[i] = mul(mul(d, w[i], p), inv(cc->sizes[i] % p, p), p);
    rows.push_back({d, std::move(values)});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.values < b.values;
  });
  u64 sq = 0;
  for (const auto& r : rows) {
    sq += r.degree * r.degree;
    t.degrees.push_back(r.degree);
    t.rows.push_back(r.values);
  }
  if (sq != order) throw ConsistencyError("degree squares do not sum to the group order");
  return t;
}

/// Checks row orthogonality mod p.  Returns false on the first failure.
inline bool rows_orthogonal(const CharTable& t) {
  using namespace mod;
  const auto& cc = *t.classes;
  const u64 p = t.prime;
  const u64 inv_order = inv(t.group_order % p, p);
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b) {
      u64 s = 0;
      for (std::size_t c = 0; c < cc.count(); ++c)
        s = add(s, mul(cc.sizes[c] % p, mul(t.rows[a][c], t.rows[b][cc.inverse_map[c]], p), p), p);
      if (mul(s, inv_order, p) != (a == b ? 1u : 0u)) return false;
    }
  return true;
}

/// Checks column orthogonality: sum_chi chi(g) chi(h^-1) = |C_G(g)| delta.
inline bool columns_orthogonal(const CharTable& t) {
  using namespace mod;
  const auto& cc = *t.classes;
  const u64 p = t.prime;
  for (std::size_t c = 0; c < cc.count(); ++c)
    for (std::size_t e = 0; e < cc.count(); ++e) {
      u64 s = 0;
      for (std::size_t r = 0; r < t.size(); ++r) s = add(s, mul(t.rows[r][c], t.rows[r][cc.inverse_map[e]], p), p);
      u64 expect = c == e ? (t.group_order / cc.sizes[c]) % p : 0;
      if (s != expect) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Disk cache.

inline constexpr int kTableCacheVersion = 1;

class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::filesystem::path path_for(const FiniteGroup& g, std::uint64_t p) const {
    return dir_ / (g.digest() + "-" + std::to_string(g.order()) + "-" + std::to_string(p) + ".json");
  }

  std::optional<CharTable> load(const FiniteGroup& g, std::shared_ptr<const ConjClasses> cc,
                                std::uint64_t p) const {
    std::ifstream in(path_for(g, p));
    if (!in) return std::nullopt;
    try {
      nlohmann::json j = nlohmann::json::parse(in);
      if (j.at("version").get<int>() != kTableCacheVersion) return std::nullopt;
      if (j.at("fingerprint").get<std::string>() != g.digest()) return std::nullopt;
      if (j.at("order").get<std::uint64_t>() != g.order() || j.at("prime").get<std::uint64_t>() != p)
        return std::nullopt;
      auto sizes = j.at("class_sizes").get<std::vector<std::uint64_t>>();
      auto reps = j.at("class_reps").get<std::vector<std::vector<int>>>();
      if (sizes != cc->sizes || reps.size() != cc->count()) return std::nullopt;
      for (std::size_t c = 0; c < reps.size(); ++c) {
        auto img = g.element(cc->reps[c]).images();
        if (std::vector<int>(img.begin(), img.end()) != reps[c]) return std::nullopt;
      }
      CharTable t;
      t.prime = p;
      t.group_order = g.order();
      t.classes = cc;
      t.degrees = j.at("degrees").get<std::vector<std::uint64_t>>();
      t.rows = j.at("rows").get<std::vector<std::vector<std::uint64_t>>>();
      if (t.rows.size() != cc->count() || t.degrees.size() != cc->count()) return std::nullopt;
      return t;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  /// Writes through a temporary file and an atomic rename.
  void store(const FiniteGroup& g, const CharTable& t) const {
    std::filesystem::create_directories(dir_);
    nlohmann::json j;
    j["version"] = kTableCacheVersion;
    j["fingerprint"] = g.digest();
    j["order"] = g.order();
    j["prime"] = t.prime;
    j["class_sizes"] = t.classes->sizes;
    std::vector<std::vector<int>> reps;
    for (auto r : t.classes->reps) {
      auto img = g.element(r).images();
      reps.emplace_back(img.begin(), img.end());
    }
    j["class_reps"] = reps;
    j["degrees"] = t.degrees;
    j["rows"] = t.rows;
    auto final_path = path_for(g, t.prime);
    std::ostringstream tag;
    static std::atomic<unsigned long> counter{0};
    tag << ::getpid() << "-" << std::this_thread::get_id() << "-" << counter++;
    auto tmp = final_path;
    tmp += ".tmp-" + tag.str();
    {
      std::ofstream out(tmp);
      out << j.dump() << "\n";
      if (!out) throw ResourceError("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, final_path);
  }

 private:
  std::filesystem::path dir_;
};

// ---------------------------------------------------------------------------
// Oracle session: memoizes classes and tables per group.

struct Witness {
  std::size_t chi = 0;  // row of the ambient table
  std::size_t psi = 0;  // row of the subgroup table
  std::uint64_t multiplicity = 0;
  std::uint64_t chi_degree = 0;
  std::uint64_t psi_degree = 0;
};

struct GelfandResult {
  bool holds = true;
  std::optional<Witness> witness;
};

class Oracle {
 public:
  explicit Oracle(Budget budget = {}, std::optional<std::filesystem::path> cache_dir = std::nullopt)
      : budget_(budget) {
    if (cache_dir) cache_.emplace(*cache_dir);
  }

  const Budget& budget() const { return budget_; }

  std::shared_ptr<const ConjClasses> classes(const FiniteGroup& g) {
    const std::string key = key_of(g);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = classes_.find(key);
      if (it != classes_.end()) return it->second;
    }
    auto cc = std::make_shared<const ConjClasses>(conjugacy_classes(g));
    std::lock_guard<std::mutex> lock(mu_);
    return classes_.emplace(key, cc).first->second;
  }

  /// The prime used for g and all of its subgroups.
  std::uint64_t prime_for(const FiniteGroup& g) {
    return mod::prime_above(classes(g)->exponent, 2 * g.order(), budget_.prime_search_limit);
  }

  /// Table of g over p (default: g's own prime).  A subgroup's table must be
  /// computed over the ambient prime before the two are combined.
  std::shared_ptr<const CharTable> table(const FiniteGroup& g, std::uint64_t p = 0) {
    if (p == 0) p = prime_for(g);
    const std::string key = key_of(g) + "/" + std::to_string(p);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = tables_.find(key);
      if (it != tables_.end()) return it->second;
    }
    auto cc = classes(g);
    std::optional<CharTable> t;
    if (cache_) t = cache_->load(g, cc, p);
    if (!t) {
      t = dixon_table(g, cc, p, budget_.threads);
      if (cache_) cache_->store(g, *t);
    }
    auto ptr = std::make_shared<const CharTable>(std::move(*t));
    std::lock_guard<std::mutex> lock(mu_);
    return tables_.emplace(key, ptr).first->second;
  }

  /// Class of each K-class representative in G.
  std::vector<std::uint32_t> fusion(const FiniteGroup& g, const FiniteGroup& k) {
    if (!g.contains(k)) throw InvalidArgument("subgroup is not contained in the ambient group");
    auto cg = classes(g);
    auto ck = classes(k);
    std::vector<std::uint32_t> f;
    for (auto r : ck->reps) f.push_back(cg->class_of[g.index_of(k.code(r))]);
    return f;
  }

  /// <Res chi, psi>_K for every pair, as a |Irr G| x |Irr K| matrix.
  std::vector<std::vector<std::uint64_t>> restriction_matrix(const FiniteGroup& g, const FiniteGroup& k) {
    using namespace mod;
    const u64 p = prime_for(g);
    auto tg = table(g, p);
    auto tk = table(k, p);
    auto fu = fusion(g, k);
    const auto& ck = *tk->classes;
    const u64 inv_k = inv(k.order() % p, p);
    std::vector<std::vector<u64>> m(tg->size(), std::vector<u64>(tk->size(), 0));
    for (std::size_t a = 0; a < tg->size(); ++a) {
      Vec u(ck.count());
      for (std::size_t c = 0; c < ck.count(); ++c) u[c] = mul(ck.sizes[c] % p, tg->rows[a][fu[c]], p);
      for (std::size_t b = 0; b < tk->size(); ++b) {
        u64 s = 0;
        for (std::size_t c = 0; c < ck.count(); ++c) s = add(s, mul(u[c], tk->rows[b][ck.inverse_map[c]], p), p);
        m[a][b] = lift(mul(s, inv_k, p), tg->degrees[a]);
      }
    }
    return m;
  }

  /// <Res chi, psi>_K for one pair of rows.
  std::uint64_t restriction_mult(const FiniteGroup& g, const FiniteGroup& k, std::size_t chi, std::size_t psi) {
    return restriction_matrix(g, k).at(chi).at(psi);
  }

  /// <Ind psi, chi>_G by Frobenius reciprocity.
  std::uint64_t induce_mult(const FiniteGroup& g, const FiniteGroup& k, std::size_t psi, std::size_t chi) {
    return restriction_mult(g, k, chi, psi);
  }

  /// <Ind psi, chi>_G computed directly from the induced character formula.
  /// Independent of the fusion map; used to cross-check reciprocity.
  std::vector<std::uint64_t> induce_direct(const FiniteGroup& g, const FiniteGroup& k, std::size_t psi) {
    using namespace mod;
    const u64 p = prime_for(g);
    auto tg = table(g, p);
    auto tk = table(k, p);
    auto cg = classes(g);
    auto ck = classes(k);
    // ind psi (z) = 1/|K| sum_{x in G, x z x^-1 in K} psi(x z x^-1)
    Vec ind(cg->count(), 0);
    const u64 inv_k = inv(k.order() % p, p);
    for (std::size_t c = 0; c < cg->count(); ++c) {
      Perm z = g.element(cg->reps[c]);
      u64 s = 0;
      for (std::size_t x = 0; x < g.order(); ++x) {
        Perm gx = g.element(x);
        long y = k.index_of((gx * z * gx.inverse()).code());
        if (y >= 0) s = add(s, tk->rows[psi][ck->class_of[y]], p);
      }
      ind[c] = mul(s, inv_k, p);
    }
    std::vector<std::uint64_t> out;
    const u64 inv_g = inv(g.order() % p, p);
    for (std::size_t a = 0; a < tg->size(); ++a) {
      u64 s = 0;
      for (std::size_t c = 0; c < cg->count(); ++c)
        s = add(s, mul(cg->sizes[c] % p, mul(ind[c], tg->rows[a][cg->inverse_map[c]], p), p), p);
      out.push_back(lift(mul(s, inv_g, p), g.order()));
    }
    return out;
  }

  bool is_gelfand(const FiniteGroup& g, const FiniteGroup& k) {
    using namespace mod;
    const u64 p = prime_for(g);
    auto tg = table(g, p);
    auto fu = fusion(g, k);
    auto ck = classes(k);
    const u64 inv_k = inv(k.order() % p, p);
    for (std::size_t a = 0; a < tg->size(); ++a) {
      u64 s = 0;
      for (std::size_t c = 0; c < ck->count(); ++c) s = add(s, mul(ck->sizes[c] % p, tg->rows[a][fu[c]], p), p);
      if (lift(mul(s, inv_k, p), tg->degrees[a]) > 1) return false;
    }
    return true;
  }

  GelfandResult is_strong_gelfand(const FiniteGroup& g, const FiniteGroup& k) {
    auto m = restriction_matrix(g, k);
    auto tg = table(g, prime_for(g));
    auto tk = table(k, prime_for(g));
    GelfandResult r;
    for (std::size_t a = 0; a < m.size() && r.holds; ++a)
      for (std::size_t b = 0; b < m[a].size(); ++b)
        if (m[a][b] > 1) {
          r.holds = false;
          r.witness = Witness{a, b, m[a][b], tg->degrees[a], tk->degrees[b]};
          break;
        }
    return r;
  }

 private:
  static std::string key_of(const FiniteGroup& g) {
    return g.digest() + ":" + std::to_string(g.order()) + ":" + std::to_string(g.degree());
  }
  /// Residues of multiplicities are < p; anything above the bound means a bug.
  static std::uint64_t lift(std::uint64_t residue, std::uint64_t bound) {
    if (residue > bound) throw ConsistencyError("multiplicity residue " + std::to_string(residue) +
                                                " exceeds its bound " + std::to_string(bound));
    return residue;
  }

  Budget budget_;
  std::optional<TableCache> cache_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<const ConjClasses>> classes_;
  std::map<std::string, std::shared_ptr<const CharTable>> tables_;
};

// ---------------------------------------------------------------------------
// Labels for B_n.

/// Label of each row of a table of B_n (computed over any admissible prime),
/// matched against bn_char_value on every signed class.
inline std::vector<BnIrrepLabel> label_rows(const FiniteGroup& bn, const CharTable& t, int n) {
  const auto& cc = *t.classes;
  std::vector<SignedClass> cls;
  for (auto r : cc.reps) cls.push_back(signed_cycle_type(decode(bn.element(r), 2)));
  std::vector<BnIrrepLabel> labels = bn_labels(n);
  std::vector<std::vector<std::uint64_t>> predicted;
  for (const auto& l : labels) {
    std::vector<std::uint64_t> row;
    for (const auto& c : cls)
      row.push_back(mod::from_signed(static_cast<long long>(bn_char_value(l, c)), t.prime));
    predicted.push_back(std::move(row));
  }
  std::vector<BnIrrepLabel> out(t.size());
  std::vector<int> hits(labels.size(), 0);
  for (std::size_t a = 0; a < t.size(); ++a) {
    int found = -1;
    for (std::size_t l = 0; l < labels.size(); ++l)
      if (predicted[l] == t.rows[a]) {
        if (found >= 0) throw ConsistencyError("table row matches two labels");
        found = static_cast<int>(l);
      }
    if (found < 0) throw ConsistencyError("table row " + std::to_string(a) + " matches no label");
    if (hits[found]++) throw ConsistencyError("label " + labels[found].to_string() + " matched twice");
    out[a] = labels[found];
  }
  return out;
}

/// Oracle table of B_n with its labels.
struct LabeledTable {
  GroupPtr group;
  std::shared_ptr<const CharTable> table;
  std::vector<BnIrrepLabel> labels;

  std::size_t row_of(const BnIrrepLabel& l) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return i;
    throw InvalidArgument("label " + l.to_string() + " not in table");
  }
};

inline LabeledTable label_table(Oracle& oracle, int n, std::uint64_t prime = 0) {
  LabeledTable lt;
  lt.group = full_group(n).group_ptr(oracle.budget());
  lt.table = oracle.table(*lt.group, prime);
  lt.labels = label_rows(*lt.group, *lt.table, n);
  return lt;
}

}  // namespace wreath
