#pragma once

#include <functional>
#include <vector>

#include "char_oracle.hpp"

namespace wreath {

// ---------------------------------------------------------------------------
// Irreducible characters of (Z/r) wr S_n built by induction from the inertia
// group F wr S(a).  Used as an independent check of label-level formulas.

/// All labels (one partition per residue) of total size n.
inline std::vector<AbelianWreathLabel> abelian_labels(int r, int n) {
  std::vector<AbelianWreathLabel> out;
  std::function<void(int, int, std::vector<Partition>&)> rec = [&](int d, int left, std::vector<Partition>& acc) {
    if (d == r - 1) {
      for (const auto& p : partitions_of(left)) {
        acc.push_back(p);
        out.push_back(AbelianWreathLabel(r, acc));
        acc.pop_back();
      }
      return;
    }
    for (int s = left; s >= 0; --s)
      for (const auto& p : partitions_of(s)) {
        acc.push_back(p);
        rec(d + 1, left - s, acc);
        acc.pop_back();
      }
  };
  std::vector<Partition> acc;
  rec(0, n, acc);
  return out;
}

/// Character of the labeled irreducible on the classes of g = (Z/r) wr S_n,
/// as residues mod p.  Residue d takes the consecutive coordinates after the
/// blocks of smaller residues; the base group acts on coordinate i by
/// zeta^(d(i) f_i) with zeta a fixed primitive r-th root of unity mod p.
inline std::vector<std::uint64_t> wreath_irrep_character(const FiniteGroup& g, const ConjClasses& cc, int r,
                                                         const AbelianWreathLabel& u, std::uint64_t p) {
  using namespace mod;
  const int n = u.n();
  if (g.degree() != r * n) throw InvalidArgument("label does not match the group");
  std::vector<int> block_of(n), start(r + 1, 0);
  for (int d = 0; d < r; ++d) start[d + 1] = start[d] + u.blocks[d].size();
  for (int d = 0; d < r; ++d)
    for (int i = start[d]; i < start[d + 1]; ++i) block_of[i] = d;
  const u64 zeta = root_of_unity(static_cast<u64>(r), p);

  // psi on every element of g; zero off the inertia group
  std::vector<u64> psi(g.order(), 0);
  u64 inertia = 0;
  for (std::size_t e = 0; e < g.order(); ++e) {
    WreathElement x = decode(g.element(e), r);
    bool inside = true;
    for (int i = 0; i < n && inside; ++i) inside = block_of[x.sigma[i]] == block_of[i];
    if (!inside) continue;
    ++inertia;
    u64 exp = 0;
    for (int i = 0; i < n; ++i) exp += static_cast<u64>(block_of[i]) * x.f[i];
    u64 v = pow(zeta, exp % r, p);
    for (int d = 0; d < r; ++d) {
      if (u.blocks[d].empty()) continue;
      WreathElement part = block_part(x, start[d], start[d + 1] - start[d]);
      Integer chi = sym_char_value(u.blocks[d], cycle_type(part.sigma_perm()));
      v = mul(v, from_signed(static_cast<long long>(chi), p), p);
    }
    psi[e] = v;
  }
  const u64 inv_h = inv(inertia % p, p);
  std::vector<u64> out(cc.count());
  for (std::size_t c = 0; c < cc.count(); ++c) {
    Perm z = g.element(cc.reps[c]);
    u64 s = 0;
    for (std::size_t e = 0; e < g.order(); ++e) {
      Perm x = g.element(e);
      s = add(s, psi[g.index_of(x * z * x.inverse())], p);
    }
    out[c] = mul(s, inv_h, p);
  }
  return out;
}

/// <a, b> = 1/|G| sum |C| a(C) b(C^-1) as a residue.
inline std::uint64_t class_inner(const ConjClasses& cc, std::uint64_t order, const std::vector<std::uint64_t>& a,
                                 const std::vector<std::uint64_t>& b, std::uint64_t p) {
  using namespace mod;
  u64 s = 0;
  for (std::size_t c = 0; c < cc.count(); ++c)
    s = add(s, mul(cc.sizes[c] % p, mul(a[c], b[cc.inverse_map[c]], p), p), p);
  return mul(s, inv(order % p, p), p);
}

/// Multiplicity of the labeled irreducible in the induction of S^w from the
/// passive S_n, computed from the oracle table.
inline std::uint64_t oracle_passive_mult(Oracle& oracle, const Partition& w, const AbelianWreathLabel& u) {
  using namespace mod;
  const int n = u.n(), r = u.r;
  if (w.size() != n) throw InvalidArgument("w and the label have different sizes");
  GroupPtr g = full_group(n, r).group_ptr(oracle.budget());
  auto cc = oracle.classes(*g);
  const u64 p = oracle.prime_for(*g);
  auto U = wreath_irrep_character(*g, *cc, r, u, p);
  GroupPtr sn = symmetric_group(n, oracle.budget());
  u64 s = 0;
  for (std::size_t e = 0; e < sn->order(); ++e) {
    const Perm x = sn->element(e);
    std::vector<int> im(x.images().begin(), x.images().end());
    const u64 val = U[cc->class_of[g->index_of(embed_sym(WreathElement::passive(r, im)))]];
    s = add(s, mul(val, from_signed(static_cast<long long>(sym_char_value(w, cycle_type(x))), p), p), p);
  }
  s = mul(s, inv(sn->order() % p, p), p);
  if (s > g->order()) throw ConsistencyError("multiplicity residue out of range");
  return s;
}

// ---------------------------------------------------------------------------
// Induction from B(n-k) x C to B(n), with C a subgroup of B(k) on the last
// k coordinates.

/// Rows of the table of a subgroup c of B(k), in the index convention of
/// sub2_induced_labels, identified through their induction to B(2).
inline std::vector<std::size_t> sub2_rows(Oracle& oracle, Sub2 s, std::uint64_t p) {
  SubgroupDescriptor d = s == Sub2::D2   ? SubgroupDescriptor::atom(Family::Dn, 2)
                         : s == Sub2::H2 ? SubgroupDescriptor::atom(Family::Hn, 2)
                                         : SubgroupDescriptor::atom(Family::PassiveSn, 2);
  GroupPtr b2 = full_group(2).group_ptr(oracle.budget());
  GroupPtr c = make_subgroup(d).group_ptr(oracle.budget());
  auto tb = oracle.table(*b2, p);
  auto labels = label_rows(*b2, *tb, 2);
  auto tc = oracle.table(*c, p);
  // restriction matrix over the shared prime
  auto fu = oracle.fusion(*b2, *c);
  const auto& ck = *tc->classes;
  std::vector<std::vector<BnIrrepLabel>> induced(tc->size());
  for (std::size_t b = 0; b < tc->size(); ++b)
    for (std::size_t a = 0; a < tb->size(); ++a) {
      std::vector<std::uint64_t> res(ck.count());
      for (std::size_t cl = 0; cl < ck.count(); ++cl) res[cl] = tb->rows[a][fu[cl]];
      std::uint64_t m = class_inner(ck, c->order(), res, tc->rows[b], p);
      for (std::uint64_t i = 0; i < m; ++i) induced[b].push_back(labels[a]);
    }
  for (auto& v : induced) std::sort(v.begin(), v.end());
  std::vector<std::size_t> out;
  std::vector<bool> used(tc->size(), false);
  for (int w = 0; w < sub2_irreducible_count(s); ++w) {
    auto want = sub2_induced_labels(s, w);
    std::sort(want.begin(), want.end());
    bool found = false;
    for (std::size_t b = 0; b < tc->size() && !found; ++b)
      if (!used[b] && induced[b] == want) {
        used[b] = true;
        out.push_back(b);
        found = true;
      }
    if (!found) throw ConsistencyError("no subgroup row induces to the expected B(2) labels");
  }
  return out;
}

/// Oracle decomposition of Ind_{B(n-k) x C}^{B(n)} (S^{la} boxtimes psi_j),
/// with psi_j row j of the table of C (over the prime of B(n)).
inline LabelMultiset oracle_induce_product(Oracle& oracle, int n, const BnIrrepLabel& la,
                                           const SubgroupDescriptor& c_desc, std::size_t c_row) {
  using namespace mod;
  const Budget& budget = oracle.budget();
  const int k = c_desc.wreath_n();
  if (la.n() != n - k) throw InvalidArgument("label size does not match n - k");
  LabeledTable lt = label_table(oracle, n);
  const u64 p = lt.table->prime;
  const FiniteGroup& g = *lt.group;

  GroupPtr a = full_group(n - k).group_ptr(budget);
  auto ta = oracle.table(*a, p);
  auto la_rows = label_rows(*a, *ta, n - k);
  std::size_t arow = 0;
  while (!(la_rows.at(arow) == la)) ++arow;
  GroupPtr c = make_subgroup(c_desc).group_ptr(budget);
  auto tc = oracle.table(*c, p);
  auto ca = oracle.classes(*a);
  auto ccl = oracle.classes(*c);

  GroupPtr kgrp = make_subgroup(SubgroupDescriptor::product({SubgroupDescriptor::atom(Family::Full, n - k), c_desc}))
                      .group_ptr(budget);
  auto ck = oracle.classes(*kgrp);
  std::vector<u64> psi(ck->count());
  for (std::size_t cl = 0; cl < ck->count(); ++cl) {
    WreathElement x = decode(kgrp->element(ck->reps[cl]), 2);
    long ia = a->index_of(embed_sym(block_part(x, 0, n - k)));
    long ic = c->index_of(embed_sym(block_part(x, n - k, k)));
    if (ia < 0 || ic < 0) throw ConsistencyError("product element does not split");
    psi[cl] = mul(ta->rows[arow][ca->class_of[ia]], tc->rows.at(c_row)[ccl->class_of[ic]], p);
  }
  auto fu = oracle.fusion(g, *kgrp);
  LabelMultiset out;
  for (std::size_t row = 0; row < lt.table->size(); ++row) {
    std::vector<u64> res(ck->count());
    for (std::size_t cl = 0; cl < ck->count(); ++cl) res[cl] = lt.table->rows[row][fu[cl]];
    u64 m = class_inner(*ck, kgrp->order(), res, psi, p);
    if (m > g.order()) throw ConsistencyError("multiplicity residue out of range");
    if (m) out.add(lt.labels[row], Integer(m));
  }
  return out;
}

/// Row index of a B(k) label in the table of B(k) over p.
inline std::size_t bn_row(Oracle& oracle, const BnIrrepLabel& l, std::uint64_t p) {
  GroupPtr b = full_group(l.n()).group_ptr(oracle.budget());
  auto t = oracle.table(*b, p);
  auto labels = label_rows(*b, *t, l.n());
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return i;
  throw ConsistencyError("label not found");
}

}  // namespace wreath
