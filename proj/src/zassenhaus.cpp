#include "adnil/zassenhaus.hpp"

#include <algorithm>
#include <set>

namespace adnil {

GroupAlgebra::GroupAlgebra(const FiniteGroup& G, uint32_t p) : G_(&G), p_(p) {
  if (!Fp::is_prime(p)) throw StructureError("GroupAlgebra: non-prime modulus");
  if ((std::size_t)G.order() > kMaxAmbientDim)
    throw StructureError("GroupAlgebra: group too large");
}

FpVec GroupAlgebra::mul(const FpVec& a, const FpVec& b) const {
  Fp f(p_);
  FpVec r(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!b[j]) continue;
      std::size_t k = (std::size_t)G_->mult[i][j];
      r[k] = f.add(r[k], f.mul(a[i], b[j]));
    }
  }
  return r;
}

FpVec GroupAlgebra::one_minus(int g) const {
  Fp f(p_);
  FpVec v(dim(), 0);
  v[G_->identity()] = f.add(v[G_->identity()], 1);
  v[g] = f.sub(v[g], 1);
  return v;
}

FiltrationResult augmentation_filtration(const FiniteGroup& G, uint32_t p) {
  GroupAlgebra A(G, p);
  FiltrationResult res;
  res.p_power_order = G.is_p_group(p);
  std::vector<FpVec> wgens;
  for (int g = 0; g < G.order(); ++g)
    if (g != G.identity()) wgens.push_back(A.one_minus(g));
  Subspace w = Subspace::span(p, A.dim(), wgens);
  res.w_powers.push_back(w);
  while (true) {
    const Subspace& prev = res.w_powers.back();
    std::vector<FpVec> gens;
    for (const auto& u : w.basis())
      for (const auto& v : prev.basis()) gens.push_back(A.mul(u, v));
    Subspace next = Subspace::span(p, A.dim(), gens);
    if (next == prev) break;
    res.w_powers.push_back(next);
    if (next.dim() == 0) {
      res.w_nilpotent = true;
      break;
    }
  }
  for (std::size_t i = 0; i < res.w_powers.size(); ++i) {
    std::vector<int> Gi;
    for (int g = 0; g < G.order(); ++g)
      if (res.w_powers[i].contains(A.one_minus(g))) Gi.push_back(g);
    res.subgroups.push_back(Gi);
    if (Gi.size() == 1) {
      res.reaches_identity = true;
      break;
    }
  }
  return res;
}

namespace {

// subgroup at depth i with the convention G_k = {1} beyond a terminating
// chain, and G_k = last level when the chain merely stabilizes
const std::vector<int>& level(const FiltrationResult& F, std::size_t i,
                              const std::vector<int>& identity_only) {
  if (i < F.subgroups.size()) return F.subgroups[i];
  if (F.reaches_identity) return identity_only;
  return F.subgroups.back();
}

}  // namespace

FiltrationChecks filtration_checks(const FiniteGroup& G, const FiltrationResult& F, uint32_t p) {
  FiltrationChecks out;
  std::vector<int> identity_only{G.identity()};
  auto contains = [](const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  std::size_t depth = F.subgroups.size();
  for (std::size_t i = 0; i < depth; ++i) {
    const auto& Gi = F.subgroups[i];
    const auto& Gn = level(F, i + 1, identity_only);
    for (int g : Gi) {
      if (!contains(Gi, G.inverse(g))) out.subgroups_ok = false;
      for (int h : Gi) {
        if (!contains(Gi, G.mult[g][h])) out.subgroups_ok = false;
        if (!contains(Gn, G.commutator(g, h))) out.elementary_abelian_ok = false;
      }
      if (!contains(Gn, G.power(g, p))) out.elementary_abelian_ok = false;
      // normality of G_{i+1} in G_i
      for (int h : Gn)
        if (!contains(Gn, G.mult[G.mult[G.inverse(g)][h]][g])) out.subgroups_ok = false;
    }
  }
  for (std::size_t i = 0; i < depth; ++i)
    for (std::size_t j = 0; j < depth; ++j) {
      const auto& Gi = F.subgroups[i];
      const auto& Gj = F.subgroups[j];
      const auto& Gt = level(F, i + j + 1, identity_only);
      for (int g : Gi)
        for (int h : Gj)
          if (!contains(Gt, G.commutator(g, h))) out.commutator_grading_ok = false;
    }
  return out;
}

namespace {

struct GradeData {
  std::vector<int> reps;                 // chosen basis representatives
  std::map<int, FpVec> coset_log;        // canonical coset id -> exponent vector
  std::vector<int> next_level;           // G_{i+1} sorted
};

int coset_id(const FiniteGroup& G, const std::vector<int>& subgroup, int g) {
  int best = -1;
  for (int h : subgroup) {
    int x = G.mult[g][h];
    if (best < 0 || x < best) best = x;
  }
  return best;
}

GradeData build_grade(const FiniteGroup& G, uint32_t p, const std::vector<int>& Gi,
                      const std::vector<int>& Gn) {
  GradeData data;
  data.next_level = Gn;
  std::set<int> covered;  // coset ids generated so far
  covered.insert(coset_id(G, Gn, G.identity()));
  // greedy BFS-order representative choice
  for (int g : Gi) {
    int cid = coset_id(G, Gn, g);
    if (covered.count(cid)) continue;
    data.reps.push_back(g);
    // regenerate the covered set from all exponent vectors so far
    covered.clear();
    std::size_t k = data.reps.size();
    std::vector<uint32_t> expv(k, 0);
    while (true) {
      int prod = G.identity();
      for (std::size_t t = 0; t < k; ++t) prod = G.mult[prod][G.power(data.reps[t], expv[t])];
      covered.insert(coset_id(G, Gn, prod));
      std::size_t t = 0;
      for (; t < k; ++t) {
        if (++expv[t] < p) break;
        expv[t] = 0;
      }
      if (t == k) break;
    }
  }
  // discrete log table over the elementary abelian quotient
  std::size_t k = data.reps.size();
  std::vector<uint32_t> expv(k, 0);
  while (true) {
    int prod = G.identity();
    for (std::size_t t = 0; t < k; ++t) prod = G.mult[prod][G.power(data.reps[t], expv[t])];
    FpVec coords(expv.begin(), expv.end());
    data.coset_log.emplace(coset_id(G, Gn, prod), coords);
    std::size_t t = 0;
    for (; t < k; ++t) {
      if (++expv[t] < p) break;
      expv[t] = 0;
    }
    if (t == k || k == 0) break;
  }
  return data;
}

}  // namespace

LpAlgebra build_Lp(const FiniteGroup& G, uint32_t p) {
  FiltrationResult F = augmentation_filtration(G, p);
  if (!F.reaches_identity)
    throw HypothesisError("build_Lp: the Zassenhaus filtration does not terminate at {1}");
  std::vector<int> identity_only{G.identity()};
  std::size_t grades = F.subgroups.size() - 1;  // last level is {1}
  std::vector<GradeData> data;
  for (std::size_t i = 0; i < grades; ++i) {
    const auto& Gi = F.subgroups[i];
    const auto& Gn = level(F, i + 1, identity_only);
    data.push_back(build_grade(G, p, Gi, Gn));
  }
  LpAlgebra lp{LieAlgebra(p, 0), {}, {}, {}};
  std::size_t total = 0;
  for (const auto& d : data) total += d.reps.size();
  lp.L = LieAlgebra(p, total);
  std::vector<int> grading;
  std::size_t base = 0;
  for (std::size_t i = 0; i < grades; ++i) {
    lp.grade_dims.push_back((int)data[i].reps.size());
    lp.grade_reps.push_back(data[i].reps);
    for (std::size_t s = 0; s < data[i].reps.size(); ++s) {
      lp.basis_home.emplace_back((int)i + 1, (int)s);
      grading.push_back((int)i + 1);
      lp.L.set_name(base + s, "u" + std::to_string(i + 1) + "_" + std::to_string(s + 1));
    }
    base += data[i].reps.size();
  }
  lp.L.set_grading(grading);
  // offsets per grade
  std::vector<std::size_t> offset(grades + 1, 0);
  for (std::size_t i = 0; i < grades; ++i) offset[i + 1] = offset[i] + data[i].reps.size();
  // brackets of basis pairs via group commutators
  for (std::size_t u = 0; u < total; ++u)
    for (std::size_t v = u + 1; v < total; ++v) {
      auto [gi, si] = lp.basis_home[u];
      auto [gj, sj] = lp.basis_home[v];
      std::size_t target = (std::size_t)(gi + gj);
      if (target > grades) continue;  // lands in {1}
      int c = G.commutator(data[gi - 1].reps[si], data[gj - 1].reps[sj]);
      const GradeData& tg = data[target - 1];
      const auto& Gt = F.subgroups[target - 1];
      if (std::find(Gt.begin(), Gt.end(), c) == Gt.end())
        throw HypothesisError("build_Lp: commutator escapes its grade");
      const FpVec& coords = tg.coset_log.at(coset_id(G, tg.next_level, c));
      for (std::size_t t = 0; t < coords.size(); ++t)
        if (coords[t]) lp.L.add_structure(u, v, offset[target - 1] + t, coords[t]);
    }
  auto rep = lp.L.validate();
  if (!rep.ok) throw HypothesisError("build_Lp: constructed algebra fails validation");
  return lp;
}

bool homogeneous_ad_nilpotent(const LpAlgebra& lp) {
  std::size_t total = lp.L.dim();
  int bound = (int)total + 1;
  std::size_t base = 0;
  uint32_t p = lp.L.modulus();
  for (int gd : lp.grade_dims) {
    // all nonzero coefficient vectors within this grade
    std::vector<uint32_t> coeff(gd, 0);
    while (true) {
      std::size_t t = 0;
      for (; t < (std::size_t)gd; ++t) {
        if (++coeff[t] < p) break;
        coeff[t] = 0;
      }
      if (t == (std::size_t)gd) break;
      FpVec x = lp.L.zero();
      for (std::size_t s = 0; s < (std::size_t)gd; ++s) x[base + s] = coeff[s];
      if (!ad_nilpotency(lp.L, x, bound)) return false;
    }
    base += gd;
  }
  return true;
}

LiePolynomial group_commutator_shadow(const GroupCommutatorWord& word, uint32_t p, int nvars) {
  LiePolynomial out;
  out.p = p;
  out.nvars = nvars;
  for (const auto& term : word) {
    if (term.p_exponent > 0)
      throw HypothesisError(
          "group_commutator_shadow: term carries a p-power; apply the [w, x_0] reduction "
          "(append_fresh_bracket) before taking shadows");
    if (tree_degree(term.tree) < 2)
      throw StructureError("group_commutator_shadow: commutator terms need length >= 2");
    out.terms.push_back({1 % p, term.tree});
  }
  if (out.terms.empty()) throw StructureError("group_commutator_shadow: empty word");
  return out;
}

GroupCommutatorWord append_fresh_bracket(const GroupCommutatorWord& word, int fresh_var) {
  GroupCommutatorWord out;
  for (const auto& term : word)
    out.push_back({BTree::node(term.tree, BTree::var(fresh_var)), term.p_exponent});
  return out;
}

}  // namespace adnil
