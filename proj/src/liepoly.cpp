#include "adnil/liepoly.hpp"

#include <algorithm>

#include "adnil/polymap.hpp"

namespace adnil {

bool LiePolynomial::is_multilinear() const {
  for (std::size_t t = 0; t < terms.size(); ++t) {
    std::vector<int> md = term_multidegree(t);
    for (int d : md)
      if (d != 1) return false;
  }
  return !terms.empty();
}

int LiePolynomial::degree() const {
  int d = 0;
  for (const auto& t : terms) d = std::max(d, tree_degree(t.tree));
  return d;
}

static FpVec eval_tree(const LieAlgebra& L, const BTreePtr& t, const std::vector<FpVec>& vals) {
  if (t->leaf >= 0) {
    if ((std::size_t)t->leaf >= vals.size())
      throw StructureError("LiePolynomial::eval: unassigned variable");
    return vals[t->leaf];
  }
  return L.bracket(eval_tree(L, t->l, vals), eval_tree(L, t->r, vals));
}

FpVec LiePolynomial::eval(const LieAlgebra& L, const std::vector<FpVec>& assignment) const {
  Fp f(L.modulus());
  FpVec acc = L.zero();
  for (const auto& t : terms)
    acc = vec_add(acc, vec_scale(eval_tree(L, t.tree, assignment), t.coeff, f), f);
  return acc;
}

FreeLieBasis::Coords LiePolynomial::hall_coordinates(const FreeLieBasis& basis) const {
  Fp f(p);
  AssocPoly total;
  for (const auto& t : terms) {
    AssocPoly e = assoc_expand(t.tree, f);
    for (const auto& [w, c] : e) {
      auto it = total.find(w);
      uint32_t v = f.add(it == total.end() ? 0 : it->second, f.mul(c, t.coeff));
      if (v == 0) {
        if (it != total.end()) total.erase(it);
      } else {
        total[w] = v;
      }
    }
  }
  return basis.from_assoc(total);
}

std::string LiePolynomial::to_string(const std::vector<std::string>& names) const {
  std::vector<std::string> vn = names;
  if (vn.empty())
    for (int i = 0; i < nvars; ++i) vn.push_back("x" + std::to_string(i + 1));
  if (terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += " + ";
    if (terms[i].coeff != 1) s += std::to_string(terms[i].coeff) + "*";
    s += tree_to_string(terms[i].tree, vn);
  }
  return s;
}

std::optional<IdentityWitness> check_multilinear_identity(const LieAlgebra& L,
                                                          const LiePolynomial& f) {
  if (!f.is_multilinear())
    throw StructureError("check_multilinear_identity: polynomial is not multilinear");
  require_same_modulus(L.modulus(), f.p, "check_multilinear_identity");
  int n = f.nvars;
  std::size_t dim = L.dim();
  BudgetCounter budget("check_multilinear_identity");
  std::vector<std::size_t> idx(n, 0);
  std::vector<FpVec> args(n);
  while (true) {
    for (int i = 0; i < n; ++i) args[i] = L.basis_vec(idx[i]);
    budget.tick();
    FpVec v = f.eval(L, args);
    if (!vec_is_zero(v)) return IdentityWitness{idx, v};
    // lexicographic successor: last slot varies fastest
    int i = n - 1;
    for (; i >= 0; --i) {
      if (++idx[i] < dim) break;
      idx[i] = 0;
    }
    if (i < 0) break;
  }
  return std::nullopt;
}

BTreePtr left_comb(const std::vector<int>& leaves) {
  if (leaves.empty()) throw StructureError("left_comb: empty");
  BTreePtr t = BTree::var(leaves[0]);
  for (std::size_t i = 1; i < leaves.size(); ++i) t = BTree::node(t, BTree::var(leaves[i]));
  return t;
}

// Reads a left comb [x0, xa, xb, ...]; returns the leaf sequence or nullopt.
static std::optional<std::vector<int>> comb_leaves(const BTreePtr& t) {
  std::vector<int> rev;
  BTreePtr cur = t;
  while (cur->leaf < 0) {
    if (cur->r->leaf < 0) return std::nullopt;
    rev.push_back(cur->r->leaf);
    cur = cur->l;
  }
  rev.push_back(cur->leaf);
  std::reverse(rev.begin(), rev.end());
  return rev;
}

LiePolynomial restrict_identity(const LiePolynomial& f) {
  int n = f.nvars;
  if (n < 3)
    throw StructureError("restrict_identity: degree must be >= 3 (output would be degenerate)");
  Fp field(f.p);
  bool have_id = false;
  LiePolynomial out;
  out.p = f.p;
  out.nvars = n - 1;
  for (const auto& term : f.terms) {
    auto leaves = comb_leaves(term.tree);
    if (!leaves || (int)leaves->size() != n || (*leaves)[0] != 0)
      throw StructureError("restrict_identity: term is not a left-normed [x0, ...] permutation");
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (std::size_t i = 1; i < leaves->size(); ++i) {
      int v = (*leaves)[i];
      if (v <= 0 || v >= n || seen[v])
        throw StructureError("restrict_identity: term is not a permutation of x1..x_{n-1}");
      seen[v] = true;
    }
    bool is_id = true;
    for (std::size_t i = 1; i < leaves->size(); ++i)
      if ((*leaves)[i] != (int)i) is_id = false;
    if (is_id) {
      if (term.coeff != 1 % f.p)
        throw StructureError("restrict_identity: identity-permutation coefficient must be 1");
      have_id = true;
    }
    if ((*leaves)[1] != 1) continue;  // sigma does not fix 1
    std::vector<int> reindexed{0};
    for (std::size_t i = 2; i < leaves->size(); ++i) reindexed.push_back((*leaves)[i] - 1);
    out.terms.push_back({field.reduce(term.coeff), left_comb(reindexed)});
  }
  if (!have_id) throw StructureError("restrict_identity: missing identity permutation term");
  return out;
}

}  // namespace adnil
