#include "adnil/lie.hpp"

#include <algorithm>
#include <map>

namespace adnil {

LieAlgebra::LieAlgebra(uint32_t p, std::size_t dim)
    : p_(p), dim_(dim), names_(dim), table_(dim * dim) {
  if (!Fp::is_prime(p)) throw StructureError("LieAlgebra: non-prime modulus");
  if (dim > kMaxAmbientDim) throw StructureError("LieAlgebra: dimension exceeds cap");
  for (std::size_t i = 0; i < dim; ++i) names_[i] = "b" + std::to_string(i + 1);
  for (auto& t : table_) t.assign(dim, 0);
}

int LieAlgebra::name_index(const std::string& n) const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (names_[i] == n) return (int)i;
  return -1;
}

void LieAlgebra::set_grading(const std::vector<int>& degrees) {
  if (degrees.size() != dim_) throw StructureError("set_grading: length mismatch");
  for (int d : degrees)
    if (d < 1) throw StructureError("set_grading: degrees must be positive");
  grading_ = degrees;
}

void LieAlgebra::add_structure(std::size_t i, std::size_t j, std::size_t k, uint32_t v) {
  if (i >= j) throw StructureError("add_structure: requires i < j");
  if (j >= dim_ || k >= dim_) throw StructureError("add_structure: index out of range");
  Fp f(p_);
  table_[pair_index(i, j)][k] = f.add(table_[pair_index(i, j)][k], f.reduce(v));
}

FpVec LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  if (i == j) return zero();
  if (i < j) return table_[pair_index(i, j)];
  Fp f(p_);
  FpVec r = table_[pair_index(j, i)];
  for (auto& x : r) x = f.neg(x);
  return r;
}

FpVec LieAlgebra::basis_vec(std::size_t i) const {
  FpVec v = zero();
  v[i] = 1;
  return v;
}

FpVec LieAlgebra::bracket(const FpVec& a, const FpVec& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw StructureError("bracket: dimension mismatch");
  Fp f(p_);
  FpVec r = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!b[j] || i == j) continue;
      uint32_t c = f.mul(a[i], b[j]);
      const FpVec& t = basis_bracket(i, j);
      for (std::size_t k = 0; k < dim_; ++k)
        if (t[k]) r[k] = f.add(r[k], f.mul(c, t[k]));
    }
  }
  return r;
}

FpVec LieAlgebra::bracket_chain(const std::vector<FpVec>& elems) const {
  if (elems.empty()) throw StructureError("bracket_chain: empty");
  FpVec acc = elems[0];
  for (std::size_t i = 1; i < elems.size(); ++i) acc = bracket(acc, elems[i]);
  return acc;
}

FpMatrix LieAlgebra::ad(const FpVec& a) const {
  FpMatrix m(p_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) m.set_row(i, bracket(basis_vec(i), a));
  return m;
}

LieAlgebra::Report LieAlgebra::validate() const {
  Report rep;
  Fp f(p_);
  // Jacobi on basis triples: [[i,j],k] + [[j,k],i] + [[k,i],j] = 0
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k) {
        FpVec s = bracket(basis_bracket(i, j), basis_vec(k));
        s = vec_add(s, bracket(basis_bracket(j, k), basis_vec(i)), f);
        s = vec_add(s, bracket(basis_bracket(k, i), basis_vec(j)), f);
        if (!vec_is_zero(s)) {
          rep.ok = false;
          rep.violations.push_back({"jacobi", i, j, k});
        }
      }
  if (graded()) {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j) {
        const FpVec& t = basis_bracket(i, j);
        for (std::size_t k = 0; k < dim_; ++k)
          if (t[k] && grading_[k] != grading_[i] + grading_[j]) {
            rep.ok = false;
            rep.violations.push_back({"grading", i, j, k});
          }
      }
  }
  return rep;
}

LieAlgebra::Report validate_raw_table(uint32_t p, std::size_t dim,
                                      const std::vector<std::vector<FpVec>>& raw,
                                      const std::vector<int>& grading, LieAlgebra* out) {
  Fp f(p);
  LieAlgebra::Report rep;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        uint32_t cij = raw[i][j][k], cji = raw[j][i][k];
        if (i == j) {
          if (cij != 0) {
            rep.ok = false;
            rep.violations.push_back({"anticommutativity", i, j, k});
          }
        } else if (i < j && f.add(cij, cji) != 0) {
          rep.ok = false;
          rep.violations.push_back({"anticommutativity", i, j, k});
        }
      }
  LieAlgebra L(p, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (raw[i][j][k]) L.add_structure(i, j, k, raw[i][j][k]);
  if (!grading.empty()) L.set_grading(grading);
  LieAlgebra::Report inner = L.validate();
  rep.ok = rep.ok && inner.ok;
  rep.violations.insert(rep.violations.end(), inner.violations.begin(), inner.violations.end());
  if (out) *out = L;
  return rep;
}

std::optional<int> ad_nilpotency(const LieAlgebra& L, const FpVec& a, int bound) {
  return nilpotency_index(L.ad(a), bound);
}

std::vector<LieSetEntry> lie_set(const LieAlgebra& L, const std::vector<FpVec>& gens,
                                 int length_bound) {
  if (gens.empty()) throw StructureError("lie_set: empty generator list");
  if (length_bound < 1) throw StructureError("lie_set: length bound must be >= 1");
  Fp f(L.modulus());
  std::vector<LieSetEntry> out;
  std::map<FpVec, bool> seen;  // canonical-scalar representatives
  auto try_add = [&](const std::string& word, const FpVec& v, int len) -> bool {
    if (vec_is_zero(v)) return false;
    FpVec canon = vec_canonical_scalar(v, f);
    if (seen.count(canon)) return false;
    seen[canon] = true;
    out.push_back({word, v, len});
    return true;
  };
  for (std::size_t g = 0; g < gens.size(); ++g)
    try_add("g" + std::to_string(g + 1), gens[g], 1);
  // closure: repeatedly bracket known entries while lengths fit
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        int len = out[i].length + out[j].length;
        if (len > length_bound) continue;
        FpVec v = L.bracket(out[i].value, out[j].value);
        if (try_add("[" + out[i].word + "," + out[j].word + "]", v, len)) grew = true;
      }
  }
  return out;
}

Subspace bracket_span(const LieAlgebra& L, const Subspace& A, const Subspace& B) {
  std::vector<FpVec> gens;
  for (const auto& a : A.basis())
    for (const auto& b : B.basis()) gens.push_back(L.bracket(a, b));
  return Subspace::span(L.modulus(), L.dim(), gens);
}

SeriesResult lower_central_series(const LieAlgebra& L) {
  SeriesResult res;
  Subspace full = Subspace::full(L.modulus(), L.dim());
  res.terms.push_back(full);
  res.dims.push_back(full.dim());
  while (true) {
    const Subspace& prev = res.terms.back();
    Subspace next = bracket_span(L, prev, full);
    if (next == prev) break;
    res.terms.push_back(next);
    res.dims.push_back(next.dim());
    if (next.dim() == 0) {
      res.nilpotency_degree = (int)res.terms.size();
      break;
    }
  }
  return res;
}

Subspace ideal_closure(const LieAlgebra& L, const std::vector<FpVec>& gens) {
  Subspace s = Subspace::span(L.modulus(), L.dim(), gens);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<FpVec> snapshot = s.basis();
    for (const auto& v : snapshot)
      for (std::size_t i = 0; i < L.dim(); ++i) {
        FpVec w = L.bracket(v, L.basis_vec(i));
        if (!s.contains(w)) {
          s.insert(w);
          grew = true;
        }
      }
  }
  return s;
}

Subspace subalgebra_closure(const LieAlgebra& L, const std::vector<FpVec>& gens) {
  Subspace s = Subspace::span(L.modulus(), L.dim(), gens);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<FpVec> snapshot = s.basis();
    for (const auto& v : snapshot)
      for (const auto& w : snapshot) {
        FpVec u = L.bracket(v, w);
        if (!s.contains(u)) {
          s.insert(u);
          grew = true;
        }
      }
  }
  return s;
}

}  // namespace adnil
