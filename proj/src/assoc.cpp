#include "adnil/assoc.hpp"

#include <array>

namespace adnil {

AssocAlgebra::AssocAlgebra(uint32_t p, std::size_t dim)
    : p_(p), dim_(dim), names_(dim), table_(dim * dim) {
  if (!Fp::is_prime(p)) throw StructureError("AssocAlgebra: non-prime modulus");
  for (std::size_t i = 0; i < dim; ++i) names_[i] = "a" + std::to_string(i + 1);
  for (auto& t : table_) t.assign(dim, 0);
}

void AssocAlgebra::set_product(std::size_t i, std::size_t j, const FpVec& v) {
  if (i >= dim_ || j >= dim_ || v.size() != dim_)
    throw StructureError("AssocAlgebra::set_product: bad indices");
  table_[i * dim_ + j] = v;
}

FpVec AssocAlgebra::basis_vec(std::size_t i) const {
  FpVec v = zero();
  v[i] = 1;
  return v;
}

FpVec AssocAlgebra::mul(const FpVec& a, const FpVec& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw StructureError("AssocAlgebra::mul: size");
  Fp f(p_);
  FpVec r = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!b[j]) continue;
      uint32_t c = f.mul(a[i], b[j]);
      const FpVec& t = basis_product(i, j);
      for (std::size_t k = 0; k < dim_; ++k)
        if (t[k]) r[k] = f.add(r[k], f.mul(c, t[k]));
    }
  }
  return r;
}

std::optional<std::array<std::size_t, 3>> AssocAlgebra::associativity_witness() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        FpVec lhs = mul(basis_product(i, j), basis_vec(k));
        FpVec rhs = mul(basis_vec(i), basis_product(j, k));
        if (lhs != rhs) return std::array<std::size_t, 3>{i, j, k};
      }
  return std::nullopt;
}

AssocAlgebra AssocAlgebra::matrix_algebra(uint32_t p, std::size_t n) {
  AssocAlgebra A(p, n * n);
  auto idx = [n](std::size_t r, std::size_t c) { return r * n + c; };
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      A.set_name(idx(r, c), "e" + std::to_string(r + 1) + std::to_string(c + 1));
      for (std::size_t r2 = 0; r2 < n; ++r2)
        for (std::size_t c2 = 0; c2 < n; ++c2) {
          FpVec v(n * n, 0);
          if (c == r2) v[idx(r, c2)] = 1;
          A.set_product(idx(r, c), idx(r2, c2), v);
        }
    }
  return A;
}

AssocAlgebra AssocAlgebra::strictly_upper(uint32_t p, std::size_t n) {
  // basis e_{rc}, r < c, ordered by (r, c)
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) units.emplace_back(r, c);
  AssocAlgebra A(p, units.size());
  auto find = [&](std::size_t r, std::size_t c) -> int {
    for (std::size_t k = 0; k < units.size(); ++k)
      if (units[k] == std::make_pair(r, c)) return (int)k;
    return -1;
  };
  for (std::size_t i = 0; i < units.size(); ++i) {
    A.set_name(i, "e" + std::to_string(units[i].first + 1) + std::to_string(units[i].second + 1));
    for (std::size_t j = 0; j < units.size(); ++j) {
      FpVec v(units.size(), 0);
      if (units[i].second == units[j].first) {
        int k = find(units[i].first, units[j].second);
        if (k >= 0) v[k] = 1;
      }
      A.set_product(i, j, v);
    }
  }
  return A;
}

std::optional<std::string> involution_check(const AssocAlgebra& A, const Involution& inv) {
  Fp f(A.modulus());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    FpVec twice = inv.apply(inv.apply(A.basis_vec(i), f), f);
    if (twice != A.basis_vec(i)) return "involution is not self-inverse at basis " + A.name(i);
  }
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = 0; j < A.dim(); ++j) {
      FpVec lhs = inv.apply(A.basis_product(i, j), f);
      FpVec rhs = A.mul(inv.apply(A.basis_vec(j), f), inv.apply(A.basis_vec(i), f));
      if (lhs != rhs)
        return "(ab)* != b*a* at basis pair (" + A.name(i) + "," + A.name(j) + ")";
    }
  return std::nullopt;
}

Involution transpose_involution(uint32_t p, std::size_t n) {
  FpMatrix m(p, n * n, n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r * n + c, c * n + r) = 1;
  return {m};
}

}  // namespace adnil
