#ifndef ADNIL_ASSOC_HPP
#define ADNIL_ASSOC_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "adnil/matrix.hpp"

namespace adnil {

// Associative algebra over F_p by a full multiplication table (not
// necessarily unital).
class AssocAlgebra {
 public:
  AssocAlgebra(uint32_t p, std::size_t dim);

  uint32_t modulus() const { return p_; }
  std::size_t dim() const { return dim_; }
  void set_name(std::size_t i, const std::string& n) { names_[i] = n; }
  const std::string& name(std::size_t i) const { return names_[i]; }

  void set_product(std::size_t i, std::size_t j, const FpVec& v);
  const FpVec& basis_product(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }

  FpVec zero() const { return FpVec(dim_, 0); }
  FpVec basis_vec(std::size_t i) const;
  FpVec mul(const FpVec& a, const FpVec& b) const;

  // witness triple (i,j,k) violating associativity, if any
  std::optional<std::array<std::size_t, 3>> associativity_witness() const;

  static AssocAlgebra matrix_algebra(uint32_t p, std::size_t n);  // M_n(F_p)
  static AssocAlgebra strictly_upper(uint32_t p, std::size_t n);  // nil subalgebra of M_n

 private:
  uint32_t p_;
  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<FpVec> table_;
};

// Involution given by its matrix on the basis; checks (ab)* = b* a* and
// ** = id exhaustively.
struct Involution {
  FpMatrix mat;
  FpVec apply(const FpVec& a, const Fp& f) const { return adnil::apply(a, mat, f); }
};

std::optional<std::string> involution_check(const AssocAlgebra& A, const Involution& inv);

Involution transpose_involution(uint32_t p, std::size_t n);  // for matrix_algebra(p, n)

}  // namespace adnil

#endif
