#ifndef ADNIL_MATRIX_HPP
#define ADNIL_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "adnil/fp.hpp"

namespace adnil {

using FpVec = std::vector<uint32_t>;

constexpr std::size_t kMaxAmbientDim = 1024;  // desk scale

// Dense matrix over F_p, row-vector convention: vectors act on the left,
// v * M, so composing operators reads left to right.
class FpMatrix {
 public:
  FpMatrix() : p_(2), rows_(0), cols_(0) {}
  FpMatrix(uint32_t p, std::size_t rows, std::size_t cols);

  static FpMatrix identity(uint32_t p, std::size_t n);

  uint32_t modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  uint32_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  FpVec row(std::size_t r) const;
  void set_row(std::size_t r, const FpVec& v);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix scaled(uint32_t c) const;
  bool operator==(const FpMatrix& o) const = default;

  FpMatrix pow(uint64_t e) const;

 private:
  uint32_t p_;
  std::size_t rows_, cols_;
  std::vector<uint32_t> a_;
};

FpVec apply(const FpVec& v, const FpMatrix& m, const Fp& f);

FpVec vec_add(const FpVec& a, const FpVec& b, const Fp& f);
FpVec vec_sub(const FpVec& a, const FpVec& b, const Fp& f);
FpVec vec_scale(const FpVec& a, uint32_t c, const Fp& f);
bool vec_is_zero(const FpVec& a);
// Scales so the first nonzero coordinate is 1; used to identify vectors up
// to nonzero scalar multiples.
FpVec vec_canonical_scalar(const FpVec& a, const Fp& f);

// Subspace of F_p^n stored as reduced row echelon basis, so equality of
// subspaces is structural equality of the representation.
class Subspace {
 public:
  Subspace(uint32_t p, std::size_t ambient);
  static Subspace span(uint32_t p, std::size_t ambient, const std::vector<FpVec>& vectors);
  static Subspace full(uint32_t p, std::size_t ambient);

  uint32_t modulus() const { return p_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<FpVec>& basis() const { return basis_; }

  bool contains(const FpVec& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v in the echelon basis, if v lies in the subspace.
  std::optional<FpVec> coordinates(const FpVec& v) const;

  void insert(const FpVec& v);  // grow span by one vector

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  bool operator==(const Subspace& o) const = default;

 private:
  uint32_t p_;
  std::size_t ambient_;
  std::vector<FpVec> basis_;     // RREF rows, ordered by pivot column
  std::vector<std::size_t> pivots_;
};

// rank via Gaussian elimination (input copied)
std::size_t rank(const FpMatrix& m);

// Null space {v : v M = 0} under the row-vector convention.
Subspace kernel(const FpMatrix& m);

// Least k <= bound with M^k = 0, if any.
std::optional<int> nilpotency_index(const FpMatrix& m, int bound);

// Solves x M = b; returns a solution if one exists.
std::optional<FpVec> solve_left(const FpMatrix& m, const FpVec& b);

// Membership of target in the span of the given matrices (all flattened),
// i.e. whether target is a linear combination of basis_mats.
bool in_matrix_span(const std::vector<FpMatrix>& basis_mats, const FpMatrix& target);

// C(n, k) mod p via Pascal's rule.
uint32_t binomial_mod(uint64_t n, uint64_t k, const Fp& f);

}  // namespace adnil

#endif
