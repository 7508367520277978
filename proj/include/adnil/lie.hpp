#ifndef ADNIL_LIE_HPP
#define ADNIL_LIE_HPP

#include <string>
#include <vector>

#include "adnil/matrix.hpp"

namespace adnil {

// Finite-dimensional Lie algebra over F_p given by structure constants.
// Constants are stored for i < j only; [b_i, b_i] = 0 and the i > j case is
// derived, so anticommutativity holds by construction. Raw tables coming
// from files are validated separately (see validate_raw_table).
class LieAlgebra {
 public:
  LieAlgebra(uint32_t p, std::size_t dim);

  uint32_t modulus() const { return p_; }
  std::size_t dim() const { return dim_; }

  void set_name(std::size_t i, const std::string& n) { names_[i] = n; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int name_index(const std::string& n) const;  // -1 if unknown

  void set_grading(const std::vector<int>& degrees);
  bool graded() const { return !grading_.empty(); }
  const std::vector<int>& grading() const { return grading_; }

  // c_{ij}^k += v for i < j (throws on i >= j)
  void add_structure(std::size_t i, std::size_t j, std::size_t k, uint32_t v);
  // [b_i, b_j] for any i, j
  FpVec basis_bracket(std::size_t i, std::size_t j) const;

  FpVec zero() const { return FpVec(dim_, 0); }
  FpVec basis_vec(std::size_t i) const;

  FpVec bracket(const FpVec& a, const FpVec& b) const;
  // left-normed [a_1, a_2, ..., a_k]
  FpVec bracket_chain(const std::vector<FpVec>& elems) const;
  FpMatrix ad(const FpVec& a) const;  // x -> [x, a]

  struct Violation {
    std::string kind;  // "anticommutativity" | "jacobi" | "grading"
    std::size_t i, j, k;
  };
  struct Report {
    bool ok = true;
    std::vector<Violation> violations;
  };
  // Jacobi on all basis triples plus grading compatibility.
  Report validate() const;

 private:
  uint32_t p_;
  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<int> grading_;
  // table_[pair(i,j)] for i<j: vector of length dim
  std::vector<FpVec> table_;
  std::size_t pair_index(std::size_t i, std::size_t j) const { return i * dim_ + j; }
};

// Re-checks a fully-specified raw table (both triangles given explicitly):
// anticommutativity witnesses are reported, then Jacobi/grading on the
// canonical algebra built from the i<j part.
LieAlgebra::Report validate_raw_table(uint32_t p, std::size_t dim,
                                      const std::vector<std::vector<FpVec>>& raw,
                                      const std::vector<int>& grading,
                                      LieAlgebra* out = nullptr);

std::optional<int> ad_nilpotency(const LieAlgebra& L, const FpVec& a, int bound);

struct LieSetEntry {
  std::string word;  // formation word, e.g. "[g1,[g2,g1]]"
  FpVec value;
  int length;  // commutator length (number of generator occurrences)
};

// Closure of the generators under bracketing up to the given commutator
// length, deduplicated up to nonzero scalar multiples; zero values omitted.
std::vector<LieSetEntry> lie_set(const LieAlgebra& L, const std::vector<FpVec>& gens,
                                 int length_bound);

struct SeriesResult {
  std::vector<Subspace> terms;  // L^1 = L, L^2, ... until stabilization
  std::vector<std::size_t> dims;
  std::optional<int> nilpotency_degree;  // least k with L^k = 0
};

SeriesResult lower_central_series(const LieAlgebra& L);

Subspace ideal_closure(const LieAlgebra& L, const std::vector<FpVec>& gens);

// Smallest subalgebra containing the span of the given vectors.
Subspace subalgebra_closure(const LieAlgebra& L, const std::vector<FpVec>& gens);

// [A, B] = span of brackets of basis pairs.
Subspace bracket_span(const LieAlgebra& L, const Subspace& A, const Subspace& B);

}  // namespace adnil

#endif
