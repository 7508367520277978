#ifndef ADNIL_LIEPOLY_HPP
#define ADNIL_LIEPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "adnil/hall.hpp"
#include "adnil/lie.hpp"

namespace adnil {

// Formal Lie polynomial: scalar-weighted bracket trees over variables
// x1..xn. Canonical form (for equality and reporting) is the Lyndon-basis
// coordinate vector of the associative expansion.
struct LiePolynomial {
  uint32_t p = 2;
  int nvars = 0;
  struct Term {
    uint32_t coeff;
    BTreePtr tree;
  };
  std::vector<Term> terms;

  std::vector<int> term_multidegree(std::size_t t) const {
    return tree_multidegree(terms[t].tree, nvars);
  }
  bool is_multilinear() const;
  int degree() const;  // max total degree over terms

  FpVec eval(const LieAlgebra& L, const std::vector<FpVec>& assignment) const;

  // Canonical Lyndon-basis presentation (term order and normalization are
  // not fixed by any external convention; this pins one down).
  FreeLieBasis::Coords hall_coordinates(const FreeLieBasis& basis) const;
  std::string to_string(const std::vector<std::string>& names = {}) const;
};

struct IdentityWitness {
  std::vector<std::size_t> tuple;  // basis indices per slot
  FpVec value;
};

// Evaluates a multilinear Lie polynomial over all basis tuples; sufficient
// by multilinearity. Returns the first violating tuple in lexicographic
// order, or nullopt when the identity holds.
std::optional<IdentityWitness> check_multilinear_identity(const LieAlgebra& L,
                                                          const LiePolynomial& f);

// Degree descent: keeps the terms whose permutation fixes 1, drops that
// variable and reindexes. Input must be a sum of left-normed permutation
// terms [x0, x_{s(1)}, ..., x_{s(n-1)}] with the identity coefficient 1.
LiePolynomial restrict_identity(const LiePolynomial& f);

// Left-normed comb tree over the given leaf indices.
BTreePtr left_comb(const std::vector<int>& leaves);

}  // namespace adnil

#endif
