#ifndef ADNIL_HALL_HPP
#define ADNIL_HALL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "adnil/fp.hpp"

namespace adnil {

// Binary bracketing tree with variable leaves (0-based variable indices).
struct BTree {
  int leaf = -1;  // >= 0: leaf variable; -1: internal node
  std::shared_ptr<const BTree> l, r;

  static std::shared_ptr<const BTree> var(int v);
  static std::shared_ptr<const BTree> node(std::shared_ptr<const BTree> a,
                                           std::shared_ptr<const BTree> b);
};
using BTreePtr = std::shared_ptr<const BTree>;

int tree_degree(const BTreePtr& t);
std::vector<int> tree_multidegree(const BTreePtr& t, int nvars);
std::string tree_to_string(const BTreePtr& t, const std::vector<std::string>& var_names);

using Word = std::vector<uint8_t>;

// Free associative polynomial on words, used as the computational carrier
// for free Lie elements (the Lyndon expansion is triangular).
using AssocPoly = std::map<Word, uint32_t>;

AssocPoly assoc_expand(const BTreePtr& t, const Fp& f);

bool is_lyndon(const Word& w);
// Standard right factorization w = uv, v the longest proper Lyndon suffix.
std::pair<Word, Word> lyndon_factorize(const Word& w);
BTreePtr lyndon_bracketing(const Word& w);

// Hall (Lyndon) basis of the free Lie algebra on m generators, truncated at
// total degree degmax. Brackets whose degree exceeds degmax are silently
// truncated to zero.
class FreeLieBasis {
 public:
  FreeLieBasis(int m, int degmax, uint32_t p);

  int generators() const { return m_; }
  int degmax() const { return degmax_; }
  uint32_t modulus() const { return p_; }

  std::size_t size() const { return words_.size(); }
  const Word& word(std::size_t i) const { return words_[i]; }
  const BTreePtr& bracketing(std::size_t i) const { return trees_[i]; }
  std::size_t count_of_degree(int d) const;
  int index_of_word(const Word& w) const;  // -1 if absent

  // coordinates: basis index -> coefficient
  using Coords = std::map<std::size_t, uint32_t>;

  Coords free_bracket(std::size_t i, std::size_t j) const;
  // Express a Lie element given by its associative expansion in the Lyndon
  // basis (triangular descent); degrees beyond degmax are dropped.
  Coords from_assoc(const AssocPoly& poly) const;
  Coords from_tree(const BTreePtr& t) const;

 private:
  int m_, degmax_;
  uint32_t p_;
  std::vector<Word> words_;  // sorted by (degree, lex)
  std::vector<BTreePtr> trees_;
  std::map<Word, std::size_t> index_;
};

// Necklace count: (1/d) sum_{e|d} mu(e) m^{d/e}; the degree-d dimension of
// the free Lie algebra on m generators.
uint64_t witt_dimension(int m, int d);

FreeLieBasis hall_basis(int m, int degmax, uint32_t p = 2);

}  // namespace adnil

#endif
