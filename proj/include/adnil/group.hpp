#ifndef ADNIL_GROUP_HPP
#define ADNIL_GROUP_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adnil/error.hpp"

namespace adnil {

// Permutation on {0..degree-1} as the image vector; the product g*h acts as
// "first g, then h".
using Perm = std::vector<int>;

Perm perm_identity(int degree);
Perm perm_compose(const Perm& g, const Perm& h);
Perm perm_inverse(const Perm& g);
bool is_permutation(const Perm& g);

class FiniteGroup {
 public:
  int degree = 0;
  std::vector<Perm> elements;  // identity first, BFS (word length, lex) order
  std::vector<std::string> words;
  std::vector<std::vector<int>> mult;  // mult[i][j] = index of elements[i]*elements[j]

  int order() const { return (int)elements.size(); }
  int identity() const { return 0; }
  int inverse(int i) const;
  int commutator(int g, int h) const;  // g^-1 h^-1 g h
  int power(int g, uint64_t e) const;
  int element_order(int g) const;

  // exhaustive for order <= 256, sampled above
  std::optional<std::array<int, 3>> associativity_witness() const;
  bool is_p_group(uint32_t p) const;
};

// Breadth-first closure of permutation generators; elements ordered by
// (word length, lexicographic generator sequence). Fails when the order
// exceeds the cap.
FiniteGroup enumerate_group(const std::vector<Perm>& gens,
                            const std::vector<std::string>& gen_names, int cap = 4096);

}  // namespace adnil

#endif
