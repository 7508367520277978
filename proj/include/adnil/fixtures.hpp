#ifndef ADNIL_FIXTURES_HPP
#define ADNIL_FIXTURES_HPP

#include "adnil/assoc.hpp"
#include "adnil/group.hpp"
#include "adnil/lie.hpp"

namespace adnil::fixtures {

LieAlgebra abelian(uint32_t p, std::size_t n);
LieAlgebra heisenberg(uint32_t p);               // [x,y] = z, graded (1,1,2)
LieAlgebra sl2(uint32_t p);                      // basis e, h, f
LieAlgebra strictly_upper_lie(uint32_t p, std::size_t n);  // n_n, graded by level
// chain algebras: u -> v -> w (-> t) under each of the commuting c_i
LieAlgebra chain6(uint32_t p);  // u, c1..c3, v, w
LieAlgebra chain8(uint32_t p);  // u, c1..c4, v, w, t

// pairwise-commuting element panels used to seed valid Omega families
struct LieFixture {
  std::string name;
  LieAlgebra L;
  std::vector<std::vector<FpVec>> commuting_panels;
};

std::vector<LieFixture> omega_test_algebras(uint32_t p);

// nil quadratic Jordan source: free associative nil-3 algebra on two
// generators truncated past degree 3 (dimension 10, a b a != 0)
AssocAlgebra nil3_free2(uint32_t p);

FiniteGroup c2_group();
FiniteGroup c4_group();
FiniteGroup d4_group();
FiniteGroup q8_group();
FiniteGroup c3_group();
FiniteGroup c6_group();
FiniteGroup heisenberg27_group();

}  // namespace adnil::fixtures

#endif
