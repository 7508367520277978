#ifndef ADNIL_ZASSENHAUS_HPP
#define ADNIL_ZASSENHAUS_HPP

#include "adnil/group.hpp"
#include "adnil/hall.hpp"
#include "adnil/lie.hpp"
#include "adnil/liepoly.hpp"

namespace adnil {

// Group algebra F_p[G] with the group elements as basis.
class GroupAlgebra {
 public:
  GroupAlgebra(const FiniteGroup& G, uint32_t p);
  const FiniteGroup& group() const { return *G_; }
  uint32_t modulus() const { return p_; }
  std::size_t dim() const { return G_->order(); }
  FpVec mul(const FpVec& a, const FpVec& b) const;
  FpVec one_minus(int g) const;  // 1 - g

 private:
  const FiniteGroup* G_;
  uint32_t p_;
};

struct FiltrationResult {
  std::vector<Subspace> w_powers;            // w^1, w^2, ... until stabilization
  std::vector<std::vector<int>> subgroups;   // G_1, G_2, ... element indices (sorted)
  bool reaches_identity = false;             // some G_i = {1}
  bool w_nilpotent = false;                  // some w^i = 0
  bool p_power_order = true;                 // |G| a power of p
};

// w = span{1-g}; w^{i+1} = w * w^i until stabilization; G_i by membership
// of 1-g. For p-groups the chain reaches {1}; otherwise the result records
// the stabilized level (non-residually-p behaviour at this finite depth).
FiltrationResult augmentation_filtration(const FiniteGroup& G, uint32_t p);

struct FiltrationChecks {
  bool subgroups_ok = true;           // each G_i a subgroup, G_{i+1} normal in G_i
  bool commutator_grading_ok = true;  // [G_i, G_j] <= G_{i+j}
  bool elementary_abelian_ok = true;  // g^p in G_{i+1}, commutators in G_{i+1}
};

FiltrationChecks filtration_checks(const FiniteGroup& G, const FiltrationResult& F, uint32_t p);

struct LpAlgebra {
  LieAlgebra L;                                 // graded
  std::vector<int> grade_dims;                  // dimension per grade
  std::vector<std::vector<int>> grade_reps;     // group element index per basis vector
  std::vector<std::pair<int, int>> basis_home;  // basis index -> (grade, slot)
};

// L_p(G) = sum of G_i/G_{i+1} with the bracket induced by group
// commutators; validates Jacobi/grading via the Lie layer.
LpAlgebra build_Lp(const FiniteGroup& G, uint32_t p);

// Ad-nilpotency of every homogeneous element (all nonzero coefficient
// vectors within one grade), with the bound dim+1.
bool homogeneous_ad_nilpotent(const LpAlgebra& lp);

// Left-normed group commutator word with p-power decorations.
struct GroupWordTerm {
  BTreePtr tree;   // commutator shape over variables
  int p_exponent;  // s in rho^{p^s}
};
using GroupCommutatorWord = std::vector<GroupWordTerm>;

// Theorem-3 translation: for an exponent-free word, the Lie polynomial with
// identical bracketing, summed over terms. Words with p-power factors are
// rejected; apply append_fresh_bracket first (the [w, x_0] reduction).
LiePolynomial group_commutator_shadow(const GroupCommutatorWord& word, uint32_t p, int nvars);

GroupCommutatorWord append_fresh_bracket(const GroupCommutatorWord& word, int fresh_var);

}  // namespace adnil

#endif
