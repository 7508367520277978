#ifndef ADNIL_POLYMAP_HPP
#define ADNIL_POLYMAP_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adnil/matrix.hpp"

namespace adnil {

// Global evaluation budget for exhaustive identity checks. Reads the
// ADNIL_BUDGET environment variable once; default 10^7 evaluations.
uint64_t evaluation_budget();
class BudgetCounter {
 public:
  explicit BudgetCounter(const char* what) : what_(what) {}
  void tick(uint64_t n = 1);

 private:
  const char* what_;
  uint64_t used_ = 0;
};

// Homogeneous polynomial map V x ... x V -> W between F_p coordinate
// spaces, held as a black-box evaluator with declared degrees. Divided
// polynomials and Jordan maps plug in without symbolic expansion.
struct PolynomialMap {
  uint32_t p = 2;
  std::size_t in_dim = 0, out_dim = 0;
  std::vector<int> degrees;  // one per slot, each >= 1
  std::function<FpVec(const std::vector<FpVec>&)> eval;

  int arity() const { return (int)degrees.size(); }
  bool multilinear() const {
    for (int d : degrees)
      if (d != 1) return false;
    return true;
  }
  // Spot-checks f(..., c v_i, ...) = c^{d_i} f(..., v_i, ...) on seeded
  // samples; throws StructureError on violation.
  void spot_check_homogeneity(uint64_t seed = 1) const;
};

// Linearization of slot i: the d_i inclusion-exclusion polarization
// sum_{0 != pi} (-1)^{d_i - |pi|} f(..., sum_{v in pi} v, ...), multilinear
// in the d_i new slots that replace slot i.
PolynomialMap linearize_slot(const PolynomialMap& f, int slot);

// Consecutive slot linearizations; multilinear in sum(d_i) slots.
PolynomialMap full_linearization(const PolynomialMap& f);

// Checks that setting all slots of each group equal recovers
// (prod d_i!) f(v_1,...,v_m); meaningful only when that factor is nonzero
// mod p (returns nullopt otherwise).
std::optional<bool> check_diagonal_recovery(const PolynomialMap& f, const PolynomialMap& flin,
                                            uint64_t seed = 7, int samples = 8);

// Span of the values of a multilinear map over all basis tuples of the
// given domains.
Subspace value_span(const PolynomialMap& f, const std::vector<Subspace>& domains);

}  // namespace adnil

#endif
