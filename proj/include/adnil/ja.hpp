#ifndef ADNIL_JA_HPP
#define ADNIL_JA_HPP

#include "adnil/envelope.hpp"
#include "adnil/jordan.hpp"
#include "adnil/sandwich.hpp"

namespace adnil {

// Data of the quotient construction J_a = L~^m / K_a with
//   K'_a = { x in L~^m : x ad^[2](a) = 0 },
//   K_a  = sum_i (L^m (x) e_i + L~^m e_i) cap K'_a,
//   x^2  = a sum ad(x_{pi1}) ad(x_{pi2}) + K_a,
//   y Q(x) = y ad^[2](a) sum ad(x_{pi1}) ad(x_{pi2}) + K_a,
// where the pair sums run over 2-element sets of standard components in
// sorted mask order.
class JaData {
 public:
  // Requires: the components of a commute pairwise, lie in L^m, and
  // ad^[k](a) = 0 for k >= 3 (all machine-checked).
  JaData(const LieAlgebra& L, int budget, int m, const EnvelopeElement& a);

  const LieAlgebra& base() const { return *L_; }
  int budget() const { return budget_; }
  int m() const { return m_; }
  const EnvelopeElement& a() const { return a_; }
  const EnvelopeOperator& ad2() const { return ad2_; }
  const EnvelopeFlattening& flattening() const { return flat_; }
  const Subspace& ambient() const { return ambient_; }
  const Subspace& Kprime() const { return Kprime_; }
  const Subspace& Ka() const { return Ka_; }

  std::size_t quotient_dim() const { return reps_.size(); }
  const std::vector<FpVec>& representatives() const { return reps_; }  // flattened

  FpVec project(const EnvelopeElement& x) const;  // quotient coordinates
  EnvelopeElement lift(const FpVec& coords) const;

  EnvelopeElement square_rep(const EnvelopeElement& x) const;  // representative of x^2
  EnvelopeElement q_rep(const EnvelopeElement& y, const EnvelopeElement& x) const;

  // well-definedness spot check: representatives shifted by K_a give identical
  // projected squares and Q-values (sampled deterministically).
  bool well_defined_ok(int samples = 64) const;
  // sorted-mask versus reversed-mask pair order agree modulo K_a
  bool order_irrelevance_ok(int samples = 16) const;

 private:
  const LieAlgebra* L_;
  int budget_, m_;
  EnvelopeElement a_;
  EnvelopeFlattening flat_;
  Subspace ambient_, Kprime_, Ka_;
  std::vector<FpVec> reps_;
  FpMatrix basis_mat_;  // rows: K_a basis then representatives
  EnvelopeOperator ad2_;
  EnvelopeOperator pair_sum(const EnvelopeElement& x, bool reversed = false) const;
};

struct JaConstruction {
  QuadraticJordanAlgebra J;
  JordanReport axiom_report;
  bool well_defined;
};

JaConstruction ja_construct(const JaData& data);

// For a nonzero absolute zero divisor b + K_a of J_a, the element
// b ad^[2](a) is a nonzero sandwich of L~^m; verified both directly and via
// the U_2 vanishing route.
struct SandwichFromAzd {
  EnvelopeElement value;
  bool sandwich_direct;
  bool sandwich_via_u2;
};

SandwichFromAzd sandwich_from_azd(const JaData& data, const JaConstruction& ja,
                                  const EnvelopeElement& b);

}  // namespace adnil

#endif
