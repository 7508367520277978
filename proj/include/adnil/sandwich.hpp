#ifndef ADNIL_SANDWICH_HPP
#define ADNIL_SANDWICH_HPP

#include <optional>
#include <string>
#include <vector>

#include "adnil/omega.hpp"

namespace adnil {

// ad(a)^2 = 0 and ad(a) ad(b) ad(a) = 0 for every basis b. Both conditions
// are always checked explicitly (at p = 2 the second does not follow).
bool sandwich_check(const LieAlgebra& L, const FpVec& a);
bool sandwich_check(const EnvelopeElement& a);

struct KostrikinEntry {
  std::size_t basis_index;
  FpVec value;   // b ad(a)^{n-1}
  int ad_index;  // measured nilpotency index of ad(value)
};

// Kostrikin descent: requires ad(a)^n = 0 with 4 <= n < p; every
// b ad(a)^{n-1} is ad-nilpotent of index <= n-1 (asserted).
std::vector<KostrikinEntry> kostrikin_descent(const LieAlgebra& L, const FpVec& a, int n);

struct LinearizedKostrikinReport {
  bool hypothesis_ok = true;
  int hypothesis_witness_k = -1;  // some U_k(Omega) != 0, k >= m
  bool part1_ok = false;          // [a U_{m-1}, b U_{m-1}] = 0 for all basis a, b
  bool part2_ok = false;          // U_k(Omega') = 0 for k >= m-1 (m >= 4 only)
  bool part2_applicable = false;
};

// Linearized Kostrikin descent. part 1 needs m >= 2; part 2 (m >= 4) builds
// Omega' = { a_pi U_{m-1}(Omega) }_pi from the standard decomposition of a.
LinearizedKostrikinReport linearized_kostrikin(OmegaFamily& omega, int m,
                                               const EnvelopeElement& a);

struct SandwichFromU2 {
  EnvelopeElement value;
  bool is_sandwich;
};

// If ad(Omega_0) is anchored and commuting and U_2(ad(Omega_0)) = 0,
// the sum of Omega_0 is a sandwich of L~. Throws HypothesisError with a
// witness when U_2 does not vanish.
SandwichFromU2 sandwich_from_U2(const std::vector<EnvelopeElement>& omega0);

// Free-associative Jacobson symmetrization
//   sum_{s in S_p} x_{s(1)}...x_{s(p)} =
//   sum_{s in S_{p-1}} [x_p, x_{s(1)}, ..., x_{s(p-1)}]
// expanded symbolically over F_p. Returns true when both sides agree.
bool jacobson_symmetrization_identity(uint32_t p);

struct SandwichPowerReport {
  bool power_vanishes = false;        // ad([a,b])^p = 0 on the envelope
  bool jacobson_identity_ok = false;  // symbolic identity at this p
};

// For a sandwich a in L~ and any b in L~, ([a,b])^p = 0 in the
// associative envelope generated by ad(L~).
SandwichPowerReport sandwich_ppower(const EnvelopeElement& a, const EnvelopeElement& b);

struct CongruenceReport {
  bool hypotheses_ok = true;
  std::pair<std::size_t, std::size_t> violating_pair{0, 0};
  bool congruent = false;
  bool equal_on_the_nose = false;
};

// Two disjoint decompositions of a family with block-wise
// annihilation produce block pair-sums congruent modulo ad[Omega, Omega].
CongruenceReport two_decomposition_congruence(const LieAlgebra& L, const std::vector<FpVec>& omega0,
                                              const std::vector<std::vector<std::size_t>>& partA,
                                              const std::vector<std::vector<std::size_t>>& partB);

}  // namespace adnil

#endif
