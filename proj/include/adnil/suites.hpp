#ifndef ADNIL_SUITES_HPP
#define ADNIL_SUITES_HPP

#include <string>
#include <vector>

#include "adnil/lie.hpp"

namespace adnil::suites {

struct UPowerIdentityStats {
  int families = 0;
  int failures = 0;
  std::string first_failure;
};

// Randomized Omega families over the bundled nilpotent algebras (dims <= 16,
// budgets 4..6) with the four divided-power identities checked as exact
// operator equalities.
UPowerIdentityStats upower_identity_suite(int trials, uint64_t seed);

struct KostrikinInstance {
  std::string name;
  LieAlgebra L;
  FpVec a;
  int n;
};

std::vector<KostrikinInstance> kostrikin_instances();

struct LinearizedDescentOutcome {
  int m2_instances = 0;
  int m4_instances = 0;
  bool ok = true;
  std::string first_failure;
};

LinearizedDescentOutcome linearized_descent_suite();

struct LinearizationOutcome {
  int maps_checked = 0;
  int maps_agreeing = 0;
  bool value_span_ok = false;
};

// Random homogeneous maps of degree <= 3 against the direct
// inclusion-exclusion expansion, plus the value-span fixture.
LinearizationOutcome linearization_suite(int maps, uint64_t seed);

}  // namespace adnil::suites

#endif
