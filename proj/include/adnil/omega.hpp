#ifndef ADNIL_OMEGA_HPP
#define ADNIL_OMEGA_HPP

#include <string>
#include <vector>

#include "adnil/envelope.hpp"

namespace adnil {

// Family of commuting, square-zero-anchored operators on L~. Each member
// carries the generator index anchoring it inside the square-zero ideal
// slice (every mask of the member contains the anchor), which is what makes
// same-anchor products vanish.
struct OmegaMember {
  EnvelopeOperator op;
  int anchor = -1;
  std::string label;
};

class OmegaFamily {
 public:
  OmegaFamily(uint32_t p, std::size_t dim, int budget)
      : p_(p), dim_(dim), budget_(budget) {}

  static OmegaFamily from_ad(const std::vector<EnvelopeElement>& elems);

  uint32_t modulus() const { return p_; }
  std::size_t dim() const { return dim_; }
  int budget() const { return budget_; }
  std::size_t size() const { return members_.size(); }
  const OmegaMember& member(std::size_t i) const { return members_[i]; }

  void add_member(OmegaMember m);

  struct Violation {
    std::string kind;  // "anchor" | "anchor-product" | "commutator"
    std::size_t i, j;
  };
  struct Report {
    bool ok = true;
    std::vector<Violation> violations;
  };

  Report validate();
  bool validated() const { return validated_; }

  // U_k: sum over k-element subsets of the member product; U_0 = Id.
  EnvelopeOperator U(int k) const;

 private:
  uint32_t p_;
  std::size_t dim_;
  int budget_;
  std::vector<OmegaMember> members_;
  bool validated_ = false;
};

// A(x) = Id + sum_k U_k(ad components of x), an automorphism of L~ when
// the components of x pairwise commute. The multiplicativity A([a,b]) =
// [A(a), A(b)] is spot-verified on deterministic samples.
EnvelopeOperator envelope_automorphism(const EnvelopeElement& x);

}  // namespace adnil

#endif
