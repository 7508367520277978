#ifndef ADNIL_ENVELOPE_HPP
#define ADNIL_ENVELOPE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adnil/lie.hpp"

namespace adnil {

// Grassmann monomial e_pi as a bit set of generator indices (bit i for
// e_{i+1}); budget <= 64 generators per computation.
using Mask = uint64_t;

int mask_weight(Mask m);
bool mask_disjoint(Mask a, Mask b);
std::string mask_to_string(Mask m);

// e_pi * e_tau: the disjoint union, or nothing when the masks intersect
// (the defining relations e_i^2 = 0). Inputs must be nonempty.
std::optional<Mask> e_product(Mask a, Mask b);

// Element of L~ = L (x) E in its standard decomposition: a map from masks
// to L-coordinates, nonzero components only, masks sorted. Mask 0 holds an
// optional plain-L part (needed when constants from L mix with envelope
// values inside divided polynomials); it is not part of the standard
// decomposition.
class EnvelopeElement {
 public:
  EnvelopeElement(const LieAlgebra& L, int budget);
  static EnvelopeElement single(const LieAlgebra& L, int budget, Mask mask, const FpVec& v);

  const LieAlgebra& base() const { return *L_; }
  int budget() const { return budget_; }
  uint32_t modulus() const { return L_->modulus(); }

  void add_component(Mask mask, const FpVec& v);
  FpVec component(Mask mask) const;
  const std::map<Mask, FpVec>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  bool has_plain_part() const { return comps_.count(0) > 0; }

  // (mask, value) pairs sorted by mask; the plain part is excluded.
  std::vector<std::pair<Mask, FpVec>> standard_decomposition() const;

  EnvelopeElement operator+(const EnvelopeElement& o) const;
  EnvelopeElement operator-(const EnvelopeElement& o) const;
  EnvelopeElement scaled(uint32_t c) const;
  // multiplication by the monomial e_tau
  EnvelopeElement e_scaled(Mask tau) const;
  bool operator==(const EnvelopeElement& o) const;

 private:
  const LieAlgebra* L_;
  int budget_;
  std::map<Mask, FpVec> comps_;
  void check_compatible(const EnvelopeElement& o, const char* where) const;
};

EnvelopeElement envelope_bracket(const EnvelopeElement& a, const EnvelopeElement& b);

// Operator on L~ as an element of End(L) (x) E^ (E with unit adjoined):
// a sum of mask-tagged blocks. The block (pi, M) sends a component
// (tau, v) to (tau | pi, v M) when the masks are disjoint, else to zero.
// Composition is blockwise; blocks whose mask already has weight >= budget
// act as zero on L~ because E has no unit.
class EnvelopeOperator {
 public:
  EnvelopeOperator(uint32_t p, std::size_t dim) : p_(p), dim_(dim) {}
  static EnvelopeOperator identity(uint32_t p, std::size_t dim);
  static EnvelopeOperator block(Mask mask, const FpMatrix& m);

  uint32_t modulus() const { return p_; }
  std::size_t dim() const { return dim_; }
  const std::map<Mask, FpMatrix>& blocks() const { return blocks_; }

  void add_block(Mask mask, const FpMatrix& m);

  EnvelopeOperator operator+(const EnvelopeOperator& o) const;
  EnvelopeOperator operator-(const EnvelopeOperator& o) const;
  EnvelopeOperator operator*(const EnvelopeOperator& o) const;  // apply this, then o
  EnvelopeOperator scaled(uint32_t c) const;
  EnvelopeOperator commutator(const EnvelopeOperator& o) const;
  EnvelopeOperator pow(uint64_t e) const;

  // Zero / equality as operators on L~ with the given budget: only blocks
  // of weight < budget are observable.
  bool is_zero_on(int budget) const;
  bool equals_on(const EnvelopeOperator& o, int budget) const;

  EnvelopeElement apply(const EnvelopeElement& x) const;
  // plain L vector treated as a mask-0 input
  EnvelopeElement apply_plain(const FpVec& v, const LieAlgebra& L, int budget) const;

 private:
  uint32_t p_;
  std::size_t dim_;
  std::map<Mask, FpMatrix> blocks_;
};

// ad(a) for an envelope element: sum over components of (mask, ad(a_mask)).
EnvelopeOperator ad_operator(const EnvelopeElement& a);

// Flattened coordinates of L~ for subspace computations: nonempty masks
// under the budget, sorted ascending, each contributing dim coordinates.
struct EnvelopeFlattening {
  const LieAlgebra* L;
  int budget;
  std::vector<Mask> masks;  // sorted, nonempty
  std::size_t total_dim() const { return masks.size() * L->dim(); }

  EnvelopeFlattening(const LieAlgebra& Lr, int budget_);
  FpVec flatten(const EnvelopeElement& x) const;
  EnvelopeElement unflatten(const FpVec& v) const;
  FpMatrix flatten_operator(const EnvelopeOperator& op) const;
  std::size_t offset_of(Mask m) const;
};

}  // namespace adnil

#endif
