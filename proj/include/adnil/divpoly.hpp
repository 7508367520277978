#ifndef ADNIL_DIVPOLY_HPP
#define ADNIL_DIVPOLY_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "adnil/omega.hpp"

namespace adnil {

// Expression tree over L * Lie<X> extended by divided-ad nodes
// x_0 ad_{x_1}^{[k]}(w). All variables live in one global namespace indexed
// into the evaluation assignment. Subst node arguments are positional: the
// inner tree's Var(i) refers to the i-th substituted argument.
struct DPNode;
using DPNodePtr = std::shared_ptr<DPNode>;

struct DPNode {
  enum Kind { Var, Const, Bracket, Subst, DivAd } kind;
  int id = -1;  // assigned by DividedPolynomial for error reporting

  int var = -1;                     // Var
  FpVec cvec;                       // Const (element of L)
  std::vector<DPNodePtr> children;  // Bracket (left-normed), Subst args
  DPNodePtr inner;                  // Subst / DivAd body
  int x0 = -1, x1 = -1, k = 0;      // DivAd data

  // divided-ad proof-obligation record
  std::set<std::string> obligations_verified_for;  // ambient keys
  bool obligations_waived = false;

  static DPNodePtr make_var(int i);
  static DPNodePtr make_const(const FpVec& c);
  static DPNodePtr make_bracket(std::vector<DPNodePtr> children);
  static DPNodePtr make_subst(DPNodePtr w, std::vector<DPNodePtr> args);
  static DPNodePtr make_divad(int x0, int x1, int k, DPNodePtr w);
};

// Spanning description of the ambient subspace the variables range over;
// the key identifies it in per-node obligation caches.
struct DPAmbient {
  std::string key;
  std::vector<EnvelopeElement> span;
};

class DividedPolynomial {
 public:
  DividedPolynomial(const LieAlgebra& L, int budget, int nvars, DPNodePtr root);

  const LieAlgebra& base() const { return *L_; }
  int budget() const { return budget_; }
  int nvars() const { return nvars_; }
  const DPNodePtr& root() const { return root_; }

  // recorded multidegrees (variable -> degree) of the whole expression
  const std::vector<int>& multidegree() const { return multidegree_; }

  struct ObligationReport {
    bool ok = true;
    std::vector<std::string> failures;
  };
  // Checks the commutativity obligation over pairs from the ambient span
  // and the E-linearity plus support obligations, with the remaining
  // variables held at the representative assignment. Marks each DivAd node
  // verified for ambient.key on success. The support check spans the
  // ambient basis, which is a complete check for w multilinear in x_1.
  ObligationReport verify_obligations(const DPAmbient& ambient,
                       const std::vector<EnvelopeElement>& representative);
  void waive_obligations();  // exploratory use

  EnvelopeElement eval(const std::vector<EnvelopeElement>& assignment,
                       const std::string& ambient_key) const;

  // Full linearization evaluated by inclusion-exclusion; the argument list
  // has sum(multidegree) slots grouped per variable in index order.
  EnvelopeElement eval_full_linearization(const std::vector<EnvelopeElement>& slots,
                                          const std::string& ambient_key) const;

 private:
  const LieAlgebra* L_;
  int budget_, nvars_;
  DPNodePtr root_;
  std::vector<int> multidegree_;
  std::vector<DPNode*> divad_nodes_;
  int next_id_ = 0;
  void index_nodes(const DPNodePtr& n);
};

struct RegularityRow {
  int i;
  bool identically_zero;
};

// Evaluates the full linearization of w over basis tuples of L^i (tensored
// with fresh disjoint Grassmann generators, which detects nonzero-ness of
// the span of values on the whole of L~^i) and reports, for each i <=
// i_max, whether some value is nonzero.
std::vector<RegularityRow> regularity_probe(DividedPolynomial& w, int i_max);

}  // namespace adnil

#endif
