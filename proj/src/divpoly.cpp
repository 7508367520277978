#include "adnil/divpoly.hpp"

#include "adnil/polymap.hpp"

namespace adnil {

DPNodePtr DPNode::make_var(int i) {
  auto n = std::make_shared<DPNode>();
  n->kind = Var;
  n->var = i;
  return n;
}

DPNodePtr DPNode::make_const(const FpVec& c) {
  auto n = std::make_shared<DPNode>();
  n->kind = Const;
  n->cvec = c;
  return n;
}

DPNodePtr DPNode::make_bracket(std::vector<DPNodePtr> children) {
  if (children.size() < 2) throw StructureError("DPNode: bracket needs >= 2 children");
  auto n = std::make_shared<DPNode>();
  n->kind = Bracket;
  n->children = std::move(children);
  return n;
}

DPNodePtr DPNode::make_subst(DPNodePtr w, std::vector<DPNodePtr> args) {
  auto n = std::make_shared<DPNode>();
  n->kind = Subst;
  n->inner = std::move(w);
  n->children = std::move(args);
  return n;
}

DPNodePtr DPNode::make_divad(int x0, int x1, int k, DPNodePtr w) {
  if (k < 0) throw StructureError("DPNode: divided-ad exponent must be >= 0");
  auto n = std::make_shared<DPNode>();
  n->kind = DivAd;
  n->x0 = x0;
  n->x1 = x1;
  n->k = k;
  n->inner = std::move(w);
  return n;
}

namespace {

// multidegree of a node in the enclosing variable namespace
std::vector<int> node_multidegree(const DPNodePtr& n, int nvars) {
  switch (n->kind) {
    case DPNode::Var: {
      std::vector<int> d(nvars, 0);
      if (n->var < 0 || n->var >= nvars) throw StructureError("DPNode: variable out of range");
      d[n->var] = 1;
      return d;
    }
    case DPNode::Const:
      return std::vector<int>(nvars, 0);
    case DPNode::Bracket: {
      std::vector<int> d(nvars, 0);
      for (const auto& c : n->children) {
        auto dc = node_multidegree(c, nvars);
        for (int i = 0; i < nvars; ++i) d[i] += dc[i];
      }
      return d;
    }
    case DPNode::Subst: {
      // substitution composes degrees: sum_i deg_{x_i}(w) * deg(v_i)
      std::vector<int> d(nvars, 0);
      auto dw = node_multidegree(n->inner, (int)n->children.size());
      for (std::size_t i = 0; i < n->children.size(); ++i) {
        auto dv = node_multidegree(n->children[i], nvars);
        for (int j = 0; j < nvars; ++j) d[j] += dw[i] * dv[j];
      }
      return d;
    }
    case DPNode::DivAd: {
      auto dw = node_multidegree(n->inner, nvars);
      if (n->x1 < 0 || n->x1 >= nvars || dw[n->x1] != 1)
        throw StructureError("DPNode: divided-ad body must be linear in x1 (degree bookkeeping mismatch)");
      std::vector<int> d(nvars, 0);
      for (int i = 0; i < nvars; ++i) d[i] = n->k * dw[i];
      if (n->x0 < 0 || n->x0 >= nvars) throw StructureError("DPNode: x0 out of range");
      d[n->x0] += 1;
      return d;
    }
  }
  throw StructureError("DPNode: unknown kind");
}

}  // namespace

void DividedPolynomial::index_nodes(const DPNodePtr& n) {
  n->id = next_id_++;
  if (n->kind == DPNode::DivAd) divad_nodes_.push_back(n.get());
  for (const auto& c : n->children) index_nodes(c);
  if (n->inner) index_nodes(n->inner);
}

DividedPolynomial::DividedPolynomial(const LieAlgebra& L, int budget, int nvars, DPNodePtr root)
    : L_(&L), budget_(budget), nvars_(nvars), root_(std::move(root)) {
  multidegree_ = node_multidegree(root_, nvars_);
  index_nodes(root_);
}

namespace {

EnvelopeElement eval_node(const LieAlgebra& L, int budget, const DPNodePtr& n,
                          const std::vector<EnvelopeElement>& vals,
                          const std::string& ambient_key) {
  switch (n->kind) {
    case DPNode::Var:
      return vals[n->var];
    case DPNode::Const: {
      EnvelopeElement e(L, budget);
      e.add_component(0, n->cvec);
      return e;
    }
    case DPNode::Bracket: {
      EnvelopeElement acc = eval_node(L, budget, n->children[0], vals, ambient_key);
      for (std::size_t i = 1; i < n->children.size(); ++i)
        acc = envelope_bracket(acc, eval_node(L, budget, n->children[i], vals, ambient_key));
      return acc;
    }
    case DPNode::Subst: {
      std::vector<EnvelopeElement> inner_vals;
      for (const auto& a : n->children)
        inner_vals.push_back(eval_node(L, budget, a, vals, ambient_key));
      return eval_node(L, budget, n->inner, inner_vals, ambient_key);
    }
    case DPNode::DivAd: {
      if (!n->obligations_waived && !n->obligations_verified_for.count(ambient_key))
        throw StructureError("eval: divided-ad obligation unverified for node #" +
                             std::to_string(n->id) + " on ambient '" + ambient_key + "'");
      const EnvelopeElement& a0 = vals[n->x0];
      const EnvelopeElement& a1 = vals[n->x1];
      if (n->k == 0) return a0;  // U_0 = Id
      std::vector<EnvelopeElement> omega_elems;
      for (const auto& [mask, v] : a1.standard_decomposition()) {
        std::vector<EnvelopeElement> sub = vals;
        sub[n->x1] = EnvelopeElement::single(L, budget, mask, v);
        EnvelopeElement wval = eval_node(L, budget, n->inner, sub, ambient_key);
        if (!wval.is_zero()) omega_elems.push_back(wval);
      }
      if ((int)omega_elems.size() < n->k) return EnvelopeElement(L, budget);
      OmegaFamily fam = OmegaFamily::from_ad(omega_elems);
      auto rep = fam.validate();
      if (!rep.ok)
        throw HypothesisError("eval: divided-ad family fails the anchoring/commuting conditions at node #" +
                              std::to_string(n->id));
      return fam.U(n->k).apply(a0);
    }
  }
  throw StructureError("eval: unknown node kind");
}

}  // namespace

DividedPolynomial::ObligationReport DividedPolynomial::verify_obligations(
    const DPAmbient& ambient, const std::vector<EnvelopeElement>& representative) {
  ObligationReport rep;
  if ((int)representative.size() != nvars_)
    throw StructureError("verify_obligations: representative assignment arity mismatch");
  for (DPNode* node : divad_nodes_) {
    auto eval_w = [&](const EnvelopeElement& x1val) {
      std::vector<EnvelopeElement> vals = representative;
      vals[node->x1] = x1val;
      // inner obligations must already be satisfied; use the same key
      DPNodePtr body(node->inner);
      return eval_node(*L_, budget_, body, vals, ambient.key);
    };
    bool node_ok = true;
    // commutativity obligation: [w(a,...), w(b,...)] = 0 over ambient pairs
    for (std::size_t i = 0; i < ambient.span.size() && node_ok; ++i)
      for (std::size_t j = i; j < ambient.span.size(); ++j) {
        EnvelopeElement wa = eval_w(ambient.span[i]);
        EnvelopeElement wb = eval_w(ambient.span[j]);
        if (!envelope_bracket(wa, wb).is_zero()) {
          node_ok = false;
          rep.failures.push_back("node #" + std::to_string(node->id) +
                                 ": commutativity obligation fails at span pair (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
          break;
        }
      }
    // linearity obligation: F- and E-linearity in x1
    for (std::size_t i = 0; i + 1 < ambient.span.size() && node_ok; i += 2) {
      EnvelopeElement sum = ambient.span[i] + ambient.span[i + 1];
      EnvelopeElement lhs = eval_w(sum);
      EnvelopeElement rhs = eval_w(ambient.span[i]) + eval_w(ambient.span[i + 1]);
      if (!(lhs == rhs)) {
        node_ok = false;
        rep.failures.push_back("node #" + std::to_string(node->id) + ": additivity obligation fails");
      }
    }
    if (node_ok && budget_ >= 2) {
      for (std::size_t i = 0; i < ambient.span.size() && node_ok; ++i) {
        // a fresh generator index not used by the span element
        Mask used = 0;
        for (const auto& [m, v] : ambient.span[i].components()) used |= m;
        int fresh = -1;
        for (int b = 0; b < budget_; ++b)
          if (!(used & (Mask(1) << b))) {
            fresh = b;
            break;
          }
        if (fresh < 0) continue;
        Mask tau = Mask(1) << fresh;
        EnvelopeElement lhs = eval_w(ambient.span[i].e_scaled(tau));
        EnvelopeElement rhs = eval_w(ambient.span[i]).e_scaled(tau);
        if (!(lhs == rhs)) {
          node_ok = false;
          rep.failures.push_back("node #" + std::to_string(node->id) +
                                 ": E-linearity obligation fails");
        }
      }
    }
    // support obligation: w(I (x) e_pi, ...) stays inside the e_pi slice
    for (const auto& span_elem : ambient.span) {
      if (!node_ok) break;
      for (const auto& [mask, v] : span_elem.standard_decomposition()) {
        EnvelopeElement single = EnvelopeElement::single(*L_, budget_, mask, v);
        EnvelopeElement val = eval_w(single);
        for (const auto& [vm, vv] : val.components())
          if ((vm & mask) != mask) {
            node_ok = false;
            rep.failures.push_back("node #" + std::to_string(node->id) +
                                   ": support obligation fails at mask " +
                                   mask_to_string(mask));
            break;
          }
        if (!node_ok) break;
      }
    }
    if (node_ok)
      node->obligations_verified_for.insert(ambient.key);
    else
      rep.ok = false;
  }
  return rep;
}

void DividedPolynomial::waive_obligations() {
  for (DPNode* node : divad_nodes_) node->obligations_waived = true;
}

EnvelopeElement DividedPolynomial::eval(const std::vector<EnvelopeElement>& assignment,
                                        const std::string& ambient_key) const {
  if ((int)assignment.size() != nvars_) throw StructureError("eval: assignment arity mismatch");
  return eval_node(*L_, budget_, root_, assignment, ambient_key);
}

EnvelopeElement DividedPolynomial::eval_full_linearization(
    const std::vector<EnvelopeElement>& slots, const std::string& ambient_key) const {
  int total = 0;
  for (int d : multidegree_) total += d;
  if ((int)slots.size() != total)
    throw StructureError("eval_full_linearization: slot count mismatch");
  Fp f(L_->modulus());
  // inclusion-exclusion per variable over its degree-many slots
  std::vector<std::pair<int, int>> ranges;  // per variable: [start, d]
  int pos = 0;
  for (int v = 0; v < nvars_; ++v) {
    ranges.emplace_back(pos, multidegree_[v]);
    pos += multidegree_[v];
  }
  EnvelopeElement acc(*L_, budget_);
  // iterate over per-variable nonempty subsets
  std::vector<unsigned> subset(nvars_, 1);
  auto advance = [&]() {
    for (int v = 0; v < nvars_; ++v) {
      if (multidegree_[v] == 0) continue;
      unsigned limit = 1u << multidegree_[v];
      if (++subset[v] < limit) return true;
      subset[v] = 1;
    }
    return false;
  };
  // variables of degree 0 contribute a fixed zero value
  while (true) {
    std::vector<EnvelopeElement> assignment;
    int sign = 0;
    for (int v = 0; v < nvars_; ++v) {
      EnvelopeElement s(*L_, budget_);
      auto [start, d] = ranges[v];
      if (d > 0) {
        for (int k = 0; k < d; ++k)
          if (subset[v] & (1u << k)) s = s + slots[start + k];
        sign += d - std::popcount(subset[v]);
      }
      assignment.push_back(s);
    }
    EnvelopeElement val = eval(assignment, ambient_key);
    if (sign % 2 == 1) val = val.scaled(f.neg(1));
    acc = acc + val;
    if (!advance()) break;
  }
  return acc;
}

std::vector<RegularityRow> regularity_probe(DividedPolynomial& w, int i_max) {
  const LieAlgebra& L = w.base();
  if (!L.graded()) throw StructureError("regularity_probe: algebra must be graded");
  SeriesResult series = lower_central_series(L);
  int total = 0;
  for (int d : w.multidegree()) total += d;
  if (total > w.budget())
    throw StructureError("regularity_probe: budget too small for fresh masks");
  BudgetCounter budget("regularity_probe");
  std::vector<RegularityRow> rows;
  bool seen_zero = false;
  for (int i = 1; i <= i_max; ++i) {
    const Subspace& Li =
        (std::size_t)i <= series.terms.size() ? series.terms[i - 1] : series.terms.back();
    std::vector<EnvelopeElement> span;  // fresh-mask single generators per slot
    std::size_t nb = Li.dim();
    bool nonzero = false;
    if (nb > 0) {
      // verify obligations against this ambient
      DPAmbient ambient;
      ambient.key = "Lpow" + std::to_string(i);
      for (std::size_t b = 0; b < nb; ++b)
        ambient.span.push_back(
            EnvelopeElement::single(L, w.budget(), Mask(1) << (b % w.budget()), Li.basis()[b]));
      std::vector<EnvelopeElement> representative(w.nvars(), EnvelopeElement(L, w.budget()));
      for (int v = 0; v < w.nvars(); ++v)
        representative[v] = EnvelopeElement::single(L, w.budget(), Mask(1) << (v % w.budget()),
                                                    Li.basis()[v % nb]);
      auto oblig = w.verify_obligations(ambient, representative);
      if (!oblig.ok) throw HypothesisError("regularity_probe: divided-ad obligations fail on L^" +
                                         std::to_string(i));
      std::vector<std::size_t> idx(total, 0);
      while (!nonzero) {
        std::vector<EnvelopeElement> slots;
        for (int t = 0; t < total; ++t)
          slots.push_back(
              EnvelopeElement::single(L, w.budget(), Mask(1) << t, Li.basis()[idx[t]]));
        budget.tick(1u << total);
        if (!w.eval_full_linearization(slots, ambient.key).is_zero()) nonzero = true;
        int t = total - 1;
        for (; t >= 0; --t) {
          if (++idx[t] < nb) break;
          idx[t] = 0;
        }
        if (t < 0) break;
      }
    }
    if (!nonzero) seen_zero = true;
    if (seen_zero && nonzero)
      throw StructureError("regularity_probe: monotonicity violated");  // cannot happen
    rows.push_back({i, !nonzero});
  }
  return rows;
}

}  // namespace adnil
