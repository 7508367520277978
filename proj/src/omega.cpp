#include "adnil/omega.hpp"

namespace adnil {

OmegaFamily OmegaFamily::from_ad(const std::vector<EnvelopeElement>& elems) {
  if (elems.empty()) throw StructureError("OmegaFamily::from_ad: empty element list");
  const LieAlgebra& L = elems[0].base();
  OmegaFamily fam(L.modulus(), L.dim(), elems[0].budget());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const EnvelopeElement& e = elems[i];
    if (&e.base() != &L || e.budget() != fam.budget_)
      throw StructureError("OmegaFamily::from_ad: mixed bases");
    if (e.has_plain_part())
      throw StructureError("OmegaFamily::from_ad: member has a plain part");
    // anchor: a generator index shared by all masks of the element
    Mask common = ~Mask(0);
    for (const auto& [m, v] : e.components()) common &= m;
    int anchor = -1;
    if (!e.is_zero() && common != 0) {
      for (int b = 0; b < 64; ++b)
        if (common & (Mask(1) << b)) {
          anchor = b;
          break;
        }
    }
    fam.add_member({ad_operator(e), anchor, "ad#" + std::to_string(i + 1)});
  }
  return fam;
}

void OmegaFamily::add_member(OmegaMember m) {
  if (m.op.modulus() != p_ || m.op.dim() != dim_)
    throw StructureError("OmegaFamily::add_member: operator shape mismatch");
  members_.push_back(std::move(m));
  validated_ = false;
}

OmegaFamily::Report OmegaFamily::validate() {
  Report rep;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const auto& mi = members_[i];
    // anchoring: the member lies in the square-zero slice tagged by its anchor
    bool anchored = mi.anchor >= 0;
    for (const auto& [m, b] : mi.op.blocks())
      if (!(m & (Mask(1) << mi.anchor))) anchored = false;
    if (!anchored && !mi.op.is_zero_on(budget_)) {
      rep.ok = false;
      rep.violations.push_back({"anchor", i, i});
    }
    for (std::size_t j = 0; j < members_.size(); ++j) {
      if (i == j) continue;
      if (j > i) {
        // pairwise commuting
        if (!mi.op.commutator(members_[j].op).is_zero_on(budget_)) {
          rep.ok = false;
          rep.violations.push_back({"commutator", i, j});
        }
      }
      // same anchor => products vanish
      if (mi.anchor >= 0 && mi.anchor == members_[j].anchor) {
        if (!(mi.op * members_[j].op).is_zero_on(budget_)) {
          rep.ok = false;
          rep.violations.push_back({"anchor-product", i, j});
        }
      }
    }
  }
  validated_ = rep.ok;
  return rep;
}

EnvelopeOperator OmegaFamily::U(int k) const {
  if (!validated_)
    throw StructureError("OmegaFamily::U: family not validated (call validate() first)");
  if (k < 0) throw StructureError("OmegaFamily::U: negative k");
  if (k == 0) return EnvelopeOperator::identity(p_, dim_);
  EnvelopeOperator total(p_, dim_);
  std::size_t n = members_.size();
  if ((std::size_t)k > n) return total;
  // enumerate k-subsets in increasing index order
  std::vector<std::size_t> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    EnvelopeOperator prod = members_[idx[0]].op;
    for (int i = 1; i < k; ++i) prod = prod * members_[idx[i]].op;
    total = total + prod;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - (std::size_t)(k - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return total;
}

EnvelopeOperator envelope_automorphism(const EnvelopeElement& x) {
  const LieAlgebra& L = x.base();
  if (x.has_plain_part()) throw StructureError("envelope_automorphism: plain part not allowed");
  auto dec = x.standard_decomposition();
  std::vector<EnvelopeElement> comps;
  for (const auto& [m, v] : dec) comps.push_back(EnvelopeElement::single(L, x.budget(), m, v));
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      if (!envelope_bracket(comps[i], comps[j]).is_zero())
        throw HypothesisError("envelope_automorphism: components " + mask_to_string(dec[i].first) +
                              " and " + mask_to_string(dec[j].first) + " do not commute");
  EnvelopeOperator A = EnvelopeOperator::identity(L.modulus(), L.dim());
  if (!comps.empty()) {
    OmegaFamily fam = OmegaFamily::from_ad(comps);
    fam.validate();
    for (std::size_t k = 1; k <= comps.size(); ++k) A = A + fam.U((int)k);
  }
  // multiplicativity spot-check on single-mask basis brackets
  int checked = 0;
  for (std::size_t i = 0; i < L.dim() && checked < 8; ++i)
    for (std::size_t j = i + 1; j < L.dim() && checked < 8; ++j) {
      Mask m1 = Mask(1) << (x.budget() - 1);
      Mask m2 = Mask(1) << (x.budget() - 2);
      if (x.budget() < 2) break;
      EnvelopeElement a = EnvelopeElement::single(L, x.budget(), m1, L.basis_vec(i));
      EnvelopeElement b = EnvelopeElement::single(L, x.budget(), m2, L.basis_vec(j));
      EnvelopeElement lhs = A.apply(envelope_bracket(a, b));
      EnvelopeElement rhs = envelope_bracket(A.apply(a), A.apply(b));
      if (!(lhs == rhs))
        throw StructureError("envelope_automorphism: multiplicativity check failed");
      ++checked;
    }
  return A;
}

}  // namespace adnil
