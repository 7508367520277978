#include "adnil/ja.hpp"

namespace adnil {

JaData::JaData(const LieAlgebra& L, int budget, int m, const EnvelopeElement& a)
    : L_(&L), budget_(budget), m_(m), a_(a), flat_(L, budget),
      ambient_(L.modulus(), flat_.total_dim()), Kprime_(L.modulus(), flat_.total_dim()),
      Ka_(L.modulus(), flat_.total_dim()), basis_mat_(L.modulus(), 0, 0),
      ad2_(L.modulus(), L.dim()) {
  SeriesResult series = lower_central_series(L);
  const Subspace& Lm =
      (std::size_t)m <= series.terms.size() ? series.terms[m - 1] : series.terms.back();
  auto dec = a.standard_decomposition();
  if (a.has_plain_part()) throw StructureError("JaData: a has a plain part");
  std::vector<EnvelopeElement> comps;
  for (const auto& [mask, v] : dec) {
    if (!Lm.contains(v)) throw HypothesisError("JaData: component of a lies outside L^m");
    comps.push_back(EnvelopeElement::single(L, budget, mask, v));
  }
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j)
      if (!envelope_bracket(comps[i], comps[j]).is_zero())
        throw HypothesisError("JaData: components of a do not commute");
  if (!comps.empty()) {
    OmegaFamily fam = OmegaFamily::from_ad(comps);
    auto rep = fam.validate();
    if (!rep.ok) throw HypothesisError("JaData: ad family of a fails the anchoring/commuting conditions");
    for (int k = 3; k <= (int)fam.size(); ++k)
      if (!fam.U(k).is_zero_on(budget))
        throw HypothesisError("JaData: ad^[" + std::to_string(k) + "](a) != 0");
    ad2_ = fam.U(2);
  }
  // ambient = flattened L^m (x) E
  std::vector<FpVec> amb_gens;
  for (Mask mask : flat_.masks)
    for (const auto& bv : Lm.basis())
      amb_gens.push_back(flat_.flatten(EnvelopeElement::single(L, budget, mask, bv)));
  ambient_ = Subspace::span(L.modulus(), flat_.total_dim(), amb_gens);
  // K'_a = ambient cap ker(ad^[2](a))
  FpMatrix ad2f = flat_.flatten_operator(ad2_);
  Kprime_ = ambient_.intersect(kernel(ad2f));
  // K_a = sum over generator indices of (mask-contains-i slice cap K'_a)
  Subspace acc(L.modulus(), flat_.total_dim());
  for (int i = 0; i < budget; ++i) {
    std::vector<FpVec> slice_gens;
    for (Mask mask : flat_.masks) {
      if (!(mask & (Mask(1) << i))) continue;
      for (std::size_t b = 0; b < L.dim(); ++b) {
        FpVec v(flat_.total_dim(), 0);
        v[flat_.offset_of(mask) + b] = 1;
        slice_gens.push_back(v);
      }
    }
    Subspace slice = Subspace::span(L.modulus(), flat_.total_dim(), slice_gens);
    acc = acc.sum(slice.intersect(Kprime_));
  }
  Ka_ = acc;
  // quotient representatives: extend the K_a basis to a basis of the ambient
  Subspace grow = Ka_;
  for (const auto& g : ambient_.basis()) {
    if (!grow.contains(g)) {
      reps_.push_back(g);
      grow.insert(g);
    }
  }
  basis_mat_ = FpMatrix(L.modulus(), Ka_.dim() + reps_.size(), flat_.total_dim());
  for (std::size_t r = 0; r < Ka_.dim(); ++r) basis_mat_.set_row(r, Ka_.basis()[r]);
  for (std::size_t r = 0; r < reps_.size(); ++r) basis_mat_.set_row(Ka_.dim() + r, reps_[r]);
}

FpVec JaData::project(const EnvelopeElement& x) const {
  FpVec v = flat_.flatten(x);
  auto sol = solve_left(basis_mat_, v);
  if (!sol) throw StructureError("JaData::project: element outside the ambient L~^m");
  return FpVec(sol->begin() + Ka_.dim(), sol->end());
}

EnvelopeElement JaData::lift(const FpVec& coords) const {
  Fp f(L_->modulus());
  FpVec v(flat_.total_dim(), 0);
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i]) v = vec_add(v, vec_scale(reps_[i], coords[i], f), f);
  return flat_.unflatten(v);
}

EnvelopeOperator JaData::pair_sum(const EnvelopeElement& x, bool reversed) const {
  auto dec = x.standard_decomposition();
  EnvelopeOperator total(L_->modulus(), L_->dim());
  for (std::size_t i = 0; i < dec.size(); ++i)
    for (std::size_t j = i + 1; j < dec.size(); ++j) {
      EnvelopeOperator oi = EnvelopeOperator::block(dec[i].first, L_->ad(dec[i].second));
      EnvelopeOperator oj = EnvelopeOperator::block(dec[j].first, L_->ad(dec[j].second));
      total = total + (reversed ? oj * oi : oi * oj);
    }
  return total;
}

EnvelopeElement JaData::square_rep(const EnvelopeElement& x) const {
  return pair_sum(x).apply(a_);
}

EnvelopeElement JaData::q_rep(const EnvelopeElement& y, const EnvelopeElement& x) const {
  return pair_sum(x).apply(ad2_.apply(y));
}

bool JaData::well_defined_ok(int samples) const {
  if (Ka_.dim() == 0) return true;
  uint64_t state = 0x2545f4914f6cdd1dull;
  auto next = [&state] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  Fp f(L_->modulus());
  auto random_in = [&](const std::vector<FpVec>& basis) {
    FpVec v(flat_.total_dim(), 0);
    for (const auto& b : basis)
      if (next() % 3 == 0) v = vec_add(v, vec_scale(b, (uint32_t)(next() % L_->modulus()), f), f);
    return flat_.unflatten(v);
  };
  // all (K_a basis) x (representative) pairs, then random pairs
  for (const auto& z : Ka_.basis())
    for (const auto& r : reps_) {
      EnvelopeElement x = flat_.unflatten(r), zk = flat_.unflatten(z);
      if (project(square_rep(x + zk)) != project(square_rep(x))) return false;
      if (project(q_rep(x, x + zk)) != project(q_rep(x, x))) return false;
      if (project(q_rep(x + zk, x)) != project(q_rep(x, x))) return false;
    }
  for (int s = 0; s < samples; ++s) {
    EnvelopeElement x = random_in(reps_);
    EnvelopeElement y = random_in(reps_);
    EnvelopeElement z1 = random_in(Ka_.basis());
    EnvelopeElement z2 = random_in(Ka_.basis());
    if (project(square_rep(x + z1)) != project(square_rep(x))) return false;
    if (project(q_rep(y + z2, x + z1)) != project(q_rep(y, x))) return false;
  }
  return true;
}

bool JaData::order_irrelevance_ok(int samples) const {
  uint64_t state = 0x853c49e6748fea9bull;
  auto next = [&state] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  Fp f(L_->modulus());
  for (int s = 0; s < samples; ++s) {
    FpVec v(flat_.total_dim(), 0);
    for (const auto& b : reps_)
      if (next() % 2 == 0) v = vec_add(v, vec_scale(b, (uint32_t)(next() % L_->modulus()), f), f);
    EnvelopeElement x = flat_.unflatten(v);
    EnvelopeElement sorted_sq = pair_sum(x, false).apply(a_);
    EnvelopeElement reversed_sq = pair_sum(x, true).apply(a_);
    if (project(sorted_sq) != project(reversed_sq)) return false;
  }
  return true;
}

JaConstruction ja_construct(const JaData& data) {
  std::size_t q = data.quotient_dim();
  auto square = [&data](const FpVec& xq) { return data.project(data.square_rep(data.lift(xq))); };
  auto Q = [&data, q](const FpVec& xq) {
    FpMatrix m(data.base().modulus(), q, q);
    EnvelopeElement x = data.lift(xq);
    for (std::size_t i = 0; i < q; ++i) {
      FpVec ei(q, 0);
      ei[i] = 1;
      m.set_row(i, data.project(data.q_rep(data.lift(ei), x)));
    }
    return m;
  };
  JaConstruction out{QuadraticJordanAlgebra::from_maps(data.base().modulus(), q, square, Q),
                     {}, data.well_defined_ok()};
  out.axiom_report = verify_quadratic_jordan(out.J);
  return out;
}

SandwichFromAzd sandwich_from_azd(const JaData& data, const JaConstruction& ja,
                                  const EnvelopeElement& b) {
  FpVec bq = data.project(b);
  if (vec_is_zero(bq))
    throw HypothesisError("sandwich_from_azd: b lies in K_a (class is zero)");
  if (!azd_check(ja.J, bq))
    throw HypothesisError("sandwich_from_azd: b + K_a is not an absolute zero divisor of J_a");
  EnvelopeElement value = data.ad2().apply(b);
  SandwichFromAzd out{value, false, false};
  out.sandwich_direct = sandwich_check(value);
  std::vector<EnvelopeElement> omega0;
  for (const auto& [mask, v] : b.standard_decomposition()) {
    EnvelopeElement comp = EnvelopeElement::single(data.base(), data.budget(), mask, v);
    EnvelopeElement img = data.ad2().apply(comp);
    if (!img.is_zero()) omega0.push_back(img);
  }
  if (omega0.empty()) {
    out.sandwich_via_u2 = value.is_zero();
  } else {
    SandwichFromU2 res = sandwich_from_U2(omega0);
    out.sandwich_via_u2 = res.is_sandwich && res.value == value;
  }
  return out;
}

}  // namespace adnil
