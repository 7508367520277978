#include "adnil/envelope.hpp"

#include <bit>

namespace adnil {

int mask_weight(Mask m) { return std::popcount(m); }
bool mask_disjoint(Mask a, Mask b) { return (a & b) == 0; }

std::string mask_to_string(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 64; ++i)
    if (m & (Mask(1) << i)) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

std::optional<Mask> e_product(Mask a, Mask b) {
  if (a == 0 || b == 0) throw StructureError("e_product: empty Grassmann monomial");
  if (!mask_disjoint(a, b)) return std::nullopt;
  return a | b;
}

EnvelopeElement::EnvelopeElement(const LieAlgebra& L, int budget) : L_(&L), budget_(budget) {
  if (budget < 1 || budget > 64) throw StructureError("EnvelopeElement: budget out of range");
}

EnvelopeElement EnvelopeElement::single(const LieAlgebra& L, int budget, Mask mask,
                                        const FpVec& v) {
  EnvelopeElement e(L, budget);
  e.add_component(mask, v);
  return e;
}

void EnvelopeElement::add_component(Mask mask, const FpVec& v) {
  if (mask >= (Mask(1) << budget_)) throw StructureError("EnvelopeElement: mask beyond budget");
  if (v.size() != L_->dim()) throw StructureError("EnvelopeElement: coordinate length mismatch");
  Fp f(modulus());
  auto it = comps_.find(mask);
  FpVec sum = it == comps_.end() ? v : vec_add(it->second, v, f);
  if (vec_is_zero(sum)) {
    if (it != comps_.end()) comps_.erase(it);
  } else {
    comps_[mask] = sum;
  }
}

FpVec EnvelopeElement::component(Mask mask) const {
  auto it = comps_.find(mask);
  return it == comps_.end() ? L_->zero() : it->second;
}

std::vector<std::pair<Mask, FpVec>> EnvelopeElement::standard_decomposition() const {
  std::vector<std::pair<Mask, FpVec>> out;
  for (const auto& [m, v] : comps_)
    if (m != 0) out.emplace_back(m, v);
  return out;
}

void EnvelopeElement::check_compatible(const EnvelopeElement& o, const char* where) const {
  if (L_ != o.L_) throw StructureError(std::string(where) + ": base algebra mismatch");
  if (budget_ != o.budget_) throw StructureError(std::string(where) + ": budget mismatch");
}

EnvelopeElement EnvelopeElement::operator+(const EnvelopeElement& o) const {
  check_compatible(o, "EnvelopeElement::+");
  EnvelopeElement r = *this;
  for (const auto& [m, v] : o.comps_) r.add_component(m, v);
  return r;
}

EnvelopeElement EnvelopeElement::operator-(const EnvelopeElement& o) const {
  check_compatible(o, "EnvelopeElement::-");
  Fp f(modulus());
  EnvelopeElement r = *this;
  for (const auto& [m, v] : o.comps_) r.add_component(m, vec_scale(v, f.neg(1), f));
  return r;
}

EnvelopeElement EnvelopeElement::scaled(uint32_t c) const {
  Fp f(modulus());
  EnvelopeElement r(*L_, budget_);
  for (const auto& [m, v] : comps_) {
    FpVec w = vec_scale(v, f.reduce(c), f);
    if (!vec_is_zero(w)) r.comps_[m] = w;
  }
  return r;
}

EnvelopeElement EnvelopeElement::e_scaled(Mask tau) const {
  EnvelopeElement r(*L_, budget_);
  for (const auto& [m, v] : comps_)
    if (mask_disjoint(m, tau)) r.add_component(m | tau, v);
  return r;
}

bool EnvelopeElement::operator==(const EnvelopeElement& o) const {
  return L_ == o.L_ && budget_ == o.budget_ && comps_ == o.comps_;
}

EnvelopeElement envelope_bracket(const EnvelopeElement& a, const EnvelopeElement& b) {
  if (&a.base() != &b.base()) throw StructureError("envelope_bracket: base algebra mismatch");
  if (a.budget() != b.budget()) throw StructureError("envelope_bracket: budget mismatch");
  const LieAlgebra& L = a.base();
  EnvelopeElement r(L, a.budget());
  for (const auto& [ma, va] : a.components())
    for (const auto& [mb, vb] : b.components()) {
      if (!mask_disjoint(ma, mb)) continue;
      FpVec w = L.bracket(va, vb);
      if (!vec_is_zero(w)) r.add_component(ma | mb, w);
    }
  return r;
}

EnvelopeOperator EnvelopeOperator::identity(uint32_t p, std::size_t dim) {
  EnvelopeOperator op(p, dim);
  op.blocks_[0] = FpMatrix::identity(p, dim);
  return op;
}

EnvelopeOperator EnvelopeOperator::block(Mask mask, const FpMatrix& m) {
  if (!m.is_square()) throw StructureError("EnvelopeOperator::block: matrix must be square");
  EnvelopeOperator op(m.modulus(), m.rows());
  if (!m.is_zero()) op.blocks_[mask] = m;
  return op;
}

void EnvelopeOperator::add_block(Mask mask, const FpMatrix& m) {
  if (m.rows() != dim_ || m.cols() != dim_) throw StructureError("EnvelopeOperator: block shape");
  auto it = blocks_.find(mask);
  FpMatrix sum = it == blocks_.end() ? m : it->second + m;
  if (sum.is_zero()) {
    if (it != blocks_.end()) blocks_.erase(it);
  } else {
    blocks_[mask] = sum;
  }
}

EnvelopeOperator EnvelopeOperator::operator+(const EnvelopeOperator& o) const {
  require_same_modulus(p_, o.p_, "EnvelopeOperator::+");
  EnvelopeOperator r = *this;
  for (const auto& [m, b] : o.blocks_) r.add_block(m, b);
  return r;
}

EnvelopeOperator EnvelopeOperator::operator-(const EnvelopeOperator& o) const {
  Fp f(p_);
  return *this + o.scaled(f.neg(1));
}

EnvelopeOperator EnvelopeOperator::operator*(const EnvelopeOperator& o) const {
  require_same_modulus(p_, o.p_, "EnvelopeOperator::*");
  if (dim_ != o.dim_) throw StructureError("EnvelopeOperator::*: dimension mismatch");
  EnvelopeOperator r(p_, dim_);
  for (const auto& [ma, a] : blocks_)
    for (const auto& [mb, b] : o.blocks_) {
      if (!mask_disjoint(ma, mb)) continue;
      r.add_block(ma | mb, a * b);
    }
  return r;
}

EnvelopeOperator EnvelopeOperator::scaled(uint32_t c) const {
  Fp f(p_);
  c = f.reduce(c);
  EnvelopeOperator r(p_, dim_);
  if (c == 0) return r;
  for (const auto& [m, b] : blocks_) r.add_block(m, b.scaled(c));
  return r;
}

EnvelopeOperator EnvelopeOperator::commutator(const EnvelopeOperator& o) const {
  return (*this * o) - (o * *this);
}

EnvelopeOperator EnvelopeOperator::pow(uint64_t e) const {
  EnvelopeOperator r = identity(p_, dim_);
  EnvelopeOperator b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool EnvelopeOperator::is_zero_on(int budget) const {
  for (const auto& [m, b] : blocks_) {
    if (m >= (Mask(1) << budget)) continue;       // uses generators beyond the budget
    if (mask_weight(m) >= budget) continue;       // no nonempty room left
    if (!b.is_zero()) return false;
  }
  return true;
}

bool EnvelopeOperator::equals_on(const EnvelopeOperator& o, int budget) const {
  return (*this - o).is_zero_on(budget);
}

EnvelopeElement EnvelopeOperator::apply(const EnvelopeElement& x) const {
  const LieAlgebra& L = x.base();
  require_same_modulus(p_, L.modulus(), "EnvelopeOperator::apply");
  if (dim_ != L.dim()) throw StructureError("EnvelopeOperator::apply: dimension mismatch");
  Fp f(p_);
  EnvelopeElement r(L, x.budget());
  for (const auto& [tau, v] : x.components())
    for (const auto& [pi, b] : blocks_) {
      if (!mask_disjoint(tau, pi)) continue;
      if ((tau | pi) >= (Mask(1) << x.budget())) continue;
      FpVec w = adnil::apply(v, b, f);
      if (!vec_is_zero(w)) r.add_component(tau | pi, w);
    }
  return r;
}

EnvelopeElement EnvelopeOperator::apply_plain(const FpVec& v, const LieAlgebra& L,
                                              int budget) const {
  EnvelopeElement x(L, budget);
  x.add_component(0, v);
  return apply(x);
}

EnvelopeOperator ad_operator(const EnvelopeElement& a) {
  const LieAlgebra& L = a.base();
  EnvelopeOperator op(L.modulus(), L.dim());
  for (const auto& [m, v] : a.components()) op.add_block(m, L.ad(v));
  return op;
}

EnvelopeFlattening::EnvelopeFlattening(const LieAlgebra& Lr, int budget_)
    : L(&Lr), budget(budget_) {
  for (Mask m = 1; m < (Mask(1) << budget); ++m) masks.push_back(m);
  if (total_dim() > kMaxAmbientDim)
    throw StructureError("EnvelopeFlattening: flattened dimension exceeds cap");
}

std::size_t EnvelopeFlattening::offset_of(Mask m) const {
  auto it = std::lower_bound(masks.begin(), masks.end(), m);
  if (it == masks.end() || *it != m) throw StructureError("EnvelopeFlattening: mask not present");
  return (std::size_t)(it - masks.begin()) * L->dim();
}

FpVec EnvelopeFlattening::flatten(const EnvelopeElement& x) const {
  if (x.has_plain_part()) throw StructureError("flatten: element has a plain part");
  FpVec out(total_dim(), 0);
  for (const auto& [m, v] : x.components()) {
    std::size_t off = offset_of(m);
    for (std::size_t i = 0; i < v.size(); ++i) out[off + i] = v[i];
  }
  return out;
}

EnvelopeElement EnvelopeFlattening::unflatten(const FpVec& v) const {
  if (v.size() != total_dim()) throw StructureError("unflatten: length mismatch");
  EnvelopeElement x(*L, budget);
  for (std::size_t k = 0; k < masks.size(); ++k) {
    FpVec comp(v.begin() + k * L->dim(), v.begin() + (k + 1) * L->dim());
    if (!vec_is_zero(comp)) x.add_component(masks[k], comp);
  }
  return x;
}

FpMatrix EnvelopeFlattening::flatten_operator(const EnvelopeOperator& op) const {
  FpMatrix out(L->modulus(), total_dim(), total_dim());
  for (std::size_t k = 0; k < masks.size(); ++k) {
    Mask tau = masks[k];
    for (const auto& [pi, b] : op.blocks()) {
      if (!mask_disjoint(tau, pi)) continue;
      Mask target = tau | pi;
      if (target >= (Mask(1) << budget)) continue;
      std::size_t src = k * L->dim(), dst = offset_of(target);
      Fp f(L->modulus());
      for (std::size_t i = 0; i < L->dim(); ++i)
        for (std::size_t j = 0; j < L->dim(); ++j)
          out.at(src + i, dst + j) = f.add(out.at(src + i, dst + j), b.at(i, j));
    }
  }
  return out;
}

}  // namespace adnil
