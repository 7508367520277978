#include "adnil/sympoly.hpp"

#include "adnil/error.hpp"

namespace adnil {

SymPoly SymPoly::variable(uint32_t p, std::size_t nvars, std::size_t i) {
  SymPoly s(p, nvars);
  Expo e(nvars, 0);
  e[i] = 1;
  s.terms_[e] = 1 % p;
  return s;
}

SymPoly SymPoly::constant(uint32_t p, std::size_t nvars, uint32_t c) {
  SymPoly s(p, nvars);
  c %= p;
  if (c) s.terms_[Expo(nvars, 0)] = c;
  return s;
}

void SymPoly::add_term(const Expo& e, uint32_t c) {
  if (e.size() != nvars_) throw StructureError("SymPoly::add_term: exponent arity mismatch");
  Fp f(p_);
  auto it = terms_.find(e);
  uint32_t v = f.add(it == terms_.end() ? 0 : it->second, f.reduce(c));
  if (v == 0) {
    if (it != terms_.end()) terms_.erase(it);
  } else {
    terms_[e] = v;
  }
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
  require_same_modulus(p_, o.p_, "SymPoly::+");
  SymPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const {
  require_same_modulus(p_, o.p_, "SymPoly::-");
  Fp f(p_);
  SymPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, f.neg(c));
  return r;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
  require_same_modulus(p_, o.p_, "SymPoly::*");
  Fp f(p_);
  SymPoly r(p_, nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Expo e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) {
        unsigned s = (unsigned)ea[i] + eb[i];
        if (s > 255) throw StructureError("SymPoly::*: exponent overflow");
        e[i] = (uint8_t)s;
      }
      r.add_term(e, f.mul(ca, cb));
    }
  return r;
}

SymPoly SymPoly::scaled(uint32_t c) const {
  Fp f(p_);
  c = f.reduce(c);
  SymPoly r(p_, nvars_);
  if (c == 0) return r;
  for (const auto& [e, co] : terms_) r.terms_[e] = f.mul(co, c);
  return r;
}

std::string SymPoly::leading_monomial_str(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  const auto& [e, c] = *terms_.begin();
  std::string s = std::to_string(c);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    s += "*" + (i < var_names.size() ? var_names[i] : "v" + std::to_string(i));
    if (e[i] > 1) s += "^" + std::to_string((int)e[i]);
  }
  return s;
}

uint32_t SymPoly::eval(const std::vector<uint32_t>& point, const Fp& f) const {
  if (point.size() != nvars_) throw StructureError("SymPoly::eval: point arity mismatch");
  uint32_t total = 0;
  for (const auto& [e, c] : terms_) {
    uint32_t t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i]) t = f.mul(t, f.pow(point[i], e[i]));
    total = f.add(total, t);
  }
  return total;
}

SymVec sym_zero_vec(uint32_t p, std::size_t nvars, std::size_t dim) {
  return SymVec(dim, SymPoly(p, nvars));
}

SymVec sym_add(const SymVec& a, const SymVec& b) {
  SymVec r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

SymVec sym_sub(const SymVec& a, const SymVec& b) {
  SymVec r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
  return r;
}

SymVec sym_scale_poly(const SymVec& a, const SymPoly& c) {
  SymVec r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(x * c);
  return r;
}

bool sym_is_zero(const SymVec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

SymVec sym_generic_element(uint32_t p, std::size_t nvars, std::size_t dim, std::size_t offset) {
  SymVec v;
  v.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) v.push_back(SymPoly::variable(p, nvars, offset + i));
  return v;
}

}  // namespace adnil
