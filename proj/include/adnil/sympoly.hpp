#ifndef ADNIL_SYMPOLY_HPP
#define ADNIL_SYMPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adnil/fp.hpp"

namespace adnil {

// Sparse multivariate polynomial over F_p with a fixed number of formal
// variables. Exponent vectors are the monomial keys; the map ordering makes
// every traversal deterministic. Used for exact "strict identity" checks:
// an identity together with all of its partial linearizations holds in every
// scalar extension iff the coordinate polynomials vanish identically.
class SymPoly {
 public:
  using Expo = std::vector<uint8_t>;

  SymPoly(uint32_t p, std::size_t nvars) : p_(p), nvars_(nvars) {}
  static SymPoly variable(uint32_t p, std::size_t nvars, std::size_t i);
  static SymPoly constant(uint32_t p, std::size_t nvars, uint32_t c);

  uint32_t modulus() const { return p_; }
  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Expo, uint32_t>& terms() const { return terms_; }

  void add_term(const Expo& e, uint32_t c);

  SymPoly operator+(const SymPoly& o) const;
  SymPoly operator-(const SymPoly& o) const;
  SymPoly operator*(const SymPoly& o) const;
  SymPoly scaled(uint32_t c) const;
  bool operator==(const SymPoly& o) const { return p_ == o.p_ && terms_ == o.terms_; }

  // First monomial in map order (used as a deterministic witness).
  std::string leading_monomial_str(const std::vector<std::string>& var_names) const;

  uint32_t eval(const std::vector<uint32_t>& point, const Fp& f) const;

 private:
  uint32_t p_;
  std::size_t nvars_;
  std::map<Expo, uint32_t> terms_;
};

using SymVec = std::vector<SymPoly>;  // vector with polynomial coordinates

SymVec sym_zero_vec(uint32_t p, std::size_t nvars, std::size_t dim);
SymVec sym_add(const SymVec& a, const SymVec& b);
SymVec sym_sub(const SymVec& a, const SymVec& b);
SymVec sym_scale_poly(const SymVec& a, const SymPoly& c);
bool sym_is_zero(const SymVec& a);

// Generic element sum_i X_{offset+i} b_i.
SymVec sym_generic_element(uint32_t p, std::size_t nvars, std::size_t dim, std::size_t offset);

}  // namespace adnil

#endif
