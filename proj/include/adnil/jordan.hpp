#ifndef ADNIL_JORDAN_HPP
#define ADNIL_JORDAN_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adnil/assoc.hpp"
#include "adnil/lie.hpp"
#include "adnil/sympoly.hpp"

namespace adnil {

// Quadratic Jordan algebra after McCrimmon: a space with a squaring map and
// an operator-valued quadratic map Q, stored via basis values and
// polarizations (no division by 2 anywhere, so char 2 and 3 are fine).
class QuadraticJordanAlgebra {
 public:
  QuadraticJordanAlgebra(uint32_t p, std::size_t dim);

  // Samples a black-box square map and Q map on basis elements and pairs.
  // Both callables must be genuinely quadratic; spot-checked.
  static QuadraticJordanAlgebra from_maps(
      uint32_t p, std::size_t dim, const std::function<FpVec(const FpVec&)>& square,
      const std::function<FpMatrix(const FpVec&)>& Q);

  uint32_t modulus() const { return p_; }
  std::size_t dim() const { return dim_; }
  void set_name(std::size_t i, const std::string& n) { names_[i] = n; }
  const std::string& name(std::size_t i) const { return names_[i]; }

  void set_square(std::size_t i, const FpVec& v) { sq_[i] = v; }
  void set_circle(std::size_t i, std::size_t j, const FpVec& v);
  void set_Q(std::size_t i, const FpMatrix& m) { Qb_[i] = m; }
  void set_Qpol(std::size_t i, std::size_t j, const FpMatrix& m);
  const FpMatrix& Q_basis(std::size_t i) const { return Qb_[i]; }

  FpVec zero() const { return FpVec(dim_, 0); }
  FpVec basis_vec(std::size_t i) const;

  FpVec square(const FpVec& x) const;
  FpVec circle(const FpVec& x, const FpVec& y) const;
  FpMatrix Qop(const FpVec& x) const;
  FpMatrix Qpol_op(const FpVec& x, const FpVec& z) const;
  FpVec apply_Q(const FpVec& y, const FpVec& x) const;  // y Q(x)
  FpVec triple(const FpVec& x, const FpVec& y, const FpVec& z) const;  // {x,y,z}

  // symbolic counterparts on polynomial coordinates
  using SymMat = std::vector<SymVec>;  // rows
  SymVec square_sym(const SymVec& x) const;
  SymVec circle_sym(const SymVec& x, const SymVec& y) const;
  SymMat Qop_sym(const SymVec& x) const;
  SymVec apply_sym(const SymVec& y, const SymMat& m) const;

 private:
  uint32_t p_;
  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<FpVec> sq_;
  std::vector<std::vector<FpVec>> circ_;    // full symmetric, diagonal unused
  std::vector<FpMatrix> Qb_;
  std::vector<std::vector<FpMatrix>> Qpol_; // full symmetric, diagonal unused
};

struct AxiomFailure {
  std::string axiom;     // "M1".."M6"
  std::string monomial;  // leading nonzero monomial of the defect polynomial
  std::string concrete;  // concrete witness point, when one was found
};

struct JordanReport {
  bool ok = true;
  std::vector<AxiomFailure> failures;
};

// Checks (M1)-(M6) strictly: each axiom is expanded as an exact polynomial
// in formal coordinates over F_p and must vanish identically. Strict
// vanishing is equivalent to the axiom together with all of its partial
// linearizations holding in every scalar extension, the right reading of
// "strict" identities over small finite fields.
JordanReport verify_quadratic_jordan(const QuadraticJordanAlgebra& J);

// models
QuadraticJordanAlgebra plus_algebra(const AssocAlgebra& A);
QuadraticJordanAlgebra hermitian_algebra(const AssocAlgebra& A, const Involution& inv);
// q given by values on the basis and off-diagonal polarizations
QuadraticJordanAlgebra quadratic_form_algebra(uint32_t p, std::size_t dim, const FpVec& qdiag,
                                              const std::vector<FpVec>& qpol,
                                              const FpVec& basepoint);

FpVec jordan_power(const QuadraticJordanAlgebra& J, const FpVec& x, int n);

// x^i Q(x^j) = x^{i+2j} and x^i o x^j = 2 x^{i+j} for i, j >= 1 up to the
// bound on the total exponent.
bool power_identities_ok(const QuadraticJordanAlgebra& J, const FpVec& x, int bound = 8);

// J^(a): x^{*2} = a Q(x), Q*(x) = Q(a) Q(x)
QuadraticJordanAlgebra homotope(const QuadraticJordanAlgebra& J, const FpVec& a);

bool azd_check(const QuadraticJordanAlgebra& J, const FpVec& a);  // Q(a) = 0

// Strict vanishing of the n-th power map (its coordinate polynomial on a
// generic element is identically zero).
bool power_map_vanishes_strictly(const QuadraticJordanAlgebra& J, int n);

struct AzdPowersResult {
  std::vector<std::pair<int, FpVec>> high_powers;  // (exponent, value), each azd
  bool strong_hypothesis = false;                  // x^n..x^{2n-1} = 0 identically
  std::optional<FpVec> low_power;                  // x^{n-1}, azd under the strong hypothesis
};

// Nil-power absolute-zero-divisor checks for one element: requires x^n = 0; returns
// x^{n+1}..x^{2n-1} verified absolute zero divisors, and x^{n-1} when the
// identical-vanishing hypothesis holds.
AzdPowersResult azd_powers(const QuadraticJordanAlgebra& J, const FpVec& x, int n);

// Homotope pushforward: hypothesis Q(a) Q(b) Q(a) = 0 (b is an absolute zero divisor of
// the homotope modulo K'_a = ker Q(a), checked on representatives); returns
// b Q(a), verified an absolute zero divisor.
FpVec azd_pushforward(const QuadraticJordanAlgebra& J, const FpVec& a, const FpVec& b);

struct SymWitness {
  std::vector<std::size_t> tuple;
  FpVec value;
};

// Sym_n = full linearization of the n-th power map, evaluated on basis
// multisets (Sym_n is symmetric). Returns a witness if some value is
// nonzero.
std::optional<SymWitness> sym_identity(const QuadraticJordanAlgebra& J, int n);

// One-call check of Sym_{d(p-1)+1} = 0 for d = dim(J).
bool sym_bound_check(const QuadraticJordanAlgebra& J);

// Linear Jordan algebra: commutative bilinear product, used for the
// Lie-to-Jordan quotient at p >= 5.
class LinearJordanAlgebra {
 public:
  LinearJordanAlgebra(uint32_t p, std::size_t dim);
  uint32_t modulus() const { return p_; }
  std::size_t dim() const { return dim_; }
  void set_product(std::size_t i, std::size_t j, const FpVec& v);  // symmetric
  FpVec circle(const FpVec& x, const FpVec& y) const;
  FpVec basis_vec(std::size_t i) const;

  // (J1) on basis pairs; (J2) strictly via formal coordinates.
  bool j1_ok() const;
  bool j2_ok() const;

 private:
  uint32_t p_;
  std::size_t dim_;
  std::vector<std::vector<FpVec>> table_;
};

struct FggResult {
  Subspace K;
  bool K_is_ideal = false;
  LinearJordanAlgebra J;
  bool j1_ok = false, j2_ok = false;
};

// a o b = [a, [s, b]] on L, K = ker ad(s)^2; requires p >= 5 and
// ad(s)^3 = 0. Returns the quotient (L, o)/K with its verification.
FggResult fgg_quotient(const LieAlgebra& L, const FpVec& s);

}  // namespace adnil

#endif
