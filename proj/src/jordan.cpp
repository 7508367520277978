#include "adnil/jordan.hpp"

#include <algorithm>
#include <bit>

#include "adnil/polymap.hpp"

namespace adnil {

QuadraticJordanAlgebra::QuadraticJordanAlgebra(uint32_t p, std::size_t dim)
    : p_(p), dim_(dim), names_(dim), sq_(dim, FpVec(dim, 0)),
      circ_(dim, std::vector<FpVec>(dim, FpVec(dim, 0))),
      Qb_(dim, FpMatrix(p, dim, dim)),
      Qpol_(dim, std::vector<FpMatrix>(dim, FpMatrix(p, dim, dim))) {
  for (std::size_t i = 0; i < dim; ++i) names_[i] = "j" + std::to_string(i + 1);
}

void QuadraticJordanAlgebra::set_circle(std::size_t i, std::size_t j, const FpVec& v) {
  circ_[i][j] = v;
  circ_[j][i] = v;
}

void QuadraticJordanAlgebra::set_Qpol(std::size_t i, std::size_t j, const FpMatrix& m) {
  Qpol_[i][j] = m;
  Qpol_[j][i] = m;
}

FpVec QuadraticJordanAlgebra::basis_vec(std::size_t i) const {
  FpVec v = zero();
  v[i] = 1;
  return v;
}

FpVec QuadraticJordanAlgebra::square(const FpVec& x) const {
  Fp f(p_);
  FpVec r = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!x[i]) continue;
    r = vec_add(r, vec_scale(sq_[i], f.mul(x[i], x[i]), f), f);
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (x[j]) r = vec_add(r, vec_scale(circ_[i][j], f.mul(x[i], x[j]), f), f);
  }
  return r;
}

FpVec QuadraticJordanAlgebra::circle(const FpVec& x, const FpVec& y) const {
  Fp f(p_);
  FpVec r = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!y[j]) continue;
      uint32_t c = f.mul(x[i], y[j]);
      // b_i o b_i = 2 b_i^2
      const FpVec& t = i == j ? sq_[i] : circ_[i][j];
      uint32_t factor = i == j ? f.mul(2 % p_, c) : c;
      if (factor) r = vec_add(r, vec_scale(t, factor, f), f);
    }
  }
  return r;
}

FpMatrix QuadraticJordanAlgebra::Qop(const FpVec& x) const {
  Fp f(p_);
  FpMatrix m(p_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!x[i]) continue;
    m = m + Qb_[i].scaled(f.mul(x[i], x[i]));
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (x[j]) m = m + Qpol_[i][j].scaled(f.mul(x[i], x[j]));
  }
  return m;
}

FpMatrix QuadraticJordanAlgebra::Qpol_op(const FpVec& x, const FpVec& z) const {
  return Qop(vec_add(x, z, Fp(p_))) - Qop(x) - Qop(z);
}

FpVec QuadraticJordanAlgebra::apply_Q(const FpVec& y, const FpVec& x) const {
  return apply(y, Qop(x), Fp(p_));
}

FpVec QuadraticJordanAlgebra::triple(const FpVec& x, const FpVec& y, const FpVec& z) const {
  return apply(y, Qpol_op(x, z), Fp(p_));
}

QuadraticJordanAlgebra QuadraticJordanAlgebra::from_maps(
    uint32_t p, std::size_t dim, const std::function<FpVec(const FpVec&)>& square,
    const std::function<FpMatrix(const FpVec&)>& Q) {
  QuadraticJordanAlgebra J(p, dim);
  Fp f(p);
  for (std::size_t i = 0; i < dim; ++i) {
    J.sq_[i] = square(J.basis_vec(i));
    J.Qb_[i] = Q(J.basis_vec(i));
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      FpVec s = vec_add(J.basis_vec(i), J.basis_vec(j), f);
      J.set_circle(i, j, vec_sub(vec_sub(square(s), J.sq_[i], f), J.sq_[j], f));
      J.set_Qpol(i, j, Q(s) - J.Qb_[i] - J.Qb_[j]);
    }
  // quadraticity spot-check: the stored data must reproduce the black box
  uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next = [&state] {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int round = 0; round < 6; ++round) {
    FpVec x(dim);
    for (auto& c : x) c = (uint32_t)(next() % p);
    if (J.square(x) != square(x) || !(J.Qop(x) == Q(x)))
      throw StructureError("QuadraticJordanAlgebra::from_maps: maps are not quadratic");
  }
  return J;
}

QuadraticJordanAlgebra::SymMat QuadraticJordanAlgebra::Qop_sym(const SymVec& x) const {
  std::size_t nv = x[0].nvars();
  SymMat m(dim_, sym_zero_vec(p_, nv, dim_));
  auto accumulate = [&](const SymPoly& coeff, const FpMatrix& block) {
    if (coeff.is_zero()) return;
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c)
        if (block.at(r, c)) m[r][c] = m[r][c] + coeff.scaled(block.at(r, c));
  };
  for (std::size_t i = 0; i < dim_; ++i) {
    accumulate(x[i] * x[i], Qb_[i]);
    for (std::size_t j = i + 1; j < dim_; ++j) accumulate(x[i] * x[j], Qpol_[i][j]);
  }
  return m;
}

SymVec QuadraticJordanAlgebra::square_sym(const SymVec& x) const {
  std::size_t nv = x[0].nvars();
  SymVec r = sym_zero_vec(p_, nv, dim_);
  auto accumulate = [&](const SymPoly& coeff, const FpVec& v) {
    if (coeff.is_zero()) return;
    for (std::size_t k = 0; k < dim_; ++k)
      if (v[k]) r[k] = r[k] + coeff.scaled(v[k]);
  };
  for (std::size_t i = 0; i < dim_; ++i) {
    accumulate(x[i] * x[i], sq_[i]);
    for (std::size_t j = i + 1; j < dim_; ++j) accumulate(x[i] * x[j], circ_[i][j]);
  }
  return r;
}

SymVec QuadraticJordanAlgebra::circle_sym(const SymVec& x, const SymVec& y) const {
  std::size_t nv = x[0].nvars();
  SymVec r = sym_zero_vec(p_, nv, dim_);
  Fp f(p_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      SymPoly c = x[i] * y[j];
      if (c.is_zero()) continue;
      const FpVec& t = i == j ? sq_[i] : circ_[i][j];
      uint32_t factor = i == j ? 2 % p_ : 1;
      if (!factor) continue;
      for (std::size_t k = 0; k < dim_; ++k)
        if (t[k]) r[k] = r[k] + c.scaled(f.mul(factor, t[k]));
    }
  return r;
}

SymVec QuadraticJordanAlgebra::apply_sym(const SymVec& y, const SymMat& m) const {
  std::size_t nv = y[0].nvars();
  SymVec r = sym_zero_vec(p_, nv, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (y[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) r[j] = r[j] + y[i] * m[i][j];
  }
  return r;
}

namespace {

QuadraticJordanAlgebra::SymMat sym_mat_mul(const QuadraticJordanAlgebra::SymMat& a,
                                           const QuadraticJordanAlgebra::SymMat& b, uint32_t p,
                                           std::size_t nv) {
  std::size_t n = a.size();
  QuadraticJordanAlgebra::SymMat r(n, sym_zero_vec(p, nv, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
    }
  return r;
}

QuadraticJordanAlgebra::SymMat sym_mat_sub(const QuadraticJordanAlgebra::SymMat& a,
                                           const QuadraticJordanAlgebra::SymMat& b) {
  QuadraticJordanAlgebra::SymMat r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r[i][j] = a[i][j] - b[i][j];
  return r;
}

std::string concrete_witness(const QuadraticJordanAlgebra& J, const std::string& axiom,
                             const SymPoly& defect_coord) {
  // plug 1 into the variables appearing in the defect's leading monomial and
  // keep the point only if the defect is actually nonzero there
  const auto& [expo, coeff] = *defect_coord.terms().begin();
  (void)coeff;
  std::size_t d = J.dim();
  Fp f(J.modulus());
  std::vector<uint32_t> point(expo.size(), 0);
  FpVec x(d, 0), y(d, 0), z(d, 0);
  for (std::size_t v = 0; v < expo.size(); ++v) {
    if (!expo[v]) continue;
    point[v] = 1;
    if (v < d)
      x[v] = 1;
    else if (v < 2 * d)
      y[v - d] = 1;
    else
      z[v - 2 * d] = 1;
  }
  if (defect_coord.eval(point, f) == 0)
    return axiom + ": formal defect only (the 0/1 point of the leading monomial cancels)";
  auto vec_str = [&](const FpVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
  };
  return axiom + " at x=" + vec_str(x) + " y=" + vec_str(y) + " z=" + vec_str(z);
}

}  // namespace

JordanReport verify_quadratic_jordan(const QuadraticJordanAlgebra& J) {
  std::size_t d = J.dim();
  uint32_t p = J.modulus();
  JordanReport rep;
  if (d == 0) return rep;
  std::size_t nv = 3 * d;
  SymVec gx = sym_generic_element(p, nv, d, 0);
  SymVec gy = sym_generic_element(p, nv, d, d);
  SymVec gz = sym_generic_element(p, nv, d, 2 * d);

  auto Qx = J.Qop_sym(gx);
  auto Qy = J.Qop_sym(gy);
  auto Qxy = sym_mat_sub(sym_mat_sub(J.Qop_sym(sym_add(gx, gy)), Qx), Qy);
  SymVec x2 = J.square_sym(gx);

  std::vector<std::pair<std::string, SymVec>> defects;
  // (M1) {x,x,y} = x^2 o y with {x,x,y} = x (Q(x+y) - Q(x) - Q(y))
  defects.emplace_back("M1", sym_sub(J.apply_sym(gx, Qxy), J.circle_sym(x2, gy)));
  // (M2) (y Q(x)) o x = (y o x) Q(x)
  SymVec yQx = J.apply_sym(gy, Qx);
  defects.emplace_back("M2",
                       sym_sub(J.circle_sym(yQx, gx), J.apply_sym(J.circle_sym(gy, gx), Qx)));
  // (M3) x^2 Q(x) = (x^2)^2
  defects.emplace_back("M3", sym_sub(J.apply_sym(x2, Qx), J.square_sym(x2)));
  // (M4) x^2 Q(y) Q(x) = (y Q(x))^2
  defects.emplace_back(
      "M4", sym_sub(J.apply_sym(J.apply_sym(x2, Qy), Qx), J.square_sym(yQx)));
  // (M5) y Q(x^2) = y Q(x) Q(x)
  defects.emplace_back("M5",
                       sym_sub(J.apply_sym(gy, J.Qop_sym(x2)), J.apply_sym(yQx, Qx)));
  // (M6) z Q(y Q(x)) = z Q(x) Q(y) Q(x)
  auto QyQx = J.Qop_sym(yQx);
  auto rhs6 = sym_mat_mul(sym_mat_mul(Qx, Qy, p, nv), Qx, p, nv);
  defects.emplace_back("M6", sym_sub(J.apply_sym(gz, QyQx), J.apply_sym(gz, rhs6)));

  for (auto& [axiom, defect] : defects) {
    for (std::size_t k = 0; k < d; ++k) {
      if (defect[k].is_zero()) continue;
      std::vector<std::string> vn;
      for (std::size_t i = 0; i < d; ++i) vn.push_back("X" + std::to_string(i + 1));
      for (std::size_t i = 0; i < d; ++i) vn.push_back("Y" + std::to_string(i + 1));
      for (std::size_t i = 0; i < d; ++i) vn.push_back("Z" + std::to_string(i + 1));
      rep.ok = false;
      rep.failures.push_back({axiom, defect[k].leading_monomial_str(vn) + " in coordinate " +
                                         J.name(k),
                              concrete_witness(J, axiom, defect[k])});
      break;  // one witness per axiom
    }
  }
  return rep;
}

QuadraticJordanAlgebra plus_algebra(const AssocAlgebra& A) {
  auto square = [&A](const FpVec& x) { return A.mul(x, x); };
  auto Q = [&A](const FpVec& x) {
    FpMatrix m(A.modulus(), A.dim(), A.dim());
    for (std::size_t i = 0; i < A.dim(); ++i)
      m.set_row(i, A.mul(A.mul(x, A.basis_vec(i)), x));
    return m;
  };
  QuadraticJordanAlgebra J = QuadraticJordanAlgebra::from_maps(A.modulus(), A.dim(), square, Q);
  for (std::size_t i = 0; i < A.dim(); ++i) J.set_name(i, A.name(i));
  return J;
}

QuadraticJordanAlgebra hermitian_algebra(const AssocAlgebra& A, const Involution& inv) {
  auto err = involution_check(A, inv);
  if (err) throw HypothesisError("hermitian_algebra: " + *err);
  uint32_t p = A.modulus();
  Fp f(p);
  // fixed space: kernel of (inv - id)
  FpMatrix fix = inv.mat - FpMatrix::identity(p, A.dim());
  Subspace H = kernel(fix);
  std::size_t hd = H.dim();
  auto to_A = [&](const FpVec& hv) {
    FpVec v(A.dim(), 0);
    for (std::size_t i = 0; i < hd; ++i)
      if (hv[i]) v = vec_add(v, vec_scale(H.basis()[i], hv[i], f), f);
    return v;
  };
  auto to_H = [&](const FpVec& av) {
    auto c = H.coordinates(av);
    if (!c) throw StructureError("hermitian_algebra: product leaves the hermitian subspace");
    return *c;
  };
  auto square = [&](const FpVec& x) { return to_H(A.mul(to_A(x), to_A(x))); };
  auto Q = [&](const FpVec& x) {
    FpMatrix m(p, hd, hd);
    FpVec xa = to_A(x);
    for (std::size_t i = 0; i < hd; ++i) {
      FpVec bi(hd, 0);
      bi[i] = 1;
      m.set_row(i, to_H(A.mul(A.mul(xa, to_A(bi)), xa)));
    }
    return m;
  };
  QuadraticJordanAlgebra J = QuadraticJordanAlgebra::from_maps(p, hd, square, Q);
  for (std::size_t i = 0; i < hd; ++i) J.set_name(i, "h" + std::to_string(i + 1));
  return J;
}

QuadraticJordanAlgebra quadratic_form_algebra(uint32_t p, std::size_t dim, const FpVec& qdiag,
                                              const std::vector<FpVec>& qpol,
                                              const FpVec& basepoint) {
  Fp f(p);
  auto q = [&](const FpVec& v) {
    uint32_t total = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      if (!v[i]) continue;
      total = f.add(total, f.mul(f.mul(v[i], v[i]), qdiag[i]));
      for (std::size_t j = i + 1; j < dim; ++j)
        if (v[j]) total = f.add(total, f.mul(f.mul(v[i], v[j]), qpol[i][j]));
    }
    return total;
  };
  auto qbil = [&](const FpVec& v, const FpVec& w) {
    return f.sub(f.sub(q(vec_add(v, w, f)), q(v)), q(w));
  };
  if (q(basepoint) != 1 % p)
    throw HypothesisError("quadratic_form_algebra: q(basepoint) != 1");
  auto square = [&, q, qbil](const FpVec& v) {
    return vec_sub(vec_scale(v, qbil(v, basepoint), f), vec_scale(basepoint, q(v), f), f);
  };
  auto Q = [&, q, qbil](const FpVec& v) {
    FpMatrix m(p, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      FpVec w(dim, 0);
      w[i] = 1;
      FpVec wbar = vec_sub(vec_scale(basepoint, qbil(w, basepoint), f), w, f);
      m.set_row(i, vec_sub(vec_scale(v, qbil(v, wbar), f), vec_scale(wbar, q(v), f), f));
    }
    return m;
  };
  return QuadraticJordanAlgebra::from_maps(p, dim, square, Q);
}

FpVec jordan_power(const QuadraticJordanAlgebra& J, const FpVec& x, int n) {
  if (n < 1) throw StructureError("jordan_power: exponent must be >= 1");
  if (n == 1) return x;
  if (n % 2 == 0) return J.square(jordan_power(J, x, n / 2));
  return J.apply_Q(x, jordan_power(J, x, n / 2));
}

bool power_identities_ok(const QuadraticJordanAlgebra& J, const FpVec& x, int bound) {
  Fp f(J.modulus());
  for (int i = 1; i <= bound; ++i)
    for (int j = 1; i + 2 * j <= bound; ++j) {
      FpVec lhs = J.apply_Q(jordan_power(J, x, i), jordan_power(J, x, j));
      if (lhs != jordan_power(J, x, i + 2 * j)) return false;
    }
  for (int i = 1; i <= bound; ++i)
    for (int j = 1; i + j <= bound; ++j) {
      FpVec lhs = J.circle(jordan_power(J, x, i), jordan_power(J, x, j));
      FpVec rhs = vec_scale(jordan_power(J, x, i + j), 2 % J.modulus(), f);
      if (lhs != rhs) return false;
    }
  return true;
}

QuadraticJordanAlgebra homotope(const QuadraticJordanAlgebra& J, const FpVec& a) {
  FpMatrix Qa = J.Qop(a);
  auto square = [&J, a](const FpVec& x) { return J.apply_Q(a, x); };
  auto Q = [&J, Qa](const FpVec& x) { return Qa * J.Qop(x); };
  QuadraticJordanAlgebra H = QuadraticJordanAlgebra::from_maps(J.modulus(), J.dim(), square, Q);
  for (std::size_t i = 0; i < J.dim(); ++i) H.set_name(i, J.name(i));
  return H;
}

bool azd_check(const QuadraticJordanAlgebra& J, const FpVec& a) { return J.Qop(a).is_zero(); }

bool power_map_vanishes_strictly(const QuadraticJordanAlgebra& J, int n) {
  std::size_t d = J.dim();
  if (d == 0) return true;
  SymVec gx = sym_generic_element(J.modulus(), d, d, 0);
  // symbolic power recursion
  std::function<SymVec(int)> pw = [&](int m) -> SymVec {
    if (m == 1) return gx;
    if (m % 2 == 0) return J.square_sym(pw(m / 2));
    return J.apply_sym(gx, J.Qop_sym(pw(m / 2)));
  };
  return sym_is_zero(pw(n));
}

AzdPowersResult azd_powers(const QuadraticJordanAlgebra& J, const FpVec& x, int n) {
  if (n < 2) throw StructureError("azd_powers: n must be >= 2");
  if (!vec_is_zero(jordan_power(J, x, n)))
    throw HypothesisError("azd_powers: x^n != 0 for the given element");
  AzdPowersResult res;
  for (int i = n + 1; i <= 2 * n - 1; ++i) {
    FpVec v = jordan_power(J, x, i);
    if (!azd_check(J, v))
      throw HypothesisError("azd_powers: x^" + std::to_string(i) + " is not an azd");
    res.high_powers.emplace_back(i, v);
  }
  res.strong_hypothesis = true;
  for (int m = n; m <= 2 * n - 1; ++m)
    if (!power_map_vanishes_strictly(J, m)) res.strong_hypothesis = false;
  if (res.strong_hypothesis) {
    FpVec v = jordan_power(J, x, n - 1);
    if (!azd_check(J, v))
      throw HypothesisError("azd_powers: x^{n-1} is not an azd despite the strong hypothesis");
    res.low_power = v;
  }
  return res;
}

FpVec azd_pushforward(const QuadraticJordanAlgebra& J, const FpVec& a, const FpVec& b) {
  FpMatrix Qa = J.Qop(a);
  if (!(Qa * J.Qop(b) * Qa).is_zero())
    throw HypothesisError(
        "azd_pushforward: b + K_a is not an azd of the homotope modulo K_a (Q(a)Q(b)Q(a) != 0)");
  FpVec c = apply(b, Qa, Fp(J.modulus()));
  if (!azd_check(J, c)) throw HypothesisError("azd_pushforward: b Q(a) is not an azd");
  return c;
}

std::optional<SymWitness> sym_identity(const QuadraticJordanAlgebra& J, int n) {
  if (n < 1) throw StructureError("sym_identity: n must be >= 1");
  std::size_t d = J.dim();
  if (d == 0) return std::nullopt;
  Fp f(J.modulus());
  BudgetCounter budget("sym_identity");
  // multisets of basis indices, nondecreasing (Sym_n is symmetric)
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    budget.tick(1ull << n);
    // inclusion-exclusion over nonempty subsets of the n slots
    FpVec acc = J.zero();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      FpVec s = J.zero();
      for (int t = 0; t < n; ++t)
        if (mask & (1u << t)) s = vec_add(s, J.basis_vec(idx[t]), f);
      FpVec v = jordan_power(J, s, n);
      if ((n - std::popcount(mask)) % 2 == 1) v = vec_scale(v, f.neg(1), f);
      acc = vec_add(acc, v, f);
    }
    if (!vec_is_zero(acc)) return SymWitness{idx, acc};
    int t = n - 1;
    for (; t >= 0; --t) {
      if (idx[t] + 1 < d) {
        ++idx[t];
        for (int u = t + 1; u < n; ++u) idx[u] = idx[t];
        break;
      }
    }
    if (t < 0) break;
  }
  return std::nullopt;
}

bool sym_bound_check(const QuadraticJordanAlgebra& J) {
  int n = (int)J.dim() * ((int)J.modulus() - 1) + 1;
  return !sym_identity(J, n).has_value();
}

LinearJordanAlgebra::LinearJordanAlgebra(uint32_t p, std::size_t dim)
    : p_(p), dim_(dim), table_(dim, std::vector<FpVec>(dim, FpVec(dim, 0))) {}

void LinearJordanAlgebra::set_product(std::size_t i, std::size_t j, const FpVec& v) {
  table_[i][j] = v;
}

FpVec LinearJordanAlgebra::basis_vec(std::size_t i) const {
  FpVec v(dim_, 0);
  v[i] = 1;
  return v;
}

FpVec LinearJordanAlgebra::circle(const FpVec& x, const FpVec& y) const {
  Fp f(p_);
  FpVec r(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!y[j]) continue;
      uint32_t c = f.mul(x[i], y[j]);
      for (std::size_t k = 0; k < dim_; ++k)
        if (table_[i][j][k]) r[k] = f.add(r[k], f.mul(c, table_[i][j][k]));
    }
  }
  return r;
}

bool LinearJordanAlgebra::j1_ok() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (table_[i][j] != table_[j][i]) return false;
  return true;
}

bool LinearJordanAlgebra::j2_ok() const {
  if (dim_ == 0) return true;
  std::size_t nv = 2 * dim_;
  SymVec gx = sym_generic_element(p_, nv, dim_, 0);
  SymVec gy = sym_generic_element(p_, nv, dim_, dim_);
  auto circ_sym = [&](const SymVec& x, const SymVec& y) {
    SymVec r = sym_zero_vec(p_, nv, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j].is_zero()) continue;
        SymPoly c = x[i] * y[j];
        for (std::size_t k = 0; k < dim_; ++k)
          if (table_[i][j][k]) r[k] = r[k] + c.scaled(table_[i][j][k]);
      }
    }
    return r;
  };
  SymVec x2 = circ_sym(gx, gx);
  SymVec lhs = circ_sym(circ_sym(x2, gy), gx);
  SymVec rhs = circ_sym(x2, circ_sym(gy, gx));
  return sym_is_zero(sym_sub(lhs, rhs));
}

FggResult fgg_quotient(const LieAlgebra& L, const FpVec& s) {
  uint32_t p = L.modulus();
  if (p < 5) throw HypothesisError("fgg_quotient: requires characteristic >= 5");
  FpMatrix ads = L.ad(s);
  if (!(ads * ads * ads).is_zero()) throw HypothesisError("fgg_quotient: ad(s)^3 != 0");
  Subspace K = kernel(ads * ads);
  auto circ = [&](const FpVec& a, const FpVec& b) {
    return L.bracket(a, L.bracket(s, b));
  };
  bool ideal = true;
  for (const auto& k : K.basis())
    for (std::size_t i = 0; i < L.dim(); ++i) {
      if (!K.contains(circ(k, L.basis_vec(i))) || !K.contains(circ(L.basis_vec(i), k)))
        ideal = false;
    }
  // quotient coordinates: non-pivot columns of the RREF basis of K
  std::vector<std::size_t> kpivots;
  for (const auto& row : K.basis()) {
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c]) {
        kpivots.push_back(c);
        break;
      }
  }
  std::vector<std::size_t> rep_cols;
  for (std::size_t c = 0; c < L.dim(); ++c)
    if (std::find(kpivots.begin(), kpivots.end(), c) == kpivots.end()) rep_cols.push_back(c);
  Fp f(p);
  auto project = [&](FpVec v) {
    for (std::size_t r = 0; r < K.basis().size(); ++r) {
      uint32_t c = v[kpivots[r]];
      if (c) v = vec_sub(v, vec_scale(K.basis()[r], c, f), f);
    }
    FpVec out(rep_cols.size(), 0);
    for (std::size_t i = 0; i < rep_cols.size(); ++i) out[i] = v[rep_cols[i]];
    return out;
  };
  LinearJordanAlgebra J(p, rep_cols.size());
  for (std::size_t i = 0; i < rep_cols.size(); ++i)
    for (std::size_t j = 0; j < rep_cols.size(); ++j)
      J.set_product(i, j, project(circ(L.basis_vec(rep_cols[i]), L.basis_vec(rep_cols[j]))));
  FggResult res{K, ideal, J, J.j1_ok(), J.j2_ok()};
  return res;
}

}  // namespace adnil
