#include "adnil/matrix.hpp"

#include <algorithm>

namespace adnil {

FpMatrix::FpMatrix(uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {
  if (rows > kMaxAmbientDim || cols > kMaxAmbientDim)
    throw StructureError("FpMatrix: dimension exceeds desk-scale cap");
}

FpMatrix FpMatrix::identity(uint32_t p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
  return m;
}

FpVec FpMatrix::row(std::size_t r) const {
  return FpVec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
}

void FpMatrix::set_row(std::size_t r, const FpVec& v) {
  if (v.size() != cols_) throw StructureError("FpMatrix::set_row: size mismatch");
  std::copy(v.begin(), v.end(), a_.begin() + r * cols_);
}

bool FpMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](uint32_t x) { return x == 0; });
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  require_same_modulus(p_, o.p_, "FpMatrix::+");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw StructureError("FpMatrix::+: shape mismatch");
  Fp f(p_);
  FpMatrix r(p_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f.add(a_[i], o.a_[i]);
  return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  require_same_modulus(p_, o.p_, "FpMatrix::-");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw StructureError("FpMatrix::-: shape mismatch");
  Fp f(p_);
  FpMatrix r(p_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f.sub(a_[i], o.a_[i]);
  return r;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  require_same_modulus(p_, o.p_, "FpMatrix::*");
  if (cols_ != o.rows_) throw StructureError("FpMatrix::*: shape mismatch");
  FpMatrix r(p_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      uint64_t aik = at(i, k);
      if (!aik) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        uint64_t v = r.a_[i * o.cols_ + j] + aik * o.at(k, j) % p_;
        r.a_[i * o.cols_ + j] = (uint32_t)(v >= p_ ? v - p_ : v);
      }
    }
  }
  return r;
}

FpMatrix FpMatrix::scaled(uint32_t c) const {
  Fp f(p_);
  FpMatrix r(p_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f.mul(a_[i], c);
  return r;
}

FpMatrix FpMatrix::pow(uint64_t e) const {
  if (!is_square()) throw StructureError("FpMatrix::pow: non-square matrix");
  FpMatrix r = identity(p_, rows_), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

FpVec apply(const FpVec& v, const FpMatrix& m, const Fp& f) {
  if (v.size() != m.rows()) throw StructureError("apply: shape mismatch");
  FpVec out(m.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[j] = f.add(out[j], f.mul(v[i], m.at(i, j)));
  }
  return out;
}

FpVec vec_add(const FpVec& a, const FpVec& b, const Fp& f) {
  if (a.size() != b.size()) throw StructureError("vec_add: size mismatch");
  FpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

FpVec vec_sub(const FpVec& a, const FpVec& b, const Fp& f) {
  if (a.size() != b.size()) throw StructureError("vec_sub: size mismatch");
  FpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

FpVec vec_scale(const FpVec& a, uint32_t c, const Fp& f) {
  FpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
  return r;
}

bool vec_is_zero(const FpVec& a) {
  return std::all_of(a.begin(), a.end(), [](uint32_t x) { return x == 0; });
}

FpVec vec_canonical_scalar(const FpVec& a, const Fp& f) {
  for (uint32_t x : a)
    if (x != 0) return vec_scale(a, f.inv(x), f);
  return a;
}

namespace {

// In-place row reduction to RREF; returns pivot columns.
std::vector<std::size_t> rref(std::vector<FpVec>& rows, uint32_t p) {
  Fp f(p);
  std::vector<std::size_t> pivots;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    uint32_t iv = f.inv(rows[r][c]);
    for (std::size_t j = c; j < cols; ++j) rows[r][j] = f.mul(rows[r][j], iv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      uint32_t factor = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

Subspace::Subspace(uint32_t p, std::size_t ambient) : p_(p), ambient_(ambient) {
  if (ambient > kMaxAmbientDim) throw StructureError("Subspace: ambient dimension exceeds cap");
}

Subspace Subspace::span(uint32_t p, std::size_t ambient, const std::vector<FpVec>& vectors) {
  Subspace s(p, ambient);
  std::vector<FpVec> rows;
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw StructureError("Subspace::span: vector length mismatch");
    rows.push_back(v);
  }
  s.pivots_ = rref(rows, p);
  s.basis_ = std::move(rows);
  return s;
}

Subspace Subspace::full(uint32_t p, std::size_t ambient) {
  std::vector<FpVec> rows;
  for (std::size_t i = 0; i < ambient; ++i) {
    FpVec v(ambient, 0);
    v[i] = 1;
    rows.push_back(v);
  }
  return span(p, ambient, rows);
}

std::optional<FpVec> Subspace::coordinates(const FpVec& v) const {
  if (v.size() != ambient_) throw StructureError("Subspace::coordinates: length mismatch");
  Fp f(p_);
  FpVec rem = v, coords(basis_.size(), 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    uint32_t c = rem[pivots_[i]];
    if (c != 0) {
      coords[i] = c;
      rem = vec_sub(rem, vec_scale(basis_[i], c, f), f);
    }
  }
  if (!vec_is_zero(rem)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const FpVec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

void Subspace::insert(const FpVec& v) {
  if (contains(v)) return;
  std::vector<FpVec> rows = basis_;
  rows.push_back(v);
  pivots_ = rref(rows, p_);
  basis_ = std::move(rows);
}

Subspace Subspace::sum(const Subspace& other) const {
  require_same_modulus(p_, other.p_, "Subspace::sum");
  if (ambient_ != other.ambient_) throw StructureError("Subspace::sum: ambient mismatch");
  std::vector<FpVec> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return span(p_, ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  require_same_modulus(p_, other.p_, "Subspace::intersect");
  if (ambient_ != other.ambient_) throw StructureError("Subspace::intersect: ambient mismatch");
  // Zassenhaus-style: left kernel of [A; B] stacked gives u A + w B = 0, so
  // u A ranges over the intersection.
  std::size_t ka = basis_.size(), kb = other.basis_.size();
  if (ka == 0 || kb == 0) return Subspace(p_, ambient_);
  FpMatrix stacked(p_, ka + kb, ambient_);
  for (std::size_t i = 0; i < ka; ++i) stacked.set_row(i, basis_[i]);
  for (std::size_t i = 0; i < kb; ++i) stacked.set_row(ka + i, other.basis_[i]);
  Subspace ker = kernel(stacked);
  Fp f(p_);
  std::vector<FpVec> gens;
  for (const auto& z : ker.basis()) {
    FpVec u(z.begin(), z.begin() + ka);
    FpVec w(ambient_, 0);
    for (std::size_t i = 0; i < ka; ++i)
      if (u[i]) w = vec_add(w, vec_scale(basis_[i], u[i], f), f);
    gens.push_back(w);
  }
  return span(p_, ambient_, gens);
}

std::size_t rank(const FpMatrix& m) {
  std::vector<FpVec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rref(rows, m.modulus()).size();
}

Subspace kernel(const FpMatrix& m) {
  // Solve v M = 0 for row vectors v of length rows(M): the left null space,
  // i.e. the ordinary null space of M^T. Eliminate on the augmented rows
  // [M | I] and read off the rows whose M-part became zero.
  uint32_t p = m.modulus();
  Fp f(p);
  std::size_t n = m.rows(), c = m.cols();
  std::vector<FpVec> aug(n, FpVec(c + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < c; ++j) aug[i][j] = m.at(i, j);
    aug[i][c + i] = 1;
  }
  // eliminate only over the first c columns
  std::size_t r = 0;
  for (std::size_t col = 0; col < c && r < n; ++col) {
    std::size_t sel = r;
    while (sel < n && aug[sel][col] == 0) ++sel;
    if (sel == n) continue;
    std::swap(aug[r], aug[sel]);
    uint32_t iv = f.inv(aug[r][col]);
    for (std::size_t j = 0; j < c + n; ++j) aug[r][j] = f.mul(aug[r][j], iv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || aug[i][col] == 0) continue;
      uint32_t factor = aug[i][col];
      for (std::size_t j = 0; j < c + n; ++j)
        aug[i][j] = f.sub(aug[i][j], f.mul(factor, aug[r][j]));
    }
    ++r;
  }
  std::vector<FpVec> gens;
  for (std::size_t i = r; i < n; ++i)
    gens.emplace_back(aug[i].begin() + c, aug[i].end());
  return Subspace::span(p, n, gens);
}

std::optional<int> nilpotency_index(const FpMatrix& m, int bound) {
  if (!m.is_square()) throw StructureError("nilpotency_index: non-square matrix");
  if (bound < 1) throw StructureError("nilpotency_index: bound must be >= 1");
  FpMatrix acc = m;
  for (int k = 1; k <= bound; ++k) {
    if (acc.is_zero()) return k;
    if (k < bound) acc = acc * m;
  }
  return std::nullopt;
}

std::optional<FpVec> solve_left(const FpMatrix& m, const FpVec& b) {
  // x M = b  <=>  M^T x^T = b^T; eliminate on rows of [M | e_i] transposed
  // view: treat unknown x (length rows), equations indexed by columns.
  uint32_t p = m.modulus();
  Fp f(p);
  std::size_t n = m.rows(), c = m.cols();
  if (b.size() != c) throw StructureError("solve_left: rhs length mismatch");
  // Build augmented system over unknowns x_0..x_{n-1}: for each col j,
  // sum_i x_i M[i][j] = b[j].
  std::vector<FpVec> eq(c, FpVec(n + 1, 0));
  for (std::size_t j = 0; j < c; ++j) {
    for (std::size_t i = 0; i < n; ++i) eq[j][i] = m.at(i, j);
    eq[j][n] = b[j];
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < n && r < c; ++col) {
    std::size_t sel = r;
    while (sel < c && eq[sel][col] == 0) ++sel;
    if (sel == c) continue;
    std::swap(eq[r], eq[sel]);
    uint32_t iv = f.inv(eq[r][col]);
    for (std::size_t j = 0; j <= n; ++j) eq[r][j] = f.mul(eq[r][j], iv);
    for (std::size_t i = 0; i < c; ++i) {
      if (i == r || eq[i][col] == 0) continue;
      uint32_t factor = eq[i][col];
      for (std::size_t j = 0; j <= n; ++j) eq[i][j] = f.sub(eq[i][j], f.mul(factor, eq[r][j]));
    }
    pivots.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < c; ++i)
    if (eq[i][n] != 0) return std::nullopt;  // inconsistent
  FpVec x(n, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = eq[i][n];
  return x;
}

bool in_matrix_span(const std::vector<FpMatrix>& basis_mats, const FpMatrix& target) {
  if (basis_mats.empty()) return target.is_zero();
  uint32_t p = target.modulus();
  std::size_t fl = target.rows() * target.cols();
  FpMatrix sys(p, basis_mats.size(), fl);
  for (std::size_t k = 0; k < basis_mats.size(); ++k) {
    const FpMatrix& b = basis_mats[k];
    if (b.rows() != target.rows() || b.cols() != target.cols())
      throw StructureError("in_matrix_span: shape mismatch");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) sys.at(k, i * b.cols() + j) = b.at(i, j);
  }
  FpVec t(fl);
  for (std::size_t i = 0; i < target.rows(); ++i)
    for (std::size_t j = 0; j < target.cols(); ++j) t[i * target.cols() + j] = target.at(i, j);
  return solve_left(sys, t).has_value();
}

uint32_t binomial_mod(uint64_t n, uint64_t k, const Fp& f) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::vector<uint32_t> row(k + 1, 0);
  row[0] = 1 % f.modulus();
  for (uint64_t i = 1; i <= n; ++i)
    for (uint64_t j = std::min<uint64_t>(i, k); j >= 1; --j)
      row[j] = f.add(row[j], row[j - 1]);
  return row[k];
}

}  // namespace adnil
