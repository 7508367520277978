#include "adnil/fixtures.hpp"

namespace adnil::fixtures {

LieAlgebra abelian(uint32_t p, std::size_t n) {
  LieAlgebra L(p, n);
  return L;
}

LieAlgebra heisenberg(uint32_t p) {
  LieAlgebra L(p, 3);
  L.set_name(0, "x");
  L.set_name(1, "y");
  L.set_name(2, "z");
  L.add_structure(0, 1, 2, 1);
  L.set_grading({1, 1, 2});
  return L;
}

LieAlgebra sl2(uint32_t p) {
  Fp f(p);
  LieAlgebra L(p, 3);
  L.set_name(0, "e");
  L.set_name(1, "h");
  L.set_name(2, "f");
  L.add_structure(0, 1, 0, f.neg(2 % p));  // [e,h] = -2e
  L.add_structure(0, 2, 1, 1);             // [e,f] = h
  L.add_structure(1, 2, 2, f.neg(2 % p));  // [h,f] = -2f
  return L;
}

LieAlgebra strictly_upper_lie(uint32_t p, std::size_t n) {
  AssocAlgebra A = AssocAlgebra::strictly_upper(p, n);
  Fp f(p);
  std::size_t d = A.dim();
  LieAlgebra L(p, d);
  std::vector<int> grading;
  // basis e_{rc} ordered by (r, c); grade = c - r
  std::size_t k = 0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) {
      L.set_name(k, A.name(k));
      grading.push_back((int)(c - r));
      ++k;
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      FpVec lie = vec_sub(A.mul(A.basis_vec(i), A.basis_vec(j)),
                          A.mul(A.basis_vec(j), A.basis_vec(i)), f);
      for (std::size_t t = 0; t < d; ++t)
        if (lie[t]) L.add_structure(i, j, t, lie[t]);
    }
  L.set_grading(grading);
  return L;
}

namespace {

LieAlgebra chain(uint32_t p, int nc, bool with_top) {
  // basis: u, c_1..c_nc, then v, w (, t)
  std::size_t dim = 1 + nc + 2 + (with_top ? 1 : 0);
  LieAlgebra L(p, dim);
  std::size_t u = 0, v = 1 + nc, w = v + 1, t = w + 1;
  L.set_name(u, "u");
  for (int i = 0; i < nc; ++i) L.set_name(1 + i, "c" + std::to_string(i + 1));
  L.set_name(v, "v");
  L.set_name(w, "w");
  if (with_top) L.set_name(t, "t");
  for (int i = 0; i < nc; ++i) {
    L.add_structure(u, 1 + i, v, 1);  // [u, c_i] = v
    L.add_structure(1 + i, v, w, p - 1);  // [c_i, v] = -w, i.e. [v, c_i] = w
    if (with_top) L.add_structure(1 + i, w, t, p - 1);
  }
  std::vector<int> grading(dim, 1);
  grading[v] = 2;
  grading[w] = 3;
  if (with_top) grading[t] = 4;
  L.set_grading(grading);
  return L;
}

}  // namespace

LieAlgebra chain6(uint32_t p) { return chain(p, 3, false); }
LieAlgebra chain8(uint32_t p) { return chain(p, 4, true); }

std::vector<LieFixture> omega_test_algebras(uint32_t p) {
  std::vector<LieFixture> out;
  {
    LieAlgebra L = heisenberg(p);
    std::vector<std::vector<FpVec>> panels;
    panels.push_back({L.basis_vec(0), L.basis_vec(2)});  // {x, z}
    panels.push_back({L.basis_vec(1), L.basis_vec(2)});  // {y, z}
    out.push_back({"heisenberg", L, panels});
  }
  {
    LieAlgebra L = strictly_upper_lie(p, 4);
    auto at = [&L](const char* n) { return L.basis_vec((std::size_t)L.name_index(n)); };
    std::vector<std::vector<FpVec>> panels;
    panels.push_back({at("e13"), at("e14"), at("e24")});
    panels.push_back({at("e12"), at("e34"), at("e14")});
    panels.push_back({at("e13"), at("e24")});
    out.push_back({"n4", L, panels});
  }
  {
    LieAlgebra L = chain8(p);
    auto at = [&L](const char* n) { return L.basis_vec((std::size_t)L.name_index(n)); };
    std::vector<std::vector<FpVec>> panels;
    panels.push_back({at("c1"), at("c2"), at("c3"), at("c4")});
    panels.push_back({at("v"), at("w"), at("t")});
    panels.push_back({at("w"), at("t")});
    out.push_back({"chain8", L, panels});
  }
  {
    LieAlgebra L = chain6(p);
    auto at = [&L](const char* n) { return L.basis_vec((std::size_t)L.name_index(n)); };
    std::vector<std::vector<FpVec>> panels;
    panels.push_back({at("c1"), at("c2"), at("c3")});
    panels.push_back({at("v"), at("w")});
    out.push_back({"chain6", L, panels});
  }
  {
    LieAlgebra L = abelian(p, 5);
    std::vector<std::vector<FpVec>> panels;
    panels.push_back({L.basis_vec(0), L.basis_vec(1), L.basis_vec(2)});
    out.push_back({"abelian5", L, panels});
  }
  return out;
}

AssocAlgebra nil3_free2(uint32_t p) {
  // basis: a b a2 ab ba b2 a2b aba ab2 bab, with
  // ba2 = -a2b - aba, b2a = -ab2 - bab, a3 = b3 = 0, degree >= 4 = 0
  enum { A = 0, B, A2, AB, BA, B2, A2B, ABA, AB2, BAB };
  AssocAlgebra D(p, 10);
  const char* names[10] = {"a", "b", "a2", "ab", "ba", "b2", "a2b", "aba", "ab2", "bab"};
  for (int i = 0; i < 10; ++i) D.set_name(i, names[i]);
  Fp f(p);
  auto unit = [&](int k) {
    FpVec v(10, 0);
    v[k] = 1;
    return v;
  };
  auto neg2 = [&](int k1, int k2) {
    FpVec v(10, 0);
    v[k1] = f.neg(1);
    v[k2] = f.neg(1);
    return v;
  };
  D.set_product(A, A, unit(A2));
  D.set_product(A, B, unit(AB));
  D.set_product(B, A, unit(BA));
  D.set_product(B, B, unit(B2));
  D.set_product(A, AB, unit(A2B));
  D.set_product(A, BA, unit(ABA));
  D.set_product(A, B2, unit(AB2));
  D.set_product(B, A2, neg2(A2B, ABA));  // ba2 = -a2b - aba
  D.set_product(B, AB, unit(BAB));
  D.set_product(B, BA, neg2(AB2, BAB));  // b2a = -ab2 - bab
  D.set_product(A2, B, unit(A2B));
  D.set_product(AB, A, unit(ABA));
  D.set_product(AB, B, unit(AB2));
  D.set_product(BA, A, neg2(A2B, ABA));
  D.set_product(BA, B, unit(BAB));
  D.set_product(B2, A, neg2(AB2, BAB));
  // a·a2, a2·a, b·b2, b2·b and every product of total degree >= 4 vanish
  return D;
}

FiniteGroup c2_group() { return enumerate_group({{1, 0}}, {"g"}); }

FiniteGroup c4_group() { return enumerate_group({{1, 2, 3, 0}}, {"g"}); }

FiniteGroup d4_group() {
  Perm r{1, 2, 3, 0};  // (1 2 3 4)
  Perm s{2, 1, 0, 3};  // (1 3)
  return enumerate_group({r, s}, {"r", "s"});
}

FiniteGroup q8_group() {
  // degree-8 faithful representation
  Perm x{1, 2, 3, 0, 5, 6, 7, 4};  // (1 2 3 4)(5 6 7 8)
  Perm y{4, 7, 6, 5, 2, 1, 0, 3};  // (1 5 3 7)(2 8 4 6)
  return enumerate_group({x, y}, {"i", "j"});
}

FiniteGroup c3_group() { return enumerate_group({{1, 2, 0}}, {"g"}); }

FiniteGroup c6_group() { return enumerate_group({{1, 2, 3, 4, 5, 0}}, {"g"}); }

FiniteGroup heisenberg27_group() {
  // UT(3,3) acting on itself: points (x,y,z) in F_3^3 with index x+3y+9z,
  // (x,y,z)(x',y',z') = (x+x', y+y', z+z'+x y')
  auto idx = [](int x, int y, int z) { return x + 3 * y + 9 * z; };
  Perm A(27), B(27);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 3; ++z) {
        A[idx(x, y, z)] = idx((x + 1) % 3, y, z);
        B[idx(x, y, z)] = idx(x, (y + 1) % 3, (z + x) % 3);
      }
  return enumerate_group({A, B}, {"a", "b"});
}

}  // namespace adnil::fixtures
