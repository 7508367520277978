#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "adnil/fixtures.hpp"
#include "adnil/hall.hpp"
#include "adnil/lie.hpp"

using namespace adnil;

TEST_CASE("validate: bundled tables") {
  CHECK(fixtures::abelian(5, 2).validate().ok);
  CHECK(fixtures::heisenberg(5).validate().ok);
  CHECK(fixtures::sl2(7).validate().ok);
  CHECK(fixtures::strictly_upper_lie(5, 4).validate().ok);
  CHECK(fixtures::chain6(3).validate().ok);
  CHECK(fixtures::chain8(2).validate().ok);
}

TEST_CASE("validate: anticommutativity witness from a raw table") {
  // corrupted table with c_{12}^3 = 1 and c_{21}^3 = 1
  std::size_t d = 3;
  std::vector<std::vector<FpVec>> raw(d, std::vector<FpVec>(d, FpVec(d, 0)));
  raw[0][1][2] = 1;
  raw[1][0][2] = 1;
  auto rep = validate_raw_table(5, d, raw, {});
  CHECK_FALSE(rep.ok);
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.kind == "anticommutativity" && v.i == 0 && v.j == 1 && v.k == 2) found = true;
  CHECK(found);
}

TEST_CASE("validate: grading violation") {
  LieAlgebra L(5, 3);
  L.add_structure(0, 1, 2, 1);
  L.set_grading({1, 1, 3});  // bracket of degrees 1+1 lands in degree 3
  auto rep = L.validate();
  CHECK_FALSE(rep.ok);
  CHECK(rep.violations[0].kind == "grading");
}

TEST_CASE("bracket: Heisenberg table and alternation") {
  LieAlgebra h = fixtures::heisenberg(5);
  FpVec x = h.basis_vec(0), y = h.basis_vec(1), z = h.basis_vec(2);
  CHECK(h.bracket(x, y) == z);
  CHECK(vec_is_zero(h.bracket(z, x)));  // z is central
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    FpVec a(3);
    for (auto& c : a) c = (uint32_t)(rng() % 5);
    CHECK(vec_is_zero(h.bracket(a, a)));
  }
  // left-normed helper folds left: [x, y, y] = [[x,y],y] = [z,y] = 0
  CHECK(vec_is_zero(h.bracket_chain({x, y, y})));
}

TEST_CASE("ad_nilpotency examples") {
  LieAlgebra h = fixtures::heisenberg(5);
  CHECK(ad_nilpotency(h, h.basis_vec(0), 10) == 2);
  CHECK(ad_nilpotency(h, h.zero(), 10) == 1);
  LieAlgebra s = fixtures::sl2(7);
  CHECK_FALSE(ad_nilpotency(s, s.basis_vec(1), 20).has_value());  // semisimple h
}

TEST_CASE("lie_set examples") {
  LieAlgebra h = fixtures::heisenberg(5);
  auto set = lie_set(h, {h.basis_vec(0), h.basis_vec(1)}, 3);
  CHECK(set.size() == 3);  // x, y, z; all length-3 commutators vanish
  // closure property up to scalar: bracket of any two entries within bound
  Fp f(5);
  for (const auto& e1 : set)
    for (const auto& e2 : set) {
      if (e1.length + e2.length > 3) continue;
      FpVec v = h.bracket(e1.value, e2.value);
      if (vec_is_zero(v)) continue;
      FpVec canon = vec_canonical_scalar(v, f);
      bool present = false;
      for (const auto& e3 : set)
        if (vec_canonical_scalar(e3.value, f) == canon) present = true;
      CHECK(present);
    }
  CHECK(lie_set(h, {h.basis_vec(0)}, 5).size() == 1);  // [x,x] = 0
  LieAlgebra ab = fixtures::abelian(5, 3);
  CHECK(lie_set(ab, {ab.basis_vec(0), ab.basis_vec(2)}, 4).size() == 2);
  CHECK_THROWS_AS(lie_set(h, {}, 2), StructureError);
}

TEST_CASE("lower central series") {
  SeriesResult h = lower_central_series(fixtures::heisenberg(5));
  CHECK(h.dims == std::vector<std::size_t>{3, 1, 0});
  CHECK(h.nilpotency_degree == 3);
  SeriesResult ab = lower_central_series(fixtures::abelian(7, 4));
  CHECK(ab.dims == std::vector<std::size_t>{4, 0});
  SeriesResult s = lower_central_series(fixtures::sl2(7));
  CHECK(s.dims == std::vector<std::size_t>{3});  // [sl2, sl2] = sl2, stabilizes at once
  CHECK_FALSE(s.nilpotency_degree.has_value());
  // strictly decreasing until stabilization
  for (std::size_t i = 1; i < h.dims.size(); ++i) CHECK(h.dims[i] < h.dims[i - 1]);
}

TEST_CASE("Engel-Jacobson witness on bundled nilpotent algebras") {
  // spanning Lie set of ad-nilpotent elements => series terminates at 0
  for (uint32_t p : {2u, 5u}) {
    LieAlgebra L = fixtures::strictly_upper_lie(p, 4);
    std::vector<FpVec> gens;
    for (std::size_t i = 0; i < L.dim(); ++i) gens.push_back(L.basis_vec(i));
    for (const auto& e : lie_set(L, gens, 6))
      CHECK(ad_nilpotency(L, e.value, (int)L.dim() + 1).has_value());
    CHECK(lower_central_series(L).nilpotency_degree.has_value());
  }
}

TEST_CASE("ideal_closure examples") {
  LieAlgebra h = fixtures::heisenberg(5);
  Subspace c1 = ideal_closure(h, {h.basis_vec(2)});
  CHECK(c1.dim() == 1);  // z central
  Subspace c2 = ideal_closure(h, {h.basis_vec(0)});
  CHECK(c2.dim() == 2);  // span(x, z)
  CHECK(c2.contains(h.basis_vec(2)));
  CHECK(ideal_closure(h, {h.zero()}).dim() == 0);
  // ideal property on basis products
  for (const auto& v : c2.basis())
    for (std::size_t i = 0; i < h.dim(); ++i) CHECK(c2.contains(h.bracket(v, h.basis_vec(i))));
}

TEST_CASE("hall basis counts match the necklace formula") {
  FreeLieBasis b2 = hall_basis(2, 5, 5);
  CHECK(b2.count_of_degree(1) == 2);
  CHECK(b2.count_of_degree(2) == 1);
  CHECK(b2.count_of_degree(3) == 2);  // (2^3 - 2)/3
  for (int d = 1; d <= 5; ++d) CHECK(b2.count_of_degree(d) == witt_dimension(2, d));
  FreeLieBasis b3 = hall_basis(3, 4, 5);
  for (int d = 1; d <= 4; ++d) CHECK(b3.count_of_degree(d) == witt_dimension(3, d));
  FreeLieBasis b1 = hall_basis(1, 6, 5);
  CHECK(b1.size() == 1);  // single generator, [x,x] = 0
}

TEST_CASE("free bracket re-expression and truncation") {
  FreeLieBasis b = hall_basis(2, 3, 5);
  // [x1, x2] is itself a basis monomial
  auto c = b.free_bracket(0, 1);
  REQUIRE(c.size() == 1);
  CHECK(b.word(c.begin()->first) == Word{0, 1});
  CHECK(c.begin()->second == 1);
  // antisymmetry: [x2, x1] = -[x1, x2]
  auto c2 = b.free_bracket(1, 0);
  REQUIRE(c2.size() == 1);
  CHECK(c2.begin()->second == 4);
  // degree > degmax truncates to zero
  int idx12 = b.index_of_word(Word{0, 1});
  int idx112 = b.index_of_word(Word{0, 0, 1});
  REQUIRE(idx12 >= 0);
  REQUIRE(idx112 >= 0);
  CHECK(b.free_bracket((std::size_t)idx12, (std::size_t)idx112).empty());
}

TEST_CASE("free Lie algebra satisfies Jacobi") {
  FreeLieBasis b = hall_basis(3, 4, 7);
  BTreePtr x = BTree::var(0), y = BTree::var(1), z = BTree::var(2);
  auto jac = BTree::node(BTree::node(x, y), z);
  auto jac2 = BTree::node(BTree::node(y, z), x);
  auto jac3 = BTree::node(BTree::node(z, x), y);
  Fp f(7);
  AssocPoly total;
  for (const auto& t : {jac, jac2, jac3}) {
    AssocPoly e = assoc_expand(t, f);
    for (auto& [w, c] : e) {
      auto it = total.find(w);
      uint32_t v = f.add(it == total.end() ? 0 : it->second, c);
      if (v == 0) {
        if (it != total.end()) total.erase(it);
      } else
        total[w] = v;
    }
  }
  CHECK(total.empty());
  CHECK(b.from_assoc(total).empty());
}

TEST_CASE("subalgebra closure") {
  LieAlgebra n4 = fixtures::strictly_upper_lie(5, 4);
  auto at = [&](const char* n) { return n4.basis_vec((std::size_t)n4.name_index(n)); };
  Subspace s = subalgebra_closure(n4, {at("e12"), at("e23")});
  CHECK(s.dim() == 3);  // e12, e23, e13
  CHECK(s.contains(at("e13")));
  CHECK_FALSE(s.contains(at("e14")));
}
