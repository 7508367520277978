#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adnil/fixtures.hpp"
#include "adnil/ja.hpp"
#include "adnil/jordan.hpp"

using namespace adnil;

namespace {

AssocAlgebra f4_algebra() {
  AssocAlgebra A(2, 2);  // F_4 = F_2[w]/(w^2 + w + 1)
  A.set_product(0, 0, {1, 0});
  A.set_product(0, 1, {0, 1});
  A.set_product(1, 0, {0, 1});
  A.set_product(1, 1, {1, 1});
  return A;
}

}  // namespace

TEST_CASE("associative helpers validate") {
  CHECK_FALSE(AssocAlgebra::matrix_algebra(5, 2).associativity_witness().has_value());
  CHECK_FALSE(AssocAlgebra::strictly_upper(5, 3).associativity_witness().has_value());
  CHECK_FALSE(fixtures::nil3_free2(5).associativity_witness().has_value());
  CHECK_FALSE(f4_algebra().associativity_witness().has_value());
  CHECK_FALSE(involution_check(AssocAlgebra::matrix_algebra(5, 2), transpose_involution(5, 2))
                  .has_value());
}

TEST_CASE("nil3_free2: every cube vanishes but aba does not") {
  AssocAlgebra D = fixtures::nil3_free2(5);
  FpVec a = D.basis_vec(0), b = D.basis_vec(1);
  CHECK_FALSE(vec_is_zero(D.mul(D.mul(a, b), a)));  // aba != 0
  // cubes of all 2-generator combinations vanish
  Fp f(5);
  for (uint32_t ca = 0; ca < 5; ++ca)
    for (uint32_t cb = 0; cb < 5; ++cb) {
      FpVec x = vec_add(vec_scale(a, ca, f), vec_scale(b, cb, f), f);
      CHECK(vec_is_zero(D.mul(D.mul(x, x), x)));
    }
}

TEST_CASE("plus algebra of M_2: examples and axiom verification") {
  QuadraticJordanAlgebra J = plus_algebra(AssocAlgebra::matrix_algebra(5, 2));
  // Q(e11) sends e22 to e11 e22 e11 = 0 (orthogonal idempotents)
  std::size_t e11 = 0, e12 = 1, e21 = 2, e22 = 3;
  CHECK(vec_is_zero(J.apply_Q(J.basis_vec(e22), J.basis_vec(e11))));
  CHECK(vec_is_zero(J.square(J.basis_vec(e12))));  // square-zero matrix
  CHECK(verify_quadratic_jordan(J).ok);
  // e21 Q(e12) = e12 e21 e12 = e12 != 0, so e12 is not an azd
  CHECK(J.apply_Q(J.basis_vec(e21), J.basis_vec(e12)) == J.basis_vec(e12));
  CHECK_FALSE(azd_check(J, J.basis_vec(e12)));
  CHECK(azd_check(J, J.zero()));
  // diag(1,2)^3 = diag(1,3) over F_5 (associative powers oracle)
  Fp f(5);
  FpVec x = vec_add(J.basis_vec(e11), vec_scale(J.basis_vec(e22), 2, f), f);
  FpVec want = vec_add(J.basis_vec(e11), vec_scale(J.basis_vec(e22), 3, f), f);
  CHECK(jordan_power(J, x, 3) == want);
}

TEST_CASE("axioms hold for all bundled models; corruption is caught") {
  for (uint32_t p : {2u, 3u, 5u})
    CHECK(verify_quadratic_jordan(plus_algebra(AssocAlgebra::matrix_algebra(p, 2))).ok);
  QuadraticJordanAlgebra H =
      hermitian_algebra(AssocAlgebra::matrix_algebra(5, 2), transpose_involution(5, 2));
  CHECK(H.dim() == 3);
  CHECK(verify_quadratic_jordan(H).ok);
  QuadraticJordanAlgebra Jq =
      quadratic_form_algebra(3, 3, FpVec{1, 1, 1}, std::vector<FpVec>(3, FpVec(3, 0)),
                             FpVec{1, 0, 0});
  CHECK(verify_quadratic_jordan(Jq).ok);
  // base-point identity: 1 Q(v) = v^2
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(Jq.apply_Q(Jq.basis_vec(0), Jq.basis_vec(i)) == Jq.square(Jq.basis_vec(i)));
  // and 1^2 = 1
  CHECK(Jq.square(Jq.basis_vec(0)) == Jq.basis_vec(0));
  // zero algebra passes
  CHECK(verify_quadratic_jordan(QuadraticJordanAlgebra(5, 2)).ok);
  // one flipped sign in Q: at least one axiom fails with a witness
  QuadraticJordanAlgebra bad = plus_algebra(AssocAlgebra::matrix_algebra(5, 2));
  FpMatrix m = bad.Q_basis(0);
  m.at(3, 0) = (m.at(3, 0) + 1) % 5;
  bad.set_Q(0, m);
  auto rep = verify_quadratic_jordan(bad);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.failures.empty());
  CHECK_FALSE(rep.failures[0].monomial.empty());
}

TEST_CASE("involution axiom failure is rejected") {
  // a non-multiplicative "involution": swap e12 <-> e11
  FpMatrix m = FpMatrix::identity(5, 4);
  m.at(0, 0) = 0;
  m.at(0, 1) = 1;
  m.at(1, 1) = 0;
  m.at(1, 0) = 1;
  CHECK_THROWS_AS(hermitian_algebra(AssocAlgebra::matrix_algebra(5, 2), Involution{m}),
                  HypothesisError);
  // q(basepoint) != 1 is rejected
  CHECK_THROWS_AS(quadratic_form_algebra(3, 2, FpVec{2, 1}, std::vector<FpVec>(2, FpVec(2, 0)),
                                         FpVec{1, 0}),
                  HypothesisError);
}

TEST_CASE("power identities x^i Q(x^j) = x^{i+2j} and x^i o x^j = 2x^{i+j}") {
  QuadraticJordanAlgebra J = plus_algebra(AssocAlgebra::matrix_algebra(5, 2));
  for (std::size_t i = 0; i < J.dim(); ++i) CHECK(power_identities_ok(J, J.basis_vec(i)));
  Fp f(5);
  FpVec mixed = vec_add(J.basis_vec(0), vec_scale(J.basis_vec(3), 2, f), f);
  CHECK(power_identities_ok(J, mixed));
  QuadraticJordanAlgebra Jq =
      quadratic_form_algebra(3, 3, FpVec{1, 1, 1}, std::vector<FpVec>(3, FpVec(3, 0)),
                             FpVec{1, 0, 0});
  for (std::size_t i = 0; i < Jq.dim(); ++i) CHECK(power_identities_ok(Jq, Jq.basis_vec(i)));
}

TEST_CASE("homotope") {
  QuadraticJordanAlgebra J = plus_algebra(AssocAlgebra::matrix_algebra(5, 2));
  // a = 0: all products zero, trivially Jordan
  QuadraticJordanAlgebra H0 = homotope(J, J.zero());
  for (std::size_t i = 0; i < 4; ++i) CHECK(vec_is_zero(H0.square(H0.basis_vec(i))));
  CHECK(verify_quadratic_jordan(H0).ok);
  // a = 1: Q* = Q since Q(1) = Id
  Fp f(5);
  FpVec one = vec_add(J.basis_vec(0), J.basis_vec(3), f);
  CHECK(J.Qop(one) == FpMatrix::identity(5, 4));
  QuadraticJordanAlgebra H1 = homotope(J, one);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(H1.square(H1.basis_vec(i)) == J.square(J.basis_vec(i)));
    CHECK(H1.Qop(H1.basis_vec(i)) == J.Qop(J.basis_vec(i)));
  }
  // a = e11: verified by the exhaustive axiom check
  QuadraticJordanAlgebra He = homotope(J, J.basis_vec(0));
  CHECK(verify_quadratic_jordan(He).ok);
  // azd of J stays azd of every homotope
  QuadraticJordanAlgebra N = plus_algebra(AssocAlgebra::strictly_upper(5, 3));
  for (std::size_t i = 0; i < N.dim(); ++i) {
    if (!azd_check(N, N.basis_vec(i))) continue;
    for (std::size_t a = 0; a < N.dim(); ++a)
      CHECK(azd_check(homotope(N, N.basis_vec(a)), N.basis_vec(i)));
  }
}

TEST_CASE("azd powers on the bundled nil algebras") {
  // 3-dim nil example: strictly upper 3x3, x^3 = 0 identically
  QuadraticJordanAlgebra N = plus_algebra(AssocAlgebra::strictly_upper(5, 3));
  CHECK(power_map_vanishes_strictly(N, 3));
  CHECK_FALSE(power_map_vanishes_strictly(N, 2));
  for (std::size_t i = 0; i < N.dim(); ++i) {
    auto res = azd_powers(N, N.basis_vec(i), 3);
    CHECK(res.high_powers.size() == 2);  // x^4, x^5
    for (auto& [e, v] : res.high_powers) CHECK(azd_check(N, v));
    CHECK(res.strong_hypothesis);
    REQUIRE(res.low_power.has_value());
    CHECK(azd_check(N, *res.low_power));
  }
  // nonzero instance of the strong-hypothesis conclusion: (e12+e23)^2 = e13 != 0
  Fp f(5);
  FpVec x = vec_add(N.basis_vec(0), N.basis_vec(2), f);
  auto res = azd_powers(N, x, 3);
  REQUIRE(res.low_power.has_value());
  CHECK_FALSE(vec_is_zero(*res.low_power));
  CHECK(azd_check(N, *res.low_power));
  // hypothesis failure: M_2^+ has elements with x^3 != 0
  QuadraticJordanAlgebra M = plus_algebra(AssocAlgebra::matrix_algebra(5, 2));
  CHECK_THROWS_AS(azd_powers(M, M.basis_vec(0), 3), HypothesisError);
}

TEST_CASE("pushforward of a homotope azd") {
  QuadraticJordanAlgebra D = plus_algebra(fixtures::nil3_free2(5));
  FpVec a = D.basis_vec(0), b = D.basis_vec(1);
  FpVec c = azd_pushforward(D, a, b);
  CHECK(c == D.basis_vec(7));  // b Q(a) = aba, the basis monomial
  CHECK(azd_check(D, c));
  // scaled azd stays azd (homogeneity)
  Fp f(5);
  CHECK(azd_check(D, vec_scale(c, 3, f)));
}

TEST_CASE("Sym_n") {
  // d = 1, p = 2, zero multiplication: Sym_2(x, y) = x o y = 0
  QuadraticJordanAlgebra Z(2, 1);
  CHECK_FALSE(sym_identity(Z, 2).has_value());
  // Sym_1(x) = x holds only on the zero space
  QuadraticJordanAlgebra F4 = plus_algebra(f4_algebra());
  CHECK(sym_identity(Z, 1).has_value());
  CHECK(sym_identity(F4, 1).has_value());
  CHECK_FALSE(sym_identity(QuadraticJordanAlgebra(2, 0), 1).has_value());
  // dimension bound instance: Sym_3 = Sym_{d(p-1)+1} vanishes for d = 2, p = 2
  CHECK(sym_bound_check(F4));
  CHECK_FALSE(sym_identity(F4, 3).has_value());
  // fixture set of further 2-dim F_2 algebras
  AssocAlgebra Dual(2, 2);
  Dual.set_product(0, 0, {1, 0});
  Dual.set_product(0, 1, {0, 1});
  Dual.set_product(1, 0, {0, 1});
  AssocAlgebra Split(2, 2);
  Split.set_product(0, 0, {1, 0});
  Split.set_product(1, 1, {0, 1});
  CHECK(sym_bound_check(plus_algebra(Dual)));
  CHECK(sym_bound_check(plus_algebra(Split)));
  CHECK(sym_bound_check(QuadraticJordanAlgebra(2, 2)));
}

TEST_CASE("FGG quotient") {
  // sl_2 over F_7 with s = e: K = ker ad(e)^2 is 2-dimensional, the quotient
  // is 1-dimensional with f o f a nonzero multiple of f
  LieAlgebra s = fixtures::sl2(7);
  FggResult r = fgg_quotient(s, s.basis_vec(0));
  CHECK(r.K.dim() == 2);
  CHECK(r.K_is_ideal);
  CHECK(r.J.dim() == 1);
  CHECK(r.j1_ok);
  CHECK(r.j2_ok);
  FpVec ff = r.J.circle(r.J.basis_vec(0), r.J.basis_vec(0));
  // f o f = [f, [e, f]] = [f, h] = 2f modulo K, exactly
  CHECK(ff == vec_scale(r.J.basis_vec(0), 2, Fp(7)));
  // degenerate Heisenberg case: ad(s)^2 = 0 already, so K = L and J = 0
  LieAlgebra h = fixtures::heisenberg(5);
  FggResult rh = fgg_quotient(h, h.basis_vec(0));
  CHECK(rh.J.dim() == 0);
  CHECK(rh.j1_ok);
  CHECK(rh.j2_ok);
  FggResult r0 = fgg_quotient(h, h.zero());
  CHECK(r0.J.dim() == 0);
  // preconditions
  CHECK_THROWS_AS(fgg_quotient(fixtures::heisenberg(3), h.zero()), HypothesisError);  // p < 5
  CHECK_THROWS_AS(fgg_quotient(s, s.basis_vec(1)), HypothesisError);  // ad(h)^3 != 0
}

TEST_CASE("J_a construction on the bundled 6-dim graded nilpotent algebra") {
  LieAlgebra L = fixtures::strictly_upper_lie(5, 4);
  int budget = 3;
  auto at = [&](const char* n) { return L.basis_vec((std::size_t)L.name_index(n)); };
  EnvelopeElement a(L, budget);
  a.add_component(0b01, at("e12"));
  a.add_component(0b10, at("e34"));
  JaData data(L, budget, 1, a);
  CHECK_FALSE(data.ad2().is_zero_on(budget));
  CHECK(data.Ka().dim() == data.Kprime().dim());  // here K_a = K'_a
  JaConstruction ja = ja_construct(data);
  CHECK(ja.J.dim() == 1);  // ker(ad(e12) ad(e34)) has rank-1 complement
  CHECK(ja.well_defined);
  CHECK(ja.axiom_report.ok);
  CHECK(data.order_irrelevance_ok());
  // b = e23 (x) e3 is a nonzero azd; b ad^[2](a) must be a sandwich
  EnvelopeElement b = EnvelopeElement::single(L, budget, 0b100, at("e23"));
  auto sw = sandwich_from_azd(data, ja, b);
  CHECK_FALSE(sw.value.is_zero());
  CHECK(sw.sandwich_direct);
  CHECK(sw.sandwich_via_u2);
  auto dec = sw.value.standard_decomposition();
  REQUIRE(dec.size() == 1);
  CHECK(dec[0].first == 0b111);
  Fp f(5);
  CHECK(dec[0].second == vec_scale(at("e14"), f.neg(1), f));  // -e14 (x) e123
  // scaling the azd scales the sandwich
  auto sw2 = sandwich_from_azd(data, ja, b.scaled(3));
  CHECK(sw2.value == sw.value.scaled(3));
  CHECK(sw2.sandwich_direct);
  // b inside K_a is rejected as "nonzero azd"
  EnvelopeElement bk = EnvelopeElement::single(L, budget, 0b100, at("e14"));
  CHECK_THROWS_AS(sandwich_from_azd(data, ja, bk), HypothesisError);
}

TEST_CASE("J_a verdicts are stable under budget growth") {
  // the envelope budget is a computational truncation; growing it enlarges
  // the spaces but leaves every verification verdict unchanged
  LieAlgebra L = fixtures::strictly_upper_lie(5, 4);
  auto at = [&](const char* n) { return L.basis_vec((std::size_t)L.name_index(n)); };
  for (int budget : {3, 4}) {
    EnvelopeElement a(L, budget);
    a.add_component(0b01, at("e12"));
    a.add_component(0b10, at("e34"));
    JaData data(L, budget, 1, a);
    JaConstruction ja = ja_construct(data);
    CHECK(ja.J.dim() >= 1);
    CHECK(ja.well_defined);
    CHECK(ja.axiom_report.ok);
    EnvelopeElement b = EnvelopeElement::single(L, budget, 0b100, at("e23"));
    auto sw = sandwich_from_azd(data, ja, b);
    CHECK(sw.sandwich_direct);
    CHECK(sw.sandwich_via_u2);
  }
}

TEST_CASE("J_a degenerate cases") {
  LieAlgebra h = fixtures::heisenberg(5);
  // a = z (x) e1 central: ad^[2](a) = 0, K_a is everything, J_a = 0
  EnvelopeElement a = EnvelopeElement::single(h, 3, 0b01, h.basis_vec(2));
  JaData data(h, 3, 1, a);
  CHECK(data.quotient_dim() == 0);
  JaConstruction ja = ja_construct(data);
  CHECK(ja.J.dim() == 0);
  CHECK(ja.axiom_report.ok);
  // a = 0
  JaData zero(h, 3, 1, EnvelopeElement(h, 3));
  CHECK(zero.quotient_dim() == 0);
  // hypothesis failure: three non-commuting single-mask components
  LieAlgebra s = fixtures::sl2(5);
  EnvelopeElement bad(s, 3);
  bad.add_component(0b001, s.basis_vec(0));
  bad.add_component(0b010, s.basis_vec(1));
  CHECK_THROWS_AS(JaData(s, 3, 1, bad), HypothesisError);
}

TEST_CASE("interleaved divided-ad products vanish on the bundled J_a element") {
  LieAlgebra L = fixtures::strictly_upper_lie(5, 4);
  int budget = 6;
  auto at = [&](const char* n) { return L.basis_vec((std::size_t)L.name_index(n)); };
  EnvelopeElement a(L, budget);
  a.add_component(0b01, at("e12"));
  a.add_component(0b10, at("e34"));
  std::vector<EnvelopeElement> comps{EnvelopeElement::single(L, budget, 0b01, at("e12")),
                                     EnvelopeElement::single(L, budget, 0b10, at("e34"))};
  OmegaFamily fam = OmegaFamily::from_ad(comps);
  REQUIRE(fam.validate().ok);
  auto adk = [&](int k) { return fam.U(k); };
  // basis of L~ slices used as the y's (fresh masks)
  auto mk = [&](std::size_t i, int bit) {
    return EnvelopeElement::single(L, budget, Mask(1) << bit, L.basis_vec(i));
  };
  // s = 2: y1 ad^[i1](a) ad(y2) ad^[i2](a) with i1 + i2 >= 4
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = 0; j < L.dim(); ++j) {
      EnvelopeElement y1 = mk(i, 2);
      EnvelopeElement y2 = mk(j, 3);
      EnvelopeElement u = adk(2).apply(y1);
      u = ad_operator(y2).apply(u);
      u = adk(2).apply(u);
      CHECK(u.is_zero());
    }
  // s = 3 patterns with i1 + i2 + i3 >= 5
  std::vector<std::array<int, 3>> patterns{{2, 2, 1}, {2, 1, 2}, {1, 2, 2}, {2, 2, 2}};
  for (auto& pat : patterns)
    for (std::size_t i = 0; i < L.dim(); ++i) {
      EnvelopeElement u = adk(pat[0]).apply(mk(i, 2));
      u = ad_operator(mk((i + 1) % L.dim(), 3)).apply(u);
      u = adk(pat[1]).apply(u);
      u = ad_operator(mk((i + 2) % L.dim(), 4)).apply(u);
      u = adk(pat[2]).apply(u);
      CHECK(u.is_zero());
    }
}

TEST_CASE("K'_a ideal behaviour at p != 2 (empirical)") {
  // homotope form: K'_a = ker Q(a) inside J^(a); closure under the homotope
  // operations is observed on bundled p >= 3 instances
  QuadraticJordanAlgebra D = plus_algebra(fixtures::nil3_free2(5));
  FpVec a = D.basis_vec(0);
  Subspace Kp = kernel(D.Qop(a));
  QuadraticJordanAlgebra H = homotope(D, a);
  bool closed = true;
  for (const auto& k : Kp.basis()) {
    if (!Kp.contains(H.square(k))) closed = false;
    for (std::size_t i = 0; i < D.dim(); ++i) {
      if (!Kp.contains(H.circle(k, H.basis_vec(i)))) closed = false;
      if (!Kp.contains(H.apply_Q(k, H.basis_vec(i)))) closed = false;
      if (!Kp.contains(H.apply_Q(H.basis_vec(i), k))) closed = false;
    }
  }
  CHECK(closed);
}
