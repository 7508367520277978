#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adnil/divpoly.hpp"
#include "adnil/fixtures.hpp"
#include "adnil/sandwich.hpp"

using namespace adnil;

TEST_CASE("sandwich_check on plain algebras") {
  LieAlgebra h2 = fixtures::heisenberg(2);
  CHECK(sandwich_check(h2, h2.zero()));
  CHECK(sandwich_check(h2, h2.basis_vec(2)));  // z central
  // char-2 caveat: both conditions checked explicitly for x
  FpMatrix adx = h2.ad(h2.basis_vec(0));
  CHECK((adx * adx).is_zero());
  bool cond2 = true;
  for (std::size_t i = 0; i < 3; ++i)
    if (!(adx * h2.ad(h2.basis_vec(i)) * adx).is_zero()) cond2 = false;
  CHECK(cond2);
  CHECK(sandwich_check(h2, h2.basis_vec(0)));
  // sl2: e is not a sandwich
  LieAlgebra s = fixtures::sl2(7);
  CHECK_FALSE(sandwich_check(s, s.basis_vec(0)));
}

TEST_CASE("kostrikin descent on measured instances") {
  // n_4 over F_7, a = e12 + e23 + e34: measured ad-index 3, so n = 4 works
  LieAlgebra L = fixtures::strictly_upper_lie(7, 4);
  auto at = [&](const char* n) { return L.basis_vec((std::size_t)L.name_index(n)); };
  Fp f(7);
  FpVec a = vec_add(vec_add(at("e12"), at("e23"), f), at("e34"), f);
  CHECK(ad_nilpotency(L, a, 10) == 3);
  auto entries = kostrikin_descent(L, a, 4);
  CHECK(entries.size() == L.dim());
  for (const auto& e : entries) {
    CHECK(e.ad_index <= 3);
    // oracle: direct matrix power
    FpMatrix ad = L.ad(e.value);
    CHECK(ad.pow(e.ad_index).is_zero());
    if (e.ad_index > 1) CHECK_FALSE(ad.pow(e.ad_index - 1).is_zero());
  }
  // chain8 over F_7: a = c1+c2+c3+c4 has index exactly 4
  LieAlgebra c = fixtures::chain8(7);
  FpVec ac = c.zero();
  for (const char* n : {"c1", "c2", "c3", "c4"})
    ac = vec_add(ac, c.basis_vec((std::size_t)c.name_index(n)), f);
  CHECK(ad_nilpotency(c, ac, 10) == 4);
  for (const auto& e : kostrikin_descent(c, ac, 4)) CHECK(e.ad_index <= 3);
  // a = 0: every output zero with index 1
  for (const auto& e : kostrikin_descent(L, L.zero(), 4)) {
    CHECK(vec_is_zero(e.value));
    CHECK(e.ad_index == 1);
  }
  // preconditions
  CHECK_THROWS_AS(kostrikin_descent(L, a, 3), HypothesisError);   // n < 4
  CHECK_THROWS_AS(kostrikin_descent(L, a, 7), HypothesisError);   // n >= p
  LieAlgebra s = fixtures::sl2(7);
  CHECK_THROWS_AS(kostrikin_descent(s, s.basis_vec(1), 4), HypothesisError);  // ad^4 != 0
}

TEST_CASE("linearized Kostrikin descent") {
  // vacuous m=2 pass on the empty family
  LieAlgebra h = fixtures::heisenberg(5);
  OmegaFamily empty(5, 3, 4);
  empty.validate();
  EnvelopeElement a = EnvelopeElement::single(h, 4, 0b1000, h.basis_vec(0));
  auto rep0 = linearized_kostrikin(empty, 2, a);
  CHECK(rep0.hypothesis_ok);
  CHECK(rep0.part1_ok);
  // |Omega| = 1 with nonzero member: U_2 = 0 holds, part 1 on a 4-dim nilpotent L
  LieAlgebra n4 = fixtures::strictly_upper_lie(5, 4);
  auto at = [&](const char* n) { return n4.basis_vec((std::size_t)n4.name_index(n)); };
  OmegaFamily one = OmegaFamily::from_ad({EnvelopeElement::single(n4, 4, 0b01, at("e12"))});
  one.validate();
  EnvelopeElement a4 = EnvelopeElement::single(n4, 4, 0b1000, at("e23"));
  auto rep1 = linearized_kostrikin(one, 2, a4);
  CHECK(rep1.hypothesis_ok);
  CHECK(rep1.part1_ok);
  CHECK_FALSE(rep1.part2_applicable);
  // m = 4 on the 8-dim graded chain with four single-mask members
  LieAlgebra c8 = fixtures::chain8(3);
  auto at8 = [&](const std::string& n) { return c8.basis_vec((std::size_t)c8.name_index(n)); };
  std::vector<EnvelopeElement> elems;
  for (int i = 0; i < 4; ++i)
    elems.push_back(EnvelopeElement::single(c8, 8, Mask(1) << i, at8("c" + std::to_string(i + 1))));
  OmegaFamily fam = OmegaFamily::from_ad(elems);
  CHECK(fam.validate().ok);
  CHECK_FALSE(fam.U(3).is_zero_on(8));  // the hypothesis window starts at m = 4
  CHECK(fam.U(4).is_zero_on(8));
  EnvelopeElement big(c8, 8);
  big.add_component(Mask(1) << 4, at8("u"));
  big.add_component(Mask(1) << 5, at8("v"));
  big.add_component(Mask(1) << 6, at8("u"));
  big.add_component(Mask(1) << 7, at8("w"));
  auto rep2 = linearized_kostrikin(fam, 4, big);
  CHECK(rep2.hypothesis_ok);
  CHECK(rep2.part1_ok);
  CHECK(rep2.part2_applicable);
  CHECK(rep2.part2_ok);
  // hypothesis failure is reported with the witness k
  auto rep3 = linearized_kostrikin(fam, 3, big);
  CHECK_FALSE(rep3.hypothesis_ok);
  CHECK(rep3.hypothesis_witness_k == 3);
}

TEST_CASE("sandwich from U_2 = 0") {
  LieAlgebra h = fixtures::heisenberg(5);
  // central singleton
  auto r1 = sandwich_from_U2({EnvelopeElement::single(h, 4, 0b01, h.basis_vec(2))});
  CHECK(r1.is_sandwich);
  // two same-mask components: U_2 = 0 by mask collision
  auto r2 = sandwich_from_U2({EnvelopeElement::single(h, 4, 0b01, h.basis_vec(0)),
                              EnvelopeElement::single(h, 4, 0b01, h.basis_vec(1))});
  CHECK(r2.is_sandwich);
  auto dec = r2.value.standard_decomposition();
  REQUIRE(dec.size() == 1);
  // violating instance in sl2 (x) E: U_2 = ad(e)^2 (x) e12 != 0
  LieAlgebra s = fixtures::sl2(7);
  CHECK_THROWS_AS(sandwich_from_U2({EnvelopeElement::single(s, 4, 0b01, s.basis_vec(0)),
                                    EnvelopeElement::single(s, 4, 0b10, s.basis_vec(0))}),
                  HypothesisError);
}

TEST_CASE("Jacobson symmetrization identity, p = 2, 3, 5") {
  CHECK(jacobson_symmetrization_identity(2));
  CHECK(jacobson_symmetrization_identity(3));
  CHECK(jacobson_symmetrization_identity(5));
}

TEST_CASE("sandwich p-th power vanishing") {
  LieAlgebra h = fixtures::heisenberg(2);
  int budget = 4;
  // single-mask elements are sandwiches of L~; bracket with a disjoint-mask b
  EnvelopeElement a = EnvelopeElement::single(h, budget, 0b01, h.basis_vec(0));
  EnvelopeElement b = EnvelopeElement::single(h, budget, 0b10, h.basis_vec(1));
  CHECK(sandwich_check(a));
  auto rep = sandwich_ppower(a, b);
  CHECK(rep.power_vanishes);
  CHECK(rep.jacobson_identity_ok);
  // central a: [a, b] = 0
  EnvelopeElement z = EnvelopeElement::single(h, budget, 0b01, h.basis_vec(2));
  CHECK(envelope_bracket(z, b).is_zero());
  CHECK(sandwich_ppower(z, b).power_vanishes);
  // non-sandwich input is rejected
  LieAlgebra s = fixtures::sl2(5);
  EnvelopeElement e(s, budget);
  e.add_component(0b01, s.basis_vec(0));
  e.add_component(0b10, s.basis_vec(0));
  EnvelopeElement bs = EnvelopeElement::single(s, budget, 0b100, s.basis_vec(2));
  CHECK_FALSE(sandwich_check(e));
  CHECK_THROWS_AS(sandwich_ppower(e, bs), HypothesisError);
}

TEST_CASE("two-decomposition congruence") {
  LieAlgebra L = fixtures::strictly_upper_lie(5, 4);
  auto at = [&](const char* n) { return L.basis_vec((std::size_t)L.name_index(n)); };
  // all singleton blocks on both sides: equality on the nose
  std::vector<FpVec> omega{at("e13"), at("e14"), at("e24")};
  std::vector<std::vector<std::size_t>> singletons{{0}, {1}, {2}};
  auto rep1 = two_decomposition_congruence(L, omega, singletons, singletons);
  CHECK(rep1.hypotheses_ok);
  CHECK(rep1.equal_on_the_nose);
  CHECK(rep1.congruent);
  // 2+1 versus 1+2
  auto rep2 = two_decomposition_congruence(L, omega, {{0, 1}, {2}}, {{0}, {1, 2}});
  CHECK(rep2.hypotheses_ok);
  CHECK(rep2.congruent);
  // nontrivial: difference lands in ad[Omega, Omega] but is nonzero
  std::vector<FpVec> omega4{at("e14"), at("e12"), at("e23"), at("e13")};
  auto rep3 = two_decomposition_congruence(L, omega4, {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}});
  CHECK(rep3.hypotheses_ok);
  CHECK(rep3.congruent);
  CHECK_FALSE(rep3.equal_on_the_nose);
  // block hypothesis failure detected: e12, e23 do not annihilate
  auto rep4 = two_decomposition_congruence(L, omega4, {{1, 2}, {0, 3}}, {{0}, {1}, {2}, {3}});
  CHECK_FALSE(rep4.hypotheses_ok);
}

TEST_CASE("divided polynomial evaluation: plain words and divided-ad") {
  LieAlgebra h = fixtures::heisenberg(5);
  int budget = 4;
  // w = [x1, x2] on (x (x) e1, y (x) e2) -> z (x) e12
  DividedPolynomial w(h, budget, 2,
                      DPNode::make_bracket({DPNode::make_var(0), DPNode::make_var(1)}));
  std::vector<EnvelopeElement> vals{EnvelopeElement::single(h, budget, 0b01, h.basis_vec(0)),
                                    EnvelopeElement::single(h, budget, 0b10, h.basis_vec(1))};
  EnvelopeElement r = w.eval(vals, "any");
  auto dec = r.standard_decomposition();
  REQUIRE(dec.size() == 1);
  CHECK(dec[0].first == 0b11);
  CHECK(dec[0].second == h.basis_vec(2));

  // DivAd with k = 0 returns the x0 value unchanged (U_0 = Id)
  DividedPolynomial d0(h, budget, 2, DPNode::make_divad(0, 1, 0, DPNode::make_var(1)));
  d0.waive_obligations();
  CHECK(d0.eval(vals, "any") == vals[0]);

  // the commutativity obligation is a real condition: on the full Heisenberg ambient the identity
  // polynomial w = x1 fails it, since [x (x) e1, y (x) e2] = z (x) e12 != 0
  DividedPolynomial dbad(h, budget, 2, DPNode::make_divad(0, 1, 1, DPNode::make_var(1)));
  DPAmbient full;
  full.key = "heis-full";
  for (std::size_t i = 0; i < 3; ++i)
    for (Mask m : {Mask(0b01), Mask(0b10)})
      full.span.push_back(EnvelopeElement::single(h, budget, m, h.basis_vec(i)));
  CHECK_FALSE(dbad.verify_obligations(full, vals).ok);

  // DivAd k = 1 on w = x1 over a bracket-commuting ambient: value is [a0, a1]
  DividedPolynomial d1(h, budget, 2, DPNode::make_divad(0, 1, 1, DPNode::make_var(1)));
  DPAmbient ambient;
  ambient.key = "heis-xz";
  for (std::size_t i : {std::size_t(0), std::size_t(2)})  // x and z commute
    for (Mask m : {Mask(0b01), Mask(0b10)})
      ambient.span.push_back(EnvelopeElement::single(h, budget, m, h.basis_vec(i)));
  EnvelopeElement a1(h, budget);
  a1.add_component(0b01, h.basis_vec(0));
  a1.add_component(0b10, h.basis_vec(2));
  EnvelopeElement a0 = EnvelopeElement::single(h, budget, 0b100, h.basis_vec(1));
  auto oblig = d1.verify_obligations(ambient, {a0, a1});
  CHECK(oblig.ok);
  EnvelopeElement got = d1.eval({a0, a1}, ambient.key);
  CHECK(got == envelope_bracket(a0, a1));
  CHECK_FALSE(got.is_zero());

  // unverified obligations abort evaluation
  DividedPolynomial d2(h, budget, 2, DPNode::make_divad(0, 1, 1, DPNode::make_var(1)));
  CHECK_THROWS_AS(d2.eval({a0, a1}, "fresh-ambient"), StructureError);
}

TEST_CASE("divided polynomial substitution and higher divided-ad") {
  LieAlgebra c6 = fixtures::chain6(5);
  int budget = 6;
  auto at = [&](const char* n) { return c6.basis_vec((std::size_t)c6.name_index(n)); };
  // Subst swaps arguments: w(x1, x2) = [x1, x2] applied to (x2, x1)
  DPNodePtr w = DPNode::make_bracket({DPNode::make_var(0), DPNode::make_var(1)});
  DividedPolynomial swapped(
      c6, budget, 2, DPNode::make_subst(w, {DPNode::make_var(1), DPNode::make_var(0)}));
  EnvelopeElement v1 = EnvelopeElement::single(c6, budget, 0b01, at("u"));
  EnvelopeElement v2 = EnvelopeElement::single(c6, budget, 0b10, at("c1"));
  Fp f(5);
  CHECK(swapped.eval({v1, v2}, "any") ==
        envelope_bracket(v1, v2).scaled(f.neg(1)));
  // degree bookkeeping for substitution
  DividedPolynomial comp(
      c6, budget, 2,
      DPNode::make_subst(DPNode::make_bracket({DPNode::make_var(0), DPNode::make_var(1)}),
                         {DPNode::make_var(0), DPNode::make_bracket({DPNode::make_var(0),
                                                                     DPNode::make_var(1)})}));
  CHECK(comp.multidegree() == std::vector<int>{2, 1});
  // divided-ad with k = 2: a0 U_2({ad(a_{1,pi})}) hits u -> v -> w
  DividedPolynomial d2(c6, budget, 2, DPNode::make_divad(0, 1, 2, DPNode::make_var(1)));
  DPAmbient ambient;
  ambient.key = "c-slice";
  for (int i = 0; i < 3; ++i)
    ambient.span.push_back(EnvelopeElement::single(
        c6, budget, Mask(1) << i, at(("c" + std::to_string(i + 1)).c_str())));
  EnvelopeElement a0 = EnvelopeElement::single(c6, budget, 0b1000, at("u"));
  EnvelopeElement a1(c6, budget);
  a1.add_component(0b01, at("c1"));
  a1.add_component(0b10, at("c2"));
  CHECK(d2.verify_obligations(ambient, {a0, a1}).ok);
  EnvelopeElement got = d2.eval({a0, a1}, ambient.key);
  auto dec = got.standard_decomposition();
  REQUIRE(dec.size() == 1);
  CHECK(dec[0].first == Mask(0b1011));
  CHECK(dec[0].second == at("w"));  // u ad(c1) ad(c2) = w
}

TEST_CASE("abstract derivation members obey the divided-power identities") {
  // every linear map is a derivation of an abelian algebra; diagonal blocks
  // commute, so they form a valid family without coming from ad()
  LieAlgebra ab = fixtures::abelian(7, 3);
  int budget = 4;
  Fp f(7);
  auto diag = [&](uint32_t d0, uint32_t d1, uint32_t d2) {
    FpMatrix m(7, 3, 3);
    m.at(0, 0) = d0;
    m.at(1, 1) = d1;
    m.at(2, 2) = d2;
    return m;
  };
  OmegaFamily fam(7, 3, budget);
  fam.add_member({EnvelopeOperator::block(0b01, diag(1, 2, 3)), 0, "d1"});
  fam.add_member({EnvelopeOperator::block(0b10, diag(4, 5, 6)), 1, "d2"});
  fam.add_member({EnvelopeOperator::block(0b101, diag(2, 0, 1)), 0, "d3"});
  REQUIRE(fam.validate().ok);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      CHECK((fam.U(i) * fam.U(j)).equals_on(fam.U(i + j).scaled(binomial_mod(i + j, i, f)),
                                            budget));
}

TEST_CASE("obligation verification is cached per ambient key") {
  LieAlgebra h = fixtures::heisenberg(3);
  DividedPolynomial d(h, 4, 2, DPNode::make_divad(0, 1, 2, DPNode::make_var(1)));
  DPAmbient ambient;
  ambient.key = "K1";
  // x and z span a bracket-commuting slice, over two generator masks
  for (std::size_t i : {std::size_t(0), std::size_t(2)})
    for (Mask m : {Mask(0b01), Mask(0b10)})
      ambient.span.push_back(EnvelopeElement::single(h, 4, m, h.basis_vec(i)));
  std::vector<EnvelopeElement> rep{EnvelopeElement::single(h, 4, 0b100, h.basis_vec(1)),
                                   EnvelopeElement::single(h, 4, 0b01, h.basis_vec(0))};
  CHECK(d.verify_obligations(ambient, rep).ok);
  CHECK_NOTHROW(d.eval(rep, "K1"));
  CHECK_THROWS_AS(d.eval(rep, "K2"), StructureError);
  // waiving unlocks evaluation everywhere (exploratory use)
  d.waive_obligations();
  CHECK_NOTHROW(d.eval(rep, "K2"));
}

TEST_CASE("regularity probe") {
  // w = x1 is nonzero at every i with L^i != 0
  LieAlgebra h = fixtures::heisenberg(5);
  DividedPolynomial w1(h, 4, 1, DPNode::make_var(0));
  auto rows1 = regularity_probe(w1, 3);
  CHECK_FALSE(rows1[0].identically_zero);  // L^1
  CHECK_FALSE(rows1[1].identically_zero);  // L^2 = span(z)
  CHECK(rows1[2].identically_zero);        // L^3 = 0
  // w = [x1, x2] on the Heisenberg algebra: nonzero at i = 1, zero for i >= 2
  DividedPolynomial w2(h, 4, 2,
                       DPNode::make_bracket({DPNode::make_var(0), DPNode::make_var(1)}));
  auto rows2 = regularity_probe(w2, 3);
  CHECK_FALSE(rows2[0].identically_zero);
  CHECK(rows2[1].identically_zero);
  CHECK(rows2[2].identically_zero);
  // on an abelian algebra the bracket vanishes at every level
  LieAlgebra ab = fixtures::abelian(5, 3);
  LieAlgebra abg = ab;
  abg.set_grading({1, 1, 1});
  DividedPolynomial w3(abg, 4, 2,
                       DPNode::make_bracket({DPNode::make_var(0), DPNode::make_var(1)}));
  for (auto& row : regularity_probe(w3, 2)) CHECK(row.identically_zero);
}

TEST_CASE("divided-power identities on one bundled family (exact operators)") {
  LieAlgebra c8 = fixtures::chain8(2);  // includes the p = 2 collapse of 2 U_2
  auto at8 = [&](const std::string& n) { return c8.basis_vec((std::size_t)c8.name_index(n)); };
  int budget = 5;
  std::vector<EnvelopeElement> elems;
  for (int i = 0; i < 3; ++i)
    elems.push_back(
        EnvelopeElement::single(c8, budget, Mask(1) << i, at8("c" + std::to_string(i + 1))));
  OmegaFamily fam = OmegaFamily::from_ad(elems);
  REQUIRE(fam.validate().ok);
  Fp f(2);
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      CHECK((fam.U(i) * fam.U(j)).equals_on(fam.U(i + j).scaled(binomial_mod(i + j, i, f)),
                                            budget));
  CHECK((fam.U(1) * fam.U(1)).equals_on(fam.U(2).scaled(2), budget));  // = 0 at p = 2
}

TEST_CASE("linearized descent verdicts stable under budget growth") {
  for (int budget : {8, 9}) {
    LieAlgebra L = fixtures::chain8(3);
    auto at = [&](const std::string& n) { return L.basis_vec((std::size_t)L.name_index(n)); };
    std::vector<EnvelopeElement> elems;
    for (int i = 0; i < 4; ++i)
      elems.push_back(
          EnvelopeElement::single(L, budget, Mask(1) << i, at("c" + std::to_string(i + 1))));
    OmegaFamily fam = OmegaFamily::from_ad(elems);
    fam.validate();
    EnvelopeElement a(L, budget);
    a.add_component(Mask(1) << 4, at("u"));
    a.add_component(Mask(1) << 5, at("v"));
    a.add_component(Mask(1) << 6, at("u"));
    a.add_component(Mask(1) << 7, at("w"));
    auto rep = linearized_kostrikin(fam, 4, a);
    CHECK(rep.hypothesis_ok);
    CHECK(rep.part1_ok);
    CHECK(rep.part2_ok);
  }
}

TEST_CASE("U_2 conjugation identity: hypotheses machine-checked") {
  LieAlgebra c6 = fixtures::chain6(5);
  auto at = [&](const std::string& n) { return c6.basis_vec((std::size_t)c6.name_index(n)); };
  int budget = 6;
  std::vector<EnvelopeElement> elems;
  for (int i = 0; i < 3; ++i)
    elems.push_back(
        EnvelopeElement::single(c6, budget, Mask(1) << i, at("c" + std::to_string(i + 1))));
  OmegaFamily fam = OmegaFamily::from_ad(elems);
  REQUIRE(fam.validate().ok);
  REQUIRE(fam.U(3).is_zero_on(budget));  // ad^[3](Omega) = 0
  REQUIRE(fam.U(4).is_zero_on(budget));
  EnvelopeOperator u2 = fam.U(2);
  CHECK_FALSE(u2.is_zero_on(budget));
  for (std::size_t i = 0; i < c6.dim(); ++i)
    for (std::size_t j = 0; j < c6.dim(); ++j) {
      EnvelopeElement y1 = EnvelopeElement::single(c6, budget, Mask(1) << 3, c6.basis_vec(i));
      EnvelopeElement y2 = EnvelopeElement::single(c6, budget, Mask(1) << 4, c6.basis_vec(j));
      EnvelopeOperator lhs = ad_operator(u2.apply(y1)) * ad_operator(u2.apply(y2));
      EnvelopeOperator rhs = u2 * ad_operator(y1) * ad_operator(y2) * u2;
      CHECK(lhs.equals_on(rhs, budget));
    }
}

TEST_CASE("square-bracket symmetry instance: char 2 included") {
  for (uint32_t p : {2u, 5u}) {
    LieAlgebra L = fixtures::strictly_upper_lie(p, 5);
    auto at = [&](const char* n) { return L.basis_vec((std::size_t)L.name_index(n)); };
    Fp f(p);
    // commuting families whose generated ideals are abelian
    std::vector<FpVec> afam{at("e12"), at("e34")};
    std::vector<FpVec> xfam{at("e23"), at("e45")};
    for (auto& u : afam)
      for (auto& v : afam) CHECK(vec_is_zero(L.bracket(u, v)));
    for (auto& u : xfam)
      for (auto& v : xfam) CHECK(vec_is_zero(L.bracket(u, v)));
    for (auto& fam : {afam, xfam})
      for (auto& g : fam) {
        Subspace ideal = ideal_closure(L, {g});
        CHECK(bracket_span(L, ideal, ideal).dim() == 0);
      }
    FpVec a = vec_add(afam[0], afam[1], f), x = vec_add(xfam[0], xfam[1], f);
    FpMatrix ad2x = L.ad(xfam[0]) * L.ad(xfam[1]);
    FpMatrix ad2a = L.ad(afam[0]) * L.ad(afam[1]);
    FpVec t1 = L.bracket(apply(a, ad2x, f), a);
    FpVec t2 = L.bracket(apply(x, ad2a, f), x);
    CHECK_FALSE(vec_is_zero(t1));  // the instance is not vacuous
    FpVec lhs = vec_add(t1, t2, f);
    // membership in [L, a, a] = image of ad(a)^2
    FpMatrix ada2 = L.ad(a) * L.ad(a);
    CHECK(solve_left(ada2, lhs).has_value());
  }
}
