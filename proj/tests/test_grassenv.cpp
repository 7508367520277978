#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "adnil/fixtures.hpp"
#include "adnil/omega.hpp"

using namespace adnil;

TEST_CASE("e_product relations") {
  CHECK(e_product(0b01, 0b10) == Mask(0b11));            // {1}.{2} = {1,2}
  CHECK_FALSE(e_product(0b01, 0b01).has_value());        // e_1^2 = 0
  CHECK(e_product(0b101, 0b010) == Mask(0b111));         // {1,3}.{2} = {1,2,3}
  CHECK_THROWS_AS(e_product(0, 0b1), StructureError);    // no empty products
}

TEST_CASE("envelope bracket on the Heisenberg algebra") {
  LieAlgebra h = fixtures::heisenberg(5);
  int budget = 3;
  EnvelopeElement xe1 = EnvelopeElement::single(h, budget, 0b01, h.basis_vec(0));
  EnvelopeElement ye2 = EnvelopeElement::single(h, budget, 0b10, h.basis_vec(1));
  EnvelopeElement ye1 = EnvelopeElement::single(h, budget, 0b01, h.basis_vec(1));
  EnvelopeElement r = envelope_bracket(xe1, ye2);
  auto dec = r.standard_decomposition();
  REQUIRE(dec.size() == 1);
  CHECK(dec[0].first == 0b11);
  CHECK(dec[0].second == h.basis_vec(2));  // z (x) e12
  CHECK(envelope_bracket(xe1, ye1).is_zero());  // e_1^2 = 0
  EnvelopeElement a = xe1 + ye2;
  CHECK(envelope_bracket(a, a).is_zero());  // alternation + mask overlap
}

TEST_CASE("standard decomposition is canonical") {
  LieAlgebra h = fixtures::heisenberg(2);
  EnvelopeElement a(h, 4);
  a.add_component(0b10, h.basis_vec(1));
  a.add_component(0b01, h.basis_vec(0));
  auto dec = a.standard_decomposition();
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].first < dec[1].first);  // sorted masks
  // reassembly returns the element
  EnvelopeElement b(h, 4);
  for (auto& [m, v] : dec) b.add_component(m, v);
  CHECK(a == b);
  CHECK(EnvelopeElement(h, 4).standard_decomposition().empty());
  // x (x) e1 + x (x) e1 over F_2 collapses to zero
  EnvelopeElement c(h, 4);
  c.add_component(0b01, h.basis_vec(0));
  c.add_component(0b01, h.basis_vec(0));
  CHECK(c.is_zero());
}

TEST_CASE("Grassmann nilpotence: any k+1 monomial product vanishes") {
  LieAlgebra h = fixtures::heisenberg(5);
  int budget = 3;
  EnvelopeElement a = EnvelopeElement::single(h, budget, 0b001, h.basis_vec(0));
  EnvelopeElement chained = a.e_scaled(0b010).e_scaled(0b100);
  CHECK_FALSE(chained.is_zero());
  CHECK(chained.e_scaled(0b001).is_zero());  // would need a fourth generator
}

TEST_CASE("support additivity of brackets") {
  LieAlgebra n4 = fixtures::strictly_upper_lie(5, 4);
  auto at = [&](const char* n) { return n4.basis_vec((std::size_t)n4.name_index(n)); };
  EnvelopeElement a(n4, 5);
  a.add_component(0b00001, at("e12"));
  a.add_component(0b00110, at("e23"));
  EnvelopeElement b = EnvelopeElement::single(n4, 5, 0b01000, at("e34"));
  for (auto& [m, v] : envelope_bracket(a, b).standard_decomposition()) {
    bool from_pair = (m == (0b00001 | 0b01000)) || (m == (0b00110 | 0b01000));
    CHECK(from_pair);
  }
}

TEST_CASE("operator block calculus") {
  LieAlgebra h = fixtures::heisenberg(5);
  int budget = 3;
  EnvelopeOperator id = EnvelopeOperator::identity(5, 3);
  EnvelopeOperator adx = EnvelopeOperator::block(0b01, h.ad(h.basis_vec(0)));
  // composition merges masks; overlapping masks annihilate
  CHECK((adx * adx).is_zero_on(budget));
  CHECK((id * adx).equals_on(adx, budget));
  // a composition that survives, on the 6-dim nilpotent n_4:
  // e34 ad(e23) ad(e12) = [[e34, e23], e12] = [-e24, e12] = e14
  LieAlgebra n4 = fixtures::strictly_upper_lie(5, 4);
  auto at = [&](const char* n) { return n4.basis_vec((std::size_t)n4.name_index(n)); };
  EnvelopeOperator a1 = EnvelopeOperator::block(0b01, n4.ad(at("e23")));
  EnvelopeOperator a2 = EnvelopeOperator::block(0b10, n4.ad(at("e12")));
  CHECK_FALSE((a1 * a2).is_zero_on(budget));
  // blocks of weight >= budget are unobservable
  EnvelopeOperator deep = EnvelopeOperator::block(0b111, h.ad(h.basis_vec(0)));
  CHECK(deep.is_zero_on(3));
  CHECK_FALSE(deep.is_zero_on(4));
}

TEST_CASE("flattening is faithful") {
  LieAlgebra h = fixtures::heisenberg(3);
  int budget = 3;
  EnvelopeFlattening flat(h, budget);
  CHECK(flat.total_dim() == 7 * 3);
  EnvelopeElement a(h, budget);
  a.add_component(0b011, h.basis_vec(2));
  a.add_component(0b100, h.basis_vec(0));
  CHECK(flat.unflatten(flat.flatten(a)) == a);
  EnvelopeOperator adx = EnvelopeOperator::block(0b010, h.ad(h.basis_vec(1)));
  FpMatrix m = flat.flatten_operator(adx);
  Fp f(3);
  CHECK(flat.unflatten(apply(flat.flatten(a), m, f)) == adx.apply(a));
}

TEST_CASE("operator composition matches two-step application") {
  // v (A B) = (v A) B under the row convention, for random block operators
  std::mt19937_64 rng(99);
  LieAlgebra L = fixtures::strictly_upper_lie(5, 4);
  int budget = 5;
  auto random_elem = [&] {
    EnvelopeElement e(L, budget);
    int comps = 1 + (int)(rng() % 3);
    for (int c = 0; c < comps; ++c) {
      FpVec v(L.dim());
      for (auto& x : v) x = (uint32_t)(rng() % 5);
      e.add_component(Mask(1) << (rng() % budget), v);
    }
    return e;
  };
  for (int trial = 0; trial < 20; ++trial) {
    EnvelopeElement a = random_elem(), b = random_elem(), x = random_elem();
    EnvelopeOperator A = ad_operator(a), B = ad_operator(b);
    CHECK((A * B).apply(x) == B.apply(A.apply(x)));
    // operator form of the Jacobi identity: ad([a,b]) = ad(a)ad(b) - ad(b)ad(a)
    CHECK(ad_operator(envelope_bracket(a, b)).equals_on(A.commutator(B), budget));
    // associativity of composition
    EnvelopeOperator C = ad_operator(x);
    CHECK(((A * B) * C).equals_on(A * (B * C), budget));
  }
}

TEST_CASE("validate_omega examples") {
  // abelian algebra: everything commutes
  LieAlgebra ab = fixtures::abelian(5, 3);
  OmegaFamily fam1 = OmegaFamily::from_ad(
      {EnvelopeElement::single(ab, 4, 0b01, ab.basis_vec(0)),
       EnvelopeElement::single(ab, 4, 0b10, ab.basis_vec(1))});
  CHECK(fam1.validate().ok);

  // Heisenberg, same mask: products vanish by mask collision, so anchoring holds
  LieAlgebra h = fixtures::heisenberg(5);
  OmegaFamily fam2 = OmegaFamily::from_ad(
      {EnvelopeElement::single(h, 4, 0b01, h.basis_vec(0)),
       EnvelopeElement::single(h, 4, 0b01, h.basis_vec(1))});
  CHECK(fam2.validate().ok);

  // Heisenberg, disjoint masks: the operator commutator is ad([x,y] (x) e12)
  // = ad(z (x) e12), and ad(z) = 0 since z is central; the family commutes
  OmegaFamily fam3 = OmegaFamily::from_ad(
      {EnvelopeElement::single(h, 4, 0b01, h.basis_vec(0)),
       EnvelopeElement::single(h, 4, 0b10, h.basis_vec(1))});
  CHECK(envelope_bracket(EnvelopeElement::single(h, 4, 0b01, h.basis_vec(0)),
                         EnvelopeElement::single(h, 4, 0b10, h.basis_vec(1)))
            .standard_decomposition()[0]
            .second == h.basis_vec(2));
  CHECK(h.ad(h.basis_vec(2)).is_zero());
  CHECK(fam3.validate().ok);
  // a genuine commuting violation: ad([e, h]) = -2 ad(e) != 0 in sl_2
  LieAlgebra s = fixtures::sl2(7);
  OmegaFamily fam4 = OmegaFamily::from_ad(
      {EnvelopeElement::single(s, 4, 0b01, s.basis_vec(0)),
       EnvelopeElement::single(s, 4, 0b10, s.basis_vec(1))});
  auto rep = fam4.validate();
  CHECK_FALSE(rep.ok);
  REQUIRE_FALSE(rep.violations.empty());
  CHECK(rep.violations[0].kind == "commutator");
}

TEST_CASE("U_k basics") {
  LieAlgebra h = fixtures::heisenberg(5);
  OmegaFamily fam = OmegaFamily::from_ad(
      {EnvelopeElement::single(h, 4, 0b01, h.basis_vec(0))});
  fam.validate();
  CHECK(fam.U(0).equals_on(EnvelopeOperator::identity(5, 3), 4));  // U_0 = Id
  CHECK(fam.U(2).is_zero_on(4));  // no 2-subsets of a singleton
  // U_1 U_1 = 2 U_2 (both vanish here, checked as operators)
  CHECK((fam.U(1) * fam.U(1)).equals_on(fam.U(2).scaled(2), 4));
  OmegaFamily unvalidated(5, 3, 4);
  unvalidated.add_member({EnvelopeOperator::block(0b01, h.ad(h.basis_vec(0))), 0, "m"});
  CHECK_THROWS_AS(unvalidated.U(1), StructureError);
}

TEST_CASE("envelope automorphism") {
  LieAlgebra h = fixtures::heisenberg(5);
  int budget = 4;
  // zero element: identity operator
  EnvelopeElement zero(h, budget);
  CHECK(envelope_automorphism(zero).equals_on(EnvelopeOperator::identity(5, 3), budget));
  // single component: A = Id + ad(x (x) e1)
  EnvelopeElement xe1 = EnvelopeElement::single(h, budget, 0b01, h.basis_vec(0));
  EnvelopeOperator A = envelope_automorphism(xe1);
  EnvelopeOperator expect = EnvelopeOperator::identity(5, 3) + ad_operator(xe1);
  CHECK(A.equals_on(expect, budget));
  // non-commuting components are rejected
  EnvelopeElement bad = xe1 + EnvelopeElement::single(h, budget, 0b10, h.basis_vec(1));
  CHECK_THROWS_AS(envelope_automorphism(bad), HypothesisError);
}
