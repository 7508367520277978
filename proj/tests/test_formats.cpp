#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "adnil/fixtures.hpp"
#include "adnil/formats.hpp"

using namespace adnil;

TEST_CASE(".lie parsing: Heisenberg round trip") {
  std::string text =
      "% comment\n"
      "field p=5\n"
      "dim 3\n"
      "basis x y z\n"
      "grade 1 1 2\n"
      "bracket x y = z\n";
  LieAlgebra L = parse_lie_file(text);
  CHECK(L.dim() == 3);
  CHECK(L.validate().ok);
  CHECK(L.bracket(L.basis_vec(0), L.basis_vec(1)) == L.basis_vec(2));
  // canonical serialize -> parse -> serialize is the identity
  std::string canon = serialize_lie(L);
  LieAlgebra L2 = parse_lie_file(canon);
  CHECK(serialize_lie(L2) == canon);
}

TEST_CASE(".lie parsing: rejections") {
  CHECK_THROWS_AS(parse_lie_file("field p=4\ndim 1\n"), ParseError);  // non-prime
  CHECK_THROWS_AS(parse_lie_file("dim 1\n"), ParseError);             // missing field
  // bracket x x and wrong order are parse-level rejections (i < j required)
  std::string base = "field p=5\ndim 2\nbasis x y\n";
  CHECK_THROWS_AS(parse_lie_file(base + "bracket x x = y\n"), ParseError);
  CHECK_THROWS_AS(parse_lie_file(base + "bracket y x = x\n"), ParseError);
  CHECK_THROWS_AS(parse_lie_file(base + "c 2 1 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_lie_file(base + "bracket x q = y\n"), ParseError);
  // empty body parses as the abelian algebra
  LieAlgebra ab = parse_lie_file(base);
  CHECK(vec_is_zero(ab.bracket(ab.basis_vec(0), ab.basis_vec(1))));
}

TEST_CASE(".lie raw c-lines") {
  LieAlgebra L = parse_lie_file("field p=7\ndim 3\nc 1 2 3 2\nc 1 3 1 6\n");
  Fp f(7);
  CHECK(L.bracket(L.basis_vec(0), L.basis_vec(1)) == vec_scale(L.basis_vec(2), 2, f));
  CHECK(L.bracket(L.basis_vec(0), L.basis_vec(2)) == vec_scale(L.basis_vec(0), 6, f));
}

TEST_CASE(".grp parsing") {
  GroupFile gf = parse_group_file("p 2\ndegree 4\ngen r (1 2 3 4)\ngen s (1 3)\n");
  CHECK(gf.p == 2);
  CHECK(gf.degree == 4);
  REQUIRE(gf.gens.size() == 2);
  FiniteGroup G = enumerate_group(gf.gens, gf.names);
  CHECK(G.order() == 8);
  CHECK_THROWS_AS(parse_group_file("p 2\ndegree 3\ngen g (1 2 2)\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("p 2\ndegree 3\ngen g (1 4)\n"), ParseError);
  CHECK_THROWS_AS(parse_group_file("degree 3\n"), ParseError);
}

TEST_CASE(".jord round trip preserves the algebra") {
  QuadraticJordanAlgebra J = plus_algebra(AssocAlgebra::matrix_algebra(5, 2));
  std::string text = serialize_jordan(J);
  QuadraticJordanAlgebra J2 = parse_jordan_file(text);
  CHECK(J2.dim() == J.dim());
  for (std::size_t i = 0; i < J.dim(); ++i) {
    CHECK(J2.square(J2.basis_vec(i)) == J.square(J.basis_vec(i)));
    CHECK(J2.Qop(J2.basis_vec(i)) == J.Qop(J.basis_vec(i)));
    for (std::size_t j = i + 1; j < J.dim(); ++j) {
      CHECK(J2.circle(J2.basis_vec(i), J2.basis_vec(j)) ==
            J.circle(J.basis_vec(i), J.basis_vec(j)));
      CHECK(J2.Qpol_op(J2.basis_vec(i), J2.basis_vec(j)) ==
            J.Qpol_op(J.basis_vec(i), J.basis_vec(j)));
    }
  }
  CHECK(serialize_jordan(J2) == text);
  CHECK(verify_quadratic_jordan(J2).ok);
}

TEST_CASE("identity expression parsing") {
  LiePolynomial f = parse_identity("[x1,x2,x3] + 2*[x1,x3,x2]", 5);
  CHECK(f.nvars == 3);
  CHECK(f.terms.size() == 2);
  CHECK(f.degree() == 3);
  CHECK(f.is_multilinear());
  // multi-argument brackets are left-normed
  CHECK(tree_to_string(f.terms[0].tree, {"x1", "x2", "x3"}) == "[[x1,x2],x3]");
  // nested non-left-normed trees are accepted
  LiePolynomial g = parse_identity("[[x1,x2],[x3,x4]]", 5);
  CHECK(g.nvars == 4);
  // and normalize to Hall coordinates: [[x1,x2],[x3,x4]] =
  // [x1,x2,x3,x4]-combination in the Lyndon basis (nonzero)
  FreeLieBasis basis = hall_basis(4, 4, 5);
  CHECK_FALSE(g.hall_coordinates(basis).empty());
  // Jacobi combination normalizes to zero
  LiePolynomial jac =
      parse_identity("[[x1,x2],x3] + [[x2,x3],x1] + [[x3,x1],x2]", 5);
  CHECK(jac.hall_coordinates(basis).empty());
  // sums inside brackets expand multilinearly
  LiePolynomial h = parse_identity("[x1+x2,x3]", 7);
  CHECK(h.terms.size() == 2);
  // rejections
  CHECK_THROWS_AS(parse_identity("[x1]", 5), ParseError);
  CHECK_THROWS_AS(parse_identity("[x1,x2", 5), ParseError);
  CHECK_THROWS_AS(parse_identity("[x1,x2] junk", 5), ParseError);
  CHECK_THROWS_AS(parse_identity("5*[x1,x2]", 5), ParseError);  // reduces to zero
}
