#ifndef ADNIL_FORMATS_HPP
#define ADNIL_FORMATS_HPP

#include <string>
#include <vector>

#include "adnil/group.hpp"
#include "adnil/jordan.hpp"
#include "adnil/lie.hpp"
#include "adnil/liepoly.hpp"

namespace adnil {

// .lie: line-oriented, '%' comments, headers `field p=<prime>`, `dim <n>`,
// `basis <names...>`, optional `grade <d_1..d_n>`; body `bracket u v = <lin
// comb>` or raw `c i j k v` (1-based, i < j only).
LieAlgebra parse_lie_file(const std::string& text);
std::string serialize_lie(const LieAlgebra& L);

struct GroupFile {
  uint32_t p = 2;
  int degree = 0;
  std::vector<Perm> gens;
  std::vector<std::string> names;
};

// .grp: `p <prime>`, `degree <n>`, `gen <name> (<cycles>)`
GroupFile parse_group_file(const std::string& text);

// .jord: `field p=`, `dim`, `basis`, then `sq i k v`, `circ i j k v`,
// `Q i j k v` (b_j Q(b_i) += v b_k), `Qp i j k l v`.
QuadraticJordanAlgebra parse_jordan_file(const std::string& text);
std::string serialize_jordan(const QuadraticJordanAlgebra& J);

// identity expressions: expr := term | expr '+' expr | int '*' term;
// term := var | '[' expr (',' expr)+ ']'; multi-argument brackets are
// left-normed; sums inside brackets expand multilinearly.
LiePolynomial parse_identity(const std::string& text, uint32_t p);

}  // namespace adnil

#endif
