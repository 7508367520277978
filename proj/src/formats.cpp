#include "adnil/formats.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace adnil {

namespace {

std::vector<std::pair<int, std::string>> logical_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    auto cut = line.find('%');
    if (cut != std::string::npos) line = line.substr(0, cut);
    // trim
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    auto e = line.find_last_not_of(" \t\r");
    out.emplace_back(ln, line.substr(b, e - b + 1));
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long long parse_int(const std::string& s, int ln) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (...) {
    throw ParseError("expected integer, got '" + s + "'", ln);
  }
}

// linear combination over named basis vectors: k*name | name | -name,
// joined by + and -
FpVec parse_lincomb(const std::string& s, const LieAlgebra& L, int ln) {
  Fp f(L.modulus());
  FpVec acc = L.zero();
  std::string cur;
  std::vector<std::pair<char, std::string>> terms;
  char sign = '+';
  for (std::size_t i = 0; i <= s.size(); ++i) {
    char ch = i < s.size() ? s[i] : '+';
    if (ch == '+' || (ch == '-' && !cur.empty() && i < s.size())) {
      if (!cur.empty()) terms.emplace_back(sign, cur);
      cur.clear();
      sign = ch;
    } else if (!isspace((unsigned char)ch)) {
      cur += ch;
    }
  }
  if (!cur.empty()) terms.emplace_back(sign, cur);
  for (auto& [sg, term] : terms) {
    uint32_t coeff = 1 % L.modulus();
    std::string name = term;
    auto star = term.find('*');
    if (star != std::string::npos) {
      coeff = f.reduce(parse_int(term.substr(0, star), ln));
      name = term.substr(star + 1);
    } else if (!term.empty() && (isdigit((unsigned char)term[0]) || term[0] == '-')) {
      throw ParseError("coefficient without '*basisname' in combination", ln);
    }
    int idx = L.name_index(name);
    if (idx < 0) throw ParseError("unknown basis name '" + name + "'", ln);
    if (sg == '-') coeff = f.neg(coeff);
    acc[idx] = f.add(acc[idx], coeff);
  }
  return acc;
}

}  // namespace

LieAlgebra parse_lie_file(const std::string& text) {
  auto lines = logical_lines(text);
  uint32_t p = 0;
  long long dim = -1;
  std::vector<std::string> names;
  std::vector<int> grading;
  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    auto [ln, s] = lines[i];
    auto toks = split_ws(s);
    if (toks[0] == "field") {
      if (toks.size() != 2 || toks[1].rfind("p=", 0) != 0)
        throw ParseError("expected 'field p=<prime>'", ln);
      long long v = parse_int(toks[1].substr(2), ln);
      if (v < 2 || !Fp::is_prime((uint32_t)v)) throw ParseError("p is not prime", ln);
      p = (uint32_t)v;
    } else if (toks[0] == "dim") {
      if (toks.size() != 2) throw ParseError("expected 'dim <n>'", ln);
      dim = parse_int(toks[1], ln);
      if (dim < 0) throw ParseError("negative dimension", ln);
    } else if (toks[0] == "basis") {
      names.assign(toks.begin() + 1, toks.end());
    } else if (toks[0] == "grade") {
      for (std::size_t t = 1; t < toks.size(); ++t)
        grading.push_back((int)parse_int(toks[t], ln));
    } else {
      break;  // body starts
    }
  }
  if (p == 0) throw ParseError("missing 'field p=<prime>' header");
  if (dim < 0) throw ParseError("missing 'dim <n>' header");
  LieAlgebra L(p, (std::size_t)dim);
  if (!names.empty()) {
    if ((long long)names.size() != dim) throw ParseError("basis name count != dim");
    for (std::size_t k = 0; k < names.size(); ++k) L.set_name(k, names[k]);
  }
  for (; i < lines.size(); ++i) {
    auto [ln, s] = lines[i];
    auto toks = split_ws(s);
    if (toks[0] == "bracket") {
      auto eq = s.find('=');
      if (eq == std::string::npos) throw ParseError("bracket line needs '='", ln);
      auto head = split_ws(s.substr(0, eq));
      if (head.size() != 3) throw ParseError("expected 'bracket <u> <v> = ...'", ln);
      int u = L.name_index(head[1]), v = L.name_index(head[2]);
      if (u < 0 || v < 0) throw ParseError("unknown basis name in bracket", ln);
      if (u >= v) throw ParseError("bracket entries require i < j (basis order)", ln);
      FpVec comb = parse_lincomb(s.substr(eq + 1), L, ln);
      for (std::size_t k = 0; k < L.dim(); ++k)
        if (comb[k]) L.add_structure((std::size_t)u, (std::size_t)v, k, comb[k]);
    } else if (toks[0] == "c") {
      if (toks.size() != 5) throw ParseError("expected 'c i j k v'", ln);
      long long ci = parse_int(toks[1], ln), cj = parse_int(toks[2], ln),
                ck = parse_int(toks[3], ln), cv = parse_int(toks[4], ln);
      if (ci < 1 || cj < 1 || ck < 1 || ci > dim || cj > dim || ck > dim)
        throw ParseError("c indices out of range", ln);
      if (ci >= cj) throw ParseError("c entries require i < j", ln);
      Fp f(p);
      L.add_structure((std::size_t)(ci - 1), (std::size_t)(cj - 1), (std::size_t)(ck - 1),
                      f.reduce(cv));
    } else {
      throw ParseError("unknown directive '" + toks[0] + "'", ln);
    }
  }
  if (!grading.empty()) {
    if ((long long)grading.size() != dim) throw ParseError("grade count != dim");
    L.set_grading(grading);
  }
  return L;
}

std::string serialize_lie(const LieAlgebra& L) {
  std::ostringstream out;
  out << "field p=" << L.modulus() << "\n";
  out << "dim " << L.dim() << "\n";
  out << "basis";
  for (std::size_t i = 0; i < L.dim(); ++i) out << " " << L.name(i);
  out << "\n";
  if (L.graded()) {
    out << "grade";
    for (int d : L.grading()) out << " " << d;
    out << "\n";
  }
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      FpVec t = L.basis_bracket(i, j);
      if (vec_is_zero(t)) continue;
      out << "bracket " << L.name(i) << " " << L.name(j) << " =";
      bool first = true;
      for (std::size_t k = 0; k < L.dim(); ++k)
        if (t[k]) {
          out << (first ? " " : " + ") << t[k] << "*" << L.name(k);
          first = false;
        }
      out << "\n";
    }
  return out.str();
}

GroupFile parse_group_file(const std::string& text) {
  GroupFile gf;
  bool have_p = false, have_degree = false;
  for (auto& [ln, s] : logical_lines(text)) {
    auto toks = split_ws(s);
    if (toks[0] == "p") {
      if (toks.size() != 2) throw ParseError("expected 'p <prime>'", ln);
      long long v = parse_int(toks[1], ln);
      if (!Fp::is_prime((uint32_t)v)) throw ParseError("p is not prime", ln);
      gf.p = (uint32_t)v;
      have_p = true;
    } else if (toks[0] == "degree") {
      if (toks.size() != 2) throw ParseError("expected 'degree <n>'", ln);
      gf.degree = (int)parse_int(toks[1], ln);
      if (gf.degree < 1) throw ParseError("degree must be >= 1", ln);
      have_degree = true;
    } else if (toks[0] == "gen") {
      if (!have_degree) throw ParseError("'gen' before 'degree'", ln);
      auto open = s.find('(');
      if (open == std::string::npos) throw ParseError("gen needs cycle notation", ln);
      auto head = split_ws(s.substr(0, open));
      if (head.size() != 2) throw ParseError("expected 'gen <name> (<cycles>)'", ln);
      Perm perm = perm_identity(gf.degree);
      std::vector<bool> used(gf.degree, false);
      std::string rest = s.substr(open);
      std::size_t pos = 0;
      while (pos < rest.size()) {
        if (isspace((unsigned char)rest[pos])) {
          ++pos;
          continue;
        }
        if (rest[pos] != '(') throw ParseError("expected '(' in cycles", ln);
        auto close = rest.find(')', pos);
        if (close == std::string::npos) throw ParseError("unbalanced cycle", ln);
        auto nums = split_ws(rest.substr(pos + 1, close - pos - 1));
        std::vector<int> cyc;
        for (auto& n : nums) {
          long long v = parse_int(n, ln);
          if (v < 1 || v > gf.degree) throw ParseError("cycle point out of range", ln);
          cyc.push_back((int)v - 1);
        }
        for (std::size_t t = 0; t < cyc.size(); ++t) {
          if (used[cyc[t]]) throw ParseError("point repeated in generator", ln);
          used[cyc[t]] = true;
          perm[cyc[t]] = cyc[(t + 1) % cyc.size()];
        }
        pos = close + 1;
      }
      if (!is_permutation(perm)) throw ParseError("generator is not a permutation", ln);
      gf.gens.push_back(perm);
      gf.names.push_back(head[1]);
    } else {
      throw ParseError("unknown directive '" + toks[0] + "'", ln);
    }
  }
  if (!have_p) throw ParseError("missing 'p <prime>'");
  if (!have_degree) throw ParseError("missing 'degree <n>'");
  return gf;
}

QuadraticJordanAlgebra parse_jordan_file(const std::string& text) {
  auto lines = logical_lines(text);
  uint32_t p = 0;
  long long dim = -1;
  std::vector<std::string> names;
  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    auto [ln, s] = lines[i];
    auto toks = split_ws(s);
    if (toks[0] == "field" && toks.size() == 2 && toks[1].rfind("p=", 0) == 0) {
      long long v = parse_int(toks[1].substr(2), ln);
      if (!Fp::is_prime((uint32_t)v)) throw ParseError("p is not prime", ln);
      p = (uint32_t)v;
    } else if (toks[0] == "dim" && toks.size() == 2) {
      dim = parse_int(toks[1], ln);
    } else if (toks[0] == "basis") {
      names.assign(toks.begin() + 1, toks.end());
    } else {
      break;
    }
  }
  if (p == 0 || dim < 0) throw ParseError("missing headers in .jord file");
  QuadraticJordanAlgebra J(p, (std::size_t)dim);
  if (!names.empty()) {
    if ((long long)names.size() != dim) throw ParseError("basis name count != dim");
    for (std::size_t k = 0; k < names.size(); ++k) J.set_name(k, names[k]);
  }
  Fp f(p);
  std::vector<FpVec> sq((std::size_t)dim, FpVec((std::size_t)dim, 0));
  std::vector<std::vector<FpVec>> circ((std::size_t)dim,
                                       std::vector<FpVec>((std::size_t)dim, FpVec(dim, 0)));
  std::vector<FpMatrix> Qb((std::size_t)dim, FpMatrix(p, (std::size_t)dim, (std::size_t)dim));
  std::vector<std::vector<FpMatrix>> Qp(
      (std::size_t)dim,
      std::vector<FpMatrix>((std::size_t)dim, FpMatrix(p, (std::size_t)dim, (std::size_t)dim)));
  auto index = [&](long long v, int ln) {
    if (v < 1 || v > dim) throw ParseError(".jord index out of range", ln);
    return (std::size_t)(v - 1);
  };
  for (; i < lines.size(); ++i) {
    auto [ln, s] = lines[i];
    auto toks = split_ws(s);
    if (toks[0] == "sq" && toks.size() == 4) {
      auto bi = index(parse_int(toks[1], ln), ln), bk = index(parse_int(toks[2], ln), ln);
      sq[bi][bk] = f.add(sq[bi][bk], f.reduce(parse_int(toks[3], ln)));
    } else if (toks[0] == "circ" && toks.size() == 5) {
      auto bi = index(parse_int(toks[1], ln), ln), bj = index(parse_int(toks[2], ln), ln),
           bk = index(parse_int(toks[3], ln), ln);
      if (bi >= bj) throw ParseError("circ entries require i < j", ln);
      circ[bi][bj][bk] = f.add(circ[bi][bj][bk], f.reduce(parse_int(toks[4], ln)));
    } else if (toks[0] == "Q" && toks.size() == 5) {
      auto bi = index(parse_int(toks[1], ln), ln), bj = index(parse_int(toks[2], ln), ln),
           bk = index(parse_int(toks[3], ln), ln);
      Qb[bi].at(bj, bk) = f.add(Qb[bi].at(bj, bk), f.reduce(parse_int(toks[4], ln)));
    } else if (toks[0] == "Qp" && toks.size() == 6) {
      auto bi = index(parse_int(toks[1], ln), ln), bj = index(parse_int(toks[2], ln), ln),
           bk = index(parse_int(toks[3], ln), ln), bl = index(parse_int(toks[4], ln), ln);
      if (bi >= bj) throw ParseError("Qp entries require i < j", ln);
      Qp[bi][bj].at(bk, bl) = f.add(Qp[bi][bj].at(bk, bl), f.reduce(parse_int(toks[5], ln)));
    } else {
      throw ParseError("unknown .jord directive '" + toks[0] + "'", ln);
    }
  }
  for (std::size_t a = 0; a < (std::size_t)dim; ++a) {
    J.set_square(a, sq[a]);
    J.set_Q(a, Qb[a]);
    for (std::size_t b = a + 1; b < (std::size_t)dim; ++b) {
      J.set_circle(a, b, circ[a][b]);
      J.set_Qpol(a, b, Qp[a][b]);
    }
  }
  return J;
}

std::string serialize_jordan(const QuadraticJordanAlgebra& J) {
  std::ostringstream out;
  std::size_t d = J.dim();
  out << "field p=" << J.modulus() << "\n";
  out << "dim " << d << "\n";
  out << "basis";
  for (std::size_t i = 0; i < d; ++i) out << " " << J.name(i);
  out << "\n";
  for (std::size_t i = 0; i < d; ++i) {
    FpVec s = J.square(J.basis_vec(i));
    for (std::size_t k = 0; k < d; ++k)
      if (s[k]) out << "sq " << i + 1 << " " << k + 1 << " " << s[k] << "\n";
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      FpVec c = J.circle(J.basis_vec(i), J.basis_vec(j));
      for (std::size_t k = 0; k < d; ++k)
        if (c[k]) out << "circ " << i + 1 << " " << j + 1 << " " << k + 1 << " " << c[k] << "\n";
    }
  for (std::size_t i = 0; i < d; ++i) {
    const FpMatrix& m = J.Q_basis(i);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        if (m.at(r, c))
          out << "Q " << i + 1 << " " << r + 1 << " " << c + 1 << " " << m.at(r, c) << "\n";
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      FpMatrix m = J.Qpol_op(J.basis_vec(i), J.basis_vec(j));
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          if (m.at(r, c))
            out << "Qp " << i + 1 << " " << j + 1 << " " << r + 1 << " " << c + 1 << " "
                << m.at(r, c) << "\n";
    }
  return out.str();
}

namespace {

// recursive-descent identity parser producing sum-of-trees with
// multilinear expansion of sums inside brackets
struct IdParser {
  const std::string& s;
  uint32_t p;
  std::size_t pos = 0;
  int max_var = -1;

  explicit IdParser(const std::string& str, uint32_t prime) : s(str), p(prime) {}

  void skip_ws() {
    while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(pos));
    ++pos;
  }

  using Terms = std::vector<LiePolynomial::Term>;

  Terms parse_expr() {
    Terms acc = parse_product();
    while (true) {
      skip_ws();
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        char op = s[pos++];
        Terms rhs = parse_product();
        Fp f(p);
        for (auto& t : rhs) {
          if (op == '-') t.coeff = f.neg(t.coeff);
          acc.push_back(t);
        }
      } else {
        break;
      }
    }
    return acc;
  }

  Terms parse_product() {
    skip_ws();
    // optional integer coefficient followed by '*'
    uint32_t coeff = 1 % p;
    bool neg = false;
    std::size_t save = pos;
    if (pos < s.size() && (s[pos] == '-' || isdigit((unsigned char)s[pos]))) {
      if (s[pos] == '-') {
        neg = true;
        ++pos;
      }
      std::string digits;
      while (pos < s.size() && isdigit((unsigned char)s[pos])) digits += s[pos++];
      skip_ws();
      if (!digits.empty() && pos < s.size() && s[pos] == '*') {
        ++pos;
        Fp f(p);
        coeff = f.reduce(std::stoll(digits));
        if (neg) coeff = f.neg(coeff);
      } else {
        pos = save;  // not a coefficient
      }
    }
    Terms base = parse_term();
    if (coeff != 1 % p) {
      Fp f(p);
      for (auto& t : base) t.coeff = f.mul(t.coeff, coeff);
    }
    return base;
  }

  Terms parse_term() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("unexpected end of expression");
    if (s[pos] == '[') {
      ++pos;
      std::vector<Terms> parts;
      parts.push_back(parse_expr());
      while (peek(',')) {
        expect(',');
        parts.push_back(parse_expr());
      }
      expect(']');
      if (parts.size() < 2) throw ParseError("brackets need >= 2 arguments");
      // left-normed fold with multilinear expansion
      Terms acc = parts[0];
      Fp f(p);
      for (std::size_t k = 1; k < parts.size(); ++k) {
        Terms next;
        for (const auto& lt : acc)
          for (const auto& rt : parts[k])
            next.push_back({f.mul(lt.coeff, rt.coeff), BTree::node(lt.tree, rt.tree)});
        acc = std::move(next);
      }
      return acc;
    }
    if (s[pos] == 'x') {
      ++pos;
      std::string digits;
      while (pos < s.size() && isdigit((unsigned char)s[pos])) digits += s[pos++];
      if (digits.empty()) throw ParseError("variable must look like x<k>");
      int idx = (int)std::stoll(digits) - 1;
      if (idx < 0) throw ParseError("variable index must be >= 1");
      max_var = std::max(max_var, idx);
      return {{1 % p, BTree::var(idx)}};
    }
    throw ParseError("unknown token at position " + std::to_string(pos));
  }
};

}  // namespace

LiePolynomial parse_identity(const std::string& text, uint32_t p) {
  IdParser parser(text, p);
  LiePolynomial out;
  out.p = p;
  out.terms = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != text.size()) throw ParseError("trailing input after expression");
  out.nvars = parser.max_var + 1;
  // drop zero-coefficient terms
  std::vector<LiePolynomial::Term> kept;
  for (auto& t : out.terms)
    if (t.coeff != 0) kept.push_back(t);
  out.terms = std::move(kept);
  if (out.terms.empty()) throw ParseError("expression is identically zero after reduction");
  return out;
}

}  // namespace adnil
