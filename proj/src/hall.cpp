#include "adnil/hall.hpp"

#include <algorithm>

#include "adnil/error.hpp"

namespace adnil {

BTreePtr BTree::var(int v) {
  auto t = std::make_shared<BTree>();
  t->leaf = v;
  return t;
}

BTreePtr BTree::node(BTreePtr a, BTreePtr b) {
  auto t = std::make_shared<BTree>();
  t->l = std::move(a);
  t->r = std::move(b);
  return t;
}

int tree_degree(const BTreePtr& t) {
  if (t->leaf >= 0) return 1;
  return tree_degree(t->l) + tree_degree(t->r);
}

static void collect_degrees(const BTreePtr& t, std::vector<int>& deg) {
  if (t->leaf >= 0) {
    if ((std::size_t)t->leaf >= deg.size()) deg.resize(t->leaf + 1, 0);
    deg[t->leaf]++;
    return;
  }
  collect_degrees(t->l, deg);
  collect_degrees(t->r, deg);
}

std::vector<int> tree_multidegree(const BTreePtr& t, int nvars) {
  std::vector<int> deg(nvars, 0);
  collect_degrees(t, deg);
  if ((int)deg.size() > nvars) throw StructureError("tree_multidegree: variable out of range");
  deg.resize(nvars, 0);
  return deg;
}

std::string tree_to_string(const BTreePtr& t, const std::vector<std::string>& var_names) {
  if (t->leaf >= 0) {
    if ((std::size_t)t->leaf < var_names.size()) return var_names[t->leaf];
    return "x" + std::to_string(t->leaf + 1);
  }
  return "[" + tree_to_string(t->l, var_names) + "," + tree_to_string(t->r, var_names) + "]";
}

static void assoc_add(AssocPoly& dst, const Word& w, uint32_t c, const Fp& f) {
  auto it = dst.find(w);
  uint32_t v = f.add(it == dst.end() ? 0 : it->second, c);
  if (v == 0) {
    if (it != dst.end()) dst.erase(it);
  } else {
    dst[w] = v;
  }
}

AssocPoly assoc_expand(const BTreePtr& t, const Fp& f) {
  if (t->leaf >= 0) return {{Word{(uint8_t)t->leaf}, 1 % f.modulus()}};
  AssocPoly a = assoc_expand(t->l, f), b = assoc_expand(t->r, f);
  AssocPoly out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word ab = wa, ba = wb;
      ab.insert(ab.end(), wb.begin(), wb.end());
      ba.insert(ba.end(), wa.begin(), wa.end());
      uint32_t c = f.mul(ca, cb);
      assoc_add(out, ab, c, f);
      assoc_add(out, ba, f.neg(c), f);
    }
  return out;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  std::size_t n = w.size();
  for (std::size_t i = 1; i < n; ++i) {
    Word rot(w.begin() + i, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + i);
    if (!(w < rot)) return false;
  }
  return true;
}

std::pair<Word, Word> lyndon_factorize(const Word& w) {
  if (w.size() < 2) throw StructureError("lyndon_factorize: word too short");
  // longest proper suffix that is Lyndon
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v(w.begin() + i, w.end());
    if (is_lyndon(v)) return {Word(w.begin(), w.begin() + i), v};
  }
  throw StructureError("lyndon_factorize: input not Lyndon");
}

BTreePtr lyndon_bracketing(const Word& w) {
  if (w.size() == 1) return BTree::var(w[0]);
  auto [u, v] = lyndon_factorize(w);
  return BTree::node(lyndon_bracketing(u), lyndon_bracketing(v));
}

uint64_t witt_dimension(int m, int d) {
  auto mobius = [](int n) {
    int result = 1;
    for (int q = 2; q * q <= n; ++q) {
      if (n % q == 0) {
        n /= q;
        if (n % q == 0) return 0;
        result = -result;
      }
    }
    if (n > 1) result = -result;
    return result;
  };
  long long total = 0;
  for (int e = 1; e <= d; ++e) {
    if (d % e) continue;
    long long pw = 1;
    for (int i = 0; i < d / e; ++i) pw *= m;
    total += mobius(e) * pw;
  }
  return (uint64_t)(total / d);
}

FreeLieBasis::FreeLieBasis(int m, int degmax, uint32_t p) : m_(m), degmax_(degmax), p_(p) {
  if (m < 1 || degmax < 1) throw StructureError("FreeLieBasis: need m >= 1, degmax >= 1");
  if (m > 255) throw StructureError("FreeLieBasis: too many generators");
  // Duval's algorithm lists Lyndon words in lex order; collect up to degmax
  // then sort by (degree, lex).
  std::vector<Word> all;
  Word w{0};
  while (!w.empty()) {
    if ((int)w.size() <= degmax) all.push_back(w);
    Word t = w;
    while ((int)t.size() < degmax) t.push_back(t[t.size() % w.size()]);
    while (!t.empty() && t.back() == (uint8_t)(m - 1)) t.pop_back();
    if (!t.empty()) t.back()++;
    w = t;
  }
  std::sort(all.begin(), all.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  words_ = std::move(all);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    trees_.push_back(lyndon_bracketing(words_[i]));
    index_[words_[i]] = i;
  }
}

std::size_t FreeLieBasis::count_of_degree(int d) const {
  std::size_t n = 0;
  for (const auto& w : words_)
    if ((int)w.size() == d) ++n;
  return n;
}

int FreeLieBasis::index_of_word(const Word& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : (int)it->second;
}

FreeLieBasis::Coords FreeLieBasis::from_assoc(const AssocPoly& poly) const {
  Fp f(p_);
  AssocPoly rem = poly;
  // drop degrees beyond the truncation
  for (auto it = rem.begin(); it != rem.end();)
    it = ((int)it->first.size() > degmax_) ? rem.erase(it) : std::next(it);
  Coords out;
  while (!rem.empty()) {
    // lexicographically least word of the lowest degree present
    auto best = rem.begin();
    for (auto it = rem.begin(); it != rem.end(); ++it)
      if (it->first.size() < best->first.size() ||
          (it->first.size() == best->first.size() && it->first < best->first))
        best = it;
    Word w = best->first;
    uint32_t c = best->second;
    int idx = index_of_word(w);
    if (idx < 0 || !is_lyndon(w))
      throw StructureError("from_assoc: leading word is not a Lyndon basis word; input is not a Lie element");
    out[(std::size_t)idx] = c;
    AssocPoly exp = assoc_expand(trees_[idx], f);
    for (const auto& [ew, ec] : exp) assoc_add(rem, ew, f.neg(f.mul(c, ec)), f);
  }
  return out;
}

FreeLieBasis::Coords FreeLieBasis::from_tree(const BTreePtr& t) const {
  if (tree_degree(t) > degmax_) return {};
  Fp f(p_);
  return from_assoc(assoc_expand(t, f));
}

FreeLieBasis::Coords FreeLieBasis::free_bracket(std::size_t i, std::size_t j) const {
  if ((int)(words_[i].size() + words_[j].size()) > degmax_) return {};
  return from_tree(BTree::node(trees_[i], trees_[j]));
}

FreeLieBasis hall_basis(int m, int degmax, uint32_t p) { return FreeLieBasis(m, degmax, p); }

}  // namespace adnil
