#include "adnil/group.hpp"

#include <algorithm>

namespace adnil {

Perm perm_identity(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

Perm perm_compose(const Perm& g, const Perm& h) {
  if (g.size() != h.size()) throw StructureError("perm_compose: degree mismatch");
  Perm r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = h[g[i]];
  return r;
}

Perm perm_inverse(const Perm& g) {
  Perm r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[g[i]] = (int)i;
  return r;
}

bool is_permutation(const Perm& g) {
  std::vector<bool> seen(g.size(), false);
  for (int x : g) {
    if (x < 0 || (std::size_t)x >= g.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

int FiniteGroup::inverse(int i) const {
  for (int j = 0; j < order(); ++j)
    if (mult[i][j] == identity()) return j;
  throw StructureError("FiniteGroup: element without inverse");
}

int FiniteGroup::commutator(int g, int h) const {
  return mult[mult[mult[inverse(g)][inverse(h)]][g]][h];
}

int FiniteGroup::power(int g, uint64_t e) const {
  int r = identity(), b = g;
  while (e) {
    if (e & 1) r = mult[r][b];
    b = mult[b][b];
    e >>= 1;
  }
  return r;
}

int FiniteGroup::element_order(int g) const {
  int acc = g, n = 1;
  while (acc != identity()) {
    acc = mult[acc][g];
    ++n;
  }
  return n;
}

std::optional<std::array<int, 3>> FiniteGroup::associativity_witness() const {
  int n = order();
  auto check = [&](int i, int j, int k) { return mult[mult[i][j]][k] == mult[i][mult[j][k]]; };
  if (n <= 256) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (!check(i, j, k)) return std::array<int, 3>{i, j, k};
  } else {
    uint64_t state = 0x9e3779b97f4a7c15ull;
    for (int t = 0; t < 100000; ++t) {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      int i = (int)(state % n), j = (int)((state >> 20) % n), k = (int)((state >> 40) % n);
      if (!check(i, j, k)) return std::array<int, 3>{i, j, k};
    }
  }
  return std::nullopt;
}

bool FiniteGroup::is_p_group(uint32_t p) const {
  int n = order();
  while (n % (int)p == 0) n /= (int)p;
  return n == 1;
}

FiniteGroup enumerate_group(const std::vector<Perm>& gens,
                            const std::vector<std::string>& gen_names, int cap) {
  if (cap < 1) throw StructureError("enumerate_group: cap must be >= 1");
  int degree = gens.empty() ? 1 : (int)gens[0].size();
  for (const auto& g : gens) {
    if ((int)g.size() != degree) throw StructureError("enumerate_group: mixed degrees");
    if (!is_permutation(g)) throw StructureError("enumerate_group: input is not a permutation");
  }
  FiniteGroup G;
  G.degree = degree;
  std::map<Perm, int> index;
  G.elements.push_back(perm_identity(degree));
  G.words.push_back("1");
  index[G.elements[0]] = 0;
  // BFS by word length; generator order fixes the lexicographic order
  std::size_t frontier_begin = 0;
  while (frontier_begin < G.elements.size()) {
    std::size_t frontier_end = G.elements.size();
    for (std::size_t e = frontier_begin; e < frontier_end; ++e)
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        Perm cand = perm_compose(G.elements[e], gens[gi]);
        if (index.count(cand)) continue;
        if ((int)G.elements.size() >= cap)
          throw BudgetError("enumerate_group: order exceeds cap " + std::to_string(cap));
        index[cand] = (int)G.elements.size();
        G.elements.push_back(cand);
        std::string base = G.words[e] == "1" ? "" : G.words[e] + "*";
        std::string gname = gi < gen_names.size() ? gen_names[gi] : "g" + std::to_string(gi + 1);
        G.words.push_back(base + gname);
      }
    frontier_begin = frontier_end;
  }
  int n = G.order();
  G.mult.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      G.mult[i][j] = index.at(perm_compose(G.elements[i], G.elements[j]));
  return G;
}

}  // namespace adnil
