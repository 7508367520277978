#include "adnil/sandwich.hpp"

#include <algorithm>
#include <map>

namespace adnil {

bool sandwich_check(const LieAlgebra& L, const FpVec& a) {
  FpMatrix ada = L.ad(a);
  if (!(ada * ada).is_zero()) return false;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    FpMatrix adb = L.ad(L.basis_vec(i));
    if (!(ada * adb * ada).is_zero()) return false;
  }
  return true;
}

bool sandwich_check(const EnvelopeElement& a) {
  const LieAlgebra& L = a.base();
  int budget = a.budget();
  EnvelopeOperator ada = ad_operator(a);
  if (!(ada * ada).is_zero_on(budget)) return false;
  // b ranges over a basis of L~: single-mask basis elements. By linearity it
  // suffices to range the middle factor over blocks (tau, ad(b_i)).
  for (std::size_t i = 0; i < L.dim(); ++i) {
    FpMatrix adb = L.ad(L.basis_vec(i));
    for (Mask tau = 1; tau < (Mask(1) << budget); ++tau) {
      EnvelopeOperator mid = EnvelopeOperator::block(tau, adb);
      if (!(ada * mid * ada).is_zero_on(budget)) return false;
    }
  }
  return true;
}

std::vector<KostrikinEntry> kostrikin_descent(const LieAlgebra& L, const FpVec& a, int n) {
  uint32_t p = L.modulus();
  if (n < 4 || (uint64_t)n >= p)
    throw HypothesisError("kostrikin_descent: need 4 <= n < p (got n=" + std::to_string(n) +
                          ", p=" + std::to_string(p) + ")");
  FpMatrix ada = L.ad(a);
  if (!ada.pow(n).is_zero())
    throw HypothesisError("kostrikin_descent: ad(a)^n != 0");
  FpMatrix power = ada.pow(n - 1);
  Fp f(p);
  std::vector<KostrikinEntry> out;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    FpVec c = apply(L.basis_vec(i), power, f);
    auto idx = ad_nilpotency(L, c, n - 1);
    if (!idx)
      throw HypothesisError("kostrikin_descent: conclusion failed at basis index " +
                            std::to_string(i));
    out.push_back({i, c, *idx});
  }
  return out;
}

LinearizedKostrikinReport linearized_kostrikin(OmegaFamily& omega, int m,
                                               const EnvelopeElement& a) {
  if (m < 2) throw StructureError("linearized_kostrikin: m must be >= 2");
  if (!omega.validated()) {
    auto rep = omega.validate();
    if (!rep.ok) throw HypothesisError("linearized_kostrikin: Omega fails the anchoring/commuting conditions");
  }
  const LieAlgebra& L = a.base();
  int budget = a.budget();
  LinearizedKostrikinReport rep;
  for (int k = m; k <= (int)omega.size(); ++k)
    if (!omega.U(k).is_zero_on(budget)) {
      rep.hypothesis_ok = false;
      rep.hypothesis_witness_k = k;
      return rep;
    }
  EnvelopeOperator um1 = omega.U(m - 1);
  // part 1: [a U_{m-1}, b U_{m-1}] = 0 for all basis a, b of L
  rep.part1_ok = true;
  for (std::size_t i = 0; i < L.dim() && rep.part1_ok; ++i) {
    EnvelopeElement ua = um1.apply_plain(L.basis_vec(i), L, budget);
    for (std::size_t j = i; j < L.dim(); ++j) {
      EnvelopeElement ub = um1.apply_plain(L.basis_vec(j), L, budget);
      if (!envelope_bracket(ua, ub).is_zero()) {
        rep.part1_ok = false;
        break;
      }
    }
  }
  if (m >= 4) {
    rep.part2_applicable = true;
    std::vector<EnvelopeElement> primed;
    for (const auto& [mask, v] : a.standard_decomposition()) {
      EnvelopeElement comp = EnvelopeElement::single(L, budget, mask, v);
      EnvelopeElement image = um1.apply(comp);
      if (!image.is_zero()) primed.push_back(image);
    }
    rep.part2_ok = true;
    if (!primed.empty()) {
      OmegaFamily fam = OmegaFamily::from_ad(primed);
      auto vrep = fam.validate();
      if (!vrep.ok) {
        rep.part2_ok = false;
      } else {
        for (int k = m - 1; k <= (int)fam.size(); ++k)
          if (!fam.U(k).is_zero_on(budget)) rep.part2_ok = false;
      }
    }
  }
  return rep;
}

SandwichFromU2 sandwich_from_U2(const std::vector<EnvelopeElement>& omega0) {
  if (omega0.empty()) throw StructureError("sandwich_from_U2: empty family");
  OmegaFamily fam = OmegaFamily::from_ad(omega0);
  auto rep = fam.validate();
  if (!rep.ok) throw HypothesisError("sandwich_from_U2: ad(Omega) fails the anchoring/commuting conditions");
  int budget = omega0[0].budget();
  EnvelopeOperator u2 = fam.U(2);
  if (!u2.is_zero_on(budget)) {
    // witness: first observable nonzero block
    for (const auto& [m, b] : u2.blocks())
      if (mask_weight(m) < budget && !b.is_zero())
        throw HypothesisError("sandwich_from_U2: U_2 != 0, witness block at mask " +
                              mask_to_string(m));
    throw HypothesisError("sandwich_from_U2: U_2 != 0");
  }
  EnvelopeElement a = omega0[0];
  for (std::size_t i = 1; i < omega0.size(); ++i) a = a + omega0[i];
  return {a, sandwich_check(a)};
}

namespace {

using FreeWord = std::vector<uint8_t>;
using FreePoly = std::map<FreeWord, uint32_t>;

void free_add(FreePoly& dst, const FreeWord& w, uint32_t c, const Fp& f) {
  auto it = dst.find(w);
  uint32_t v = f.add(it == dst.end() ? 0 : it->second, c);
  if (v == 0) {
    if (it != dst.end()) dst.erase(it);
  } else {
    dst[w] = v;
  }
}

FreePoly free_mul(const FreePoly& a, const FreePoly& b, const Fp& f) {
  FreePoly out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      FreeWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      free_add(out, w, f.mul(ca, cb), f);
    }
  return out;
}

FreePoly free_commutator(const FreePoly& a, const FreePoly& b, const Fp& f) {
  FreePoly ab = free_mul(a, b, f), ba = free_mul(b, a, f);
  for (const auto& [w, c] : ba) free_add(ab, w, f.neg(c), f);
  return ab;
}

}  // namespace

bool jacobson_symmetrization_identity(uint32_t p) {
  Fp f(p);
  std::vector<uint8_t> perm;
  for (uint32_t i = 0; i < p; ++i) perm.push_back((uint8_t)i);
  FreePoly lhs;
  do {
    FreeWord w(perm.begin(), perm.end());
    free_add(lhs, w, 1, f);
  } while (std::next_permutation(perm.begin(), perm.end()));
  FreePoly rhs;
  std::vector<uint8_t> rest;
  for (uint32_t i = 0; i + 1 < p; ++i) rest.push_back((uint8_t)i);
  do {
    FreePoly acc{{FreeWord{(uint8_t)(p - 1)}, 1 % p}};
    for (uint8_t v : rest) {
      FreePoly x{{FreeWord{v}, 1 % p}};
      acc = free_commutator(acc, x, f);
    }
    for (const auto& [w, c] : acc) free_add(rhs, w, c, f);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return lhs == rhs;
}

SandwichPowerReport sandwich_ppower(const EnvelopeElement& a, const EnvelopeElement& b) {
  const LieAlgebra& L = a.base();
  uint32_t p = L.modulus();
  if (!sandwich_check(a)) throw HypothesisError("sandwich_ppower: a is not a sandwich");
  SandwichPowerReport rep;
  EnvelopeElement ab = envelope_bracket(a, b);
  rep.power_vanishes = ad_operator(ab).pow(p).is_zero_on(a.budget());
  rep.jacobson_identity_ok = p <= 5 ? jacobson_symmetrization_identity(p) : true;
  return rep;
}

CongruenceReport two_decomposition_congruence(const LieAlgebra& L, const std::vector<FpVec>& omega0,
                                              const std::vector<std::vector<std::size_t>>& partA,
                                              const std::vector<std::vector<std::size_t>>& partB) {
  std::size_t n = omega0.size();
  auto check_partition = [&](const std::vector<std::vector<std::size_t>>& part) {
    std::vector<bool> seen(n, false);
    for (const auto& block : part)
      for (std::size_t i : block) {
        if (i >= n || seen[i]) throw StructureError("two_decomposition_congruence: bad partition");
        seen[i] = true;
      }
    for (bool s : seen)
      if (!s) throw StructureError("two_decomposition_congruence: partition misses an element");
  };
  check_partition(partA);
  check_partition(partB);
  std::vector<FpMatrix> ads;
  for (const auto& v : omega0) ads.push_back(L.ad(v));
  CongruenceReport rep;
  for (const auto* part : {&partA, &partB})
    for (const auto& block : *part)
      for (std::size_t i : block)
        for (std::size_t j : block) {
          if (i == j) continue;
          if (!(ads[i] * ads[j]).is_zero()) {
            rep.hypotheses_ok = false;
            rep.violating_pair = {i, j};
            return rep;
          }
        }
  Fp f(L.modulus());
  auto block_sum = [&](const std::vector<std::vector<std::size_t>>& part) {
    std::vector<FpVec> sums;
    for (const auto& block : part) {
      FpVec s = L.zero();
      for (std::size_t i : block) s = vec_add(s, omega0[i], f);
      sums.push_back(s);
    }
    FpMatrix total(L.modulus(), L.dim(), L.dim());
    for (std::size_t k1 = 0; k1 < sums.size(); ++k1)
      for (std::size_t k2 = k1 + 1; k2 < sums.size(); ++k2)
        total = total + L.ad(sums[k1]) * L.ad(sums[k2]);
    return total;
  };
  FpMatrix diff = block_sum(partA) - block_sum(partB);
  rep.equal_on_the_nose = diff.is_zero();
  std::vector<FpMatrix> comm_ads;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      comm_ads.push_back(L.ad(L.bracket(omega0[i], omega0[j])));
  rep.congruent = rep.equal_on_the_nose || in_matrix_span(comm_ads, diff);
  return rep;
}

}  // namespace adnil
