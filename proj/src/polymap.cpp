#include "adnil/polymap.hpp"

#include <cstdlib>
#include <random>

#include "adnil/error.hpp"

namespace adnil {

uint64_t evaluation_budget() {
  static uint64_t budget = [] {
    const char* env = std::getenv("ADNIL_BUDGET");
    if (env) {
      long long v = std::atoll(env);
      if (v > 0) return (uint64_t)v;
    }
    return (uint64_t)10'000'000;
  }();
  return budget;
}

void BudgetCounter::tick(uint64_t n) {
  used_ += n;
  if (used_ > evaluation_budget())
    throw BudgetError(std::string(what_) + ": evaluation budget exhausted (" +
                      std::to_string(used_) + " > " + std::to_string(evaluation_budget()) + ")");
}

void PolynomialMap::spot_check_homogeneity(uint64_t seed) const {
  Fp f(p);
  std::mt19937_64 rng(seed);
  auto rand_vec = [&] {
    FpVec v(in_dim);
    for (auto& x : v) x = (uint32_t)(rng() % p);
    return v;
  };
  for (int round = 0; round < 2; ++round) {
    std::vector<FpVec> args(arity());
    for (auto& a : args) a = rand_vec();
    FpVec base = eval(args);
    for (int i = 0; i < arity(); ++i) {
      uint32_t lam = (uint32_t)(1 + rng() % (p > 1 ? p - 1 : 1));
      std::vector<FpVec> scaled_args = args;
      scaled_args[i] = vec_scale(args[i], lam, f);
      FpVec got = eval(scaled_args);
      FpVec want = vec_scale(base, f.pow(lam, (uint64_t)degrees[i]), f);
      if (got != want)
        throw StructureError("PolynomialMap: homogeneity spot-check failed in slot " +
                             std::to_string(i));
    }
  }
}

PolynomialMap linearize_slot(const PolynomialMap& f, int slot) {
  if (slot < 0 || slot >= f.arity()) throw StructureError("linearize_slot: slot out of range");
  int d = f.degrees[slot];
  PolynomialMap g;
  g.p = f.p;
  g.in_dim = f.in_dim;
  g.out_dim = f.out_dim;
  for (int i = 0; i < f.arity(); ++i) {
    if (i == slot)
      for (int k = 0; k < d; ++k) g.degrees.push_back(1);
    else
      g.degrees.push_back(f.degrees[i]);
  }
  auto base = f.eval;
  int arity = f.arity();
  uint32_t p = f.p;
  std::size_t in_dim = f.in_dim, out_dim = f.out_dim;
  g.eval = [base, slot, d, arity, p, in_dim, out_dim](const std::vector<FpVec>& args) {
    Fp field(p);
    // args: slots 0..slot-1, then d fresh slots, then the rest
    std::vector<FpVec> inner(arity);
    for (int i = 0; i < slot; ++i) inner[i] = args[i];
    for (int i = slot + 1; i < arity; ++i) inner[i] = args[i + d - 1];
    FpVec acc(out_dim, 0);
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
      FpVec s(in_dim, 0);
      for (int k = 0; k < d; ++k)
        if (mask & (1u << k)) s = vec_add(s, args[slot + k], field);
      inner[slot] = s;
      FpVec v = base(inner);
      int parity = d - __builtin_popcount(mask);
      if (parity % 2 == 1) v = vec_scale(v, field.neg(1), field);
      acc = vec_add(acc, v, field);
    }
    return acc;
  };
  return g;
}

PolynomialMap full_linearization(const PolynomialMap& f) {
  PolynomialMap g = f;
  int slot = 0;
  while (slot < g.arity()) {
    if (g.degrees[slot] == 1) {
      ++slot;
      continue;
    }
    g = linearize_slot(g, slot);
    // the d new slots are now multilinear; move past them
    ++slot;
  }
  return g;
}

std::optional<bool> check_diagonal_recovery(const PolynomialMap& f, const PolynomialMap& flin,
                                            uint64_t seed, int samples) {
  Fp field(f.p);
  uint32_t factor = 1 % f.p;
  for (int d : f.degrees) {
    for (int k = 2; k <= d; ++k) factor = field.mul(factor, field.reduce(k));
  }
  if (factor == 0) return std::nullopt;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    std::vector<FpVec> args(f.arity());
    for (auto& a : args) {
      a.assign(f.in_dim, 0);
      for (auto& x : a) x = (uint32_t)(rng() % f.p);
    }
    std::vector<FpVec> expanded;
    for (int i = 0; i < f.arity(); ++i)
      for (int k = 0; k < f.degrees[i]; ++k) expanded.push_back(args[i]);
    FpVec lhs = flin.eval(expanded);
    FpVec rhs = vec_scale(f.eval(args), factor, field);
    if (lhs != rhs) return false;
  }
  return true;
}

Subspace value_span(const PolynomialMap& f, const std::vector<Subspace>& domains) {
  if (!f.multilinear()) throw StructureError("value_span: map must be multilinear");
  if ((int)domains.size() != f.arity()) throw StructureError("value_span: domain count mismatch");
  for (const auto& d : domains)
    if (d.dim() == 0) return Subspace(f.p, f.out_dim);
  BudgetCounter budget("value_span");
  Subspace span(f.p, f.out_dim);
  std::vector<std::size_t> idx(domains.size(), 0);
  while (true) {
    std::vector<FpVec> args;
    for (std::size_t i = 0; i < domains.size(); ++i) args.push_back(domains[i].basis()[idx[i]]);
    budget.tick();
    span.insert(f.eval(args));
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < domains[i].dim()) break;
      idx[i] = 0;
    }
    if (i == idx.size()) break;
  }
  return span;
}

}  // namespace adnil
