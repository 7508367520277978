#include "adnil/suites.hpp"

#include <algorithm>
#include <random>

#include "adnil/fixtures.hpp"
#include "adnil/polymap.hpp"
#include "adnil/sandwich.hpp"

namespace adnil::suites {

UPowerIdentityStats upower_identity_suite(int trials, uint64_t seed) {
  UPowerIdentityStats stats;
  std::vector<uint32_t> primes{2, 3, 5, 7};
  std::mt19937_64 rng(seed);
  while (stats.families < trials) {
    uint32_t p = primes[rng() % primes.size()];
    auto fixtures_for_p = fixtures::omega_test_algebras(p);
    const auto& fx = fixtures_for_p[rng() % fixtures_for_p.size()];
    const LieAlgebra& L = fx.L;
    int budget = 4 + (int)(rng() % 3);  // 4..6
    const auto& panel = fx.commuting_panels[rng() % fx.commuting_panels.size()];
    std::size_t nmem = 1 + rng() % std::min<std::size_t>(panel.size(), 3);
    std::vector<EnvelopeElement> elems;
    for (std::size_t i = 0; i < nmem; ++i) {
      Mask mask = 0;
      int anchor = (int)(rng() % budget);
      mask |= Mask(1) << anchor;
      if (rng() % 2) mask |= Mask(1) << (rng() % budget);
      elems.push_back(EnvelopeElement::single(L, budget, mask, panel[i]));
    }
    OmegaFamily fam = OmegaFamily::from_ad(elems);
    if (!fam.validate().ok) continue;  // commuting panels make this rare
    ++stats.families;
    Fp f(p);
    auto record = [&](const std::string& what) {
      ++stats.failures;
      if (stats.first_failure.empty())
        stats.first_failure = fx.name + " p=" + std::to_string(p) + ": " + what;
    };
    auto random_env = [&] {
      EnvelopeElement e(L, budget);
      int comps = 1 + (int)(rng() % 2);
      for (int c = 0; c < comps; ++c) {
        FpVec v(L.dim());
        for (auto& x : v) x = (uint32_t)(rng() % p);
        e.add_component(Mask(1) << (rng() % budget), v);
      }
      return e;
    };
    // binomial composition U_i U_j = C(i+j, i) U_{i+j}, including the mod-p collapse
    for (int i = 0; i <= (int)nmem; ++i)
      for (int j = 0; j <= (int)nmem; ++j) {
        EnvelopeOperator lhs = fam.U(i) * fam.U(j);
        EnvelopeOperator rhs = fam.U(i + j).scaled(binomial_mod(i + j, i, f));
        if (!lhs.equals_on(rhs, budget)) record("binomial composition");
      }
    // expansion of ad(a U_m) as sum (-1)^i U_i ad(a) U_{m-i}
    for (int rep = 0; rep < 2; ++rep) {
      EnvelopeElement a = random_env();
      for (int m = 0; m <= (int)nmem; ++m) {
        EnvelopeElement am = fam.U(m).apply(a);
        EnvelopeOperator lhs = ad_operator(am);
        EnvelopeOperator rhs(p, L.dim());
        for (int i = 0; i <= m; ++i) {
          EnvelopeOperator t = fam.U(i) * ad_operator(a) * fam.U(m - i);
          rhs = rhs + (i % 2 ? t.scaled(f.neg(1)) : t);
        }
        if (!lhs.equals_on(rhs, budget)) record("right-multiplication expansion");
      }
    }
    // Leibniz rule [a,b] U_m = sum_i [a U_i, b U_{m-i}]
    for (int rep = 0; rep < 2; ++rep) {
      EnvelopeElement a = random_env(), b = random_env();
      for (int m = 0; m <= (int)nmem + 1; ++m) {
        EnvelopeElement lhs = fam.U(m).apply(envelope_bracket(a, b));
        EnvelopeElement rhs(L, budget);
        for (int i = 0; i <= m; ++i)
          rhs = rhs + envelope_bracket(fam.U(i).apply(a), fam.U(m - i).apply(b));
        if (!(lhs == rhs)) record("Leibniz expansion");
      }
    }
    // the map a -> sum_i a U_i is multiplicative
    {
      EnvelopeOperator A = EnvelopeOperator::identity(p, L.dim());
      for (int i = 1; i <= (int)nmem; ++i) A = A + fam.U(i);
      EnvelopeElement a = random_env(), b = random_env();
      EnvelopeElement lhs = A.apply(envelope_bracket(a, b));
      EnvelopeElement rhs = envelope_bracket(A.apply(a), A.apply(b));
      if (!(lhs == rhs)) record("automorphism property");
    }
  }
  return stats;
}

std::vector<KostrikinInstance> kostrikin_instances() {
  std::vector<KostrikinInstance> out;
  {
    LieAlgebra L = fixtures::strictly_upper_lie(7, 4);
    Fp f(7);
    FpVec a = L.zero();
    for (const char* nm : {"e12", "e23", "e34"})
      a = vec_add(a, L.basis_vec((std::size_t)L.name_index(nm)), f);
    out.push_back({"n4/F7 regular", L, a, 4});
  }
  {
    LieAlgebra L = fixtures::strictly_upper_lie(11, 5);
    Fp f(11);
    FpVec a = L.zero();
    for (const char* nm : {"e12", "e23", "e34", "e45"})
      a = vec_add(a, L.basis_vec((std::size_t)L.name_index(nm)), f);
    int idx = *ad_nilpotency(L, a, 30);
    out.push_back({"n5/F11 regular", L, a, std::max(idx, 4)});
  }
  {
    LieAlgebra L = fixtures::strictly_upper_lie(11, 5);
    Fp f(11);
    FpVec a = L.zero();
    for (const char* nm : {"e12", "e23", "e34"})
      a = vec_add(a, L.basis_vec((std::size_t)L.name_index(nm)), f);
    int idx = *ad_nilpotency(L, a, 30);
    out.push_back({"n5/F11 partial", L, a, std::max(idx, 4)});
  }
  {
    LieAlgebra L = fixtures::chain8(7);
    Fp f(7);
    FpVec a = L.zero();
    for (const char* nm : {"c1", "c2", "c3", "c4"})
      a = vec_add(a, L.basis_vec((std::size_t)L.name_index(nm)), f);
    out.push_back({"chain8/F7 c-sum", L, a, 4});
  }
  {
    LieAlgebra L = fixtures::chain6(7);
    Fp f(7);
    FpVec a = vec_add(L.basis_vec((std::size_t)L.name_index("c1")),
                      L.basis_vec((std::size_t)L.name_index("c2")), f);
    out.push_back({"chain6/F7 c1+c2", L, a, 4});
  }
  {
    LieAlgebra L = fixtures::strictly_upper_lie(13, 5);
    Fp f(13);
    FpVec a = vec_add(L.basis_vec((std::size_t)L.name_index("e12")),
                      L.basis_vec((std::size_t)L.name_index("e25")), f);
    int idx = *ad_nilpotency(L, a, 30);
    out.push_back({"n5/F13 e12+e25", L, a, std::max(idx, 4)});
  }
  return out;
}

LinearizedDescentOutcome linearized_descent_suite() {
  LinearizedDescentOutcome out;
  auto expect = [&](bool ok, const std::string& what, bool m4) {
    if (!ok) {
      out.ok = false;
      if (out.first_failure.empty()) out.first_failure = what;
    }
    (m4 ? out.m4_instances : out.m2_instances)++;
  };
  {
    LieAlgebra L = fixtures::heisenberg(5);
    std::vector<EnvelopeElement> elems{EnvelopeElement::single(L, 4, 1, L.basis_vec(0)),
                                       EnvelopeElement::single(L, 4, 1, L.basis_vec(1))};
    OmegaFamily fam = OmegaFamily::from_ad(elems);
    fam.validate();
    EnvelopeElement a = EnvelopeElement::single(L, 4, 4, L.basis_vec(0));
    auto rep = linearized_kostrikin(fam, 2, a);
    expect(rep.hypothesis_ok && rep.part1_ok, "heisenberg same-mask m=2", false);
  }
  {
    LieAlgebra L = fixtures::heisenberg(3);
    std::vector<EnvelopeElement> elems{EnvelopeElement::single(L, 4, 1, L.basis_vec(2)),
                                       EnvelopeElement::single(L, 4, 2, L.basis_vec(0))};
    OmegaFamily fam = OmegaFamily::from_ad(elems);
    fam.validate();
    EnvelopeElement a = EnvelopeElement::single(L, 4, 8, L.basis_vec(1));
    auto rep = linearized_kostrikin(fam, 2, a);
    expect(rep.hypothesis_ok && rep.part1_ok, "heisenberg central m=2", false);
  }
  {
    LieAlgebra L = fixtures::chain8(2);
    auto at = [&](const char* n) { return L.basis_vec((std::size_t)L.name_index(n)); };
    std::vector<EnvelopeElement> elems{EnvelopeElement::single(L, 4, 1, at("w")),
                                       EnvelopeElement::single(L, 4, 2, at("t"))};
    OmegaFamily fam = OmegaFamily::from_ad(elems);
    fam.validate();
    EnvelopeElement a = EnvelopeElement::single(L, 4, 4, at("u"));
    auto rep = linearized_kostrikin(fam, 2, a);
    expect(rep.hypothesis_ok && rep.part1_ok, "chain8 w/t m=2", false);
  }
  {
    LieAlgebra L = fixtures::chain8(3);
    auto at = [&](const std::string& n) { return L.basis_vec((std::size_t)L.name_index(n)); };
    std::vector<EnvelopeElement> elems;
    for (int i = 0; i < 4; ++i)
      elems.push_back(
          EnvelopeElement::single(L, 8, Mask(1) << i, at("c" + std::to_string(i + 1))));
    OmegaFamily fam = OmegaFamily::from_ad(elems);
    fam.validate();
    EnvelopeElement a(L, 8);
    a.add_component(Mask(1) << 4, at("u"));
    a.add_component(Mask(1) << 5, at("v"));
    a.add_component(Mask(1) << 6, at("u"));
    a.add_component(Mask(1) << 7, at("w"));
    auto rep = linearized_kostrikin(fam, 4, a);
    expect(rep.hypothesis_ok && rep.part1_ok && rep.part2_applicable && rep.part2_ok,
           "chain8 m=4", true);
  }
  return out;
}

LinearizationOutcome linearization_suite(int maps, uint64_t seed) {
  LinearizationOutcome out;
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < maps; ++trial) {
    uint32_t p = std::vector<uint32_t>{2, 3, 5}[rng() % 3];
    Fp f(p);
    std::size_t dim = 2 + rng() % 2;
    int deg = 1 + (int)(rng() % 3);
    std::size_t nmono = 1;
    for (int t = 0; t < deg; ++t) nmono *= dim;
    std::vector<FpVec> coeff(nmono, FpVec(dim));
    for (auto& row : coeff)
      for (auto& c : row) c = (uint32_t)(rng() % p);
    PolynomialMap pm;
    pm.p = p;
    pm.in_dim = dim;
    pm.out_dim = dim;
    pm.degrees = {deg};
    pm.eval = [coeff, dim, deg, p](const std::vector<FpVec>& args) {
      Fp field(p);
      FpVec out_v(dim, 0);
      for (std::size_t w = 0; w < coeff.size(); ++w) {
        uint32_t c = 1 % p;
        std::size_t rem = w;
        for (int t = 0; t < deg; ++t) {
          c = field.mul(c, args[0][rem % dim]);
          rem /= dim;
        }
        if (c)
          for (std::size_t k = 0; k < dim; ++k)
            out_v[k] = field.add(out_v[k], field.mul(c, coeff[w][k]));
      }
      return out_v;
    };
    PolynomialMap lin = full_linearization(pm);
    bool ok = true;
    std::vector<std::size_t> idx(deg, 0);
    while (ok) {
      std::vector<FpVec> args;
      for (int t = 0; t < deg; ++t) {
        FpVec e(dim, 0);
        e[idx[t]] = 1;
        args.push_back(e);
      }
      FpVec got = lin.eval(args);
      // oracle: the multilinear component is the sum of word coefficients
      // over all slot orders
      FpVec want(dim, 0);
      std::vector<int> perm(deg);
      for (int t = 0; t < deg; ++t) perm[t] = t;
      std::sort(perm.begin(), perm.end());
      do {
        std::size_t w = 0, mul = 1;
        for (int t = 0; t < deg; ++t) {
          w += idx[perm[t]] * mul;
          mul *= dim;
        }
        want = vec_add(want, coeff[w], f);
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (got != want) ok = false;
      int t = deg - 1;
      for (; t >= 0; --t) {
        if (++idx[t] < dim) break;
        idx[t] = 0;
      }
      if (t < 0) break;
    }
    ++out.maps_checked;
    if (ok) ++out.maps_agreeing;
  }
  // span-agreement fixture with the Grassmann envelope
  {
    LieAlgebra L = fixtures::heisenberg(3);
    int budget = 3;
    EnvelopeFlattening flat(L, budget);
    PolynomialMap pm;
    pm.p = 3;
    pm.in_dim = flat.total_dim();
    pm.out_dim = flat.total_dim();
    pm.degrees = {2, 1};
    pm.eval = [&L, &flat](const std::vector<FpVec>& args) {
      EnvelopeElement x = flat.unflatten(args[0]), y = flat.unflatten(args[1]);
      return flat.flatten(envelope_bracket(envelope_bracket(x, y), x));
    };
    PolynomialMap lin = full_linearization(pm);
    Subspace domain = Subspace::full(3, flat.total_dim());
    Subspace lin_span = value_span(lin, {domain, domain, domain});
    Subspace f_span(3, flat.total_dim());
    Fp f3(3);
    const auto& basis = domain.basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j) {
        f_span.insert(pm.eval({basis[i], basis[j]}));
        f_span.insert(pm.eval({vec_add(basis[i], basis[j], f3), basis[j]}));
      }
    out.value_span_ok = f_span == lin_span;
  }
  return out;
}

}  // namespace adnil::suites
