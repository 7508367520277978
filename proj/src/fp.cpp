#include "adnil/fp.hpp"

namespace adnil {

bool Fp::is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Fp::Fp(uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw StructureError("Fp: modulus too large");
  if (!is_prime(p)) throw StructureError("Fp: modulus " + std::to_string(p) + " is not prime");
  if (p <= (1u << 16)) {
    inv_table_.assign(p, 0);
    if (p > 1) inv_table_[1] = 1;
    // inv(i) = -(p/i) * inv(p mod i)
    for (uint32_t i = 2; i < p; ++i)
      inv_table_[i] = (uint32_t)((uint64_t)(p - p / i) * inv_table_[p % i] % p);
  }
}

uint32_t Fp::inv(uint32_t a) const {
  if (a == 0) throw StructureError("Fp::inv: division by zero");
  if (!inv_table_.empty()) return inv_table_[a];
  // extended Euclid
  int64_t t = 0, newt = 1, r = p_, newr = a;
  while (newr != 0) {
    int64_t q = r / newr;
    int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += p_;
  return (uint32_t)t;
}

uint32_t Fp::pow(uint32_t a, uint64_t e) const {
  uint64_t r = 1 % p_, b = a;
  while (e) {
    if (e & 1) r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return (uint32_t)r;
}

}  // namespace adnil
