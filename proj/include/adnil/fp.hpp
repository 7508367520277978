#ifndef ADNIL_FP_HPP
#define ADNIL_FP_HPP

#include <cstdint>
#include <vector>

#include "adnil/error.hpp"

namespace adnil {

// Prime field context. Residues travel as plain uint32_t in [0,p); every
// arithmetic call goes through a context so mixing moduli is impossible to
// miss. Inverses come from a table for p <= 2^16 and from the extended
// Euclid otherwise. p must be prime and < 2^31.
class Fp {
 public:
  explicit Fp(uint32_t p);

  uint32_t modulus() const { return p_; }

  uint32_t reduce(long long x) const {
    long long r = x % (long long)p_;
    if (r < 0) r += p_;
    return (uint32_t)r;
  }
  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const { return (uint32_t)((uint64_t)a * b % p_); }
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, uint64_t e) const;

  static bool is_prime(uint32_t n);

 private:
  uint32_t p_;
  std::vector<uint32_t> inv_table_;  // populated for p <= 2^16
};

inline void require_same_modulus(uint32_t pa, uint32_t pb, const char* where) {
  if (pa != pb) throw StructureError(std::string(where) + ": modulus mismatch");
}

}  // namespace adnil

#endif
