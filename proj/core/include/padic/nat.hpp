#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace padic {

// Universal scalar for counts, degrees and factorial products. GMP-backed;
// every padic entry point keeps values nonnegative.
using Nat = mpz_class;

inline std::string to_decimal(const Nat& x) { return x.get_str(10); }

inline Nat nat_from_u64(std::uint64_t v) {
  Nat hi(static_cast<unsigned long>(v >> 32));
  return (hi << 32) + static_cast<unsigned long>(v & 0xffffffffu);
}

inline bool fits_u64(const Nat& x) {
  return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Nat& x) {
  Nat hi = x >> 32;
  Nat lo = x - (hi << 32);
  return (static_cast<std::uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) |
         static_cast<std::uint64_t>(mpz_get_ui(lo.get_mpz_t()));
}

// Product of all entries, folded pairwise so factors of similar size meet.
Nat balanced_product(std::vector<Nat> factors);

}  // namespace padic
