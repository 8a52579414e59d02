#pragma once

#include <cstdint>

#include "padic/nat.hpp"

namespace padic {

// Binary digit-sum primitives and 2-adic valuation kernels. Everything here
// is a pure function and safe to call from any number of threads.

// s(n): number of ones in the binary expansion of n.
std::uint64_t digit_sum(std::uint64_t n) noexcept;
std::uint64_t digit_sum(const Nat& n);

// S(a) = sum_{i<a} s(i), via the halving recursion S(2p) = 2S(p) + p,
// S(2p+1) = S(p+1) + S(p) + p. Small arguments hit a precomputed table;
// larger ones walk an O(bit-length) chain of (S(m), S(m+1)) pairs.
// The uint64 overload throws std::overflow_error if S(a) needs > 64 bits.
std::uint64_t digit_sum_prefix(std::uint64_t a);
Nat digit_sum_prefix(const Nat& a);

// nu2(n!) = n - s(n); the factorial itself is never formed.
std::uint64_t factorial_valuation(std::uint64_t n) noexcept;
Nat factorial_valuation(const Nat& n);

// true iff b and c share no 1-bit; equivalently s(b+c) = s(b) + s(c).
bool disjoint_expansion(std::uint64_t b, std::uint64_t c) noexcept;
bool disjoint_expansion(const Nat& b, const Nat& c);

// Trailing zero bits of x >= 1. nu2(0) is undefined and rejected with
// std::domain_error: every in-range theta/epsilon/B is provably nonzero,
// so a zero here means a caller bug, not a value to encode.
std::uint64_t integer_valuation(std::uint64_t x);
std::uint64_t integer_valuation(const Nat& x);

}  // namespace padic
