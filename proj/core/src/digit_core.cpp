#include "padic/digit_core.hpp"

#include <array>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace padic {

namespace {

constexpr std::uint64_t kTableSize = 1u << 16;

// S(0..kTableSize), filled once; read-only afterwards.
const std::array<std::uint64_t, kTableSize + 1>& prefix_table() {
  static const auto table = [] {
    std::array<std::uint64_t, kTableSize + 1> t{};
    for (std::uint64_t i = 0; i < kTableSize; ++i)
      t[i + 1] = t[i] + static_cast<std::uint64_t>(std::popcount(i));
    return t;
  }();
  return table;
}

// (S(m), S(m+1)) by the halving recursion; one chain, no shared-subcall map.
std::pair<std::uint64_t, std::uint64_t> prefix_pair(std::uint64_t m) {
  if (m < kTableSize) {
    const auto& t = prefix_table();
    return {t[m], t[m + 1]};
  }
  const std::uint64_t p = m / 2;
  auto [sp, sp1] = prefix_pair(p);
  if (m % 2 == 0)  // S(2p) = 2S(p)+p, S(2p+1) = S(p+1)+S(p)+p
    return {2 * sp + p, sp1 + sp + p};
  return {sp1 + sp + p, 2 * sp1 + (p + 1)};
}

std::pair<Nat, Nat> prefix_pair(const Nat& m) {
  if (m < kTableSize) {
    const auto& t = prefix_table();
    const auto i = to_u64(m);
    return {Nat(t[i]), Nat(t[i + 1])};
  }
  const Nat p = m / 2;
  auto [sp, sp1] = prefix_pair(p);
  if (mpz_even_p(m.get_mpz_t()))
    return {2 * sp + p, sp1 + sp + p};
  return {sp1 + sp + p, 2 * sp1 + (p + 1)};
}

}  // namespace

std::uint64_t digit_sum(std::uint64_t n) noexcept {
  return static_cast<std::uint64_t>(std::popcount(n));
}

std::uint64_t digit_sum(const Nat& n) {
  if (sgn(n) < 0) throw std::domain_error("digit_sum: negative argument");
  return mpz_popcount(n.get_mpz_t());
}

std::uint64_t digit_sum_prefix(std::uint64_t a) {
  // S(a) < a * 64; stay on the word path only when that bound fits.
  if (a >= (std::uint64_t{1} << 57)) {
    Nat big = digit_sum_prefix(nat_from_u64(a));
    if (!fits_u64(big)) throw std::overflow_error("digit_sum_prefix: use the Nat overload");
    return to_u64(big);
  }
  return prefix_pair(a).first;
}

Nat digit_sum_prefix(const Nat& a) {
  if (sgn(a) < 0) throw std::domain_error("digit_sum_prefix: negative argument");
  return prefix_pair(a).first;
}

std::uint64_t factorial_valuation(std::uint64_t n) noexcept {
  return n - digit_sum(n);
}

Nat factorial_valuation(const Nat& n) {
  return n - digit_sum(n);
}

bool disjoint_expansion(std::uint64_t b, std::uint64_t c) noexcept {
  return (b & c) == 0;
}

bool disjoint_expansion(const Nat& b, const Nat& c) {
  Nat both = b & c;
  return both == 0;
}

std::uint64_t integer_valuation(std::uint64_t x) {
  if (x == 0) throw std::domain_error("integer_valuation: valuation of zero is undefined");
  return static_cast<std::uint64_t>(std::countr_zero(x));
}

std::uint64_t integer_valuation(const Nat& x) {
  if (sgn(x) <= 0) throw std::domain_error("integer_valuation: valuation of zero is undefined");
  return mpz_scan1(x.get_mpz_t(), 0);
}

}  // namespace padic
