#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "padic/digit_core.hpp"

using namespace padic;

namespace {

// Independent oracle: bit-by-bit digit sum, no popcount.
std::uint64_t naive_digit_sum(std::uint64_t n) {
  std::uint64_t s = 0;
  for (; n != 0; n >>= 1) s += n & 1;
  return s;
}

}  // namespace

TEST_CASE("digit_sum on words and big integers") {
  CHECK(digit_sum(std::uint64_t{0}) == 0);
  CHECK(digit_sum(std::uint64_t{10}) == 2);  // s(2m) = s(m), s(5) = 2
  CHECK(digit_sum(std::uint64_t{12}) == 2);  // s(2^4 - 1 - 3) = 4 - s(3)
  for (std::uint64_t n = 0; n <= 4096; ++n) {
    CHECK(digit_sum(n) == naive_digit_sum(n));
    CHECK(digit_sum(nat_from_u64(n)) == naive_digit_sum(n));
  }
  Nat big = (Nat(1) << 300) - 1;
  CHECK(digit_sum(big) == 300);
}

TEST_CASE("reflection identity s(2^e-1-k) = e - s(k)") {
  for (std::uint64_t e = 0; e <= 16; ++e) {
    const std::uint64_t top = (std::uint64_t{1} << e) - 1;
    for (std::uint64_t k = 0; k <= top; ++k) CHECK(digit_sum(top - k) == e - digit_sum(k));
  }
}

TEST_CASE("digit_sum_prefix matches naive summation") {
  CHECK(digit_sum_prefix(std::uint64_t{0}) == 0);
  // oracle: s(0)+s(1)+s(2)+s(3) = 0+1+1+2
  std::uint64_t running = 0;
  for (std::uint64_t i = 0; i < 4; ++i) running += naive_digit_sum(i);
  CHECK(digit_sum_prefix(std::uint64_t{4}) == running);
  CHECK(running == 4);

  running = 0;
  for (std::uint64_t a = 0; a <= 10000; ++a) {
    CHECK(digit_sum_prefix(a) == running);
    running += naive_digit_sum(a);
  }
  CHECK(digit_sum_prefix(std::uint64_t{23}) == 48);
}

TEST_CASE("digit_sum_prefix halving recursions") {
  for (std::uint64_t p = 0; p <= 10000; ++p) {
    CHECK(digit_sum_prefix(2 * p) == 2 * digit_sum_prefix(p) + p);
    CHECK(digit_sum_prefix(2 * p + 1) ==
          digit_sum_prefix(p + 1) + digit_sum_prefix(p) + p);
  }
}

TEST_CASE("digit_sum_prefix large arguments and Nat overload agree") {
  for (std::uint64_t a : {std::uint64_t{1} << 20, (std::uint64_t{1} << 33) + 12345,
                          (std::uint64_t{1} << 57) + 99}) {
    const Nat big = digit_sum_prefix(nat_from_u64(a));
    CHECK(nat_from_u64(digit_sum_prefix(a)) == big);
  }
  // recursion holds on Nat arguments too
  const Nat p = (Nat(1) << 80) + 7;
  CHECK(digit_sum_prefix(2 * p) == 2 * digit_sum_prefix(p) + p);
  CHECK(digit_sum_prefix(2 * p + 1) ==
        digit_sum_prefix(p + 1) + digit_sum_prefix(p) + p);
}

TEST_CASE("factorial_valuation is Legendre's n - s(n)") {
  CHECK(factorial_valuation(std::uint64_t{0}) == 0);
  CHECK(factorial_valuation(std::uint64_t{4}) == 3);  // 4! = 24 = 2^3 * 3
  Nat fact = 1;
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    fact *= nat_from_u64(n);
    CHECK(factorial_valuation(n) == integer_valuation(fact));
  }
  CHECK(factorial_valuation(std::uint64_t{100}) == 97);
}

TEST_CASE("disjoint_expansion and digit-sum additivity") {
  CHECK(disjoint_expansion(std::uint64_t{5}, std::uint64_t{2}));
  CHECK_FALSE(disjoint_expansion(std::uint64_t{3}, std::uint64_t{1}));
  for (std::uint64_t b = 0; b <= 300; b += 7) CHECK(disjoint_expansion(b, std::uint64_t{0}));
  for (std::uint64_t b = 0; b <= 512; ++b)
    for (std::uint64_t c = 0; c <= 512; ++c) {
      CHECK(digit_sum(b + c) <= digit_sum(b) + digit_sum(c));
      CHECK((digit_sum(b + c) == digit_sum(b) + digit_sum(c)) ==
            disjoint_expansion(b, c));
    }
  CHECK(disjoint_expansion(Nat(5), Nat(2)));
  CHECK_FALSE(disjoint_expansion((Nat(1) << 100) + 1, Nat(1)));
}

TEST_CASE("integer_valuation counts trailing zeros and rejects zero") {
  CHECK(integer_valuation(std::uint64_t{1}) == 0);
  CHECK(integer_valuation(std::uint64_t{24}) == 3);
  CHECK(integer_valuation(std::uint64_t{1} << 10) == 10);
  CHECK(integer_valuation(Nat(1) << 400) == 400);
  CHECK_THROWS_AS(integer_valuation(std::uint64_t{0}), std::domain_error);
  CHECK_THROWS_AS(integer_valuation(Nat(0)), std::domain_error);
}

TEST_CASE("window inequalities over consecutive digit sums") {
  const auto window = [](std::uint64_t l, std::uint64_t p) {
    std::uint64_t sum = 0;
    for (std::uint64_t j = l; j < l + p; ++j) sum += naive_digit_sum(j);
    return sum;
  };
  for (std::uint64_t l = 0; l <= 256; ++l)
    for (std::uint64_t p = 0; p <= 256; ++p) {
      const std::uint64_t w = window(l, p);
      const std::uint64_t sp = digit_sum_prefix(p);
      if (l >= p) CHECK(w >= p + sp);
      if (l <= p) CHECK(w >= l + sp);
      CHECK(w >= sp);
      CHECK((w == sp) == (p == 0 || l == 0));
    }
}
