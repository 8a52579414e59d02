#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "padic/digit_core.hpp"
#include "padic/oracles.hpp"
#include "padic/variety_degrees.hpp"

using namespace padic;

TEST_CASE("gamma_exact boundary and small values") {
  CHECK(gamma_exact(3, 3, 5) == 1);   // k = min(m,n): degree of the full space
  CHECK(gamma_exact(1, 2, 2) == 2);   // B(1,1,1)
  CHECK(gamma_exact(2, 4, 4) == 20);  // B(2,2,2), enumeration-oracle value
  CHECK(gamma_exact(2, 4, 4) == plane_partition_count({2, 2, 2}));
  CHECK_THROWS_AS(gamma_exact(0, 4, 4), std::domain_error);
  CHECK_THROWS_AS(gamma_exact(5, 4, 6), std::domain_error);
}

TEST_CASE("gamma_exact equals the box count on a grid") {
  // the factorial-product assertion path runs inside gamma_exact
  for (std::uint64_t n = 1; n <= 40; ++n)
    for (std::uint64_t m = n; m <= 40; ++m)
      for (std::uint64_t k = 1; k <= n; ++k)
        CHECK(gamma_exact(k, m, n) == box_count_exact({n - k, m - k, k}));
}

TEST_CASE("epsilon_exact values and degenerate boundary") {
  CHECK(epsilon_exact(1, 4) == 2);  // theta_{1,4}/2, degree of the Pfaffian quadric
  CHECK(epsilon_exact(2, 6) == 3);  // theta_{1,6}/2
  CHECK(epsilon_exact(3, 6) == 1);  // p = n/2: full space
  CHECK(epsilon_degenerate(3, 6));
  CHECK(epsilon_degenerate(2, 5));  // n odd boundary: epsilon = theta_{0,n} = 1
  CHECK(epsilon_exact(2, 5) == 1);
  CHECK_FALSE(epsilon_degenerate(1, 4));
  CHECK_THROWS_AS(epsilon_exact(0, 6), std::domain_error);
  CHECK_THROWS_AS(epsilon_exact(4, 6), std::domain_error);
  CHECK_THROWS_AS(epsilon_exact(1, 1), std::domain_error);
}

TEST_CASE("epsilon_valuation equals trailing zeros of the exact value") {
  CHECK(epsilon_valuation(1, 4) == 1);  // nu2(2)
  CHECK(epsilon_valuation(2, 6) == 0);  // nu2(3)
  for (std::uint64_t n = 2; n <= 60; ++n)
    for (std::uint64_t p = 1; p <= n / 2; ++p)
      CHECK(epsilon_valuation(p, n) == integer_valuation(epsilon_exact(p, n)));
}

TEST_CASE("epsilon_is_odd closed form") {
  CHECK(epsilon_is_odd(2, 6));        // n-2p = 2 divides p = 2
  CHECK_FALSE(epsilon_is_odd(1, 4));  // p = 1 and n-p = 3 both odd
  CHECK(epsilon_is_odd(4, 10));       // (n-2)/2 family, n = 2 (mod 4)
  for (std::uint64_t n = 2; n <= 100; ++n)
    for (std::uint64_t p = 1; p <= n / 2; ++p)
      CHECK(epsilon_is_odd(p, n) == (epsilon_exact(p, n) % 2 == 1));
}

TEST_CASE("subspace_thresholds per family") {
  const auto sym = subspace_thresholds({Family::symmetric, 4, {}, 6});
  CHECK(sym.codim == 3);  // C(3,2)
  CHECK(sym.complex_dim == 4);
  REQUIRE(sym.real_dim.has_value());
  CHECK(*sym.real_dim == 4);  // q = 2 with n = 2 (mod 4) is the odd case

  const auto skew = subspace_thresholds({Family::skew, 2, {}, 6});
  CHECK(skew.codim == 1);
  CHECK(skew.complex_dim == 2);
  REQUIRE(skew.real_dim.has_value());
  CHECK(*skew.real_dim == 2);

  // generic even-parity rectangular case reports no real bound
  const auto rect = subspace_thresholds({Family::rectangular, 2, 4, 4});
  CHECK(rect.codim == 4);
  CHECK(rect.complex_dim == 5);
  CHECK_FALSE(rect.real_dim.has_value());  // gamma_{2,4,4} = 20 is even

  const auto rect_odd = subspace_thresholds({Family::rectangular, 3, 6, 4});
  CHECK(rect_odd.codim == 3);
  CHECK(rect_odd.real_dim.has_value() == (gamma_exact(3, 6, 4) % 2 == 1));

  CHECK_THROWS_AS(subspace_thresholds({Family::rectangular, 2, {}, 4}),
                  std::domain_error);
  CHECK_THROWS_AS(subspace_thresholds({Family::symmetric, 9, {}, 6}),
                  std::domain_error);
}
