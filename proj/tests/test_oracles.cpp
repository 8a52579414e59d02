#include <doctest.h>

#include <cstdint>
#include <random>
#include <stdexcept>

#include "padic/box_parity.hpp"
#include "padic/oracles.hpp"

using namespace padic;

TEST_CASE("plane_partition_count small boxes") {
  CHECK(plane_partition_count({1, 1, 1}) == 2);
  CHECK(plane_partition_count({2, 2, 2}) == 20);
  for (std::uint64_t a = 0; a <= 5; ++a)
    for (std::uint64_t b = 0; b <= 5; ++b) CHECK(plane_partition_count({a, b, 0}) == 1);
}

TEST_CASE("enumeration agrees with the product formula") {
  // the (5,5,x) corner is a few seconds of honest leaf-by-leaf counting
  for (std::uint64_t a = 0; a <= 5; ++a)
    for (std::uint64_t b = 0; b <= 5; ++b)
      for (std::uint64_t c = 0; c <= 5; ++c) {
        const Nat counted = plane_partition_count({a, b, c});
        CHECK(counted == box_count_exact({a, b, c}));
        CHECK(box_valuation({a, b, c}) == valuation_by_trailing_zeros(counted));
      }
  for (const BoxDims d : {BoxDims{1, 5, 5}, BoxDims{2, 3, 6}, BoxDims{5, 5, 1}})
    CHECK(plane_partition_count(d) == box_count_exact(d));
}

TEST_CASE("enumeration is permutation invariant inside the guard") {
  for (std::uint64_t a = 1; a <= 3; ++a)
    for (std::uint64_t b = a; b <= 4; ++b)
      for (std::uint64_t c = b; c <= 5; ++c) {
        const Nat base = plane_partition_count({a, b, c});
        CHECK(plane_partition_count({a, c, b}) == base);
        CHECK(plane_partition_count({b, a, c}) == base);
        CHECK(plane_partition_count({c, b, a}) == base);
      }
}

TEST_CASE("enumeration guard rejects big boxes") {
  CHECK_THROWS_AS(plane_partition_count({7, 7, 3}), std::domain_error);
  CHECK_THROWS_AS(plane_partition_count({2, 2, 9}), std::domain_error);
  EnumerationGuard loose{49, 9};
  CHECK(plane_partition_count({7, 7, 1}, loose) == box_count_exact({7, 7, 1}));
}

TEST_CASE("valuation_by_trailing_zeros") {
  CHECK(valuation_by_trailing_zeros(Nat(10)) == 1);
  CHECK(valuation_by_trailing_zeros(Nat(20)) == 2);
  CHECK(valuation_by_trailing_zeros(Nat(288)) == 5);
  CHECK_THROWS_AS(valuation_by_trailing_zeros(Nat(0)), std::domain_error);
}

TEST_CASE("skew_congruence_reduce fixed cases") {
  const RationalMatrix zero(5);
  const auto z = skew_congruence_reduce(zero);
  CHECK(z.rank == 0);
  CHECK(z.transform == RationalMatrix::identity(5));

  RationalMatrix s2(2);
  s2.at(0, 1) = 1;
  s2.at(1, 0) = -1;
  const auto r = skew_congruence_reduce(s2);
  CHECK(r.rank == 2);
  CHECK(r.transform == RationalMatrix::identity(2));

  RationalMatrix not_skew(2);
  not_skew.at(0, 1) = 1;
  CHECK_THROWS_AS(skew_congruence_reduce(not_skew), std::domain_error);
}

TEST_CASE("skew_congruence_reduce randomized exact verification") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<int> order_dist(2, 8);
  std::uniform_int_distribution<int> num_dist(-9, 9);
  std::uniform_int_distribution<int> den_dist(1, 9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(order_dist(rng));
    RationalMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Rational v(num_dist(rng), den_dist(rng));
        v.canonicalize();
        a.at(i, j) = v;
        a.at(j, i) = -v;
      }
    const auto red = skew_congruence_reduce(a);
    CAPTURE(trial);
    CHECK(red.rank % 2 == 0);
    CHECK(red.transform.determinant() != 0);
    CHECK(red.transform * a * red.transform.transposed() ==
          skew_canonical_form(n, red.rank));
  }
}

TEST_CASE("rational matrix helpers") {
  RationalMatrix m(2);
  m.at(0, 0) = Rational(1, 2);
  m.at(0, 1) = 3;
  m.at(1, 0) = -1;
  m.at(1, 1) = 4;
  CHECK(m.determinant() == Rational(5));  // 2 + 3
  CHECK(m.transposed().at(0, 1) == -1);
  CHECK_FALSE(m.is_skew_symmetric());
  const auto id = RationalMatrix::identity(2);
  CHECK(m * id == m);
}
