#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "padic/box_parity.hpp"
#include "padic/digit_core.hpp"
#include "padic/nat.hpp"

namespace padic {

// Independent brute-force and constructive-linear-algebra oracles. These
// validate the closed forms; they never share code with the paths they check.

using Rational = mpq_class;

// Dense square matrix of exact rationals (GMP keeps them reduced, with
// positive denominators).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t order)
      : order_(order), entries_(order * order) {}

  static RationalMatrix identity(std::size_t order);

  std::size_t order() const { return order_; }
  Rational& at(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const {
    return entries_[i * order_ + j];
  }

  bool is_skew_symmetric() const;
  RationalMatrix transposed() const;
  Rational determinant() const;  // Gaussian elimination over Q

  friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y);
  friend bool operator==(const RationalMatrix& x, const RationalMatrix& y);

 private:
  std::size_t order_ = 0;
  std::vector<Rational> entries_;
};

struct EnumerationGuard {
  std::uint64_t max_cells = 36;  // a*b
  std::uint64_t max_height = 8;  // c
};

// Counts a x b arrays with entries in [0,c], weakly decreasing along rows
// and columns, by depth-first enumeration with per-cell bounds. Rejects
// inputs beyond the guard ("use formula path") with std::domain_error.
Nat plane_partition_count(const BoxDims& d, const EnumerationGuard& guard = {});

struct SkewReduction {
  RationalMatrix transform;  // invertible T with T A T^t = sum S2 + 0
  std::uint64_t rank = 0;    // always even
};

// Constructive congruence normal form of a skew-symmetric rational matrix:
// T A T^t equals rank/2 copies of S2 = [[0,1],[-1,0]] followed by zeros.
// Pivots are the first nonzero entries in row-major order; each b*S2 block
// is rescaled to S2 by a diag(1, 1/b) congruence, exact over Q.
SkewReduction skew_congruence_reduce(const RationalMatrix& a);

// The sum-of-S2 target for a given rank; handy for exact comparisons.
RationalMatrix skew_canonical_form(std::size_t order, std::uint64_t rank);

// Alias of integer_valuation, re-exported so oracle-side comparisons read
// as an independent route.
inline std::uint64_t valuation_by_trailing_zeros(const Nat& x) {
  return integer_valuation(x);
}

}  // namespace padic
