#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "padic/nat.hpp"

namespace padic {

// B(a,b,c): number of plane partitions in an a x b x c box,
// H(a)H(b)H(c)H(a+b+c) / (H(a+b)H(b+c)H(c+a)) with H the hyperfactorial.
// B is symmetric in (a,b,c) and equals 1 whenever a coordinate is zero.

struct BoxDims {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  friend bool operator==(const BoxDims&, const BoxDims&) = default;
};

enum class ReductionRule { base_case, all_even, one_odd, two_odd, all_odd_terminal };

// One application of the halving identities:
//   all even            (2a,2b,2c)     -> (a,b,c)
//   exactly two odd     (2a,2b+1,2c+1) -> (a,b+1,c), (a,b,c+1); odd iff both odd
//   exactly one odd     (2a+1,2b,2c)   -> (a,b,c), (a+1,b,c);   odd iff both odd
//   all odd             always even, terminal
//   any zero coordinate B = 1, odd, terminal
// dims_in and children are recorded in canonical orientation (coordinates
// sorted, the even/odd grouping of the matching rule).
struct ReductionStep {
  BoxDims dims_in;
  ReductionRule rule = ReductionRule::base_case;
  std::vector<BoxDims> children;
  bool pruned = false;  // second child skipped: the first was already even
};

// Parity certificate. Steps appear in depth-first order, first visit only
// (revisited subproblems are not repeated); depth <= bit length + 1.
struct ReductionTrace {
  std::vector<ReductionStep> steps;
  bool odd = false;
};

// H(n) = prod_{k<n} k!; H(0) = H(1) = 1.
Nat hyperfactorial(std::uint64_t n);

// Exact count via the hyperfactorial quotient, one division with a
// zero-remainder assertion.
Nat box_count_exact(const BoxDims& d);

// nu2(B(a,b,c)) = S(a+b)+S(b+c)+S(a+c) - S(a+b+c) - S(a) - S(b) - S(c),
// digit-sum prefixes only.
std::uint64_t box_valuation(const BoxDims& d);

ReductionTrace box_parity_trace(const BoxDims& d);

// Verdict of the same recursion without materializing steps.
bool box_is_odd(const BoxDims& d);

// Closed-form parity where one applies, after sorting so a = min(a,b,c):
// a in {1,2,3} with min(b,c) >= a, or a = 2^e with b, c >= a and
// (b,c) = (0,0), (0,1), (1,0) or (1,1) mod 2^e. Absent when no closed form
// covers the input.
std::optional<bool> box_small_a_parity(const BoxDims& d);

// The enumerated sufficient conditions for gamma_{k,m,n} odd
// (k = n-1, n-2, n-3 and n = k + 2^e), for 1 <= k < n <= m. Returns true if
// some case matches; absence carries no parity information.
std::optional<bool> gamma_odd_case_check(std::uint64_t k, std::uint64_t m,
                                         std::uint64_t n);

// Line-oriented certificate form, one step per line:
//   (a,b,c) rule -> (a',b',c')[, (a'',b'',c'')][ pruned]
std::string to_text(const ReductionTrace& trace);
const char* to_string(ReductionRule rule);

}  // namespace padic
