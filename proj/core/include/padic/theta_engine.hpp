#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "padic/nat.hpp"

namespace padic {

// theta_{q,n} = prod_{j=0}^{q-1} C(n+j, q-j) / C(2j+1, j), the degree of the
// variety of symmetric n x n matrices of rank <= n-q. theta_{0,n} = 1 (empty
// product), theta_{q,n} = 0 for q > n.

struct ThetaQuery {
  std::uint64_t q = 0;  // number of product factors
  std::uint64_t n = 0;  // matrix order
};

enum class ValuationPath { digit_sum_formula, exact_product, closed_form_parity };

struct ValuationReport {
  std::uint64_t valuation = 0;
  bool parity_odd = false;
  std::optional<Nat> exact_value;
  ValuationPath path = ValuationPath::digit_sum_formula;
};

enum class IntervalKind { opening, closing };

// Analysis of one interval of the sequence i -> nu2(theta_{q,q+2i}) with
// Q = 2^ceil(log2 q): opening = [cQ, (c+1)Q - q], closing = [(c+1)Q - q,
// (c+1)Q]. The sequence is symmetric on each interval, vanishes exactly at
// the endpoints, and attains its maximum at the center (one integer point
// for q even, two for q odd).
struct IntervalReport {
  std::uint64_t q = 0;
  std::uint64_t c = 0;
  IntervalKind kind = IntervalKind::opening;
  std::uint64_t Q = 0;
  std::uint64_t first = 0;  // inclusive index range of the interval
  std::uint64_t last = 0;
  std::vector<std::uint64_t> center_indices;
  std::uint64_t center_value = 0;  // closed-form value at the center
  std::pair<std::uint64_t, std::uint64_t> endpoint_values{0, 0};
  bool degenerate = false;  // q a power of two: the opening interval is a point
  bool symmetry_ok = false;
  bool lower_bound_ok = false;  // nu(i) >= distance to the nearer endpoint
  bool upper_bound_ok = false;  // nu(i) <= center_value - distance to center
};

// Exact integer value; numerator and denominator products are evaluated
// exactly and divided once, with a zero-remainder assertion.
Nat theta_exact(std::uint64_t q, std::uint64_t n);

// nu2(theta_{q,n}) with no big integers: for n - q = 2p this is
// S(n) - S(n-p) - S(p) - p; odd differences reduce via
// nu2(theta_{q,n}) = nu2(theta_{q+1,n}) + q. Throws std::domain_error for
// q > n (theta is zero there; its valuation is undefined).
std::uint64_t theta_valuation(std::uint64_t q, std::uint64_t n);

// Parity by pure modular arithmetic: theta_{q,n} is odd iff n >= q and
// n = +-q (mod 2^ceil(log2 2q)). q > n yields false (theta = 0); q = 0
// yields true (theta = 1).
bool theta_is_odd(std::uint64_t q, std::uint64_t n);

// Report for delta_{k,n} = theta_{n-k,n}; exact value only on request.
ValuationReport delta_valuation(std::uint64_t k, std::uint64_t n,
                                bool with_exact = false);

// [nu2(theta_{q,q+2i}) for i = 0..i_max], fast path.
std::vector<std::uint64_t> nu_sequence(std::uint64_t q, std::uint64_t i_max);

IntervalReport interval_report(std::uint64_t q, std::uint64_t c, IntervalKind kind);

// Indices i in [cQ, (c+1)Q] with nu2(theta_{q,q+2i}) = 1, from the
// closed-form characterization (no scan): opening-interval sites
// {cQ+1, (c+1)Q-q-1} exist iff q is odd with s(q+1) = 2, closing-interval
// sites {(c+1)Q-q+1, (c+1)Q-1} exist iff Q-q+1 is a power of two and c is
// even.
std::vector<std::uint64_t> valuation_one_sites(std::uint64_t q, std::uint64_t c);

const char* to_string(IntervalKind kind);

inline Nat theta_exact(const ThetaQuery& t) { return theta_exact(t.q, t.n); }
inline std::uint64_t theta_valuation(const ThetaQuery& t) {
  return theta_valuation(t.q, t.n);
}
inline bool theta_is_odd(const ThetaQuery& t) { return theta_is_odd(t.q, t.n); }

}  // namespace padic
