#include "padic/theta_engine.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

#include "padic/digit_core.hpp"

namespace padic {

namespace {

constexpr std::uint64_t kWordSafeLimit = std::uint64_t{1} << 57;

// nu2(theta_{q,n}) for even difference n - q = 2p.
std::uint64_t valuation_even_difference(std::uint64_t p, std::uint64_t n) {
  if (n < kWordSafeLimit) {
    // S(n) - S(n-p) >= S(p) + p, so each subtraction stays nonnegative.
    std::uint64_t v = digit_sum_prefix(n) - digit_sum_prefix(n - p);
    v -= digit_sum_prefix(p);
    v -= p;
    return v;
  }
  Nat v = digit_sum_prefix(nat_from_u64(n)) - digit_sum_prefix(nat_from_u64(n - p));
  v -= digit_sum_prefix(nat_from_u64(p));
  v -= nat_from_u64(p);
  assert(sgn(v) >= 0);
  return to_u64(v);
}

}  // namespace

Nat theta_exact(std::uint64_t q, std::uint64_t n) {
  if (q == 0) return 1;
  if (q > n) return 0;

  // Numerator factors C(n+j, q-j), j = 0..q-1, built incrementally:
  // C(n+j, q-j) = C(n+j-1, q-j+1) * (n+j)(q-j+1) / ((n-q+2j)(n-q+2j-1)).
  std::vector<Nat> nums;
  nums.reserve(q);
  Nat bin;
  mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(q));
  nums.push_back(bin);
  for (std::uint64_t j = 1; j < q; ++j) {
    bin *= nat_from_u64(n + j) * nat_from_u64(q - j + 1);
    Nat den = nat_from_u64(n - q + 2 * j) * nat_from_u64(n - q + 2 * j - 1);
    assert(mpz_divisible_p(bin.get_mpz_t(), den.get_mpz_t()));
    mpz_divexact(bin.get_mpz_t(), bin.get_mpz_t(), den.get_mpz_t());
    nums.push_back(bin);
  }

  // Denominator factors C(2j+1, j): C(2j+1, j) = C(2j-1, j-1) * 2(2j+1)/(j+1).
  std::vector<Nat> dens;
  dens.reserve(q);
  Nat cat = 1;  // C(1, 0)
  dens.push_back(cat);
  for (std::uint64_t j = 1; j < q; ++j) {
    cat *= 2 * nat_from_u64(2 * j + 1);
    Nat den = nat_from_u64(j + 1);
    mpz_divexact(cat.get_mpz_t(), cat.get_mpz_t(), den.get_mpz_t());
    dens.push_back(cat);
  }

  Nat numerator = balanced_product(std::move(nums));
  Nat denominator = balanced_product(std::move(dens));
  Nat quotient, remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
              denominator.get_mpz_t());
  if (remainder != 0)
    throw std::logic_error("theta_exact: product quotient is not integral");
  return quotient;
}

std::uint64_t theta_valuation(std::uint64_t q, std::uint64_t n) {
  if (q > n)
    throw std::domain_error("theta_valuation: theta is zero for q > n; valuation undefined");
  if ((n - q) % 2 == 0) return valuation_even_difference((n - q) / 2, n);
  // Odd difference: nu2(theta_{q,n}) = nu2(theta_{q+1,n}) + q, and n-(q+1) is even.
  return valuation_even_difference((n - q - 1) / 2, n) + q;
}

bool theta_is_odd(std::uint64_t q, std::uint64_t n) {
  if (q == 0) return true;   // theta_{0,n} = 1
  if (q > n) return false;   // theta_{q,n} = 0
  if (q > (std::uint64_t{1} << 62))
    throw std::domain_error("theta_is_odd: q too large for the modulus");
  const std::uint64_t modulus = 2 * std::bit_ceil(q);  // 2^ceil(log2 2q)
  return (n - q) % modulus == 0 || (n + q) % modulus == 0;
}

ValuationReport delta_valuation(std::uint64_t k, std::uint64_t n, bool with_exact) {
  if (k > n) throw std::domain_error("delta_valuation: requires k <= n");
  const std::uint64_t q = n - k;
  ValuationReport report;
  report.valuation = theta_valuation(q, n);
  report.parity_odd = report.valuation == 0;
  report.path = ValuationPath::digit_sum_formula;
  if (with_exact) {
    report.exact_value = theta_exact(q, n);
    assert(integer_valuation(*report.exact_value) == report.valuation);
  }
  return report;
}

std::vector<std::uint64_t> nu_sequence(std::uint64_t q, std::uint64_t i_max) {
  std::vector<std::uint64_t> values;
  values.reserve(i_max + 1);
  for (std::uint64_t i = 0; i <= i_max; ++i)
    values.push_back(valuation_even_difference(i, q + 2 * i));
  return values;
}

IntervalReport interval_report(std::uint64_t q, std::uint64_t c, IntervalKind kind) {
  if (q == 0) throw std::domain_error("interval_report: requires q >= 1");
  if (q > (std::uint64_t{1} << 62))
    throw std::domain_error("interval_report: q too large for the period");
  IntervalReport rep;
  rep.q = q;
  rep.c = c;
  rep.kind = kind;
  const std::uint64_t Q = std::bit_ceil(q);
  const auto L = static_cast<std::uint64_t>(std::countr_zero(Q));  // log2 Q
  rep.Q = Q;

  if (kind == IntervalKind::opening) {
    rep.first = c * Q;
    rep.last = (c + 1) * Q - q;
  } else {
    rep.first = (c + 1) * Q - q;
    rep.last = (c + 1) * Q;
  }

  auto nu = [q](std::uint64_t i) { return theta_valuation(q, q + 2 * i); };

  if (rep.first == rep.last) {  // q = Q: the opening interval is one point
    rep.degenerate = true;
    rep.center_indices = {rep.first};
    rep.center_value = 0;
    const std::uint64_t v = nu(rep.first);
    rep.endpoint_values = {v, v};
    rep.symmetry_ok = rep.lower_bound_ok = rep.upper_bound_ok = true;
    return rep;
  }

  const auto S = [](std::uint64_t a) { return digit_sum_prefix(a); };
  const auto s = [](std::uint64_t a) { return digit_sum(a); };
  // s(c) - s(c+1) + 1 >= 0 for every c.
  const auto carry = static_cast<std::uint64_t>(
      static_cast<std::int64_t>(s(c)) - static_cast<std::int64_t>(s(c + 1)) + 1);

  if (kind == IntervalKind::opening) {
    if (q % 2 == 0) {
      const std::uint64_t h = (Q - q) / 2;
      rep.center_indices = {c * Q + h};
      rep.center_value = h * (L - 1) - 2 * S(h);
    } else {
      const std::uint64_t h = (Q - q - 1) / 2;
      rep.center_indices = {c * Q + h, c * Q + h + 1};
      rep.center_value = h * (L - 1) - 2 * S(h) - s(h);
    }
  } else {
    if (q % 2 == 0) {
      const std::uint64_t h = q / 2;
      rep.center_indices = {(c + 1) * Q - h};
      rep.center_value = h * L - 2 * S(h) + h * carry;
    } else {
      const std::uint64_t h = (q - 1) / 2;
      rep.center_indices = {(c + 1) * Q - h - 1, (c + 1) * Q - h};
      rep.center_value = h * L - 2 * S(h) - s(h) + h * carry;
    }
  }

  rep.endpoint_values = {nu(rep.first), nu(rep.last)};
  rep.symmetry_ok = true;
  rep.lower_bound_ok = true;
  rep.upper_bound_ok = true;
  for (std::uint64_t i = rep.first; i <= rep.last; ++i) {
    const std::uint64_t v = nu(i);
    const std::uint64_t mirror = rep.first + rep.last - i;
    if (v != nu(mirror)) rep.symmetry_ok = false;
    if (v < std::min(i - rep.first, rep.last - i)) rep.lower_bound_ok = false;
    std::uint64_t to_center = UINT64_MAX;
    for (std::uint64_t ci : rep.center_indices)
      to_center = std::min(to_center, i < ci ? ci - i : i - ci);
    if (rep.center_value < to_center || v > rep.center_value - to_center)
      rep.upper_bound_ok = false;
  }
  return rep;
}

std::vector<std::uint64_t> valuation_one_sites(std::uint64_t q, std::uint64_t c) {
  std::vector<std::uint64_t> sites;
  if (q == 0) return sites;
  if (q > (std::uint64_t{1} << 62))
    throw std::domain_error("valuation_one_sites: q too large for the period");
  const std::uint64_t Q = std::bit_ceil(q);
  if (q % 2 == 1 && std::popcount(q + 1) == 2) {
    // q = 2^M + 2^m - 1, 0 < m < M: near the opening-interval endpoints.
    sites.push_back(c * Q + 1);
    sites.push_back((c + 1) * Q - q - 1);
  }
  if (q >= 2 && std::popcount(Q - q + 1) == 1 && c % 2 == 0) {
    // Covers q a power of two (Q-q+1 = 1) and odd q = Q+1-2^j alike.
    sites.push_back((c + 1) * Q - q + 1);
    sites.push_back((c + 1) * Q - 1);
  }
  std::sort(sites.begin(), sites.end());
  sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
  return sites;
}

const char* to_string(IntervalKind kind) {
  return kind == IntervalKind::opening ? "opening" : "closing";
}

}  // namespace padic
