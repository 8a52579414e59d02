#include "padic/variety_degrees.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "padic/box_parity.hpp"
#include "padic/digit_core.hpp"
#include "padic/theta_engine.hpp"

namespace padic {

namespace {

void require_epsilon_range(std::uint64_t p, std::uint64_t n) {
  if (n < 2 || p < 1 || p > n / 2)
    throw std::domain_error("epsilon: requires n >= 2 and 1 <= p <= floor(n/2)");
}

}  // namespace

Nat gamma_exact(std::uint64_t k, std::uint64_t m, std::uint64_t n) {
  if (k < 1 || k > std::min(m, n))
    throw std::domain_error("gamma_exact: requires 1 <= k <= min(m, n)");

  const Nat via_box = box_count_exact({n - k, m - k, k});

  // Assertion path: prod_{j=0}^{n-k-1} (m+j)! j! / ((k+j)! (m-k+j)!).
  std::vector<Nat> nums, dens;
  Nat f_mj, f_j, f_kj, f_mkj;
  mpz_fac_ui(f_mj.get_mpz_t(), static_cast<unsigned long>(m));
  f_j = 1;
  mpz_fac_ui(f_kj.get_mpz_t(), static_cast<unsigned long>(k));
  mpz_fac_ui(f_mkj.get_mpz_t(), static_cast<unsigned long>(m - k));
  for (std::uint64_t j = 0; j < n - k; ++j) {
    if (j > 0) {
      f_mj *= nat_from_u64(m + j);
      f_j *= nat_from_u64(j);
      f_kj *= nat_from_u64(k + j);
      f_mkj *= nat_from_u64(m - k + j);
    }
    nums.push_back(f_mj);
    nums.push_back(f_j);
    dens.push_back(f_kj);
    dens.push_back(f_mkj);
  }
  Nat numerator = balanced_product(std::move(nums));
  Nat denominator = balanced_product(std::move(dens));
  Nat quotient, remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
              denominator.get_mpz_t());
  if (remainder != 0 || quotient != via_box)
    throw std::logic_error("gamma_exact: product path disagrees with the box formula");
  return via_box;
}

Nat epsilon_exact(std::uint64_t p, std::uint64_t n) {
  require_epsilon_range(p, n);
  if (2 * p == n) return 1;  // codimension-0 boundary, flagged via epsilon_degenerate
  const std::uint64_t q = n - 2 * p - 1;
  Nat theta = theta_exact(q, n);
  // 2^q | theta_{q,n} whenever n - q is odd; a failure here is an arithmetic bug.
  if (q > 0 && mpz_scan1(theta.get_mpz_t(), 0) < q)
    throw std::logic_error("epsilon_exact: division by 2^(n-2p-1) is not exact");
  Nat result;
  mpz_tdiv_q_2exp(result.get_mpz_t(), theta.get_mpz_t(), q);
  return result;
}

std::uint64_t epsilon_valuation(std::uint64_t p, std::uint64_t n) {
  require_epsilon_range(p, n);
  if (2 * p == n) return 0;
  return theta_valuation(n - 2 * p, n);
}

bool epsilon_is_odd(std::uint64_t p, std::uint64_t n) {
  require_epsilon_range(p, n);
  const std::uint64_t q = n - 2 * p;
  if (q <= 1) return true;  // epsilon = 1 at the boundary
  const std::uint64_t modulus = std::bit_ceil(q);  // 2^ceil(log2(n-2p))
  return p % modulus == 0 || (n - p) % modulus == 0;
}

bool epsilon_degenerate(std::uint64_t p, std::uint64_t n) {
  require_epsilon_range(p, n);
  return n - 2 * p <= 1;
}

SubspaceThresholds subspace_thresholds(const DegreeQuery& query) {
  SubspaceThresholds out;
  bool odd = false;
  switch (query.family) {
    case Family::rectangular: {
      if (!query.m)
        throw std::domain_error("subspace_thresholds: rectangular queries need m");
      const std::uint64_t k = query.k_or_p, m = *query.m, n = query.n;
      if (k < 1 || k > std::min(m, n))
        throw std::domain_error("subspace_thresholds: requires 1 <= k <= min(m, n)");
      out.codim = (m - k) * (n - k);
      odd = box_is_odd({n - k, m - k, k});
      break;
    }
    case Family::symmetric: {
      const std::uint64_t k = query.k_or_p, n = query.n;
      if (k < 1 || k > n)
        throw std::domain_error("subspace_thresholds: requires 1 <= k <= n");
      out.codim = (n - k + 1) * (n - k) / 2;  // C(n-k+1, 2)
      odd = theta_is_odd(n - k, n);
      break;
    }
    case Family::skew: {
      const std::uint64_t p = query.k_or_p, n = query.n;
      require_epsilon_range(p, n);
      const std::uint64_t d = n - 2 * p;
      out.codim = d == 0 ? 0 : d * (d - 1) / 2;  // C(n-2p, 2)
      odd = epsilon_is_odd(p, n);
      break;
    }
  }
  out.complex_dim = out.codim + 1;
  if (odd) out.real_dim = out.codim + 1;
  return out;
}

}  // namespace padic
