#pragma once

#include <cstdint>
#include <optional>

#include "padic/nat.hpp"

namespace padic {

// Degrees and parities of the three determinantal families:
//   gamma_{k,m,n}  rank <= k among m x n matrices,
//   delta_{k,n}    rank <= k among symmetric n x n matrices (see theta_engine),
//   epsilon_{2p,n} rank <= 2p among skew-symmetric n x n matrices.

enum class Family { rectangular, symmetric, skew };

struct DegreeQuery {
  Family family = Family::symmetric;
  std::uint64_t k_or_p = 0;         // rank bound k, or p with rank bound 2p
  std::optional<std::uint64_t> m;   // rows, rectangular only
  std::uint64_t n = 0;              // columns / order
};

struct SubspaceThresholds {
  std::uint64_t codim = 0;
  std::uint64_t complex_dim = 0;               // always codim + 1
  std::optional<std::uint64_t> real_dim;       // present only under proven-odd parity
};

// gamma_{k,m,n} = B(n-k, m-k, k); also evaluated through the factorial
// product prod_j (m+j)! j! / ((k+j)! (m-k+j)!) and cross-asserted.
Nat gamma_exact(std::uint64_t k, std::uint64_t m, std::uint64_t n);

// epsilon_{2p,n} = theta_{n-2p-1,n} / 2^{n-2p-1}, exact division with a
// remainder assertion. The codimension-0 boundary p = n/2 returns 1.
Nat epsilon_exact(std::uint64_t p, std::uint64_t n);

// nu2(epsilon_{2p,n}) = nu2(theta_{n-2p,n}); no division, no big integers.
std::uint64_t epsilon_valuation(std::uint64_t p, std::uint64_t n);

// epsilon_{2p,n} is odd iff 2^ceil(log2(n-2p)) divides p or n-p. Total on
// 1 <= p <= floor(n/2); the degenerate boundary (epsilon = 1) yields true.
bool epsilon_is_odd(std::uint64_t p, std::uint64_t n);

// p = floor(n/2): rank bound does not constrain, codimension 0.
bool epsilon_degenerate(std::uint64_t p, std::uint64_t n);

// codim = (m-k)(n-k), C(n-k+1,2) or C(n-2p,2) per family; complex_dim =
// codim + 1; real_dim = codim + 1 when the family's parity predicate says
// odd, absent otherwise (no simple formula exists in the even case).
SubspaceThresholds subspace_thresholds(const DegreeQuery& query);

}  // namespace padic
