#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace padic::checks {

// Property sweeps over the published identities, shared by the CLI `verify`
// subcommand and the acceptance suite. Each suite counts individual
// comparisons and keeps the first counterexample it sees.

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_counterexample;
  bool ok() const { return failures == 0; }
};

// Digit-sum kernels: reflection, prefix recursion + naive agreement,
// Legendre against exact factorials, subadditivity/disjointness, and the
// window inequalities. `bound` scales the prefix/naive sweep (default 10^4).
SuiteResult run_digit_suite(std::optional<std::uint64_t> bound = {});

// theta: fast path vs exact trailing zeros, parity biconditional, the
// odd-difference law and the general product recursion. `bound` is the
// maximum n (default 200; the acceptance suite runs 400).
SuiteResult run_theta_suite(std::optional<std::uint64_t> bound = {});

// Interval structure and valuation-1 sites vs direct scans, q <= bound
// (default 64), c <= 3.
SuiteResult run_interval_suite(std::optional<std::uint64_t> bound = {});

// epsilon: closed-form parity vs exact value, exact divisibility, and the
// n = 2 (mod 4) family, n <= bound (default 200).
SuiteResult run_epsilon_suite(std::optional<std::uint64_t> bound = {});

// box: enumeration oracle, trace verdict vs exact parity (<= min(bound,32)),
// halving identities (<= min(bound,50)), closed forms vs trace, gamma
// bridge, permutation symmetry.
SuiteResult run_box_suite(std::optional<std::uint64_t> bound = {});

// skew: randomized exact-rational reductions, `bound` matrices (default 200).
SuiteResult run_skew_suite(std::optional<std::uint64_t> bound = {});

// selector: digit|theta|interval|epsilon|box|skew|all. Throws
// std::invalid_argument on an unknown name.
std::vector<SuiteResult> run_suites(const std::string& selector,
                                    std::optional<std::uint64_t> bound = {});

}  // namespace padic::checks
