#include "padic/checks.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "padic/box_parity.hpp"
#include "padic/digit_core.hpp"
#include "padic/oracles.hpp"
#include "padic/theta_engine.hpp"
#include "padic/variety_degrees.hpp"

namespace padic::checks {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  template <typename... Parts>
  void expect(bool ok, const Parts&... parts) {
    ++result_.checks;
    if (ok) return;
    ++result_.failures;
    if (result_.first_counterexample.empty()) {
      std::ostringstream os;
      (os << ... << parts);
      result_.first_counterexample = os.str();
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::uint64_t naive_digit_window(std::uint64_t lo, std::uint64_t count) {
  std::uint64_t sum = 0;
  for (std::uint64_t j = lo; j < lo + count; ++j) sum += digit_sum(j);
  return sum;
}

}  // namespace

SuiteResult run_digit_suite(std::optional<std::uint64_t> bound) {
  const std::uint64_t b = bound.value_or(10000);
  Recorder rec("digit");

  // Reflection s(2^e - 1 - k) = e - s(k).
  for (std::uint64_t e = 0; e <= 16; ++e)
    for (std::uint64_t k = 0; k < (std::uint64_t{1} << e); ++k)
      rec.expect(digit_sum(((std::uint64_t{1} << e) - 1) - k) == e - digit_sum(k),
                 "reflection fails at e=", e, " k=", k);

  // Halving recursion and agreement with naive summation.
  std::uint64_t running = 0;
  for (std::uint64_t a = 0; a <= b; ++a) {
    rec.expect(digit_sum_prefix(a) == running, "S(", a, ") != naive sum");
    running += digit_sum(a);
  }
  for (std::uint64_t p = 0; p <= b; ++p) {
    rec.expect(digit_sum_prefix(2 * p) == 2 * digit_sum_prefix(p) + p,
               "S(2p) recursion fails at p=", p);
    rec.expect(digit_sum_prefix(2 * p + 1) ==
                   digit_sum_prefix(p + 1) + digit_sum_prefix(p) + p,
               "S(2p+1) recursion fails at p=", p);
  }

  // Legendre against exact factorials.
  {
    Nat fact = 1;
    for (std::uint64_t n = 0; n <= std::min<std::uint64_t>(b, 2000); ++n) {
      if (n > 0) fact *= nat_from_u64(n);
      rec.expect(factorial_valuation(n) == (n == 0 ? 0 : integer_valuation(fact)),
                 "Legendre fails at n=", n);
    }
  }

  // Subadditivity with equality iff disjoint.
  for (std::uint64_t x = 0; x <= std::min<std::uint64_t>(b, 512); ++x)
    for (std::uint64_t y = 0; y <= std::min<std::uint64_t>(b, 512); ++y) {
      const std::uint64_t lhs = digit_sum(x + y), rhs = digit_sum(x) + digit_sum(y);
      rec.expect(lhs <= rhs, "subadditivity fails at ", x, ",", y);
      rec.expect((lhs == rhs) == disjoint_expansion(x, y),
                 "disjointness criterion fails at ", x, ",", y);
    }

  // Window inequalities over sum_{j=l}^{l+p-1} s(j).
  const std::uint64_t wmax = std::min<std::uint64_t>(b, 256);
  for (std::uint64_t l = 0; l <= wmax; ++l)
    for (std::uint64_t p = 0; p <= wmax; ++p) {
      const std::uint64_t window = naive_digit_window(l, p);
      const std::uint64_t sp = digit_sum_prefix(p);
      if (l >= p) rec.expect(window >= p + sp, "window >= p+S(p) fails at l=", l, " p=", p);
      if (l <= p) rec.expect(window >= l + sp, "window >= l+S(p) fails at l=", l, " p=", p);
      rec.expect(window >= sp, "window >= S(p) fails at l=", l, " p=", p);
      rec.expect((window == sp) == (p == 0 || l == 0),
                 "window equality case fails at l=", l, " p=", p);
    }

  return rec.take();
}

SuiteResult run_theta_suite(std::optional<std::uint64_t> bound) {
  const std::uint64_t b = bound.value_or(200);
  Recorder rec("theta");

  for (std::uint64_t n = 1; n <= b; ++n) {
    for (std::uint64_t q = 1; q <= n; ++q) {
      const Nat exact = theta_exact(q, n);
      const std::uint64_t via_exact = integer_valuation(exact);
      const std::uint64_t fast = theta_valuation(q, n);
      rec.expect(fast == via_exact, "valuation mismatch at q=", q, " n=", n, ": ",
                 fast, " vs ", via_exact);
      rec.expect(theta_is_odd(q, n) == (via_exact == 0),
                 "parity criterion mismatch at q=", q, " n=", n);
    }
  }

  // Odd-difference law nu2(theta_{q,n}) = nu2(theta_{q+1,n}) + q.
  for (std::uint64_t n = 2; n <= b; ++n)
    for (std::uint64_t q = 1; q < n; ++q) {
      if ((n - q) % 2 == 0) continue;
      const std::uint64_t v = theta_valuation(q, n);
      rec.expect(v == theta_valuation(q + 1, n) + q && v >= q,
                 "odd-difference law fails at q=", q, " n=", n);
    }

  // General product recursion over nu2(n-q+2j).
  const std::uint64_t qmax = std::min<std::uint64_t>(79, b);
  for (std::uint64_t q = 0; q < qmax; ++q)
    for (std::uint64_t n = q + 1; n <= std::max<std::uint64_t>(240, b); ++n) {
      std::uint64_t drop = 0;
      for (std::uint64_t j = 0; j <= q; ++j) drop += integer_valuation(n - q + 2 * j);
      rec.expect(theta_valuation(q, n) + drop == theta_valuation(q + 1, n) + q,
                 "product recursion fails at q=", q, " n=", n);
    }

  return rec.take();
}

SuiteResult run_interval_suite(std::optional<std::uint64_t> bound) {
  const std::uint64_t qmax = bound.value_or(64);
  Recorder rec("interval");

  for (std::uint64_t q = 1; q <= qmax; ++q) {
    const std::uint64_t Q = std::bit_ceil(q);
    const auto seq = nu_sequence(q, 4 * Q);
    for (std::uint64_t c = 0; c <= 3; ++c) {
      for (auto kind : {IntervalKind::opening, IntervalKind::closing}) {
        const auto rep = interval_report(q, c, kind);
        if (rep.degenerate) {
          rec.expect(rep.first == rep.last && seq[rep.first] == 0,
                     "degenerate interval not a zero point at q=", q, " c=", c);
          continue;
        }
        rec.expect(rep.symmetry_ok, "symmetry fails at q=", q, " c=", c, " ",
                   to_string(kind));
        rec.expect(rep.lower_bound_ok, "lower bound fails at q=", q, " c=", c, " ",
                   to_string(kind));
        rec.expect(rep.upper_bound_ok, "upper bound fails at q=", q, " c=", c, " ",
                   to_string(kind));
        rec.expect(rep.endpoint_values == std::pair<std::uint64_t, std::uint64_t>{0, 0},
                   "endpoints not zero at q=", q, " c=", c, " ", to_string(kind));
        std::uint64_t maxv = 0;
        for (std::uint64_t i = rep.first; i <= rep.last; ++i)
          maxv = std::max(maxv, seq[i]);
        rec.expect(maxv == rep.center_value, "center value is not the max at q=", q,
                   " c=", c, " ", to_string(kind), ": max=", maxv, " center=",
                   rep.center_value);
        for (std::uint64_t ci : rep.center_indices)
          rec.expect(seq[ci] == rep.center_value, "center index off at q=", q,
                     " c=", c, " ", to_string(kind));
        // The maximum may only be attained at the reported centers.
        for (std::uint64_t i = rep.first; i <= rep.last; ++i)
          if (seq[i] == maxv && maxv > 0)
            rec.expect(std::find(rep.center_indices.begin(), rep.center_indices.end(),
                                 i) != rep.center_indices.end(),
                       "max attained off-center at q=", q, " c=", c, " i=", i);
      }

      // Valuation-1 sites against a direct scan of the interval pair.
      std::vector<std::uint64_t> scan;
      for (std::uint64_t i = c * Q; i <= (c + 1) * Q; ++i)
        if (seq[i] == 1) scan.push_back(i);
      rec.expect(valuation_one_sites(q, c) == scan,
                 "valuation-1 sites disagree with scan at q=", q, " c=", c);
    }
  }

  return rec.take();
}

SuiteResult run_epsilon_suite(std::optional<std::uint64_t> bound) {
  const std::uint64_t nmax = bound.value_or(200);
  Recorder rec("epsilon");

  for (std::uint64_t n = 4; n <= nmax; ++n) {
    for (std::uint64_t p = 1; 2 * p < n; ++p) {
      Nat exact;
      bool division_exact = true;
      try {
        exact = epsilon_exact(p, n);
      } catch (const std::logic_error&) {
        division_exact = false;
      }
      rec.expect(division_exact, "2^(n-2p-1) does not divide delta at p=", p,
                 " n=", n);
      if (!division_exact) continue;
      rec.expect(epsilon_is_odd(p, n) == (exact % 2 == 1),
                 "parity criterion mismatch at p=", p, " n=", n);
      rec.expect(epsilon_valuation(p, n) == integer_valuation(exact),
                 "valuation mismatch at p=", p, " n=", n);
    }
    if (n % 4 == 2)
      rec.expect(epsilon_is_odd((n - 2) / 2, n),
                 "corank-2 family not odd at n=", n);
  }

  return rec.take();
}

SuiteResult run_box_suite(std::optional<std::uint64_t> bound) {
  const std::uint64_t b = bound.value_or(32);
  Recorder rec("box");

  // Enumeration oracle on small boxes plus a few wide ones inside the guard.
  std::vector<BoxDims> oracle_cases;
  for (std::uint64_t a = 0; a <= 4; ++a)
    for (std::uint64_t y = 0; y <= 4; ++y)
      for (std::uint64_t z = 0; z <= 4; ++z) oracle_cases.push_back({a, y, z});
  oracle_cases.push_back({1, 5, 5});
  oracle_cases.push_back({2, 3, 6});
  oracle_cases.push_back({5, 5, 1});
  for (const auto& d : oracle_cases) {
    const Nat counted = plane_partition_count(d);
    const Nat formula = box_count_exact(d);
    rec.expect(counted == formula, "enumeration disagrees at (", d.a, ",", d.b, ",",
               d.c, ")");
    rec.expect(box_valuation(d) == valuation_by_trailing_zeros(formula),
               "valuation disagrees at (", d.a, ",", d.b, ",", d.c, ")");
  }

  // Trace verdict vs exact parity.
  const std::uint64_t tmax = std::min<std::uint64_t>(b, 32);
  for (std::uint64_t x = 0; x <= tmax; ++x)
    for (std::uint64_t y = 0; y <= tmax; ++y)
      for (std::uint64_t z = 0; z <= tmax; ++z) {
        const BoxDims d{x, y, z};
        rec.expect(box_parity_trace(d).odd == (box_count_exact(d) % 2 == 1),
                   "trace verdict wrong at (", x, ",", y, ",", z, ")");
      }

  // Halving identities on valuations.
  const auto nu = [](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    return box_valuation({x, y, z});
  };
  const std::uint64_t hmax = std::min<std::uint64_t>(b, 50);
  for (std::uint64_t x = 0; x <= hmax; ++x)
    for (std::uint64_t y = 0; y <= hmax; ++y)
      for (std::uint64_t z = 0; z <= hmax; ++z) {
        rec.expect(nu(2 * x, 2 * y, 2 * z) == 2 * nu(x, y, z),
                   "all-even identity fails at (", x, ",", y, ",", z, ")");
        rec.expect(nu(2 * x, 2 * y + 1, 2 * z + 1) ==
                       nu(x, y + 1, z) + nu(x, y, z + 1),
                   "two-odd identity fails at (", x, ",", y, ",", z, ")");
        rec.expect(nu(2 * x + 1, 2 * y, 2 * z) == nu(x, y, z) + nu(x + 1, y, z),
                   "one-odd identity fails at (", x, ",", y, ",", z, ")");
        const std::uint64_t all_odd = nu(2 * x + 1, 2 * y + 1, 2 * z + 1);
        const auto shift = static_cast<std::int64_t>(digit_sum(y + z)) -
                           static_cast<std::int64_t>(digit_sum(y + z + 1)) + 2;
        rec.expect(static_cast<std::int64_t>(all_odd) ==
                           static_cast<std::int64_t>(nu(x, y + 1, z + 1) +
                                                     nu(x + 1, y, z)) +
                               shift &&
                       all_odd >= 1,
                   "all-odd identity fails at (", x, ",", y, ",", z, ")");
      }

  // Permutation symmetry of valuation and verdict.
  const std::uint64_t smax = std::min<std::uint64_t>(b, 64);
  for (std::uint64_t x = 0; x <= smax; ++x)
    for (std::uint64_t y = x; y <= smax; ++y)
      for (std::uint64_t z = y; z <= smax; ++z) {
        const std::uint64_t v = nu(x, y, z);
        const bool o = box_is_odd({x, y, z});
        bool same = true;
        const std::uint64_t perm[6][3] = {{x, y, z}, {x, z, y}, {y, x, z},
                                          {y, z, x}, {z, x, y}, {z, y, x}};
        for (const auto& p : perm)
          same = same && nu(p[0], p[1], p[2]) == v &&
                 box_is_odd({p[0], p[1], p[2]}) == o;
        rec.expect(same, "symmetry fails at (", x, ",", y, ",", z, ")");
      }

  // Closed forms agree with the trace verdict wherever they apply.
  const std::uint64_t cmax = std::max<std::uint64_t>(std::min<std::uint64_t>(b * 4, 128), 16);
  for (std::uint64_t a : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{3},
                          std::uint64_t{4}, std::uint64_t{8}, std::uint64_t{16}})
    for (std::uint64_t y = 0; y <= cmax; ++y)
      for (std::uint64_t z = 0; z <= cmax; ++z) {
        const BoxDims d{a, y, z};
        const auto closed = box_small_a_parity(d);
        if (!closed) continue;
        rec.expect(*closed == box_is_odd(d), "closed form wrong at (", a, ",", y,
                   ",", z, ")");
      }

  // gamma bridge and the sufficient odd-parity case list.
  const std::uint64_t gmax = std::min<std::uint64_t>(b, 24);
  for (std::uint64_t n = 1; n <= gmax; ++n)
    for (std::uint64_t m = n; m <= gmax; ++m)
      for (std::uint64_t k = 1; k < n; ++k) {
        const bool odd = box_is_odd({n - k, m - k, k});
        rec.expect((gamma_exact(k, m, n) % 2 == 1) == odd,
                   "gamma parity bridge fails at k=", k, " m=", m, " n=", n);
        const auto matched = gamma_odd_case_check(k, m, n);
        if (matched) rec.expect(*matched && odd, "gamma case list wrong at k=", k,
                                " m=", m, " n=", n);
      }

  return rec.take();
}

SuiteResult run_skew_suite(std::optional<std::uint64_t> bound) {
  const std::uint64_t trials = bound.value_or(200);
  Recorder rec("skew");
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_int_distribution<int> order_dist(2, 8);
  std::uniform_int_distribution<int> num_dist(-9, 9);
  std::uniform_int_distribution<int> den_dist(1, 9);
  std::uniform_int_distribution<int> mode_dist(0, 3);

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const std::size_t n = static_cast<std::size_t>(order_dist(rng));
    RationalMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Rational v(num_dist(rng), den_dist(rng));
        v.canonicalize();
        a.at(i, j) = v;
        a.at(j, i) = -v;
      }
    if (mode_dist(rng) == 0) {
      // Force rank deficiency: wipe a row/column pair.
      std::uniform_int_distribution<std::size_t> row_dist(0, n - 1);
      const std::size_t r = row_dist(rng);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(r, j) = 0;
        a.at(j, r) = 0;
      }
    }

    const auto red = skew_congruence_reduce(a);
    rec.expect(red.rank % 2 == 0, "odd rank in trial ", trial);
    rec.expect(red.transform.determinant() != 0, "singular transform in trial ",
               trial);
    const RationalMatrix lhs =
        red.transform * a * red.transform.transposed();
    rec.expect(lhs == skew_canonical_form(n, red.rank),
               "congruence not canonical in trial ", trial);
  }

  return rec.take();
}

std::vector<SuiteResult> run_suites(const std::string& selector,
                                    std::optional<std::uint64_t> bound) {
  std::vector<SuiteResult> results;
  const auto want = [&](const char* name) {
    return selector == "all" || selector == name;
  };
  if (selector != "all" && selector != "digit" && selector != "theta" &&
      selector != "interval" && selector != "epsilon" && selector != "box" &&
      selector != "skew")
    throw std::invalid_argument("unknown suite: " + selector);
  if (want("digit")) results.push_back(run_digit_suite(bound));
  if (want("theta")) results.push_back(run_theta_suite(bound));
  if (want("interval")) results.push_back(run_interval_suite(bound));
  if (want("epsilon")) results.push_back(run_epsilon_suite(bound));
  if (want("box")) results.push_back(run_box_suite(bound));
  if (want("skew")) results.push_back(run_skew_suite(bound));
  return results;
}

}  // namespace padic::checks
