#include "padic/box_parity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

#include "padic/digit_core.hpp"

namespace padic {

namespace {

std::array<std::uint64_t, 3> sorted_coords(const BoxDims& d) {
  std::array<std::uint64_t, 3> t{d.a, d.b, d.c};
  std::sort(t.begin(), t.end());
  return t;
}

ReductionRule classify(const std::array<std::uint64_t, 3>& t) {
  if (t[0] == 0) return ReductionRule::base_case;
  const int odd = (t[0] & 1) + (t[1] & 1) + (t[2] & 1);
  switch (odd) {
    case 0: return ReductionRule::all_even;
    case 1: return ReductionRule::one_odd;
    case 2: return ReductionRule::two_odd;
    default: return ReductionRule::all_odd_terminal;
  }
}

// Coordinates arranged to the rule's stated orientation: the lone-parity
// coordinate first, groups ascending. Sorting is licensed by B's symmetry.
BoxDims canonical_display(const BoxDims& d) {
  auto t = sorted_coords(d);
  const ReductionRule rule = classify(t);
  std::array<std::uint64_t, 3> out = t;
  if (rule == ReductionRule::two_odd) {
    // (even, odd, odd)
    std::size_t w = 0;
    for (auto v : t)
      if (v % 2 == 0) out[w++] = v;
    for (auto v : t)
      if (v % 2 == 1) out[w++] = v;
  } else if (rule == ReductionRule::one_odd) {
    // (odd, even, even)
    std::size_t w = 0;
    for (auto v : t)
      if (v % 2 == 1) out[w++] = v;
    for (auto v : t)
      if (v % 2 == 0) out[w++] = v;
  }
  return {out[0], out[1], out[2]};
}

std::pair<BoxDims, BoxDims> rule_children(const BoxDims& canon, ReductionRule rule) {
  const std::uint64_t x = canon.a, y = canon.b, z = canon.c;
  switch (rule) {
    case ReductionRule::all_even:
      return {{x / 2, y / 2, z / 2}, {x / 2, y / 2, z / 2}};
    case ReductionRule::two_odd:  // (2a, 2b+1, 2c+1) -> (a, b+1, c), (a, b, c+1)
      return {{x / 2, y / 2 + 1, z / 2}, {x / 2, y / 2, z / 2 + 1}};
    case ReductionRule::one_odd:  // (2a+1, 2b, 2c) -> (a, b, c), (a+1, b, c)
      return {{x / 2, y / 2, z / 2}, {x / 2 + 1, y / 2, z / 2}};
    default:
      throw std::logic_error("rule_children: terminal rule");
  }
}

struct TraceBuilder {
  std::map<std::array<std::uint64_t, 3>, bool> memo;
  std::vector<ReductionStep>* steps = nullptr;  // null: verdict only

  bool parity(const BoxDims& dims) {
    const auto key = sorted_coords(dims);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const ReductionRule rule = classify(key);
    const BoxDims canon = canonical_display(dims);
    ReductionStep step;
    step.dims_in = canon;
    step.rule = rule;

    bool odd = false;
    std::size_t slot = 0;
    if (steps) {
      slot = steps->size();
      steps->push_back(step);  // placeholder; children filled below
    }
    switch (rule) {
      case ReductionRule::base_case:
        odd = true;  // B = 1
        break;
      case ReductionRule::all_odd_terminal:
        odd = false;
        break;
      case ReductionRule::all_even: {
        const BoxDims child = rule_children(canon, rule).first;
        if (steps) (*steps)[slot].children = {canonical_display(child)};
        odd = parity(child);
        break;
      }
      default: {
        const auto [left, right] = rule_children(canon, rule);
        if (steps) (*steps)[slot].children = {canonical_display(left)};
        const bool left_odd = parity(left);
        if (!left_odd) {
          if (steps) (*steps)[slot].pruned = true;
          odd = false;
        } else {
          if (steps) (*steps)[slot].children.push_back(canonical_display(right));
          odd = parity(right);
        }
        break;
      }
    }
    memo.emplace(key, odd);
    return odd;
  }
};

}  // namespace

Nat hyperfactorial(std::uint64_t n) {
  std::vector<Nat> factorials;
  factorials.reserve(n);
  Nat f = 1;
  for (std::uint64_t k = 1; k < n; ++k) {
    f *= nat_from_u64(k);
    factorials.push_back(f);
  }
  return balanced_product(std::move(factorials));
}

Nat box_count_exact(const BoxDims& d) {
  const std::uint64_t total = d.a + d.b + d.c;
  // One pass, snapshots of H at the seven needed indices.
  std::map<std::uint64_t, Nat> h;
  for (std::uint64_t idx :
       {d.a, d.b, d.c, d.a + d.b, d.b + d.c, d.c + d.a, total})
    h.emplace(idx, 1);
  Nat f = 1, running = 1;
  auto it = h.begin();
  for (std::uint64_t k = 0; k <= total; ++k) {
    while (it != h.end() && it->first == k) {
      it->second = running;
      ++it;
    }
    if (it == h.end()) break;
    if (k > 0) f *= nat_from_u64(k);
    running *= f;
  }
  Nat numerator =
      h[d.a] * h[d.b] * h[d.c] * h[total];
  Nat denominator = h[d.a + d.b] * h[d.b + d.c] * h[d.c + d.a];
  Nat quotient, remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
              denominator.get_mpz_t());
  if (remainder != 0)
    throw std::logic_error("box_count_exact: hyperfactorial quotient is not integral");
  return quotient;
}

std::uint64_t box_valuation(const BoxDims& d) {
  const auto S = [](std::uint64_t x) {
    return static_cast<__int128>(digit_sum_prefix(x));
  };
  const __int128 v = S(d.a + d.b) + S(d.b + d.c) + S(d.c + d.a) -
                     S(d.a + d.b + d.c) - S(d.a) - S(d.b) - S(d.c);
  if (v < 0) throw std::logic_error("box_valuation: negative valuation");
  return static_cast<std::uint64_t>(v);
}

ReductionTrace box_parity_trace(const BoxDims& d) {
  ReductionTrace trace;
  TraceBuilder builder;
  builder.steps = &trace.steps;
  trace.odd = builder.parity(d);
  return trace;
}

bool box_is_odd(const BoxDims& d) {
  TraceBuilder builder;
  return builder.parity(d);
}

std::optional<bool> box_small_a_parity(const BoxDims& dims) {
  const auto t = sorted_coords(dims);
  const std::uint64_t a = t[0], b = t[1], c = t[2];
  const auto disj = [](std::uint64_t x, std::uint64_t y) {
    return disjoint_expansion(x, y);
  };

  if (a == 0) return true;  // B = 1
  if (a == 1) return disj(b, c);
  if (a == 2) {
    if (b % 2 == 0 && c % 2 == 0) return disj(b, c);
    if (b % 2 == 0 && c % 2 == 1) return disj(b, c) && disj(b, c + 1);
    if (b % 2 == 1 && c % 2 == 0) return disj(c, b) && disj(c, b + 1);
    return disj(b, c + 1) && disj(b + 1, c);
  }
  if (a == 3) {
    if (b % 2 == 1 && c % 2 == 1) return false;  // all three odd
    if (b % 2 == 0 && c % 2 == 0) {
      const std::uint64_t rb = b % 4, rc = c % 4;
      if (rb == 0 && rc == 0) return disj(b, c);
      if (rb == 0 && rc == 2) return disj(b, c) && disj(b, c + 2);
      if (rb == 2 && rc == 0) return disj(b, c) && disj(b + 2, c);
      return disj(b, c) && disj(b, c + 2) && disj(b + 2, c);
    }
    const std::uint64_t e = b % 2 == 0 ? b : c;  // the even one
    const std::uint64_t o = b % 2 == 0 ? c : b;
    if (e % 4 == 0) return disj(e, o) && disj(e, o + 1);
    return disj(e, o + 1) && disj(e + 2, o);
  }
  if (std::has_single_bit(a) && b >= a) {
    const std::uint64_t rb = b % a, rc = c % a;
    if (rb == 0 && rc == 0) return disj(b, c);
    if (rb == 0 && rc == 1) return disj(b, c) && disj(b, c + a - 1);
    if (rb == 1 && rc == 0) return disj(c, b) && disj(c, b + a - 1);
    if (rb == 1 && rc == 1)
      return disj(b + 1, c) && disj(b, c + 1) && disj(b + a - 1, c) &&
             disj(b, c + a - 1);
  }
  return std::nullopt;
}

std::optional<bool> gamma_odd_case_check(std::uint64_t k, std::uint64_t m,
                                         std::uint64_t n) {
  if (k < 1 || k >= n || n > m)
    throw std::domain_error("gamma_odd_case_check: requires 1 <= k < n <= m");
  const auto disj = [](std::uint64_t x, std::uint64_t y) {
    return disjoint_expansion(x, y);
  };

  if (k == n - 1 && disj(m - n + 1, n - 1)) return true;

  if (k == n - 2 && k >= 2) {
    if (n % 2 == 0 && m % 2 == 0 && disj(n - 2, m - n + 2)) return true;
    if (n % 2 == 0 && m % 2 == 1 && disj(n - 2, m - n + 2) && disj(n - 2, m - n + 3))
      return true;
    if (n % 2 == 1 && m % 2 == 0 && disj(n - 2, m - n + 3) && disj(n - 1, m - n + 2))
      return true;
  }

  if (k == n - 3 && k >= 3) {
    const std::uint64_t u = m - n + 3;
    if ((n - 3) % 4 == 0 && m % 4 == 0 && disj(n - 3, u)) return true;
    if ((n - 3) % 4 == 0 && (m + 2) % 4 == 0 && disj(n - 3, u) && disj(n - 3, u + 2))
      return true;
    if ((n - 1) % 4 == 0 && (m + 2) % 4 == 0 && disj(n - 3, u) && disj(n - 1, u))
      return true;
    // The b = c = 2 (mod 4) subcase needs all three disjointness conditions.
    if ((n - 1) % 4 == 0 && m % 4 == 0 && disj(n - 3, u) && disj(n - 1, u) &&
        disj(n - 3, u + 2))
      return true;
    if ((n - 3) % 4 == 0 && m % 2 == 1 && disj(n - 3, u) && disj(n - 3, u + 1))
      return true;
    if ((n - 1) % 4 == 0 && m % 2 == 1 && disj(n - 3, u + 1) && disj(n - 1, u))
      return true;
    if (u % 4 == 0 && n % 2 == 0 && disj(n - 3, u) && disj(n - 2, u)) return true;
    if ((u + 2) % 4 == 0 && n % 2 == 0 && disj(n - 2, u) && disj(n - 3, u + 2))
      return true;
  }

  const std::uint64_t d = n - k;
  if (std::has_single_bit(d)) {
    if (k % d == 0 && m % d == 0 && disj(k, m - k)) return true;
    if (k % d == 0 && (m - 1) % d == 0 && disj(k, m - k) && disj(k, m - k + d - 1))
      return true;
    if (n > 2 * d && (k - 1) % d == 0 && (m - 1) % d == 0 && disj(k, m - k) &&
        disj(k + d - 1, m - k))
      return true;
    if (n > 2 * d && (k - 1) % d == 0 && (m - 2) % d == 0 && disj(k + 1, m - k) &&
        disj(k, m - k + 1) && disj(k + d - 1, m - k) && disj(k, m - k + d - 1))
      return true;
  }

  return std::nullopt;
}

std::string to_text(const ReductionTrace& trace) {
  std::ostringstream out;
  for (const auto& step : trace.steps) {
    out << '(' << step.dims_in.a << ',' << step.dims_in.b << ',' << step.dims_in.c
        << ") " << to_string(step.rule);
    if (!step.children.empty()) {
      out << " ->";
      for (std::size_t i = 0; i < step.children.size(); ++i) {
        const auto& ch = step.children[i];
        out << (i == 0 ? " " : ", ") << '(' << ch.a << ',' << ch.b << ',' << ch.c
            << ')';
      }
    }
    if (step.pruned) out << " pruned";
    out << '\n';
  }
  return out.str();
}

const char* to_string(ReductionRule rule) {
  switch (rule) {
    case ReductionRule::base_case: return "base_case";
    case ReductionRule::all_even: return "all_even";
    case ReductionRule::one_odd: return "one_odd";
    case ReductionRule::two_odd: return "two_odd";
    case ReductionRule::all_odd_terminal: return "all_odd_terminal";
  }
  return "unknown";
}

}  // namespace padic
