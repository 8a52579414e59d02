#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <ctime>
#include <future>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "padic/box_parity.hpp"
#include "padic/checks.hpp"
#include "padic/digit_core.hpp"
#include "padic/oracles.hpp"
#include "padic/theta_engine.hpp"
#include "padic/variety_degrees.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace padic;

constexpr std::uint64_t kThetaExactGuard = 2000;  // max n on the exact theta path
constexpr std::uint64_t kBoxExactGuard = 3000;    // max a+b+c on the exact B path

struct Options {
  std::string format = "csv";
  std::uint64_t parallelism = 0;  // 0 = auto
  bool timestamps = false;
  bool no_guards = false;
};

struct Range {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t size() const { return hi - lo + 1; }
};

struct ScanSpec {
  std::string target;        // theta|epsilon|gamma|box
  std::vector<Range> ranges; // per-parameter inclusive ranges, row-major order
  bool exact = false;
};

Range parse_range(const std::string& text) {
  const auto colon = text.find(':');
  Range r;
  try {
    if (colon == std::string::npos) {
      r.lo = r.hi = std::stoull(text);
    } else {
      r.lo = std::stoull(text.substr(0, colon));
      r.hi = std::stoull(text.substr(colon + 1));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected N or LO:HI, got '" + text + "'");
  }
  if (r.hi < r.lo)
    throw CLI::ValidationError("range", "empty range '" + text + "'");
  return r;
}

std::uint64_t resolve_workers(const Options& opt) {
  std::uint64_t workers = opt.parallelism;
  if (workers == 0) workers = std::thread::hardware_concurrency();
  return std::max<std::uint64_t>(workers, 1);
}

void maybe_timestamp(const Options& opt) {
  if (!opt.timestamps) return;
  char buf[32];
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  if (opt.format == "json")
    std::cout << ordered_json{{"timestamp", buf}}.dump() << '\n';
  else
    std::cout << "# timestamp=" << buf << '\n';
}

std::string render_cell(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();  // decimal strings stay raw in CSV
  return v.dump();
}

void emit_record(const ordered_json& record, const Options& opt) {
  if (opt.format == "json") {
    std::cout << record.dump() << '\n';
    return;
  }
  std::string header, row;
  for (auto it = record.begin(); it != record.end(); ++it) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += it.key();
    row += render_cell(it.value());
  }
  std::cout << header << '\n' << row << '\n';
}

ordered_json trace_to_json(const ReductionTrace& trace) {
  ordered_json steps = ordered_json::array();
  for (const auto& step : trace.steps) {
    ordered_json children = ordered_json::array();
    for (const auto& ch : step.children)
      children.push_back(ordered_json::array({ch.a, ch.b, ch.c}));
    steps.push_back(ordered_json{{"dims", ordered_json::array({step.dims_in.a,
                                                               step.dims_in.b,
                                                               step.dims_in.c})},
                                 {"rule", to_string(step.rule)},
                                 {"children", children},
                                 {"pruned", step.pruned}});
  }
  return steps;
}

void require_guard(bool ok, const std::string& what, const Options& opt) {
  if (!opt.no_guards && !ok)
    throw std::domain_error(what + " (override with --no-guards)");
}

// ---- compute subcommands ----------------------------------------------------

void run_theta(std::uint64_t q, std::uint64_t n, bool exact, const Options& opt) {
  ordered_json rec;
  rec["q"] = q;
  rec["n"] = n;
  rec["valuation"] = theta_valuation(q, n);
  rec["odd"] = theta_is_odd(q, n);
  if (exact) {
    require_guard(n <= kThetaExactGuard, "exact theta path guarded to n <= 2000", opt);
    rec["exact"] = to_decimal(theta_exact(q, n));
  }
  maybe_timestamp(opt);
  emit_record(rec, opt);
}

void run_delta(std::uint64_t k, std::uint64_t n, bool exact, const Options& opt) {
  if (exact)
    require_guard(n <= kThetaExactGuard, "exact delta path guarded to n <= 2000", opt);
  const ValuationReport rep = delta_valuation(k, n, exact);
  ordered_json rec;
  rec["k"] = k;
  rec["n"] = n;
  rec["valuation"] = rep.valuation;
  rec["odd"] = rep.parity_odd;
  if (rep.exact_value) rec["exact"] = to_decimal(*rep.exact_value);
  maybe_timestamp(opt);
  emit_record(rec, opt);
}

void run_epsilon(std::uint64_t p, std::uint64_t n, bool exact, const Options& opt) {
  ordered_json rec;
  rec["p"] = p;
  rec["n"] = n;
  rec["valuation"] = epsilon_valuation(p, n);
  rec["odd"] = epsilon_is_odd(p, n);
  if (exact) {
    require_guard(n <= kThetaExactGuard, "exact epsilon path guarded to n <= 2000", opt);
    rec["exact"] = to_decimal(epsilon_exact(p, n));
  }
  if (epsilon_degenerate(p, n))
    std::cerr << "note: p = floor(n/2) is the codimension-0 boundary; degree 1 by convention\n";
  maybe_timestamp(opt);
  emit_record(rec, opt);
}

void run_gamma(std::uint64_t k, std::uint64_t m, std::uint64_t n, bool exact,
               const Options& opt) {
  if (k < 1 || k > std::min(m, n))
    throw std::domain_error("gamma requires 1 <= k <= min(m, n)");
  const BoxDims box{n - k, m - k, k};
  ordered_json rec;
  rec["k"] = k;
  rec["m"] = m;
  rec["n"] = n;
  rec["valuation"] = box_valuation(box);
  rec["odd"] = box_is_odd(box);
  if (exact) {
    require_guard(m + n - k <= kBoxExactGuard,
                  "exact gamma path guarded to m+n-k <= 3000", opt);
    rec["exact"] = to_decimal(gamma_exact(k, m, n));
  }
  maybe_timestamp(opt);
  emit_record(rec, opt);
}

void run_box(std::uint64_t a, std::uint64_t b, std::uint64_t c, bool exact,
             bool with_trace, const Options& opt) {
  const BoxDims box{a, b, c};
  ordered_json rec;
  rec["a"] = a;
  rec["b"] = b;
  rec["c"] = c;
  rec["valuation"] = box_valuation(box);
  std::optional<ReductionTrace> trace;
  if (with_trace) trace = box_parity_trace(box);
  rec["odd"] = trace ? trace->odd : box_is_odd(box);
  if (exact) {
    require_guard(a + b + c <= kBoxExactGuard,
                  "exact box path guarded to a+b+c <= 3000", opt);
    rec["exact"] = to_decimal(box_count_exact(box));
  }
  if (trace && opt.format == "json") rec["trace"] = trace_to_json(*trace);
  maybe_timestamp(opt);
  emit_record(rec, opt);
  if (trace && opt.format != "json") std::cout << to_text(*trace);
}

// ---- scan -------------------------------------------------------------------

// Rows stream in row-major range order no matter how many workers render them.
void run_scan(const ScanSpec& spec, const Options& opt) {
  const std::string& target = spec.target;
  const std::vector<Range>& ranges = spec.ranges;
  const bool exact = spec.exact;
  std::vector<std::string> columns;
  if (target == "theta") columns = {"q", "i", "n", "valuation"};
  else if (target == "epsilon") columns = {"p", "n", "valuation", "odd"};
  else if (target == "gamma") columns = {"k", "m", "n", "valuation", "odd"};
  else columns = {"a", "b", "c", "valuation", "odd"};
  if (exact) columns.push_back("exact");

  if (exact && !opt.no_guards) {
    bool within = true;
    for (const auto& r : ranges) within = within && r.hi <= kBoxExactGuard;
    if (target == "theta")
      within = within && ranges[0].hi + 2 * ranges[1].hi <= kThetaExactGuard;
    else if (target == "epsilon")
      within = within && ranges[1].hi <= kThetaExactGuard;
    else if (target == "gamma")
      within = within && ranges[1].hi + ranges[2].hi <= kBoxExactGuard;
    else
      within = within && ranges[0].hi + ranges[1].hi + ranges[2].hi <= kBoxExactGuard;
    require_guard(within, "exact scan exceeds the size guards", opt);
  }

  std::uint64_t total = 1;
  for (const auto& r : ranges) total *= r.size();

  const auto tuple_at = [&](std::uint64_t flat) {
    std::vector<std::uint64_t> tuple(ranges.size());
    for (std::size_t d = ranges.size(); d-- > 0;) {
      tuple[d] = ranges[d].lo + flat % ranges[d].size();
      flat /= ranges[d].size();
    }
    return tuple;
  };

  const auto render_row = [&](const std::vector<std::uint64_t>& t,
                              std::string& out) {
    ordered_json rec;
    if (target == "theta") {
      const std::uint64_t q = t[0], i = t[1], n = q + 2 * i;
      rec["q"] = q;
      rec["i"] = i;
      rec["n"] = n;
      rec["valuation"] = theta_valuation(q, n);
      if (exact) rec["exact"] = to_decimal(theta_exact(q, n));
    } else if (target == "epsilon") {
      const std::uint64_t p = t[0], n = t[1];
      if (n < 2 || p < 1 || p > n / 2) return;  // outside the family
      rec["p"] = p;
      rec["n"] = n;
      rec["valuation"] = epsilon_valuation(p, n);
      rec["odd"] = epsilon_is_odd(p, n);
      if (exact) rec["exact"] = to_decimal(epsilon_exact(p, n));
    } else if (target == "gamma") {
      const std::uint64_t k = t[0], m = t[1], n = t[2];
      if (k < 1 || k > std::min(m, n)) return;
      const BoxDims box{n - k, m - k, k};
      rec["k"] = k;
      rec["m"] = m;
      rec["n"] = n;
      rec["valuation"] = box_valuation(box);
      rec["odd"] = box_is_odd(box);
      if (exact) rec["exact"] = to_decimal(gamma_exact(k, m, n));
    } else {
      const BoxDims box{t[0], t[1], t[2]};
      rec["a"] = t[0];
      rec["b"] = t[1];
      rec["c"] = t[2];
      rec["valuation"] = box_valuation(box);
      rec["odd"] = box_is_odd(box);
      if (exact) rec["exact"] = to_decimal(box_count_exact(box));
    }
    if (opt.format == "json") {
      out += rec.dump();
      out += '\n';
    } else {
      bool first = true;
      for (auto it = rec.begin(); it != rec.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += render_cell(it.value());
      }
      out += '\n';
    }
  };

  const auto render_block = [&](std::uint64_t lo, std::uint64_t hi) {
    std::string out;
    for (std::uint64_t flat = lo; flat < hi; ++flat) render_row(tuple_at(flat), out);
    return out;
  };

  maybe_timestamp(opt);
  if (opt.format != "json") {
    std::string header;
    for (const auto& c : columns) {
      if (!header.empty()) header += ',';
      header += c;
    }
    std::cout << header << '\n';
  }

  const std::uint64_t workers = resolve_workers(opt);
  if (workers == 1 || total < 2048) {
    std::cout << render_block(0, total);
    return;
  }
  const std::uint64_t block = std::max<std::uint64_t>(1024, total / (workers * 8));
  std::uint64_t next = 0;
  while (next < total) {
    std::vector<std::future<std::string>> wave;
    for (std::uint64_t w = 0; w < workers && next < total; ++w) {
      const std::uint64_t lo = next, hi = std::min(total, next + block);
      next = hi;
      wave.push_back(std::async(std::launch::async, render_block, lo, hi));
    }
    for (auto& f : wave) std::cout << f.get();  // ordered merge
  }
}

// ---- verify -----------------------------------------------------------------

int run_verify(const std::string& suite, std::optional<std::uint64_t> bound,
               const Options& opt) {
  maybe_timestamp(opt);
  const auto results = checks::run_suites(suite, bound);
  bool all_ok = true;
  for (const auto& r : results) {
    std::cout << "suite " << r.name << ": " << r.checks << " checks, " << r.failures
              << " failures";
    if (!r.ok()) {
      std::cout << "; first counterexample: " << r.first_counterexample;
      all_ok = false;
    }
    std::cout << '\n';
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-adic valuations and parities of determinantal-variety degrees "
               "and plane-partition box counts"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("PADIC_DEGREES_THREADS"))
    opt.parallelism = std::strtoull(env, nullptr, 10);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--parallelism", opt.parallelism,
                 "worker count for scans (0 = auto)");
  app.add_flag("--timestamps", opt.timestamps, "prepend a timestamp line");
  app.add_flag("--no-guards", opt.no_guards, "disable exact-path size guards");

  std::uint64_t q = 0, n = 0, k = 0, m = 0, p = 0, a = 0, b = 0, c = 0;
  bool exact = false, with_trace = false;

  auto* theta_cmd = app.add_subcommand("theta", "nu2 and parity of theta_{q,n}");
  theta_cmd->add_option("--q", q)->required();
  theta_cmd->add_option("--n", n)->required();
  theta_cmd->add_flag("--exact", exact, "include the exact value");

  auto* delta_cmd = app.add_subcommand("delta", "nu2 and parity of delta_{k,n}");
  delta_cmd->add_option("--k", k)->required();
  delta_cmd->add_option("--n", n)->required();
  delta_cmd->add_flag("--exact", exact);

  auto* eps_cmd = app.add_subcommand("epsilon", "nu2 and parity of epsilon_{2p,n}");
  eps_cmd->add_option("--p", p)->required();
  eps_cmd->add_option("--n", n)->required();
  eps_cmd->add_flag("--exact", exact);

  auto* gamma_cmd = app.add_subcommand("gamma", "nu2 and parity of gamma_{k,m,n}");
  gamma_cmd->add_option("--k", k)->required();
  gamma_cmd->add_option("--m", m)->required();
  gamma_cmd->add_option("--n", n)->required();
  gamma_cmd->add_flag("--exact", exact);

  auto* box_cmd = app.add_subcommand("box", "nu2 and parity of B(a,b,c)");
  box_cmd->add_option("--a", a)->required();
  box_cmd->add_option("--b", b)->required();
  box_cmd->add_option("--c", c)->required();
  box_cmd->add_flag("--exact", exact);
  box_cmd->add_flag("--trace", with_trace, "include the parity certificate");

  std::string scan_target;
  std::string rq, ri, rp, rn, rk, rm, ra, rb, rc;
  auto* scan_cmd = app.add_subcommand("scan", "stream rows over parameter ranges");
  scan_cmd->add_option("target", scan_target, "theta|epsilon|gamma|box")
      ->required()
      ->check(CLI::IsMember({"theta", "epsilon", "gamma", "box"}));
  scan_cmd->add_option("--q", rq, "q range (N or LO:HI)");
  scan_cmd->add_option("--i", ri, "i range, n = q+2i");
  scan_cmd->add_option("--p", rp, "p range");
  scan_cmd->add_option("--n", rn, "n range");
  scan_cmd->add_option("--k", rk, "k range");
  scan_cmd->add_option("--m", rm, "m range");
  scan_cmd->add_option("--a", ra, "a range");
  scan_cmd->add_option("--b", rb, "b range");
  scan_cmd->add_option("--c", rc, "c range");
  scan_cmd->add_flag("--exact", exact, "include exact values (guarded)");

  std::string suite = "all";
  std::optional<std::uint64_t> bound;
  std::uint64_t bound_value = 0;
  auto* verify_cmd = app.add_subcommand("verify", "run the invariant suites");
  verify_cmd->add_option("--suite", suite,
                         "digit|theta|interval|epsilon|box|skew|all");
  auto* bound_opt = verify_cmd->add_option("--bound", bound_value,
                                           "override the default sweep bound");

  for (auto* sub : {theta_cmd, delta_cmd, eps_cmd, gamma_cmd, box_cmd, scan_cmd,
                    verify_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage errors are exit 2; --help stays 0
  }

  try {
    if (theta_cmd->parsed()) run_theta(q, n, exact, opt);
    else if (delta_cmd->parsed()) run_delta(k, n, exact, opt);
    else if (eps_cmd->parsed()) run_epsilon(p, n, exact, opt);
    else if (gamma_cmd->parsed()) run_gamma(k, m, n, exact, opt);
    else if (box_cmd->parsed()) run_box(a, b, c, exact, with_trace, opt);
    else if (scan_cmd->parsed()) {
      const auto need = [&](const std::string& text, const char* name) {
        if (text.empty())
          throw CLI::RequiredError(std::string("scan ") + scan_target + " needs --" +
                                   name);
        return parse_range(text);
      };
      ScanSpec spec;
      spec.target = scan_target;
      spec.exact = exact;
      if (scan_target == "theta")
        spec.ranges = {need(rq, "q"), need(ri, "i")};
      else if (scan_target == "epsilon")
        spec.ranges = {need(rp, "p"), need(rn, "n")};
      else if (scan_target == "gamma")
        spec.ranges = {need(rk, "k"), need(rm, "m"), need(rn, "n")};
      else
        spec.ranges = {need(ra, "a"), need(rb, "b"), need(rc, "c")};
      run_scan(spec, opt);
    } else if (verify_cmd->parsed()) {
      if (*bound_opt) bound = bound_value;
      return run_verify(suite, bound, opt);
    }
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
