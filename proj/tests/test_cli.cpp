#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "padic/box_parity.hpp"
#include "padic/digit_core.hpp"

#ifndef PADIC_CLI_PATH
#error "PADIC_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(PADIC_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("compute records match the documented formats") {
  const auto theta = run_cli("theta --q 39 --n 45 --format json");
  CHECK(theta.exit_code == 0);
  CHECK(theta.out == "{\"q\":39,\"n\":45,\"valuation\":5,\"odd\":false}\n");

  const auto odd = run_cli("theta --q 5 --n 5");
  CHECK(odd.exit_code == 0);
  CHECK(odd.out == "q,n,valuation,odd\n5,5,0,true\n");

  const auto box = run_cli("box --a 2 --b 2 --c 2 --exact --format json");
  CHECK(box.exit_code == 0);
  CHECK(box.out ==
        "{\"a\":2,\"b\":2,\"c\":2,\"valuation\":2,\"odd\":false,\"exact\":\"20\"}\n");

  const auto traced = run_cli("box --a 2 --b 2 --c 2 --trace");
  CHECK(traced.exit_code == 0);
  CHECK(traced.out ==
        "a,b,c,valuation,odd\n2,2,2,2,false\n"
        "(2,2,2) all_even -> (1,1,1)\n(1,1,1) all_odd_terminal\n");

  const auto eps = run_cli("epsilon --p 2 --n 6 --exact --format json");
  CHECK(eps.exit_code == 0);
  CHECK(eps.out ==
        "{\"p\":2,\"n\":6,\"valuation\":0,\"odd\":true,\"exact\":\"3\"}\n");

  const auto gamma = run_cli("gamma --k 2 --m 4 --n 4 --exact");
  CHECK(gamma.exit_code == 0);
  CHECK(gamma.out == "k,m,n,valuation,odd,exact\n2,4,4,2,false,20\n");

  const auto delta = run_cli("delta --k 2 --n 4 --exact --format json");
  CHECK(delta.exit_code == 0);
  CHECK(delta.out ==
        "{\"k\":2,\"n\":4,\"valuation\":1,\"odd\":false,\"exact\":\"10\"}\n");
}

TEST_CASE("exit codes distinguish usage from domain errors") {
  CHECK(run_cli("theta --q 5").exit_code == 2);        // missing --n
  CHECK(run_cli("frobnicate").exit_code == 2);         // unknown subcommand
  CHECK(run_cli("theta --q 7 --n 5").exit_code == 3);  // q > n
  CHECK(run_cli("epsilon --p 9 --n 6").exit_code == 3);
  CHECK(run_cli("verify --suite nonsense").exit_code == 2);
  CHECK(run_cli("theta --q 3 --n 4001 --exact").exit_code == 3);  // guard
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("scan output is deterministic and order-independent of parallelism") {
  const std::string args = "scan theta --q 39 --i 0:199";
  const auto once = run_cli(args + " --parallelism 1");
  const auto again = run_cli(args + " --parallelism 1");
  const auto wide = run_cli(args + " --parallelism 4");
  CHECK(once.exit_code == 0);
  CHECK(once.out == again.out);
  CHECK(once.out == wide.out);
  CHECK(once.out.rfind("q,i,n,valuation\n", 0) == 0);

  // row count: header + 200 rows
  std::size_t lines = 0;
  for (char ch : once.out) lines += ch == '\n';
  CHECK(lines == 201);

  // spot anchors from the published sequence
  CHECK(once.out.find("39,12,63,18\n") != std::string::npos);
  CHECK(once.out.find("39,44,127,37\n") != std::string::npos);
  CHECK(once.out.find("39,25,89,0\n") != std::string::npos);
}

TEST_CASE("scan skips tuples outside the family") {
  const auto eps = run_cli("scan epsilon --p 1:3 --n 2:6 --format json");
  CHECK(eps.exit_code == 0);
  // rows only where 1 <= p <= floor(n/2): five for p=1, three for p=2, one for p=3
  std::size_t lines = 0;
  for (char ch : eps.out) lines += ch == '\n';
  CHECK(lines == 9);
}

TEST_CASE("json rows round-trip byte-identically") {
  const auto scan = run_cli("scan box --a 1:2 --b 1:2 --c 1:2 --exact --format json");
  CHECK(scan.exit_code == 0);
  std::size_t start = 0;
  std::size_t rows = 0;
  while (start < scan.out.size()) {
    const auto end = scan.out.find('\n', start);
    REQUIRE(end != std::string::npos);
    const std::string line = scan.out.substr(start, end - start);
    const auto parsed = nlohmann::ordered_json::parse(line);
    CHECK(parsed.dump() == line);
    ++rows;
    start = end + 1;
  }
  CHECK(rows == 8);
}

TEST_CASE("corank-2 skew family scans odd for n = 2 (mod 4)") {
  for (std::uint64_t n = 6; n <= 50; n += 4) {
    const std::uint64_t p = (n - 2) / 2;
    const auto r = run_cli("scan epsilon --p " + std::to_string(p) + " --n " +
                           std::to_string(n) + " --format json");
    CHECK(r.exit_code == 0);
    const auto row = nlohmann::ordered_json::parse(r.out);
    CAPTURE(n);
    CHECK(row["odd"] == true);
  }
}

TEST_CASE("box diagonal scan matches exact counts") {
  const auto r = run_cli("scan box --a 1:4 --b 1:4 --c 1:4 --format json");
  CHECK(r.exit_code == 0);
  std::size_t start = 0;
  while (start < r.out.size()) {
    const auto end = r.out.find('\n', start);
    const auto row = nlohmann::ordered_json::parse(r.out.substr(start, end - start));
    if (row["a"] == row["b"] && row["b"] == row["c"]) {
      const auto a = row["a"].get<std::uint64_t>();
      CHECK(row["valuation"] ==
            padic::integer_valuation(padic::box_count_exact({a, a, a})));
    }
    start = end + 1;
  }
}

TEST_CASE("verify subcommand exit code and report") {
  const auto ok = run_cli("verify --suite digit --bound 500");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("suite digit:") != std::string::npos);
  CHECK(ok.out.find(" 0 failures") != std::string::npos);
}
