// Copyright 2026 The symmhg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Drives the installed CLI binary end to end. The binary path arrives in
// SYMMHG_CLI (set by CTest); without it these checks are skipped.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* binary = std::getenv("SYMMHG_CLI");
  REQUIRE(binary != nullptr);
  const std::string command = std::string(binary) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

nlohmann::json results_of(const RunResult& run) {
  const auto report = nlohmann::json::parse(run.out);
  return report.at("results");
}

bool cli_available() { return std::getenv("SYMMHG_CLI") != nullptr; }

}  // namespace

TEST_CASE("cli classify") {
  if (!cli_available()) SKIP("SYMMHG_CLI not set");
  const auto run = run_cli("--json classify K6^3");
  REQUIRE(run.exit_code == 0);
  const auto results = results_of(run);
  CHECK(results.at("class") == "X");
  CHECK(results.at("agreement") == true);

  CHECK(results_of(run_cli("--json classify K5^3,4")).at("class") == "-X");
  CHECK(results_of(run_cli("--json classify K4^3")).at("class") == "Y");
}

TEST_CASE("cli parse errors exit with code 2") {
  if (!cli_available()) SKIP("SYMMHG_CLI not set");
  CHECK(run_cli("--json classify K0^").exit_code == 2);
  CHECK(run_cli("classify").exit_code == 2);
  const auto err = run_cli("--json classify K0^");
  const auto report = nlohmann::json::parse(err.out);
  CHECK(report.at("error").at("code") == "parse_error");
}

TEST_CASE("cli enumerate and count") {
  if (!cli_available()) SKIP("SYMMHG_CLI not set");
  const auto filtered = results_of(run_cli("--json enumerate 4 --class X"));
  CHECK(filtered.at("count") == 3);

  const auto all = results_of(run_cli("--json enumerate 2"));
  CHECK(all.at("counts").at("X") == 1);

  const auto count = results_of(run_cli("--json count 2..9"));
  CHECK(count.at("all_match") == true);
  const std::size_t expected[] = {1, 1, 3, 3, 7, 7, 15, 15};
  for (std::size_t i = 0; i < count.at("rows").size(); ++i) {
    CHECK(count.at("rows")[i].at("enumerated") == expected[i]);
  }

  CHECK(run_cli("--json enumerate 25").exit_code == 3);
}

TEST_CASE("cli verify") {
  if (!cli_available()) SKIP("SYMMHG_CLI not set");
  const auto results = results_of(run_cli("--json verify K4^3"));
  CHECK(results.at("class") == "Y");
  CHECK(results.at("dense_agrees") == true);
  CHECK(results.at("search_exhaustive") == true);
  REQUIRE(results.at("stabilizers_found").size() == 1);
  CHECK(results.at("stabilizers_found")[0] == "+YYYY");

  const auto symbolic = results_of(run_cli("--json --oracle symbolic verify K4^3"));
  CHECK_FALSE(symbolic.contains("candidates"));
}

TEST_CASE("cli mermin") {
  if (!cli_available()) SKIP("SYMMHG_CLI not set");
  const auto run = run_cli("--json mermin K3^2");
  REQUIRE(run.exit_code == 0);
  const auto results = results_of(run);
  CHECK(results.at("quantum") == 4.0);
  CHECK(results.at("classical_max") == 2.0);
  CHECK(results.at("violation") == true);
  CHECK(results.at("exhaustive") == true);

  // Byte-identical output for identical inputs.
  const auto again = run_cli("--json mermin K3^2");
  CHECK(run.out == again.out);
}

TEST_CASE("cli json output is byte-stable per command") {
  if (!cli_available()) SKIP("SYMMHG_CLI not set");
  for (const char* args : {"--json classify K11^6,8", "--json qec K4^3",
                           "--json trace K5^3,4 1", "--json enumerate 5",
                           "--json mermin K7^4 --budget 20 --seed 9"}) {
    CAPTURE(args);
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("cli qec") {
  if (!cli_available()) SKIP("SYMMHG_CLI not set");
  const auto results = results_of(run_cli("--json qec K6^3"));
  CHECK(results.at("class") == "X");
  CHECK(results.at("knill_laflamme") == true);
  CHECK(results.at("alpha_matches_expected") == true);
  CHECK(results.at("overlaps").at("all") == true);
  // alpha rows are [re, im] pairs; the (2, 3) entry at n = 6 is -1.
  CHECK(results.at("alpha")[2][3][0] == -1.0);
  CHECK(results.at("alpha")[2][3][1] == 0.0);
}

TEST_CASE("cli trace and recover round trip") {
  if (!cli_available()) SKIP("SYMMHG_CLI not set");
  const auto trace = results_of(run_cli("--json trace K4^3 1"));
  CHECK(trace.at("dense_checked") == true);
  CHECK(trace.at("first_column") == nlohmann::json::array({1.0, 1.0, 0.0, 0.0}));
  CHECK(trace.at("mixture").at("terms").size() == 2);

  const auto recover = results_of(run_cli("--json recover [1,1,0,0] 4 1"));
  CHECK(recover.at("state") == "K4^3");

  const auto bad = run_cli("--json recover [1,-1,1,-1] 4 1");
  CHECK(bad.exit_code == 2);
  CHECK(nlohmann::json::parse(bad.out).at("error").at("code") == "invalid_input");

  const auto shifted = run_cli("--json recover [1,1,0,0] 4 1 --rule shifted");
  CHECK(shifted.exit_code == 2);
}

TEST_CASE("cli report echoes inputs") {
  if (!cli_available()) SKIP("SYMMHG_CLI not set");
  const auto report = nlohmann::json::parse(run_cli("--json classify K6^3").out);
  CHECK(report.at("command") == "classify");
  CHECK(report.at("inputs").at("state") == "K6^3");
  CHECK(report.contains("version"));
  CHECK_FALSE(report.contains("timing_ms"));  // kept out of machine output
}
