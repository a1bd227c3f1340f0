// Copyright 2026 The batterybell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "batterybell/cli.hpp"

using namespace batterybell;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "batterybell_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("values for chsh") {
  const Outcome r = run_cli({"values", "--game", "chsh"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["omega_L"] == 0.75);
  CHECK(j["omega_Q"].get<double>() == doctest::Approx(0.853553390593273762).epsilon(1e-15));
  CHECK(j["omega_NS"] == 1.0);
  CHECK(j["omega_Q_exact"] == true);
  CHECK(j["units"] == "delta");

  const Json abs = Json::parse(run_cli({"values", "--game", "chained:4", "--delta", "3",
                                        "--absolute"}).out);
  CHECK(abs["work_ceilings"]["local"].get<double>() == doctest::Approx(3.0 * 0.875));
  CHECK(abs["work_ceilings"]["nonsignalling"] == 3.0);
}

TEST_CASE("simulate is deterministic across thread counts") {
  const std::vector<std::string> base{"simulate", "--game", "chsh", "--behavior",
                                      "tsirelson", "--rounds", "50000", "--seed", "7"};
  auto one = base;
  one.insert(one.end(), {"--threads", "1"});
  auto four = base;
  four.insert(four.end(), {"--threads", "4"});
  const Outcome a = run_cli(one);
  const Outcome b = run_cli(four);
  const Outcome c = run_cli(base);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(lines_of(a.out).size() == 1 + (50000 + 4095) / 4096);

  auto reversible = base;
  reversible.insert(reversible.end(), {"--variant", "reversible"});
  CHECK(run_cli(reversible).out == a.out);

  auto other_seed = base;
  other_seed[8] = "8";
  CHECK(run_cli(other_seed).out != a.out);
}

TEST_CASE("simulate then certify through files") {
  const fs::path record = scratch("pr.ndjson");
  REQUIRE(run_cli({"simulate", "--behavior", "pr", "--rounds", "20000", "--seed", "3",
                   "--out", record.string()}).code == 0);
  const Outcome cert = run_cli({"certify", record.string(), "--alpha", "0.01"});
  REQUIRE(cert.code == 0);
  const Json j = Json::parse(cert.out);
  CHECK(j["n"] == 20000);
  CHECK(j["k"] == 20000);
  CHECK(j["verdict"] == "post-quantum");
  CHECK(j["game"] == "chsh");

  const fs::path ts = scratch("ts.csv");
  REQUIRE(run_cli({"simulate", "--behavior", "tsirelson", "--rounds", "20000", "--seed",
                   "3", "--format", "csv", "--out", ts.string()}).code == 0);
  CHECK(slurp(ts).rfind("round,work_bit\n0,", 0) == 0);
  const Outcome csv = run_cli({"certify", ts.string(), "--game", "chsh", "--method",
                               "clopper-pearson"});
  REQUIRE(csv.code == 0);
  CHECK(Json::parse(csv.out)["verdict"] == "nonlocal");

  // CSV records carry no game name.
  CHECK(run_cli({"certify", ts.string()}).code == cli::kExitInput);

  const Outcome readout = run_cli({"certify", record.string(), "--eta0-upper", "0.05",
                                   "--eta1-upper", "0.95"});
  REQUIRE(readout.code == 0);
  CHECK(Json::parse(readout.out)["readout"]["conservative"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == cli::kExitInput);
  CHECK(run_cli({"values", "--bogus"}).code == cli::kExitInput);
  CHECK(run_cli({"values", "--game", "chained:1"}).code == cli::kExitInput);
  CHECK(run_cli({"simulate", "--behavior", "tsirelson", "--game", "chained:3"}).code ==
        cli::kExitInput);
  CHECK(run_cli({"simulate", "--rounds", "0"}).code == cli::kExitInput);
  CHECK(run_cli({"certify", "/nonexistent/record.ndjson"}).code == cli::kExitIo);
  CHECK(run_cli({"values", "--game", "/nonexistent/game.json"}).code == cli::kExitIo);
  CHECK(run_cli({"values", "--out", "/nonexistent/dir/out.json"}).code == cli::kExitIo);
  CHECK(run_cli({"ledger", "--variant", "full-transcript"}).code == cli::kExitInput);
  CHECK(run_cli({"certify", "x", "--alpha", "1.5"}).code != cli::kExitOk);

  const fs::path garbage = scratch("garbage.json");
  std::ofstream(garbage) << "{ not json";
  const Outcome r = run_cli({"values", "--game", garbage.string()});
  CHECK(r.code == cli::kExitInput);
  CHECK(r.err.find("parse") != std::string::npos);
}

TEST_CASE("noise sweep") {
  const Outcome r = run_cli({"sweep", "--kind", "noise", "--eps-step", "0.05"});
  REQUIRE(r.code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 22);
  CHECK(lines[0] == "eps,S,work_over_delta,above_quantum");
  CHECK(lines[1] == "0,4,1,true");
  CHECK(lines[12].rfind("0.55,", 0) == 0);
  CHECK(lines[12].substr(lines[12].size() - 4) == "true");
  CHECK(lines[13].rfind("0.6,", 0) == 0);
  CHECK(lines[13].substr(lines[13].size() - 5) == "false");
  CHECK(lines[21] == "1,2,0.75,false");

  const Json j = Json::parse(run_cli({"sweep", "--kind", "chained", "--n-min", "2",
                                      "--n-max", "5", "--format", "json"}).out);
  REQUIRE(j.size() == 4);
  CHECK(j[0]["N"] == 2);
  CHECK(j[3]["omega_L"].get<double>() == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(run_cli({"sweep", "--kind", "other"}).code == cli::kExitInput);
}

TEST_CASE("ledger command") {
  const Json j = Json::parse(run_cli({"ledger", "--p", "1", "--variant", "measured-memory"}).out);
  CHECK(j["delta_units"]["battery_gain"] == 1.0);
  CHECK(j["reset_entropy_bits"] == 0.0);

  const Outcome full = run_cli({"ledger", "--p", "0.75", "--variant", "full-transcript",
                                "--transcript-entropy", "2.5", "--kt-ln2", "0.5"});
  REQUIRE(full.code == 0);
  const Json f = Json::parse(full.out);
  CHECK(f["absolute"]["reset_cost"].get<double>() == doctest::Approx(1.25));
  CHECK(run_cli({"ledger", "--p", "1.5"}).code == cli::kExitInput);
}

TEST_CASE("monogamy command") {
  const Json pr = Json::parse(run_cli({"monogamy"}).out);
  CHECK(pr["s_ab"] == 4.0);
  CHECK(pr["sum_w"].get<double>() == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(pr["satisfied"] == true);
  const Json abs = Json::parse(run_cli({"monogamy", "--tripartite", "uniform", "--delta",
                                        "2", "--absolute"}).out);
  CHECK(abs["sum_w"].get<double>() == doctest::Approx(2.0));
  CHECK(abs["bound"] == 3.0);
  CHECK(abs["units"] == "absolute");
}

TEST_CASE("help exits cleanly") {
  const Outcome r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("simulate") != std::string::npos);
}
