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

#ifndef BATTERYBELL_CLI_HPP_
#define BATTERYBELL_CLI_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "batterybell/io.hpp"

namespace batterybell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitIo = 3;

struct RunConfig {
  std::string game = "chsh";
  std::string behavior = "pr";
  std::uint64_t rounds = 1000;
  std::uint64_t seed = 0;
  double alpha = 0.01;
  std::string method = "hoeffding";
  double delta = 1.0;
  double kt_ln2 = 1.0;
  std::optional<double> eta0_upper;
  std::optional<double> eta1_upper;
  std::string out;
  std::string format;
  bool absolute = false;

  std::string variant = "feedforward";  // simulate
  unsigned threads = 0;
  std::string record;  // certify input
  bool game_given = false;

  std::string sweep_kind = "noise";
  double eps_step = 0.05;
  int n_min = 2;
  int n_max = 10;

  double p = 1.0;  // ledger
  std::string memory_variant = "measured-memory";
  std::optional<double> transcript_entropy;

  std::string tripartite = "pr-uniform";  // monogamy
  bool flip_ab = false;
  bool flip_ac = false;
};

// Built-in names: chsh, chained:N; anything else is a JSON file path.
XorGame resolve_game(const std::string& spec);

// Built-in names: pr, tsirelson, local-zeros, uniform, noisy-pr:EPS,
// chained-q:N; anything else is a JSON file path. Must match the game's size.
Behavior resolve_behavior(const std::string& spec, const XorGame& game);

TripartiteBehavior resolve_tripartite(const std::string& spec);

Json cmd_values(const RunConfig& config);
WorkRecord cmd_simulate(const RunConfig& config);
CertificateReport cmd_certify(const RunConfig& config);
std::string cmd_sweep(const RunConfig& config);
Json cmd_ledger(const RunConfig& config);
Json cmd_monogamy(const RunConfig& config);

// Full command-line entry point. Returns the process exit status: 0 success,
// 2 input or validation error, 3 I/O error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace batterybell::cli

#endif  // BATTERYBELL_CLI_HPP_
