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

#include "batterybell/cli.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "batterybell/error.hpp"

namespace batterybell::cli {

namespace {

bool starts_with(const std::string& text, const std::string& prefix) {
  return text.rfind(prefix, 0) == 0;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  fail(ErrorKind::kInvalidParameter, "cannot parse " + what + " '" + text + "'");
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  fail(ErrorKind::kInvalidParameter, "cannot parse " + what + " '" + text + "'");
}

void require_shape(const XorGame& game, std::size_t na, std::size_t nb,
                   const std::string& spec) {
  require(game.num_alice() == na && game.num_bob() == nb,
          "behaviour '" + spec + "' does not fit game '" + game.name() + "'");
}

GameValues values_for(const XorGame& game) { return compute_game_values(game); }

std::optional<ReadoutModel> readout_from(const RunConfig& config) {
  if (!config.eta0_upper && !config.eta1_upper) return std::nullopt;
  ReadoutModel model;
  model.eta0 = config.eta0_upper.value_or(0.0);
  model.eta1 = config.eta1_upper.value_or(1.0);
  model.eta0_upper = config.eta0_upper;
  model.eta1_upper = config.eta1_upper;
  if (model.eta1 <= model.eta0) {
    fail(ErrorKind::kDegenerateCalibration, "eta1 bound must exceed eta0 bound");
  }
  return model;
}

WorkRecord load_record(const RunConfig& config) {
  std::ifstream in(config.record);
  if (!in) fail(ErrorKind::kIo, "cannot open work record " + config.record);
  const int first = in.peek();
  if (first == '{') return read_record_ndjson(in);
  if (!config.game_given) {
    fail(ErrorKind::kMissingParameter, "CSV work records need --game");
  }
  return read_record_csv(in, resolve_game(config.game).name(), config.delta,
                         config.seed);
}

void emit(const RunConfig& config, std::ostream& out, const std::string& text) {
  if (config.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(config.out, std::ios::binary);
  if (!file) fail(ErrorKind::kIo, "cannot write " + config.out);
  file << text;
  if (!file) fail(ErrorKind::kIo, "write failed for " + config.out);
}

}  // namespace

XorGame resolve_game(const std::string& spec) {
  if (spec == "chsh") return make_chsh();
  if (starts_with(spec, "chained:")) {
    return make_chained(parse_int(spec.substr(8), "chained game size"));
  }
  return game_from_json(read_json_file(spec));
}

Behavior resolve_behavior(const std::string& spec, const XorGame& game) {
  if (spec == "pr") return perfect_ns_box(game);
  if (spec == "uniform") return uniform_behavior(game.num_alice(), game.num_bob());
  if (spec == "local-zeros") {
    return deterministic_local(std::vector<int>(game.num_alice(), 0),
                               std::vector<int>(game.num_bob(), 0));
  }
  if (spec == "tsirelson") {
    require_shape(game, 2, 2, spec);
    return tsirelson_behavior();
  }
  if (starts_with(spec, "noisy-pr:")) {
    require_shape(game, 2, 2, spec);
    return noisy_pr(parse_double(spec.substr(9), "noise level"));
  }
  if (starts_with(spec, "chained-q:")) {
    const int n = parse_int(spec.substr(10), "chained size");
    require(n >= 2, "chained behaviour needs N >= 2");
    require_shape(game, static_cast<std::size_t>(n), static_cast<std::size_t>(n), spec);
    return chained_quantum_behavior(n);
  }
  Behavior loaded = behavior_from_json(read_json_file(spec));
  require_shape(game, loaded.num_alice(), loaded.num_bob(), spec);
  return loaded;
}

TripartiteBehavior resolve_tripartite(const std::string& spec) {
  const std::array<std::array<double, 2>, 2> uniform_c{{{0.5, 0.5}, {0.5, 0.5}}};
  const std::array<std::array<double, 2>, 2> zero_c{{{1.0, 0.0}, {1.0, 0.0}}};
  if (spec == "pr-uniform") return tripartite_product(pr_box(), uniform_c);
  if (spec == "pr-deterministic") return tripartite_product(pr_box(), zero_c);
  if (spec == "tsirelson-uniform") return tripartite_product(tsirelson_behavior(), uniform_c);
  if (spec == "uniform") return tripartite_uniform();
  return tripartite_from_json(read_json_file(spec));
}

Json cmd_values(const RunConfig& config) {
  require(config.delta > 0.0, "energy quantum must be positive");
  const XorGame game = resolve_game(config.game);
  return to_json(values_for(game), game, config.delta, config.absolute);
}

WorkRecord cmd_simulate(const RunConfig& config) {
  const XorGame game = resolve_game(config.game);
  const Behavior behavior = resolve_behavior(config.behavior, game);
  SimulationOptions options;
  options.variant = parse_variant(config.variant);
  options.delta = config.delta;
  options.threads = config.threads;
  return simulate(game, behavior, config.rounds, config.seed, options);
}

CertificateReport cmd_certify(const RunConfig& config) {
  const WorkRecord record = load_record(config);
  const XorGame game = resolve_game(config.game_given ? config.game : record.game_name);
  return certify(record, values_for(game), parse_method(config.method), config.alpha,
                 readout_from(config));
}

std::string cmd_sweep(const RunConfig& config) {
  std::ostringstream out;
  const bool as_json = config.format == "json";
  if (config.sweep_kind == "noise") {
    require(config.eps_step > 0.0 && config.eps_step <= 1.0,
            "noise grid step must lie in (0, 1]");
    const auto steps = static_cast<int>(std::llround(1.0 / config.eps_step));
    std::vector<double> grid;
    for (int i = 0; i <= steps; ++i) grid.push_back(std::min(1.0, i * config.eps_step));
    const auto rows = sweep_noise(grid);
    if (!as_json) {
      write_csv(out, rows);
      return out.str();
    }
    Json j = Json::array();
    for (const auto& r : rows) {
      j.push_back({{"eps", r.eps}, {"S", r.s}, {"work_over_delta", r.work_over_delta},
                   {"above_quantum", r.above_quantum}});
    }
    return j.dump(2) + "\n";
  }
  if (config.sweep_kind == "chained") {
    require(config.n_min >= 2 && config.n_max >= config.n_min,
            "chained grid needs 2 <= n-min <= n-max");
    std::vector<int> grid;
    for (int n = config.n_min; n <= config.n_max; ++n) grid.push_back(n);
    const auto rows = sweep_chained(grid);
    if (!as_json) {
      write_csv(out, rows);
      return out.str();
    }
    Json j = Json::array();
    for (const auto& r : rows) {
      j.push_back({{"N", r.n}, {"omega_L", r.omega_l}, {"omega_Q", r.omega_q},
                   {"gap", r.gap}, {"leading_term", r.leading_term}});
    }
    return j.dump(2) + "\n";
  }
  fail(ErrorKind::kInvalidParameter, "unknown sweep kind '" + config.sweep_kind + "'");
}

Json cmd_ledger(const RunConfig& config) {
  return to_json(cycle_report(config.p, config.delta, config.kt_ln2,
                              parse_memory_variant(config.memory_variant),
                              config.transcript_entropy));
}

Json cmd_monogamy(const RunConfig& config) {
  MonogamyOptions options;
  options.delta = config.absolute ? config.delta : 1.0;
  options.flip_ab = config.flip_ab;
  options.flip_ac = config.flip_ac;
  Json j = to_json(monogamy_check(resolve_tripartite(config.tripartite), options));
  j["units"] = config.absolute ? "absolute" : "delta";
  return j;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{
      "batterybell: XOR-game battery transduction simulator and certifier.\n"
      "Built-in games: chsh, chained:N. Built-in behaviours: pr, tsirelson,\n"
      "local-zeros, uniform, noisy-pr:EPS, chained-q:N. Any other value is read\n"
      "as a JSON file.",
      "batterybell"};
  app.require_subcommand(1);

  const auto add_game = [&](CLI::App* cmd) {
    cmd->add_option("--game", config.game, "chsh | chained:N | path to JSON game")
        ->each([&](const std::string&) { config.game_given = true; });
  };
  const auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--out", config.out, "output file (default stdout)");
    cmd->add_option("--format", config.format, "output format");
  };

  auto* values = app.add_subcommand("values", "game values and work ceilings");
  add_game(values);
  values->add_option("--delta", config.delta, "energy quantum");
  values->add_flag("--absolute", config.absolute, "print energies in absolute units");
  add_output(values);

  auto* sim = app.add_subcommand("simulate", "simulate rounds and write a work record");
  add_game(sim);
  sim->add_option("--behavior", config.behavior, "behaviour name or JSON path");
  sim->add_option("--rounds", config.rounds, "number of rounds");
  sim->add_option("--seed", config.seed, "master seed");
  sim->add_option("--delta", config.delta, "energy quantum");
  sim->add_option("--variant", config.variant, "feedforward | reversible");
  sim->add_option("--threads", config.threads, "worker threads (0 = auto)");
  add_output(sim);

  auto* cert = app.add_subcommand("certify", "certify a work record");
  cert->add_option("record", config.record, "work record (NDJSON or CSV)")->required();
  add_game(cert);
  cert->add_option("--alpha", config.alpha, "error probability");
  cert->add_option("--method", config.method,
                   "hoeffding | azuma | clopper-pearson | wilson");
  cert->add_option("--delta", config.delta, "energy quantum for CSV records");
  cert->add_option("--seed", config.seed, "seed recorded for CSV records");
  cert->add_option("--eta0-upper", config.eta0_upper, "calibrated upper bound on eta0");
  cert->add_option("--eta1-upper", config.eta1_upper, "calibrated upper bound on eta1");
  add_output(cert);

  auto* sweep = app.add_subcommand("sweep", "noise or chained-family sweep (CSV)");
  sweep->add_option("--kind", config.sweep_kind, "noise | chained");
  sweep->add_option("--eps-step", config.eps_step, "noise grid step on [0, 1]");
  sweep->add_option("--n-min", config.n_min, "smallest chained N");
  sweep->add_option("--n-max", config.n_max, "largest chained N");
  add_output(sweep);

  auto* ledger = app.add_subcommand("ledger", "cyclic energy ledger");
  ledger->add_option("--p", config.p, "success probability");
  ledger->add_option("--variant", config.memory_variant,
                     "reversible | measured-memory | full-transcript");
  ledger->add_option("--delta", config.delta, "energy quantum");
  ledger->add_option("--kt-ln2", config.kt_ln2, "k_B T ln 2");
  ledger->add_option("--transcript-entropy", config.transcript_entropy,
                     "H(T) in bits (full-transcript variant)");
  add_output(ledger);

  auto* mono = app.add_subcommand("monogamy", "CHSH battery monogamy check");
  mono->add_option("--tripartite", config.tripartite,
                   "pr-uniform | pr-deterministic | tsirelson-uniform | uniform | JSON path");
  mono->add_option("--delta", config.delta, "energy quantum");
  mono->add_flag("--absolute", config.absolute, "print energies in absolute units");
  mono->add_flag("--flip-ab", config.flip_ab, "flip the E11 sign on the AB pair");
  mono->add_flag("--flip-ac", config.flip_ac, "flip the E11 sign on the AC pair");
  add_output(mono);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (values->parsed()) {
      emit(config, out, cmd_values(config).dump(2) + "\n");
    } else if (sim->parsed()) {
      const WorkRecord record = cmd_simulate(config);
      std::ostringstream text;
      const std::string format = config.format.empty() ? "ndjson" : config.format;
      if (format == "ndjson") {
        write_record_ndjson(text, record);
      } else if (format == "csv") {
        write_record_csv(text, record);
      } else {
        fail(ErrorKind::kInvalidParameter, "simulate writes ndjson or csv");
      }
      emit(config, out, text.str());
    } else if (cert->parsed()) {
      emit(config, out, to_json(cmd_certify(config)).dump(2) + "\n");
    } else if (sweep->parsed()) {
      emit(config, out, cmd_sweep(config));
    } else if (ledger->parsed()) {
      emit(config, out, cmd_ledger(config).dump(2) + "\n");
    } else if (mono->parsed()) {
      emit(config, out, cmd_monogamy(config).dump(2) + "\n");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::kIo ? kExitIo : kExitInput;
  }
  return kExitOk;
}

}  // namespace batterybell::cli
