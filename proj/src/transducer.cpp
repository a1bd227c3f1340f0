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

#include "batterybell/transducer.hpp"

#include <algorithm>
#include <thread>

namespace batterybell {

RegisterState equality_controlled_swap(const RegisterState& state) {
  RegisterState out = state;
  if (state.x == state.g) std::swap(out.f, out.w);
  return out;
}

RegisterState memory_controlled_swap(const RegisterState& state) {
  RegisterState out = state;
  if (state.m == 1) std::swap(out.f, out.w);
  return out;
}

RegisterState reversible_controller(const RegisterState& state) {
  RegisterState out = state;
  const int success = state.x == state.g ? 1 : 0;
  out.m ^= success;  // compute
  out = memory_controlled_swap(out);
  out.m ^= success;  // uncompute; x and g are unchanged by the SWAP
  return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RoundStream::RoundStream(std::uint64_t seed, std::uint64_t round_index)
    : state_(splitmix64(seed) ^ splitmix64(round_index ^ 0xd1b54a32d192ed03ULL)) {}

std::uint64_t RoundStream::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double RoundStream::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

const char* to_string(Variant variant) {
  return variant == Variant::kFeedforward ? "feedforward" : "reversible";
}

Variant parse_variant(const std::string& text) {
  if (text == "feedforward") return Variant::kFeedforward;
  if (text == "reversible") return Variant::kReversible;
  fail(ErrorKind::kInvalidParameter, "unknown variant '" + text + "'");
}

RoundSampler::RoundSampler(const XorGame& game, const Behavior& behavior) {
  require(behavior.num_alice() == game.num_alice() &&
              behavior.num_bob() == game.num_bob(),
          "behaviour does not cover the game's question sets");
  double running = 0.0;
  for (const auto& pair : game.support()) {
    pairs_.push_back(&pair);
    running += pair.weight;
    pair_cdf_.push_back(running);

    const OutcomeRow& row = behavior.row(pair.u, pair.v);
    std::array<double, 4> cdf{};
    double acc = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      acc += row[k];
      cdf[k] = acc;
      if (row[k] > 0.0) last_positive = k;
    }
    // Absorb rounding so a draw in [0,1) always lands on a positive entry.
    for (std::size_t k = last_positive; k < 4; ++k) cdf[k] = 2.0;
    outcome_cdf_.push_back(cdf);
  }
  pair_cdf_.back() = 2.0;
}

SampledRound RoundSampler::sample(RoundStream& stream) const {
  SampledRound out;
  const double question_draw = stream.next_unit();
  const auto pair_index = static_cast<std::size_t>(
      std::upper_bound(pair_cdf_.begin(), pair_cdf_.end(), question_draw) -
      pair_cdf_.begin());
  const XorGame::Pair& pair = *pairs_[pair_index];
  out.u = pair.u;
  out.v = pair.v;

  const auto& cdf = outcome_cdf_[pair_index];
  const double outcome_draw = stream.next_unit();
  const auto outcome = static_cast<int>(
      std::upper_bound(cdf.begin(), cdf.end(), outcome_draw) - cdf.begin());
  out.a = outcome >> 1;
  out.b = outcome & 1;

  out.r = stream.next_bit();
  return out;
}

RoundTranscript route_round(const XorGame& game, const SampledRound& sample,
                            Variant variant, double delta) {
  require(delta > 0.0, "energy quantum must be positive");
  const int f = game.predicate(sample.u, sample.v);
  require(f == 0 || f == 1, "sampled question pair is outside the game support");

  RoundTranscript t;
  t.u = sample.u;
  t.v = sample.v;
  t.a = sample.a;
  t.b = sample.b;
  t.r = sample.r;
  t.x = f ^ sample.r;
  t.g = sample.a ^ sample.b ^ sample.r;
  t.e = t.g ^ t.x;
  t.z = 1 - t.e;

  t.pre_state = RegisterState{t.x, t.g, 0, 1, 0, delta};
  t.post_state = variant == Variant::kFeedforward
                     ? equality_controlled_swap(t.pre_state)
                     : reversible_controller(t.pre_state);
  t.work = delta * (t.post_state.w - t.pre_state.w);
  return t;
}

RoundTranscript run_round(const XorGame& game, const Behavior& behavior,
                          RoundStream& stream, double delta) {
  const RoundSampler sampler(game, behavior);
  return route_round(game, sampler.sample(stream), Variant::kFeedforward, delta);
}

RoundTranscript run_round_reversible(const XorGame& game,
                                     const Behavior& behavior,
                                     RoundStream& stream, double delta) {
  const RoundSampler sampler(game, behavior);
  return route_round(game, sampler.sample(stream), Variant::kReversible, delta);
}

std::uint64_t WorkRecord::charged() const {
  return static_cast<std::uint64_t>(
      std::count(work_bits.begin(), work_bits.end(), std::uint8_t{1}));
}

WorkRecord simulate(const XorGame& game, const Behavior& behavior,
                    std::uint64_t n, std::uint64_t seed,
                    const SimulationOptions& options) {
  require(n >= 1, "simulation needs at least one round");
  require(options.delta > 0.0, "energy quantum must be positive");
  const RoundSampler sampler(game, behavior);

  WorkRecord record;
  record.game_name = game.name();
  record.delta = options.delta;
  record.seed = seed;
  record.rounds = n;
  record.work_bits.assign(n, 0);

  const auto run_block = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      RoundStream stream(seed, i);
      const RoundTranscript t =
          route_round(game, sampler.sample(stream), options.variant, options.delta);
      record.work_bits[i] = static_cast<std::uint8_t>(t.post_state.w);
    }
  };

  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1U, std::thread::hardware_concurrency());
  constexpr std::uint64_t kMinRoundsPerThread = 1 << 14;
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, n / kMinRoundsPerThread)));
  if (threads <= 1) {
    run_block(0, n);
    return record;
  }

  std::vector<std::thread> workers;
  const std::uint64_t block = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = t * block;
    const std::uint64_t end = std::min(n, begin + block);
    if (begin >= end) break;
    workers.emplace_back(run_block, begin, end);
  }
  for (auto& worker : workers) worker.join();
  return record;
}

std::vector<WeightedTranscript> enumerate_transcripts(const XorGame& game,
                                                      const Behavior& behavior) {
  require(behavior.num_alice() == game.num_alice() &&
              behavior.num_bob() == game.num_bob(),
          "behaviour does not cover the game's question sets");
  std::vector<WeightedTranscript> out;
  for (const auto& pair : game.support()) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        const double p = behavior.probability(pair.u, pair.v, a, b);
        if (p == 0.0) continue;
        for (int r = 0; r < 2; ++r) {
          out.push_back({SampledRound{pair.u, pair.v, a, b, r}, pair.weight * p * 0.5});
        }
      }
    }
  }
  return out;
}

double exact_work_mean(const XorGame& game, const Behavior& behavior,
                       double delta) {
  double mean = 0.0;
  for (const auto& wt : enumerate_transcripts(game, behavior)) {
    mean += wt.probability *
            route_round(game, wt.round, Variant::kFeedforward, delta).work;
  }
  return mean;
}

PadStatistics pad_statistics(const XorGame& game, const Behavior& behavior) {
  PadStatistics stats;
  for (const auto& wt : enumerate_transcripts(game, behavior)) {
    const RoundTranscript t = route_round(game, wt.round, Variant::kFeedforward);
    stats.x[t.x] += wt.probability;
    stats.g[t.g] += wt.probability;
    stats.e[t.e] += wt.probability;
    stats.x_and_e[t.x][t.e] += wt.probability;
  }
  return stats;
}

double route_memory_bit(int bit, double delta) {
  RegisterState state;
  state.delta = delta;
  state.m = bit;
  const RegisterState after = memory_controlled_swap(state);
  return delta * (after.w - state.w);
}

}  // namespace batterybell
