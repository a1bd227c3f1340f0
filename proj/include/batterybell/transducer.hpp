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

#ifndef BATTERYBELL_TRANSDUCER_HPP_
#define BATTERYBELL_TRANSDUCER_HPP_

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "batterybell/behaviors.hpp"
#include "batterybell/error.hpp"
#include "batterybell/games.hpp"

namespace batterybell {

// Classical basis state of the round registers. X, G and the memory M are
// logical registers with zero energy; only fuel F and battery W carry Delta.
struct RegisterState {
  int x = 0;
  int g = 0;
  int m = 0;
  int f = 1;
  int w = 0;
  double delta = 1.0;

  int excitations() const { return f + w; }
  double energy() const { return delta * excitations(); }

  friend bool operator==(const RegisterState&, const RegisterState&) = default;
};

// SWAP_FW when x == g, identity otherwise. x, g, m untouched.
RegisterState equality_controlled_swap(const RegisterState& state);

// SWAP_FW when m == 1, identity otherwise (the feed-forward unitary U_fb).
RegisterState memory_controlled_swap(const RegisterState& state);

// Compute z = [x == g] into m, apply the m-controlled SWAP, uncompute m.
RegisterState reversible_controller(const RegisterState& state);

// Counter-based random stream: the state is a pure function of
// (seed, round index), so rounds can be replayed and run in any order.
class RoundStream {
 public:
  RoundStream(std::uint64_t seed, std::uint64_t round_index);

  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 random bits.
  double next_unit();
  int next_bit() { return static_cast<int>(next_u64() >> 63); }

 private:
  std::uint64_t state_;
};

// Referee and device draws for one round. The pad r is drawn by the referee
// and never reaches the behaviour sampler.
struct SampledRound {
  std::size_t u = 0;
  std::size_t v = 0;
  int a = 0;
  int b = 0;
  int r = 0;

  friend bool operator==(const SampledRound&, const SampledRound&) = default;
};

struct RoundTranscript {
  std::size_t u = 0;
  std::size_t v = 0;
  int a = 0;
  int b = 0;
  int r = 0;
  int x = 0;  // f(u,v) XOR r
  int g = 0;  // a XOR b XOR r
  int e = 0;  // g XOR x
  int z = 0;  // 1 - e
  double work = 0.0;
  RegisterState pre_state;
  RegisterState post_state;
};

enum class Variant { kFeedforward, kReversible };

const char* to_string(Variant variant);
Variant parse_variant(const std::string& text);

// Precomputed inverse-CDF tables for one (game, behaviour) pair.
class RoundSampler {
 public:
  RoundSampler(const XorGame& game, const Behavior& behavior);

  // Draw order: question pair, then (a,b) from the 4-entry row, then pad.
  SampledRound sample(RoundStream& stream) const;

 private:
  std::vector<const XorGame::Pair*> pairs_;
  std::vector<double> pair_cdf_;
  std::vector<std::array<double, 4>> outcome_cdf_;  // per support pair
};

RoundTranscript route_round(const XorGame& game, const SampledRound& sample,
                            Variant variant, double delta = 1.0);

RoundTranscript run_round(const XorGame& game, const Behavior& behavior,
                          RoundStream& stream, double delta = 1.0);
RoundTranscript run_round_reversible(const XorGame& game,
                                     const Behavior& behavior,
                                     RoundStream& stream, double delta = 1.0);

struct WorkRecord {
  std::string game_name;
  double delta = 1.0;
  std::uint64_t seed = 0;
  std::uint64_t rounds = 0;
  std::vector<std::uint8_t> work_bits;

  std::uint64_t charged() const;
  double sum_work() const { return delta * static_cast<double>(charged()); }
  double mean_bit() const {
    return rounds == 0 ? 0.0 : static_cast<double>(charged()) / static_cast<double>(rounds);
  }

  friend bool operator==(const WorkRecord&, const WorkRecord&) = default;
};

struct SimulationOptions {
  Variant variant = Variant::kFeedforward;
  double delta = 1.0;
  // 0 picks the hardware concurrency. Output does not depend on this.
  unsigned threads = 0;
};

// Round i uses RoundStream(seed, i). Throws for n == 0.
WorkRecord simulate(const XorGame& game, const Behavior& behavior,
                    std::uint64_t n, std::uint64_t seed,
                    const SimulationOptions& options = {});

struct WeightedTranscript {
  SampledRound round;
  double probability = 0.0;  // pi(u,v) P(a,b|u,v) / 2
};

// Every (u, v, a, b, r) with nonzero probability.
std::vector<WeightedTranscript> enumerate_transcripts(const XorGame& game,
                                                      const Behavior& behavior);

// Enumeration oracle for the mean battery charge: routes every transcript
// through the equality-controlled SWAP and sums probability times work.
double exact_work_mean(const XorGame& game, const Behavior& behavior,
                       double delta = 1.0);

struct PadStatistics {
  std::array<double, 2> x{};
  std::array<double, 2> g{};
  std::array<double, 2> e{};
  std::array<std::array<double, 2>, 2> x_and_e{};  // [x][e]
};

PadStatistics pad_statistics(const XorGame& game, const Behavior& behavior);

// Work delivered when a memory bit holding `bit` controls the fuel-battery
// SWAP on a fresh (f=1, w=0) round.
double route_memory_bit(int bit, double delta);

// Battery charge for an arbitrary binary predicate on a finite transcript
// distribution: E[W] = Delta P[V(T) = 1], by exact summation.
template <class Transcript, class Predicate>
double predicate_route(const std::vector<std::pair<Transcript, double>>& distribution,
                       Predicate&& predicate, double delta = 1.0) {
  double total = 0.0;
  for (const auto& entry : distribution) {
    require(entry.second >= 0.0, "transcript probabilities must be nonnegative");
    total += entry.second;
  }
  require(std::abs(total - 1.0) <= kNormalizationTolerance,
          "transcript distribution is not normalized");
  double work = 0.0;
  for (const auto& [transcript, probability] : distribution) {
    const bool value = predicate(transcript);
    work += probability * route_memory_bit(value ? 1 : 0, delta);
  }
  return work;
}

}  // namespace batterybell

#endif  // BATTERYBELL_TRANSDUCER_HPP_
