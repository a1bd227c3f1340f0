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

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <tuple>

#include "doctest.h"

#include "batterybell/behaviors.hpp"
#include "batterybell/error.hpp"
#include "batterybell/transducer.hpp"

using namespace batterybell;

namespace {

constexpr double kCos2Pi8 = 0.853553390593273762200422181052;

std::vector<RegisterState> all_basis_states(bool with_memory) {
  std::vector<RegisterState> out;
  for (int bits = 0; bits < (with_memory ? 32 : 16); ++bits) {
    RegisterState s;
    s.x = bits & 1;
    s.g = (bits >> 1) & 1;
    s.f = (bits >> 2) & 1;
    s.w = (bits >> 3) & 1;
    s.m = (bits >> 4) & 1;
    s.delta = 1.5;
    out.push_back(s);
  }
  return out;
}

std::tuple<int, int, int, int, int> key(const RegisterState& s) {
  return {s.x, s.g, s.m, s.f, s.w};
}

XorGame always_unequal_game() {
  return XorGame("ones", index_labels(2), index_labels(2), {0.25, 0.25, 0.25, 0.25}, {1, 1, 1, 1});
}

std::vector<std::pair<XorGame, Behavior>> small_corpus() {
  std::vector<std::pair<XorGame, Behavior>> corpus;
  corpus.emplace_back(make_chsh(), pr_box());
  corpus.emplace_back(make_chsh(), tsirelson_behavior());
  corpus.emplace_back(make_chsh(), local_zeros_chsh());
  corpus.emplace_back(make_chsh(), noisy_pr(0.3));
  corpus.emplace_back(make_chained(3), chained_quantum_behavior(3));
  corpus.emplace_back(make_chained(4), uniform_behavior(4, 4));
  std::mt19937_64 rng(99);
  std::exponential_distribution<double> expo;
  for (int i = 0; i < 6; ++i) {
    const int n = 2 + i % 3;
    std::vector<OutcomeRow> rows(static_cast<std::size_t>(n * n));
    for (auto& row : rows) {
      double t = 0.0;
      for (double& p : row) t += (p = expo(rng));
      for (double& p : row) p /= t;
    }
    corpus.emplace_back(make_chained(n), Behavior(index_labels(n), index_labels(n), rows));
  }
  return corpus;
}

}  // namespace

TEST_CASE("equality-controlled swap examples") {
  RegisterState s{1, 1, 0, 1, 0, 1.0};
  RegisterState out = equality_controlled_swap(s);
  CHECK(out.f == 0);
  CHECK(out.w == 1);

  s = {0, 1, 0, 1, 0, 1.0};
  CHECK(equality_controlled_swap(s) == s);

  s = {1, 1, 0, 0, 0, 1.0};
  out = equality_controlled_swap(s);
  CHECK(out.f == 0);
  CHECK(out.w == 0);
}

TEST_CASE("routing unitaries are energy-preserving bijections") {
  for (bool reversible : {false, true}) {
    const auto states = all_basis_states(reversible);
    std::set<std::tuple<int, int, int, int, int>> images;
    for (const auto& s : states) {
      const RegisterState out = reversible ? reversible_controller(s) : equality_controlled_swap(s);
      CHECK(out.excitations() == s.excitations());
      CHECK(out.energy() == s.energy());
      CHECK(out.x == s.x);
      CHECK(out.g == s.g);
      CHECK(out.m == s.m);
      const RegisterState back = reversible ? reversible_controller(out) : equality_controlled_swap(out);
      CHECK(back == s);
      images.insert(key(out));
    }
    CHECK(images.size() == states.size());
  }
}

TEST_CASE("run_round examples") {
  const XorGame chsh = make_chsh();
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    RoundStream stream(seed, seed * 7);
    const RoundTranscript t = run_round(chsh, pr_box(), stream, 2.0);
    CHECK(t.work == 2.0);
    CHECK(t.pre_state.energy() == 2.0);
    CHECK(t.post_state.energy() == 2.0);
  }
  const XorGame ones = always_unequal_game();
  const Behavior zeros = deterministic_local({0, 0}, {0, 0});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RoundStream stream(seed, 0);
    CHECK(run_round(ones, zeros, stream).work == 0.0);
  }
}

TEST_CASE("transcript bookkeeping holds for every enumerated transcript") {
  for (const auto& [game, behavior] : small_corpus()) {
    for (const auto& wt : enumerate_transcripts(game, behavior)) {
      for (Variant variant : {Variant::kFeedforward, Variant::kReversible}) {
        const RoundTranscript t = route_round(game, wt.round, variant, 1.0);
        const int f = game.predicate(t.u, t.v);
        CHECK(t.x == (f ^ t.r));
        CHECK(t.g == (t.a ^ t.b ^ t.r));
        CHECK(t.work == 1.0 * t.z);
        CHECK(t.z == ((t.a ^ t.b) == f ? 1 : 0));
        CHECK(t.pre_state.energy() == t.post_state.energy());
        CHECK(t.pre_state.f == 1);
        CHECK(t.pre_state.w == 0);
        CHECK(t.post_state.m == 0);
      }
    }
  }
}

TEST_CASE("reversible rounds replay feed-forward rounds") {
  const XorGame chsh = make_chsh();
  const Behavior b = tsirelson_behavior();
  bool saw_loss = false;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    RoundStream s1(42, i);
    RoundStream s2(42, i);
    const RoundTranscript ff = run_round(chsh, b, s1);
    const RoundTranscript rev = run_round_reversible(chsh, b, s2);
    CHECK(ff.work == rev.work);
    CHECK(rev.post_state.m == 0);
    if (rev.z == 0) {
      saw_loss = true;
      CHECK(rev.post_state.f == 1);
      CHECK(rev.post_state.w == 0);
    }
  }
  CHECK(saw_loss);
}

TEST_CASE("sampler frequencies match the transcript distribution") {
  const XorGame game = make_chained(3);
  const Behavior behavior = chained_quantum_behavior(3);
  const RoundSampler sampler(game, behavior);
  const std::uint64_t n = 200000;
  std::map<std::tuple<std::size_t, std::size_t, int, int, int>, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < n; ++i) {
    RoundStream stream(5, i);
    const SampledRound r = sampler.sample(stream);
    CHECK(game.in_support(r.u, r.v));
    ++counts[{r.u, r.v, r.a, r.b, r.r}];
  }
  for (const auto& wt : enumerate_transcripts(game, behavior)) {
    const auto& r = wt.round;
    const double observed = static_cast<double>(counts[{r.u, r.v, r.a, r.b, r.r}]) / n;
    const double sigma = std::sqrt(wt.probability * (1.0 - wt.probability) / n);
    CHECK(std::abs(observed - wt.probability) <= 5.0 * sigma + 1e-12);
  }
}

TEST_CASE("simulate") {
  const XorGame chsh = make_chsh();
  SimulationOptions options;
  options.delta = 0.5;
  const WorkRecord pr = simulate(chsh, pr_box(), 5000, 3, options);
  CHECK(pr.rounds == 5000);
  CHECK(pr.sum_work() == 2500.0);
  CHECK(pr.game_name == "chsh");

  const WorkRecord tsirelson = simulate(chsh, tsirelson_behavior(), 1000000, 17);
  CHECK(std::abs(tsirelson.mean_bit() - kCos2Pi8) <= 0.002);

  const WorkRecord coin = simulate(chsh, uniform_behavior(2, 2), 1000000, 19);
  CHECK(std::abs(coin.mean_bit() - 0.5) <= 3.0 * std::sqrt(0.25 / 1e6));

  CHECK_THROWS_AS(simulate(chsh, pr_box(), 0, 1), Error);
}

TEST_CASE("simulate output does not depend on threading or variant") {
  const XorGame game = make_chained(4);
  const Behavior b = chained_quantum_behavior(4);
  SimulationOptions one;
  one.threads = 1;
  SimulationOptions many;
  many.threads = 7;
  SimulationOptions reversible;
  reversible.variant = Variant::kReversible;
  reversible.threads = 3;
  const WorkRecord a = simulate(game, b, 300000, 1234, one);
  CHECK(a == simulate(game, b, 300000, 1234, many));
  CHECK(a == simulate(game, b, 300000, 1234, reversible));
  CHECK_FALSE(a == simulate(game, b, 300000, 1235, one));
}

TEST_CASE("exact work mean") {
  const XorGame chsh = make_chsh();
  CHECK(exact_work_mean(chsh, pr_box()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(exact_work_mean(chsh, local_zeros_chsh(), 2.0) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(std::abs(exact_work_mean(make_chained(3), chained_quantum_behavior(3)) -
                 0.933012701892219323381861585376) <= 1e-12);
  for (const auto& [game, behavior] : small_corpus()) {
    CHECK(std::abs(exact_work_mean(game, behavior, 3.0) - 3.0 * success_probability(game, behavior)) <=
          1e-12);
  }
}

TEST_CASE("pad statistics") {
  for (const auto& [game, behavior] : small_corpus()) {
    const PadStatistics s = pad_statistics(game, behavior);
    CHECK(s.x[0] == s.x[1]);
    CHECK(s.g[0] == s.g[1]);
    CHECK(std::abs(s.x[0] - 0.5) <= 1e-12);
    CHECK(std::abs(s.g[0] - 0.5) <= 1e-12);
    for (int x = 0; x < 2; ++x) {
      for (int e = 0; e < 2; ++e) {
        CHECK(std::abs(s.x_and_e[x][e] - s.x[x] * s.e[e]) <= 1e-12);
      }
    }
    CHECK(std::abs(s.e[1] - (1.0 - success_probability(game, behavior))) <= 1e-12);
  }
}

TEST_CASE("predicate routing") {
  const XorGame chsh = make_chsh();
  const Behavior b = noisy_pr(0.4);
  std::vector<std::pair<SampledRound, double>> dist;
  for (const auto& wt : enumerate_transcripts(chsh, b)) dist.emplace_back(wt.round, wt.probability);

  CHECK(predicate_route(dist, [](const SampledRound&) { return true; }) == doctest::Approx(1.0));
  CHECK(predicate_route(dist, [](const SampledRound&) { return false; }) == 0.0);
  const auto wins = [&](const SampledRound& r) {
    return (r.a ^ r.b) == chsh.predicate(r.u, r.v);
  };
  CHECK(std::abs(predicate_route(dist, wins, 2.0) - exact_work_mean(chsh, b, 2.0)) <= 1e-12);

  // Non-XOR predicate on an arbitrary transcript type.
  const std::vector<std::pair<int, double>> dice{{1, 0.25}, {2, 0.25}, {3, 0.5}};
  CHECK(predicate_route(dice, [](int t) { return t >= 2; }) == 0.75);
  const std::vector<std::pair<int, double>> broken{{1, 0.25}, {2, 0.25}};
  CHECK_THROWS_AS(predicate_route(broken, [](int) { return true; }), Error);
}

TEST_CASE("round streams are counter based") {
  RoundStream a(1, 10);
  RoundStream b(1, 10);
  RoundStream c(1, 11);
  const auto x = a.next_u64();
  CHECK(x == b.next_u64());
  CHECK(x != c.next_u64());
  RoundStream d(2, 10);
  CHECK(x != d.next_u64());
  for (int i = 0; i < 1000; ++i) {
    const double u = a.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}
