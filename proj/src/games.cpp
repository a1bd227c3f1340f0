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

#include "batterybell/games.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "batterybell/error.hpp"

namespace batterybell {

namespace {

constexpr double kWeightSumTolerance = 1e-12;

}  // namespace

XorGame::XorGame(std::string name, std::vector<std::string> alice_questions,
                 std::vector<std::string> bob_questions,
                 std::vector<double> weights, std::vector<int> predicate_table,
                 GameFamily family, int family_parameter)
    : name_(std::move(name)),
      alice_(std::move(alice_questions)),
      bob_(std::move(bob_questions)),
      weights_(std::move(weights)),
      predicate_(std::move(predicate_table)),
      family_(family),
      family_parameter_(family_parameter) {
  require(!alice_.empty() && !bob_.empty(),
          "game question sets must be nonempty");
  const std::size_t cells = alice_.size() * bob_.size();
  require(weights_.size() == cells, "weight table has wrong size");
  require(predicate_.size() == cells, "predicate table has wrong size");

  double total = 0.0;
  for (std::size_t u = 0; u < alice_.size(); ++u) {
    for (std::size_t v = 0; v < bob_.size(); ++v) {
      const double w = this->weight(u, v);
      const int f = this->predicate(u, v);
      require(std::isfinite(w) && w >= 0.0,
              "question weights must be finite and nonnegative");
      require(f == kUndefined || f == 0 || f == 1,
              "predicate values must be 0 or 1");
      if (w > 0.0) {
        require(f != kUndefined, "predicate undefined on a supported pair (" +
                                     alice_[u] + "," + bob_[v] + ")");
        support_.push_back({u, v, w, f});
      }
      total += w;
    }
  }
  require(std::abs(total - 1.0) <= kWeightSumTolerance,
          "question weights must sum to 1");
}

std::vector<std::string> index_labels(std::size_t count) {
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t i = 0; i < count; ++i) labels.push_back(std::to_string(i));
  return labels;
}

XorGame make_chsh() {
  return XorGame("chsh", index_labels(2), index_labels(2),
                 {0.25, 0.25, 0.25, 0.25}, {0, 0, 0, 1}, GameFamily::kChsh);
}

XorGame make_chained(int n) {
  require(n >= 2, "chained game needs N >= 2");
  const auto size = static_cast<std::size_t>(n);
  std::vector<double> weights(size * size, 0.0);
  std::vector<int> predicate(size * size, XorGame::kUndefined);
  const double w = 1.0 / (2.0 * n);
  for (std::size_t j = 0; j < size; ++j) {
    // Equality edge (j, j) and neighbour edge (j+1 mod N, j); the single
    // wrap-around edge (0, N-1) demands unequal outputs.
    weights[j * size + j] = w;
    predicate[j * size + j] = 0;
    const std::size_t next = (j + 1) % size;
    weights[next * size + j] = w;
    predicate[next * size + j] = (j == size - 1) ? 1 : 0;
  }
  return XorGame("chained:" + std::to_string(n), index_labels(size),
                 index_labels(size), std::move(weights), std::move(predicate),
                 GameFamily::kChained, n);
}

LocalStrategy best_local_strategy(const XorGame& game, std::size_t cap) {
  const std::size_t na = game.num_alice();
  const std::size_t nb = game.num_bob();
  if (na + nb > cap) {
    fail(ErrorKind::kSizeLimit,
         "deterministic enumeration over " + std::to_string(na + nb) +
             " questions exceeds cap " + std::to_string(cap));
  }

  const auto bit_of = [](std::uint64_t mask, std::size_t count,
                         std::size_t index) {
    return static_cast<int>((mask >> (count - 1 - index)) & 1U);
  };

  // score_by_bob_bit[v][b]: probability mass won on column v when Bob
  // answers b, for the current Alice assignment.
  std::vector<std::array<double, 2>> score_by_bob_bit(nb);
  LocalStrategy best;
  best.value = -1.0;
  std::uint64_t best_alice = 0;
  std::uint64_t best_bob = 0;

  for (std::uint64_t alice = 0; alice < (std::uint64_t{1} << na); ++alice) {
    for (std::size_t v = 0; v < nb; ++v) score_by_bob_bit[v] = {0.0, 0.0};
    for (const auto& pair : game.support()) {
      const int a = bit_of(alice, na, pair.u);
      // a XOR b == f  <=>  b == a XOR f
      score_by_bob_bit[pair.v][a ^ pair.predicate] += pair.weight;
    }
    for (std::uint64_t bob = 0; bob < (std::uint64_t{1} << nb); ++bob) {
      double score = 0.0;
      for (std::size_t v = 0; v < nb; ++v) {
        score += score_by_bob_bit[v][bit_of(bob, nb, v)];
      }
      if (score > best.value) {
        best.value = score;
        best_alice = alice;
        best_bob = bob;
      }
    }
  }

  best.alice_bits.resize(na);
  best.bob_bits.resize(nb);
  for (std::size_t u = 0; u < na; ++u) best.alice_bits[u] = bit_of(best_alice, na, u);
  for (std::size_t v = 0; v < nb; ++v) best.bob_bits[v] = bit_of(best_bob, nb, v);
  return best;
}

double local_value(const XorGame& game, std::size_t cap) {
  return best_local_strategy(game, cap).value;
}

double ns_value(const XorGame& /*game*/) { return 1.0; }

std::optional<double> quantum_value_closed(const XorGame& game) {
  const auto cos_sq = [](double angle) {
    const double c = std::cos(angle);
    return c * c;
  };
  switch (game.family()) {
    case GameFamily::kChsh:
      return cos_sq(std::numbers::pi / 8.0);
    case GameFamily::kChained:
      return cos_sq(std::numbers::pi / (4.0 * game.family_parameter()));
    case GameFamily::kCustom:
      break;
  }
  return std::nullopt;
}

namespace {

using Vectors = std::vector<std::vector<double>>;

void normalize_into(std::vector<double>& target, std::vector<double>& sum) {
  double norm = 0.0;
  for (double x : sum) norm += x * x;
  norm = std::sqrt(norm);
  if (norm == 0.0) return;  // keep the previous vector
  for (std::size_t i = 0; i < sum.size(); ++i) target[i] = sum[i] / norm;
}

class BiasForm {
 public:
  explicit BiasForm(const XorGame& game)
      : na_(game.num_alice()),
        nb_(game.num_bob()),
        coefficients_(na_ * nb_, 0.0) {
    for (const auto& pair : game.support()) {
      coefficients_[pair.u * nb_ + pair.v] =
          pair.predicate == 0 ? pair.weight : -pair.weight;
    }
  }

  double evaluate(const Vectors& alice, const Vectors& bob) const {
    double bias = 0.0;
    for (std::size_t u = 0; u < na_; ++u) {
      for (std::size_t v = 0; v < nb_; ++v) {
        const double c = coefficients_[u * nb_ + v];
        if (c == 0.0) continue;
        double dot = 0.0;
        for (std::size_t k = 0; k < alice[u].size(); ++k) {
          dot += alice[u][k] * bob[v][k];
        }
        bias += c * dot;
      }
    }
    return bias;
  }

  // One seesaw sweep: best response of Alice to Bob, then Bob to Alice.
  void sweep(Vectors& alice, Vectors& bob) const {
    const std::size_t dim = alice.front().size();
    std::vector<double> sum(dim);
    for (std::size_t u = 0; u < na_; ++u) {
      std::fill(sum.begin(), sum.end(), 0.0);
      for (std::size_t v = 0; v < nb_; ++v) {
        const double c = coefficients_[u * nb_ + v];
        for (std::size_t k = 0; k < dim; ++k) sum[k] += c * bob[v][k];
      }
      normalize_into(alice[u], sum);
    }
    for (std::size_t v = 0; v < nb_; ++v) {
      std::fill(sum.begin(), sum.end(), 0.0);
      for (std::size_t u = 0; u < na_; ++u) {
        const double c = coefficients_[u * nb_ + v];
        for (std::size_t k = 0; k < dim; ++k) sum[k] += c * alice[u][k];
      }
      normalize_into(bob[v], sum);
    }
  }

 private:
  std::size_t na_;
  std::size_t nb_;
  std::vector<double> coefficients_;
};

Vectors embed_bits(const std::vector<int>& bits, std::size_t dim) {
  Vectors out(bits.size(), std::vector<double>(dim, 0.0));
  for (std::size_t i = 0; i < bits.size(); ++i) out[i][0] = bits[i] ? -1.0 : 1.0;
  return out;
}

Vectors random_unit_vectors(std::size_t count, std::size_t dim,
                            std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vectors out(count, std::vector<double>(dim));
  for (auto& vec : out) {
    double norm = 0.0;
    do {
      norm = 0.0;
      for (double& x : vec) {
        x = normal(rng);
        norm += x * x;
      }
    } while (norm == 0.0);
    norm = std::sqrt(norm);
    for (double& x : vec) x /= norm;
  }
  return out;
}

std::vector<int> random_bits(std::size_t count, std::mt19937_64& rng) {
  std::vector<int> bits(count);
  for (int& b : bits) b = static_cast<int>(rng() & 1U);
  return bits;
}

}  // namespace

QuantumLowerBound quantum_value_lower(const XorGame& game,
                                      const QuantumSearchOptions& options) {
  require(options.restarts >= 1, "quantum search needs at least one restart");
  require(options.tol > 0.0, "quantum search tolerance must be positive");

  const std::size_t na = game.num_alice();
  const std::size_t nb = game.num_bob();
  const std::size_t dim = std::min(na, nb);
  const BiasForm form(game);
  std::mt19937_64 rng(options.seed);

  QuantumLowerBound result;
  result.dimension = dim;
  result.bias = -2.0;

  const std::size_t deterministic_starts = (options.restarts + 1) / 2;
  const bool can_enumerate = na + nb <= options.enumeration_cap;

  for (std::size_t restart = 0; restart < options.restarts; ++restart) {
    Vectors alice;
    Vectors bob;
    if (restart < deterministic_starts) {
      if (restart == 0 && can_enumerate) {
        const LocalStrategy best = best_local_strategy(game, options.enumeration_cap);
        alice = embed_bits(best.alice_bits, dim);
        bob = embed_bits(best.bob_bits, dim);
      } else {
        alice = embed_bits(random_bits(na, rng), dim);
        bob = embed_bits(random_bits(nb, rng), dim);
      }
    } else {
      alice = random_unit_vectors(na, dim, rng);
      bob = random_unit_vectors(nb, dim, rng);
    }

    double bias = form.evaluate(alice, bob);
    bool converged = false;
    for (std::size_t sweep = 0; sweep < options.max_sweeps; ++sweep) {
      form.sweep(alice, bob);
      const double next = form.evaluate(alice, bob);
      const double gain = next - bias;
      bias = std::max(bias, next);
      if (gain < options.tol) {
        converged = true;
        break;
      }
    }
    result.converged = result.converged && converged;
    result.bias = std::max(result.bias, bias);
  }

  result.value = 0.5 + 0.5 * result.bias;
  return result;
}

GameValues compute_game_values(const XorGame& game,
                               const QuantumSearchOptions& options) {
  GameValues values;
  values.local = local_value(game, options.enumeration_cap);
  values.nonsignalling = ns_value(game);
  if (const auto closed = quantum_value_closed(game)) {
    values.quantum = *closed;
    values.quantum_is_exact = true;
  } else {
    values.quantum = std::max(values.local, quantum_value_lower(game, options).value);
    values.quantum_is_exact = false;
  }
  return values;
}

}  // namespace batterybell
