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

#ifndef BATTERYBELL_GAMES_HPP_
#define BATTERYBELL_GAMES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace batterybell {

// Built-in families carry a tag so closed-form quantum values can be looked
// up. Games loaded from files are always kCustom.
enum class GameFamily { kCustom, kChsh, kChained };

// A finite two-player XOR game: question sets, a question distribution and a
// binary predicate. Players win when a XOR b equals predicate(u, v).
//
// Questions are addressed by dense indices; the label vectors only carry the
// external names used in serialized files. Weights and predicate values are
// stored row-major over (alice question, bob question).
class XorGame {
 public:
  static constexpr int kUndefined = -1;

  // Validates every invariant and throws Error(kInvalidParameter) otherwise.
  // `predicate` entries may be kUndefined only where the weight is zero.
  XorGame(std::string name, std::vector<std::string> alice_questions,
          std::vector<std::string> bob_questions, std::vector<double> weights,
          std::vector<int> predicate, GameFamily family = GameFamily::kCustom,
          int family_parameter = 0);

  const std::string& name() const { return name_; }
  GameFamily family() const { return family_; }
  int family_parameter() const { return family_parameter_; }

  std::size_t num_alice() const { return alice_.size(); }
  std::size_t num_bob() const { return bob_.size(); }
  const std::vector<std::string>& alice_questions() const { return alice_; }
  const std::vector<std::string>& bob_questions() const { return bob_; }

  double weight(std::size_t u, std::size_t v) const {
    return weights_[u * bob_.size() + v];
  }
  // kUndefined off-support when the game was built without a value there.
  int predicate(std::size_t u, std::size_t v) const {
    return predicate_[u * bob_.size() + v];
  }
  bool in_support(std::size_t u, std::size_t v) const {
    return weight(u, v) > 0.0;
  }

  struct Pair {
    std::size_t u;
    std::size_t v;
    double weight;
    int predicate;
  };
  // Positive-weight pairs in row-major order.
  const std::vector<Pair>& support() const { return support_; }

 private:
  std::string name_;
  std::vector<std::string> alice_;
  std::vector<std::string> bob_;
  std::vector<double> weights_;
  std::vector<int> predicate_;
  GameFamily family_;
  int family_parameter_;
  std::vector<Pair> support_;
};

std::vector<std::string> index_labels(std::size_t count);

XorGame make_chsh();

// Chained Bell game with N settings per party. Throws for N < 2.
XorGame make_chained(int n);

struct LocalStrategy {
  double value = 0.0;
  std::vector<int> alice_bits;
  std::vector<int> bob_bits;
};

inline constexpr std::size_t kDefaultEnumerationCap = 26;

// Exhaustive maximum over all 2^(|U|+|V|) deterministic assignments,
// lexicographic over Alice bits then Bob bits (question 0 most significant).
// The first maximum wins ties. Throws Error(kSizeLimit) above the cap.
LocalStrategy best_local_strategy(const XorGame& game,
                                  std::size_t cap = kDefaultEnumerationCap);
double local_value(const XorGame& game,
                   std::size_t cap = kDefaultEnumerationCap);

// Always 1: the box with P(a,b|u,v) = 1/2 iff a XOR b = f(u,v) wins every XOR
// game and is nonsignalling (see perfect_ns_box).
double ns_value(const XorGame& game);

// Closed forms for tagged families only; nullopt for custom games.
std::optional<double> quantum_value_closed(const XorGame& game);

struct QuantumSearchOptions {
  std::size_t restarts = 32;
  double tol = 1e-12;
  std::size_t max_sweeps = 10000;
  std::uint64_t seed = 0x5eed;
  std::size_t enumeration_cap = kDefaultEnumerationCap;
};

struct QuantumLowerBound {
  double value = 0.0;  // 1/2 + bias/2
  double bias = 0.0;
  std::size_t dimension = 0;
  bool converged = true;  // false when some restart hit max_sweeps
};

// Seesaw ascent on the unit-vector form of the XOR bias,
//   sum_{u,v} pi(u,v) (-1)^f(u,v) <a_u, b_v>,
// in dimension min(|U|,|V|). Half the restarts start from deterministic
// strategies (the optimal one first), so the result is >= the local value.
QuantumLowerBound quantum_value_lower(const XorGame& game,
                                      const QuantumSearchOptions& options = {});

struct GameValues {
  double local = 0.0;
  double quantum = 0.0;
  bool quantum_is_exact = false;
  double nonsignalling = 1.0;
  bool delta_units = true;
};

GameValues compute_game_values(const XorGame& game,
                               const QuantumSearchOptions& options = {});

}  // namespace batterybell

#endif  // BATTERYBELL_GAMES_HPP_
