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

#ifndef BATTERYBELL_BEHAVIORS_HPP_
#define BATTERYBELL_BEHAVIORS_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "batterybell/games.hpp"

namespace batterybell {

// P(a,b|u,v) for one setting, indexed by 2*a + b.
using OutcomeRow = std::array<double, 4>;

inline constexpr std::size_t outcome_index(int a, int b) {
  return static_cast<std::size_t>(2 * a + b);
}

inline constexpr double kNormalizationTolerance = 1e-12;
inline constexpr double kNonsignallingTolerance = 1e-10;

// A bipartite binary-output behaviour P(a,b|u,v). Immutable once built.
//
// Rows may carry entries down to -1e-12 (float noise from convex mixing);
// those are clamped to zero and the row renormalized. Anything more negative,
// or a row sum off by more than 1e-12, is rejected.
class Behavior {
 public:
  Behavior(std::vector<std::string> alice_questions,
           std::vector<std::string> bob_questions, std::vector<OutcomeRow> rows);

  std::size_t num_alice() const { return alice_.size(); }
  std::size_t num_bob() const { return bob_.size(); }
  const std::vector<std::string>& alice_questions() const { return alice_; }
  const std::vector<std::string>& bob_questions() const { return bob_; }

  const OutcomeRow& row(std::size_t u, std::size_t v) const {
    return rows_[u * bob_.size() + v];
  }
  double probability(std::size_t u, std::size_t v, int a, int b) const {
    return row(u, v)[outcome_index(a, b)];
  }

  // E_uv = sum_{a,b} (-1)^(a XOR b) P(a,b|u,v).
  double correlator(std::size_t u, std::size_t v) const;
  double alice_marginal(std::size_t u, std::size_t v, int a) const;
  double bob_marginal(std::size_t u, std::size_t v, int b) const;

  // Alice's marginal independent of v and Bob's independent of u.
  bool is_nonsignalling(double tol = kNonsignallingTolerance) const;

  bool same_questions(const Behavior& other) const;

 private:
  std::vector<std::string> alice_;
  std::vector<std::string> bob_;
  std::vector<OutcomeRow> rows_;
};

class CorrelatorTable {
 public:
  // Throws when any |E| exceeds 1 + 1e-12.
  CorrelatorTable(std::vector<std::string> alice_questions,
                  std::vector<std::string> bob_questions,
                  std::vector<double> values);

  std::size_t num_alice() const { return alice_.size(); }
  std::size_t num_bob() const { return bob_.size(); }
  const std::vector<std::string>& alice_questions() const { return alice_; }
  const std::vector<std::string>& bob_questions() const { return bob_; }
  double at(std::size_t u, std::size_t v) const {
    return values_[u * bob_.size() + v];
  }

 private:
  std::vector<std::string> alice_;
  std::vector<std::string> bob_;
  std::vector<double> values_;
};

// P(a,b|u,v) = (1 + (-1)^(a XOR b) E_uv) / 4: unbiased marginals.
Behavior from_correlators(const CorrelatorTable& correlators);

Behavior pr_box();
Behavior perfect_ns_box(const XorGame& game);
Behavior uniform_behavior(std::size_t num_alice, std::size_t num_bob);

Behavior deterministic_local(const std::vector<int>& alice_bits,
                             const std::vector<int>& bob_bits);
Behavior deterministic_local(const std::vector<std::string>& alice_questions,
                             const std::vector<std::string>& bob_questions,
                             const std::map<std::string, int>& alice_bits,
                             const std::map<std::string, int>& bob_bits);

// All-zeros deterministic CHSH box (E_uv = 1, S = 2); the local end of the
// noisy PR interpolation.
Behavior local_zeros_chsh();
// Correlators (1,1,1,-1)/sqrt(2): saturates S = 2 sqrt(2).
Behavior tsirelson_behavior();
// (1 - eps) PR + eps local_zeros_chsh.
Behavior noisy_pr(double eps);

Behavior mix(const std::vector<Behavior>& components,
             const std::vector<double>& weights);

double success_probability(const XorGame& game, const Behavior& behavior);

// S = E00 + E01 + E10 - E11 on a 2x2 behaviour.
double chsh_value(const Behavior& behavior);

// Correlators +cos(pi/2N) on equality edges, -cos(pi/2N) on the wrap-around
// edge (0, N-1), and 0 off the game support.
Behavior chained_quantum_behavior(int n);

// Binary tripartite behaviour P(a,b,c|x,y,z). Settings are indexed
// 4x + 2y + z and outcomes 4a + 2b + c.
class TripartiteBehavior {
 public:
  using Table = std::array<std::array<double, 8>, 8>;

  explicit TripartiteBehavior(const Table& table);

  double probability(int x, int y, int z, int a, int b, int c) const {
    return table_[4 * x + 2 * y + z][4 * a + 2 * b + c];
  }
  const Table& table() const { return table_; }

  // Largest deviation between the pair marginals under the two settings of
  // the traced party, maximized over the three pairs.
  double signalling_deviation() const;
  bool is_nonsignalling(double tol = kNonsignallingTolerance) const {
    return signalling_deviation() <= tol;
  }

 private:
  Table table_;
};

enum class PartyPair { kAB, kAC };

// Sums out the third party at its setting 0 after checking the result does not
// depend on that setting. Throws Error(kInconsistentMarginal) otherwise.
Behavior marginalize(const TripartiteBehavior& behavior, PartyPair pair);

// P(a,b,c|x,y,z) = P_AB(a,b|x,y) * P_C(c|z); c_given_z[z][c].
TripartiteBehavior tripartite_product(
    const Behavior& ab, const std::array<std::array<double, 2>, 2>& c_given_z);
TripartiteBehavior tripartite_uniform();

}  // namespace batterybell

#endif  // BATTERYBELL_BEHAVIORS_HPP_
