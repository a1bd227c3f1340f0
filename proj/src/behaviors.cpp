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

#include "batterybell/behaviors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "batterybell/error.hpp"

namespace batterybell {

namespace {

OutcomeRow validated_row(OutcomeRow row, const std::string& where) {
  double sum = 0.0;
  bool clamped = false;
  for (double& p : row) {
    require(std::isfinite(p), "non-finite probability at " + where);
    require(p >= -kNormalizationTolerance,
            "negative probability at " + where);
    sum += p;
  }
  require(std::abs(sum - 1.0) <= kNormalizationTolerance,
          "probabilities do not sum to 1 at " + where);
  for (double& p : row) {
    if (p < 0.0) {
      p = 0.0;
      clamped = true;
    }
  }
  if (clamped) {
    double renorm = 0.0;
    for (double p : row) renorm += p;
    for (double& p : row) p /= renorm;
  }
  return row;
}

}  // namespace

Behavior::Behavior(std::vector<std::string> alice_questions,
                   std::vector<std::string> bob_questions,
                   std::vector<OutcomeRow> rows)
    : alice_(std::move(alice_questions)),
      bob_(std::move(bob_questions)),
      rows_(std::move(rows)) {
  require(!alice_.empty() && !bob_.empty(),
          "behaviour question sets must be nonempty");
  require(rows_.size() == alice_.size() * bob_.size(),
          "behaviour table has wrong size");
  for (std::size_t u = 0; u < alice_.size(); ++u) {
    for (std::size_t v = 0; v < bob_.size(); ++v) {
      auto& r = rows_[u * bob_.size() + v];
      r = validated_row(r, "(" + alice_[u] + "," + bob_[v] + ")");
    }
  }
}

double Behavior::correlator(std::size_t u, std::size_t v) const {
  const OutcomeRow& r = row(u, v);
  return r[0] - r[1] - r[2] + r[3];
}

double Behavior::alice_marginal(std::size_t u, std::size_t v, int a) const {
  return probability(u, v, a, 0) + probability(u, v, a, 1);
}

double Behavior::bob_marginal(std::size_t u, std::size_t v, int b) const {
  return probability(u, v, 0, b) + probability(u, v, 1, b);
}

bool Behavior::is_nonsignalling(double tol) const {
  for (std::size_t u = 0; u < num_alice(); ++u) {
    for (std::size_t v = 1; v < num_bob(); ++v) {
      if (std::abs(alice_marginal(u, v, 0) - alice_marginal(u, 0, 0)) > tol) {
        return false;
      }
    }
  }
  for (std::size_t v = 0; v < num_bob(); ++v) {
    for (std::size_t u = 1; u < num_alice(); ++u) {
      if (std::abs(bob_marginal(u, v, 0) - bob_marginal(0, v, 0)) > tol) {
        return false;
      }
    }
  }
  return true;
}

bool Behavior::same_questions(const Behavior& other) const {
  return alice_ == other.alice_ && bob_ == other.bob_;
}

CorrelatorTable::CorrelatorTable(std::vector<std::string> alice_questions,
                                 std::vector<std::string> bob_questions,
                                 std::vector<double> values)
    : alice_(std::move(alice_questions)),
      bob_(std::move(bob_questions)),
      values_(std::move(values)) {
  require(!alice_.empty() && !bob_.empty(),
          "correlator question sets must be nonempty");
  require(values_.size() == alice_.size() * bob_.size(),
          "correlator table has wrong size");
  for (double e : values_) {
    require(std::isfinite(e) && std::abs(e) <= 1.0 + kNormalizationTolerance,
            "correlator magnitude exceeds 1");
  }
}

Behavior from_correlators(const CorrelatorTable& correlators) {
  std::vector<OutcomeRow> rows;
  rows.reserve(correlators.num_alice() * correlators.num_bob());
  for (std::size_t u = 0; u < correlators.num_alice(); ++u) {
    for (std::size_t v = 0; v < correlators.num_bob(); ++v) {
      const double e = std::clamp(correlators.at(u, v), -1.0, 1.0);
      const double same = (1.0 + e) / 4.0;
      const double differ = (1.0 - e) / 4.0;
      rows.push_back({same, differ, differ, same});
    }
  }
  return Behavior(correlators.alice_questions(), correlators.bob_questions(),
                  std::move(rows));
}

Behavior pr_box() { return perfect_ns_box(make_chsh()); }

Behavior perfect_ns_box(const XorGame& game) {
  std::vector<OutcomeRow> rows;
  rows.reserve(game.num_alice() * game.num_bob());
  for (std::size_t u = 0; u < game.num_alice(); ++u) {
    for (std::size_t v = 0; v < game.num_bob(); ++v) {
      switch (game.predicate(u, v)) {
        case 0:
          rows.push_back({0.5, 0.0, 0.0, 0.5});
          break;
        case 1:
          rows.push_back({0.0, 0.5, 0.5, 0.0});
          break;
        default:
          rows.push_back({0.25, 0.25, 0.25, 0.25});
          break;
      }
    }
  }
  return Behavior(game.alice_questions(), game.bob_questions(), std::move(rows));
}

Behavior uniform_behavior(std::size_t num_alice, std::size_t num_bob) {
  return Behavior(index_labels(num_alice), index_labels(num_bob),
                  std::vector<OutcomeRow>(num_alice * num_bob,
                                          {0.25, 0.25, 0.25, 0.25}));
}

Behavior deterministic_local(const std::vector<int>& alice_bits,
                             const std::vector<int>& bob_bits) {
  const auto is_bit = [](int b) { return b == 0 || b == 1; };
  require(std::all_of(alice_bits.begin(), alice_bits.end(), is_bit) &&
              std::all_of(bob_bits.begin(), bob_bits.end(), is_bit),
          "deterministic outputs must be bits");
  std::vector<OutcomeRow> rows;
  rows.reserve(alice_bits.size() * bob_bits.size());
  for (int a : alice_bits) {
    for (int b : bob_bits) {
      OutcomeRow r{};
      r[outcome_index(a, b)] = 1.0;
      rows.push_back(r);
    }
  }
  return Behavior(index_labels(alice_bits.size()), index_labels(bob_bits.size()),
                  std::move(rows));
}

Behavior deterministic_local(const std::vector<std::string>& alice_questions,
                             const std::vector<std::string>& bob_questions,
                             const std::map<std::string, int>& alice_bits,
                             const std::map<std::string, int>& bob_bits) {
  const auto lookup = [](const std::vector<std::string>& labels,
                         const std::map<std::string, int>& bits) {
    std::vector<int> out;
    out.reserve(labels.size());
    for (const auto& label : labels) {
      const auto it = bits.find(label);
      require(it != bits.end(), "no deterministic output for question " + label);
      out.push_back(it->second);
    }
    return out;
  };
  const Behavior indexed = deterministic_local(lookup(alice_questions, alice_bits),
                                               lookup(bob_questions, bob_bits));
  std::vector<OutcomeRow> rows;
  for (std::size_t u = 0; u < indexed.num_alice(); ++u) {
    for (std::size_t v = 0; v < indexed.num_bob(); ++v) rows.push_back(indexed.row(u, v));
  }
  return Behavior(alice_questions, bob_questions, std::move(rows));
}

Behavior local_zeros_chsh() { return deterministic_local({0, 0}, {0, 0}); }

Behavior tsirelson_behavior() {
  const double e = 1.0 / std::numbers::sqrt2;
  return from_correlators(
      CorrelatorTable(index_labels(2), index_labels(2), {e, e, e, -e}));
}

Behavior noisy_pr(double eps) {
  require(eps >= 0.0 && eps <= 1.0, "noise parameter must lie in [0, 1]");
  return mix({pr_box(), local_zeros_chsh()}, {1.0 - eps, eps});
}

Behavior mix(const std::vector<Behavior>& components,
             const std::vector<double>& weights) {
  require(!components.empty(), "mixture needs at least one component");
  require(components.size() == weights.size(),
          "mixture needs one weight per component");
  double total = 0.0;
  for (double w : weights) {
    require(std::isfinite(w) && w >= 0.0, "mixture weights must be nonnegative");
    total += w;
  }
  require(std::abs(total - 1.0) <= kNormalizationTolerance,
          "mixture weights must sum to 1");
  const Behavior& first = components.front();
  for (const auto& c : components) {
    require(c.same_questions(first), "mixture components have different question sets");
  }

  std::vector<OutcomeRow> rows(first.num_alice() * first.num_bob(), OutcomeRow{});
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (std::size_t u = 0; u < first.num_alice(); ++u) {
      for (std::size_t v = 0; v < first.num_bob(); ++v) {
        auto& target = rows[u * first.num_bob() + v];
        const auto& source = components[i].row(u, v);
        for (std::size_t k = 0; k < 4; ++k) target[k] += weights[i] * source[k];
      }
    }
  }
  return Behavior(first.alice_questions(), first.bob_questions(), std::move(rows));
}

double success_probability(const XorGame& game, const Behavior& behavior) {
  require(behavior.num_alice() == game.num_alice() &&
              behavior.num_bob() == game.num_bob(),
          "behaviour does not cover the game's question sets");
  double total = 0.0;
  for (const auto& pair : game.support()) {
    const OutcomeRow& r = behavior.row(pair.u, pair.v);
    const double win = pair.predicate == 0 ? r[0] + r[3] : r[1] + r[2];
    total += pair.weight * win;
  }
  return total;
}

double chsh_value(const Behavior& behavior) {
  require(behavior.num_alice() == 2 && behavior.num_bob() == 2,
          "CHSH value needs binary question sets");
  return behavior.correlator(0, 0) + behavior.correlator(0, 1) +
         behavior.correlator(1, 0) - behavior.correlator(1, 1);
}

Behavior chained_quantum_behavior(int n) {
  const XorGame game = make_chained(n);
  const double magnitude = std::cos(std::numbers::pi / (2.0 * n));
  const auto size = static_cast<std::size_t>(n);
  std::vector<double> correlators(size * size, 0.0);
  for (const auto& pair : game.support()) {
    correlators[pair.u * size + pair.v] =
        pair.predicate == 0 ? magnitude : -magnitude;
  }
  return from_correlators(CorrelatorTable(game.alice_questions(),
                                          game.bob_questions(),
                                          std::move(correlators)));
}

TripartiteBehavior::TripartiteBehavior(const Table& table) : table_(table) {
  for (std::size_t s = 0; s < 8; ++s) {
    double sum = 0.0;
    for (double& p : table_[s]) {
      require(std::isfinite(p) && p >= -kNormalizationTolerance,
              "negative tripartite probability");
      sum += p;
      p = std::max(p, 0.0);
    }
    require(std::abs(sum - 1.0) <= kNormalizationTolerance,
            "tripartite probabilities do not sum to 1");
  }
}

namespace {

// Pair marginal of (first, second) parties with the third traced out, at a
// fixed third-party setting. Parties are numbered 0 (A), 1 (B), 2 (C).
std::array<OutcomeRow, 4> pair_marginal(const TripartiteBehavior& t, int first,
                                        int second, int traced_setting) {
  std::array<OutcomeRow, 4> out{};
  for (int s0 = 0; s0 < 2; ++s0) {
    for (int s1 = 0; s1 < 2; ++s1) {
      std::array<int, 3> settings{};
      settings[first] = s0;
      settings[second] = s1;
      settings[3 - first - second] = traced_setting;
      OutcomeRow& row = out[2 * s0 + s1];
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          for (int c = 0; c < 2; ++c) {
            const std::array<int, 3> outs{a, b, c};
            row[outcome_index(outs[first], outs[second])] +=
                t.probability(settings[0], settings[1], settings[2], a, b, c);
          }
        }
      }
    }
  }
  return out;
}

double marginal_gap(const TripartiteBehavior& t, int first, int second) {
  const auto m0 = pair_marginal(t, first, second, 0);
  const auto m1 = pair_marginal(t, first, second, 1);
  double gap = 0.0;
  for (std::size_t s = 0; s < 4; ++s) {
    for (std::size_t k = 0; k < 4; ++k) gap = std::max(gap, std::abs(m0[s][k] - m1[s][k]));
  }
  return gap;
}

}  // namespace

double TripartiteBehavior::signalling_deviation() const {
  return std::max({marginal_gap(*this, 0, 1), marginal_gap(*this, 0, 2),
                   marginal_gap(*this, 1, 2)});
}

Behavior marginalize(const TripartiteBehavior& behavior, PartyPair pair) {
  const int second = pair == PartyPair::kAB ? 1 : 2;
  if (marginal_gap(behavior, 0, second) > kNonsignallingTolerance) {
    fail(ErrorKind::kInconsistentMarginal,
         pair == PartyPair::kAB ? "AB marginal depends on Charlie's setting"
                                : "AC marginal depends on Bob's setting");
  }
  const auto rows = pair_marginal(behavior, 0, second, 0);
  return Behavior(index_labels(2), index_labels(2),
                  std::vector<OutcomeRow>(rows.begin(), rows.end()));
}

TripartiteBehavior tripartite_product(
    const Behavior& ab, const std::array<std::array<double, 2>, 2>& c_given_z) {
  require(ab.num_alice() == 2 && ab.num_bob() == 2,
          "tripartite product needs a 2x2 AB behaviour");
  TripartiteBehavior::Table table{};
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int z = 0; z < 2; ++z) {
        for (int a = 0; a < 2; ++a) {
          for (int b = 0; b < 2; ++b) {
            for (int c = 0; c < 2; ++c) {
              table[4 * x + 2 * y + z][4 * a + 2 * b + c] =
                  ab.probability(x, y, a, b) * c_given_z[z][c];
            }
          }
        }
      }
    }
  }
  return TripartiteBehavior(table);
}

TripartiteBehavior tripartite_uniform() {
  TripartiteBehavior::Table table{};
  for (auto& row : table) row.fill(0.125);
  return TripartiteBehavior(table);
}

}  // namespace batterybell
