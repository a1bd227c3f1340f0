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

#ifndef BATTERYBELL_ANALYSIS_HPP_
#define BATTERYBELL_ANALYSIS_HPP_

#include <iosfwd>
#include <vector>

#include "batterybell/behaviors.hpp"

namespace batterybell {

// Lower bound on the weight of a stronger class D in any decomposition
// P = (1-q) P_C + q P_D, from a success probability p (or E[W]/Delta).
struct ContentBound {
  double p = 0.0;
  double omega_c = 0.0;
  double omega_d = 0.0;
  double q_lower = 0.0;
};

ContentBound content_bound(double p, double omega_c, double omega_d);

struct ChshContents {
  double q_nonlocal_lower = 0.0;      // (S - 2) / 2, clamped
  double q_post_quantum_lower = 0.0;  // (S - 2 sqrt 2) / (4 - 2 sqrt 2), clamped
};

ChshContents chsh_contents(double s);

struct MonogamyOptions {
  double delta = 1.0;
  // Flip the sign of the E11 term on either pair.
  bool flip_ab = false;
  bool flip_ac = false;
};

struct MonogamyReport {
  double s_ab = 0.0;
  double s_ac = 0.0;
  double w_ab = 0.0;
  double w_ac = 0.0;
  double sum_w = 0.0;
  double bound = 1.5;
  bool satisfied = true;
};

// Marginalizes to AB and AC, evaluates both CHSH values and the battery sum.
// A violated bound is reported through `satisfied`, not thrown.
MonogamyReport monogamy_check(const TripartiteBehavior& behavior,
                              const MonogamyOptions& options = {});

struct NoiseRow {
  double eps = 0.0;
  double s = 0.0;
  double work_over_delta = 0.0;
  bool above_quantum = false;
};

// Noisy PR interpolation (1-eps) PR + eps local_zeros on CHSH.
std::vector<NoiseRow> sweep_noise(const std::vector<double>& eps_grid);

struct ChainedRow {
  int n = 0;
  double omega_l = 0.0;
  double omega_q = 0.0;
  double gap = 0.0;           // sin^2(pi / 4N)
  double leading_term = 0.0;  // pi^2 / (16 N^2)
};

std::vector<ChainedRow> sweep_chained(const std::vector<int>& n_grid);

// CSV with a header row and 12 significant digits.
void write_csv(std::ostream& out, const std::vector<NoiseRow>& rows);
void write_csv(std::ostream& out, const std::vector<ChainedRow>& rows);

}  // namespace batterybell

#endif  // BATTERYBELL_ANALYSIS_HPP_
