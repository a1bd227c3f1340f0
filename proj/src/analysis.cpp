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

#include "batterybell/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>

#include "batterybell/error.hpp"
#include "batterybell/games.hpp"
#include "batterybell/transducer.hpp"

namespace batterybell {

namespace {

constexpr double kMonogamySlack = 1e-10;

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

double oriented_chsh(const Behavior& b, bool flip) {
  const double e11 = b.correlator(1, 1);
  return b.correlator(0, 0) + b.correlator(0, 1) + b.correlator(1, 0) +
         (flip ? e11 : -e11);
}

}  // namespace

ContentBound content_bound(double p, double omega_c, double omega_d) {
  require(in_unit_interval(p) && in_unit_interval(omega_c) && in_unit_interval(omega_d),
          "content bound inputs must lie in [0, 1]");
  require(omega_d > omega_c, "content bound needs omega_D > omega_C");
  return {p, omega_c, omega_d,
          std::clamp((p - omega_c) / (omega_d - omega_c), 0.0, 1.0)};
}

ChshContents chsh_contents(double s) {
  require(s >= -4.0 && s <= 4.0, "CHSH value must lie in [-4, 4]");
  constexpr double kTsirelson = 2.0 * std::numbers::sqrt2;
  return {std::clamp((s - 2.0) / 2.0, 0.0, 1.0),
          std::clamp((s - kTsirelson) / (4.0 - kTsirelson), 0.0, 1.0)};
}

MonogamyReport monogamy_check(const TripartiteBehavior& behavior,
                              const MonogamyOptions& options) {
  require(options.delta > 0.0, "energy quantum must be positive");
  if (!behavior.is_nonsignalling()) {
    fail(ErrorKind::kInconsistentMarginal, "tripartite behaviour is signalling");
  }
  const Behavior ab = marginalize(behavior, PartyPair::kAB);
  const Behavior ac = marginalize(behavior, PartyPair::kAC);

  MonogamyReport report;
  report.s_ab = oriented_chsh(ab, options.flip_ab);
  report.s_ac = oriented_chsh(ac, options.flip_ac);
  report.w_ab = options.delta * (0.5 + report.s_ab / 8.0);
  report.w_ac = options.delta * (0.5 + report.s_ac / 8.0);
  report.sum_w = report.w_ab + report.w_ac;
  report.bound = 1.5 * options.delta;
  report.satisfied = report.sum_w <= report.bound + kMonogamySlack * options.delta;
  return report;
}

std::vector<NoiseRow> sweep_noise(const std::vector<double>& eps_grid) {
  const XorGame chsh = make_chsh();
  const double ceiling = *quantum_value_closed(chsh);
  std::vector<NoiseRow> rows;
  rows.reserve(eps_grid.size());
  for (double eps : eps_grid) {
    require(in_unit_interval(eps), "noise grid values must lie in [0, 1]");
    const Behavior p = noisy_pr(eps);
    NoiseRow row;
    row.eps = eps;
    row.s = chsh_value(p);
    row.work_over_delta = success_probability(chsh, p);
    row.above_quantum = row.work_over_delta > ceiling;
    rows.push_back(row);
  }
  return rows;
}

std::vector<ChainedRow> sweep_chained(const std::vector<int>& n_grid) {
  std::vector<ChainedRow> rows;
  rows.reserve(n_grid.size());
  for (int n : n_grid) {
    require(n >= 2, "chained sweep needs N >= 2");
    const XorGame game = make_chained(n);
    ChainedRow row;
    row.n = n;
    row.omega_l = local_value(game);
    row.omega_q = *quantum_value_closed(game);
    const double s = std::sin(std::numbers::pi / (4.0 * n));
    row.gap = s * s;
    row.leading_term = std::numbers::pi * std::numbers::pi / (16.0 * n * n);
    rows.push_back(row);
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<NoiseRow>& rows) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(12);
  out << "eps,S,work_over_delta,above_quantum\n";
  for (const auto& r : rows) {
    out << r.eps << ',' << r.s << ',' << r.work_over_delta << ','
        << (r.above_quantum ? "true" : "false") << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

void write_csv(std::ostream& out, const std::vector<ChainedRow>& rows) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(12);
  out << "N,omega_L,omega_Q,gap,leading_term\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.omega_l << ',' << r.omega_q << ',' << r.gap << ','
        << r.leading_term << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace batterybell
