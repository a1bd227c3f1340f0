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

#include "batterybell/ledger.hpp"

#include <cmath>

#include "batterybell/error.hpp"

namespace batterybell {

double binary_entropy(double p) {
  require(p >= 0.0 && p <= 1.0, "probability must lie in [0, 1]");
  const auto term = [](double q) { return q > 0.0 ? -q * std::log2(q) : 0.0; };
  return term(p) + term(1.0 - p);
}

const char* to_string(MemoryVariant variant) {
  switch (variant) {
    case MemoryVariant::kReversible:
      return "reversible";
    case MemoryVariant::kMeasuredMemory:
      return "measured-memory";
    case MemoryVariant::kFullTranscript:
      return "full-transcript";
  }
  return "unknown";
}

MemoryVariant parse_memory_variant(const std::string& text) {
  if (text == "reversible") return MemoryVariant::kReversible;
  if (text == "measured-memory") return MemoryVariant::kMeasuredMemory;
  if (text == "full-transcript") return MemoryVariant::kFullTranscript;
  fail(ErrorKind::kInvalidParameter, "unknown memory variant '" + text + "'");
}

LedgerReport cycle_report(double p, double delta, double kt_ln2,
                          MemoryVariant variant,
                          std::optional<double> transcript_entropy_bits) {
  require(p >= 0.0 && p <= 1.0, "success rate must lie in [0, 1]");
  require(delta > 0.0, "energy quantum must be positive");
  require(kt_ln2 >= 0.0, "kT ln 2 must be nonnegative");

  LedgerReport report;
  report.p = p;
  report.delta = delta;
  report.kt_ln2 = kt_ln2;
  report.variant = variant;
  report.battery_gain = delta * p;
  report.fuel_cost = delta * p;
  report.notes.push_back("fuel_cost is the minimum success-weighted restoration cost (lower bound)");

  switch (variant) {
    case MemoryVariant::kReversible:
      report.reset_entropy_bits = 0.0;
      report.notes.push_back("memory uncomputed coherently; no erasure");
      break;
    case MemoryVariant::kMeasuredMemory:
      report.reset_entropy_bits = binary_entropy(p);
      report.notes.push_back("blind Landauer reset of the success bit");
      break;
    case MemoryVariant::kFullTranscript: {
      if (!transcript_entropy_bits) {
        fail(ErrorKind::kMissingParameter,
             "full-transcript ledger needs the transcript entropy H(T)");
      }
      const double h_z = binary_entropy(p);
      require(std::isfinite(*transcript_entropy_bits) &&
                  *transcript_entropy_bits >= h_z - 1e-12,
              "transcript entropy cannot be below h2(p)");
      report.reset_entropy_bits = *transcript_entropy_bits;
      report.notes.push_back("reset_cost is a lower bound: kT ln2 H(T) >= kT ln2 h2(p)");
      break;
    }
  }
  report.notes.push_back("side-information-assisted reset is not credited");

  report.reset_cost = kt_ln2 * report.reset_entropy_bits;
  report.net_work_upper = report.battery_gain - report.fuel_cost - report.reset_cost;
  return report;
}

}  // namespace batterybell
