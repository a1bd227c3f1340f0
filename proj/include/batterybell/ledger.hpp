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

#ifndef BATTERYBELL_LEDGER_HPP_
#define BATTERYBELL_LEDGER_HPP_

#include <optional>
#include <string>
#include <vector>

namespace batterybell {

// -p log2 p - (1-p) log2 (1-p), with 0 log 0 = 0.
double binary_entropy(double p);

enum class MemoryVariant { kReversible, kMeasuredMemory, kFullTranscript };

const char* to_string(MemoryVariant variant);
MemoryVariant parse_memory_variant(const std::string& text);

// Cyclic energy accounting for one round at success rate p. Energies are
// absolute; divide by delta or kt_ln2 for the unit-scaled views.
struct LedgerReport {
  double p = 0.0;
  double delta = 1.0;
  double kt_ln2 = 1.0;
  MemoryVariant variant = MemoryVariant::kReversible;
  double battery_gain = 0.0;   // Delta p
  double fuel_cost = 0.0;      // minimum restoration cost, Delta p
  double reset_cost = 0.0;     // Landauer bound in absolute units
  double reset_entropy_bits = 0.0;
  double net_work_upper = 0.0;
  std::vector<std::string> notes;
};

// transcript_entropy_bits is H(T) in bits; required (and must be at least
// h2(p)) for the full-transcript variant, ignored otherwise.
LedgerReport cycle_report(double p, double delta, double kt_ln2,
                          MemoryVariant variant,
                          std::optional<double> transcript_entropy_bits = std::nullopt);

}  // namespace batterybell

#endif  // BATTERYBELL_LEDGER_HPP_
