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

#include "doctest.h"

#include "batterybell/error.hpp"
#include "batterybell/ledger.hpp"

using namespace batterybell;

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == 1.0);
  for (int i = 0; i <= 100; ++i) {
    const double p = i / 100.0;
    CHECK(std::abs(binary_entropy(p) - binary_entropy(1.0 - p)) <= 1e-15);
    CHECK(binary_entropy(p) >= 0.0);
    CHECK(binary_entropy(p) <= 1.0);
  }
  CHECK_THROWS_AS(binary_entropy(-0.1), Error);
  CHECK_THROWS_AS(binary_entropy(1.1), Error);
}

TEST_CASE("cycle report examples") {
  const LedgerReport balanced = cycle_report(1.0, 1.0, 1.0, MemoryVariant::kMeasuredMemory);
  CHECK(balanced.net_work_upper == 0.0);

  const LedgerReport measured = cycle_report(0.853553, 1.0, 1.0, MemoryVariant::kMeasuredMemory);
  CHECK(measured.net_work_upper == doctest::Approx(-0.600877030012310584977336486736).epsilon(1e-14));

  for (double p : {0.0, 0.3, 0.75, 1.0}) {
    const LedgerReport r = cycle_report(p, 2.0, 0.7, MemoryVariant::kReversible);
    CHECK(r.reset_cost == 0.0);
    CHECK(r.net_work_upper == 0.0);
    CHECK(r.battery_gain == 2.0 * p);
  }
}

TEST_CASE("full-transcript variant") {
  try {
    cycle_report(0.8, 1.0, 1.0, MemoryVariant::kFullTranscript);
    FAIL("expected missing-parameter");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kMissingParameter);
  }
  CHECK_THROWS_AS(cycle_report(0.5, 1.0, 1.0, MemoryVariant::kFullTranscript, 0.5), Error);
  const LedgerReport r = cycle_report(0.5, 1.0, 2.0, MemoryVariant::kFullTranscript, 3.0);
  CHECK(r.reset_cost == 6.0);
  CHECK(r.net_work_upper == -6.0);
}

TEST_CASE("ledger invariants on a grid") {
  for (int i = 0; i <= 100; ++i) {
    const double p = i / 100.0;
    const double h = binary_entropy(p);
    const LedgerReport measured = cycle_report(p, 1.3, 0.9, MemoryVariant::kMeasuredMemory);
    for (const LedgerReport& r :
         {cycle_report(p, 1.3, 0.9, MemoryVariant::kReversible), measured,
          cycle_report(p, 1.3, 0.9, MemoryVariant::kFullTranscript, h),
          cycle_report(p, 1.3, 0.9, MemoryVariant::kFullTranscript, h + 2.5)}) {
      CHECK(r.net_work_upper <= 0.0);
      CHECK(r.battery_gain - r.fuel_cost <= 1e-12);
      CHECK(r.fuel_cost == r.battery_gain);
      if (r.variant == MemoryVariant::kFullTranscript) {
        CHECK(r.reset_cost >= measured.reset_cost - 1e-12);
      }
    }
  }
}

TEST_CASE("ledger parameter validation") {
  CHECK_THROWS_AS(cycle_report(1.2, 1.0, 1.0, MemoryVariant::kReversible), Error);
  CHECK_THROWS_AS(cycle_report(0.5, 0.0, 1.0, MemoryVariant::kReversible), Error);
  CHECK_THROWS_AS(cycle_report(0.5, 1.0, -1.0, MemoryVariant::kReversible), Error);
  CHECK(parse_memory_variant("measured-memory") == MemoryVariant::kMeasuredMemory);
  CHECK_THROWS_AS(parse_memory_variant("side-information"), Error);
}
