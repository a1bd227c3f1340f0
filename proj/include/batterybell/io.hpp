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

#ifndef BATTERYBELL_IO_HPP_
#define BATTERYBELL_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "batterybell/analysis.hpp"
#include "batterybell/behaviors.hpp"
#include "batterybell/certifier.hpp"
#include "batterybell/games.hpp"
#include "batterybell/ledger.hpp"
#include "batterybell/transducer.hpp"

namespace batterybell {

using Json = nlohmann::json;

// Game files:
//   {"name", "alice_questions", "bob_questions",
//    "weights": [{"u","v","p"}], "predicate": [{"u","v","f"}]}
// Labels may be strings or integers. Duplicate pairs are rejected; weights
// summing within 1e-9 of 1 are renormalized, anything further is rejected.
XorGame game_from_json(const Json& json);
Json to_json(const XorGame& game);

// Behaviour files carry the same question lists plus either a full "table" of
// {"u","v","p00","p01","p10","p11"} rows or a "correlators" list of
// {"u","v","E"} rows (missing correlators default to 0).
Behavior behavior_from_json(const Json& json);
Json to_json(const Behavior& behavior);

// {"table": [{"x","y","z","p": [p(abc=000), ..., p(abc=111)]}]}, all eight
// settings present.
TripartiteBehavior tripartite_from_json(const Json& json);

Json read_json_file(const std::filesystem::path& path);

inline constexpr std::size_t kBitsPerLine = 4096;

// NDJSON: header {"game","delta","seed","rounds"}, then one {"bits": base64}
// line per 4096 work bits, packed most-significant bit first.
void write_record_ndjson(std::ostream& out, const WorkRecord& record);
WorkRecord read_record_ndjson(std::istream& in);

// Plain CSV "round,work_bit". The metadata is not stored and comes from the
// caller on read.
void write_record_csv(std::ostream& out, const WorkRecord& record);
WorkRecord read_record_csv(std::istream& in, const std::string& game_name,
                           double delta = 1.0, std::uint64_t seed = 0);

std::string base64_encode(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> base64_decode(const std::string& text);

Json to_json(const GameValues& values, const XorGame& game, double delta,
             bool absolute);
Json to_json(const CertificateReport& report);
Json to_json(const LedgerReport& report);
Json to_json(const MonogamyReport& report);

}  // namespace batterybell

#endif  // BATTERYBELL_IO_HPP_
