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

#include "batterybell/io.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "batterybell/error.hpp"

namespace batterybell {

namespace {

constexpr double kFileWeightTolerance = 1e-9;

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorKind::kParse, what); }

std::string label_of(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  parse_fail("question labels must be strings or integers, got " + value.dump());
}

std::vector<std::string> labels_of(const Json& json, const char* key) {
  if (!json.contains(key) || !json.at(key).is_array()) {
    parse_fail(std::string("missing array '") + key + "'");
  }
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (const auto& item : json.at(key)) {
    std::string label = label_of(item);
    if (!seen.insert(label).second) parse_fail("duplicate question label " + label);
    labels.push_back(std::move(label));
  }
  return labels;
}

std::size_t index_of(const std::vector<std::string>& labels, const Json& value) {
  const std::string label = label_of(value);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  parse_fail("unknown question label " + label);
}

double number_at(const Json& row, const char* key) {
  if (!row.contains(key) || !row.at(key).is_number()) {
    parse_fail(std::string("row is missing numeric field '") + key + "': " + row.dump());
  }
  return row.at(key).get<double>();
}

const Json& array_at(const Json& json, const char* key) {
  if (!json.contains(key) || !json.at(key).is_array()) {
    parse_fail(std::string("missing array '") + key + "'");
  }
  return json.at(key);
}

// Integer labels stay integers so files written here match hand-written ones.
Json label_json(const std::string& label) {
  if (!label.empty() && label.find_first_not_of("0123456789") == std::string::npos &&
      label.size() < 10) {
    return std::stoi(label);
  }
  return label;
}

Json labels_json(const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const auto& l : labels) out.push_back(label_json(l));
  return out;
}

template <class Fn>
auto translate_errors(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    parse_fail(e.what());
  }
}

}  // namespace

XorGame game_from_json(const Json& json) {
  return translate_errors([&] {
    if (!json.is_object()) parse_fail("game file must hold a JSON object");
    const std::string name = json.value("name", std::string("custom"));
    auto alice = labels_of(json, "alice_questions");
    auto bob = labels_of(json, "bob_questions");
    if (alice.empty() || bob.empty()) parse_fail("question sets must be nonempty");
    const std::size_t nb = bob.size();

    std::vector<double> weights(alice.size() * nb, 0.0);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    double total = 0.0;
    for (const auto& row : array_at(json, "weights")) {
      const std::size_t u = index_of(alice, row.at("u"));
      const std::size_t v = index_of(bob, row.at("v"));
      if (!seen.insert({u, v}).second) {
        parse_fail("duplicate weight for pair (" + alice[u] + "," + bob[v] + ")");
      }
      const double p = number_at(row, "p");
      if (!(p >= 0.0)) parse_fail("negative question weight");
      weights[u * nb + v] = p;
      total += p;
    }
    if (std::abs(total - 1.0) > kFileWeightTolerance) {
      parse_fail("question weights sum to " + std::to_string(total));
    }
    // Sums already within the game's own tolerance are kept verbatim so that
    // written files read back bit for bit.
    if (std::abs(total - 1.0) > 1e-12) {
      for (double& w : weights) w /= total;
    }

    std::vector<int> predicate(alice.size() * nb, XorGame::kUndefined);
    seen.clear();
    for (const auto& row : array_at(json, "predicate")) {
      const std::size_t u = index_of(alice, row.at("u"));
      const std::size_t v = index_of(bob, row.at("v"));
      if (!seen.insert({u, v}).second) {
        parse_fail("duplicate predicate for pair (" + alice[u] + "," + bob[v] + ")");
      }
      const Json& f = row.at("f");
      if (!f.is_number_integer() || (f.get<int>() != 0 && f.get<int>() != 1)) {
        parse_fail("predicate values must be 0 or 1");
      }
      predicate[u * nb + v] = f.get<int>();
    }
    try {
      return XorGame(name, std::move(alice), std::move(bob), std::move(weights),
                     std::move(predicate));
    } catch (const Error& e) {
      parse_fail(e.what());
    }
  });
}

Json to_json(const XorGame& game) {
  Json weights = Json::array();
  Json predicate = Json::array();
  const auto& alice = game.alice_questions();
  const auto& bob = game.bob_questions();
  for (std::size_t u = 0; u < game.num_alice(); ++u) {
    for (std::size_t v = 0; v < game.num_bob(); ++v) {
      if (game.weight(u, v) > 0.0) {
        weights.push_back({{"u", label_json(alice[u])}, {"v", label_json(bob[v])},
                           {"p", game.weight(u, v)}});
      }
      if (game.predicate(u, v) != XorGame::kUndefined) {
        predicate.push_back({{"u", label_json(alice[u])}, {"v", label_json(bob[v])},
                             {"f", game.predicate(u, v)}});
      }
    }
  }
  return {{"name", game.name()},
          {"alice_questions", labels_json(alice)},
          {"bob_questions", labels_json(bob)},
          {"weights", weights},
          {"predicate", predicate}};
}

Behavior behavior_from_json(const Json& json) {
  return translate_errors([&] {
    if (!json.is_object()) parse_fail("behaviour file must hold a JSON object");
    auto alice = labels_of(json, "alice_questions");
    auto bob = labels_of(json, "bob_questions");
    const std::size_t nb = bob.size();
    std::set<std::pair<std::size_t, std::size_t>> seen;

    try {
      if (json.contains("table")) {
        std::vector<OutcomeRow> rows(alice.size() * nb);
        for (const auto& row : array_at(json, "table")) {
          const std::size_t u = index_of(alice, row.at("u"));
          const std::size_t v = index_of(bob, row.at("v"));
          if (!seen.insert({u, v}).second) parse_fail("duplicate behaviour row");
          rows[u * nb + v] = {number_at(row, "p00"), number_at(row, "p01"),
                              number_at(row, "p10"), number_at(row, "p11")};
        }
        if (seen.size() != rows.size()) parse_fail("behaviour table is incomplete");
        return Behavior(std::move(alice), std::move(bob), std::move(rows));
      }
      if (json.contains("correlators")) {
        std::vector<double> values(alice.size() * nb, 0.0);
        for (const auto& row : array_at(json, "correlators")) {
          const std::size_t u = index_of(alice, row.at("u"));
          const std::size_t v = index_of(bob, row.at("v"));
          if (!seen.insert({u, v}).second) parse_fail("duplicate correlator row");
          values[u * nb + v] = number_at(row, "E");
        }
        return from_correlators(
            CorrelatorTable(std::move(alice), std::move(bob), std::move(values)));
      }
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kParse) throw;
      parse_fail(e.what());
    }
    parse_fail("behaviour file needs a 'table' or 'correlators' array");
  });
}

Json to_json(const Behavior& behavior) {
  Json table = Json::array();
  const auto& alice = behavior.alice_questions();
  const auto& bob = behavior.bob_questions();
  for (std::size_t u = 0; u < behavior.num_alice(); ++u) {
    for (std::size_t v = 0; v < behavior.num_bob(); ++v) {
      const OutcomeRow& r = behavior.row(u, v);
      table.push_back({{"u", label_json(alice[u])}, {"v", label_json(bob[v])},
                       {"p00", r[0]}, {"p01", r[1]}, {"p10", r[2]}, {"p11", r[3]}});
    }
  }
  return {{"alice_questions", labels_json(alice)},
          {"bob_questions", labels_json(bob)},
          {"table", table}};
}

TripartiteBehavior tripartite_from_json(const Json& json) {
  return translate_errors([&] {
    TripartiteBehavior::Table table{};
    std::set<int> seen;
    for (const auto& row : array_at(json, "table")) {
      const int x = row.at("x").get<int>();
      const int y = row.at("y").get<int>();
      const int z = row.at("z").get<int>();
      if ((x | y | z) & ~1) parse_fail("tripartite settings must be bits");
      const int setting = 4 * x + 2 * y + z;
      if (!seen.insert(setting).second) parse_fail("duplicate tripartite setting");
      const Json& p = array_at(row, "p");
      if (p.size() != 8) parse_fail("tripartite rows need eight probabilities");
      for (std::size_t k = 0; k < 8; ++k) table[setting][k] = p.at(k).get<double>();
    }
    if (seen.size() != 8) parse_fail("tripartite table needs all eight settings");
    try {
      return TripartiteBehavior(table);
    } catch (const Error& e) {
      parse_fail(e.what());
    }
  });
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kIo, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    parse_fail(path.string() + ": " + e.what());
  }
}

namespace {

constexpr char kAlphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int decode_char(char c) {
  if (c >= 'A' && c <= 'Z') return c - 'A';
  if (c >= 'a' && c <= 'z') return c - 'a' + 26;
  if (c >= '0' && c <= '9') return c - '0' + 52;
  if (c == '+') return 62;
  if (c == '/') return 63;
  return -1;
}

}  // namespace

std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  std::size_t i = 0;
  for (; i + 2 < bytes.size(); i += 3) {
    const std::uint32_t n = (bytes[i] << 16) | (bytes[i + 1] << 8) | bytes[i + 2];
    out += kAlphabet[(n >> 18) & 63];
    out += kAlphabet[(n >> 12) & 63];
    out += kAlphabet[(n >> 6) & 63];
    out += kAlphabet[n & 63];
  }
  if (i + 1 == bytes.size()) {
    const std::uint32_t n = bytes[i] << 16;
    out += kAlphabet[(n >> 18) & 63];
    out += kAlphabet[(n >> 12) & 63];
    out += "==";
  } else if (i + 2 == bytes.size()) {
    const std::uint32_t n = (bytes[i] << 16) | (bytes[i + 1] << 8);
    out += kAlphabet[(n >> 18) & 63];
    out += kAlphabet[(n >> 12) & 63];
    out += kAlphabet[(n >> 6) & 63];
    out += '=';
  }
  return out;
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
  if (text.size() % 4 != 0) parse_fail("base64 length is not a multiple of 4");
  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 4 * 3);
  for (std::size_t i = 0; i < text.size(); i += 4) {
    std::array<int, 4> s{};
    int padding = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      const char c = text[i + j];
      if (c == '=' && i + 4 == text.size() && j >= 2) {
        s[j] = 0;
        ++padding;
      } else {
        if (padding > 0) parse_fail("misplaced base64 padding");
        s[j] = decode_char(c);
        if (s[j] < 0) parse_fail("invalid base64 character");
      }
    }
    const std::uint32_t n = (s[0] << 18) | (s[1] << 12) | (s[2] << 6) | s[3];
    out.push_back(static_cast<std::uint8_t>(n >> 16));
    if (padding < 2) out.push_back(static_cast<std::uint8_t>(n >> 8));
    if (padding < 1) out.push_back(static_cast<std::uint8_t>(n));
  }
  return out;
}

void write_record_ndjson(std::ostream& out, const WorkRecord& record) {
  const Json header = {{"game", record.game_name},
                       {"delta", record.delta},
                       {"seed", record.seed},
                       {"rounds", record.rounds}};
  out << header.dump() << '\n';
  for (std::size_t start = 0; start < record.work_bits.size(); start += kBitsPerLine) {
    const std::size_t end = std::min(record.work_bits.size(), start + kBitsPerLine);
    std::vector<std::uint8_t> bytes((end - start + 7) / 8, 0);
    for (std::size_t i = start; i < end; ++i) {
      if (record.work_bits[i]) bytes[(i - start) / 8] |= static_cast<std::uint8_t>(0x80 >> ((i - start) % 8));
    }
    out << Json{{"bits", base64_encode(bytes)}}.dump() << '\n';
  }
}

WorkRecord read_record_ndjson(std::istream& in) {
  return translate_errors([&] {
    std::string line;
    if (!std::getline(in, line)) parse_fail("work record is empty");
    const Json header = Json::parse(line);
    WorkRecord record;
    record.game_name = header.at("game").get<std::string>();
    record.delta = header.at("delta").get<double>();
    record.seed = header.at("seed").get<std::uint64_t>();
    record.rounds = header.at("rounds").get<std::uint64_t>();
    if (!(record.delta > 0.0)) parse_fail("work record delta must be positive");
    record.work_bits.reserve(record.rounds);

    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const Json chunk = Json::parse(line);
      const auto bytes = base64_decode(chunk.at("bits").get<std::string>());
      const std::uint64_t remaining = record.rounds - record.work_bits.size();
      const std::uint64_t count = std::min<std::uint64_t>(remaining, kBitsPerLine);
      if (bytes.size() != (count + 7) / 8) parse_fail("work-bit line has wrong length");
      for (std::uint64_t i = 0; i < bytes.size() * 8; ++i) {
        const int bit = (bytes[i / 8] >> (7 - i % 8)) & 1;
        if (i < count) {
          record.work_bits.push_back(static_cast<std::uint8_t>(bit));
        } else if (bit) {
          parse_fail("nonzero padding in work-bit line");
        }
      }
    }
    if (record.work_bits.size() != record.rounds) {
      parse_fail("work record holds " + std::to_string(record.work_bits.size()) +
                 " bits, header says " + std::to_string(record.rounds));
    }
    return record;
  });
}

void write_record_csv(std::ostream& out, const WorkRecord& record) {
  out << "round,work_bit\n";
  for (std::size_t i = 0; i < record.work_bits.size(); ++i) {
    out << i << ',' << static_cast<int>(record.work_bits[i]) << '\n';
  }
}

WorkRecord read_record_csv(std::istream& in, const std::string& game_name,
                           double delta, std::uint64_t seed) {
  std::string line;
  if (!std::getline(in, line) || line != "round,work_bit") {
    parse_fail("CSV work record must start with 'round,work_bit'");
  }
  WorkRecord record;
  record.game_name = game_name;
  record.delta = delta;
  record.seed = seed;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) parse_fail("malformed CSV row: " + line);
    if (line.substr(0, comma) != std::to_string(record.work_bits.size())) {
      parse_fail("CSV rounds out of order at: " + line);
    }
    const std::string bit = line.substr(comma + 1);
    if (bit != "0" && bit != "1") parse_fail("work bits must be 0 or 1: " + line);
    record.work_bits.push_back(bit == "1" ? 1 : 0);
  }
  record.rounds = record.work_bits.size();
  return record;
}

Json to_json(const GameValues& values, const XorGame& game, double delta,
             bool absolute) {
  const double scale = absolute ? delta : 1.0;
  return {{"game", game.name()},
          {"omega_L", values.local},
          {"omega_Q", values.quantum},
          {"omega_Q_exact", values.quantum_is_exact},
          {"omega_Q_is_lower_bound", !values.quantum_is_exact},
          {"omega_NS", values.nonsignalling},
          {"delta", delta},
          {"units", absolute ? "absolute" : "delta"},
          {"work_ceilings",
           {{"local", scale * values.local},
            {"quantum", scale * values.quantum},
            {"nonsignalling", scale * values.nonsignalling}}}};
}

Json to_json(const CertificateReport& report) {
  const auto optional = [](const std::optional<double>& v) -> Json {
    return v ? Json(*v) : Json(nullptr);
  };
  Json readout = nullptr;
  if (report.readout) {
    readout = {{"eta1", report.readout->eta1},
               {"eta0", report.readout->eta0},
               {"eta1_upper", optional(report.readout->eta1_upper)},
               {"eta0_upper", optional(report.readout->eta0_upper)},
               {"conservative", report.conservative_readout}};
  }
  return {{"game", report.game_name},
          {"delta", report.delta},
          {"n", report.n},
          {"k", report.k},
          {"p_hat", report.p_hat},
          {"method", to_string(report.method)},
          {"alpha", report.alpha},
          {"epsilon", optional(report.epsilon)},
          {"p_lower", report.p_lower},
          {"p_upper", optional(report.p_upper)},
          {"readout", readout},
          {"corrected_p_lower", optional(report.corrected_p_lower)},
          {"effective_lower", report.effective_lower()},
          {"work_lower_over_delta", report.effective_lower()},
          {"thresholds",
           {{"omega_L", report.omega_l},
            {"omega_Q", report.omega_q},
            {"omega_Q_exact", report.omega_q_exact}}},
          {"verdict", to_string(report.verdict)},
          {"s_lower", optional(report.s_lower)},
          {"bound_target", report.time_averaged ? "time-averaged" : "iid"},
          {"warnings", report.warnings}};
}

Json to_json(const LedgerReport& report) {
  const auto per_kt = [&](double energy) -> Json {
    return report.kt_ln2 > 0.0 ? Json(energy / report.kt_ln2) : Json(nullptr);
  };
  return {{"p", report.p},
          {"delta", report.delta},
          {"kt_ln2", report.kt_ln2},
          {"variant", to_string(report.variant)},
          {"reset_entropy_bits", report.reset_entropy_bits},
          {"absolute",
           {{"battery_gain", report.battery_gain},
            {"fuel_cost", report.fuel_cost},
            {"reset_cost", report.reset_cost},
            {"net_work_upper", report.net_work_upper}}},
          {"delta_units",
           {{"battery_gain", report.battery_gain / report.delta},
            {"fuel_cost", report.fuel_cost / report.delta},
            {"reset_cost", report.reset_cost / report.delta},
            {"net_work_upper", report.net_work_upper / report.delta}}},
          {"kt_ln2_units",
           {{"battery_gain", per_kt(report.battery_gain)},
            {"fuel_cost", per_kt(report.fuel_cost)},
            {"reset_cost", per_kt(report.reset_cost)},
            {"net_work_upper", per_kt(report.net_work_upper)}}},
          {"fuel_cost_is_lower_bound", true},
          {"notes", report.notes}};
}

Json to_json(const MonogamyReport& report) {
  return {{"s_ab", report.s_ab},   {"s_ac", report.s_ac},
          {"w_ab", report.w_ab},   {"w_ac", report.w_ac},
          {"sum_w", report.sum_w}, {"bound", report.bound},
          {"satisfied", report.satisfied}};
}

}  // namespace batterybell
