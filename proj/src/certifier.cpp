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

#include "batterybell/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "batterybell/error.hpp"
#include "batterybell/special_functions.hpp"

namespace batterybell {

namespace {

void require_alpha(double alpha) {
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
}

void require_counts(std::uint64_t k, std::uint64_t n) {
  require(n >= 1, "need at least one trial");
  require(k <= n, "successes exceed trials");
}

}  // namespace

const char* to_string(Method method) {
  switch (method) {
    case Method::kHoeffding:
      return "hoeffding";
    case Method::kAzuma:
      return "azuma";
    case Method::kClopperPearson:
      return "clopper-pearson";
    case Method::kWilson:
      return "wilson";
  }
  return "unknown";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kNone:
      return "none";
    case Verdict::kNonlocal:
      return "nonlocal";
    case Verdict::kPostQuantum:
      return "post-quantum";
  }
  return "unknown";
}

Method parse_method(const std::string& text) {
  if (text == "hoeffding") return Method::kHoeffding;
  if (text == "azuma") return Method::kAzuma;
  if (text == "clopper-pearson") return Method::kClopperPearson;
  if (text == "wilson") return Method::kWilson;
  fail(ErrorKind::kInvalidParameter, "unknown confidence method '" + text + "'");
}

double hoeffding_epsilon(std::uint64_t n, double alpha) {
  require(n >= 1, "need at least one round");
  require_alpha(alpha);
  return std::sqrt(std::log(1.0 / alpha) / (2.0 * static_cast<double>(n)));
}

double hoeffding_lower_bound(double p_hat, std::uint64_t n, double alpha) {
  return std::max(0.0, p_hat - hoeffding_epsilon(n, alpha));
}

double azuma_lower_bound(const WorkRecord& record, double alpha) {
  require(record.rounds >= 1, "work record is empty");
  return hoeffding_lower_bound(record.mean_bit(), record.rounds, alpha);
}

Interval clopper_pearson(std::uint64_t k, std::uint64_t n, double alpha,
                         Sided sided) {
  require_counts(k, n);
  require_alpha(alpha);
  const double kd = static_cast<double>(k);
  const double nd = static_cast<double>(n);
  Interval out;
  const double lower_level = sided == Sided::kOne ? alpha : alpha / 2.0;
  out.lower = k == 0 ? 0.0 : beta_quantile(lower_level, kd, nd - kd + 1.0);
  if (sided == Sided::kOne) {
    out.upper = 1.0;
  } else {
    out.upper = k == n ? 1.0 : beta_quantile(1.0 - alpha / 2.0, kd + 1.0, nd - kd);
  }
  return out;
}

Interval wilson(std::uint64_t k, std::uint64_t n, double alpha) {
  require_counts(k, n);
  require_alpha(alpha);
  const double nd = static_cast<double>(n);
  const double p_hat = static_cast<double>(k) / nd;
  const double z = normal_quantile(1.0 - alpha / 2.0);
  const double z2 = z * z;
  const double center = p_hat + z2 / (2.0 * nd);
  const double radius =
      z * std::sqrt(p_hat * (1.0 - p_hat) / nd + z2 / (4.0 * nd * nd));
  const double denom = 1.0 + z2 / nd;
  Interval out{std::clamp((center - radius) / denom, 0.0, 1.0),
               std::clamp((center + radius) / denom, 0.0, 1.0)};
  // The closed form is exactly 0 (resp. 1) at k = 0 (resp. n); drop rounding.
  if (k == 0) out.lower = 0.0;
  if (k == n) out.upper = 1.0;
  return out;
}

Interval chsh_interval(const Interval& p_interval) {
  return {8.0 * (p_interval.lower - 0.5), 8.0 * (p_interval.upper - 0.5)};
}

Interval success_interval_from_chsh(const Interval& s_interval) {
  return {0.5 + s_interval.lower / 8.0, 0.5 + s_interval.upper / 8.0};
}

void ReadoutModel::validate() const {
  require(eta0 >= 0.0 && eta0 < eta1 && eta1 <= 1.0,
          "readout model needs 0 <= eta0 < eta1 <= 1");
  if (eta0_upper) {
    require(*eta0_upper >= eta0 && *eta0_upper <= 1.0,
            "eta0 upper bound must lie in [eta0, 1]");
  }
  if (eta1_upper) {
    require(*eta1_upper >= eta1 && *eta1_upper <= 1.0,
            "eta1 upper bound must lie in [eta1, 1]");
  }
}

ReadoutModel symmetric_flip_model(double flip_probability) {
  require(flip_probability >= 0.0 && flip_probability < 0.5,
          "symmetric flip probability must lie in [0, 1/2)");
  ReadoutModel model;
  model.eta1 = 1.0 - flip_probability;
  model.eta0 = flip_probability;
  return model;
}

double readout_channel(double p, const ReadoutModel& model) {
  model.validate();
  require(p >= 0.0 && p <= 1.0, "success probability must lie in [0, 1]");
  return model.eta0 + (model.eta1 - model.eta0) * p;
}

double readout_invert(double p_obs_lower, const ReadoutModel& model,
                      bool conservative) {
  model.validate();
  require(p_obs_lower >= 0.0 && p_obs_lower <= 1.0,
          "observed lower bound must lie in [0, 1]");
  const double eta0 = conservative ? model.eta0_upper.value_or(model.eta0) : model.eta0;
  const double eta1 = conservative ? model.eta1_upper.value_or(1.0) : model.eta1;
  if (eta1 <= eta0) {
    fail(ErrorKind::kDegenerateCalibration,
         "eta1 bound must exceed eta0 bound for readout inversion");
  }
  const double numerator = p_obs_lower - eta0;
  if (numerator <= 0.0) return 0.0;
  return std::clamp(numerator / (eta1 - eta0), 0.0, 1.0);
}

double symmetric_flip_threshold() {
  const double s = std::sin(std::numbers::pi / 8.0);
  return s * s;
}

CertificateReport certify(const WorkRecord& record, const GameValues& values,
                          Method method, double alpha,
                          const std::optional<ReadoutModel>& readout) {
  require(record.rounds >= 1 && record.work_bits.size() == record.rounds,
          "work record is empty or inconsistent");
  require_alpha(alpha);

  CertificateReport report;
  report.game_name = record.game_name;
  report.delta = record.delta;
  report.n = record.rounds;
  report.k = record.charged();
  report.p_hat = record.mean_bit();
  report.method = method;
  report.alpha = alpha;
  report.omega_l = values.local;
  report.omega_q = values.quantum;
  report.omega_q_exact = values.quantum_is_exact;

  switch (method) {
    case Method::kHoeffding:
      report.epsilon = hoeffding_epsilon(report.n, alpha);
      report.p_lower = hoeffding_lower_bound(report.p_hat, report.n, alpha);
      break;
    case Method::kAzuma:
      report.epsilon = hoeffding_epsilon(report.n, alpha);
      report.p_lower = azuma_lower_bound(record, alpha);
      report.time_averaged = true;
      report.warnings.push_back(
          "bound concerns the time-averaged success probability over the tested rounds");
      break;
    case Method::kClopperPearson:
      report.p_lower = clopper_pearson(report.k, report.n, alpha, Sided::kOne).lower;
      break;
    case Method::kWilson: {
      const Interval interval = wilson(report.k, report.n, alpha);
      report.p_lower = interval.lower;
      report.p_upper = interval.upper;
      break;
    }
  }

  if (readout) {
    report.readout = readout;
    report.conservative_readout =
        readout->eta0_upper.has_value() || readout->eta1_upper.has_value();
    report.corrected_p_lower =
        readout_invert(report.p_lower, *readout, report.conservative_readout);
  }

  const double bound = report.effective_lower();
  if (bound > values.quantum && values.quantum_is_exact) {
    report.verdict = Verdict::kPostQuantum;
  } else if (bound > values.local) {
    report.verdict = Verdict::kNonlocal;
    if (bound > values.quantum) {
      report.warnings.push_back(
          "bound exceeds a non-exact quantum value; post-quantum verdict withheld");
    }
  }
  if (record.game_name == "chsh") report.s_lower = 8.0 * (bound - 0.5);
  return report;
}

}  // namespace batterybell
