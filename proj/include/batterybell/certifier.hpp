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

#ifndef BATTERYBELL_CERTIFIER_HPP_
#define BATTERYBELL_CERTIFIER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "batterybell/games.hpp"
#include "batterybell/transducer.hpp"

namespace batterybell {

struct Interval {
  double lower = 0.0;
  double upper = 1.0;
};

enum class Method { kHoeffding, kAzuma, kClopperPearson, kWilson };
enum class Sided { kOne, kTwo };
enum class Verdict { kNone, kNonlocal, kPostQuantum };

const char* to_string(Method method);
const char* to_string(Verdict verdict);
Method parse_method(const std::string& text);

// sqrt(ln(1/alpha) / (2n)).
double hoeffding_epsilon(std::uint64_t n, double alpha);
double hoeffding_lower_bound(double p_hat, std::uint64_t n, double alpha);

// Same radius as Hoeffding, but the bound is on the time-averaged success
// probability (1/n) sum_i p_i, which tolerates drifting behaviour.
double azuma_lower_bound(const WorkRecord& record, double alpha);

// Exact binomial interval. One-sided returns the lower bound at level alpha
// with upper = 1; two-sided splits alpha between the tails.
Interval clopper_pearson(std::uint64_t k, std::uint64_t n, double alpha,
                         Sided sided = Sided::kTwo);

// Two-sided Wilson score interval with z = Phi^{-1}(1 - alpha/2).
Interval wilson(std::uint64_t k, std::uint64_t n, double alpha);

// S = 8 (p - 1/2), endpoint-wise.
Interval chsh_interval(const Interval& p_interval);
Interval success_interval_from_chsh(const Interval& s_interval);

// Battery readout: eta1 = P[charged | win], eta0 = P[charged | fail].
// Optional upper bounds come from calibration.
struct ReadoutModel {
  double eta1 = 1.0;
  double eta0 = 0.0;
  std::optional<double> eta1_upper;
  std::optional<double> eta0_upper;

  // Throws unless 0 <= eta0 < eta1 <= 1.
  void validate() const;
};

ReadoutModel symmetric_flip_model(double flip_probability);

// p_obs = eta0 + (eta1 - eta0) p.
double readout_channel(double p, const ReadoutModel& model);

// Inverts the readout channel on a lower bound. Conservative mode substitutes
// eta0_upper (falling back to eta0) and eta1_upper (falling back to 1). The
// result is truncated to [0, 1]. Throws Error(kDegenerateCalibration) when the
// denominator is not positive.
double readout_invert(double p_obs_lower, const ReadoutModel& model,
                      bool conservative);

// sin^2(pi/8): largest symmetric flip rate that keeps a PR box above the CHSH
// quantum ceiling.
double symmetric_flip_threshold();

struct CertificateReport {
  std::string game_name;
  double delta = 1.0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  double p_hat = 0.0;
  Method method = Method::kHoeffding;
  double alpha = 0.01;
  std::optional<double> epsilon;
  double p_lower = 0.0;
  std::optional<double> p_upper;
  std::optional<ReadoutModel> readout;
  bool conservative_readout = false;
  std::optional<double> corrected_p_lower;
  double omega_l = 0.0;
  double omega_q = 0.0;
  bool omega_q_exact = false;
  Verdict verdict = Verdict::kNone;
  std::optional<double> s_lower;
  bool time_averaged = false;
  std::vector<std::string> warnings;

  double effective_lower() const { return corrected_p_lower.value_or(p_lower); }
};

// Verdict is the strongest threshold strictly exceeded by the effective lower
// bound. A non-exact omega_Q never supports a post-quantum verdict.
CertificateReport certify(const WorkRecord& record, const GameValues& values,
                          Method method, double alpha,
                          const std::optional<ReadoutModel>& readout = std::nullopt);

}  // namespace batterybell

#endif  // BATTERYBELL_CERTIFIER_HPP_
