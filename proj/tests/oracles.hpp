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

#ifndef BATTERYBELL_TESTS_ORACLES_HPP_
#define BATTERYBELL_TESTS_ORACLES_HPP_

#include <cmath>
#include <cstdint>

namespace batterybell::testing {

// P[X >= k] for X ~ Binomial(n, p), by direct summation of the pmf in long
// double. Independent of the incomplete-beta route used by the library.
inline double binomial_upper_tail(std::uint64_t n, std::uint64_t k, double p) {
  if (k == 0) return 1.0;
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  const long double lp = std::log(static_cast<long double>(p));
  const long double lq = std::log1p(-static_cast<long double>(p));
  const long double ln_n_fact = std::lgamma(static_cast<long double>(n) + 1.0L);
  long double tail = 0.0L;
  for (std::uint64_t j = k; j <= n; ++j) {
    const long double jd = static_cast<long double>(j);
    const long double log_term = ln_n_fact - std::lgamma(jd + 1.0L) -
                                 std::lgamma(static_cast<long double>(n - j) + 1.0L) +
                                 jd * lp + static_cast<long double>(n - j) * lq;
    tail += std::exp(log_term);
  }
  return static_cast<double>(tail);
}

}  // namespace batterybell::testing

#endif  // BATTERYBELL_TESTS_ORACLES_HPP_
