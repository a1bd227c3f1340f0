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

#ifndef BATTERYBELL_SPECIAL_FUNCTIONS_HPP_
#define BATTERYBELL_SPECIAL_FUNCTIONS_HPP_

namespace batterybell {

// Regularized incomplete beta I_x(a, b) by Lentz's continued fraction, using
// the reflection I_x(a,b) = 1 - I_{1-x}(b,a) when x > (a+1)/(a+b+2).
double regularized_incomplete_beta(double x, double a, double b);

// q-quantile of Beta(a, b) by bisection on regularized_incomplete_beta.
// Stops once the bracket is narrower than 1e-12 or after 200 halvings.
double beta_quantile(double q, double a, double b);

// Inverse standard normal CDF. Acklam's rational approximation followed by
// one Halley correction step against std::erfc.
double normal_quantile(double p);

}  // namespace batterybell

#endif  // BATTERYBELL_SPECIAL_FUNCTIONS_HPP_
