// Copyright 2026 The gmcq Authors
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

#ifndef GMCQ_PARAMS_HPP
#define GMCQ_PARAMS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace gmcq {

class AdmissibilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exponents of X^e1 Y^e2.
struct Monomial {
  long e1 = 0;
  long e2 = 0;

  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// The construction parameters (q, λ, τ, ρ, σ, n_Y) and optionally t.
struct CodeConfig {
  long q = 0;
  long lambda = 0;
  long tau = 0;
  long rho = 0;
  long sigma = 0;
  long ny = 0;
  std::optional<long> t;

  long n_x() const { return lambda * tau * sigma; }
  long n() const { return n_x() * ny; }
  /// ρ / gcd(λτ, ρ), the upper limit for σ.
  long sigma_max() const;

  friend bool operator==(const CodeConfig&, const CodeConfig&) = default;
};

/// Names the first violated constraint, or nullopt when the config is admissible.
std::optional<std::string> admissibility_violation(const CodeConfig& cfg);

/// Throws AdmissibilityError with the violated constraint.
void require_admissible(const CodeConfig& cfg);

std::string to_string(const CodeConfig& cfg);

}  // namespace gmcq

#endif  // GMCQ_PARAMS_HPP
