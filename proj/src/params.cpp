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

#include "gmcq/params.hpp"

#include <numeric>
#include <sstream>

#include "gmcq/gf.hpp"

namespace gmcq {

long CodeConfig::sigma_max() const {
  if (rho <= 0 || lambda <= 0 || tau <= 0) return 0;
  return rho / std::gcd(lambda * tau, rho);
}

std::optional<std::string> admissibility_violation(const CodeConfig& cfg) {
  const long q = cfg.q;
  if (q < 4) return "q >= 4 required (got q=" + std::to_string(q) + ")";
  if (!gf::prime_power(static_cast<std::uint64_t>(q))) {
    return "q must be a prime power (got q=" + std::to_string(q) + ")";
  }
  if (cfg.lambda <= 1 || (q - 1) % cfg.lambda != 0) {
    return "lambda > 1 must divide q-1 (lambda=" + std::to_string(cfg.lambda) + ", q-1=" + std::to_string(q - 1) + ")";
  }
  if (cfg.tau <= 1 || (q + 1) % cfg.tau != 0) {
    return "tau > 1 must divide q+1 (tau=" + std::to_string(cfg.tau) + ", q+1=" + std::to_string(q + 1) + ")";
  }
  if (cfg.rho <= 1 || (q + 1) % cfg.rho != 0) {
    return "rho > 1 must divide q+1 (rho=" + std::to_string(cfg.rho) + ", q+1=" + std::to_string(q + 1) + ")";
  }
  if (std::gcd(cfg.lambda, cfg.tau) != 1) {
    return "gcd(lambda, tau) = 1 required (gcd=" + std::to_string(std::gcd(cfg.lambda, cfg.tau)) + ")";
  }
  const long smax = cfg.sigma_max();
  if (smax < 2) return "rho / gcd(lambda*tau, rho) >= 2 required (got " + std::to_string(smax) + ")";
  if (cfg.sigma < 2 || cfg.sigma > smax) {
    return "2 <= sigma <= rho/gcd(lambda*tau, rho) = " + std::to_string(smax) + " required (sigma=" +
           std::to_string(cfg.sigma) + ")";
  }
  if (cfg.ny < 2 || cfg.ny > q) {
    return "2 <= ny <= q required (ny=" + std::to_string(cfg.ny) + ")";
  }
  return std::nullopt;
}

void require_admissible(const CodeConfig& cfg) {
  if (auto why = admissibility_violation(cfg)) throw AdmissibilityError(*why);
}

std::string to_string(const CodeConfig& cfg) {
  std::ostringstream os;
  os << "(q=" << cfg.q << ", lambda=" << cfg.lambda << ", tau=" << cfg.tau << ", rho=" << cfg.rho
     << ", sigma=" << cfg.sigma << ", ny=" << cfg.ny;
  if (cfg.t) os << ", t=" << *cfg.t;
  os << ")";
  return os.str();
}

}  // namespace gmcq
