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

#include "doctest.h"
#include "gmcq/params.hpp"

using gmcq::CodeConfig;

namespace {

CodeConfig cfg(long q, long lambda, long tau, long rho, long sigma, long ny) {
  return CodeConfig{q, lambda, tau, rho, sigma, ny, std::nullopt};
}

std::string violation(const CodeConfig& c) { return gmcq::admissibility_violation(c).value_or(""); }

}  // namespace

TEST_CASE("lengths and sigma_max") {
  const auto c = cfg(8, 7, 3, 9, 2, 3);
  CHECK(c.n_x() == 42);
  CHECK(c.n() == 126);
  CHECK(c.sigma_max() == 3);
  CHECK(cfg(7, 3, 4, 8, 2, 2).sigma_max() == 2);
  CHECK(cfg(7, 3, 2, 8, 2, 2).sigma_max() == 4);
  CHECK(cfg(7, 0, 2, 8, 2, 2).sigma_max() == 0);
}

TEST_CASE("each constraint is named") {
  CHECK_FALSE(gmcq::admissibility_violation(cfg(8, 7, 3, 9, 2, 3)).has_value());
  CHECK(violation(cfg(3, 2, 2, 2, 2, 2)).find("q >= 4") != std::string::npos);
  CHECK(violation(cfg(6, 5, 7, 7, 2, 2)).find("prime power") != std::string::npos);
  CHECK(violation(cfg(8, 6, 3, 9, 2, 2)).find("lambda") != std::string::npos);
  CHECK(violation(cfg(8, 1, 3, 9, 2, 2)).find("lambda") != std::string::npos);
  CHECK(violation(cfg(8, 7, 4, 9, 2, 2)).find("tau") != std::string::npos);
  CHECK(violation(cfg(8, 7, 3, 4, 2, 2)).find("rho") != std::string::npos);
  CHECK(violation(cfg(7, 2, 2, 8, 2, 2)).find("gcd(lambda, tau)") != std::string::npos);
  CHECK(violation(cfg(8, 7, 9, 9, 2, 2)).find(">= 2 required (got 1)") != std::string::npos);
  CHECK(violation(cfg(8, 7, 3, 9, 4, 2)).find("sigma") != std::string::npos);
  CHECK(violation(cfg(8, 7, 3, 9, 1, 2)).find("sigma") != std::string::npos);
  CHECK(violation(cfg(8, 7, 3, 9, 2, 1)).find("ny") != std::string::npos);
  CHECK(violation(cfg(8, 7, 3, 9, 2, 9)).find("ny") != std::string::npos);
  CHECK_NOTHROW(gmcq::require_admissible(cfg(8, 7, 3, 9, 2, 8)));
  CHECK_THROWS_AS(gmcq::require_admissible(cfg(8, 7, 3, 9, 2, 9)), gmcq::AdmissibilityError);
}

TEST_CASE("to_string") {
  auto c = cfg(8, 7, 3, 9, 2, 3);
  CHECK(gmcq::to_string(c) == "(q=8, lambda=7, tau=3, rho=9, sigma=2, ny=3)");
  c.t = 11;
  CHECK(gmcq::to_string(c) == "(q=8, lambda=7, tau=3, rho=9, sigma=2, ny=3, t=11)");
}
