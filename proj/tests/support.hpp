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

// Shared helpers for the test binaries. Everything here is deliberately
// naive so it can serve as an independent reference.

#ifndef GMCQ_TESTS_SUPPORT_HPP
#define GMCQ_TESTS_SUPPORT_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "gmcq/gf.hpp"
#include "gmcq/params.hpp"

namespace gmcq::testing {

inline constexpr std::uint64_t kSeed = 0x5eed'2026;

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(kSeed + salt); }

inline gf::Felt random_elem(const gf::FieldCtx& ctx, std::mt19937_64& r) {
  return gf::Felt{static_cast<std::uint32_t>(r() % ctx.q2())};
}

inline gf::Felt random_nonzero(const gf::FieldCtx& ctx, std::mt19937_64& r) {
  return gf::Felt{static_cast<std::uint32_t>(1 + r() % (ctx.q2() - 1))};
}

/// x^e by e − 1 multiplications.
inline gf::Felt slow_pow(const gf::FieldCtx& ctx, gf::Felt x, std::uint64_t e) {
  gf::Felt acc = ctx.one();
  for (std::uint64_t i = 0; i < e; ++i) acc = ctx.mul(acc, x);
  return acc;
}

/// Smallest k ≥ 1 with x^k = 1, by repeated multiplication.
inline std::uint64_t slow_order(const gf::FieldCtx& ctx, gf::Felt x) {
  gf::Felt acc = x;
  std::uint64_t k = 1;
  while (acc != ctx.one()) {
    acc = ctx.mul(acc, x);
    ++k;
  }
  return k;
}

inline std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

/// Every admissible (q, λ, τ, ρ, σ, n_Y) with the given q and n_Y range.
inline std::vector<CodeConfig> admissible_configs(long q, long ny_min, long ny_max) {
  std::vector<CodeConfig> out;
  for (long lambda : divisors(q - 1)) {
    for (long tau : divisors(q + 1)) {
      for (long rho : divisors(q + 1)) {
        const long smax = rho / std::gcd(lambda * tau, rho);
        for (long sigma = 2; sigma <= smax; ++sigma) {
          for (long ny = ny_min; ny <= ny_max; ++ny) {
            CodeConfig cfg{q, lambda, tau, rho, sigma, ny, std::nullopt};
            if (!admissibility_violation(cfg)) out.push_back(cfg);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace gmcq::testing

#endif  // GMCQ_TESTS_SUPPORT_HPP
