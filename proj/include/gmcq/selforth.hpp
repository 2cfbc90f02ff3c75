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

#ifndef GMCQ_SELFORTH_HPP
#define GMCQ_SELFORTH_HPP

#include <string_view>
#include <vector>

#include "gmcq/params.hpp"

/**
 * Closed-form Hermitian self-orthogonality bounds.
 *
 * An X-failure pair (e1, e1') satisfies e1 + e1' ≡ L (mod λ) and
 * e1 ≡ e1' (mod τ). Every such pair with e1 < e1' lies on the lattice
 * (T1, T2) + i(λ/2, λ/2) + j(−τ/2, τ/2), i, j ≥ 0, so the smallest total
 * footprint over failure points (T*) is found by minimising over (i, j),
 * and for n_Y points also over the split of Y-exponents.
 */
namespace gmcq::selforth {

struct Table1Row {
  int case_id = 0;
  long L = 0;
  long T1 = 0;
  long T2 = 0;
  long lambda = 0;
  long tau = 0;
  long rho = 0;
  /// λ, τ odd, ρ = 2, λ ≥ τ + 2: some congruence pairs are off the lattice.
  /// They satisfy e1 ≡ e1' (mod ρ) and are therefore orthogonal.
  bool exceptional = false;
};

/// Throws AdmissibilityError if λ ≤ 1, τ ≤ 1, ρ ≤ 1 or gcd(λ, τ) ≠ 1.
Table1Row table1_select(long lambda, long tau, long rho);

struct ExponentPair {
  long e1 = 0;
  long e1p = 0;

  friend constexpr auto operator<=>(const ExponentPair&, const ExponentPair&) = default;
};

/// Lattice points with 0 ≤ e1 < e1' < n_x, in (i, j) order.
std::vector<ExponentPair> x_failure_points(const Table1Row& row, long n_x);

/// Whether (e1, e1') with e1 < e1' is one of the lattice points.
bool on_failure_lattice(const Table1Row& row, long e1, long e1p);

struct FailurePoint {
  Monomial first;
  Monomial second;

  friend constexpr auto operator<=>(const FailurePoint&, const FailurePoint&) = default;
};

/// max{(e1+1)(e2+1), (e1'+1)(e2'+1)}
long total_footprint(const FailurePoint& point);

enum class TstarBranch {
  kDecreasing,     ///< k1 < k2: minimum at the last admissible j
  kAtCrossing,     ///< k3 = k2 ≤ k1: minimum D at j = k2
  kBeforeCrossing  ///< k3 < k2 ≤ k1: minimum n_Y·C at j = k2 − 1
};

enum class TstarStatus {
  kClosedForm,
  kGuardFailed  ///< n_Y ≤ (D0+λ)/C0 or D0 ≥ λ does not hold; only the oracle can decide
};

struct TstarResult {
  long t_star = 0;
  FailurePoint witness;
  TstarBranch branch = TstarBranch::kDecreasing;
  TstarStatus status = TstarStatus::kClosedForm;
  Table1Row row;
  long C0 = 0;
  long D0 = 0;
  long k1 = 0;
  long k2 = 0;
  long k3 = 0;
  /// Lattice index j of the witness (always even when τ is odd).
  long j = 0;
};

TstarResult tstar_two_points(long lambda, long tau, long rho, long sigma);

/// For n_Y ≥ 3 the closed form is reported only when both guards hold;
/// otherwise status is kGuardFailed and t_star is 0.
TstarResult tstar_ny_points(long lambda, long tau, long rho, long sigma, long ny);

/// Dispatches on cfg.ny; requires an admissible config.
TstarResult tstar(const CodeConfig& cfg);

bool ny_guards_hold(const Table1Row& row, long ny);

std::string_view to_string(TstarBranch branch);

}  // namespace gmcq::selforth

#endif  // GMCQ_SELFORTH_HPP
