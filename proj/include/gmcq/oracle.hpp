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

#ifndef GMCQ_ORACLE_HPP
#define GMCQ_ORACLE_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "gmcq/evalcode.hpp"
#include "gmcq/selforth.hpp"

/// Brute-force ground truth for everything the closed forms claim.
namespace gmcq::oracle {

using selforth::ExponentPair;
using selforth::FailurePoint;

/// Ordered pairs (e1, e1'), 0 ≤ e1, e1' < n_X, whose univariate Hermitian product is non-zero.
std::vector<ExponentPair> exact_dx(const gf::FieldCtx& ctx, const evalcode::EvaluationData& ev);

/// Same over 0 ≤ e2, e2' < n_Y.
std::vector<ExponentPair> exact_dy(const gf::FieldCtx& ctx, const evalcode::EvaluationData& ev);

/// Non-orthogonal pairs of monomials with X-exponents below x_limit, from
/// bivariate evaluation vectors directly (no factorisation used).
std::vector<FailurePoint> exact_d(const gf::FieldCtx& ctx, const evalcode::EvaluationData& ev, long x_limit);

struct OrthoReport {
  std::vector<ExponentPair> d_x;
  std::vector<ExponentPair> d_y;
  /// Largest t ≤ n_X + 1 such that no pair from Δ_t is non-orthogonal.
  long max_self_orthogonal_t = 0;
  /// A non-orthogonal pair of smallest total footprint, if any exists.
  std::optional<FailurePoint> first_failure;
};

/// Builds D_X and D_Y exactly and combines them as D = D_X × D_Y.
OrthoReport ortho_report(const gf::FieldCtx& ctx, const evalcode::EvaluationData& ev);

/// G · conj(G)^T = 0.
bool is_hermitian_self_orthogonal(const gf::FieldCtx& ctx, const evalcode::GenMatrix& g);

/**
 * Minimum total footprint over all ordered pairs with e1 ≠ e1' < n_X meeting
 * both X congruences and e2 + e2' > n_Y − 2. In the exceptional lattice
 * case, congruence pairs off the lattice are skipped. Returns n_X + 1 when no
 * failure point exists below n_X.
 */
long tstar_bruteforce(long lambda, long tau, long rho, long sigma, long ny);

enum class SearchStatus {
  kExact,
  kAtLeast,  ///< no witness up to the search limit; value is a lower bound
  kBudgetExceeded
};

std::string_view to_string(SearchStatus status);

struct DistanceResult {
  SearchStatus status = SearchStatus::kExact;
  long value = 0;
  std::uint64_t work = 0;
};

struct Budgets {
  std::uint64_t codewords = 100'000'000;
  std::uint64_t rank_tests = 10'000'000;

  /// Overrides from GMCQ_CODEWORD_BUDGET / GMCQ_RANK_TEST_BUDGET when set.
  static Budgets from_env();
};

/// Minimum weight over all non-zero codewords; needs (q²)^k ≤ budget.
DistanceResult min_distance_primal(const gf::FieldCtx& ctx, const evalcode::GenMatrix& g,
                                   std::uint64_t budget = Budgets{}.codewords);

/**
 * Minimum distance of the Hermitian dual: the size of the smallest linearly
 * dependent set of columns of the entrywise conjugate G^(q). Searches
 * subsets of size ≤ d_max; kAtLeast with value d_max + 1 if none is found.
 */
DistanceResult dual_min_distance(const gf::FieldCtx& ctx, const evalcode::GenMatrix& g, long d_max,
                                 std::uint64_t budget = Budgets{}.rank_tests);

}  // namespace gmcq::oracle

#endif  // GMCQ_ORACLE_HPP
