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

#ifndef GMCQ_QUANTUM_HPP
#define GMCQ_QUANTUM_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "gmcq/params.hpp"

namespace gmcq::quantum {

/// Σ_{i=1}^{n_Y} ⌊(t−1)/i⌋
long size_delta(long t, long ny);

/// How a record's self-orthogonality is known.
enum class Certificate {
  kClosedForm,  ///< d ≤ T* from the closed form
  kOracle       ///< checked directly on the generator matrix by the caller
};

/// [[n, k, d]]_q with k = n − 2|Δ_d|.
struct QuantumRecord {
  long q = 0;
  long n = 0;
  long k = 0;
  long d = 0;
  long defect = 0;
  bool beats_qgv = false;
  CodeConfig config;  ///< config.t == d
  Certificate certificate = Certificate::kClosedForm;
};

/**
 * Throws AdmissibilityError for an inadmissible config or d < 2, and
 * std::domain_error when d exceeds the closed-form T* (or the closed form
 * is unavailable) and `oracle_confirmed` is false.
 */
QuantumRecord stabilizer_params(const CodeConfig& cfg, long d, bool oracle_confirmed = false);

/// n + 2 − k − 2d
long singleton_defect(const QuantumRecord& rec);
long singleton_defect(long n, long k, long d);

/**
 * True iff (q^(n−k+2) − 1)/(q² − 1) < Σ_{i=1}^{d−1} (q²−1)^(i−1) C(n, i),
 * evaluated in exact integers. Requires n > k ≥ 2, d ≥ 2, n ≡ k (mod 2).
 */
bool qgv_beats(long q, long n, long k, long d);

enum class Family { kFam1, kFam2, kFam3 };

std::optional<Family> parse_family(std::string_view name);
std::string_view to_string(Family f);

/// The family's (λ, τ, ρ, σ, n_Y) at q; throws AdmissibilityError when q fails
/// the family's congruence or the resulting config is inadmissible.
CodeConfig family_config(Family f, long q);

/// Largest distance the family guarantees at q.
long family_max_distance(Family f, long q);

/// Records for d = 2 .. family_max_distance; throws std::logic_error if the
/// closed-form T* falls short of the family's claimed range.
std::vector<QuantumRecord> family(Family f, long q);

struct TheoremCheck {
  long q = 0;
  long n = 0;
  /// The admissible n_Y = 2 config of length n with the largest T*, when one
  /// exists; ties go to smaller λ, then smaller τ, then larger ρ.
  std::optional<CodeConfig> config;
  /// Closed-form T* of that config.
  long t_star = 0;
  /// One record per d ∈ [5, ⌊3q/2⌋]; config.t is set only when d ≤ t_star.
  std::vector<QuantumRecord> records;
  bool all_beat = false;
};

/// Parameter check at n = 2(q² − 1), k = n − 2|Δ_d| (n_Y = 2).
TheoremCheck beats_gv_theorem_check(long q);

}  // namespace gmcq::quantum

#endif  // GMCQ_QUANTUM_HPP
