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

#ifndef GMCQ_EVALCODE_HPP
#define GMCQ_EVALCODE_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "gmcq/gf.hpp"
#include "gmcq/params.hpp"

/**
 * Evaluation data and generator matrices of separable GMC codes.
 *
 * X-points are ζ_λ^i ζ_τ^j ζ_ρ^ℓ in row-major (i, j, ℓ) order with weights
 * v satisfying v^(q+1) = ζ_λ^(−iL) s_ℓ. Y-points lie in GF(q) with weights
 * w satisfying w^(q+1) = w_q, w_q spanning the Vandermonde kernel. The
 * code weight is Q(x, y) = v_x w_y and columns are X-major: column
 * x·n_Y + y.
 */
namespace gmcq::evalcode {

using gf::Felt;
using gf::FieldCtx;
using Matrix = std::vector<std::vector<Felt>>;

/// (a, b) with a < n_x, b < n_y and (a+1)(b+1) < t, sorted by footprint, then b, then a.
std::vector<Monomial> delta_set(long t, long n_x, long n_y);

struct PointIndex {
  long i = 0;
  long j = 0;
  long l = 0;
};

struct XPoints {
  std::vector<Felt> points;
  std::vector<PointIndex> index;
};

/// Throws AdmissibilityError for a bad config, FieldError if ctx is not GF(cfg.q²).
XPoints build_px(const FieldCtx& ctx, const CodeConfig& cfg);

/// s_0..s_{σ−1} ∈ GF(q)*, summing to zero.
std::vector<Felt> build_s(const FieldCtx& ctx, long sigma);

std::vector<Felt> build_v(const FieldCtx& ctx, const CodeConfig& cfg, long L);

struct YPoints {
  std::vector<Felt> points;
  std::vector<Felt> w;
  /// w(j)^(q+1)
  std::vector<Felt> w_q;
};

/// Default points are the first n_Y elements of GF(q). An explicit point
/// list must be distinct; for n_Y > 2 it must also lie in GF(q).
YPoints build_py_w(const FieldCtx& ctx, const CodeConfig& cfg, std::span<const Felt> points = {});

struct EvaluationData {
  CodeConfig cfg;
  long L = 0;
  XPoints px;
  std::vector<Felt> s;
  std::vector<Felt> v;
  YPoints py;
};

EvaluationData build_evaluation_data(const FieldCtx& ctx, const CodeConfig& cfg,
                                     std::span<const Felt> y_points = {});

/// Σ a_k b_k^q
Felt hermitian_ip(const FieldCtx& ctx, std::span<const Felt> a, std::span<const Felt> b);

/// ev_{v,P_X}(X^e1)
std::vector<Felt> evaluate_x(const FieldCtx& ctx, const EvaluationData& ev, long e1);
/// ev_{w,P_Y}(Y^e2)
std::vector<Felt> evaluate_y(const FieldCtx& ctx, const EvaluationData& ev, long e2);
/// ev_{Q,P}(X^e1 Y^e2)
std::vector<Felt> evaluate(const FieldCtx& ctx, const EvaluationData& ev, Monomial mono);

struct GenMatrix {
  long q = 0;
  long n = 0;
  std::vector<Monomial> monomials;
  Matrix rows;

  long k() const { return static_cast<long>(rows.size()); }
};

/// Requires cfg.t with 2 ≤ t ≤ n_X + 1.
GenMatrix build_gen_matrix(const FieldCtx& ctx, const CodeConfig& cfg);
GenMatrix build_gen_matrix(const FieldCtx& ctx, const EvaluationData& ev, long t);

/// Rank over GF(q²) by Gaussian elimination.
long rank(const FieldCtx& ctx, Matrix m);

/// min over Δ of (n_x − a)(n_y − b); throws std::invalid_argument on empty Δ.
long footprint_bound(std::span<const Monomial> delta, long n_x, long n_y);

/**
 * CSV layout: first line "n,k,q" with the three values, then k lines of n
 * element codes.
 */
void write_matrix_csv(std::ostream& os, const GenMatrix& g);
GenMatrix read_matrix_csv(std::istream& is);

}  // namespace gmcq::evalcode

#endif  // GMCQ_EVALCODE_HPP
