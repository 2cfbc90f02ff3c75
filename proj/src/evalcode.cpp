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

#include "gmcq/evalcode.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "gmcq/selforth.hpp"

namespace gmcq::evalcode {

namespace {

void require_field(const FieldCtx& ctx, const CodeConfig& cfg) {
  if (static_cast<long>(ctx.q()) != cfg.q) {
    throw gf::FieldError("field context is GF(" + std::to_string(ctx.q()) + "^2) but config has q=" +
                         std::to_string(cfg.q));
  }
}

}  // namespace

std::vector<Monomial> delta_set(long t, long n_x, long n_y) {
  std::vector<Monomial> out;
  for (long b = 0; b < n_y && b + 1 < t; ++b) {
    for (long a = 0; a < n_x && (a + 1) * (b + 1) < t; ++a) out.push_back({a, b});
  }
  std::sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) {
    const long fx = (x.e1 + 1) * (x.e2 + 1);
    const long fy = (y.e1 + 1) * (y.e2 + 1);
    if (fx != fy) return fx < fy;
    if (x.e2 != y.e2) return x.e2 < y.e2;
    return x.e1 < y.e1;
  });
  return out;
}

XPoints build_px(const FieldCtx& ctx, const CodeConfig& cfg) {
  require_admissible(cfg);
  require_field(ctx, cfg);
  const Felt z_lambda = ctx.root_of_unity(static_cast<std::uint64_t>(cfg.lambda));
  const Felt z_tau = ctx.root_of_unity(static_cast<std::uint64_t>(cfg.tau));
  const Felt z_rho = ctx.root_of_unity(static_cast<std::uint64_t>(cfg.rho));
  XPoints px;
  px.points.reserve(static_cast<std::size_t>(cfg.n_x()));
  for (long i = 0; i < cfg.lambda; ++i) {
    for (long j = 0; j < cfg.tau; ++j) {
      for (long l = 0; l < cfg.sigma; ++l) {
        px.points.push_back(ctx.mul(ctx.mul(ctx.pow(z_lambda, i), ctx.pow(z_tau, j)), ctx.pow(z_rho, l)));
        px.index.push_back({i, j, l});
      }
    }
  }
  return px;
}

std::vector<Felt> build_s(const FieldCtx& ctx, long sigma) {
  if (sigma < 2) throw AdmissibilityError("build_s: sigma must be at least 2");
  if (sigma == 2) return {ctx.one(), ctx.neg(ctx.one())};
  if (ctx.q() <= 2) throw AdmissibilityError("build_s: sigma >= 3 needs q > 2");
  std::vector<Felt> s(static_cast<std::size_t>(sigma), ctx.one());
  const Felt forbidden = ctx.from_int(-(sigma - 2));
  std::optional<Felt> pick;
  for (std::uint64_t c = 1; c < ctx.q() && !pick; ++c) {
    const Felt cand = ctx.embed(c);
    if (cand != ctx.zero() && cand != forbidden) pick = cand;
  }
  if (!pick) throw AdmissibilityError("build_s: no admissible s_{sigma-2}");
  s[static_cast<std::size_t>(sigma - 2)] = *pick;
  Felt sum = ctx.zero();
  for (long l = 0; l + 1 < sigma; ++l) sum = ctx.add(sum, s[static_cast<std::size_t>(l)]);
  s[static_cast<std::size_t>(sigma - 1)] = ctx.neg(sum);
  return s;
}

std::vector<Felt> build_v(const FieldCtx& ctx, const CodeConfig& cfg, long L) {
  require_admissible(cfg);
  require_field(ctx, cfg);
  const auto s = build_s(ctx, cfg.sigma);
  const Felt z_lambda = ctx.root_of_unity(static_cast<std::uint64_t>(cfg.lambda));
  std::vector<Felt> v;
  v.reserve(static_cast<std::size_t>(cfg.n_x()));
  for (long i = 0; i < cfg.lambda; ++i) {
    // ζ_λ^(−iL), exponent reduced mod λ
    const long e = ((-i * L) % cfg.lambda + cfg.lambda) % cfg.lambda;
    const Felt twist = ctx.pow(z_lambda, static_cast<std::uint64_t>(e));
    for (long j = 0; j < cfg.tau; ++j) {
      for (long l = 0; l < cfg.sigma; ++l) {
        v.push_back(ctx.norm_solve(ctx.mul(twist, s[static_cast<std::size_t>(l)])));
      }
    }
  }
  return v;
}

YPoints build_py_w(const FieldCtx& ctx, const CodeConfig& cfg, std::span<const Felt> points) {
  require_field(ctx, cfg);
  if (cfg.ny < 2 || cfg.ny > cfg.q) throw AdmissibilityError("build_py_w: 2 <= ny <= q required");
  YPoints py;
  if (points.empty()) {
    for (long c = 0; c < cfg.ny; ++c) py.points.push_back(ctx.embed(static_cast<std::uint64_t>(c)));
  } else {
    if (static_cast<long>(points.size()) != cfg.ny) {
      throw AdmissibilityError("build_py_w: expected " + std::to_string(cfg.ny) + " Y-points");
    }
    py.points.assign(points.begin(), points.end());
  }
  const bool in_subfield = std::all_of(py.points.begin(), py.points.end(),
                                       [&](Felt y) { return ctx.in_subfield(y); });
  if (!in_subfield && cfg.ny > 2) throw AdmissibilityError("build_py_w: Y-points must lie in GF(q) when ny > 2");
  if (in_subfield) {
    py.w_q = ctx.vandermonde_kernel(py.points);
  } else {
    if (py.points[0] == py.points[1]) throw gf::FieldError("build_py_w: repeated Y-point");
    // Two arbitrary points only need w_0^(q+1) + w_1^(q+1) = 0.
    py.w_q = {ctx.neg(ctx.one()), ctx.one()};
  }
  for (Felt a : py.w_q) py.w.push_back(ctx.norm_solve(a));
  return py;
}

EvaluationData build_evaluation_data(const FieldCtx& ctx, const CodeConfig& cfg, std::span<const Felt> y_points) {
  EvaluationData ev;
  ev.cfg = cfg;
  ev.L = selforth::table1_select(cfg.lambda, cfg.tau, cfg.rho).L;
  ev.px = build_px(ctx, cfg);
  ev.s = build_s(ctx, cfg.sigma);
  ev.v = build_v(ctx, cfg, ev.L);
  ev.py = build_py_w(ctx, cfg, y_points);
  return ev;
}

Felt hermitian_ip(const FieldCtx& ctx, std::span<const Felt> a, std::span<const Felt> b) {
  if (a.size() != b.size()) throw std::invalid_argument("hermitian_ip: length mismatch");
  Felt acc = ctx.zero();
  for (std::size_t k = 0; k < a.size(); ++k) acc = ctx.add(acc, ctx.mul(a[k], ctx.conjugate(b[k])));
  return acc;
}

std::vector<Felt> evaluate_x(const FieldCtx& ctx, const EvaluationData& ev, long e1) {
  std::vector<Felt> out(ev.px.points.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = ctx.mul(ev.v[k], ctx.pow(ev.px.points[k], static_cast<std::uint64_t>(e1)));
  }
  return out;
}

std::vector<Felt> evaluate_y(const FieldCtx& ctx, const EvaluationData& ev, long e2) {
  std::vector<Felt> out(ev.py.points.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = ctx.mul(ev.py.w[k], ctx.pow(ev.py.points[k], static_cast<std::uint64_t>(e2)));
  }
  return out;
}

std::vector<Felt> evaluate(const FieldCtx& ctx, const EvaluationData& ev, Monomial mono) {
  const auto xs = evaluate_x(ctx, ev, mono.e1);
  const auto ys = evaluate_y(ctx, ev, mono.e2);
  std::vector<Felt> out;
  out.reserve(xs.size() * ys.size());
  for (Felt x : xs) {
    for (Felt y : ys) out.push_back(ctx.mul(x, y));
  }
  return out;
}

GenMatrix build_gen_matrix(const FieldCtx& ctx, const EvaluationData& ev, long t) {
  const CodeConfig& cfg = ev.cfg;
  if (t < 2) throw AdmissibilityError("t >= 2 required (t=" + std::to_string(t) + ")");
  if (t > cfg.n_x() + 1) {
    throw AdmissibilityError("t=" + std::to_string(t) + " needs X-exponents up to " + std::to_string(t - 2) +
                             " but n_X=" + std::to_string(cfg.n_x()));
  }
  GenMatrix g;
  g.q = cfg.q;
  g.n = cfg.n();
  g.monomials = delta_set(t, cfg.n_x(), cfg.ny);
  g.rows.reserve(g.monomials.size());
  for (const Monomial& mono : g.monomials) g.rows.push_back(evaluate(ctx, ev, mono));
  return g;
}

GenMatrix build_gen_matrix(const FieldCtx& ctx, const CodeConfig& cfg) {
  if (!cfg.t) throw AdmissibilityError("build_gen_matrix: t is not set");
  return build_gen_matrix(ctx, build_evaluation_data(ctx, cfg), *cfg.t);
}

long rank(const FieldCtx& ctx, Matrix m) {
  long r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
    std::size_t pivot = static_cast<std::size_t>(r);
    while (pivot < rows && m[pivot][c] == ctx.zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[static_cast<std::size_t>(r)]);
    auto& prow = m[static_cast<std::size_t>(r)];
    const Felt scale = ctx.inv(prow[c]);
    for (std::size_t k = c; k < cols; ++k) prow[k] = ctx.mul(prow[k], scale);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(r) || m[i][c] == ctx.zero()) continue;
      const Felt f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] = ctx.sub(m[i][k], ctx.mul(f, prow[k]));
    }
    ++r;
  }
  return r;
}

long footprint_bound(std::span<const Monomial> delta, long n_x, long n_y) {
  if (delta.empty()) throw std::invalid_argument("footprint_bound: empty monomial set");
  long best = n_x * n_y;
  for (const Monomial& mono : delta) best = std::min(best, (n_x - mono.e1) * (n_y - mono.e2));
  return best;
}

void write_matrix_csv(std::ostream& os, const GenMatrix& g) {
  os << g.n << ',' << g.k() << ',' << g.q << '\n';
  for (const auto& row : g.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) os << ',';
      os << row[k].code;
    }
    os << '\n';
  }
}

GenMatrix read_matrix_csv(std::istream& is) {
  auto split = [](const std::string& line) {
    std::vector<long> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(std::stol(cell));
    return out;
  };
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("matrix csv: missing header");
  const auto header = split(line);
  if (header.size() != 3) throw std::invalid_argument("matrix csv: header must be n,k,q");
  GenMatrix g;
  g.n = header[0];
  g.q = header[2];
  for (long r = 0; r < header[1]; ++r) {
    if (!std::getline(is, line)) throw std::invalid_argument("matrix csv: missing row");
    const auto cells = split(line);
    if (static_cast<long>(cells.size()) != g.n) throw std::invalid_argument("matrix csv: row length mismatch");
    std::vector<Felt> row;
    row.reserve(cells.size());
    for (long c : cells) row.push_back(Felt{static_cast<std::uint32_t>(c)});
    g.rows.push_back(std::move(row));
  }
  return g;
}

}  // namespace gmcq::evalcode
