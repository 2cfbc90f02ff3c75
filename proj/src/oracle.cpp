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

#include "gmcq/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace gmcq::oracle {

using gf::Felt;
using gf::FieldCtx;

namespace {

// Σ_k norm_k · point_k^(e + q e')
std::vector<ExponentPair> nonzero_pairs(const FieldCtx& ctx, const std::vector<Felt>& points,
                                        const std::vector<Felt>& weights, long limit) {
  std::vector<Felt> norms(weights.size());
  for (std::size_t k = 0; k < weights.size(); ++k) norms[k] = ctx.norm(weights[k]);
  const std::uint64_t q = ctx.q();
  std::vector<ExponentPair> out;
  for (long e = 0; e < limit; ++e) {
    for (long ep = 0; ep < limit; ++ep) {
      const std::uint64_t exponent = static_cast<std::uint64_t>(e) + q * static_cast<std::uint64_t>(ep);
      Felt acc = ctx.zero();
      for (std::size_t k = 0; k < points.size(); ++k) {
        acc = ctx.add(acc, ctx.mul(norms[k], ctx.pow(points[k], exponent)));
      }
      if (acc != ctx.zero()) out.push_back({e, ep});
    }
  }
  return out;
}

}  // namespace

std::vector<ExponentPair> exact_dx(const FieldCtx& ctx, const evalcode::EvaluationData& ev) {
  return nonzero_pairs(ctx, ev.px.points, ev.v, ev.cfg.n_x());
}

std::vector<ExponentPair> exact_dy(const FieldCtx& ctx, const evalcode::EvaluationData& ev) {
  return nonzero_pairs(ctx, ev.py.points, ev.py.w, ev.cfg.ny);
}

std::vector<FailurePoint> exact_d(const FieldCtx& ctx, const evalcode::EvaluationData& ev, long x_limit) {
  x_limit = std::min(x_limit, ev.cfg.n_x());
  std::vector<Monomial> monos;
  for (long a = 0; a < x_limit; ++a) {
    for (long b = 0; b < ev.cfg.ny; ++b) monos.push_back({a, b});
  }
  std::vector<std::vector<Felt>> vecs;
  std::vector<std::vector<Felt>> conj;
  for (const Monomial& m : monos) {
    vecs.push_back(evalcode::evaluate(ctx, ev, m));
    std::vector<Felt> c(vecs.back().size());
    std::transform(vecs.back().begin(), vecs.back().end(), c.begin(), [&](Felt x) { return ctx.conjugate(x); });
    conj.push_back(std::move(c));
  }
  std::vector<FailurePoint> out;
  for (std::size_t a = 0; a < monos.size(); ++a) {
    for (std::size_t b = 0; b < monos.size(); ++b) {
      Felt acc = ctx.zero();
      for (std::size_t k = 0; k < vecs[a].size(); ++k) acc = ctx.add(acc, ctx.mul(vecs[a][k], conj[b][k]));
      if (acc != ctx.zero()) out.push_back({monos[a], monos[b]});
    }
  }
  return out;
}

OrthoReport ortho_report(const FieldCtx& ctx, const evalcode::EvaluationData& ev) {
  OrthoReport rep;
  rep.d_x = exact_dx(ctx, ev);
  rep.d_y = exact_dy(ctx, ev);
  const long cap = ev.cfg.n_x() + 1;
  long best = std::numeric_limits<long>::max();
  for (const auto& x : rep.d_x) {
    for (const auto& y : rep.d_y) {
      const FailurePoint pt{Monomial{x.e1, y.e1}, Monomial{x.e1p, y.e1p}};
      const long fp = selforth::total_footprint(pt);
      if (fp < best) {
        best = fp;
        rep.first_failure = pt;
      }
    }
  }
  rep.max_self_orthogonal_t = std::min(best, cap);
  return rep;
}

bool is_hermitian_self_orthogonal(const FieldCtx& ctx, const evalcode::GenMatrix& g) {
  std::vector<std::vector<Felt>> conj(g.rows.size());
  for (std::size_t r = 0; r < g.rows.size(); ++r) {
    conj[r].resize(g.rows[r].size());
    std::transform(g.rows[r].begin(), g.rows[r].end(), conj[r].begin(), [&](Felt x) { return ctx.conjugate(x); });
  }
  // a·b^q vanishes iff b·a^q does, so unordered pairs suffice.
  for (std::size_t a = 0; a < g.rows.size(); ++a) {
    for (std::size_t b = a; b < g.rows.size(); ++b) {
      Felt acc = ctx.zero();
      for (std::size_t k = 0; k < g.rows[a].size(); ++k) acc = ctx.add(acc, ctx.mul(g.rows[a][k], conj[b][k]));
      if (acc != ctx.zero()) return false;
    }
  }
  return true;
}

long tstar_bruteforce(long lambda, long tau, long rho, long sigma, long ny) {
  const auto row = selforth::table1_select(lambda, tau, rho);
  const long n_x = lambda * tau * sigma;
  const auto mod = [](long a, long m) { return ((a % m) + m) % m; };
  long best = n_x + 1;
  for (long e1 = 0; e1 < n_x && e1 + 1 < best; ++e1) {
    for (long e1p = 0; e1p < n_x && e1p + 1 < best; ++e1p) {
      if (e1 == e1p) continue;
      if (mod(e1 + e1p - row.L, lambda) != 0 || mod(e1 - e1p, tau) != 0) continue;
      if (row.exceptional && !selforth::on_failure_lattice(row, std::min(e1, e1p), std::max(e1, e1p))) continue;
      for (long e2 = 0; e2 < ny; ++e2) {
        for (long e2p = 0; e2p < ny; ++e2p) {
          if (e2 + e2p <= ny - 2) continue;
          best = std::min(best, std::max((e1 + 1) * (e2 + 1), (e1p + 1) * (e2p + 1)));
        }
      }
    }
  }
  return best;
}

std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::kExact:
      return "exact";
    case SearchStatus::kAtLeast:
      return "lower-bound";
    case SearchStatus::kBudgetExceeded:
      return "budget-exceeded";
  }
  return "?";
}

Budgets Budgets::from_env() {
  Budgets b;
  if (const char* s = std::getenv("GMCQ_CODEWORD_BUDGET")) b.codewords = std::stoull(s);
  if (const char* s = std::getenv("GMCQ_RANK_TEST_BUDGET")) b.rank_tests = std::stoull(s);
  return b;
}

namespace {

class PrimalSearch {
 public:
  PrimalSearch(const FieldCtx& ctx, const evalcode::GenMatrix& g) : ctx_(ctx), g_(g) {
    const std::uint64_t field = ctx.q2();
    scaled_.resize(g.rows.size());
    for (std::size_t r = 0; r < g.rows.size(); ++r) {
      scaled_[r].resize(field);
      for (std::uint64_t c = 0; c < field; ++c) {
        auto& v = scaled_[r][c];
        v.resize(g.rows[r].size());
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = ctx.mul(Felt{static_cast<std::uint32_t>(c)}, g.rows[r][k]);
      }
    }
    partial_.assign(g.rows.size() + 1, std::vector<Felt>(static_cast<std::size_t>(g.n), Felt{}));
  }

  // Codewords are enumerated up to scalars: the first non-zero coefficient is 1.
  DistanceResult run() {
    best_ = g_.n + 1;
    for (std::size_t lead = 0; lead < g_.rows.size(); ++lead) {
      partial_[lead + 1] = g_.rows[lead];
      descend(lead + 1);
    }
    return {SearchStatus::kExact, best_, visited_};
  }

 private:
  void descend(std::size_t depth) {
    if (depth == g_.rows.size()) {
      ++visited_;
      long w = 0;
      for (Felt x : partial_[depth]) w += x.code != 0;
      best_ = std::min(best_, w);
      return;
    }
    const auto& prev = partial_[depth];
    auto& next = partial_[depth + 1];
    for (std::size_t c = 0; c < scaled_[depth].size(); ++c) {
      const auto& add = scaled_[depth][c];
      for (std::size_t k = 0; k < next.size(); ++k) next[k] = ctx_.add(prev[k], add[k]);
      descend(depth + 1);
    }
  }

  const FieldCtx& ctx_;
  const evalcode::GenMatrix& g_;
  std::vector<std::vector<std::vector<Felt>>> scaled_;
  std::vector<std::vector<Felt>> partial_;
  long best_ = 0;
  std::uint64_t visited_ = 0;
};

}  // namespace

DistanceResult min_distance_primal(const FieldCtx& ctx, const evalcode::GenMatrix& g, std::uint64_t budget) {
  if (g.rows.empty()) throw std::invalid_argument("min_distance_primal: empty generator matrix");
  std::uint64_t total = 1;
  for (std::size_t r = 0; r < g.rows.size(); ++r) {
    if (total > budget / ctx.q2()) return {SearchStatus::kBudgetExceeded, 0, 0};
    total *= ctx.q2();
  }
  if (total > budget) return {SearchStatus::kBudgetExceeded, 0, 0};
  return PrimalSearch(ctx, g).run();
}

namespace {

struct EchelonRow {
  std::size_t pivot;
  std::vector<Felt> v;  // v[pivot] == 1
};

class DualSearch {
 public:
  DualSearch(const FieldCtx& ctx, const evalcode::GenMatrix& g, std::uint64_t budget) : ctx_(ctx), budget_(budget) {
    const std::size_t k = g.rows.size();
    cols_.assign(static_cast<std::size_t>(g.n), std::vector<Felt>(k));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < cols_.size(); ++c) cols_[c][r] = ctx.conjugate(g.rows[r][c]);
    }
  }

  DistanceResult run(long d_max) {
    for (long size = 1; size <= d_max; ++size) {
      std::vector<EchelonRow> basis;
      if (dependent_of_size(0, size, basis)) return {SearchStatus::kExact, size, work_};
      if (exhausted_) return {SearchStatus::kBudgetExceeded, size, work_};
    }
    return {SearchStatus::kAtLeast, d_max + 1, work_};
  }

 private:
  // Reduces v against the basis; returns the reduced vector.
  std::vector<Felt> reduce(std::vector<Felt> v, const std::vector<EchelonRow>& basis) const {
    for (const auto& b : basis) {
      const Felt f = v[b.pivot];
      if (f == ctx_.zero()) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = ctx_.sub(v[i], ctx_.mul(f, b.v[i]));
    }
    return v;
  }

  // Depth-first over column subsets: `basis` spans an independent prefix,
  // and the search succeeds when the size-th column reduces to zero.
  bool dependent_of_size(std::size_t start, long remaining, std::vector<EchelonRow>& basis) {
    for (std::size_t c = start; c < cols_.size(); ++c) {
      if (++work_ > budget_) {
        exhausted_ = true;
        return false;
      }
      auto reduced = reduce(cols_[c], basis);
      const auto nz = std::find_if(reduced.begin(), reduced.end(), [&](Felt x) { return x != ctx_.zero(); });
      if (remaining == 1) {
        if (nz == reduced.end()) return true;
        continue;
      }
      if (nz == reduced.end()) continue;  // a smaller dependent set exists; already ruled out
      const std::size_t pivot = static_cast<std::size_t>(nz - reduced.begin());
      const Felt scale = ctx_.inv(*nz);
      for (auto& x : reduced) x = ctx_.mul(x, scale);
      basis.push_back({pivot, std::move(reduced)});
      const bool found = dependent_of_size(c + 1, remaining - 1, basis);
      basis.pop_back();
      if (found || exhausted_) return found;
    }
    return false;
  }

  const FieldCtx& ctx_;
  std::uint64_t budget_;
  std::vector<std::vector<Felt>> cols_;
  std::uint64_t work_ = 0;
  bool exhausted_ = false;
};

}  // namespace

DistanceResult dual_min_distance(const FieldCtx& ctx, const evalcode::GenMatrix& g, long d_max, std::uint64_t budget) {
  if (g.rows.empty()) throw std::invalid_argument("dual_min_distance: empty generator matrix");
  if (d_max < 1) throw std::invalid_argument("dual_min_distance: d_max must be positive");
  return DualSearch(ctx, g, budget).run(d_max);
}

}  // namespace gmcq::oracle
