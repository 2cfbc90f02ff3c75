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

// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "gmcq/evalcode.hpp"
#include "gmcq/gf.hpp"
#include "gmcq/oracle.hpp"
#include "gmcq/presets.hpp"
#include "gmcq/quantum.hpp"
#include "gmcq/selforth.hpp"
#include "support.hpp"

using namespace gmcq;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

CodeConfig cfg(long q, long lambda, long tau, long rho, long sigma, long ny) {
  return CodeConfig{q, lambda, tau, rho, sigma, ny, std::nullopt};
}

long mod(long a, long m) { return ((a % m) + m) % m; }

Outcome table2_reproduction() {
  const auto c = cfg(8, 7, 3, 9, 2, 2);
  const auto ctx = gf::FieldCtx::for_q(8);
  const auto ev = evalcode::build_evaluation_data(ctx, c);
  const auto published = *presets::preset("table2");
  long good = 0;
  for (const auto& row : published.rows) {
    const long d = *row.config.t;
    const auto g = evalcode::build_gen_matrix(ctx, ev, d);
    const long k = c.n() - 2 * quantum::size_delta(d, 2);
    const bool ok = oracle::is_hermitian_self_orthogonal(ctx, g) && evalcode::rank(ctx, g.rows) == g.k() &&
                    g.k() == quantum::size_delta(d, 2) && c.n() == 84 && row.n == 84 && row.k == k;
    good += ok;
  }
  std::ostringstream os;
  os << good << "/" << published.rows.size() << " rows self-orthogonal with matching (n, k)";
  return {good == 9 && published.rows.size() == 9, os.str()};
}

Outcome worked_example() {
  const auto c = cfg(8, 7, 3, 9, 2, 3);
  const auto ts = selforth::tstar(c);
  const bool closed = ts.status == selforth::TstarStatus::kClosedForm && ts.t_star == 11 &&
                      ts.witness == selforth::FailurePoint{{1, 2}, {10, 0}};
  const auto ctx = gf::FieldCtx::for_q(8);
  const auto ev = evalcode::build_evaluation_data(ctx, c);
  long good = 0;
  for (long t = 2; t <= 15; ++t) good += oracle::is_hermitian_self_orthogonal(ctx, evalcode::build_gen_matrix(ctx, ev, t));
  std::ostringstream os;
  os << "T*=" << ts.t_star << " witness X^" << ts.witness.first.e1 << "Y^" << ts.witness.first.e2 << ", X^"
     << ts.witness.second.e1 << "Y^" << ts.witness.second.e2 << "; oracle self-orthogonal for " << good
     << "/14 of t=2..15";
  return {closed && good == 14, os.str()};
}

Outcome qgv_flags() {
  long rows = 0, mismatches = 0;
  std::ostringstream os;
  for (const char* name : {"table2", "table3", "table4", "tableq8", "table5"}) {
    const auto p = *presets::preset(name);
    for (const auto& row : p.rows) {
      ++rows;
      if (quantum::qgv_beats(row.config.q, row.n, row.k, *row.config.t) != row.beats_qgv) ++mismatches;
    }
    os << name << "=" << p.rows.size() << " ";
  }
  os << "rows; " << mismatches << " mismatches of " << rows;
  return {mismatches == 0, os.str()};
}

Outcome tstar_sweep() {
  long compared = 0, two_point = 0, multi_point = 0, mismatches = 0;
  for (long q : {7L, 8L, 11L, 13L}) {
    for (const auto& c : testing::admissible_configs(q, 2, 5)) {
      const auto ts = selforth::tstar(c);
      if (ts.status != selforth::TstarStatus::kClosedForm) continue;
      ++compared;
      (c.ny == 2 ? two_point : multi_point)++;
      if (ts.t_star != oracle::tstar_bruteforce(c.lambda, c.tau, c.rho, c.sigma, c.ny)) ++mismatches;
    }
  }
  std::ostringstream os;
  os << compared << " configs (" << two_point << " with n_Y=2, " << multi_point << " with n_Y in 3..5), " << mismatches
     << " mismatches";
  return {compared >= 50 && two_point > 0 && multi_point > 0 && mismatches == 0, os.str()};
}

Outcome containment() {
  long pairs = 0, violations = 0, scan_mismatches = 0, configs = 0;
  for (auto f : {quantum::Family::kFam1, quantum::Family::kFam2, quantum::Family::kFam3}) {
    for (long q = 4; q <= 11; ++q) {
      CodeConfig c;
      try {
        c = quantum::family_config(f, q);
      } catch (const AdmissibilityError&) {
        continue;
      }
      ++configs;
      const auto ctx = gf::FieldCtx::for_q(static_cast<std::uint64_t>(q));
      const auto ev = evalcode::build_evaluation_data(ctx, c);
      const auto row = selforth::table1_select(c.lambda, c.tau, c.rho);
      const auto lattice_v = selforth::x_failure_points(row, c.n_x());
      const std::set<selforth::ExponentPair> lattice(lattice_v.begin(), lattice_v.end());
      for (const auto& p : oracle::exact_dx(ctx, ev)) {
        if (p.e1 > p.e1p) continue;
        ++pairs;
        if (p.e1 == p.e1p || !lattice.count(p)) ++violations;
      }
      for (long a = 0; a < c.n_x(); ++a) {
        for (long b = a + 1; b < c.n_x(); ++b) {
          const bool congruent = mod(a + b - row.L, c.lambda) == 0 && mod(a - b, c.tau) == 0;
          const bool ignorable = row.exceptional && mod(a - b, c.rho) == 0;
          const bool on = lattice.count({a, b}) > 0;
          if (on != congruent && !(congruent && !on && ignorable)) ++scan_mismatches;
        }
      }
    }
  }
  std::ostringstream os;
  os << configs << " family configs, " << pairs << " exact D_X pairs, " << violations << " outside the lattice, "
     << scan_mismatches << " lattice/scan differences";
  return {configs == 3 && violations == 0 && scan_mismatches == 0, os.str()};
}

Outcome dual_distance() {
  const auto ctx = gf::FieldCtx::for_q(7);
  const auto ev = evalcode::build_evaluation_data(ctx, cfg(7, 3, 4, 8, 2, 2));
  const auto budgets = oracle::Budgets::from_env();
  bool ok = true;
  std::ostringstream os;
  for (long t : {2L, 3L, 4L}) {
    const auto r = oracle::dual_min_distance(ctx, evalcode::build_gen_matrix(ctx, ev, t), t + 2, budgets.rank_tests);
    os << "t=" << t << ":" << r.value << "(" << oracle::to_string(r.status) << ") ";
    ok = ok && r.status == oracle::SearchStatus::kExact && r.value == t;
  }
  return {ok, os.str()};
}

Outcome footprint_equality() {
  const auto c = cfg(7, 3, 4, 8, 2, 2);
  const auto ctx = gf::FieldCtx::for_q(7);
  const auto ev = evalcode::build_evaluation_data(ctx, c);
  const auto budgets = oracle::Budgets::from_env();
  bool ok = true;
  std::ostringstream os;
  for (long t : {2L, 3L, 4L}) {
    const auto g = evalcode::build_gen_matrix(ctx, ev, t);
    const long fb = evalcode::footprint_bound(g.monomials, c.n_x(), c.ny);
    const auto r = oracle::min_distance_primal(ctx, g, budgets.codewords);
    os << "t=" << t << ": d=" << r.value << " bound=" << fb << " ";
    ok = ok && g.k() <= 4 && r.status == oracle::SearchStatus::kExact && r.value == fb;
  }
  return {ok, os.str()};
}

Outcome field_layer() {
  long norms = 0, roots = 0, failures = 0;
  for (std::uint64_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    const auto ctx = gf::FieldCtx::for_q(q);
    for (std::uint64_t c = 1; c < q; ++c) {
      const gf::Felt a = ctx.embed(c);
      ++norms;
      if (ctx.norm(ctx.norm_solve(a)) != a) ++failures;
    }
    for (long t : testing::divisors(static_cast<long>(ctx.q2() - 1))) {
      ++roots;
      if (testing::slow_order(ctx, ctx.root_of_unity(static_cast<std::uint64_t>(t))) != static_cast<std::uint64_t>(t)) {
        ++failures;
      }
    }
  }
  std::ostringstream os;
  os << norms << " norm equations, " << roots << " roots of unity, " << failures << " failures";
  return {failures == 0, os.str()};
}

Outcome beat_gv_instances() {
  long checked = 0, failures = 0;
  for (long q : {11L, 13L, 16L, 32L}) {
    const long n = 2 * (q * q - 1);
    for (long d = 5; d <= 3 * q / 2; ++d) {
      ++checked;
      if (!quantum::qgv_beats(q, n, n - 2 * quantum::size_delta(d, 2), d)) ++failures;
    }
  }
  std::ostringstream os;
  os << checked << " (q, d) instances, " << failures << " not beating QGV";
  return {failures == 0, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 q=8 two-point codes, d=2..10", table2_reproduction},
      {"AC2 worked example", worked_example},
      {"AC3 QGV flags", qgv_flags},
      {"AC4 closed-form T* vs brute force", tstar_sweep},
      {"AC5 D_X contained in the failure lattice", containment},
      {"AC6 Hermitian dual distance", dual_distance},
      {"AC7 footprint bound is attained", footprint_equality},
      {"AC8 field layer", field_layer},
      {"AC9 beating QGV at n = 2(q^2-1)", beat_gv_instances},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    failed += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
