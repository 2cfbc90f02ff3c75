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

#include "gmcq/selforth.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gmcq::selforth {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace

Table1Row table1_select(long lambda, long tau, long rho) {
  if (lambda <= 1 || tau <= 1 || rho <= 1) {
    throw AdmissibilityError("table1_select: lambda, tau, rho must all exceed 1");
  }
  if (std::gcd(lambda, tau) != 1) throw AdmissibilityError("table1_select: gcd(lambda, tau) must be 1");

  Table1Row row;
  row.lambda = lambda;
  row.tau = tau;
  row.rho = rho;
  if (lambda % 2 == 0) {
    row.case_id = 1;
    row.L = 2 * tau - 2;
    row.T1 = (lambda - 2) / 2;
    row.T2 = (lambda + 4 * tau - 2) / 2;
  } else if (lambda < tau || tau % 2 == 0 || rho == 2) {
    row.case_id = 2;
    row.L = tau - 2;
    row.T1 = lambda - 1;
    row.T2 = lambda + tau - 1;
    row.exceptional = tau % 2 == 1 && rho == 2 && lambda >= tau + 2;
  } else {
    row.case_id = 3;
    row.L = 2 * tau - 2;
    row.T1 = (lambda + tau - 2) / 2;
    row.T2 = (lambda + 3 * tau - 2) / 2;
  }
  return row;
}

std::vector<ExponentPair> x_failure_points(const Table1Row& row, long n_x) {
  std::vector<ExponentPair> out;
  const long base_diff = row.T2 - row.T1;
  for (long i = 0;; ++i) {
    const long sum = row.T1 + row.T2 + i * row.lambda;
    if (sum + base_diff >= 2 * n_x) break;
    for (long j = 0;; ++j) {
      const long diff = base_diff + j * row.tau;
      if (diff > sum || sum + diff >= 2 * n_x) break;
      if ((sum + diff) % 2 != 0) continue;
      out.push_back({(sum - diff) / 2, (sum + diff) / 2});
    }
  }
  return out;
}

bool on_failure_lattice(const Table1Row& row, long e1, long e1p) {
  const long sum = e1 + e1p;
  const long diff = e1p - e1;
  if (e1 < 0 || diff <= 0) return false;
  const long di = sum - (row.T1 + row.T2);
  const long dj = diff - (row.T2 - row.T1);
  return di >= 0 && dj >= 0 && di % row.lambda == 0 && dj % row.tau == 0;
}

long total_footprint(const FailurePoint& point) {
  return std::max((point.first.e1 + 1) * (point.first.e2 + 1), (point.second.e1 + 1) * (point.second.e2 + 1));
}

bool ny_guards_hold(const Table1Row& row, long ny) {
  const long C0 = row.T1 + 1;
  const long D0 = row.T2 + 1;
  return ny * C0 <= D0 + row.lambda && D0 >= row.lambda;
}

namespace {

TstarResult closed_form(const Table1Row& row, long ny) {
  TstarResult r;
  r.row = row;
  r.C0 = row.T1 + 1;
  r.D0 = row.T2 + 1;
  const long tau = row.tau;
  const long gap = ny * r.C0 - r.D0;
  long step;  // j advances in steps of 2 when τ is odd so exponents stay integral
  if (tau % 2 == 0) {
    r.k1 = std::max(floor_div(2 * (r.C0 - 1), tau), 0L);
    r.k2 = std::max(ceil_div(2 * gap, (ny + 1) * tau), 0L);
    r.k3 = std::max(floor_div(2 * gap + ny * tau, (ny + 1) * tau), 0L);
    step = 1;
  } else {
    r.k1 = std::max(floor_div(r.C0 - 1, tau), 0L);
    r.k2 = std::max(ceil_div(gap, (ny + 1) * tau), 0L);
    r.k3 = std::max(floor_div(gap + ny * tau, (ny + 1) * tau), 0L);
    step = 2;
  }

  // 2C_j = 2C0 − jτ and 2D_j = 2D0 + jτ; both even for the j used here.
  auto c_at = [&](long j) { return (2 * r.C0 - j * tau) / 2; };
  auto d_at = [&](long j) { return (2 * r.D0 + j * tau) / 2; };

  if (r.k1 < r.k2) {
    r.branch = TstarBranch::kDecreasing;
    r.j = step * r.k1;
    r.t_star = ny * c_at(r.j);
  } else if (r.k3 >= r.k2) {
    r.branch = TstarBranch::kAtCrossing;
    r.j = step * r.k2;
    r.t_star = d_at(r.j);
  } else {
    r.branch = TstarBranch::kBeforeCrossing;
    r.j = step * r.k2 - step;
    r.t_star = ny * c_at(r.j);
  }
  r.witness = FailurePoint{Monomial{c_at(r.j) - 1, ny - 1}, Monomial{d_at(r.j) - 1, 0}};
  if (r.witness.first.e1 < 0) throw std::logic_error("closed-form T*: witness exponent is negative");
  return r;
}

}  // namespace

TstarResult tstar_two_points(long lambda, long tau, long rho, long sigma) {
  TstarResult r = closed_form(table1_select(lambda, tau, rho), 2);
  if (r.witness.second.e1 >= lambda * tau * sigma) {
    throw std::logic_error("closed-form T*: witness exponent exceeds n_X");
  }
  return r;
}

TstarResult tstar_ny_points(long lambda, long tau, long rho, long sigma, long ny) {
  if (ny < 2) throw AdmissibilityError("tstar_ny_points: ny must be at least 2");
  if (ny == 2) return tstar_two_points(lambda, tau, rho, sigma);
  const Table1Row row = table1_select(lambda, tau, rho);
  if (!ny_guards_hold(row, ny)) {
    TstarResult r;
    r.row = row;
    r.C0 = row.T1 + 1;
    r.D0 = row.T2 + 1;
    r.status = TstarStatus::kGuardFailed;
    return r;
  }
  TstarResult r = closed_form(row, ny);
  if (r.witness.second.e1 >= lambda * tau * sigma) {
    throw std::logic_error("closed-form T*: witness exponent exceeds n_X");
  }
  return r;
}

TstarResult tstar(const CodeConfig& cfg) {
  require_admissible(cfg);
  return tstar_ny_points(cfg.lambda, cfg.tau, cfg.rho, cfg.sigma, cfg.ny);
}

std::string_view to_string(TstarBranch branch) {
  switch (branch) {
    case TstarBranch::kDecreasing:
      return "k1<k2";
    case TstarBranch::kAtCrossing:
      return "k3=k2<=k1";
    case TstarBranch::kBeforeCrossing:
      return "k3<k2<=k1";
  }
  return "?";
}

}  // namespace gmcq::selforth
