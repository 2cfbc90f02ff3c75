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

#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "gmcq/evalcode.hpp"
#include "gmcq/oracle.hpp"
#include "gmcq/quantum.hpp"
#include "gmcq/selforth.hpp"
#include "support.hpp"

using namespace gmcq;
using namespace gmcq::evalcode;
namespace T = gmcq::testing;

namespace {

CodeConfig cfg(long q, long lambda, long tau, long rho, long sigma, long ny, std::optional<long> t = std::nullopt) {
  return CodeConfig{q, lambda, tau, rho, sigma, ny, t};
}

long mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

TEST_CASE("delta_set contents and size") {
  CHECK(delta_set(6, 60, 3).size() == 8);
  CHECK(delta_set(10, 42, 2).size() == 13);
  for (long ny = 1; ny <= 6; ++ny) {
    for (long t = 1; t <= 40; ++t) {
      const auto d = delta_set(t, 100, ny);
      CHECK(static_cast<long>(d.size()) == quantum::size_delta(t, ny));
      std::set<Monomial> brute;
      for (long a = 0; a < 100; ++a) {
        for (long b = 0; b < ny; ++b) {
          if ((a + 1) * (b + 1) < t) brute.insert({a, b});
        }
      }
      CHECK(std::set<Monomial>(d.begin(), d.end()) == brute);
      CHECK(std::is_sorted(d.begin(), d.end(), [](const Monomial& x, const Monomial& y) {
        const long fx = (x.e1 + 1) * (x.e2 + 1), fy = (y.e1 + 1) * (y.e2 + 1);
        return std::tie(fx, x.e2, x.e1) < std::tie(fy, y.e2, y.e1);
      }));
    }
  }
  // Truncated by n_x.
  CHECK(delta_set(10, 4, 2).size() == 4 + 4);
}

TEST_CASE("X points are distinct") {
  for (const auto& c : {cfg(8, 7, 3, 9, 2, 2), cfg(7, 3, 4, 8, 2, 3), cfg(8, 7, 3, 9, 3, 3), cfg(11, 5, 6, 12, 2, 3)}) {
    const auto ctx = gf::FieldCtx::for_q(static_cast<std::uint64_t>(c.q));
    const auto px = build_px(ctx, c);
    REQUIRE(static_cast<long>(px.points.size()) == c.n_x());
    std::set<gf::Felt> distinct(px.points.begin(), px.points.end());
    CHECK(static_cast<long>(distinct.size()) == c.n_x());
    CHECK(distinct.count(ctx.zero()) == 0);
  }
  const auto ctx = gf::FieldCtx::for_q(8);
  CHECK(build_px(ctx, cfg(8, 7, 3, 9, 2, 2)).points.size() == 42);
  CHECK_THROWS_AS(build_px(ctx, cfg(8, 7, 3, 9, 5, 2)), AdmissibilityError);
  CHECK_THROWS_AS(build_px(gf::FieldCtx::for_q(7), cfg(8, 7, 3, 9, 2, 2)), gf::FieldError);
}

TEST_CASE("norm-fibre scalars s sum to zero in GF(q)*") {
  for (std::uint64_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    const auto ctx = gf::FieldCtx::for_q(q);
    for (long sigma = 2; sigma <= 12; ++sigma) {
      const auto s = build_s(ctx, sigma);
      REQUIRE(static_cast<long>(s.size()) == sigma);
      gf::Felt sum = ctx.zero();
      for (auto x : s) {
        CHECK(x != ctx.zero());
        CHECK(ctx.in_subfield(x));
        sum = ctx.add(sum, x);
      }
      CHECK(sum == ctx.zero());
    }
  }
}

TEST_CASE("weights v solve their norm equations") {
  for (const auto& c : {cfg(8, 7, 3, 9, 2, 2), cfg(7, 3, 4, 8, 2, 3), cfg(8, 7, 3, 9, 3, 3), cfg(13, 3, 2, 7, 4, 2)}) {
    const auto ctx = gf::FieldCtx::for_q(static_cast<std::uint64_t>(c.q));
    const auto ev = build_evaluation_data(ctx, c);
    CHECK(ev.L == selforth::table1_select(c.lambda, c.tau, c.rho).L);
    const gf::Felt zl = ctx.root_of_unity(static_cast<std::uint64_t>(c.lambda));
    for (std::size_t k = 0; k < ev.v.size(); ++k) {
      const auto& idx = ev.px.index[k];
      const gf::Felt rhs = ctx.mul(ctx.pow(zl, static_cast<std::uint64_t>(mod(-idx.i * ev.L, c.lambda))), ev.s[idx.l]);
      CHECK(ctx.norm(ev.v[k]) == rhs);
    }
  }
}

TEST_CASE("Y weights span the Vandermonde kernel") {
  for (std::uint64_t q : {7u, 8u, 11u, 13u}) {
    const auto ctx = gf::FieldCtx::for_q(q);
    for (long ny = 2; ny <= static_cast<long>(q); ++ny) {
      const auto all = T::admissible_configs(static_cast<long>(q), ny, ny);
      REQUIRE_FALSE(all.empty());
      const auto& c = all.front();
      const auto py = build_py_w(ctx, c);
      REQUIRE(static_cast<long>(py.points.size()) == ny);
      for (long j = 0; j < ny; ++j) {
        CHECK(py.points[j] == ctx.embed(static_cast<std::uint64_t>(j)));
        CHECK(ctx.norm(py.w[j]) == py.w_q[j]);
      }
      for (long e = 0; e + 1 < ny; ++e) {
        gf::Felt s = ctx.zero();
        for (long j = 0; j < ny; ++j) s = ctx.add(s, ctx.mul(py.w_q[j], ctx.pow(py.points[j], e)));
        CHECK(s == ctx.zero());
      }
    }
  }
}

TEST_CASE("explicit Y points") {
  const auto ctx = gf::FieldCtx::for_q(8);
  const std::vector<gf::Felt> two{ctx.generator(), ctx.pow(ctx.generator(), 5)};
  const auto py = build_py_w(ctx, cfg(8, 7, 3, 9, 2, 2), two);
  CHECK(py.points == two);
  CHECK(py.w_q[0] == ctx.neg(ctx.one()));
  CHECK(py.w_q[1] == ctx.one());

  const std::vector<gf::Felt> dup{ctx.one(), ctx.one()};
  CHECK_THROWS(build_py_w(ctx, cfg(8, 7, 3, 9, 2, 2), dup));
  const std::vector<gf::Felt> outside{ctx.zero(), ctx.one(), ctx.generator()};
  CHECK_THROWS(build_py_w(ctx, cfg(8, 7, 3, 9, 2, 3), outside));
  const std::vector<gf::Felt> wrong_count{ctx.zero(), ctx.one(), ctx.embed(2)};
  CHECK_THROWS(build_py_w(ctx, cfg(8, 7, 3, 9, 2, 2), wrong_count));
}

TEST_CASE("Hermitian form is sesquilinear") {
  auto r = T::rng(10);
  const auto ctx = gf::FieldCtx::for_q(9);
  for (int it = 0; it < 100; ++it) {
    std::vector<gf::Felt> a(7), b(7), c(7);
    for (auto* v : {&a, &b, &c}) {
      for (auto& x : *v) x = T::random_elem(ctx, r);
    }
    const gf::Felt lam = T::random_elem(ctx, r);
    CHECK(hermitian_ip(ctx, a, b) == ctx.conjugate(hermitian_ip(ctx, b, a)));
    std::vector<gf::Felt> combo(7);
    for (int k = 0; k < 7; ++k) combo[k] = ctx.add(ctx.mul(lam, a[k]), c[k]);
    CHECK(hermitian_ip(ctx, combo, b) == ctx.add(ctx.mul(lam, hermitian_ip(ctx, a, b)), hermitian_ip(ctx, c, b)));
    CHECK(hermitian_ip(ctx, b, combo) ==
          ctx.add(ctx.mul(ctx.conjugate(lam), hermitian_ip(ctx, b, a)), hermitian_ip(ctx, b, c)));
  }
  const std::vector<gf::Felt> short_v(3);
  const std::vector<gf::Felt> long_v(4);
  CHECK_THROWS(hermitian_ip(ctx, short_v, long_v));
}

TEST_CASE("bivariate evaluation separates") {
  auto r = T::rng(11);
  for (const auto& c : {cfg(8, 7, 3, 9, 2, 3), cfg(7, 3, 4, 8, 2, 3), cfg(11, 5, 6, 12, 2, 3)}) {
    const auto ctx = gf::FieldCtx::for_q(static_cast<std::uint64_t>(c.q));
    const auto ev = build_evaluation_data(ctx, c);
    for (int it = 0; it < 100; ++it) {
      const Monomial m1{static_cast<long>(r() % c.n_x()), static_cast<long>(r() % c.ny)};
      const Monomial m2{static_cast<long>(r() % c.n_x()), static_cast<long>(r() % c.ny)};
      const auto u1 = evaluate(ctx, ev, m1), u2 = evaluate(ctx, ev, m2);
      const auto x1 = evaluate_x(ctx, ev, m1.e1), y1 = evaluate_y(ctx, ev, m1.e2);
      for (long x = 0; x < c.n_x(); ++x) {
        for (long y = 0; y < c.ny; ++y) CHECK(u1[x * c.ny + y] == ctx.mul(x1[x], y1[y]));
      }
      const gf::Felt lhs = hermitian_ip(ctx, u1, u2);
      const gf::Felt rhs = ctx.mul(hermitian_ip(ctx, x1, evaluate_x(ctx, ev, m2.e1)),
                                   hermitian_ip(ctx, y1, evaluate_y(ctx, ev, m2.e2)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("generator matrices have full rank |Δ_t|") {
  const auto ctx8 = gf::FieldCtx::for_q(8);
  const auto g = build_gen_matrix(ctx8, cfg(8, 7, 3, 9, 2, 2, 10));
  CHECK(g.k() == 13);
  CHECK(g.n == 84);
  CHECK(rank(ctx8, g.rows) == 13);
  for (const auto& c : {cfg(8, 7, 3, 9, 2, 3), cfg(7, 3, 4, 8, 2, 3), cfg(7, 3, 2, 8, 3, 6)}) {
    const auto ctx = gf::FieldCtx::for_q(static_cast<std::uint64_t>(c.q));
    const auto ev = build_evaluation_data(ctx, c);
    for (long t : {2L, 5L, 9L, 16L, c.n_x() + 1}) {
      const auto gm = build_gen_matrix(ctx, ev, t);
      CHECK(gm.k() == quantum::size_delta(t, c.ny));
      CHECK(rank(ctx, gm.rows) == gm.k());
    }
    CHECK_THROWS(build_gen_matrix(ctx, ev, 1));
    CHECK_THROWS(build_gen_matrix(ctx, ev, c.n_x() + 2));
  }
  CHECK_THROWS(build_gen_matrix(ctx8, cfg(8, 7, 3, 9, 2, 2)));
}

TEST_CASE("rank of simple matrices") {
  const auto ctx = gf::FieldCtx::for_q(4);
  const gf::Felt a = ctx.generator();
  CHECK(rank(ctx, {}) == 0);
  CHECK(rank(ctx, {{ctx.one(), a}, {a, ctx.mul(a, a)}}) == 1);
  CHECK(rank(ctx, {{ctx.one(), a}, {a, ctx.one()}}) == 2);
  CHECK(rank(ctx, {{ctx.zero(), ctx.zero()}}) == 0);
}

TEST_CASE("footprint bound") {
  const auto d = delta_set(4, 24, 2);
  CHECK(footprint_bound(d, 24, 2) == 24);
  CHECK(footprint_bound(delta_set(2, 24, 2), 24, 2) == 48);
  CHECK(footprint_bound(delta_set(10, 42, 2), 42, 2) == 39);
  CHECK_THROWS(footprint_bound({}, 24, 2));
}

TEST_CASE("matrix CSV round trip") {
  const auto ctx = gf::FieldCtx::for_q(8);
  const auto g = build_gen_matrix(ctx, cfg(8, 7, 3, 9, 2, 2, 10));
  std::stringstream ss;
  write_matrix_csv(ss, g);
  std::string first;
  std::getline(std::istringstream(ss.str()), first);
  CHECK(first == "84,13,8");
  const auto back = read_matrix_csv(ss);
  CHECK(back.n == 84);
  CHECK(back.q == 8);
  CHECK(back.rows == g.rows);

  std::istringstream bad("3,1,8\n1,2\n");
  CHECK_THROWS(read_matrix_csv(bad));
}
