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

#include "gmcq/quantum.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <tuple>

#include "gmcq/gf.hpp"
#include "gmcq/selforth.hpp"

namespace gmcq::quantum {

using boost::multiprecision::cpp_int;

long size_delta(long t, long ny) {
  if (t < 1 || ny < 1) throw std::invalid_argument("size_delta: t >= 1 and ny >= 1 required");
  long total = 0;
  for (long i = 1; i <= ny; ++i) total += (t - 1) / i;
  return total;
}

long singleton_defect(long n, long k, long d) { return n + 2 - k - 2 * d; }

long singleton_defect(const QuantumRecord& rec) { return singleton_defect(rec.n, rec.k, rec.d); }

bool qgv_beats(long q, long n, long k, long d) {
  if (q < 2) throw std::invalid_argument("qgv_beats: q >= 2 required");
  if (!(n > k && k >= 2)) throw std::invalid_argument("qgv_beats: n > k >= 2 required");
  if (d < 2) throw std::invalid_argument("qgv_beats: d >= 2 required");
  if ((n - k) % 2 != 0) throw std::invalid_argument("qgv_beats: n and k must have the same parity");

  const cpp_int qq = q;
  const cpp_int q2m1 = qq * qq - 1;
  const cpp_int numerator = boost::multiprecision::pow(qq, static_cast<unsigned>(n - k + 2)) - 1;
  if (numerator % q2m1 != 0) throw std::logic_error("qgv_beats: q^(n-k+2)-1 not divisible by q^2-1");
  const cpp_int lhs = numerator / q2m1;

  cpp_int rhs = 0;
  cpp_int binom = 1;   // C(n, i)
  cpp_int weight = 1;  // (q²−1)^(i−1)
  for (long i = 1; i <= d - 1; ++i) {
    binom = binom * (n - i + 1) / i;
    rhs += weight * binom;
    weight *= q2m1;
  }
  return lhs < rhs;
}

QuantumRecord stabilizer_params(const CodeConfig& cfg, long d, bool oracle_confirmed) {
  require_admissible(cfg);
  if (d < 2) throw AdmissibilityError("stabilizer_params: d >= 2 required");
  if (d > cfg.n_x() + 1) throw AdmissibilityError("stabilizer_params: d exceeds n_X + 1");
  const auto ts = selforth::tstar(cfg);
  QuantumRecord rec;
  if (ts.status == selforth::TstarStatus::kClosedForm && d <= ts.t_star) {
    rec.certificate = Certificate::kClosedForm;
  } else if (oracle_confirmed) {
    rec.certificate = Certificate::kOracle;
  } else {
    throw std::domain_error("d=" + std::to_string(d) + " is outside the closed-form range for " + to_string(cfg) +
                            "; confirm self-orthogonality with the oracle");
  }
  rec.q = cfg.q;
  rec.n = cfg.n();
  rec.k = rec.n - 2 * size_delta(d, cfg.ny);
  rec.d = d;
  rec.defect = singleton_defect(rec);
  rec.beats_qgv = rec.k >= 2 && qgv_beats(rec.q, rec.n, rec.k, rec.d);
  rec.config = cfg;
  rec.config.t = d;
  return rec;
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "fam1") return Family::kFam1;
  if (name == "fam2") return Family::kFam2;
  if (name == "fam3") return Family::kFam3;
  return std::nullopt;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::kFam1:
      return "fam1";
    case Family::kFam2:
      return "fam2";
    case Family::kFam3:
      return "fam3";
  }
  return "?";
}

CodeConfig family_config(Family f, long q) {
  if (!gf::prime_power(static_cast<std::uint64_t>(q))) {
    throw AdmissibilityError("q=" + std::to_string(q) + " is not a prime power");
  }
  CodeConfig cfg;
  cfg.q = q;
  cfg.sigma = 2;
  switch (f) {
    case Family::kFam1:
      if (q <= 2 || q % 2 != 0 || q % 3 != 2) throw AdmissibilityError("fam1 needs q > 2 even with q = 2 (mod 3)");
      std::tie(cfg.lambda, cfg.tau, cfg.rho, cfg.ny) = std::tuple{q - 1, (q + 1) / 3, q + 1, 2L};
      break;
    case Family::kFam2:
      if (q < 11 || q % 8 != 3) throw AdmissibilityError("fam2 needs q >= 11 with q = 3 (mod 8)");
      std::tie(cfg.lambda, cfg.tau, cfg.rho, cfg.ny) = std::tuple{q - 1, (q + 1) / 4, 4L, 3L};
      break;
    case Family::kFam3:
      if (q % 8 != 7) throw AdmissibilityError("fam3 needs q = 7 (mod 8)");
      std::tie(cfg.lambda, cfg.tau, cfg.rho, cfg.ny) = std::tuple{(q - 1) / 2, (q + 1) / 2, 8L, 3L};
      break;
  }
  if (auto why = admissibility_violation(cfg)) {
    throw AdmissibilityError(std::string(to_string(f)) + " at q=" + std::to_string(q) + ": " + *why);
  }
  return cfg;
}

long family_max_distance(Family f, long q) {
  return f == Family::kFam1 ? (4 * q - 2) / 3 : (5 * q + 1) / 4;
}

std::vector<QuantumRecord> family(Family f, long q) {
  const CodeConfig cfg = family_config(f, q);
  const long d_max = family_max_distance(f, q);
  const auto ts = selforth::tstar(cfg);
  if (ts.status != selforth::TstarStatus::kClosedForm || ts.t_star < d_max) {
    throw std::logic_error(std::string(to_string(f)) + " at q=" + std::to_string(q) +
                           ": closed-form T* does not cover d <= " + std::to_string(d_max));
  }
  std::vector<QuantumRecord> out;
  for (long d = 2; d <= d_max; ++d) out.push_back(stabilizer_params(cfg, d));
  return out;
}

TheoremCheck beats_gv_theorem_check(long q) {
  if (q < 11 || !gf::prime_power(static_cast<std::uint64_t>(q))) {
    throw AdmissibilityError("beats_gv_theorem_check needs a prime power q >= 11");
  }
  TheoremCheck chk;
  chk.q = q;
  chk.n = 2 * (q * q - 1);

  // Longest-range admissible config of length 2(q²−1) with two Y-points.
  for (long lambda = 2; lambda <= q - 1; ++lambda) {
    if ((q - 1) % lambda) continue;
    for (long tau = 2; tau <= q + 1; ++tau) {
      if ((q + 1) % tau || (q * q - 1) % (lambda * tau)) continue;
      const long sigma = (q * q - 1) / (lambda * tau);
      for (long rho = q + 1; rho >= 2; --rho) {
        if ((q + 1) % rho) continue;
        const CodeConfig cfg{q, lambda, tau, rho, sigma, 2, std::nullopt};
        if (admissibility_violation(cfg)) continue;
        const long ts = selforth::tstar(cfg).t_star;
        if (!chk.config || ts > chk.t_star) {
          chk.config = cfg;
          chk.t_star = ts;
        }
      }
    }
  }

  chk.all_beat = true;
  for (long d = 5; d <= 3 * q / 2; ++d) {
    QuantumRecord rec;
    rec.q = q;
    rec.n = chk.n;
    rec.k = rec.n - 2 * size_delta(d, 2);
    rec.d = d;
    rec.defect = singleton_defect(rec);
    rec.beats_qgv = qgv_beats(q, rec.n, rec.k, d);
    if (chk.config) {
      rec.config = *chk.config;
      if (d <= chk.t_star) rec.config.t = d;
    }
    chk.all_beat = chk.all_beat && rec.beats_qgv;
    chk.records.push_back(rec);
  }
  return chk;
}

}  // namespace gmcq::quantum
