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

#include "gmcq/gf.hpp"

#include <algorithm>
#include <unordered_map>

namespace gmcq::gf {

namespace poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2).
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

Poly sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

}  // namespace

Poly rem(Poly a, const Poly& f, std::uint32_t p) {
  Poly g = f;
  trim(g);
  if (g.empty()) throw FieldError("polynomial division by zero");
  trim(a);
  const std::size_t df = g.size() - 1;
  const std::uint64_t lead_inv = inv_mod(g.back(), p);
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const std::uint64_t c = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * g[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return rem(std::move(out), f, p);
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t li = inv_mod(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(c * li % p);
  }
  return a;
}

Poly frobenius_x(const Poly& f, std::uint32_t p, unsigned k) {
  Poly x = rem(Poly{0, 1}, f, p);
  for (unsigned step = 0; step < k; ++step) {
    // x ← x^p
    Poly acc{1};
    Poly base = x;
    std::uint64_t e = p;
    while (e) {
      if (e & 1) acc = mul_mod(acc, base, f, p);
      base = mul_mod(base, base, f, p);
      e >>= 1;
    }
    x = std::move(acc);
  }
  return x;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  Poly g = f;
  trim(g);
  if (g.size() < 2) return false;
  const unsigned n = static_cast<unsigned>(g.size() - 1);
  if (n == 1) return true;
  const Poly x = rem(Poly{0, 1}, g, p);
  if (!sub(frobenius_x(g, p, n), x, p).empty()) return false;
  for (unsigned r = 2; r <= n; ++r) {
    if (n % r != 0) continue;
    bool prime = true;
    for (unsigned s = 2; s * s <= r; ++s) prime = prime && (r % s != 0);
    if (!prime) continue;
    Poly h = sub(frobenius_x(g, p, n / r), x, p);
    if (gcd(g, h, p).size() != 1) return false;
  }
  return true;
}

Poly monic_from_code(std::uint64_t lower, unsigned deg, std::uint32_t p) {
  Poly f(deg + 1, 0);
  for (unsigned i = 0; i < deg; ++i) {
    f[i] = static_cast<std::uint32_t>(lower % p);
    lower /= p;
  }
  f[deg] = 1;
  return f;
}

Poly smallest_irreducible(unsigned deg, std::uint32_t p) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < deg; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f = monic_from_code(code, deg, p);
    if (is_irreducible(f, p)) return f;
  }
  throw FieldError("no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace poly

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  unsigned m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1 || p > 0xFFFFFFFFu) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), m};
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

FieldCtx FieldCtx::for_q(std::uint64_t q, ArithMode mode) {
  auto pm = prime_power(q);
  if (!pm) throw FieldError("q = " + std::to_string(q) + " is not a prime power");
  return build(pm->first, pm->second, mode);
}

FieldCtx FieldCtx::build(std::uint32_t p, unsigned m, ArithMode mode) {
  if (!is_prime(p)) throw FieldError("p = " + std::to_string(p) + " is not prime");
  if (m < 1) throw FieldError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q * q > kMaxOrder) throw FieldError("field size p^(2m) exceeds 2^32");
  }

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.m_ = m;
  ctx.q_ = q;
  ctx.q2_ = q * q;
  ctx.mod_q_ = poly::smallest_irreducible(m, p);
  ctx.mod_q2_ = poly::smallest_irreducible(2 * m, p);

  const std::uint64_t group = ctx.q2_ - 1;
  const auto factors = prime_factors(group);
  for (std::uint64_t code = 1; code < ctx.q2_; ++code) {
    const Felt x{static_cast<std::uint32_t>(code)};
    bool primitive = true;
    for (std::uint64_t r : factors) {
      if (ctx.pow_poly(x, group / r) == ctx.one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      ctx.g_ = x;
      break;
    }
  }

  if (mode == ArithMode::kAuto && ctx.q2_ <= kTableLimit) {
    ctx.exp_.resize(group);
    ctx.log_.assign(ctx.q2_, 0);
    Felt cur = ctx.one();
    for (std::uint64_t k = 0; k < group; ++k) {
      ctx.exp_[k] = cur.code;
      ctx.log_[cur.code] = static_cast<std::uint32_t>(k);
      cur = ctx.poly_mul(cur, ctx.g_);
    }
    if (p != 2 && ctx.q2_ <= 2048) {
      ctx.add_.resize(ctx.q2_ * ctx.q2_);
      for (std::uint64_t a = 0; a < ctx.q2_; ++a) {
        const auto ca = ctx.coeffs(Felt{static_cast<std::uint32_t>(a)});
        for (std::uint64_t b = 0; b < ctx.q2_; ++b) {
          auto cb = ctx.coeffs(Felt{static_cast<std::uint32_t>(b)});
          for (unsigned i = 0; i < 2 * m; ++i) cb[i] = (ca[i] + cb[i]) % p;
          ctx.add_[a * ctx.q2_ + b] = static_cast<std::uint16_t>(ctx.from_coeffs(cb).code);
        }
      }
    }
  }

  // A root of mod_q lies in GF(q) = {0} ∪ {g^(k(q+1))}; the m roots form one
  // Frobenius orbit, and the smallest code among them is kept.
  auto eval_h = [&ctx](Felt z) {
    Felt acc = ctx.zero();
    for (auto it = ctx.mod_q_.rbegin(); it != ctx.mod_q_.rend(); ++it) {
      acc = ctx.add(ctx.mul(acc, z), ctx.from_int(*it));
    }
    return acc;
  };
  Felt root{};
  bool found = eval_h(ctx.zero()) == ctx.zero();
  const Felt sub_gen = ctx.pow(ctx.g_, q + 1);
  Felt cur = ctx.one();
  for (std::uint64_t k = 0; !found && k + 1 < q; ++k) {
    if (eval_h(cur) == ctx.zero()) {
      root = cur;
      found = true;
    }
    cur = ctx.mul(cur, sub_gen);
  }
  Felt best = root;
  Felt conj = root;
  for (unsigned i = 1; i < m; ++i) {
    conj = ctx.pow(conj, p);
    best = std::min(best, conj);
  }
  ctx.alpha_ = best;
  return ctx;
}

Felt FieldCtx::element(std::uint64_t code) const {
  if (code >= q2_) throw FieldError("element code out of range");
  return Felt{static_cast<std::uint32_t>(code)};
}

Felt FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > 2 * m_) throw FieldError("too many coefficients");
  std::uint64_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw FieldError("coefficient out of range");
    code = code * p_ + coeffs[i];
  }
  return Felt{static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> FieldCtx::coeffs(Felt x) const {
  std::vector<std::uint32_t> out(2 * m_, 0);
  std::uint64_t code = x.code;
  for (unsigned i = 0; i < 2 * m_; ++i) {
    out[i] = static_cast<std::uint32_t>(code % p_);
    code /= p_;
  }
  return out;
}

Felt FieldCtx::from_int(std::int64_t v) const {
  const std::int64_t p = p_;
  return Felt{static_cast<std::uint32_t>(((v % p) + p) % p)};
}

Felt FieldCtx::add(Felt a, Felt b) const {
  if (p_ == 2) return Felt{a.code ^ b.code};
  if (!add_.empty()) return Felt{add_[std::uint64_t{a.code} * q2_ + b.code]};
  std::uint64_t x = a.code, y = b.code, out = 0, place = 1;
  while (x || y) {
    out += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return Felt{static_cast<std::uint32_t>(out)};
}

Felt FieldCtx::neg(Felt a) const {
  if (p_ == 2) return a;
  std::uint64_t x = a.code, out = 0, place = 1;
  while (x) {
    out += ((p_ - x % p_) % p_) * place;
    x /= p_;
    place *= p_;
  }
  return Felt{static_cast<std::uint32_t>(out)};
}

Felt FieldCtx::sub(Felt a, Felt b) const { return add(a, neg(b)); }

Felt FieldCtx::poly_mul(Felt a, Felt b) const {
  auto ca = coeffs(a);
  auto cb = coeffs(b);
  poly::trim(ca);
  poly::trim(cb);
  auto prod = poly::mul_mod(ca, cb, mod_q2_, p_);
  return from_coeffs(prod);
}

Felt FieldCtx::mul(Felt a, Felt b) const {
  if (a.code == 0 || b.code == 0) return zero();
  if (exp_.empty()) return poly_mul(a, b);
  std::uint64_t k = std::uint64_t{log_[a.code]} + log_[b.code];
  const std::uint64_t group = q2_ - 1;
  if (k >= group) k -= group;
  return Felt{exp_[k]};
}

Felt FieldCtx::pow_poly(Felt a, std::uint64_t e) const {
  Felt result = one();
  Felt base = a;
  while (e) {
    if (e & 1) result = poly_mul(result, base);
    base = poly_mul(base, base);
    e >>= 1;
  }
  return result;
}

Felt FieldCtx::pow(Felt a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  if (exp_.empty()) return pow_poly(a, e);
  const std::uint64_t group = q2_ - 1;
  const std::uint64_t k = log_[a.code] * (e % group) % group;
  return Felt{exp_[k]};
}

Felt FieldCtx::inv(Felt a) const {
  if (a.code == 0) throw FieldError("inverse of zero");
  if (exp_.empty()) return pow_poly(a, q2_ - 2);
  const std::uint64_t group = q2_ - 1;
  const std::uint32_t k = log_[a.code];
  return Felt{exp_[k == 0 ? 0 : group - k]};
}

Felt FieldCtx::conjugate(Felt x) const { return pow(x, q_); }

std::uint64_t FieldCtx::order(Felt x) const {
  if (x.code == 0) throw FieldError("zero has no multiplicative order");
  std::uint64_t ord = q2_ - 1;
  for (std::uint64_t r : prime_factors(q2_ - 1)) {
    while (ord % r == 0 && pow(x, ord / r) == one()) ord /= r;
  }
  return ord;
}

Felt FieldCtx::embed(std::uint64_t gfq_code) const {
  if (gfq_code >= q_) throw FieldError("GF(q) code out of range");
  std::vector<std::uint32_t> digits(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    digits[i] = static_cast<std::uint32_t>(gfq_code % p_);
    gfq_code /= p_;
  }
  Felt acc = zero();
  for (std::size_t i = m_; i-- > 0;) acc = add(mul(acc, alpha_), from_int(digits[i]));
  return acc;
}

std::optional<std::uint64_t> FieldCtx::subfield_code(Felt x) const {
  if (!in_subfield(x)) return std::nullopt;
  for (std::uint64_t c = 0; c < q_; ++c) {
    if (embed(c) == x) return c;
  }
  return std::nullopt;
}

Felt FieldCtx::root_of_unity(std::uint64_t t) const {
  if (t == 0 || (q2_ - 1) % t != 0) {
    throw FieldError("t = " + std::to_string(t) + " does not divide q^2-1 = " + std::to_string(q2_ - 1));
  }
  return pow(g_, (q2_ - 1) / t);
}

std::uint64_t FieldCtx::discrete_log_bsgs(Felt base, Felt target, std::uint64_t order) const {
  std::uint64_t step = 1;
  while (step * step < order) ++step;
  std::unordered_map<std::uint32_t, std::uint64_t> baby;
  Felt cur = one();
  for (std::uint64_t j = 0; j < step; ++j) {
    baby.emplace(cur.code, j);  // keeps the smallest j per value
    cur = mul(cur, base);
  }
  const Felt giant = inv(pow(base, step));
  Felt gamma = target;
  for (std::uint64_t i = 0; i <= step; ++i) {
    if (auto it = baby.find(gamma.code); it != baby.end()) {
      const std::uint64_t j = i * step + it->second;
      if (j < order) return j;
    }
    gamma = mul(gamma, giant);
  }
  throw FieldError("discrete logarithm does not exist");
}

Felt FieldCtx::norm_solve(Felt a) const {
  if (a.code == 0) throw FieldError("norm_solve: a must be non-zero");
  if (!in_subfield(a)) throw FieldError("norm_solve: a is not in GF(q)");
  std::uint64_t j;
  if (!exp_.empty()) {
    // log(a) is a multiple of q+1 because a ∈ GF(q)*.
    j = log_[a.code] / (q_ + 1);
  } else {
    j = discrete_log_bsgs(pow(g_, q_ + 1), a, q_ - 1);
  }
  return pow(g_, j);
}

std::vector<Felt> FieldCtx::vandermonde_kernel(std::span<const Felt> ys) const {
  if (ys.size() < 2) throw FieldError("vandermonde_kernel needs at least two points");
  std::vector<Felt> w(ys.size());
  for (std::size_t j = 0; j < ys.size(); ++j) {
    Felt prod = one();
    for (std::size_t i = 0; i < ys.size(); ++i) {
      if (i == j) continue;
      const Felt diff = sub(ys[j], ys[i]);
      if (diff.code == 0) throw FieldError("vandermonde_kernel: repeated point");
      prod = mul(prod, diff);
    }
    w[j] = inv(prod);
  }
  return w;
}

}  // namespace gmcq::gf
