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

#ifndef GMCQ_GF_HPP
#define GMCQ_GF_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

/**
 * Exact arithmetic in the tower GF(p) ⊂ GF(q) ⊂ GF(q²), q = p^m.
 *
 * GF(q²) is built directly as GF(p)[z]/(f) with f the smallest monic
 * irreducible of degree 2m. GF(q) is GF(p)[x]/(h) with h the smallest monic
 * irreducible of degree m, and embeds into GF(q²) by sending x to the
 * smallest root of h. Elements are identified with the integer Σ c_i p^i of
 * their coefficient vector; this is also the on-disk encoding.
 */
namespace gmcq::gf {

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element of GF(q²), held as its base-p positional code.
struct Felt {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(Felt, Felt) = default;
};

/// Polynomials over GF(p), coefficients low degree first.
namespace poly {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p);
Poly rem(Poly a, const Poly& f, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);
/// x^(p^k) mod f by k repeated p-th powers.
Poly frobenius_x(const Poly& f, std::uint32_t p, unsigned k);
/// Rabin's irreducibility test for a monic f of degree ≥ 1.
bool is_irreducible(const Poly& f, std::uint32_t p);
/// Monic polynomial x^deg + (digits of `lower` in base p).
Poly monic_from_code(std::uint64_t lower, unsigned deg, std::uint32_t p);
/// Smallest monic irreducible of the given degree in base-p code order.
Poly smallest_irreducible(unsigned deg, std::uint32_t p);

}  // namespace poly

enum class ArithMode {
  kAuto,       ///< log/antilog tables when q² ≤ 2^20, polynomial arithmetic otherwise
  kPolynomial  ///< always polynomial arithmetic
};

bool is_prime(std::uint64_t n);

/// q = p^m if q is a prime power.
std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q);

/**
 * Immutable field context. Thread-safe to share once built.
 */
class FieldCtx {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 32;
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

  /// Throws FieldError when p is not prime or p^(2m) exceeds kMaxOrder.
  static FieldCtx build(std::uint32_t p, unsigned m, ArithMode mode = ArithMode::kAuto);
  /// Same, with q given as a prime power.
  static FieldCtx for_q(std::uint64_t q, ArithMode mode = ArithMode::kAuto);

  std::uint32_t p() const { return p_; }
  unsigned m() const { return m_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t q2() const { return q2_; }
  const poly::Poly& mod_q() const { return mod_q_; }
  const poly::Poly& mod_q2() const { return mod_q2_; }
  Felt generator() const { return g_; }
  bool uses_tables() const { return !exp_.empty(); }

  Felt zero() const { return Felt{0}; }
  Felt one() const { return Felt{1}; }
  /// Element with the given code; throws if out of range.
  Felt element(std::uint64_t code) const;
  Felt from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// The 2m coefficients of x over GF(p).
  std::vector<std::uint32_t> coeffs(Felt x) const;
  /// Image of a prime-field integer.
  Felt from_int(std::int64_t v) const;

  Felt add(Felt a, Felt b) const;
  Felt sub(Felt a, Felt b) const;
  Felt neg(Felt a) const;
  Felt mul(Felt a, Felt b) const;
  /// Throws FieldError on zero.
  Felt inv(Felt a) const;
  Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }
  Felt pow(Felt a, std::uint64_t e) const;
  /// x ↦ x^q.
  Felt conjugate(Felt x) const;
  /// x^(q+1), which lies in GF(q).
  Felt norm(Felt x) const { return mul(x, conjugate(x)); }
  /// Multiplicative order of a non-zero element.
  std::uint64_t order(Felt x) const;

  /// Embedding GF(q) → GF(q²) of the element with the given GF(q) code.
  Felt embed(std::uint64_t gfq_code) const;
  /// Inverse of embed; nullopt when x is not in the subfield.
  std::optional<std::uint64_t> subfield_code(Felt x) const;
  bool in_subfield(Felt x) const { return conjugate(x) == x; }
  /// The image of the generator x of GF(p)[x]/(mod_q) in GF(q²).
  Felt subfield_root() const { return alpha_; }

  /// g^((q²−1)/t); requires t | q²−1.
  Felt root_of_unity(std::uint64_t t) const;

  /**
   * Solves x^(q+1) = a for a in GF(q)*. Returns g^j with the smallest
   * j ≥ 0 such that (g^(q+1))^j = a.
   */
  Felt norm_solve(Felt a) const;

  /**
   * w(j) = ∏_{i≠j} (y_j − y_i)^{-1}; spans the kernel of the
   * (n−1)×n Vandermonde matrix with rows y^0 … y^(n−2).
   */
  std::vector<Felt> vandermonde_kernel(std::span<const Felt> ys) const;

 private:
  FieldCtx() = default;

  Felt poly_mul(Felt a, Felt b) const;
  Felt pow_poly(Felt a, std::uint64_t e) const;
  std::uint64_t discrete_log_bsgs(Felt base, Felt target, std::uint64_t order) const;

  std::uint32_t p_ = 0;
  unsigned m_ = 0;
  std::uint64_t q_ = 0;
  std::uint64_t q2_ = 0;
  poly::Poly mod_q_;
  poly::Poly mod_q2_;
  Felt g_{};
  Felt alpha_{};
  std::vector<std::uint32_t> exp_;  // exp_[k] = g^k, k < q²−1
  std::vector<std::uint32_t> log_;  // log_[code], undefined at 0
  std::vector<std::uint16_t> add_;  // full addition table for small odd-p fields
};

}  // namespace gmcq::gf

#endif  // GMCQ_GF_HPP
