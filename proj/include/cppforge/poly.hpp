/*
 * Copyright 2026 The cppforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Dense univariate polynomials over a Field, cyclotomic polynomials and
// deterministic factorisation.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cppforge/gf.hpp"

namespace cppforge {

class Poly {
 public:
  Poly() = default;
  /// Coefficients low degree first; trailing zeros are trimmed.
  Poly(FieldPtr field, std::vector<Elem> coeffs);

  static Poly zero(FieldPtr field) { return Poly(std::move(field), {}); }
  static Poly constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }
  static Poly monomial(FieldPtr field, Elem c, std::size_t k);
  /// x^n - 1.
  static Poly x_pow_minus_one(FieldPtr field, std::size_t n);
  /// Integer coefficients mapped into the prime subfield.
  static Poly from_ints(FieldPtr field, const std::vector<std::int64_t>& coeffs);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept { return c_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const noexcept {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  Elem coeff(std::size_t k) const noexcept { return k < c_.size() ? c_[k] : 0; }
  Elem leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

  /// sum idx(c_k) q^k; the deterministic ordering key for polynomials.
  /// Only meaningful while it fits in 64 bits.
  std::uint64_t index() const;

  bool operator==(const Poly& other) const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Elem c);

/// (quotient, remainder) with a = quotient * b + remainder.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Exact division; throws std::logic_error on a nonzero remainder.
Poly exact_div(const Poly& a, const Poly& b);

Poly monic(const Poly& a);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& mod);
Poly pow(const Poly& base, std::uint64_t e);

Elem eval(const Poly& f, Elem x);
/// f(t + c).
Poly shift(const Poly& f, Elem c);

bool divides(const Poly& a, const Poly& b);

/// Q_n over the field, by dividing x^n - 1 by Q_d for the proper divisors d.
Poly cyclotomic(std::uint32_t n, const FieldPtr& field);

bool is_irreducible(const Poly& f);

/// Monic irreducible factors with multiplicity, ordered by degree then
/// by index(). The product times the leading coefficient is f.
std::vector<Poly> irreducible_factors(const Poly& f);

/// All monic divisors of f, ordered by degree then index().
std::vector<Poly> monic_divisors(const Poly& f);

/// Smallest n >= 1 with f | t^n - 1, when f(0) != 0 (order of t mod f).
std::optional<std::uint64_t> order_of_t(const Poly& f);
/// Smallest n >= 1 with f | (t + 1)^n - 1, when f(-1) != 0.
std::optional<std::uint64_t> order_of_t_plus_one(const Poly& f);

/// Canonical rendering `c0+c1*t+c2*t^2` with coefficients as element
/// indices; zero renders as `0`.
std::string to_string(const Poly& f);
/// Descending powers; prime-field coefficients as signed residues
/// (t^2-t+1 over F_7), extension-field coefficients as {index}.
std::string to_pretty(const Poly& f);

/// Accepts the canonical form, descending order, `-` signs, spaces and `x`
/// as the variable. Numeric literals are element indices, bare or braced.
Poly parse_poly(std::string_view text, const FieldPtr& field);

std::uint64_t euler_phi(std::uint64_t n);
std::vector<std::uint32_t> divisors(std::uint32_t n);

}  // namespace cppforge
