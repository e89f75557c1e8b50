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

// Coordinates of F_{q^d} over F_q through a basis and its trace-dual basis,
// and the passage from a table on F_q^d to a univariate polynomial.

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cppforge/gf.hpp"
#include "cppforge/perm.hpp"
#include "cppforge/poly.hpp"

namespace cppforge {

class BasisPair {
 public:
  /// alpha defaults to the polynomial basis 1, t, ..., t^{d-1} of the big
  /// field, which spans because t generates F_{q^d} already over F_p.
  explicit BasisPair(std::shared_ptr<const FieldExtension> ext,
                     std::optional<std::vector<Elem>> alpha = std::nullopt);
  BasisPair(FieldPtr sub, unsigned d, std::optional<std::vector<Elem>> alpha = std::nullopt);

  const FieldExtension& extension() const noexcept { return *ext_; }
  const FieldPtr& sub() const noexcept { return ext_->sub(); }
  const FieldPtr& big() const noexcept { return ext_->big(); }
  unsigned dim() const noexcept { return static_cast<unsigned>(alpha_.size()); }

  const std::vector<Elem>& alpha() const noexcept { return alpha_; }
  const std::vector<Elem>& beta() const noexcept { return beta_; }

  /// x_j = Tr(x beta_j).
  std::vector<Elem> encode(Elem x) const;
  /// sum alpha_i x_i.
  Elem decode(std::span<const Elem> coords) const;

 private:
  std::shared_ptr<const FieldExtension> ext_;
  std::vector<Elem> alpha_;
  std::vector<Elem> beta_;
};

/// The polynomial of degree < q^d over F_{q^d} that agrees with
/// decode(f(encode(x))) at every x, by Lagrange interpolation through all
/// points. Limited to q^d <= 2^12.
Poly to_univariate(const BasisPair& basis, const PermTable& f);

inline constexpr std::uint32_t kUnivariateCap = 1u << 12;

/// Only exponents p^k carry nonzero coefficients.
bool is_linearized(const Poly& f);

}  // namespace cppforge
