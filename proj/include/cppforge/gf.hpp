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

// Finite fields F_{p^m} with elements stored as canonical indices.
//
// An element of F_{p^m} = F_p[t]/(modulus) is the residue polynomial
// c_0 + c_1 t + ... + c_{m-1} t^{m-1}; its canonical index is
// sum c_k p^k. Index 0 is the additive and index 1 the multiplicative
// identity. Fields are immutable and shared through FieldPtr.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cppforge {

using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(std::uint64_t n);

/// Returns (p, m) with q = p^m, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

class Field {
 public:
  /// Largest supported order; keeps every index inside 32 bits with room
  /// for vector-space indices built on top.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 24;

  /// Builds F_{p^m}. Without an explicit modulus the smallest monic
  /// irreducible of degree m is chosen, ordering candidates by their
  /// canonical index sum c_k p^k. modulus holds m + 1 coefficients, low
  /// degree first.
  static FieldPtr make(std::uint32_t p, std::uint32_t m = 1,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Field of order q with the canonical modulus.
  static FieldPtr of_order(std::uint64_t q);

  /// Parses `p^m` or `p^m/c0,c1,...,cm`. A bare prime `p` is accepted too.
  static FieldPtr parse(std::string_view spec);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }

  /// Modulus coefficients low degree first; empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  /// `p^m`, or `p^m/c0,...,cm` when the modulus is not the canonical one.
  std::string spec() const;

  bool operator==(const Field& other) const noexcept {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
  }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }

  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t k) const noexcept;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t n) const;

  /// Reference multiplication: digit convolution followed by reduction by
  /// the modulus. mul() agrees with it; tests cross-check the two.
  Elem mul_schoolbook(Elem a, Elem b) const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& digits) const;

  /// All elements in index order.
  std::vector<Elem> elements() const;

  bool contains(Elem a) const noexcept { return a < q_; }

  /// Smallest-index element of multiplicative order q - 1.
  Elem primitive_element() const noexcept { return primitive_; }

 private:
  struct Private {};

 public:
  Field(Private, std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus,
        bool canonical);

 private:
  static FieldPtr make_uncached(std::uint32_t p, std::uint32_t m,
                                std::optional<std::vector<std::uint32_t>> modulus);
  void build_tables();
  Elem add_digits(Elem a, Elem b) const noexcept;

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  bool canonical_;
  Elem primitive_ = 1;
  // Acceleration caches, derived from the schoolbook route at construction.
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
  std::vector<Elem> neg_;
  std::vector<std::uint16_t> add_;
};

/// A two-level tower F_q subset F_{q^d}. The big field is an F_p-extension of
/// degree m d; F_q is embedded by sending its generator to the smallest-index
/// root of its modulus in the big field.
class FieldExtension {
 public:
  FieldExtension(FieldPtr sub, std::uint32_t d);
  FieldExtension(FieldPtr sub, FieldPtr big);

  const FieldPtr& sub() const noexcept { return sub_; }
  const FieldPtr& big() const noexcept { return big_; }
  std::uint32_t relative_degree() const noexcept { return d_; }

  Elem embed(Elem sub_elem) const { return embed_.at(sub_elem); }

  /// Inverse of embed(); throws NotASubfieldRelation outside the image.
  Elem restrict(Elem big_elem) const;

  bool in_subfield(Elem big_elem) const;

  /// Relative trace x + x^q + ... + x^{q^{d-1}}, returned in the subfield.
  Elem trace(Elem big_elem) const;

 private:
  void init();

  FieldPtr sub_;
  FieldPtr big_;
  std::uint32_t d_ = 1;
  std::vector<Elem> embed_;
  std::vector<std::int64_t> restrict_;
};

}  // namespace cppforge
