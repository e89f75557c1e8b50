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

// Square matrices over a Field.

#include <cstdint>
#include <span>
#include <vector>

#include "cppforge/gf.hpp"
#include "cppforge/poly.hpp"
#include "cppforge/rng.hpp"

namespace cppforge {

class Mat {
 public:
  Mat() = default;
  Mat(FieldPtr field, std::size_t d);
  /// Row-major entries, d * d of them.
  Mat(FieldPtr field, std::size_t d, std::vector<Elem> entries);

  static Mat identity(FieldPtr field, std::size_t d);
  /// Rows of integers mapped into the prime subfield; handy for the
  /// small explicit matrices of the constructions.
  static Mat from_ints(FieldPtr field, const std::vector<std::vector<std::int64_t>>& rows);
  static Mat from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return d_; }
  Elem operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * d_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * d_ + j]; }
  const std::vector<Elem>& entries() const noexcept { return a_; }
  std::vector<std::vector<Elem>> rows() const;

  bool operator==(const Mat& other) const;
  bool is_zero() const;

 private:
  FieldPtr field_;
  std::size_t d_ = 0;
  std::vector<Elem> a_;
};

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Mat scale(const Mat& a, Elem c);

std::vector<Elem> apply(const Mat& m, std::span<const Elem> v);

Elem det(const Mat& m);
/// Throws Singular when det(m) = 0.
Mat inverse(const Mat& m);
std::size_t rank(const Mat& m);

/// det(tI - M). Uses Faddeev-LeVerrier when every k <= d is invertible in
/// the field, otherwise expands the determinant over F_q[t].
Poly char_poly(const Mat& m);
/// Faddeev-LeVerrier; throws InvalidSpec when p <= d.
Poly char_poly_faddeev_leverrier(const Mat& m);
/// Fraction-free elimination of tI - M over F_q[t]. Works in every
/// characteristic.
Poly char_poly_expansion(const Mat& m);

/// Least-degree monic annihilator, found among the monic divisors of the
/// characteristic polynomial in increasing order.
Poly min_poly(const Mat& m);

/// Companion matrix of monic h: ones on the superdiagonal, last row
/// (-h_0, ..., -h_{k-1}).
Mat companion(const Poly& h);

/// h(M) by Horner's rule.
Mat eval_poly_at_matrix(const Poly& h, const Mat& m);

/// Uniformly drawn invertible matrix (rejection on det = 0).
Mat random_invertible(const FieldPtr& field, std::size_t d, Rng& rng);
/// P M P^{-1} for a random invertible P; same characteristic polynomial.
Mat random_similar(const Mat& m, Rng& rng);

}  // namespace cppforge
