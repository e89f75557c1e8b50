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

#include "cppforge/linalg.hpp"

#include <stdexcept>
#include <utility>

#include "cppforge/error.hpp"

namespace cppforge {

namespace {

void require_same(const Mat& a, const Mat& b) {
  if (!a.field() || !b.field() || !(*a.field() == *b.field())) {
    throw Error(ErrorKind::CtxMismatch, "matrices over different fields");
  }
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimMismatch, "dimensions " + std::to_string(a.dim()) + " and " +
                                            std::to_string(b.dim()));
  }
}

}  // namespace

Mat::Mat(FieldPtr field, std::size_t d) : field_(std::move(field)), d_(d), a_(d * d, 0) {}

Mat::Mat(FieldPtr field, std::size_t d, std::vector<Elem> entries)
    : field_(std::move(field)), d_(d), a_(std::move(entries)) {
  if (a_.size() != d_ * d_) throw Error(ErrorKind::DimMismatch, "entry count is not d*d");
  for (Elem x : a_) {
    if (!field_->contains(x)) throw Error(ErrorKind::InvalidSpec, "matrix entry outside the field");
  }
}

Mat Mat::identity(FieldPtr field, std::size_t d) {
  Mat m(std::move(field), d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_ints(FieldPtr field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t d = rows.size();
  Mat m(field, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (rows[i].size() != d) throw Error(ErrorKind::DimMismatch, "matrix is not square");
    for (std::size_t j = 0; j < d; ++j) m(i, j) = field->from_int(rows[i][j]);
  }
  return m;
}

Mat Mat::from_rows(FieldPtr field, const std::vector<std::vector<Elem>>& rows) {
  const std::size_t d = rows.size();
  std::vector<Elem> e;
  e.reserve(d * d);
  for (const auto& row : rows) {
    if (row.size() != d) throw Error(ErrorKind::DimMismatch, "matrix is not square");
    e.insert(e.end(), row.begin(), row.end());
  }
  return Mat(std::move(field), d, std::move(e));
}

std::vector<std::vector<Elem>> Mat::rows() const {
  std::vector<std::vector<Elem>> out(d_);
  for (std::size_t i = 0; i < d_; ++i) out[i].assign(a_.begin() + i * d_, a_.begin() + (i + 1) * d_);
  return out;
}

bool Mat::operator==(const Mat& other) const {
  if (d_ != other.d_ || a_ != other.a_) return false;
  if (field_ == other.field_) return true;
  return field_ && other.field_ && *field_ == *other.field_;
}

bool Mat::is_zero() const {
  for (Elem x : a_) {
    if (x != 0) return false;
  }
  return true;
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same(a, b);
  Mat r(a.field(), a.dim());
  const auto& f = *a.field();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = f.add(a(i, j), b(i, j));
  return r;
}

Mat operator-(const Mat& a, const Mat& b) {
  require_same(a, b);
  Mat r(a.field(), a.dim());
  const auto& f = *a.field();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = f.sub(a(i, j), b(i, j));
  return r;
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same(a, b);
  const std::size_t d = a.dim();
  const auto& f = *a.field();
  Mat r(a.field(), d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Elem x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < d; ++j) r(i, j) = f.add(r(i, j), f.mul(x, b(k, j)));
    }
  }
  return r;
}

Mat scale(const Mat& a, Elem c) {
  Mat r = a;
  const auto& f = *a.field();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r(i, j) = f.mul(a(i, j), c);
  return r;
}

std::vector<Elem> apply(const Mat& m, std::span<const Elem> v) {
  if (v.size() != m.dim()) throw Error(ErrorKind::DimMismatch, "vector length differs from dimension");
  const auto& f = *m.field();
  std::vector<Elem> out(m.dim(), 0);
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < m.dim(); ++j) acc = f.add(acc, f.mul(m(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

namespace {

// Row reduction with the topmost nonzero entry as pivot. Returns the
// determinant and leaves `work` in echelon form; `rank` gets the rank.
Elem eliminate(Mat& work, Mat* companion_inverse, std::size_t& rank_out) {
  const std::size_t d = work.dim();
  const auto& f = *work.field();
  Elem det_acc = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < d && row < d; ++col) {
    std::size_t pivot = row;
    while (pivot < d && work(pivot, col) == 0) ++pivot;
    if (pivot == d) {
      det_acc = 0;
      continue;
    }
    if (pivot != row) {
      for (std::size_t j = 0; j < d; ++j) std::swap(work(pivot, j), work(row, j));
      if (companion_inverse) {
        for (std::size_t j = 0; j < d; ++j) std::swap((*companion_inverse)(pivot, j), (*companion_inverse)(row, j));
      }
      det_acc = f.neg(det_acc);
    }
    const Elem pv = work(row, col);
    det_acc = f.mul(det_acc, pv);
    const Elem pinv = f.inv(pv);
    for (std::size_t j = 0; j < d; ++j) work(row, j) = f.mul(work(row, j), pinv);
    if (companion_inverse) {
      for (std::size_t j = 0; j < d; ++j) (*companion_inverse)(row, j) = f.mul((*companion_inverse)(row, j), pinv);
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (i == row) continue;
      const Elem factor = work(i, col);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < d; ++j) work(i, j) = f.sub(work(i, j), f.mul(factor, work(row, j)));
      if (companion_inverse) {
        for (std::size_t j = 0; j < d; ++j) {
          (*companion_inverse)(i, j) = f.sub((*companion_inverse)(i, j), f.mul(factor, (*companion_inverse)(row, j)));
        }
      }
    }
    ++row;
  }
  rank_out = row;
  if (row < d) det_acc = 0;
  return det_acc;
}

}  // namespace

Elem det(const Mat& m) {
  Mat work = m;
  std::size_t r = 0;
  return eliminate(work, nullptr, r);
}

std::size_t rank(const Mat& m) {
  Mat work = m;
  std::size_t r = 0;
  eliminate(work, nullptr, r);
  return r;
}

Mat inverse(const Mat& m) {
  Mat work = m;
  Mat inv = Mat::identity(m.field(), m.dim());
  std::size_t r = 0;
  if (eliminate(work, &inv, r) == 0) throw Error(ErrorKind::Singular, "matrix is singular");
  return inv;
}

Poly char_poly_faddeev_leverrier(const Mat& m) {
  const std::size_t d = m.dim();
  const auto& f = *m.field();
  if (f.characteristic() <= d) {
    throw Error(ErrorKind::InvalidSpec, "Faddeev-LeVerrier needs characteristic > dimension");
  }
  // c_d = 1; N_k = M N_{k-1} + c_{d-k+1} I; c_{d-k} = -tr(M N_k) / k.
  std::vector<Elem> c(d + 1, 0);
  c[d] = 1;
  Mat n(m.field(), d);
  const Mat id = Mat::identity(m.field(), d);
  for (std::size_t k = 1; k <= d; ++k) {
    n = m * n + scale(id, c[d - k + 1]);
    const Mat mn = m * n;
    Elem tr = 0;
    for (std::size_t i = 0; i < d; ++i) tr = f.add(tr, mn(i, i));
    c[d - k] = f.neg(f.div(tr, f.from_int(static_cast<std::int64_t>(k))));
  }
  return Poly(m.field(), std::move(c));
}

Poly char_poly_expansion(const Mat& m) {
  const std::size_t d = m.dim();
  const auto& field = m.field();
  if (d == 0) return Poly::constant(field, 1);
  std::vector<std::vector<Poly>> a(d, std::vector<Poly>(d, Poly::zero(field)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      a[i][j] = Poly::constant(field, field->neg(m(i, j)));
      if (i == j) a[i][j] = a[i][j] + Poly::monomial(field, 1, 1);
    }
  }
  // Bareiss: every division below is exact in F_q[t].
  Poly prev = Poly::constant(field, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < d && a[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == d) throw std::logic_error("tI - M lost full rank");
      std::swap(a[k], a[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j < d; ++j) {
        a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      }
      a[i][k] = Poly::zero(field);
    }
    prev = a[k][k];
  }
  Poly result = a[d - 1][d - 1];
  return negate ? -result : result;
}

Poly char_poly(const Mat& m) {
  if (m.field()->characteristic() > m.dim()) return char_poly_faddeev_leverrier(m);
  return char_poly_expansion(m);
}

Mat eval_poly_at_matrix(const Poly& h, const Mat& m) {
  if (!(*h.field() == *m.field())) throw Error(ErrorKind::CtxMismatch, "polynomial and matrix fields differ");
  Mat acc(m.field(), m.dim());
  const Mat id = Mat::identity(m.field(), m.dim());
  for (std::size_t k = h.coeffs().size(); k-- > 0;) acc = acc * m + scale(id, h.coeffs()[k]);
  return acc;
}

Poly min_poly(const Mat& m) {
  for (const Poly& cand : monic_divisors(char_poly(m))) {
    if (eval_poly_at_matrix(cand, m).is_zero()) return cand;
  }
  throw std::logic_error("characteristic polynomial does not annihilate its matrix");
}

Mat companion(const Poly& h) {
  if (!h.is_monic()) throw Error(ErrorKind::NotMonic, "companion matrix needs a monic polynomial");
  const std::size_t k = *h.degree();
  if (k == 0) throw Error(ErrorKind::DegreeMismatch, "companion matrix needs degree >= 1");
  const auto& f = *h.field();
  Mat c(h.field(), k);
  for (std::size_t i = 0; i + 1 < k; ++i) c(i, i + 1) = 1;
  for (std::size_t j = 0; j < k; ++j) c(k - 1, j) = f.neg(h.coeffs()[j]);
  return c;
}

Mat random_invertible(const FieldPtr& field, std::size_t d, Rng& rng) {
  while (true) {
    Mat m(field, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = static_cast<Elem>(rng.below(field->order()));
    if (det(m) != 0) return m;
  }
}

Mat random_similar(const Mat& m, Rng& rng) {
  const Mat p = random_invertible(m.field(), m.dim(), rng);
  return p * m * inverse(p);
}

}  // namespace cppforge
