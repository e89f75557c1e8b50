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

#include "cppforge/fieldext.hpp"

#include "cppforge/error.hpp"
#include "cppforge/linalg.hpp"

namespace cppforge {

BasisPair::BasisPair(FieldPtr sub, unsigned d, std::optional<std::vector<Elem>> alpha)
    : BasisPair(std::make_shared<const FieldExtension>(std::move(sub), d), std::move(alpha)) {}

BasisPair::BasisPair(std::shared_ptr<const FieldExtension> ext, std::optional<std::vector<Elem>> alpha)
    : ext_(std::move(ext)) {
  const auto& big = *ext_->big();
  const unsigned d = ext_->relative_degree();
  if (alpha) {
    if (alpha->size() != d) {
      throw Error(ErrorKind::DimMismatch, "basis needs " + std::to_string(d) + " elements");
    }
    for (Elem a : *alpha) {
      if (!big.contains(a)) throw Error(ErrorKind::CtxMismatch, "basis element outside the field");
    }
    alpha_ = *alpha;
  } else {
    const Elem gamma = big.degree() > 1 ? big.characteristic() : 1;
    Elem x = 1;
    for (unsigned i = 0; i < d; ++i) {
      alpha_.push_back(x);
      x = big.mul(x, gamma);
    }
  }
  // Gram matrix of the trace form; its inverse maps alpha onto the dual basis.
  Mat gram(ext_->sub(), d);
  for (unsigned i = 0; i < d; ++i)
    for (unsigned j = 0; j < d; ++j) gram(i, j) = ext_->trace(big.mul(alpha_[i], alpha_[j]));
  if (det(gram) == 0) throw Error(ErrorKind::DependentBasis, "basis is F_q-linearly dependent");
  const Mat ginv = inverse(gram);
  beta_.assign(d, 0);
  for (unsigned j = 0; j < d; ++j) {
    Elem acc = 0;
    for (unsigned k = 0; k < d; ++k) acc = big.add(acc, big.mul(ext_->embed(ginv(k, j)), alpha_[k]));
    beta_[j] = acc;
  }
}

std::vector<Elem> BasisPair::encode(Elem x) const {
  if (!big()->contains(x)) throw Error(ErrorKind::CtxMismatch, "element outside the extension field");
  std::vector<Elem> v(dim());
  for (unsigned j = 0; j < dim(); ++j) v[j] = ext_->trace(big()->mul(x, beta_[j]));
  return v;
}

Elem BasisPair::decode(std::span<const Elem> coords) const {
  if (coords.size() != dim()) throw Error(ErrorKind::DimMismatch, "coordinate vector has wrong length");
  const auto& b = *big();
  Elem acc = 0;
  for (unsigned i = 0; i < dim(); ++i) {
    if (!sub()->contains(coords[i])) throw Error(ErrorKind::CtxMismatch, "coordinate outside the subfield");
    acc = b.add(acc, b.mul(alpha_[i], ext_->embed(coords[i])));
  }
  return acc;
}

Poly to_univariate(const BasisPair& basis, const PermTable& f) {
  if (!(*f.field() == *basis.sub()) || f.dim() != basis.dim()) {
    throw Error(ErrorKind::CtxMismatch, "table and basis live over different spaces");
  }
  const auto& big = *basis.big();
  const std::uint32_t n = big.order();
  if (n > kUnivariateCap) {
    throw Error(ErrorKind::SizeCap, "univariate export is limited to q^d <= 2^12");
  }
  const VectorSpace vs = f.space();
  std::vector<Elem> value(n);
  for (Elem x = 0; x < n; ++x) {
    const auto v = basis.encode(x);
    value[x] = basis.decode(vs.coords(f(vs.index(v))));
  }
  // sum_a value(a) (1 - (x - a)^{n-1}), with (x - a)^{n-1} = sum_k a^{n-1-k} x^k
  // because binom(n-1, k) = (-1)^k mod p.
  std::vector<Elem> c(n, 0);
  c[0] = value[0];
  for (Elem a = 0; a < n; ++a) {
    const Elem fa = value[a];
    if (fa == 0) continue;
    c[n - 1] = big.sub(c[n - 1], fa);
    if (a == 0 || n < 3) continue;
    // k from n-2 down to 1 sees a^1, a^2, ...
    Elem pw = fa;
    for (std::uint32_t k = n - 1; k-- > 1;) {
      pw = big.mul(pw, a);
      c[k] = big.sub(c[k], pw);
    }
  }
  if (n == 2) {
    // Only c_0 and c_1: c_1 = f(1) - f(0).
    c[1] = big.sub(value[1], value[0]);
  }
  return Poly(basis.big(), std::move(c));
}

bool is_linearized(const Poly& f) {
  const std::uint64_t p = f.field()->characteristic();
  std::uint64_t next_power = 1;
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (k == next_power) {
      next_power *= p;
      continue;
    }
    if (f.coeffs()[k] != 0) return false;
  }
  return true;
}

}  // namespace cppforge
