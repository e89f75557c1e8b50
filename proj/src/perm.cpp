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

#include "cppforge/perm.hpp"

#include "cppforge/error.hpp"

namespace cppforge {

namespace {

void require_same(const PermTable& a, const PermTable& b) {
  if (!a.field() || !b.field() || !(*a.field() == *b.field()) || a.dim() != b.dim()) {
    throw Error(ErrorKind::CtxMismatch, "tables over different spaces");
  }
}

void require_bijective(const PermTable& f, const char* op) {
  if (!f.bijective()) throw Error(ErrorKind::NotBijective, std::string(op) + " needs a bijection");
}

bool check_bijective(const std::vector<Index>& t) {
  std::vector<bool> seen(t.size(), false);
  for (Index y : t) {
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

}  // namespace

VectorSpace::VectorSpace(FieldPtr field, unsigned d) : field_(std::move(field)), d_(d) {
  std::uint64_t n = 1;
  for (unsigned i = 0; i < d_; ++i) {
    n *= field_->order();
    if (n > kMaxSize) {
      throw Error(ErrorKind::SizeCap, "q^d = " + std::to_string(field_->order()) + "^" +
                                          std::to_string(d_) + " exceeds the table cap 2^20");
    }
  }
  size_ = static_cast<Index>(n);
}

std::vector<Elem> VectorSpace::coords(Index x) const {
  std::vector<Elem> v(d_);
  coords(x, v);
  return v;
}

void VectorSpace::coords(Index x, std::span<Elem> out) const {
  const Index q = field_->order();
  for (unsigned i = 0; i < d_; ++i) {
    out[i] = x % q;
    x /= q;
  }
}

Index VectorSpace::index(std::span<const Elem> v) const {
  const Index q = field_->order();
  Index x = 0;
  for (unsigned i = d_; i-- > 0;) x = x * q + v[i];
  return x;
}

Index VectorSpace::add(Index a, Index b) const noexcept {
  const Index p = field_->characteristic();
  if (p == 2) return a ^ b;
  Index r = 0;
  Index place = 1;
  while (a != 0 || b != 0) {
    Index s = a % p + b % p;
    if (s >= p) s -= p;
    r += s * place;
    place *= p;
    a /= p;
    b /= p;
  }
  return r;
}

Index VectorSpace::neg(Index a) const noexcept {
  const Index p = field_->characteristic();
  if (p == 2) return a;
  Index r = 0;
  Index place = 1;
  while (a != 0) {
    const Index dg = a % p;
    r += (dg == 0 ? 0 : p - dg) * place;
    place *= p;
    a /= p;
  }
  return r;
}

std::vector<Index> VectorSpace::prime_basis() const {
  std::vector<Index> out;
  Index g = 1;
  for (unsigned k = 0; k < prime_dim(); ++k) {
    out.push_back(g);
    g *= field_->characteristic();
  }
  return out;
}

PermTable::PermTable(FieldPtr field, unsigned d, std::vector<Index> table)
    : field_(std::move(field)), d_(d), table_(std::move(table)) {
  const VectorSpace vs(field_, d_);
  if (table_.size() != vs.size()) {
    throw Error(ErrorKind::InvalidSpec, "table length " + std::to_string(table_.size()) +
                                            " differs from q^d = " + std::to_string(vs.size()));
  }
  for (Index y : table_) {
    if (y >= vs.size()) throw Error(ErrorKind::InvalidSpec, "table output out of range");
  }
  bijective_ = check_bijective(table_);
}

PermTable PermTable::identity(FieldPtr field, unsigned d) {
  const VectorSpace vs(field, d);
  std::vector<Index> t(vs.size());
  for (Index x = 0; x < vs.size(); ++x) t[x] = x;
  return PermTable(std::move(field), d, std::move(t));
}

PermTable PermTable::from_fn(FieldPtr field, unsigned d,
                             const std::function<void(std::span<const Elem>, std::span<Elem>)>& rule) {
  const VectorSpace vs(field, d);
  std::vector<Index> t(vs.size());
  std::vector<Elem> in(d);
  std::vector<Elem> out(d);
  for (Index x = 0; x < vs.size(); ++x) {
    vs.coords(x, in);
    rule(in, out);
    for (Elem c : out) {
      if (!field->contains(c)) throw Error(ErrorKind::InvalidSpec, "rule produced an element outside the field");
    }
    t[x] = vs.index(out);
  }
  return PermTable(std::move(field), d, std::move(t));
}

bool PermTable::operator==(const PermTable& other) const {
  return d_ == other.d_ && table_ == other.table_ && field_ && other.field_ && *field_ == *other.field_;
}

PermTable compose(const PermTable& f, const PermTable& g) {
  require_same(f, g);
  std::vector<Index> t(g.size());
  for (Index x = 0; x < g.size(); ++x) t[x] = f(g(x));
  return PermTable(f.field(), f.dim(), std::move(t));
}

PermTable invert(const PermTable& f) {
  require_bijective(f, "invert");
  std::vector<Index> t(f.size());
  for (Index x = 0; x < f.size(); ++x) t[f(x)] = x;
  return PermTable(f.field(), f.dim(), std::move(t));
}

PermTable add_pointwise(const PermTable& f, const PermTable& g) {
  require_same(f, g);
  const VectorSpace vs = f.space();
  std::vector<Index> t(f.size());
  for (Index x = 0; x < f.size(); ++x) t[x] = vs.add(f(x), g(x));
  return PermTable(f.field(), f.dim(), std::move(t));
}

PermTable npower(const PermTable& f, std::int64_t n) {
  if (n < 0) return npower(invert(f), -n);
  PermTable result = PermTable::identity(f.field(), f.dim());
  PermTable base = f;
  while (n > 0) {
    if (n & 1) result = compose(base, result);
    n >>= 1;
    if (n) base = compose(base, base);
  }
  return result;
}

bool is_identity(const PermTable& f) {
  for (Index x = 0; x < f.size(); ++x) {
    if (f(x) != x) return false;
  }
  return true;
}

std::uint64_t CycleStructure::total() const {
  std::uint64_t n = fixed_points;
  for (const auto& [len, count] : cycles) n += len * count;
  return n;
}

CycleStructure cycle_structure(const PermTable& f) {
  require_bijective(f, "cycle_structure");
  CycleStructure cs;
  std::vector<bool> seen(f.size(), false);
  for (Index x = 0; x < f.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    Index y = x;
    do {
      seen[y] = true;
      y = f(y);
      ++len;
    } while (y != x);
    if (len == 1) {
      ++cs.fixed_points;
    } else {
      ++cs.cycles[len];
    }
  }
  return cs;
}

bool is_r_regular(const PermTable& f, std::uint64_t r) {
  const auto cs = cycle_structure(f);
  for (const auto& [len, count] : cs.cycles) {
    if (len != r) return false;
  }
  return true;
}

bool is_cpp(const PermTable& f) {
  if (!f.bijective()) return false;
  return add_pointwise(f, PermTable::identity(f.field(), f.dim())).bijective();
}

bool is_additive(const PermTable& f, AdditivityCheck mode) {
  const VectorSpace vs = f.space();
  const Index n = f.size();
  if (mode == AdditivityCheck::Exhaustive) {
    if (std::uint64_t{n} * n > (std::uint64_t{1} << 28)) {
      throw Error(ErrorKind::SizeCap, "exhaustive additivity check is limited to 2^14 points");
    }
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y) {
        if (f(vs.add(x, y)) != vs.add(f(x), f(y))) return false;
      }
    return true;
  }
  for (Index g : vs.prime_basis()) {
    const Index fg = f(g);
    for (Index x = 0; x < n; ++x) {
      if (f(vs.add(x, g)) != vs.add(f(x), fg)) return false;
    }
  }
  return f(0) == 0;
}

std::optional<std::vector<Index>> find_cycle(const PermTable& f,
                                             const std::function<bool(std::uint64_t)>& accept) {
  require_bijective(f, "find_cycle");
  std::vector<bool> seen(f.size(), false);
  for (Index x = 0; x < f.size(); ++x) {
    if (seen[x]) continue;
    std::vector<Index> cyc;
    Index y = x;
    do {
      seen[y] = true;
      cyc.push_back(y);
      y = f(y);
    } while (y != x);
    if (accept(cyc.size())) return cyc;
  }
  return std::nullopt;
}

std::optional<std::pair<Index, Index>> find_collision(const PermTable& f) {
  std::vector<std::int64_t> pre(f.size(), -1);
  for (Index x = 0; x < f.size(); ++x) {
    const Index y = f(x);
    if (pre[y] >= 0) return std::make_pair(static_cast<Index>(pre[y]), x);
    pre[y] = x;
  }
  return std::nullopt;
}

}  // namespace cppforge
