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

// Maps on F_q^d stored as dense tables.
//
// A vector (x_1, ..., x_d) has index x_1 + x_2 q + ... + x_d q^{d-1}
// (little-endian in coordinates). Since each coordinate is itself a base-p
// number, the index read in base p lists all m d F_p-coordinates.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cppforge/gf.hpp"

namespace cppforge {

using Index = std::uint32_t;

/// F_q^d with index arithmetic.
class VectorSpace {
 public:
  static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 20;

  VectorSpace(FieldPtr field, unsigned d);

  const FieldPtr& field() const noexcept { return field_; }
  unsigned dim() const noexcept { return d_; }
  Index size() const noexcept { return size_; }

  std::vector<Elem> coords(Index x) const;
  void coords(Index x, std::span<Elem> out) const;
  Index index(std::span<const Elem> v) const;

  Index add(Index a, Index b) const noexcept;
  Index neg(Index a) const noexcept;
  Index sub(Index a, Index b) const noexcept { return add(a, neg(b)); }

  /// Number of F_p-coordinates, m d.
  unsigned prime_dim() const noexcept { return field_->degree() * d_; }
  /// The F_p basis vectors p^k, k < m d.
  std::vector<Index> prime_basis() const;

 private:
  FieldPtr field_;
  unsigned d_;
  Index size_;
};

class PermTable {
 public:
  PermTable() = default;
  PermTable(FieldPtr field, unsigned d, std::vector<Index> table);

  static PermTable identity(FieldPtr field, unsigned d);

  /// Fills the table by evaluating `rule` on every vector in index order.
  static PermTable from_fn(FieldPtr field, unsigned d,
                           const std::function<void(std::span<const Elem>, std::span<Elem>)>& rule);

  const FieldPtr& field() const noexcept { return field_; }
  unsigned dim() const noexcept { return d_; }
  Index size() const noexcept { return static_cast<Index>(table_.size()); }
  VectorSpace space() const { return VectorSpace(field_, d_); }

  Index operator()(Index x) const noexcept { return table_[x]; }
  const std::vector<Index>& table() const noexcept { return table_; }
  bool bijective() const noexcept { return bijective_; }

  bool operator==(const PermTable& other) const;

 private:
  FieldPtr field_;
  unsigned d_ = 0;
  std::vector<Index> table_;
  bool bijective_ = false;
};

/// f o g.
PermTable compose(const PermTable& f, const PermTable& g);
PermTable invert(const PermTable& f);
/// x -> f(x) + g(x).
PermTable add_pointwise(const PermTable& f, const PermTable& g);
/// f^{(n)}; negative n goes through the inverse.
PermTable npower(const PermTable& f, std::int64_t n);

bool is_identity(const PermTable& f);

struct CycleStructure {
  std::uint64_t fixed_points = 0;
  /// length -> count, lengths >= 2 only.
  std::map<std::uint64_t, std::uint64_t> cycles;

  std::uint64_t total() const;
  bool operator==(const CycleStructure&) const = default;
};

CycleStructure cycle_structure(const PermTable& f);

/// Every non-fixed orbit has length exactly r.
bool is_r_regular(const PermTable& f, std::uint64_t r);
bool is_cpp(const PermTable& f);

enum class AdditivityCheck { Exhaustive, Generators };

/// Exhaustive mode checks all pairs. Generator mode checks
/// f(x + g) = f(x) + f(g) for every x and every F_p basis vector g, which
/// already forces additivity.
bool is_additive(const PermTable& f, AdditivityCheck mode = AdditivityCheck::Generators);

/// First cycle, scanning start points in index order, whose length
/// satisfies `accept`. Fixed points are cycles of length 1.
std::optional<std::vector<Index>> find_cycle(const PermTable& f,
                                             const std::function<bool(std::uint64_t)>& accept);

/// Two inputs with the same image, or nullopt for a bijection.
std::optional<std::pair<Index, Index>> find_collision(const PermTable& f);

}  // namespace cppforge
