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

// Builders for sigma = tau1 o sigma_M o tau2 on F_q^d and the named instances.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cppforge/gf.hpp"
#include "cppforge/linalg.hpp"
#include "cppforge/perm.hpp"
#include "cppforge/poly.hpp"
#include "cppforge/rng.hpp"

namespace cppforge {

struct TauSpec {
  enum class Kind { Identity, CoordinateWise, AdditiveLinear };

  Kind kind = Kind::Identity;
  /// CoordinateWise: one table of length q per coordinate.
  std::vector<std::vector<Elem>> maps;
  /// AdditiveLinear: (m d) x (m d) over F_p acting on the base-p digits of
  /// the vector index.
  Mat linear;

  static TauSpec identity() { return {}; }
  static TauSpec coordinate_wise(std::vector<std::vector<Elem>> maps);
  static TauSpec additive_linear(Mat m);

  bool operator==(const TauSpec& other) const;
};

enum class Mode { Conjugation, Sandwich };

struct ConstructionSpec {
  std::string claim = "custom";
  FieldPtr field;
  /// Target regularity; 0 when the construction carries none.
  std::uint32_t r = 0;
  Poly h;
  Mat M;
  TauSpec tau1;
  /// Present only in Sandwich mode; Conjugation derives tau1^{-1}.
  std::optional<TauSpec> tau2;
  Mode mode = Mode::Conjugation;

  unsigned dim() const noexcept { return static_cast<unsigned>(M.dim()); }
  bool operator==(const ConstructionSpec& other) const;
};

/// v -> M v. Bijectivity is recorded, not required.
PermTable sigma_from_matrix(const Mat& M);

PermTable tau_to_table(const TauSpec& spec, const FieldPtr& field, unsigned d);

/// tau1 o sigma_M o tau2, with tau2 = tau1^{-1} in Conjugation mode.
PermTable build(const ConstructionSpec& spec);

enum class HStrategy {
  FullCyclotomic,
  IrreducibleFactor,
  Quotient,
  /// (t^r - 1)/(t - 1) for odd r, (t^r - 1)/(t + 1) for even r, so that
  /// h(-1) != 0 always.
  ReducibleWitness,
  Explicit,
};

Poly pick_h(std::uint32_t r, const FieldPtr& field, HStrategy strategy,
            const std::optional<Poly>& explicit_h = std::nullopt);

/// Seeded invertible F_p-linear map on the m d prime coordinates.
TauSpec random_additive_pp(const FieldPtr& field, unsigned d, std::uint64_t seed);

enum class PpKind { Any, NonAdditive, Additive, Odd };

/// A permutation of F_q as a table of length q.
std::vector<Elem> random_pp(const FieldPtr& field, PpKind kind, Rng& rng);

/// Single-coordinate helpers on tables of length q.
bool is_pp_table(const FieldPtr& field, const std::vector<Elem>& a);
bool is_additive_table(const FieldPtr& field, const std::vector<Elem>& a);
bool is_odd_table(const FieldPtr& field, const std::vector<Elem>& a);
std::vector<Elem> invert_table(const std::vector<Elem>& a);

enum class MatrixChoice { Companion, RandomConjugate };
enum class PairMode { Inverse, Independent };

struct NamedParams {
  FieldPtr field;
  std::optional<std::uint32_t> r;
  /// The free entry m of the parametrized 2x2 matrices, an element of F_q^*.
  std::optional<Elem> m;
  std::optional<std::vector<Elem>> a1;
  std::optional<std::vector<Elem>> a2;
  /// Only for sandwich constructions: a2 = a1^{-1} or drawn independently.
  PairMode pair = PairMode::Inverse;
  MatrixChoice matrix = MatrixChoice::Companion;
  std::optional<Poly> h;
  std::uint64_t seed = 42;
};

/// Construction family of a claim id: "p4.10.3" -> "p4.10", "thm3.1.2" ->
/// "thm3.1"; ids that are themselves constructions map to themselves.
/// Throws UnknownClaim.
std::string construction_family(std::string_view id);

/// Every construction id accepted by named_construction.
const std::vector<std::string>& construction_ids();

/// Validates every hypothesis of the cited statement, then returns the spec.
/// Throws HypothesisViolated naming the broken hypothesis.
ConstructionSpec named_construction(std::string_view id, const NamedParams& params);

}  // namespace cppforge
