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

// JSON forms of every artifact. Top-level documents carry schema "cppforge/1";
// parsers accept the tag or its absence, and reject any other value.

#include <json.hpp>

#include "cppforge/construct.hpp"
#include "cppforge/fieldext.hpp"
#include "cppforge/gf.hpp"
#include "cppforge/linalg.hpp"
#include "cppforge/perm.hpp"
#include "cppforge/poly.hpp"

namespace cppforge {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "cppforge/1";

Json to_json(const Poly& f);
Poly poly_from_json(const Json& j);

Json to_json(const Mat& m);
Mat mat_from_json(const Json& j);

Json to_json(const PermTable& f);
PermTable perm_from_json(const Json& j);

Json to_json(const CycleStructure& c);
CycleStructure cycles_from_json(const Json& j);

Json to_json(const TauSpec& t);
TauSpec tau_from_json(const Json& j, const FieldPtr& field);

Json to_json(const ConstructionSpec& s);
ConstructionSpec construction_from_json(const Json& j);

Json to_json(const NamedParams& p);
NamedParams params_from_json(const Json& j);

/// {field, subfield, d, alpha, coeffs}: coefficients of the univariate form,
/// lowest degree first, as element indices of F_{q^d}.
Json univariate_to_json(const BasisPair& basis, const Poly& f);
Poly univariate_from_json(const Json& j);

/// Parses text into Json, mapping syntax errors to ParseError.
Json parse_json(std::string_view text);

}  // namespace cppforge
