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

#include "cppforge/serialize.hpp"

#include "cppforge/error.hpp"

namespace cppforge {

namespace {

Json doc() {
  Json j;
  j["schema"] = kSchema;
  return j;
}

void check_schema(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "expected a JSON object");
  if (j.contains("schema") && j["schema"] != kSchema) {
    throw Error(ErrorKind::ParseError, "unsupported schema " + j["schema"].dump());
  }
}

// nlohmann raises its own exceptions for missing keys and type mismatches.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string(what) + ": " + e.what());
  }
}

FieldPtr field_of(const Json& j) { return Field::parse(j.at("field").get<std::string>()); }

Json rows_json(const Mat& m) {
  Json rows = Json::array();
  for (const auto& row : m.rows()) rows.push_back(row);
  return rows;
}

Mat rows_from(const FieldPtr& f, const Json& rows) {
  auto r = rows.get<std::vector<std::vector<Elem>>>();
  if (r.empty()) throw Error(ErrorKind::ParseError, "empty matrix");
  return Mat::from_rows(f, r);
}

std::string mode_name(Mode m) { return m == Mode::Conjugation ? "conjugation" : "sandwich"; }

}  // namespace

Json to_json(const Poly& f) {
  Json j = doc();
  j["field"] = f.field()->spec();
  j["coeffs"] = f.coeffs();
  j["text"] = to_string(f);
  return j;
}

Poly poly_from_json(const Json& j) {
  return guarded("poly", [&] {
    check_schema(j);
    return Poly(field_of(j), j.at("coeffs").get<std::vector<Elem>>());
  });
}

Json to_json(const Mat& m) {
  Json j = doc();
  j["field"] = m.field()->spec();
  j["d"] = m.dim();
  j["rows"] = rows_json(m);
  return j;
}

Mat mat_from_json(const Json& j) {
  return guarded("matrix", [&] {
    check_schema(j);
    Mat m = rows_from(field_of(j), j.at("rows"));
    if (j.contains("d") && j["d"].get<std::size_t>() != m.dim()) throw Error(ErrorKind::ParseError, "d disagrees with rows");
    return m;
  });
}

Json to_json(const PermTable& f) {
  Json j = doc();
  j["field"] = f.field()->spec();
  j["d"] = f.dim();
  j["index"] = "little-endian";
  j["bijective"] = f.bijective();
  j["table"] = f.table();
  return j;
}

PermTable perm_from_json(const Json& j) {
  return guarded("table", [&] {
    check_schema(j);
    if (j.contains("index") && j["index"] != "little-endian") throw Error(ErrorKind::ParseError, "unknown index convention");
    return PermTable(field_of(j), j.at("d").get<unsigned>(), j.at("table").get<std::vector<Index>>());
  });
}

Json to_json(const CycleStructure& c) {
  Json j = doc();
  j["fixed"] = c.fixed_points;
  Json cyc = Json::object();
  for (const auto& [len, count] : c.cycles) cyc[std::to_string(len)] = count;
  j["cycles"] = cyc;
  return j;
}

CycleStructure cycles_from_json(const Json& j) {
  return guarded("cycles", [&] {
    check_schema(j);
    CycleStructure c;
    c.fixed_points = j.at("fixed").get<std::uint64_t>();
    for (const auto& [len, count] : j.at("cycles").items()) {
      const std::uint64_t l = std::stoull(len);
      if (l < 2) throw Error(ErrorKind::ParseError, "cycle lengths start at 2");
      c.cycles[l] = count.get<std::uint64_t>();
    }
    return c;
  });
}

Json to_json(const TauSpec& t) {
  Json j;
  switch (t.kind) {
    case TauSpec::Kind::Identity:
      j["kind"] = "identity";
      break;
    case TauSpec::Kind::CoordinateWise:
      j["kind"] = "coordinate-wise";
      j["maps"] = t.maps;
      break;
    case TauSpec::Kind::AdditiveLinear:
      j["kind"] = "additive-linear";
      j["rows"] = rows_json(t.linear);
      break;
  }
  return j;
}

TauSpec tau_from_json(const Json& j, const FieldPtr& field) {
  return guarded("tau", [&] {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "identity") return TauSpec::identity();
    if (kind == "coordinate-wise") return TauSpec::coordinate_wise(j.at("maps").get<std::vector<std::vector<Elem>>>());
    if (kind == "additive-linear") {
      return TauSpec::additive_linear(rows_from(Field::make(field->characteristic(), 1), j.at("rows")));
    }
    throw Error(ErrorKind::ParseError, "unknown tau kind '" + kind + "'");
  });
}

Json to_json(const ConstructionSpec& s) {
  Json j = doc();
  j["claim"] = s.claim;
  j["field"] = s.field->spec();
  j["r"] = s.r;
  j["h"] = s.h.coeffs();
  j["M"] = rows_json(s.M);
  j["mode"] = mode_name(s.mode);
  j["tau1"] = to_json(s.tau1);
  if (s.tau2) j["tau2"] = to_json(*s.tau2);
  return j;
}

ConstructionSpec construction_from_json(const Json& j) {
  return guarded("construction", [&] {
    check_schema(j);
    ConstructionSpec s;
    s.claim = j.at("claim").get<std::string>();
    s.field = field_of(j);
    s.r = j.at("r").get<std::uint32_t>();
    s.h = Poly(s.field, j.at("h").get<std::vector<Elem>>());
    s.M = rows_from(s.field, j.at("M"));
    const auto mode = j.at("mode").get<std::string>();
    if (mode != "conjugation" && mode != "sandwich") throw Error(ErrorKind::ParseError, "unknown mode '" + mode + "'");
    s.mode = mode == "conjugation" ? Mode::Conjugation : Mode::Sandwich;
    s.tau1 = tau_from_json(j.at("tau1"), s.field);
    if (j.contains("tau2")) s.tau2 = tau_from_json(j["tau2"], s.field);
    return s;
  });
}

Json to_json(const NamedParams& p) {
  Json j;
  j["field"] = p.field->spec();
  if (p.r) j["r"] = *p.r;
  if (p.m) j["m"] = *p.m;
  if (p.h) j["h"] = p.h->coeffs();
  if (p.a1) j["a1"] = *p.a1;
  if (p.a2) j["a2"] = *p.a2;
  j["matrix"] = p.matrix == MatrixChoice::Companion ? "companion" : "conjugate";
  j["pair"] = p.pair == PairMode::Inverse ? "inverse" : "independent";
  j["seed"] = p.seed;
  return j;
}

NamedParams params_from_json(const Json& j) {
  return guarded("parameters", [&] {
    NamedParams p;
    p.field = field_of(j);
    if (j.contains("r")) p.r = j["r"].get<std::uint32_t>();
    if (j.contains("m")) p.m = j["m"].get<Elem>();
    if (j.contains("h")) p.h = Poly(p.field, j["h"].get<std::vector<Elem>>());
    if (j.contains("a1")) p.a1 = j["a1"].get<std::vector<Elem>>();
    if (j.contains("a2")) p.a2 = j["a2"].get<std::vector<Elem>>();
    const auto matrix = j.value("matrix", std::string("companion"));
    if (matrix != "companion" && matrix != "conjugate") throw Error(ErrorKind::ParseError, "matrix is companion or conjugate");
    p.matrix = matrix == "companion" ? MatrixChoice::Companion : MatrixChoice::RandomConjugate;
    const auto pair = j.value("pair", std::string("inverse"));
    if (pair != "inverse" && pair != "independent") throw Error(ErrorKind::ParseError, "pair is inverse or independent");
    p.pair = pair == "inverse" ? PairMode::Inverse : PairMode::Independent;
    p.seed = j.value("seed", std::uint64_t{42});
    return p;
  });
}

Json univariate_to_json(const BasisPair& basis, const Poly& f) {
  Json j = doc();
  j["field"] = basis.big()->spec();
  j["subfield"] = basis.sub()->spec();
  j["d"] = basis.dim();
  j["alpha"] = basis.alpha();
  j["coeffs"] = f.coeffs();
  return j;
}

Poly univariate_from_json(const Json& j) {
  return guarded("univariate", [&] {
    check_schema(j);
    return Poly(field_of(j), j.at("coeffs").get<std::vector<Elem>>());
  });
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace cppforge
