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

// Claim registry and brute-force verification over parameter grids.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cppforge/perm.hpp"
#include "cppforge/serialize.hpp"

namespace cppforge {

enum class Profile { Quick, Full };
enum class Verdict { Pass, Fail, HypothesisSkipped };

std::string_view to_string(Verdict v) noexcept;
std::string_view to_string(Profile p) noexcept;
Profile parse_profile(std::string_view s);

struct VerificationReport {
  std::string claim;
  Json params;
  Verdict verdict = Verdict::Fail;
  /// Required on failure; negative claims also carry their short cycle on pass.
  std::optional<Json> witness;
  std::string detail;
  std::optional<double> millis;

  bool operator==(const VerificationReport&) const = default;
};

Json to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);

struct ClaimInfo {
  std::string id;
  std::string family;
  std::string statement;
  /// Checked on request only, never part of "all" or of prefix matches.
  bool exploratory = false;
};

const std::vector<ClaimInfo>& claims();
const ClaimInfo& claim_info(std::string_view id);

/// "all", an exact id, or a dotted prefix ("p4.1" selects p4.1.1..p4.1.4 but
/// not p4.10). Throws UnknownClaim when nothing matches.
std::vector<std::string> match_claims(std::string_view pattern);

/// Restricts or replaces the default axes of a grid.
struct Axes {
  std::vector<std::uint64_t> q;
  std::vector<std::uint32_t> r;
  /// Polynomial texts replacing the enumerated h of the h-driven claims.
  std::vector<std::string> h;
};

struct VerifyOptions {
  Profile profile = Profile::Quick;
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  bool timing = false;
  /// Largest q^d evaluated; defaults to 2^12 quick, 2^20 full.
  std::optional<std::uint64_t> cap;
  Axes axes;
};

std::uint64_t default_cap(Profile p) noexcept;

/// Parameter points of one claim, seeds already derived from opts.seed.
std::vector<Json> grid(std::string_view claim, const VerifyOptions& opts);

/// Replaces sigma(entry) by value before the checks run.
struct Mutation {
  Index entry = 0;
  Index value = 0;
};

/// Builds the instance described by params and checks the claim on it.
VerificationReport verify_point(std::string_view claim, const Json& params,
                                const std::optional<Mutation>& mutation = std::nullopt);

/// All points of every claim matched by pattern, ordered by claim then point.
std::vector<VerificationReport> verify(std::string_view pattern, const VerifyOptions& opts);

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
};

Summary summarize(const std::vector<VerificationReport>& reports);

/// Claim id, statement and quick-grid coverage for every registered claim.
Json traceability();

/// Open-question sweep: M ranges over random conjugates of companion(Q_r)
/// with a non-additive tau at x_1; counts how often sigma stays a CPP and
/// r-regular. Reports numbers only, asserts nothing.
Json explore_general_matrix(std::uint32_t r, std::uint64_t q, unsigned samples, std::uint64_t seed);

}  // namespace cppforge
