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

#include <stdexcept>
#include <string>
#include <string_view>

namespace cppforge {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  CtxMismatch,
  DivisionByZero,
  CharacteristicDividesN,
  CharacteristicDividesR,
  DimMismatch,
  Singular,
  NotMonic,
  NotBijective,
  SizeCap,
  NotASubfieldRelation,
  DependentBasis,
  InvalidSpec,
  HypothesisViolated,
  UnknownClaim,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Recoverable error raised for contract violations by callers. Internal
/// invariant failures (arithmetic bugs) raise std::logic_error instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::CtxMismatch: return "CtxMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::CharacteristicDividesN: return "CharacteristicDividesN";
    case ErrorKind::CharacteristicDividesR: return "CharacteristicDividesR";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::NotASubfieldRelation: return "NotASubfieldRelation";
    case ErrorKind::DependentBasis: return "DependentBasis";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::UnknownClaim: return "UnknownClaim";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace cppforge
