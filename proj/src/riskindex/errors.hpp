/*
 * Copyright 2026 the riskindex authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RISKINDEX_ERRORS_HPP
#define RISKINDEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace riskindex {

enum class ErrorKind {
  EmptyInput,
  BadWeights,
  NonFiniteValue,
  BadLevel,
  UnknownVariable,
  BadCount,
  BadExponent,
  BadTolerance,
  BadAsset,
  BadParameters,
  BadDensity,
  BadEpsilon,
  UnsupportedSpec,
  DerivativeUnavailable,
  NonPositivePayoff,
  NoConvergence,
  DimensionMismatch,
  ParseError,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::BadWeights: return "BadWeights";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::BadLevel: return "BadLevel";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::BadCount: return "BadCount";
    case ErrorKind::BadExponent: return "BadExponent";
    case ErrorKind::BadTolerance: return "BadTolerance";
    case ErrorKind::BadAsset: return "BadAsset";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::BadDensity: return "BadDensity";
    case ErrorKind::BadEpsilon: return "BadEpsilon";
    case ErrorKind::UnsupportedSpec: return "UnsupportedSpec";
    case ErrorKind::DerivativeUnavailable: return "DerivativeUnavailable";
    case ErrorKind::NonPositivePayoff: return "NonPositivePayoff";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace riskindex

#endif  // RISKINDEX_ERRORS_HPP
