// Copyright 2026 The sqkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace sq {

/// Failure categories surfaced to the CLI (exit code 3) and to tests.
enum class ErrorCode {
  InvalidSector,
  SectorViolation,
  Normalization,
  Capacity,
  Convergence,
  Ordering,
  Parity,
  IndexOutOfRange,
  NoDegeneracy,
  Structure,
  Bracket,
  UndefinedAxis,
  Leakage,
  NoEntanglement,
  Manifold,
  Domain,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidSector: return "invalid-sector";
    case ErrorCode::SectorViolation: return "sector-violation";
    case ErrorCode::Normalization: return "normalization";
    case ErrorCode::Capacity: return "capacity";
    case ErrorCode::Convergence: return "convergence";
    case ErrorCode::Ordering: return "ordering";
    case ErrorCode::Parity: return "parity";
    case ErrorCode::IndexOutOfRange: return "index-out-of-range";
    case ErrorCode::NoDegeneracy: return "no-degeneracy";
    case ErrorCode::Structure: return "structure";
    case ErrorCode::Bracket: return "bracket";
    case ErrorCode::UndefinedAxis: return "undefined-axis";
    case ErrorCode::Leakage: return "leakage";
    case ErrorCode::NoEntanglement: return "no-entanglement";
    case ErrorCode::Manifold: return "manifold";
    case ErrorCode::Domain: return "domain";
  }
  return "unknown";
}

}  // namespace sq
