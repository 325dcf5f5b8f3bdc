// Copyright 2026 The hamdec Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hamdec {

enum class ErrorKind {
  InvalidArgument,
  InvalidConnectionSet,
  EmptyConnectionSet,
  RepeatedVertex,
  InvalidCertificate,
  NotAdmissible,
  Unsupported,
  LengthMultisetMismatch,
  SignAssignmentFailure,
  CongruenceViolation,
  NotHamiltonPath,
  BadMultisetSize,
  InvalidLength,
  NotPrime,
  WindowTooSmall,
  Overflow,
  ResourceLimit,
  ConstructionFailed,
  ParseError,
  UnsupportedSchema,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidConnectionSet: return "InvalidConnectionSet";
    case ErrorKind::EmptyConnectionSet: return "EmptyConnectionSet";
    case ErrorKind::RepeatedVertex: return "RepeatedVertex";
    case ErrorKind::InvalidCertificate: return "InvalidCertificate";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::LengthMultisetMismatch: return "LengthMultisetMismatch";
    case ErrorKind::SignAssignmentFailure: return "SignAssignmentFailure";
    case ErrorKind::CongruenceViolation: return "CongruenceViolation";
    case ErrorKind::NotHamiltonPath: return "NotHamiltonPath";
    case ErrorKind::BadMultisetSize: return "BadMultisetSize";
    case ErrorKind::InvalidLength: return "InvalidLength";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnsupportedSchema: return "UnsupportedSchema";
  }
  return "Unknown";
}

/// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Checked 64-bit arithmetic. Vertices never wrap.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "integer overflow in addition");
  }
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "integer overflow in subtraction");
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
  }
  return r;
}

/// Residue in [0, n) for n > 0.
constexpr std::int64_t floor_mod(std::int64_t x, std::int64_t n) {
  std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace hamdec
