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

/**
 * @file
 * @brief JSON certificate documents (schema_version "1").
 *
 *   {
 *     "schema_version": "1",
 *     "provenance": "consecutive k=4",
 *     "connection_set": [1, 2, 3, 4],
 *     "period": 8,
 *     "starter_vertices": [0, -1, 1, 5, 2, 3, 6, 4, 8],
 *     "offsets": [0, 2, 4, 6]
 *   }
 *
 * Emission is byte-stable: fixed key order, arrays on one line, trailing
 * newline. Parsing accepts any key order and whitespace.
 */
#pragma once

#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hamdec/core.hpp"

namespace hamdec {

inline constexpr std::string_view kSchemaVersion = "1";

struct CertificateDocument {
  std::string schema_version{kSchemaVersion};
  std::vector<std::int64_t> connection_set;
  std::int64_t period = 0;
  std::vector<std::int64_t> starter_vertices;
  std::vector<std::int64_t> offsets;
  std::string provenance;

  static CertificateDocument from_certificate(const DecompositionCertificate& c,
                                              std::string provenance = {}) {
    CertificateDocument doc;
    const auto half = c.connection_set().positive_half();
    doc.connection_set.assign(half.begin(), half.end());
    doc.period = c.period();
    doc.starter_vertices.assign(c.starter().begin(), c.starter().end());
    doc.offsets.assign(c.offsets().begin(), c.offsets().end());
    doc.provenance = std::move(provenance);
    return doc;
  }

  /// Throws InvalidCertificate / InvalidConnectionSet on inconsistent data.
  DecompositionCertificate to_certificate() const {
    return DecompositionCertificate(ConnectionSet(connection_set), period, starter_vertices,
                                    offsets);
  }

  bool operator==(const CertificateDocument&) const = default;
};

namespace detail {

inline std::string json_array(std::span<const std::int64_t> values) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) os << ", ";
    os << values[i];
  }
  os << ']';
  return os.str();
}

}  // namespace detail

inline std::string emit_document(const CertificateDocument& doc) {
  std::ostringstream os;
  os << "{\n"
     << "  \"schema_version\": " << nlohmann::json(doc.schema_version).dump() << ",\n"
     << "  \"provenance\": " << nlohmann::json(doc.provenance).dump() << ",\n"
     << "  \"connection_set\": " << detail::json_array(doc.connection_set) << ",\n"
     << "  \"period\": " << doc.period << ",\n"
     << "  \"starter_vertices\": " << detail::json_array(doc.starter_vertices) << ",\n"
     << "  \"offsets\": " << detail::json_array(doc.offsets) << "\n"
     << "}\n";
  return os.str();
}

inline std::string emit_certificate(const DecompositionCertificate& c,
                                    const std::string& provenance = {}) {
  return emit_document(CertificateDocument::from_certificate(c, provenance));
}

/// Throws ParseError for malformed JSON or fields, UnsupportedSchema for an
/// unknown schema_version.
inline CertificateDocument parse_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "document is not a JSON object");
  auto integer = [](const nlohmann::json& v) {
    if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, "expected an integer, got " + v.dump());
    return v.get<std::int64_t>();
  };
  auto integers = [&](const nlohmann::json& v) {
    if (!v.is_array()) throw Error(ErrorKind::ParseError, "expected an array, got " + v.dump());
    std::vector<std::int64_t> out;
    for (const auto& item : v) out.push_back(integer(item));
    return out;
  };
  CertificateDocument doc;
  try {
    const auto& version = j.at("schema_version");
    if (!version.is_string() || version.get<std::string>() != kSchemaVersion) {
      throw Error(ErrorKind::UnsupportedSchema,
                  "unsupported schema_version " + version.dump());
    }
    doc.schema_version = version.get<std::string>();
    doc.connection_set = integers(j.at("connection_set"));
    doc.period = integer(j.at("period"));
    doc.starter_vertices = integers(j.at("starter_vertices"));
    doc.offsets = integers(j.at("offsets"));
    if (j.contains("provenance")) doc.provenance = j.at("provenance").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return doc;
}

inline DecompositionCertificate parse_certificate(std::string_view text) {
  return parse_document(text).to_certificate();
}

}  // namespace hamdec
