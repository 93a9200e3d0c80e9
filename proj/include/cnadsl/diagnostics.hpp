// Copyright 2026 The cnadsl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

namespace cnadsl {

enum class Severity { Error, Warning };

// 1-based position of a token or construct in the source text.
struct SourceSpan {
  int line = 1;
  int column = 1;
  int length = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

// A single finding. Codes are stable across releases; anything with
// severity Error aborts compilation.
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  SourceSpan span;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// Stable diagnostic codes. E*/W0* come out of the lexer and parser,
// V*/W2* out of the semantic validator.
namespace codes {
inline constexpr std::string_view kUnexpectedToken = "E001-unexpected-token";
inline constexpr std::string_view kBadString = "E002-bad-string";
inline constexpr std::string_view kBadNumber = "E003-bad-number";
inline constexpr std::string_view kInvalidUtf8 = "E004-invalid-utf8";
inline constexpr std::string_view kDuplicateField = "E005-duplicate-field";
inline constexpr std::string_view kDuplicateName = "E006-duplicate-name";
inline constexpr std::string_view kValueRange = "E007-value-range";
inline constexpr std::string_view kMissingField = "E008-missing-field";
inline constexpr std::string_view kBadReference = "E009-bad-reference";
inline constexpr std::string_view kLargeSource = "W010-large-source";

inline constexpr std::string_view kUnresolvedReference = "V101-unresolved-reference";
inline constexpr std::string_view kInvalidDnsName = "V102-invalid-dns-name";
inline constexpr std::string_view kDuplicateModelName = "V103-duplicate-name";
inline constexpr std::string_view kInvalidLabelKey = "V104-invalid-label-key";
inline constexpr std::string_view kScalingBounds = "V105-scaling-bounds";
inline constexpr std::string_view kPortCollision = "V106-port-collision";
inline constexpr std::string_view kInvalidPort = "V107-invalid-port";
inline constexpr std::string_view kNegativeReplicas = "V108-negative-replicas";
inline constexpr std::string_view kInvalidImage = "V109-invalid-image";
inline constexpr std::string_view kEmptyComponent = "V110-empty-component";
inline constexpr std::string_view kSelfReference = "V111-self-reference";
inline constexpr std::string_view kDependencyCycle = "W201-dependency-cycle";
inline constexpr std::string_view kCustomMetric = "W202-custom-metric";
inline constexpr std::string_view kUndeclaredPort = "W203-undeclared-port";
}  // namespace codes

inline bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
    return d.severity == Severity::Error;
  });
}

// file:line:col: severity[code]: message
inline std::string render(const Diagnostic& d, std::string_view filename,
                          bool color = false) {
  std::string out;
  out += filename;
  out += ':';
  out += std::to_string(d.span.line);
  out += ':';
  out += std::to_string(d.span.column);
  out += ": ";
  const bool error = d.severity == Severity::Error;
  if (color) out += error ? "\x1b[31m" : "\x1b[33m";
  out += error ? "error" : "warning";
  out += '[';
  out += d.code;
  out += ']';
  if (color) out += "\x1b[0m";
  out += ": ";
  out += d.message;
  return out;
}

}  // namespace cnadsl
