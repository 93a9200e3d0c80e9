// Copyright 2026 The cnadsl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cnadsl/gen_compose.hpp"
#include "cnadsl/gen_kubernetes.hpp"
#include "cnadsl/gen_marathon.hpp"
#include "cnadsl/parser.hpp"
#include "cnadsl/validator.hpp"

namespace cnadsl {

// A reference definition with frozen per-target outputs. The expected
// files must regenerate byte-identically from the source.
struct GoldenCase {
  std::string name;
  std::filesystem::path source;         // the .cna definition
  std::filesystem::path expected_root;  // contains <target>/ subdirectories
};

struct GoldenResult {
  bool pass = false;
  std::string diff;  // unified diff per mismatching file, or a failure note
};

namespace detail {

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

// Plain LCS-based unified diff; golden documents are small.
inline std::string unified_diff(std::string_view label,
                                std::string_view expected,
                                std::string_view actual) {
  auto a = split_lines(expected);
  auto b = split_lines(actual);
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::vector<std::size_t>> lcs(n + 1, std::vector<std::size_t>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1
                               : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }
  std::ostringstream out;
  out << "--- expected/" << label << "\n+++ actual/" << label << "\n";
  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && a[i] == b[j]) {
      out << ' ' << a[i] << '\n';
      ++i, ++j;
    } else if (j < m && (i == n || lcs[i][j + 1] >= lcs[i + 1][j])) {
      out << '+' << b[j] << '\n';
      ++j;
    } else {
      out << '-' << a[i] << '\n';
      ++i;
    }
  }
  return out.str();
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace detail

inline ManifestSet generate_for_target(const ApplicationModel& model,
                                       std::string_view target,
                                       const std::string& namespace_name = "default") {
  if (target == "kubernetes") return generate_kubernetes(model, namespace_name);
  if (target == "compose") return generate_compose(model);
  if (target == "marathon") return generate_marathon(model);
  return {};
}

// Regenerates a case for one target and byte-compares against the
// frozen expectation. Missing and unexpected files both fail.
inline GoldenResult run_golden(const GoldenCase& golden, std::string_view target) {
  GoldenResult result;
  if (!std::filesystem::exists(golden.source)) {
    result.diff = "missing source file: " + golden.source.string();
    return result;
  }
  ParseResult parsed = parse(detail::read_file(golden.source));
  if (!parsed.ok()) {
    result.diff = "case \"" + golden.name + "\" does not parse";
    return result;
  }
  ValidationReport report = validate(*parsed.model, &parsed.index);
  if (!report.resolved) {
    result.diff = "case \"" + golden.name + "\" does not validate";
    return result;
  }

  ManifestSet generated = generate_for_target(*parsed.model, target);
  std::map<std::string, std::string> actual;
  for (const auto& doc : generated.documents) actual[doc.filename] = doc.body;

  std::map<std::string, std::string> expected;
  const auto dir = golden.expected_root / std::string(target);
  if (std::filesystem::is_directory(dir)) {
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.is_regular_file())
        expected[entry.path().filename().string()] = detail::read_file(entry.path());
    }
  }

  std::string diff;
  for (const auto& [filename, body] : expected) {
    auto it = actual.find(filename);
    if (it == actual.end()) {
      diff += "missing generated file: " + filename + "\n";
    } else if (it->second != body) {
      diff += detail::unified_diff(filename, body, it->second);
    }
  }
  for (const auto& [filename, body] : actual) {
    if (!expected.count(filename))
      diff += "unexpected generated file: " + filename + "\n";
  }
  if (expected.empty()) diff += "no expected files under " + dir.string() + "\n";

  result.pass = diff.empty();
  result.diff = std::move(diff);
  return result;
}

}  // namespace cnadsl
