// Copyright 2026 The cnadsl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cctype>
#include <string_view>

namespace cnadsl {

/// Validation rules for the identifiers that end up in generated
/// descriptors. Service and application names must survive as DNS names
/// on every target, so the strictest target rule is applied globally.

// DNS-1123 label: lowercase alphanumeric and '-', 1-63 chars,
// starts and ends alphanumeric.
inline bool is_dns1123_label(std::string_view s) {
  if (s.empty() || s.size() > 63) return false;
  auto alnum = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  };
  if (!alnum(s.front()) || !alnum(s.back())) return false;
  for (char c : s) {
    if (!alnum(c) && c != '-') return false;
  }
  return true;
}

// Label key: [a-zA-Z0-9]([a-zA-Z0-9._-]*[a-zA-Z0-9])?, max 63 chars.
// Used for tag keys and scheduling-constraint keys.
inline bool is_label_key(std::string_view s) {
  if (s.empty() || s.size() > 63) return false;
  auto alnum = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9');
  };
  if (!alnum(s.front()) || !alnum(s.back())) return false;
  for (char c : s) {
    if (!alnum(c) && c != '.' && c != '_' && c != '-') return false;
  }
  return true;
}

inline bool is_label_value(std::string_view s) { return s.size() <= 63; }

// OCI image reference: [registry/]name[:tag][@algo:digest].
// Repository path segments are lowercase; the tag may be mixed case.
inline bool is_image_reference(std::string_view s) {
  if (s.empty() || s.size() > 512) return false;

  auto lower_alnum = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  };
  auto tag_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '.' ||
           c == '_' || c == '-';
  };
  auto hex = [](char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
  };

  // Split off @digest, then :tag (the colon after the last '/').
  std::string_view rest = s;
  if (auto at = rest.find('@'); at != std::string_view::npos) {
    std::string_view digest = rest.substr(at + 1);
    rest = rest.substr(0, at);
    auto colon = digest.find(':');
    if (colon == std::string_view::npos || colon == 0) return false;
    std::string_view algo = digest.substr(0, colon);
    std::string_view val = digest.substr(colon + 1);
    for (char c : algo)
      if (!std::isalnum(static_cast<unsigned char>(c))) return false;
    if (val.size() < 32) return false;
    for (char c : val)
      if (!hex(c)) return false;
  }
  auto last_slash = rest.rfind('/');
  auto colon = rest.find(':', last_slash == std::string_view::npos ? 0 : last_slash);
  if (colon != std::string_view::npos) {
    std::string_view tag = rest.substr(colon + 1);
    rest = rest.substr(0, colon);
    if (tag.empty() || tag.size() > 128) return false;
    for (char c : tag)
      if (!tag_char(c)) return false;
  }

  // rest is now the repository path: slash-separated lowercase segments.
  // The first segment may be a registry host with dots and a port.
  if (rest.empty()) return false;
  std::size_t start = 0;
  bool first_segment = true;
  while (start <= rest.size()) {
    auto end = rest.find('/', start);
    std::string_view seg = rest.substr(
        start, end == std::string_view::npos ? rest.size() - start : end - start);
    if (seg.empty()) return false;
    for (char c : seg) {
      bool ok = lower_alnum(c) || c == '.' || c == '_' || c == '-';
      if (first_segment && c == ':') ok = true;  // registry port
      if (!ok) return false;
    }
    if (!lower_alnum(seg.front()) || !lower_alnum(seg.back())) return false;
    if (end == std::string_view::npos) break;
    start = end + 1;
    first_segment = false;
  }
  return true;
}

}  // namespace cnadsl
