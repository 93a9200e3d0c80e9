// Copyright 2026 The cnadsl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cnadsl::yamlgen {

// Minimal YAML document builder with fully deterministic output:
// block style only, 2-space indent, LF endings, trailing newline and
// lexicographically sorted map keys (unless a map is explicitly marked
// ordered). Descriptor generation needs nothing more, and owning the
// emitter keeps golden files byte-stable.
class Node {
 public:
  static Node str(std::string_view value) {
    Node n(Kind::Scalar);
    n.scalar_ = std::string(value);
    n.plain_ = false;
    return n;
  }
  static Node raw(std::string_view value) {  // pre-formatted scalar, never quoted
    Node n(Kind::Scalar);
    n.scalar_ = std::string(value);
    n.plain_ = true;
    return n;
  }
  static Node integer(std::int64_t value) { return raw(std::to_string(value)); }
  static Node map(bool sorted = true) {
    Node n(Kind::Map);
    n.sorted_ = sorted;
    return n;
  }
  static Node seq() { return Node(Kind::Seq); }

  Node& set(std::string_view key, Node value) {
    entries_.emplace_back(std::string(key), std::move(value));
    return *this;
  }
  Node& push(Node value) {
    items_.push_back(std::move(value));
    return *this;
  }

  bool is_map() const { return kind_ == Kind::Map; }
  bool is_seq() const { return kind_ == Kind::Seq; }
  bool empty() const { return entries_.empty() && items_.empty(); }

  std::string emit() const {
    std::string out;
    if (is_map())
      emit_map(out, 0);
    else if (is_seq())
      emit_seq(out, 0);
    else
      out += scalar_text() + "\n";
    return out;
  }

 private:
  enum class Kind { Scalar, Map, Seq };
  explicit Node(Kind kind) : kind_(kind) {}

  static bool needs_quotes(std::string_view s) {
    if (s.empty()) return true;
    if (s.front() == ' ' || s.back() == ' ') return true;
    static constexpr std::string_view start_specials = "!&*?|>%@`\"'#,-{}[]";
    if (start_specials.find(s.front()) != std::string_view::npos) return true;
    if (s.back() == ':') return true;
    for (std::size_t i = 0; i < s.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(s[i]);
      if (c < 0x20) return true;
      if (s[i] == '"' || s[i] == '\\') return true;
      if (s[i] == ':' && i + 1 < s.size() && s[i + 1] == ' ') return true;
      if (s[i] == '#' && i > 0 && s[i - 1] == ' ') return true;
    }
    // Plain scalars that YAML would resolve to something other than a
    // string must be quoted; YAML 1.1 parsers also read "80:80" as a
    // base-60 integer.
    static constexpr std::string_view keywords[] = {
        "true", "false", "yes", "no", "on", "off", "null", "~",
        "True", "False", "Yes", "No", "On", "Off", "Null", "NULL",
        "TRUE", "FALSE", "YES", "NO", "ON", "OFF"};
    for (auto kw : keywords)
      if (s == kw) return true;
    bool sexagesimal = true;
    bool has_colon = false;
    for (char c : s) {
      if (c == ':')
        has_colon = true;
      else if (c < '0' || c > '9')
        sexagesimal = false;
    }
    if (sexagesimal && has_colon) return true;
    bool numeric = true;
    bool any_digit = false;
    for (char c : s) {
      if (c >= '0' && c <= '9') {
        any_digit = true;
      } else if (c != '.' && c != '-' && c != '+' && c != 'e' && c != 'E' &&
                 c != '_' && c != 'x' && c != 'X') {
        numeric = false;
        break;
      }
    }
    return numeric && any_digit;
  }

  static std::string quoted(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    out += '"';
    return out;
  }

  std::string scalar_text() const {
    if (plain_) return scalar_;
    return needs_quotes(scalar_) ? quoted(scalar_) : scalar_;
  }

  static std::string key_text(std::string_view key) {
    return needs_quotes(key) ? quoted(key) : std::string(key);
  }

  std::vector<const std::pair<std::string, Node>*> ordered_entries() const {
    std::vector<const std::pair<std::string, Node>*> view;
    view.reserve(entries_.size());
    for (const auto& e : entries_) view.push_back(&e);
    if (sorted_) {
      std::sort(view.begin(), view.end(),
                [](auto* a, auto* b) { return a->first < b->first; });
    }
    return view;
  }

  void emit_map(std::string& out, int indent) const {
    if (entries_.empty()) {
      out += "{}\n";
      return;
    }
    for (const auto* entry : ordered_entries()) {
      out.append(static_cast<std::size_t>(indent), ' ');
      out += key_text(entry->first);
      out += ':';
      emit_value(entry->second, out, indent);
    }
  }

  void emit_seq(std::string& out, int indent) const {
    if (items_.empty()) {
      out += "[]\n";
      return;
    }
    for (const auto& item : items_) {
      out.append(static_cast<std::size_t>(indent), ' ');
      out += '-';
      if (item.kind_ == Kind::Scalar) {
        out += ' ';
        out += item.scalar_text();
        out += '\n';
      } else if (item.is_map() && !item.empty()) {
        // First entry shares the dash line.
        auto view = item.ordered_entries();
        bool first = true;
        for (const auto* entry : view) {
          if (first) {
            out += ' ';
            first = false;
          } else {
            out.append(static_cast<std::size_t>(indent) + 2, ' ');
          }
          out += key_text(entry->first);
          out += ':';
          emit_value(entry->second, out, indent + 2);
        }
      } else if (item.is_map()) {
        out += " {}\n";
      } else {
        out += item.items_.empty() ? " []\n" : "\n";
        if (!item.items_.empty()) item.emit_seq(out, indent + 2);
      }
    }
  }

  static void emit_value(const Node& value, std::string& out, int indent) {
    switch (value.kind_) {
      case Kind::Scalar:
        out += ' ';
        out += value.scalar_text();
        out += '\n';
        break;
      case Kind::Map:
        if (value.empty()) {
          out += " {}\n";
        } else {
          out += '\n';
          value.emit_map(out, indent + 2);
        }
        break;
      case Kind::Seq:
        if (value.empty()) {
          out += " []\n";
        } else {
          out += '\n';
          value.emit_seq(out, indent);  // dash column aligns with the key
        }
        break;
    }
  }

  Kind kind_;
  std::string scalar_;
  bool plain_ = false;
  bool sorted_ = true;
  std::vector<std::pair<std::string, Node>> entries_;
  std::vector<Node> items_;
};

}  // namespace cnadsl::yamlgen
