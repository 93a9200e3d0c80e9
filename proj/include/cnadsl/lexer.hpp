// Copyright 2026 The cnadsl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cnadsl/diagnostics.hpp"

namespace cnadsl {

enum class TokenKind {
  Word,    // bare identifier or keyword: [A-Za-z0-9._-]+
  Int,     // decimal integer, optional leading '-'
  Number,  // decimal with fractional part
  String,  // double-quoted, \" and \\ escapes
  LBrace,
  RBrace,
  Equals,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;        // raw text as written
  std::string value;       // unescaped payload for String tokens
  std::int64_t int_value = 0;
  double num_value = 0;
  SourceSpan span;
};

struct LexResult {
  std::vector<Token> tokens;
  std::vector<Diagnostic> diagnostics;
};

namespace detail {

// Returns the byte offset of the first invalid UTF-8 sequence, or npos.
inline std::size_t find_invalid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char b = static_cast<unsigned char>(s[i]);
    std::size_t len;
    std::uint32_t cp;
    if (b < 0x80) {
      i += 1;
      continue;
    } else if ((b & 0xE0) == 0xC0) {
      len = 2;
      cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
      cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4;
      cp = b & 0x07;
    } else {
      return i;
    }
    if (i + len > s.size()) return i;
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char c = static_cast<unsigned char>(s[i + k]);
      if ((c & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (c & 0x3F);
    }
    bool overlong = (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
                    (len == 4 && cp < 0x10000);
    if (overlong || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return i;
    i += len;
  }
  return std::string_view::npos;
}

inline bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
}

}  // namespace detail

// Source must be UTF-8; a UTF-8 byte-order mark is skipped, anything
// that is not valid UTF-8 is a lexical error. Sources above 1 MiB get a
// soft warning.
inline LexResult lex(std::string_view source) {
  LexResult result;

  std::size_t begin = 0;
  if (source.size() >= 3 && source.substr(0, 3) == "\xEF\xBB\xBF") begin = 3;

  if (source.size() > (1u << 20)) {
    result.diagnostics.push_back(
        {Severity::Warning, std::string(codes::kLargeSource),
         "definition document exceeds 1 MiB", {1, 1, 0}});
  }

  if (auto bad = detail::find_invalid_utf8(source.substr(begin));
      bad != std::string_view::npos) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < begin + bad; ++i) {
      if (source[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    result.diagnostics.push_back(
        {Severity::Error, std::string(codes::kInvalidUtf8),
         "input is not valid UTF-8", {line, col, 1}});
    result.tokens.push_back({TokenKind::End, "", "", 0, 0, {line, col, 0}});
    return result;
  }

  int line = 1, col = 1;
  std::size_t i = begin;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (source[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };

  while (i < source.size()) {
    char c = source[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < source.size() && source[i + 1] == '/') {
      std::size_t end = source.find('\n', i);
      advance((end == std::string_view::npos ? source.size() : end) - i);
      continue;
    }

    SourceSpan span{line, col, 1};
    if (c == '{' || c == '}' || c == '=') {
      TokenKind kind = c == '{'   ? TokenKind::LBrace
                       : c == '}' ? TokenKind::RBrace
                                  : TokenKind::Equals;
      result.tokens.push_back({kind, std::string(1, c), "", 0, 0, span});
      advance(1);
      continue;
    }

    if (c == '"') {
      std::string value;
      std::size_t j = i + 1;
      bool closed = false, bad_escape = false;
      while (j < source.size() && source[j] != '\n') {
        if (source[j] == '\\') {
          if (j + 1 < source.size() &&
              (source[j + 1] == '"' || source[j + 1] == '\\')) {
            value += source[j + 1];
            j += 2;
            continue;
          }
          bad_escape = true;
          break;
        }
        if (source[j] == '"') {
          closed = true;
          break;
        }
        value += source[j];
        ++j;
      }
      std::size_t raw_len = (closed ? j + 1 : j) - i;
      span.length = static_cast<int>(raw_len);
      if (!closed || bad_escape) {
        result.diagnostics.push_back(
            {Severity::Error, std::string(codes::kBadString),
             bad_escape ? "invalid escape sequence in string (only \\\" and \\\\ are recognized)"
                        : "unterminated string literal",
             span});
        advance(raw_len);
        continue;
      }
      result.tokens.push_back({TokenKind::String,
                               std::string(source.substr(i, raw_len)), value, 0,
                               0, span});
      advance(raw_len);
      continue;
    }

    if (detail::is_word_char(c) || c == '-') {
      std::size_t j = i;
      if (source[j] == '-') ++j;
      while (j < source.size() && detail::is_word_char(source[j])) ++j;
      std::string text(source.substr(i, j - i));
      span.length = static_cast<int>(text.size());

      // Classify: pure digits (optionally signed) are Int, one '.'
      // between digit runs makes a Number, everything else is a Word.
      std::string_view body = text;
      bool negative = body.starts_with('-');
      if (negative) body.remove_prefix(1);
      auto digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char ch : s)
          if (ch < '0' || ch > '9') return false;
        return true;
      };
      auto dot = body.find('.');
      bool is_int = digits(body);
      bool is_num = !is_int && dot != std::string_view::npos &&
                    digits(body.substr(0, dot)) && digits(body.substr(dot + 1));

      if (is_int || is_num) {
        Token tok{is_int ? TokenKind::Int : TokenKind::Number, text, "", 0, 0,
                  span};
        const char* first = text.data();
        const char* last = text.data() + text.size();
        if (is_int) {
          auto [p, ec] = std::from_chars(first, last, tok.int_value);
          if (ec != std::errc() || p != last) {
            result.diagnostics.push_back(
                {Severity::Error, std::string(codes::kBadNumber),
                 "integer literal out of range", span});
            advance(text.size());
            continue;
          }
          tok.num_value = static_cast<double>(tok.int_value);
        } else {
          auto [p, ec] = std::from_chars(first, last, tok.num_value);
          if (ec != std::errc() || p != last) {
            result.diagnostics.push_back(
                {Severity::Error, std::string(codes::kBadNumber),
                 "malformed number literal", span});
            advance(text.size());
            continue;
          }
        }
        result.tokens.push_back(std::move(tok));
        advance(text.size());
        continue;
      }

      if (negative) {
        // '-word' is never valid: words start alphanumeric.
        result.diagnostics.push_back(
            {Severity::Error, std::string(codes::kBadNumber),
             "malformed number literal \"" + text + "\"", span});
        advance(text.size());
        continue;
      }
      result.tokens.push_back({TokenKind::Word, text, "", 0, 0, span});
      advance(text.size());
      continue;
    }

    result.diagnostics.push_back({Severity::Error,
                                  std::string(codes::kUnexpectedToken),
                                  std::string("unexpected character '") + c + "'",
                                  span});
    advance(1);
  }

  result.tokens.push_back({TokenKind::End, "", "", 0, 0, {line, col, 0}});
  return result;
}

}  // namespace cnadsl
