// Copyright 2026 The cnadsl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cnadsl/canonical.hpp"
#include "cnadsl/lexer.hpp"
#include "cnadsl/model.hpp"

namespace cnadsl {

// Side table mapping structured keys ("svc/payment/du/payment/scale")
// to source spans. Kept outside the model so that parsed and
// programmatically built models compare equal; the validator uses it to
// attach precise spans to semantic findings.
struct SourceIndex {
  std::map<std::string, SourceSpan> spans;

  SourceSpan find_or(const std::string& key, SourceSpan fallback = {1, 1, 0}) const {
    auto it = spans.find(key);
    return it != spans.end() ? it->second : fallback;
  }
};

struct ParseResult {
  std::optional<ApplicationModel> model;  // set iff no error diagnostics
  std::vector<Diagnostic> diagnostics;
  SourceIndex index;

  bool ok() const { return model.has_value(); }
};

namespace detail {

class Parser {
 public:
  explicit Parser(std::string_view source) {
    LexResult lexed = lex(source);
    tokens_ = std::move(lexed.tokens);
    diags_ = std::move(lexed.diagnostics);
  }

  ParseResult run() {
    ParseResult result;
    if (!has_errors(diags_)) {
      ApplicationModel model = parse_application();
      if (!has_errors(diags_)) result.model = std::move(model);
    }
    result.diagnostics = std::move(diags_);
    result.index = std::move(index_);
    return result;
  }

 private:
  const Token& peek(int ahead = 0) const {
    std::size_t i = pos_ + static_cast<std::size_t>(ahead);
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool at(TokenKind kind) const { return peek().kind == kind; }
  bool at_word(std::string_view word) const {
    return peek().kind == TokenKind::Word && peek().text == word;
  }

  void error(std::string_view code, std::string message, SourceSpan span) {
    diags_.push_back({Severity::Error, std::string(code), std::move(message), span});
  }

  // Consume tokens until the brace depth drops below the current block
  // level; the closing '}' itself is consumed. Recovery point for
  // malformed blocks.
  void sync_block_end() {
    int depth = 0;
    while (!at(TokenKind::End)) {
      if (at(TokenKind::LBrace)) ++depth;
      if (at(TokenKind::RBrace)) {
        if (depth == 0) {
          next();
          return;
        }
        --depth;
      }
      next();
    }
  }

  bool expect_lbrace(std::string_view what) {
    if (at(TokenKind::LBrace)) {
      next();
      return true;
    }
    error(codes::kUnexpectedToken,
          "expected '{' to open " + std::string(what) + " block", peek().span);
    return false;
  }

  std::optional<std::pair<std::string, SourceSpan>> expect_string(
      std::string_view what) {
    if (at(TokenKind::String)) {
      const Token& t = next();
      return std::make_pair(t.value, t.span);
    }
    error(codes::kUnexpectedToken,
          "expected " + std::string(what) + " string", peek().span);
    return std::nullopt;
  }

  std::optional<Token> expect_int(std::string_view what) {
    if (at(TokenKind::Int)) return next();
    error(codes::kUnexpectedToken,
          "expected integer value for " + std::string(what), peek().span);
    return std::nullopt;
  }

  // On an unexpected token inside a block item loop: report once, then
  // drop the token (plus a nested block if one follows) and carry on so
  // later blocks still get checked.
  void skip_unexpected(std::string_view context) {
    error(codes::kUnexpectedToken,
          "unexpected token '" + (peek().kind == TokenKind::End
                                      ? std::string("<end of input>")
                                      : peek().text) +
              "' in " + std::string(context) + " block",
          peek().span);
    if (at(TokenKind::End)) return;
    next();
    if (at(TokenKind::LBrace)) {
      next();
      sync_block_end();
    }
  }

  ApplicationModel parse_application() {
    ApplicationModel model;
    if (!at_word("application")) {
      error(codes::kUnexpectedToken, "expected 'application'", peek().span);
      return model;
    }
    next();
    auto name = expect_string("application name");
    if (!name) return model;
    model.name = name->first;
    index_.spans["app"] = name->second;
    if (!expect_lbrace("application")) return model;

    std::set<std::string> seen;
    while (!at(TokenKind::RBrace) && !at(TokenKind::End)) {
      if (at_word("service")) {
        next();
        if (auto svc = parse_service()) {
          if (!seen.insert(svc->name).second) {
            error(codes::kDuplicateName,
                  "duplicate service name \"" + svc->name + "\"",
                  index_.find_or("svc/" + svc->name));
          }
          model.services.push_back(std::move(*svc));
        }
      } else {
        skip_unexpected("application");
      }
    }
    if (at(TokenKind::RBrace))
      next();
    else
      error(codes::kUnexpectedToken, "expected '}' to close application block",
            peek().span);
    if (!at(TokenKind::End))
      error(codes::kUnexpectedToken, "expected end of input after application block",
            peek().span);
    return model;
  }

  std::optional<Service> parse_service() {
    auto name = expect_string("service name");
    if (!name) {
      sync_to_next_item();
      return std::nullopt;
    }
    Service svc;
    svc.name = name->first;
    const std::string base = "svc/" + svc.name;
    index_.spans[base] = name->second;
    if (!expect_lbrace("service")) {
      sync_to_next_item();
      return std::nullopt;
    }

    std::set<std::string> endpoint_names, unit_names;
    while (!at(TokenKind::RBrace) && !at(TokenKind::End)) {
      if (at_word("endpoint")) {
        next();
        if (auto ep = parse_endpoint(base)) {
          if (!endpoint_names.insert(ep->name).second) {
            error(codes::kDuplicateName,
                  "duplicate endpoint name \"" + ep->name + "\" in service \"" +
                      svc.name + "\"",
                  index_.find_or(base + "/ep/" + ep->name));
          }
          svc.endpoints.push_back(std::move(*ep));
        }
      } else if (at_word("deployment-unit")) {
        next();
        if (auto unit = parse_unit(base)) {
          if (!unit_names.insert(unit->name).second) {
            error(codes::kDuplicateName,
                  "duplicate deployment-unit name \"" + unit->name +
                      "\" in service \"" + svc.name + "\"",
                  index_.find_or(base + "/du/" + unit->name));
          }
          svc.deployment_units.push_back(std::move(*unit));
        }
      } else if (at_word("uses")) {
        next();
        if (auto target = expect_string("use reference")) {
          if (auto ref = parse_endpoint_ref(target->first, target->second)) {
            index_.spans[base + "/uses/" + std::to_string(svc.uses.size())] =
                target->second;
            svc.uses.push_back(std::move(*ref));
          }
        }
      } else {
        skip_unexpected("service");
      }
    }
    if (at(TokenKind::RBrace))
      next();
    else
      error(codes::kUnexpectedToken, "expected '}' to close service block",
            peek().span);
    return svc;
  }

  std::optional<EndpointRef> parse_endpoint_ref(const std::string& text,
                                                SourceSpan span) {
    constexpr std::string_view prefix = "external:";
    if (text.starts_with(prefix)) {
      std::string rest = text.substr(prefix.size());
      auto colon = rest.rfind(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == rest.size()) {
        error(codes::kBadReference,
              "external reference must be \"external:host:port\"", span);
        return std::nullopt;
      }
      return EndpointRef{rest.substr(0, colon), rest.substr(colon + 1), true};
    }
    auto dot = text.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == text.size()) {
      error(codes::kBadReference,
            "use reference must be \"service.endpoint\" or \"external:host:port\"",
            span);
      return std::nullopt;
    }
    return EndpointRef{text.substr(0, dot), text.substr(dot + 1), false};
  }

  std::optional<Endpoint> parse_endpoint(const std::string& svc_base) {
    auto name = expect_string("endpoint name");
    if (!name) {
      sync_to_next_item();
      return std::nullopt;
    }
    Endpoint ep;
    ep.name = name->first;
    const std::string base = svc_base + "/ep/" + ep.name;
    index_.spans[base] = name->second;
    if (!expect_lbrace("endpoint")) {
      sync_to_next_item();
      return std::nullopt;
    }

    bool have_proto = false, have_cport = false, have_tport = false,
         have_lb = false;
    while (!at(TokenKind::RBrace) && !at(TokenKind::End)) {
      if (at_word("protocol")) {
        const Token& kw = next();
        if (std::exchange(have_proto, true))
          error(codes::kDuplicateField,
                "duplicate field 'protocol' in endpoint block", kw.span);
        if (at_word("tcp") || at_word("udp")) {
          ep.protocol = peek().text == "udp" ? Protocol::Udp : Protocol::Tcp;
          next();
        } else {
          error(codes::kValueRange, "protocol must be 'tcp' or 'udp'",
                peek().span);
          if (!at(TokenKind::RBrace) && !at(TokenKind::End)) next();
        }
      } else if (at_word("container-port")) {
        const Token& kw = next();
        if (std::exchange(have_cport, true))
          error(codes::kDuplicateField,
                "duplicate field 'container-port' in endpoint block", kw.span);
        if (auto tok = expect_int("container-port")) {
          ep.container_port = check_port(*tok, "container-port");
          index_.spans[base + "/container-port"] = tok->span;
        }
      } else if (at_word("target-port")) {
        const Token& kw = next();
        if (std::exchange(have_tport, true))
          error(codes::kDuplicateField,
                "duplicate field 'target-port' in endpoint block", kw.span);
        if (auto tok = expect_int("target-port"))
          ep.target_port = check_port(*tok, "target-port");
      } else if (at_word("load-balancing")) {
        const Token& kw = next();
        if (std::exchange(have_lb, true))
          error(codes::kDuplicateField,
                "duplicate field 'load-balancing' in endpoint block", kw.span);
        if (at_word("round-robin")) {
          next();
        } else {
          error(codes::kValueRange,
                "unsupported load-balancing strategy (only 'round-robin' is "
                "accepted in this version)",
                peek().span);
          if (!at(TokenKind::RBrace) && !at(TokenKind::End)) next();
        }
      } else {
        skip_unexpected("endpoint");
      }
    }
    if (at(TokenKind::RBrace)) next();
    if (!have_cport)
      error(codes::kMissingField,
            "endpoint \"" + ep.name + "\" requires container-port", name->second);
    if (!have_tport) ep.target_port = ep.container_port;
    return ep;
  }

  std::optional<DeploymentUnit> parse_unit(const std::string& svc_base) {
    auto name = expect_string("deployment-unit name");
    if (!name) {
      sync_to_next_item();
      return std::nullopt;
    }
    DeploymentUnit unit;
    unit.name = name->first;
    const std::string base = svc_base + "/du/" + unit.name;
    index_.spans[base] = name->second;
    if (!expect_lbrace("deployment-unit")) {
      sync_to_next_item();
      return std::nullopt;
    }

    std::set<std::string> container_names;
    bool have_policy = false;
    while (!at(TokenKind::RBrace) && !at(TokenKind::End)) {
      if (at_word("container")) {
        next();
        if (auto ct = parse_container(base)) {
          if (!container_names.insert(ct->name).second) {
            error(codes::kDuplicateName,
                  "duplicate container name \"" + ct->name +
                      "\" in deployment-unit \"" + unit.name + "\"",
                  index_.find_or(base + "/ct/" + ct->name));
          }
          unit.containers.push_back(std::move(*ct));
        }
      } else if (at_word("tag")) {
        next();
        parse_key_value(unit.tags, "tag", base + "/tag/");
      } else if (at_word("policy")) {
        const Token& kw = next();
        if (std::exchange(have_policy, true)) {
          error(codes::kDuplicateField,
                "duplicate field 'policy' in deployment-unit block", kw.span);
        }
        if (expect_lbrace("policy"))
          unit.policy = parse_policy(base);
        else
          sync_to_next_item();
      } else {
        skip_unexpected("deployment-unit");
      }
    }
    if (at(TokenKind::RBrace)) next();
    if (unit.containers.empty())
      error(codes::kMissingField,
            "deployment-unit \"" + unit.name + "\" requires at least one container",
            name->second);
    return unit;
  }

  std::optional<ContainerSpec> parse_container(const std::string& unit_base) {
    auto name = expect_string("container name");
    if (!name) {
      sync_to_next_item();
      return std::nullopt;
    }
    ContainerSpec ct;
    ct.name = name->first;
    const std::string base = unit_base + "/ct/" + ct.name;
    index_.spans[base] = name->second;
    if (!expect_lbrace("container")) {
      sync_to_next_item();
      return std::nullopt;
    }

    bool have_image = false;
    std::set<int> declared;
    while (!at(TokenKind::RBrace) && !at(TokenKind::End)) {
      if (at_word("image")) {
        const Token& kw = next();
        if (std::exchange(have_image, true))
          error(codes::kDuplicateField,
                "duplicate field 'image' in container block", kw.span);
        if (auto img = expect_string("image reference")) {
          ct.image = img->first;
          index_.spans[base + "/image"] = img->second;
        }
      } else if (at_word("port")) {
        next();
        if (auto tok = expect_int("port")) {
          int port = check_port(*tok, "port");
          if (port != 0 && !declared.insert(port).second) {
            error(codes::kDuplicateName,
                  "duplicate declared port " + std::to_string(port) +
                      " in container \"" + ct.name + "\"",
                  tok->span);
          } else {
            ct.ports.push_back(port);
          }
        }
      } else if (at_word("env")) {
        next();
        parse_key_value(ct.env, "env", base + "/env/");
      } else {
        skip_unexpected("container");
      }
    }
    if (at(TokenKind::RBrace)) next();
    if (!have_image)
      error(codes::kMissingField,
            "container \"" + ct.name + "\" requires an image", name->second);
    return ct;
  }

  DeploymentPolicy parse_policy(const std::string& unit_base) {
    DeploymentPolicy policy;
    bool have_replicas = false, have_scale = false;
    while (!at(TokenKind::RBrace) && !at(TokenKind::End)) {
      if (at_word("replicas")) {
        const Token& kw = next();
        if (std::exchange(have_replicas, true))
          error(codes::kDuplicateField,
                "duplicate field 'replicas' in policy block", kw.span);
        if (auto tok = expect_int("replicas")) {
          if (tok->int_value < 0) {
            error(codes::kValueRange, "replicas must be a non-negative integer",
                  tok->span);
          } else if (tok->int_value > 1000000) {
            error(codes::kValueRange, "replicas is implausibly large", tok->span);
          } else {
            policy.replicas = static_cast<int>(tok->int_value);
          }
          index_.spans[unit_base + "/policy/replicas"] = tok->span;
        }
      } else if (at_word("selector")) {
        next();
        if (auto sel = expect_string("selector")) {
          std::string key = sel->first, value = "true";
          if (auto eq = sel->first.find('='); eq != std::string::npos) {
            key = sel->first.substr(0, eq);
            value = sel->first.substr(eq + 1);
          }
          if (key.empty()) {
            error(codes::kValueRange,
                  "selector must be \"key\" or \"key=value\"", sel->second);
          } else if (!policy.selectors.emplace(key, value).second) {
            error(codes::kDuplicateName,
                  "duplicate selector key \"" + key + "\"", sel->second);
          } else {
            index_.spans[unit_base + "/selector/" + key] = sel->second;
          }
        }
      } else if (at_word("scale")) {
        const Token& kw = next();
        if (std::exchange(have_scale, true))
          error(codes::kDuplicateField,
                "duplicate field 'scale' in policy block", kw.span);
        index_.spans[unit_base + "/scale"] = kw.span;
        if (expect_lbrace("scale"))
          policy.scaling = parse_scale(unit_base, kw.span);
        else
          sync_to_next_item();
      } else {
        skip_unexpected("policy");
      }
    }
    if (at(TokenKind::RBrace)) next();
    return policy;
  }

  ScalingRule parse_scale(const std::string& unit_base, SourceSpan scale_span) {
    ScalingRule rule;
    bool have_metric = false, have_target = false, have_min = false,
         have_max = false;
    while (!at(TokenKind::RBrace) && !at(TokenKind::End)) {
      if (at_word("metric")) {
        const Token& kw = next();
        if (std::exchange(have_metric, true))
          error(codes::kDuplicateField, "duplicate field 'metric' in scale block",
                kw.span);
        if (at_word("cpu")) {
          rule.metric = kCpuMetric;
          index_.spans[unit_base + "/scale/metric"] = peek().span;
          next();
        } else if (at(TokenKind::String)) {
          rule.metric = peek().value;
          index_.spans[unit_base + "/scale/metric"] = peek().span;
          if (rule.metric.empty())
            error(codes::kValueRange, "metric name must not be empty", peek().span);
          next();
        } else {
          error(codes::kUnexpectedToken,
                "expected 'cpu' or a quoted metric name", peek().span);
          if (!at(TokenKind::RBrace) && !at(TokenKind::End)) next();
        }
      } else if (at_word("target")) {
        const Token& kw = next();
        if (std::exchange(have_target, true))
          error(codes::kDuplicateField, "duplicate field 'target' in scale block",
                kw.span);
        if (at(TokenKind::Int) || at(TokenKind::Number)) {
          const Token& tok = next();
          rule.target = tok.kind == TokenKind::Int
                            ? static_cast<double>(tok.int_value)
                            : tok.num_value;
          if (rule.target <= 0)
            error(codes::kValueRange, "target must be a positive number", tok.span);
        } else {
          error(codes::kUnexpectedToken, "expected numeric value for target",
                peek().span);
          if (!at(TokenKind::RBrace) && !at(TokenKind::End)) next();
        }
      } else if (at_word("min")) {
        next();
        if (auto tok = expect_int("min")) {
          if (std::exchange(have_min, true))
            error(codes::kDuplicateField, "duplicate field 'min' in scale block",
                  tok->span);
          if (tok->int_value < 1)
            error(codes::kValueRange, "min must be a positive integer", tok->span);
          else
            rule.min_replicas = static_cast<int>(tok->int_value);
          index_.spans[unit_base + "/scale/min"] = tok->span;
        }
      } else if (at_word("max")) {
        next();
        if (auto tok = expect_int("max")) {
          if (std::exchange(have_max, true))
            error(codes::kDuplicateField, "duplicate field 'max' in scale block",
                  tok->span);
          if (tok->int_value < 1)
            error(codes::kValueRange, "max must be a positive integer", tok->span);
          else
            rule.max_replicas = static_cast<int>(tok->int_value);
          index_.spans[unit_base + "/scale/max"] = tok->span;
        }
      } else {
        skip_unexpected("scale");
      }
    }
    if (at(TokenKind::RBrace)) next();

    std::string missing;
    auto note = [&missing](bool have, std::string_view field) {
      if (!have) {
        if (!missing.empty()) missing += ", ";
        missing += field;
      }
    };
    note(have_metric, "metric");
    note(have_target, "target");
    note(have_min, "min");
    note(have_max, "max");
    if (!missing.empty())
      error(codes::kMissingField, "scale block requires " + missing, scale_span);
    return rule;
  }

  template <typename Map>
  void parse_key_value(Map& map, std::string_view what,
                       const std::string& index_prefix) {
    if (!at(TokenKind::Word)) {
      error(codes::kUnexpectedToken,
            "expected " + std::string(what) + " key identifier", peek().span);
      return;
    }
    const Token key = next();
    if (!at(TokenKind::Equals)) {
      error(codes::kUnexpectedToken,
            "expected '=' after " + std::string(what) + " key", peek().span);
      return;
    }
    next();
    auto value = expect_string(std::string(what) + " value");
    if (!value) return;
    if (!map.emplace(key.text, value->first).second) {
      error(codes::kDuplicateName,
            "duplicate " + std::string(what) + " key \"" + key.text + "\"",
            key.span);
      return;
    }
    index_.spans[index_prefix + key.text] = key.span;
  }

  int check_port(const Token& tok, std::string_view field) {
    if (tok.int_value < 1 || tok.int_value > 65535) {
      error(codes::kValueRange,
            std::string(field) + " must be in [1, 65535]", tok.span);
      return 0;
    }
    return static_cast<int>(tok.int_value);
  }

  // After a malformed item header, drop tokens until something that can
  // plausibly start the next item: a known keyword or a closing brace.
  void sync_to_next_item() {
    static constexpr std::string_view keywords[] = {
        "service", "endpoint", "deployment-unit", "container",
        "uses",    "tag",      "policy",          "scale"};
    while (!at(TokenKind::End) && !at(TokenKind::RBrace)) {
      if (at(TokenKind::Word)) {
        for (auto kw : keywords)
          if (peek().text == kw) return;
      }
      if (at(TokenKind::LBrace)) {
        next();
        sync_block_end();
        continue;
      }
      next();
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<Diagnostic> diags_;
  SourceIndex index_;
};

}  // namespace detail

// Parses DSL text into a structurally valid model. Cross-reference and
// naming rules are the validator's job; everything the parser reports
// carries a span into the source. The parser recovers at block
// boundaries, so one pass can surface several errors.
inline ParseResult parse(std::string_view source) {
  return detail::Parser(source).run();
}

}  // namespace cnadsl
