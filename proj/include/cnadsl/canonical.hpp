// Copyright 2026 The cnadsl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <charconv>
#include <cmath>
#include <string>
#include <string_view>

#include "cnadsl/model.hpp"

namespace cnadsl {

namespace detail {

inline void append_quoted(std::string& out, std::string_view s) {
  out += '"';
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
}

// Shortest representation that round-trips; integral values print
// without a fractional part.
inline std::string format_number(double value) {
  if (value == static_cast<long long>(value) && std::abs(value) < 1e15) {
    return std::to_string(static_cast<long long>(value));
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

}  // namespace detail

// Canonical text form of a model. Deterministic by construction:
// services, units, containers, endpoints and uses keep declaration
// order; key/value collections are emitted sorted; every field is
// written explicitly, defaults included. Identical models always
// produce byte-identical text.
inline std::string canonical_serialize(const ApplicationModel& model) {
  std::string out;
  auto line = [&out](int depth, auto&&... parts) {
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    (out.append(parts), ...);
    out += '\n';
  };
  auto quoted = [](std::string_view s) {
    std::string q;
    detail::append_quoted(q, s);
    return q;
  };

  line(0, "application ", quoted(model.name), " {");
  for (const auto& svc : model.services) {
    line(1, "service ", quoted(svc.name), " {");
    for (const auto& ep : svc.endpoints) {
      line(2, "endpoint ", quoted(ep.name), " {");
      line(3, "protocol ", to_string(ep.protocol));
      line(3, "container-port ", std::to_string(ep.container_port));
      line(3, "target-port ", std::to_string(ep.target_port));
      line(3, "load-balancing round-robin");
      line(2, "}");
    }
    for (const auto& unit : svc.deployment_units) {
      line(2, "deployment-unit ", quoted(unit.name), " {");
      for (const auto& ct : unit.containers) {
        line(3, "container ", quoted(ct.name), " {");
        line(4, "image ", quoted(ct.image));
        for (int port : ct.ports) line(4, "port ", std::to_string(port));
        for (const auto& [key, value] : ct.env)
          line(4, "env ", key, " = ", quoted(value));
        line(3, "}");
      }
      for (const auto& [key, value] : unit.tags)
        line(3, "tag ", key, " = ", quoted(value));
      line(3, "policy {");
      line(4, "replicas ", std::to_string(unit.policy.replicas));
      for (const auto& [key, value] : unit.policy.selectors) {
        line(4, "selector ",
             quoted(value == "true" ? key : key + "=" + value));
      }
      if (unit.policy.scaling) {
        const ScalingRule& rule = *unit.policy.scaling;
        line(4, "scale {");
        if (rule.is_cpu())
          line(5, "metric cpu");
        else
          line(5, "metric ", quoted(rule.metric));
        line(5, "target ", detail::format_number(rule.target));
        line(5, "min ", std::to_string(rule.min_replicas));
        line(5, "max ", std::to_string(rule.max_replicas));
        line(4, "}");
      }
      line(3, "}");
      line(2, "}");
    }
    for (const auto& ref : svc.uses) {
      std::string target = ref.external
                               ? "external:" + ref.service_name + ":" + ref.endpoint_name
                               : ref.service_name + "." + ref.endpoint_name;
      line(2, "uses ", quoted(target));
    }
    line(1, "}");
  }
  line(0, "}");
  return out;
}

// Single formatting authority: formatting a model is canonical
// serialization, nothing more.
inline std::string format(const ApplicationModel& model) {
  return canonical_serialize(model);
}

}  // namespace cnadsl
