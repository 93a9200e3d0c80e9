// Copyright 2026 The cnadsl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "cnadsl/model.hpp"

namespace cnadsl {

struct ServiceSummary {
  std::string name;
  int units = 0;
  int containers = 0;
  int endpoints = 0;
  int replicas = 0;  // sum of effective initial replicas
  int selectors = 0;
  bool scaling = false;
  int tags = 0;
};

// Concept codes a model exercises: AD (application composition across
// services), SD (discoverable service names), DU (deployment units),
// SCHED (scheduling constraints), LB (load-balanced endpoints), AS
// (autoscaling), CL (component labeling).
struct InspectReport {
  std::vector<ServiceSummary> rows;
  std::set<std::string> concepts;
};

inline InspectReport inspect(const ApplicationModel& model) {
  InspectReport report;
  // Named services, units of execution and key/value labeling are
  // intrinsic to every definition.
  report.concepts = {"SD", "DU", "CL"};
  if (model.services.size() > 1) report.concepts.insert("AD");

  for (const auto& svc : model.services) {
    ServiceSummary row;
    row.name = svc.name;
    row.endpoints = static_cast<int>(svc.endpoints.size());
    if (!svc.endpoints.empty()) report.concepts.insert("LB");
    if (!svc.uses.empty()) report.concepts.insert("AD");
    for (const auto& unit : svc.deployment_units) {
      ++row.units;
      row.containers += static_cast<int>(unit.containers.size());
      row.replicas += unit.policy.initial_replicas();
      row.selectors += static_cast<int>(unit.policy.selectors.size());
      row.tags += static_cast<int>(unit.tags.size());
      if (unit.policy.scaling) {
        row.scaling = true;
        report.concepts.insert("AS");
      }
      if (!unit.policy.selectors.empty()) report.concepts.insert("SCHED");
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

inline std::string render_inspect(const InspectReport& report) {
  static constexpr const char* headers[] = {"service",  "units",     "containers",
                                            "endpoints", "replicas", "selectors",
                                            "scaling",  "tags"};
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : report.rows) {
    cells.push_back({row.name, std::to_string(row.units),
                     std::to_string(row.containers), std::to_string(row.endpoints),
                     std::to_string(row.replicas), std::to_string(row.selectors),
                     row.scaling ? "yes" : "no", std::to_string(row.tags)});
  }

  std::size_t widths[8];
  for (int c = 0; c < 8; ++c) {
    widths[c] = std::string(headers[c]).size();
    for (const auto& row : cells) widths[c] = std::max(widths[c], row[c].size());
  }

  std::string out;
  auto emit_row = [&](const std::vector<std::string>& row) {
    for (int c = 0; c < 8; ++c) {
      if (c) out += "  ";
      out += row[c];
      if (c + 1 < 8) out.append(widths[c] - row[c].size(), ' ');
    }
    out += '\n';
  };
  emit_row({headers, headers + 8});
  for (const auto& row : cells) emit_row(row);

  out += "concepts:";
  for (const char* code : {"AD", "SD", "DU", "SCHED", "LB", "AS", "CL"}) {
    if (report.concepts.count(code)) {
      out += ' ';
      out += code;
    }
  }
  out += '\n';
  return out;
}

}  // namespace cnadsl
