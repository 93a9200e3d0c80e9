// Copyright 2026 The cnadsl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cnadsl/diagnostics.hpp"
#include "cnadsl/model.hpp"
#include "cnadsl/parser.hpp"

namespace cnadsl {

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;
  bool resolved = false;  // true iff no error diagnostics

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

namespace detail {

class Validator {
 public:
  Validator(const ApplicationModel& model, const SourceIndex* index)
      : model_(model), index_(index) {}

  ValidationReport run() {
    check_application();
    for (const auto& svc : model_.services) check_service(svc);
    check_references();
    check_cycles();
    ValidationReport report;
    report.diagnostics = std::move(diags_);
    report.resolved = !has_errors(report.diagnostics);
    return report;
  }

 private:
  SourceSpan span(const std::string& key) const {
    return index_ ? index_->find_or(key) : SourceSpan{1, 1, 0};
  }

  void add(Severity sev, std::string_view code, std::string message,
           const std::string& key) {
    diags_.push_back({sev, std::string(code), std::move(message), span(key)});
  }
  void err(std::string_view code, std::string message, const std::string& key) {
    add(Severity::Error, code, std::move(message), key);
  }
  void warn(std::string_view code, std::string message, const std::string& key) {
    add(Severity::Warning, code, std::move(message), key);
  }

  void check_dns_name(std::string_view what, const std::string& name,
                      const std::string& key) {
    if (!is_dns1123_label(name)) {
      err(codes::kInvalidDnsName,
          std::string(what) + " name \"" + name + "\" is not a valid DNS-1123 label",
          key);
    }
  }

  void check_application() {
    check_dns_name("application", model_.name, "app");
    if (model_.services.empty())
      err(codes::kEmptyComponent, "an application must provide at least one service",
          "app");
    std::set<std::string_view> seen;
    for (const auto& svc : model_.services) {
      if (!seen.insert(svc.name).second)
        err(codes::kDuplicateModelName,
            "duplicate service name \"" + svc.name + "\"", "svc/" + svc.name);
    }
  }

  void check_service(const Service& svc) {
    const std::string base = "svc/" + svc.name;
    check_dns_name("service", svc.name, base);
    if (svc.deployment_units.empty())
      err(codes::kEmptyComponent,
          "service \"" + svc.name + "\" must execute at least one deployment unit",
          base);

    std::set<std::string_view> endpoint_names;
    for (const auto& ep : svc.endpoints) {
      const std::string ekey = base + "/ep/" + ep.name;
      check_dns_name("endpoint", ep.name, ekey);
      if (!endpoint_names.insert(ep.name).second)
        err(codes::kDuplicateModelName,
            "duplicate endpoint name \"" + ep.name + "\" in service \"" +
                svc.name + "\"",
            ekey);
      check_port(ep.container_port, "container-port", ekey + "/container-port");
      check_port(ep.target_port, "target-port", ekey);
      if (!declares_port(svc, ep.container_port)) {
        warn(codes::kUndeclaredPort,
             "endpoint \"" + ep.name + "\" container-port " +
                 std::to_string(ep.container_port) +
                 " is not declared by any container of service \"" + svc.name +
                 "\"",
             ekey + "/container-port");
      }
    }

    std::set<std::string_view> unit_names;
    for (const auto& unit : svc.deployment_units) {
      if (!unit_names.insert(unit.name).second)
        err(codes::kDuplicateModelName,
            "duplicate deployment-unit name \"" + unit.name + "\" in service \"" +
                svc.name + "\"",
            base + "/du/" + unit.name);
      check_unit(svc, unit, base + "/du/" + unit.name);
    }
  }

  void check_unit(const Service& svc, const DeploymentUnit& unit,
                  const std::string& base) {
    check_dns_name("deployment-unit", unit.name, base);
    if (unit.containers.empty())
      err(codes::kEmptyComponent,
          "deployment-unit \"" + unit.name + "\" must be composed of at least one container",
          base);

    std::set<std::string_view> container_names;
    std::map<int, std::string_view> unit_ports;
    for (const auto& ct : unit.containers) {
      const std::string ckey = base + "/ct/" + ct.name;
      check_dns_name("container", ct.name, ckey);
      if (!container_names.insert(ct.name).second)
        err(codes::kDuplicateModelName,
            "duplicate container name \"" + ct.name + "\" in deployment-unit \"" +
                unit.name + "\"",
            ckey);
      if (ct.image.empty()) {
        err(codes::kInvalidImage,
            "container \"" + ct.name + "\" has an empty image reference",
            ckey + "/image");
      } else if (!is_image_reference(ct.image)) {
        err(codes::kInvalidImage,
            "image \"" + ct.image + "\" is not a valid registry/name[:tag][@digest] reference",
            ckey + "/image");
      }
      std::set<int> in_container;
      for (int port : ct.ports) {
        check_port(port, "port", ckey);
        if (!in_container.insert(port).second)
          err(codes::kPortCollision,
              "port " + std::to_string(port) + " declared twice in container \"" +
                  ct.name + "\"",
              ckey);
        auto [it, inserted] = unit_ports.emplace(port, ct.name);
        if (!inserted && it->second != ct.name)
          err(codes::kPortCollision,
              "port " + std::to_string(port) + " declared by containers \"" +
                  std::string(it->second) + "\" and \"" + ct.name +
                  "\" of deployment-unit \"" + unit.name + "\"",
              ckey);
      }
    }

    for (const auto& [key, value] : unit.tags) {
      if (!is_label_key(key))
        err(codes::kInvalidLabelKey, "tag key \"" + key + "\" is not a valid label key",
            base + "/tag/" + key);
      (void)value;
    }

    check_policy(svc, unit, base);
  }

  void check_policy(const Service& svc, const DeploymentUnit& unit,
                    const std::string& base) {
    const DeploymentPolicy& policy = unit.policy;
    if (policy.replicas < 0)
      err(codes::kNegativeReplicas,
          "replicas must be a non-negative integer", base + "/policy/replicas");
    for (const auto& [key, value] : policy.selectors) {
      const std::string skey = base + "/selector/" + key;
      if (!is_label_key(key))
        err(codes::kInvalidLabelKey,
            "selector key \"" + key + "\" is not a valid label key", skey);
      if (!is_label_value(value))
        err(codes::kInvalidLabelKey,
            "selector value for \"" + key + "\" exceeds 63 characters", skey);
    }
    if (policy.scaling) {
      const ScalingRule& rule = *policy.scaling;
      const std::string skey = base + "/scale";
      if (rule.min_replicas < 1)
        err(codes::kScalingBounds, "scaling min must be a positive integer", skey);
      if (rule.max_replicas < 1)
        err(codes::kScalingBounds, "scaling max must be a positive integer", skey);
      if (rule.min_replicas > rule.max_replicas)
        err(codes::kScalingBounds,
            "scaling bounds invalid: min " + std::to_string(rule.min_replicas) +
                " exceeds max " + std::to_string(rule.max_replicas),
            skey);
      if (rule.target <= 0)
        err(codes::kScalingBounds, "scaling target must be positive", skey);
      if (!rule.is_cpu())
        warn(codes::kCustomMetric,
             "custom metric \"" + rule.metric +
                 "\" passes validation; target support is checked per generator",
             skey + "/metric");
    }
    (void)svc;
  }

  void check_references() {
    for (const auto& svc : model_.services) {
      const std::string base = "svc/" + svc.name;
      for (std::size_t i = 0; i < svc.uses.size(); ++i) {
        const EndpointRef& ref = svc.uses[i];
        const std::string ukey = base + "/uses/" + std::to_string(i);
        if (ref.external) continue;
        if (ref.service_name == svc.name) {
          err(codes::kSelfReference,
              "service \"" + svc.name + "\" must not use its own endpoints", ukey);
          continue;
        }
        const Service* target = model_.find_service(ref.service_name);
        if (!target || !target->find_endpoint(ref.endpoint_name)) {
          err(codes::kUnresolvedReference,
              "unresolved endpoint reference " + ref.service_name + "." +
                  ref.endpoint_name,
              ukey);
        }
      }
    }
  }

  // Cycles over internal uses edges are warnings: DNS-based discovery
  // tolerates them at runtime.
  void check_cycles() {
    std::map<std::string_view, std::set<std::string_view>> graph;
    for (const auto& svc : model_.services) {
      auto& out = graph[svc.name];
      for (const auto& ref : svc.uses) {
        if (ref.external || ref.service_name == svc.name) continue;
        if (model_.find_service(ref.service_name)) out.insert(ref.service_name);
      }
    }

    std::set<std::string> reported;
    std::map<std::string_view, int> color;  // 0 new, 1 active, 2 done
    std::vector<std::string_view> stack;

    auto dfs = [&](auto&& self, std::string_view node) -> void {
      color[node] = 1;
      stack.push_back(node);
      for (auto next : graph[node]) {
        if (color[next] == 1) {
          auto it = std::find(stack.begin(), stack.end(), next);
          std::vector<std::string_view> cycle(it, stack.end());
          auto smallest = std::min_element(cycle.begin(), cycle.end());
          std::rotate(cycle.begin(), smallest, cycle.end());
          std::string text;
          for (auto name : cycle) {
            text += name;
            text += " -> ";
          }
          text += cycle.front();
          if (reported.insert(text).second) {
            warn(codes::kDependencyCycle,
                 "dependency cycle in uses: " + text,
                 "svc/" + std::string(cycle.front()));
          }
        } else if (color[next] == 0) {
          self(self, next);
        }
      }
      stack.pop_back();
      color[node] = 2;
    };

    for (const auto& [name, _] : graph)
      if (color[name] == 0) dfs(dfs, name);
  }

  bool declares_port(const Service& svc, int port) const {
    for (const auto& unit : svc.deployment_units)
      for (const auto& ct : unit.containers)
        if (std::find(ct.ports.begin(), ct.ports.end(), port) != ct.ports.end())
          return true;
    return false;
  }

  void check_port(int port, std::string_view field, const std::string& key) {
    if (port < 1 || port > 65535)
      err(codes::kInvalidPort,
          std::string(field) + " " + std::to_string(port) + " is outside [1, 65535]",
          key);
  }

  const ApplicationModel& model_;
  const SourceIndex* index_;
  std::vector<Diagnostic> diags_;
};

}  // namespace detail

// Semantic validation: reference resolution, naming rules and the
// capability pre-checks generators rely on. All findings land in the
// report; a resolved report guarantees every generator precondition.
inline ValidationReport validate(const ApplicationModel& model,
                                 const SourceIndex* index = nullptr) {
  return detail::Validator(model, index).run();
}

// Deterministic emission order for generators: topological over uses
// edges (dependencies first), ties and cycle breaks resolved at the
// lexicographically smallest service name. Invariant under input
// service reordering.
inline std::vector<std::string> dependency_order(const ApplicationModel& model) {
  std::map<std::string, std::set<std::string>> dependents;
  std::map<std::string, int> indegree;
  for (const auto& svc : model.services) indegree[svc.name];
  for (const auto& svc : model.services) {
    std::set<std::string> used;
    for (const auto& ref : svc.uses) {
      if (ref.external || ref.service_name == svc.name) continue;
      if (indegree.count(ref.service_name)) used.insert(ref.service_name);
    }
    for (const auto& dep : used)
      if (dependents[dep].insert(svc.name).second) ++indegree[svc.name];
  }

  std::set<std::string> ready;
  for (const auto& [name, degree] : indegree)
    if (degree == 0) ready.insert(name);

  std::vector<std::string> order;
  std::set<std::string> emitted;
  while (order.size() < indegree.size()) {
    std::string pick;
    if (!ready.empty()) {
      pick = *ready.begin();
      ready.erase(ready.begin());
    } else {
      for (const auto& [name, degree] : indegree) {
        if (!emitted.count(name)) {
          pick = name;
          break;
        }
      }
    }
    emitted.insert(pick);
    order.push_back(pick);
    for (const auto& user : dependents[pick]) {
      if (emitted.count(user)) continue;
      if (--indegree[user] == 0) ready.insert(user);
    }
  }
  return order;
}

}  // namespace cnadsl
