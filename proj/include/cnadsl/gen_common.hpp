// Copyright 2026 The cnadsl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "cnadsl/model.hpp"
#include "cnadsl/yaml_emitter.hpp"

namespace cnadsl::detail {

inline yamlgen::Node labels_node(const KeyValueMap& labels) {
  yamlgen::Node node = yamlgen::Node::map();
  for (const auto& [key, value] : labels) node.set(key, yamlgen::Node::str(value));
  return node;
}

// Every target needs a selector label: the "app" tag when the unit
// carries one, the service name otherwise.
inline std::string app_label(const Service& svc, const DeploymentUnit& unit) {
  auto it = unit.tags.find("app");
  return it != unit.tags.end() ? it->second : svc.name;
}

// Labels attached to a unit's workload: tags plus injected app/unit
// defaults (tags win on conflict, they must survive verbatim).
inline KeyValueMap unit_labels(const Service& svc, const DeploymentUnit& unit) {
  KeyValueMap labels = unit.tags;
  labels.emplace("app", svc.name);
  labels.emplace("unit", unit.name);
  return labels;
}

// Value a service-level selector matches on: the unanimous app label of
// the service's units, falling back to the service name when units
// disagree.
inline std::string service_selector_value(const Service& svc) {
  std::string value;
  bool first = true;
  for (const auto& unit : svc.deployment_units) {
    std::string label = app_label(svc, unit);
    if (first) {
      value = label;
      first = false;
    } else if (label != value) {
      return svc.name;
    }
  }
  return first ? svc.name : value;
}

// Workload object name: the service name keeps discoverability for the
// common single-unit case; extra units get a suffixed name.
inline std::string workload_name(const Service& svc, const DeploymentUnit& unit) {
  return svc.deployment_units.size() == 1 ? svc.name
                                          : svc.name + "-" + unit.name;
}

inline bool container_declares(const ContainerSpec& ct, int port) {
  for (int p : ct.ports)
    if (p == port) return true;
  return false;
}

// Endpoints a given container of a given unit exposes, used by targets
// that publish ports per workload rather than per service object. An
// endpoint attaches to the containers declaring its container port; an
// endpoint no container declares falls back to the first container of
// the first unit so the exposure is never dropped.
inline std::vector<const Endpoint*> exposed_endpoints(const Service& svc,
                                                      const DeploymentUnit& unit,
                                                      const ContainerSpec& ct) {
  std::vector<const Endpoint*> exposed;
  const bool is_fallback = !svc.deployment_units.empty() &&
                           &unit == &svc.deployment_units.front() &&
                           !unit.containers.empty() &&
                           &ct == &unit.containers.front();
  for (const auto& ep : svc.endpoints) {
    bool declared_anywhere = false;
    for (const auto& u : svc.deployment_units)
      for (const auto& c : u.containers)
        declared_anywhere |= container_declares(c, ep.container_port);
    if (declared_anywhere ? container_declares(ct, ep.container_port)
                          : is_fallback) {
      exposed.push_back(&ep);
    }
  }
  return exposed;
}

}  // namespace cnadsl::detail
