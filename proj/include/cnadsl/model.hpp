// Copyright 2026 The cnadsl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cnadsl/names.hpp"

namespace cnadsl {

/// In-memory application model. Instances are plain values: immutable by
/// convention after construction, safe to share across threads, and
/// compared structurally (maps as maps, lists as sequences).

enum class Protocol { Tcp, Udp };

// Only round-robin is supported in this version; the enum exists so the
// surface syntax stays stable when more strategies land.
enum class LoadBalancing { RoundRobin };

inline constexpr std::string_view kCpuMetric = "cpu";

inline std::string_view to_string(Protocol p) {
  return p == Protocol::Udp ? "udp" : "tcp";
}

// Tags, environment variables and scheduling constraints are key/value
// maps; storing them sorted makes serialization and equality
// insertion-order independent.
using KeyValueMap = std::map<std::string, std::string>;

// A scheduling constraint restricts which nodes may run a deployment
// unit. Each map entry is one key/value constraint; a bare key implies
// the value "true".
using SchedulingConstraints = KeyValueMap;

struct Endpoint {
  std::string name;
  Protocol protocol = Protocol::Tcp;
  int container_port = 0;
  int target_port = 0;  // what clients dial; defaults to container_port
  LoadBalancing lb_strategy = LoadBalancing::RoundRobin;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

// Reference to an endpoint of another service. External references
// ("external:host:port") are exempt from resolution.
struct EndpointRef {
  std::string service_name;
  std::string endpoint_name;
  bool external = false;

  friend bool operator==(const EndpointRef&, const EndpointRef&) = default;
};

struct ContainerSpec {
  std::string name;
  std::string image;
  std::vector<int> ports;
  KeyValueMap env;

  friend bool operator==(const ContainerSpec&, const ContainerSpec&) = default;
};

// Horizontal autoscaling between min and max replicas. metric is either
// kCpuMetric (target = utilization percent) or a custom metric name.
struct ScalingRule {
  std::string metric{kCpuMetric};
  double target = 0;
  int min_replicas = 1;
  int max_replicas = 1;

  bool is_cpu() const { return metric == kCpuMetric; }

  friend bool operator==(const ScalingRule&, const ScalingRule&) = default;
};

struct DeploymentPolicy {
  int replicas = 1;
  SchedulingConstraints selectors;
  std::optional<ScalingRule> scaling;

  // When a scaling rule is present the fixed replica count is ignored
  // and the lower scaling bound is used as the initial count.
  int initial_replicas() const {
    return scaling ? scaling->min_replicas : replicas;
  }

  friend bool operator==(const DeploymentPolicy&, const DeploymentPolicy&) = default;
};

struct DeploymentUnit {
  std::string name;
  std::vector<ContainerSpec> containers;
  KeyValueMap tags;
  DeploymentPolicy policy;

  friend bool operator==(const DeploymentUnit&, const DeploymentUnit&) = default;
};

struct Service {
  std::string name;
  std::vector<Endpoint> endpoints;
  std::vector<DeploymentUnit> deployment_units;
  std::vector<EndpointRef> uses;

  const Endpoint* find_endpoint(std::string_view endpoint_name) const {
    for (const auto& e : endpoints)
      if (e.name == endpoint_name) return &e;
    return nullptr;
  }

  friend bool operator==(const Service&, const Service&) = default;
};

struct ApplicationModel {
  std::string name;
  std::vector<Service> services;

  const Service* find_service(std::string_view service_name) const {
    for (const auto& s : services)
      if (s.name == service_name) return &s;
    return nullptr;
  }

  friend bool operator==(const ApplicationModel&, const ApplicationModel&) = default;
};

enum class ModelErrorCode {
  DuplicateServiceName,
  InvalidIdentifier,
  EmptyApplication,
};

class ModelError : public std::runtime_error {
 public:
  ModelError(ModelErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ModelErrorCode code() const { return code_; }

 private:
  ModelErrorCode code_;
};

// Checked construction of the root aggregate. Rejects invalid input
// atomically: either a model satisfying all application-level
// invariants is returned or a ModelError is thrown and nothing is
// observable. Per-service well-formedness is the caller's job (the
// validator re-checks everything).
inline ApplicationModel construct_application(std::string name,
                                              std::vector<Service> services) {
  if (!is_dns1123_label(name)) {
    throw ModelError(ModelErrorCode::InvalidIdentifier,
                     "application name \"" + name +
                         "\" is not a valid DNS-1123 label");
  }
  if (services.empty()) {
    throw ModelError(ModelErrorCode::EmptyApplication,
                     "an application must provide at least one service");
  }
  std::set<std::string_view> seen;
  std::string duplicates;
  for (const auto& s : services) {
    if (!seen.insert(s.name).second) {
      if (!duplicates.empty()) duplicates += ", ";
      duplicates += s.name;
    }
  }
  if (!duplicates.empty()) {
    throw ModelError(ModelErrorCode::DuplicateServiceName,
                     "duplicate service name(s): " + duplicates);
  }
  return ApplicationModel{std::move(name), std::move(services)};
}

// Structural equality up to tag/selector/env ordering. Key/value
// collections are maps, so the defaulted comparisons already give the
// required semantics.
inline bool model_equals(const ApplicationModel& a, const ApplicationModel& b) {
  return a == b;
}

}  // namespace cnadsl
