// Copyright 2026 The cnadsl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>

#include <set>
#include <string>
#include <vector>

#include "cnadsl/gen_common.hpp"
#include "cnadsl/manifest.hpp"
#include "cnadsl/model.hpp"
#include "cnadsl/validator.hpp"

namespace cnadsl {

namespace detail {

using json = nlohmann::json;

// App ids a service contributes to the group, in declaration order.
// Multi-container units are split one app per container, mirroring the
// compose mapping.
inline std::vector<std::string> marathon_app_ids(const ApplicationModel& model,
                                                 const Service& svc) {
  std::vector<std::string> ids;
  const std::string prefix = "/" + model.name + "/" + svc.name + "/";
  for (const auto& unit : svc.deployment_units) {
    if (unit.containers.size() > 1) {
      for (const auto& ct : unit.containers)
        ids.push_back(prefix + unit.name + "-" + ct.name);
    } else {
      ids.push_back(prefix + unit.name);
    }
  }
  return ids;
}

inline json marathon_app(const ApplicationModel& model, const Service& svc,
                         const DeploymentUnit& unit, const ContainerSpec& ct,
                         const std::string& app_id) {
  json app;
  app["id"] = app_id;
  app["instances"] = unit.policy.initial_replicas();

  json docker;
  docker["image"] = ct.image;
  docker["network"] = "BRIDGE";
  json mappings = json::array();
  for (const Endpoint* ep : exposed_endpoints(svc, unit, ct)) {
    json mapping;
    mapping["containerPort"] = ep->container_port;
    mapping["protocol"] = ep->protocol == Protocol::Udp ? "udp" : "tcp";
    mapping["servicePort"] = ep->target_port;
    mappings.push_back(mapping);
  }
  if (!mappings.empty()) docker["portMappings"] = mappings;
  app["container"] = {{"docker", docker}, {"type", "DOCKER"}};

  json labels = json::object();
  KeyValueMap effective = unit.tags;
  effective.emplace("app", svc.name);
  for (const auto& [key, value] : effective) labels[key] = value;
  app["labels"] = labels;

  if (!ct.env.empty()) {
    json env = json::object();
    for (const auto& [key, value] : ct.env) env[key] = value;
    app["env"] = env;
  }

  if (!unit.policy.selectors.empty()) {
    json constraints = json::array();
    for (const auto& [key, value] : unit.policy.selectors)
      constraints.push_back(json::array({key, "CLUSTER", value}));
    app["constraints"] = constraints;
  }

  std::set<std::string> dependencies;
  for (const auto& ref : svc.uses) {
    if (ref.external || ref.service_name == svc.name) continue;
    const Service* target = model.find_service(ref.service_name);
    if (!target) continue;
    for (const auto& id : marathon_app_ids(model, *target)) dependencies.insert(id);
  }
  if (!dependencies.empty())
    app["dependencies"] = json(std::vector<std::string>(dependencies.begin(),
                                                        dependencies.end()));
  return app;
}

}  // namespace detail

// Mesos/Marathon transformation: one application group containing one
// app per deployment unit. Autoscaling has no in-document encoding on
// Marathon (it needs the autoscale add-on) and is reported as a gap.
inline ManifestSet generate_marathon(const ApplicationModel& model) {
  ManifestSet set;
  detail::json apps = detail::json::array();

  for (const std::string& name : dependency_order(model)) {
    const Service* svc = model.find_service(name);
    if (!svc) continue;
    const std::string prefix = "/" + model.name + "/" + svc->name + "/";
    for (const auto& unit : svc->deployment_units) {
      if (unit.policy.scaling) {
        set.gaps.push_back({GapConcept::Autoscaling, "marathon",
                            "scaling rule on deployment-unit \"" + unit.name +
                                "\" of service \"" + svc->name +
                                "\" requires marathon-autoscale add-on"});
      }
      if (unit.containers.size() > 1) {
        set.gaps.push_back(
            {GapConcept::Scheduling, "marathon",
             "deployment-unit \"" + unit.name + "\" of service \"" + svc->name +
                 "\" groups " + std::to_string(unit.containers.size()) +
                 " containers; emitted as one app per container instead of a pod"});
        for (const auto& ct : unit.containers) {
          apps.push_back(detail::marathon_app(model, *svc, unit, ct,
                                              prefix + unit.name + "-" + ct.name));
        }
      } else if (!unit.containers.empty()) {
        apps.push_back(detail::marathon_app(model, *svc, unit,
                                            unit.containers.front(),
                                            prefix + unit.name));
      }
    }
  }

  detail::json group;
  group["id"] = "/" + model.name;
  group["apps"] = apps;
  set.documents.push_back({"marathon-group.json", group.dump(2) + "\n"});
  return set;
}

}  // namespace cnadsl
