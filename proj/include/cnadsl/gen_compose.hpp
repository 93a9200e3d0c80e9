// Copyright 2026 The cnadsl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "cnadsl/gen_common.hpp"
#include "cnadsl/manifest.hpp"
#include "cnadsl/model.hpp"
#include "cnadsl/validator.hpp"
#include "cnadsl/yaml_emitter.hpp"

namespace cnadsl {

namespace detail {

using yamlgen::Node;

inline Node compose_service(const Service& svc, const DeploymentUnit& unit,
                            const ContainerSpec& ct) {
  Node entry = Node::map();
  entry.set("image", Node::str(ct.image));

  Node deploy = Node::map();
  KeyValueMap labels = unit.tags;
  labels.emplace("app", svc.name);
  deploy.set("labels", labels_node(labels));
  deploy.set("replicas", Node::integer(unit.policy.initial_replicas()));
  if (!unit.policy.selectors.empty()) {
    Node constraints = Node::seq();
    for (const auto& [key, value] : unit.policy.selectors)
      constraints.push(Node::str("node.labels." + key + " == " + value));
    Node placement = Node::map();
    placement.set("constraints", std::move(constraints));
    deploy.set("placement", std::move(placement));
  }
  entry.set("deploy", std::move(deploy));

  if (!ct.env.empty()) {
    Node environment = Node::map();
    for (const auto& [key, value] : ct.env)
      environment.set(key, Node::str(value));
    entry.set("environment", std::move(environment));
  }

  Node networks = Node::seq();
  networks.push(Node::str("app-net"));
  entry.set("networks", std::move(networks));

  auto exposed = exposed_endpoints(svc, unit, ct);
  if (!exposed.empty()) {
    Node ports = Node::seq();
    for (const Endpoint* ep : exposed) {
      ports.push(Node::str(std::to_string(ep->target_port) + ":" +
                           std::to_string(ep->container_port)));
    }
    entry.set("ports", std::move(ports));
  }
  return entry;
}

}  // namespace detail

// Docker Swarm transformation via a single Compose version 3 file. Swarm
// has no pod concept and no autoscaler: multi-container units are split
// into one compose service per container, scaling rules pin replicas to
// the scaling minimum; both are reported as capability gaps.
inline ManifestSet generate_compose(const ApplicationModel& model) {
  ManifestSet set;
  detail::Node services = detail::Node::map();

  for (const std::string& name : dependency_order(model)) {
    const Service* svc = model.find_service(name);
    if (!svc) continue;
    for (const auto& unit : svc->deployment_units) {
      if (unit.policy.scaling) {
        set.gaps.push_back(
            {GapConcept::Autoscaling, "swarm",
             "scaling rule on deployment-unit \"" + unit.name + "\" of service \"" +
                 svc->name +
                 "\" cannot be expressed; deploy.replicas pinned to scaling min " +
                 std::to_string(unit.policy.scaling->min_replicas)});
      }
      if (unit.containers.size() > 1) {
        set.gaps.push_back(
            {GapConcept::Scheduling, "swarm",
             "deployment-unit \"" + unit.name + "\" of service \"" + svc->name +
                 "\" groups " + std::to_string(unit.containers.size()) +
                 " containers; Swarm cannot co-schedule them as one unit, "
                 "emitting one compose service per container"});
        for (const auto& ct : unit.containers) {
          services.set(svc->name + "-" + unit.name + "-" + ct.name,
                       detail::compose_service(*svc, unit, ct));
        }
      } else if (!unit.containers.empty()) {
        services.set(detail::workload_name(*svc, unit),
                     detail::compose_service(*svc, unit, unit.containers.front()));
      }
    }
  }

  detail::Node networks = detail::Node::map();
  detail::Node app_net = detail::Node::map();
  app_net.set("driver", detail::Node::str("overlay"));
  networks.set("app-net", std::move(app_net));

  // Top-level keys keep the conventional fixed order.
  detail::Node root = detail::Node::map(/*sorted=*/false);
  root.set("version", detail::Node::str("3"));
  root.set("services", std::move(services));
  root.set("networks", std::move(networks));

  set.documents.push_back({"docker-compose.yml", root.emit()});
  return set;
}

}  // namespace cnadsl
