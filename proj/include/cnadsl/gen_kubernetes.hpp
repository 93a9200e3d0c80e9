// Copyright 2026 The cnadsl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>

#include "cnadsl/canonical.hpp"
#include "cnadsl/gen_common.hpp"
#include "cnadsl/manifest.hpp"
#include "cnadsl/model.hpp"
#include "cnadsl/validator.hpp"
#include "cnadsl/yaml_emitter.hpp"

namespace cnadsl {

namespace detail {

using yamlgen::Node;

inline Node k8s_deployment(const Service& svc, const DeploymentUnit& unit,
                           const std::string& ns) {
  const KeyValueMap labels = unit_labels(svc, unit);
  const std::string name = workload_name(svc, unit);

  Node match = Node::map();
  match.set("app", Node::str(labels.at("app")));
  match.set("unit", Node::str(labels.at("unit")));

  Node containers = Node::seq();
  for (const auto& ct : unit.containers) {
    Node container = Node::map();
    container.set("image", Node::str(ct.image));
    container.set("name", Node::str(ct.name));
    if (!ct.env.empty()) {
      Node env = Node::seq();
      for (const auto& [key, value] : ct.env) {
        Node var = Node::map();
        var.set("name", Node::str(key));
        var.set("value", Node::str(value));
        env.push(std::move(var));
      }
      container.set("env", std::move(env));
    }
    if (!ct.ports.empty()) {
      Node ports = Node::seq();
      for (int port : ct.ports) {
        Node entry = Node::map();
        entry.set("containerPort", Node::integer(port));
        ports.push(std::move(entry));
      }
      container.set("ports", std::move(ports));
    }
    containers.push(std::move(container));
  }

  Node pod_spec = Node::map();
  pod_spec.set("containers", std::move(containers));
  if (!unit.policy.selectors.empty())
    pod_spec.set("nodeSelector", labels_node(unit.policy.selectors));

  Node template_meta = Node::map();
  template_meta.set("labels", labels_node(labels));

  Node pod_template = Node::map();
  pod_template.set("metadata", std::move(template_meta));
  pod_template.set("spec", std::move(pod_spec));

  Node selector = Node::map();
  selector.set("matchLabels", std::move(match));

  Node spec = Node::map();
  spec.set("replicas", Node::integer(unit.policy.initial_replicas()));
  spec.set("selector", std::move(selector));
  spec.set("template", std::move(pod_template));

  Node metadata = Node::map();
  metadata.set("labels", labels_node(labels));
  metadata.set("name", Node::str(name));
  metadata.set("namespace", Node::str(ns));

  Node root = Node::map();
  root.set("apiVersion", Node::str("apps/v1"));
  root.set("kind", Node::str("Deployment"));
  root.set("metadata", std::move(metadata));
  root.set("spec", std::move(spec));
  return root;
}

inline Node k8s_service(const Service& svc, const std::string& ns) {
  const std::string selector_value = service_selector_value(svc);

  Node ports = Node::seq();
  for (const auto& ep : svc.endpoints) {
    Node entry = Node::map();
    entry.set("name", Node::str(ep.name));
    entry.set("port", Node::integer(ep.target_port));
    entry.set("protocol", Node::str(ep.protocol == Protocol::Udp ? "UDP" : "TCP"));
    entry.set("targetPort", Node::integer(ep.container_port));
    ports.push(std::move(entry));
  }

  Node selector = Node::map();
  selector.set("app", Node::str(selector_value));

  Node spec = Node::map();
  spec.set("ports", std::move(ports));
  spec.set("selector", std::move(selector));

  Node metadata_labels = Node::map();
  metadata_labels.set("app", Node::str(selector_value));

  Node metadata = Node::map();
  metadata.set("labels", std::move(metadata_labels));
  metadata.set("name", Node::str(svc.name));
  metadata.set("namespace", Node::str(ns));

  Node root = Node::map();
  root.set("apiVersion", Node::str("v1"));
  root.set("kind", Node::str("Service"));
  root.set("metadata", std::move(metadata));
  root.set("spec", std::move(spec));
  return root;
}

inline Node k8s_hpa(const Service& svc, const DeploymentUnit& unit,
                    const std::string& ns) {
  const ScalingRule& rule = *unit.policy.scaling;
  const std::string name = workload_name(svc, unit);

  Node metric = Node::map();
  if (rule.is_cpu()) {
    Node target = Node::map();
    target.set("averageUtilization",
               Node::integer(static_cast<long long>(std::llround(rule.target))));
    target.set("type", Node::str("Utilization"));
    Node resource = Node::map();
    resource.set("name", Node::str("cpu"));
    resource.set("target", std::move(target));
    metric.set("resource", std::move(resource));
    metric.set("type", Node::str("Resource"));
  } else {
    Node target = Node::map();
    target.set("averageValue", Node::str(detail::format_number(rule.target)));
    target.set("type", Node::str("AverageValue"));
    Node identifier = Node::map();
    identifier.set("name", Node::str(rule.metric));
    Node pods = Node::map();
    pods.set("metric", std::move(identifier));
    pods.set("target", std::move(target));
    metric.set("pods", std::move(pods));
    metric.set("type", Node::str("Pods"));
  }
  Node metrics = Node::seq();
  metrics.push(std::move(metric));

  Node target_ref = Node::map();
  target_ref.set("apiVersion", Node::str("apps/v1"));
  target_ref.set("kind", Node::str("Deployment"));
  target_ref.set("name", Node::str(name));

  Node spec = Node::map();
  spec.set("maxReplicas", Node::integer(rule.max_replicas));
  spec.set("metrics", std::move(metrics));
  spec.set("minReplicas", Node::integer(rule.min_replicas));
  spec.set("scaleTargetRef", std::move(target_ref));

  Node metadata = Node::map();
  metadata.set("name", Node::str(name));
  metadata.set("namespace", Node::str(ns));

  Node root = Node::map();
  root.set("apiVersion", Node::str("autoscaling/v2"));
  root.set("kind", Node::str("HorizontalPodAutoscaler"));
  root.set("metadata", std::move(metadata));
  root.set("spec", std::move(spec));
  return root;
}

inline std::string numbered_filename(int seq, const std::string& service,
                                     std::string_view kind) {
  char prefix[8];
  std::snprintf(prefix, sizeof prefix, "%02d", seq);
  return std::string(prefix) + "-" + service + "-" + std::string(kind) + ".yaml";
}

}  // namespace detail

// Kubernetes transformation: one Deployment per deployment unit, one
// Service per DSL service with endpoints, one HorizontalPodAutoscaler
// per scaling rule. Requires a validated (resolved) model. Output is
// deterministic: files numbered in dependency order, map keys sorted.
inline ManifestSet generate_kubernetes(const ApplicationModel& model,
                                       const std::string& namespace_name = "default") {
  ManifestSet set;
  int seq = 0;
  for (const std::string& name : dependency_order(model)) {
    const Service* svc = model.find_service(name);
    if (!svc) continue;
    for (const auto& unit : svc->deployment_units) {
      set.documents.push_back(
          {detail::numbered_filename(++seq, svc->name, "deployment"),
           detail::k8s_deployment(*svc, unit, namespace_name).emit()});
    }
    if (!svc->endpoints.empty()) {
      set.documents.push_back(
          {detail::numbered_filename(++seq, svc->name, "service"),
           detail::k8s_service(*svc, namespace_name).emit()});
    }
    for (const auto& unit : svc->deployment_units) {
      if (!unit.policy.scaling) continue;
      set.documents.push_back(
          {detail::numbered_filename(++seq, svc->name, "horizontalpodautoscaler"),
           detail::k8s_hpa(*svc, unit, namespace_name).emit()});
    }
  }
  return set;
}

}  // namespace cnadsl
