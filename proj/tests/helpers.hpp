// Copyright 2026 The cnadsl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cnadsl/model.hpp"

namespace testutil {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::filesystem::path corpus_dir() {
#ifdef CNADSL_CORPUS_DIR
  return CNADSL_CORPUS_DIR;
#else
  return "corpus";
#endif
}

inline std::filesystem::path test_data_dir() {
#ifdef CNADSL_TEST_DATA_DIR
  return CNADSL_TEST_DATA_DIR;
#else
  return "tests/data";
#endif
}

// The worked single-service example used across the suites: one payment
// service, one unit, image weaveworksdemos/payment:0.4.3, replicas 3,
// one node selector, tag app=nginx, endpoint http TCP 80 -> 80.
inline std::string payment_source() {
  return R"(application "sockshop" {
  service "payment" {
    endpoint "http" {
      protocol tcp
      container-port 80
      target-port 80
      load-balancing round-robin
    }
    deployment-unit "payment" {
      container "payment" {
        image "weaveworksdemos/payment:0.4.3"
        port 80
      }
      tag app = "nginx"
      policy {
        replicas 3
        selector "openStack.dc1"
      }
    }
  }
}
)";
}

inline cnadsl::Service payment_service() {
  cnadsl::Service svc;
  svc.name = "payment";
  cnadsl::Endpoint http;
  http.name = "http";
  http.container_port = 80;
  http.target_port = 80;
  svc.endpoints.push_back(http);

  cnadsl::ContainerSpec container;
  container.name = "payment";
  container.image = "weaveworksdemos/payment:0.4.3";
  container.ports = {80};

  cnadsl::DeploymentUnit unit;
  unit.name = "payment";
  unit.containers.push_back(container);
  unit.tags = {{"app", "nginx"}};
  unit.policy.replicas = 3;
  unit.policy.selectors = {{"openStack.dc1", "true"}};
  svc.deployment_units.push_back(unit);
  return svc;
}

inline cnadsl::ApplicationModel payment_model() {
  return cnadsl::construct_application("sockshop", {payment_service()});
}

// Generator for random valid models; used by the round-trip and
// determinism property tests. Seeded, so failures reproduce.
class ModelGen {
 public:
  explicit ModelGen(std::uint64_t seed) : rng_(seed) {}

  cnadsl::ApplicationModel model() {
    cnadsl::ApplicationModel app;
    app.name = fresh_dns_name();
    int service_count = pick(1, 5);
    for (int i = 0; i < service_count; ++i) app.services.push_back(service());
    add_uses(app);
    used_names_.clear();
    return app;
  }

 private:
  int pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool chance(double p) {
    return std::uniform_real_distribution<double>(0, 1)(rng_) < p;
  }

  std::string fresh_dns_name() {
    static constexpr char alphabet[] = "abcdefghijklmnopqrstuvwxyz0123456789";
    for (;;) {
      int len = pick(3, 10);
      std::string name;
      for (int i = 0; i < len; ++i) {
        name += alphabet[pick(0, 35)];
        if (i > 0 && i < len - 2 && chance(0.1)) name += '-';
      }
      if (name.size() > 63) continue;
      if (used_names_.insert(name).second) return name;
    }
  }

  std::string label_key() {
    static constexpr const char* pool[] = {"app",   "tier",       "zone",
                                           "stage", "team.owner", "provider_id",
                                           "a-b.c", "Env"};
    return pool[pick(0, 7)];
  }

  std::string text_value() {
    static constexpr const char* pool[] = {
        "plain", "with space", "quo\"te", "back\\slash", "x=y", "0.5", "true"};
    return pool[pick(0, 6)];
  }

  cnadsl::Service service() {
    cnadsl::Service svc;
    svc.name = fresh_dns_name();
    int endpoint_count = pick(0, 2);
    std::set<int> ports;
    for (int i = 0; i < endpoint_count; ++i) {
      cnadsl::Endpoint ep;
      ep.name = fresh_dns_name();
      ep.protocol = chance(0.2) ? cnadsl::Protocol::Udp : cnadsl::Protocol::Tcp;
      do {
        ep.container_port = pick(1, 65535);
      } while (!ports.insert(ep.container_port).second);
      ep.target_port = chance(0.5) ? ep.container_port : pick(1, 65535);
      svc.endpoints.push_back(ep);
    }

    int unit_count = pick(1, 2);
    for (int u = 0; u < unit_count; ++u) {
      cnadsl::DeploymentUnit unit;
      unit.name = fresh_dns_name();
      std::set<int> unit_ports;  // ports collide within a unit, keep them apart
      int container_count = pick(1, 2);
      for (int c = 0; c < container_count; ++c) {
        cnadsl::ContainerSpec ct;
        ct.name = fresh_dns_name();
        ct.image = "registry.example.com/" + ct.name + ":" +
                   std::to_string(pick(0, 9)) + "." + std::to_string(pick(0, 20));
        if (u == 0 && c == 0) {
          for (const auto& ep : svc.endpoints) {
            if (unit_ports.insert(ep.container_port).second)
              ct.ports.push_back(ep.container_port);
          }
        }
        if (chance(0.4)) {
          int extra;
          do {
            extra = pick(1, 65535);
          } while (!unit_ports.insert(extra).second);
          ct.ports.push_back(extra);
        }
        int env_count = pick(0, 2);
        for (int e = 0; e < env_count; ++e)
          ct.env["VAR_" + std::to_string(e)] = text_value();
        unit.containers.push_back(ct);
      }
      int tag_count = pick(0, 3);
      for (int t = 0; t < tag_count; ++t) unit.tags[label_key()] = text_value();
      unit.policy.replicas = pick(0, 5);
      int selector_count = pick(0, 2);
      for (int s = 0; s < selector_count; ++s)
        unit.policy.selectors[label_key()] = chance(0.5) ? "true" : text_value_no_eq();
      if (chance(0.3)) {
        cnadsl::ScalingRule rule;
        rule.metric = chance(0.5) ? std::string(cnadsl::kCpuMetric)
                                  : "queue-depth";
        rule.target = chance(0.5) ? static_cast<double>(pick(1, 100))
                                  : pick(1, 100) + 0.5;
        rule.min_replicas = pick(1, 3);
        rule.max_replicas = rule.min_replicas + pick(0, 4);
        unit.policy.scaling = rule;
      }
      svc.deployment_units.push_back(unit);
    }
    return svc;
  }

  // Selector values must not contain '=' or they would re-parse as a
  // different key/value split.
  std::string text_value_no_eq() {
    std::string v = text_value();
    for (auto& c : v)
      if (c == '=') c = '-';
    return v;
  }

  void add_uses(cnadsl::ApplicationModel& app) {
    for (auto& svc : app.services) {
      for (auto& other : app.services) {
        if (other.name == svc.name || other.endpoints.empty()) continue;
        if (chance(0.3)) {
          svc.uses.push_back(
              {other.name, other.endpoints[static_cast<std::size_t>(pick(
                               0, static_cast<int>(other.endpoints.size()) - 1))]
                               .name,
               false});
        }
      }
      if (chance(0.2))
        svc.uses.push_back({"legacy.example.com", "8080", true});
    }
  }

  std::mt19937_64 rng_;
  std::set<std::string> used_names_;
};

}  // namespace testutil
