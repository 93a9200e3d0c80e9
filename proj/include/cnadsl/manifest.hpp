// Copyright 2026 The cnadsl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cnadsl {

// A source-model concept the chosen target platform cannot express.
enum class GapConcept { Autoscaling, LoadBalancing, Scheduling, Labeling };

inline std::string_view to_string(GapConcept concept_kind) {
  switch (concept_kind) {
    case GapConcept::Autoscaling: return "AUTOSCALING";
    case GapConcept::LoadBalancing: return "LOAD_BALANCING";
    case GapConcept::Scheduling: return "SCHEDULING";
    case GapConcept::Labeling: return "LABELING";
  }
  return "UNKNOWN";
}

struct CapabilityGap {
  GapConcept kind = GapConcept::Autoscaling;
  std::string target;
  std::string detail;

  friend bool operator==(const CapabilityGap&, const CapabilityGap&) = default;
};

struct ManifestDocument {
  std::string filename;
  std::string body;

  friend bool operator==(const ManifestDocument&, const ManifestDocument&) = default;
};

// Ordered set of generated target-native descriptor documents plus
// capability-gap diagnostics. Filenames are unique within a set.
struct ManifestSet {
  std::vector<ManifestDocument> documents;
  std::vector<CapabilityGap> gaps;

  friend bool operator==(const ManifestSet&, const ManifestSet&) = default;
};

}  // namespace cnadsl
