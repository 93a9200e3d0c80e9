// Copyright 2026 The cnadsl Authors
// SPDX-License-Identifier: Apache-2.0

// Umbrella header: the whole pipeline from DSL text to target-native
// deployment descriptors.

#pragma once

#include "cnadsl/canonical.hpp"    // IWYU pragma: export
#include "cnadsl/diagnostics.hpp"  // IWYU pragma: export
#include "cnadsl/gen_compose.hpp"    // IWYU pragma: export
#include "cnadsl/gen_kubernetes.hpp"  // IWYU pragma: export
#include "cnadsl/gen_marathon.hpp"    // IWYU pragma: export
#include "cnadsl/golden.hpp"       // IWYU pragma: export
#include "cnadsl/inspect.hpp"      // IWYU pragma: export
#include "cnadsl/manifest.hpp"     // IWYU pragma: export
#include "cnadsl/model.hpp"        // IWYU pragma: export
#include "cnadsl/parser.hpp"       // IWYU pragma: export
#include "cnadsl/validator.hpp"    // IWYU pragma: export
