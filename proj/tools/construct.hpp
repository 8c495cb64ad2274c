// SPDX-License-Identifier: MIT
//
// Construction registry behind the `construct` subcommand: builds one
// named datum (a torus-normalizer family member, a classical regular
// representative, or a catalogue row) and serializes it — matrices,
// forms, torus weights, jordan types, witnesses — as a fixed-key-order
// JSON document.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "report.hpp"

namespace regulib::tools {

/// Parameters a construction may consume; each construction validates
/// that the ones it needs are present.
struct ConstructOptions {
  std::optional<unsigned> p;
  std::optional<unsigned> l;
  std::optional<unsigned> m;
  std::optional<unsigned> f;
  std::optional<unsigned> a;
  std::optional<unsigned> d;
  unsigned long long seed = 0;
  unsigned long long cap = 1'000'000;
};

/// The construction identifiers accepted by run_construct.
[[nodiscard]] const std::vector<std::string>& construction_ids();

/// Builds and serializes one construction.  Throws std::invalid_argument
/// for an unknown id or missing/invalid parameters.
[[nodiscard]] Json run_construct(const std::string& construction_id,
                                 const ConstructOptions& options);

}  // namespace regulib::tools
