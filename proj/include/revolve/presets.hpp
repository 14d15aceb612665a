#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revolve/series.hpp"

namespace revolve {

/// A named, ready-to-render spec from the classical dragon/flake family.
/// Entries without a spec are registered rejections: famous specs whose
/// parameters fall outside the revolving-group construction.
struct Preset {
  std::string name;
  std::string note;
  int recommended_depth = 30;
  std::optional<SeriesSpec> spec;
  std::string rejection_reason;

  bool rejected() const { return !spec.has_value(); }
};

const std::vector<Preset>& preset_registry();

/// nullptr when the name is unknown.
const Preset* find_preset(std::string_view name);

}  // namespace revolve
