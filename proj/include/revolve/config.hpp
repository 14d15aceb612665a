#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "revolve/series.hpp"

namespace revolve {

class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Config files are JSON mirroring the (alpha, S, c) parametrization:
///   {
///     "kind": "delta" | "delta_zero" | "grs",      // optional, default delta
///     "alpha": [re, im],
///     "angles": [{"q": 0, "p": 1}, {"q": 1, "p": 4}, ...],  // fractions of 2*pi
///     "constants": [[re, im], ...]                 // delta kind only
///   }
/// The first angle must be {0, 1}.  delta_zero and grs specs carry no
/// constants (they are determined by alpha).
SeriesSpec config_from_string(const std::string& text);
std::string config_to_string(const SeriesSpec& spec);

SeriesSpec load_config(const std::filesystem::path& path);
void save_config(const SeriesSpec& spec, const std::filesystem::path& path);

}  // namespace revolve
