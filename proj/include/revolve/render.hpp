#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "revolve/ifs.hpp"

namespace revolve {

enum class IntensityMap { linear, log };

struct Bounds {
  double re_min = 0.0, re_max = 1.0;
  double im_min = 0.0, im_max = 1.0;
};

struct RenderConfig {
  int width = 1024;
  int height = 1024;
  std::optional<Bounds> bounds;  // nullopt: auto (bbox padded 5% per side)
  IntensityMap mapping = IntensityMap::log;
  int depth = 0;  // series truncation; 0 picks the preset default
  std::int64_t samples = 1'000'000;
  std::uint64_t seed = 0;
};

/// Per-pixel hit counts; row 0 is the top of the image (largest im).
struct Raster {
  int width = 0;
  int height = 0;
  std::vector<std::uint32_t> hits;

  std::uint64_t total() const;
};

/// Bounding box padded by 5% of each span per side (0.5 when a span
/// degenerates to a point).  Throws std::invalid_argument on an empty cloud.
Bounds auto_bounds(const PointCloud& cloud);

/// Bin every in-bounds point into exactly one pixel; points on the max edge
/// clamp inward.
Raster rasterize(const PointCloud& cloud, const RenderConfig& cfg);

/// Binary grayscale PPM: header "P5\n<width> <height>\n255\n" followed by
/// width*height bytes.  Log mapping: floor(255 * ln(1+hits) / ln(1+max)),
/// all zero when max is 0.
std::vector<std::uint8_t> ppm_bytes(const Raster& raster, IntensityMap mapping);
void write_ppm(const Raster& raster, const std::filesystem::path& path,
               IntensityMap mapping);

}  // namespace revolve
