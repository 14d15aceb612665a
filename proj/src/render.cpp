#include "revolve/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace revolve {

std::uint64_t Raster::total() const {
  std::uint64_t sum = 0;
  for (std::uint32_t h : hits) sum += h;
  return sum;
}

Bounds auto_bounds(const PointCloud& cloud) {
  if (cloud.points.empty()) {
    throw std::invalid_argument("auto_bounds: empty point cloud");
  }
  Bounds b{cloud.points[0].real(), cloud.points[0].real(),
           cloud.points[0].imag(), cloud.points[0].imag()};
  for (const auto& z : cloud.points) {
    b.re_min = std::min(b.re_min, z.real());
    b.re_max = std::max(b.re_max, z.real());
    b.im_min = std::min(b.im_min, z.imag());
    b.im_max = std::max(b.im_max, z.imag());
  }
  const double re_pad = b.re_max > b.re_min ? 0.05 * (b.re_max - b.re_min) : 0.5;
  const double im_pad = b.im_max > b.im_min ? 0.05 * (b.im_max - b.im_min) : 0.5;
  b.re_min -= re_pad;
  b.re_max += re_pad;
  b.im_min -= im_pad;
  b.im_max += im_pad;
  return b;
}

Raster rasterize(const PointCloud& cloud, const RenderConfig& cfg) {
  if (cfg.width < 1 || cfg.height < 1) {
    throw std::invalid_argument("rasterize: raster dimensions must be >= 1");
  }
  const Bounds b = cfg.bounds ? *cfg.bounds : auto_bounds(cloud);
  if (!(b.re_min < b.re_max) || !(b.im_min < b.im_max)) {
    throw std::invalid_argument("rasterize: bounds must be well-ordered");
  }
  Raster raster{cfg.width, cfg.height,
                std::vector<std::uint32_t>(
                    static_cast<std::size_t>(cfg.width) *
                        static_cast<std::size_t>(cfg.height),
                    0)};
  const double re_span = b.re_max - b.re_min;
  const double im_span = b.im_max - b.im_min;
  for (const auto& z : cloud.points) {
    if (z.real() < b.re_min || z.real() > b.re_max || z.imag() < b.im_min ||
        z.imag() > b.im_max) {
      continue;
    }
    auto ix = static_cast<std::int64_t>(
        std::floor((z.real() - b.re_min) / re_span * cfg.width));
    auto iy = static_cast<std::int64_t>(
        std::floor((z.imag() - b.im_min) / im_span * cfg.height));
    ix = std::min<std::int64_t>(ix, cfg.width - 1);   // max-edge clamp
    iy = std::min<std::int64_t>(iy, cfg.height - 1);
    const std::int64_t row = cfg.height - 1 - iy;  // +im at the top
    ++raster.hits[static_cast<std::size_t>(row * cfg.width + ix)];
  }
  return raster;
}

std::vector<std::uint8_t> ppm_bytes(const Raster& raster,
                                    IntensityMap mapping) {
  std::string header = "P5\n" + std::to_string(raster.width) + " " +
                       std::to_string(raster.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(header.size() + raster.hits.size());
  const std::uint32_t max_hits =
      raster.hits.empty()
          ? 0
          : *std::max_element(raster.hits.begin(), raster.hits.end());
  const double log_denom = max_hits > 0 ? std::log1p(double(max_hits)) : 1.0;
  for (std::uint32_t h : raster.hits) {
    double v = 0.0;
    if (max_hits > 0) {
      v = mapping == IntensityMap::log
              ? 255.0 * std::log1p(double(h)) / log_denom
              : 255.0 * double(h) / double(max_hits);
    }
    out.push_back(static_cast<std::uint8_t>(
        std::min(255.0, std::floor(v))));
  }
  return out;
}

void write_ppm(const Raster& raster, const std::filesystem::path& path,
               IntensityMap mapping) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("write_ppm: cannot open '" + path.string() + "'");
  }
  const auto bytes = ppm_bytes(raster, mapping);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) {
    throw std::runtime_error("write_ppm: write failed for '" + path.string() +
                             "'");
  }
}

}  // namespace revolve
