#pragma once

#include <complex>
#include <filesystem>
#include <string>
#include <vector>

#include "revolve/ifs.hpp"

namespace revolve {

/// One "re,im" pair per line, 17 significant digits (lossless round trip).
std::string cloud_to_csv(const PointCloud& cloud);
void write_cloud_csv(const PointCloud& cloud, const std::filesystem::path& path);

std::vector<std::complex<double>> cloud_from_csv(const std::string& text);
std::vector<std::complex<double>> read_cloud_csv(
    const std::filesystem::path& path);

}  // namespace revolve
