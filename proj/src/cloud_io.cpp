#include "revolve/cloud_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace revolve {

std::string cloud_to_csv(const PointCloud& cloud) {
  std::string out;
  out.reserve(cloud.points.size() * 48);
  char line[96];
  for (const auto& z : cloud.points) {
    std::snprintf(line, sizeof(line), "%.17g,%.17g\n", z.real(), z.imag());
    out += line;
  }
  return out;
}

void write_cloud_csv(const PointCloud& cloud,
                     const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("write_cloud_csv: cannot open '" + path.string() +
                             "'");
  }
  out << cloud_to_csv(cloud);
  if (!out) {
    throw std::runtime_error("write_cloud_csv: write failed for '" +
                             path.string() + "'");
  }
}

std::vector<std::complex<double>> cloud_from_csv(const std::string& text) {
  std::vector<std::complex<double>> points;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    double re = 0.0, im = 0.0;
    char trailing = 0;
    if (std::sscanf(line.c_str(), "%lf,%lf%c", &re, &im, &trailing) != 2) {
      throw std::runtime_error("cloud_from_csv: malformed line " +
                               std::to_string(line_no) + ": '" + line + "'");
    }
    points.emplace_back(re, im);
  }
  return points;
}

std::vector<std::complex<double>> read_cloud_csv(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("read_cloud_csv: cannot open '" + path.string() +
                             "'");
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return cloud_from_csv(text);
}

}  // namespace revolve
