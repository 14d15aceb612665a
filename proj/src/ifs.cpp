#include "revolve/ifs.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace revolve {

IFSSpec::IFSSpec(std::complex<double> alpha, GeneratorSet generators,
                 std::vector<std::complex<double>> constants)
    : alpha_(alpha),
      group_(std::move(generators)),
      constants_(std::move(constants)) {
  if (!(std::abs(alpha_) < 1.0)) {
    throw std::invalid_argument("IFSSpec: |alpha| must be < 1");
  }
  if (constants_.size() != group_.arity()) {
    throw std::invalid_argument(
        "IFSSpec: need exactly one constant per generator angle (" +
        std::to_string(group_.arity()) + " angles, " +
        std::to_string(constants_.size()) + " constants)");
  }
}

std::vector<AffineMap> IFSSpec::maps() const {
  std::vector<AffineMap> out;
  out.reserve(constants_.size());
  for (std::size_t k = 0; k < constants_.size(); ++k) {
    out.push_back({alpha_ * generators().angle(k).unit(), constants_[k]});
  }
  return out;
}

double IFSSpec::contraction() const { return std::abs(alpha_); }

double IFSSpec::max_constant() const {
  double best = 0.0;
  for (const auto& c : constants_) best = std::max(best, std::abs(c));
  return best;
}

double IFSSpec::bounding_radius() const {
  return max_constant() / (1.0 - contraction());
}

std::vector<AffineMap> maps_from_spec(const IFSSpec& spec) {
  return spec.maps();
}

void canonicalize(std::vector<std::complex<double>>& points) {
  std::sort(points.begin(), points.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              if (a.real() != b.real()) return a.real() < b.real();
              return a.imag() < b.imag();
            });
}

void dedup_points(std::vector<std::complex<double>>& points, double tol) {
  canonicalize(points);
  std::size_t kept = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (kept > 0) {
      const auto& prev = points[kept - 1];
      if (std::abs(points[i].real() - prev.real()) <= tol &&
          std::abs(points[i].imag() - prev.imag()) <= tol) {
        continue;
      }
    }
    points[kept++] = points[i];
  }
  points.resize(kept);
}

int count_digit(const CodingWord& x, int k, std::size_t n) {
  if (n > x.size()) {
    throw std::invalid_argument("count_digit: prefix longer than the word");
  }
  int count = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (x.digit(j) == k) ++count;
  }
  return count;
}

std::complex<double> eval_coding(const IFSSpec& spec, const CodingWord& x) {
  if (x.arity() != spec.arity()) {
    throw std::invalid_argument("eval_coding: word arity does not match spec");
  }
  const RevolvingGroup& g = spec.group();
  const auto& constants = spec.constants();
  std::complex<double> sum{0.0, 0.0};
  std::complex<double> alpha_pow{1.0, 0.0};
  GroupElement rotation{0};
  for (std::size_t n = 0; n < x.size(); ++n) {
    const auto k = static_cast<std::size_t>(x.digit(n));
    sum += constants[k] * alpha_pow * g.to_complex(rotation);
    alpha_pow *= spec.alpha();
    rotation = g.apply(rotation, k);
  }
  return sum;
}

namespace {

// Depth-first over coding digits, sharing partial sums across prefixes.
// Emits the same floating-point value eval_coding would produce for each
// word.
void coding_walk(const IFSSpec& spec, int remaining, std::complex<double> sum,
                 std::complex<double> alpha_pow, GroupElement rotation,
                 std::vector<std::complex<double>>& out) {
  if (remaining == 0) {
    out.push_back(sum);
    return;
  }
  const RevolvingGroup& g = spec.group();
  const auto& constants = spec.constants();
  const std::complex<double> root = g.to_complex(rotation);
  for (std::size_t k = 0; k < constants.size(); ++k) {
    coding_walk(spec, remaining - 1, sum + constants[k] * alpha_pow * root,
                alpha_pow * spec.alpha(), g.apply(rotation, k), out);
  }
}

}  // namespace

PointCloud attractor_exhaustive(const IFSSpec& spec, int depth,
                                EnumerationCap cap) {
  if (depth < 0) throw std::invalid_argument("attractor depth must be >= 0");
  // m^depth coding words; reuse the DRC count (a depth-N coding word is a
  // length-(N+1) walk with fixed start).
  const std::int64_t count = count_drc_words(spec.group(), depth + 1, true);
  if (count > cap.max_words) throw cap_exceeded(count, cap.max_words);
  PointCloud cloud;
  cloud.depth = depth;
  cloud.mode = CloudMode::exhaustive;
  cloud.source = "T(depth=" + std::to_string(depth) + ")";
  cloud.points.reserve(static_cast<std::size_t>(count));
  coding_walk(spec, depth, {0.0, 0.0}, {1.0, 0.0}, GroupElement{0},
              cloud.points);
  dedup_points(cloud.points);
  return cloud;
}

PointCloud attractor_sampled(const IFSSpec& spec, std::int64_t n_points,
                             std::uint64_t seed) {
  if (n_points < 1) {
    throw std::invalid_argument("attractor_sampled: need n_points >= 1");
  }
  constexpr int kBurnIn = 20;
  const std::vector<AffineMap> maps = spec.maps();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, maps.size() - 1);
  PointCloud cloud;
  cloud.mode = CloudMode::sampled;
  cloud.source = "T(sampled n=" + std::to_string(n_points) + ")";
  cloud.points.reserve(static_cast<std::size_t>(n_points));
  std::complex<double> z{0.0, 0.0};
  for (int i = 0; i < kBurnIn; ++i) z = maps[pick(rng)](z);
  for (std::int64_t i = 0; i < n_points; ++i) {
    z = maps[pick(rng)](z);
    cloud.points.push_back(z);
  }
  return cloud;
}

}  // namespace revolve
