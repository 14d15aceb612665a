#include "revolve/series.hpp"

#include <cmath>
#include <stdexcept>

namespace revolve {

std::complex<double> eval_delta_word(const IFSSpec& spec, const DeltaWord& w) {
  if (w.size() < 2) {
    throw std::invalid_argument(
        "eval_delta_word: word too short (need length >= 2 for one term)");
  }
  if (!(w.group() == spec.group())) {
    throw std::invalid_argument(
        "eval_delta_word: word group does not match spec");
  }
  const RevolvingGroup& g = spec.group();
  const auto& constants = spec.constants();
  const std::int64_t L = g.order();
  std::complex<double> sum{0.0, 0.0};
  std::complex<double> alpha_pow{1.0, 0.0};
  for (std::size_t n = 0; n + 1 < w.size(); ++n) {
    std::int64_t diff = (w.at(n + 1).exponent - w.at(n).exponent) % L;
    if (diff < 0) diff += L;
    const auto j = g.step_index(diff);
    if (!j) {
      throw std::invalid_argument(
          "eval_delta_word: word violates the DRC at step " +
          std::to_string(n + 1));
    }
    sum += constants[*j] * alpha_pow * g.to_complex(w.at(n));
    alpha_pow *= spec.alpha();
  }
  return sum;
}

std::complex<double> eval_grs_word(std::complex<double> alpha, const GRWord& w) {
  std::complex<double> sum{0.0, 0.0};
  std::complex<double> alpha_pow = alpha;
  for (std::size_t n = 0; n < w.size(); ++n) {
    if (w.at(n)) sum += alpha_pow * w.value(n);
    alpha_pow *= alpha;
  }
  return sum;
}

std::complex<double> eval_dzrc_word(std::complex<double> alpha,
                                    const DeltaZeroWord& w) {
  const RevolvingGroup& g = w.group();
  std::complex<double> sum{0.0, 0.0};
  std::complex<double> alpha_pow = alpha;
  for (const auto& e : w.entries()) {
    if (e) sum += alpha_pow * g.to_complex({*e});
    alpha_pow *= alpha;
  }
  return sum;
}

PointCloud cloud_x_exhaustive(const IFSSpec& spec, int depth,
                              EnumerationCap cap) {
  if (depth < 1) throw std::invalid_argument("cloud depth must be >= 1");
  const RevolvingGroup& g = spec.group();
  std::vector<std::complex<double>> base;
  base.reserve(
      static_cast<std::size_t>(count_drc_words(g, depth + 1, true)));
  for_each_drc_word(g, depth + 1, GroupElement{0}, cap,
                    [&](const DeltaWord& w) {
                      base.push_back(eval_delta_word(spec, w));
                    });
  dedup_points(base);
  PointCloud cloud;
  cloud.depth = depth;
  cloud.mode = CloudMode::exhaustive;
  cloud.source = "X(depth=" + std::to_string(depth) + ")";
  cloud.points.reserve(base.size() * static_cast<std::size_t>(g.order()));
  for (std::int64_t k = 0; k < g.order(); ++k) {
    const std::complex<double> rotation = g.to_complex({k});
    for (const auto& z : base) cloud.points.push_back(rotation * z);
  }
  dedup_points(cloud.points);
  return cloud;
}

PointCloud cloud_x_sampled(const IFSSpec& spec, int depth,
                           std::int64_t n_points, std::uint64_t seed) {
  if (depth < 1) throw std::invalid_argument("cloud depth must be >= 1");
  if (n_points < 1) throw std::invalid_argument("need n_points >= 1");
  std::mt19937_64 rng(seed);
  PointCloud cloud;
  cloud.depth = depth;
  cloud.mode = CloudMode::sampled;
  cloud.source = "X(sampled n=" + std::to_string(n_points) + ")";
  cloud.points.reserve(static_cast<std::size_t>(n_points));
  for (std::int64_t i = 0; i < n_points; ++i) {
    cloud.points.push_back(
        eval_delta_word(spec, sample_drc(spec.group(), depth + 1, rng)));
  }
  return cloud;
}

PointCloud cloud_xstar_exhaustive(std::complex<double> alpha,
                                  const GeneratorSet& generators, int depth,
                                  EnumerationCap cap) {
  if (depth < 1) throw std::invalid_argument("cloud depth must be >= 1");
  if (!(std::abs(alpha) < 1.0)) {
    throw std::invalid_argument("|alpha| must be < 1");
  }
  const RevolvingGroup g = build_group(generators);
  PointCloud cloud;
  cloud.depth = depth;
  cloud.mode = CloudMode::exhaustive;
  cloud.source = "X*(depth=" + std::to_string(depth) + ")";
  cloud.points.reserve(static_cast<std::size_t>(count_dzrc_words(g, depth)));
  for_each_dzrc_word(g, depth, cap, [&](const DeltaZeroWord& w) {
    cloud.points.push_back(eval_dzrc_word(alpha, w));
  });
  dedup_points(cloud.points);
  return cloud;
}

PointCloud cloud_xstar_sampled(std::complex<double> alpha,
                               const GeneratorSet& generators, int depth,
                               std::int64_t n_points, std::uint64_t seed) {
  if (depth < 1) throw std::invalid_argument("cloud depth must be >= 1");
  if (n_points < 1) throw std::invalid_argument("need n_points >= 1");
  if (!(std::abs(alpha) < 1.0)) {
    throw std::invalid_argument("|alpha| must be < 1");
  }
  const RevolvingGroup g = build_group(generators);
  std::mt19937_64 rng(seed);
  PointCloud cloud;
  cloud.depth = depth;
  cloud.mode = CloudMode::sampled;
  cloud.source = "X*(sampled n=" + std::to_string(n_points) + ")";
  cloud.points.reserve(static_cast<std::size_t>(n_points));
  for (std::int64_t i = 0; i < n_points; ++i) {
    cloud.points.push_back(eval_dzrc_word(alpha, sample_dzrc(g, depth, rng)));
  }
  return cloud;
}

PointCloud cloud_grs_exhaustive(std::complex<double> alpha,
                                const RationalAngle& theta, int depth,
                                EnumerationCap cap) {
  if (depth < 1) throw std::invalid_argument("cloud depth must be >= 1");
  if (!(std::abs(alpha) < 1.0)) {
    throw std::invalid_argument("|alpha| must be < 1");
  }
  PointCloud cloud;
  cloud.depth = depth;
  cloud.mode = CloudMode::exhaustive;
  cloud.source = "Xgr(depth=" + std::to_string(depth) + ")";
  cloud.points.reserve(static_cast<std::size_t>(count_grc_words(theta, depth)));
  for_each_grc_word(theta, depth, cap, [&](const GRWord& w) {
    cloud.points.push_back(eval_grs_word(alpha, w));
  });
  dedup_points(cloud.points);
  return cloud;
}

PointCloud cloud_grs_sampled(std::complex<double> alpha,
                             const RationalAngle& theta, int depth,
                             std::int64_t n_points, std::uint64_t seed) {
  if (depth < 1) throw std::invalid_argument("cloud depth must be >= 1");
  if (n_points < 1) throw std::invalid_argument("need n_points >= 1");
  if (!(std::abs(alpha) < 1.0)) {
    throw std::invalid_argument("|alpha| must be < 1");
  }
  std::mt19937_64 rng(seed);
  PointCloud cloud;
  cloud.depth = depth;
  cloud.mode = CloudMode::sampled;
  cloud.source = "Xgr(sampled n=" + std::to_string(n_points) + ")";
  cloud.points.reserve(static_cast<std::size_t>(n_points));
  for (std::int64_t i = 0; i < n_points; ++i) {
    cloud.points.push_back(eval_grs_word(alpha, sample_grc(theta, depth, rng)));
  }
  return cloud;
}

SeriesSpec make_series_spec(
    SeriesKind kind, std::complex<double> alpha, GeneratorSet generators,
    std::optional<std::vector<std::complex<double>>> constants) {
  if (kind == SeriesKind::delta) {
    if (!constants) {
      throw std::invalid_argument("kind 'delta' requires explicit constants");
    }
    return {kind, IFSSpec(alpha, std::move(generators), std::move(*constants))};
  }
  if (constants) {
    throw std::invalid_argument(std::string("kind '") + series_kind_name(kind) +
                                "' determines its constants; do not supply any");
  }
  if (kind == SeriesKind::grs && generators.size() != 2) {
    throw std::invalid_argument(
        "kind 'grs' takes exactly one nonzero angle (got " +
        std::to_string(generators.size() - 1) + ")");
  }
  std::vector<std::complex<double>> implied(generators.size(), alpha);
  implied[0] = {0.0, 0.0};
  return {kind, IFSSpec(alpha, std::move(generators), std::move(implied))};
}

const char* series_kind_name(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::delta: return "delta";
    case SeriesKind::delta_zero: return "delta_zero";
    case SeriesKind::grs: return "grs";
  }
  return "?";
}

std::optional<SeriesKind> series_kind_from_name(const std::string& name) {
  if (name == "delta") return SeriesKind::delta;
  if (name == "delta_zero") return SeriesKind::delta_zero;
  if (name == "grs") return SeriesKind::grs;
  return std::nullopt;
}

PointCloud make_cloud_exhaustive(const SeriesSpec& spec, int depth,
                                 EnumerationCap cap) {
  switch (spec.kind) {
    case SeriesKind::delta:
      return cloud_x_exhaustive(spec.ifs, depth, cap);
    case SeriesKind::delta_zero:
      return cloud_xstar_exhaustive(spec.alpha(), spec.generators(), depth,
                                    cap);
    case SeriesKind::grs:
      return cloud_grs_exhaustive(spec.alpha(), spec.generators().angle(1),
                                  depth, cap);
  }
  throw std::logic_error("unreachable");
}

PointCloud make_cloud_sampled(const SeriesSpec& spec, int depth,
                              std::int64_t n_points, std::uint64_t seed) {
  switch (spec.kind) {
    case SeriesKind::delta:
      return cloud_x_sampled(spec.ifs, depth, n_points, seed);
    case SeriesKind::delta_zero:
      return cloud_xstar_sampled(spec.alpha(), spec.generators(), depth,
                                 n_points, seed);
    case SeriesKind::grs:
      return cloud_grs_sampled(spec.alpha(), spec.generators().angle(1), depth,
                               n_points, seed);
  }
  throw std::logic_error("unreachable");
}

double tail_bound(const IFSSpec& spec, int depth) {
  return spec.max_constant() * std::pow(spec.contraction(), depth) /
         (1.0 - spec.contraction());
}

}  // namespace revolve
