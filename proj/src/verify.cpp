#include "revolve/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace revolve {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_complex(std::complex<double> z) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "%g%+gi", z.real(), z.imag());
  return buf;
}

// Directed distance sup_{a in A} min_{b in B} |a - b|, brute force with the
// standard early abort: once a's running minimum drops to the current
// supremum, a cannot raise it.
double directed_brute(PointSpan a, PointSpan b) {
  double sup = 0.0;
  for (const auto& pa : a) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& pb : b) {
      best = std::min(best, std::abs(pa - pb));
      if (best <= sup) break;
    }
    sup = std::max(sup, best);
  }
  return sup;
}

// Uniform-grid index over a point set for nearest-neighbor ring searches.
// Flat CSR layout: cell start offsets plus point indices sorted by cell,
// so memory stays at a few words per point even for multi-million clouds.
class PointGrid {
 public:
  explicit PointGrid(PointSpan pts) : pts_(pts) {
    double xmax = -std::numeric_limits<double>::infinity();
    double ymax = xmax;
    x0_ = std::numeric_limits<double>::infinity();
    y0_ = x0_;
    for (const auto& p : pts_) {
      x0_ = std::min(x0_, p.real());
      y0_ = std::min(y0_, p.imag());
      xmax = std::max(xmax, p.real());
      ymax = std::max(ymax, p.imag());
    }
    const double sx = xmax - x0_;
    const double sy = ymax - y0_;
    const double span = std::max(sx, sy);
    cell_ = span > 0.0 ? span / std::sqrt(static_cast<double>(pts_.size()))
                       : 1.0;
    const auto table_size = [&] {
      nx_ = static_cast<std::int64_t>(sx / cell_) + 1;
      ny_ = static_cast<std::int64_t>(sy / cell_) + 1;
      return nx_ * ny_;
    };
    while (table_size() > static_cast<std::int64_t>(pts_.size()) * 2 + 64) {
      cell_ *= 2.0;
    }
    starts_.assign(static_cast<std::size_t>(nx_ * ny_) + 1, 0);
    for (const auto& p : pts_) {
      ++starts_[static_cast<std::size_t>(key(cell_x(p.real()),
                                             cell_y(p.imag()))) + 1];
    }
    for (std::size_t i = 1; i < starts_.size(); ++i) starts_[i] += starts_[i - 1];
    order_.resize(pts_.size());
    std::vector<std::uint32_t> cursor(starts_.begin(), starts_.end() - 1);
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      const auto k = static_cast<std::size_t>(
          key(cell_x(pts_[i].real()), cell_y(pts_[i].imag())));
      order_[cursor[k]++] = static_cast<std::uint32_t>(i);
    }
  }

  // Minimum distance from z to the set; may return early with any value
  // <= prune (callers only use values above prune).
  double min_dist(std::complex<double> z, double prune) const {
    const std::int64_t cx = cell_x(z.real());
    const std::int64_t cy = cell_y(z.imag());
    const std::int64_t rmax =
        std::max({cx, nx_ - 1 - cx, cy, ny_ - 1 - cy, std::int64_t{0}}) + 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::int64_t r = 0; r <= rmax; ++r) {
      if (best <= prune) return best;
      if (r > 0 && static_cast<double>(r - 1) * cell_ > best) break;
      scan_ring(z, cx, cy, r, best);
    }
    return best;
  }

 private:
  std::int64_t cell_x(double x) const {
    return static_cast<std::int64_t>(std::floor((x - x0_) / cell_));
  }
  std::int64_t cell_y(double y) const {
    return static_cast<std::int64_t>(std::floor((y - y0_) / cell_));
  }
  std::int64_t key(std::int64_t ix, std::int64_t iy) const {
    return ix * ny_ + iy;
  }

  void scan_cell(std::complex<double> z, std::int64_t ix, std::int64_t iy,
                 double& best) const {
    if (ix < 0 || ix >= nx_ || iy < 0 || iy >= ny_) return;
    const auto k = static_cast<std::size_t>(key(ix, iy));
    for (std::uint32_t i = starts_[k]; i < starts_[k + 1]; ++i) {
      best = std::min(best, std::abs(z - pts_[order_[i]]));
    }
  }

  void scan_ring(std::complex<double> z, std::int64_t cx, std::int64_t cy,
                 std::int64_t r, double& best) const {
    if (r == 0) {
      scan_cell(z, cx, cy, best);
      return;
    }
    for (std::int64_t ix = cx - r; ix <= cx + r; ++ix) {
      scan_cell(z, ix, cy - r, best);
      scan_cell(z, ix, cy + r, best);
    }
    for (std::int64_t iy = cy - r + 1; iy <= cy + r - 1; ++iy) {
      scan_cell(z, cx - r, iy, best);
      scan_cell(z, cx + r, iy, best);
    }
  }

  PointSpan pts_;
  double x0_ = 0.0, y0_ = 0.0, cell_ = 1.0;
  std::int64_t nx_ = 1, ny_ = 1;
  std::vector<std::uint32_t> starts_;
  std::vector<std::uint32_t> order_;
};

double directed_grid(PointSpan a, const PointGrid& grid_b) {
  double sup = 0.0;
  for (const auto& pa : a) {
    const double d = grid_b.min_dist(pa, sup);
    sup = std::max(sup, d);
  }
  return sup;
}

void require_nonempty(PointSpan a, PointSpan b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("hausdorff: point sets must be nonempty");
  }
}

std::vector<std::complex<double>> rotated_union(const RevolvingGroup& g,
                                                PointSpan pts) {
  std::vector<std::complex<double>> out;
  out.reserve(pts.size() * static_cast<std::size_t>(g.order()));
  for (std::int64_t k = 0; k < g.order(); ++k) {
    const std::complex<double> rotation = g.to_complex({k});
    for (const auto& z : pts) out.push_back(rotation * z);
  }
  dedup_points(out);
  return out;
}

std::string describe_spec(const IFSSpec& spec) {
  std::string out = "alpha=" + format_complex(spec.alpha()) + " S={" +
                    spec.generators().str() + "} c=[";
  for (std::size_t k = 0; k < spec.constants().size(); ++k) {
    if (k > 0) out += ',';
    out += format_complex(spec.constants()[k]);
  }
  out += ']';
  return out;
}

}  // namespace

std::string VerificationReport::line() const {
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s %s %.6g %.6g %d %.3f", claim_id.c_str(),
                pass ? "PASS" : "FAIL", discrepancy, tolerance, depth, seconds);
  return buf;
}

std::string summary_line(std::span<const VerificationReport> reports) {
  std::size_t passed = 0;
  for (const auto& r : reports) passed += r.pass ? 1 : 0;
  return "summary: " + std::to_string(passed) + " passed, " +
         std::to_string(reports.size() - passed) + " failed";
}

double hausdorff_brute(PointSpan a, PointSpan b) {
  require_nonempty(a, b);
  return std::max(directed_brute(a, b), directed_brute(b, a));
}

double hausdorff_grid(PointSpan a, PointSpan b) {
  require_nonempty(a, b);
  const PointGrid grid_a(a);
  const PointGrid grid_b(b);
  return std::max(directed_grid(a, grid_b), directed_grid(b, grid_a));
}

double hausdorff(PointSpan a, PointSpan b) {
  require_nonempty(a, b);
  constexpr std::size_t kBruteLimit = 10'000;
  if (a.size() <= kBruteLimit && b.size() <= kBruteLimit) {
    return hausdorff_brute(a, b);
  }
  return hausdorff_grid(a, b);
}

double hausdorff(const PointCloud& a, const PointCloud& b) {
  return hausdorff(PointSpan(a.points), PointSpan(b.points));
}

SetMatch set_match(PointSpan a, PointSpan b, double eps) {
  const double d = hausdorff(a, b);
  return {d <= eps, d};
}

std::size_t closure_size(PointSpan generators, std::size_t max_size) {
  if (generators.empty()) {
    throw std::invalid_argument("closure_size: no generators");
  }
  constexpr double kTol = 1e-9;
  constexpr std::int64_t kBuckets = std::int64_t{1} << 26;
  std::unordered_map<std::int64_t, std::vector<std::complex<double>>> seen;

  const auto bucket_of = [&](std::complex<double> z) {
    const double t = std::atan2(z.imag(), z.real());
    auto k = static_cast<std::int64_t>(
        std::floor((t + std::numbers::pi) / (2.0 * std::numbers::pi) *
                   static_cast<double>(kBuckets)));
    return ((k % kBuckets) + kBuckets) % kBuckets;
  };
  const auto contains = [&](std::complex<double> z) {
    const std::int64_t b = bucket_of(z);
    for (std::int64_t d = -1; d <= 1; ++d) {
      const auto it = seen.find(((b + d) % kBuckets + kBuckets) % kBuckets);
      if (it == seen.end()) continue;
      for (const auto& w : it->second) {
        if (std::abs(z - w) <= kTol) return true;
      }
    }
    return false;
  };

  std::vector<std::complex<double>> frontier{{1.0, 0.0}};
  seen[bucket_of(frontier[0])].push_back(frontier[0]);
  std::size_t size = 1;
  while (!frontier.empty()) {
    std::vector<std::complex<double>> next;
    for (const auto& z : frontier) {
      for (const auto& g : generators) {
        const std::complex<double> w = z * g;
        if (contains(w)) continue;
        seen[bucket_of(w)].push_back(w);
        next.push_back(w);
        if (++size > max_size) {
          throw std::runtime_error("closure_size: closure exceeds " +
                                   std::to_string(max_size) + " elements");
        }
      }
    }
    frontier = std::move(next);
  }
  return size;
}

VerificationReport check_main_theorem(const IFSSpec& spec, int depth,
                                      double eps, EnumerationCap cap) {
  const auto start = Clock::now();
  const PointCloud left = cloud_x_exhaustive(spec, depth, cap);
  const PointCloud t_cloud = attractor_exhaustive(spec, depth, cap);
  const auto right = rotated_union(spec.group(), PointSpan(t_cloud.points));
  const double d = hausdorff(PointSpan(left.points), PointSpan(right));
  return {"main_theorem", describe_spec(spec), depth, eps,
          d,              d <= eps,            seconds_since(start)};
}

VerificationReport check_corollary(std::complex<double> alpha,
                                   const GeneratorSet& generators, int depth,
                                   double eps, EnumerationCap cap) {
  const auto start = Clock::now();
  const PointCloud left = cloud_xstar_exhaustive(alpha, generators, depth, cap);
  std::vector<std::complex<double>> implied(generators.size(), alpha);
  implied[0] = {0.0, 0.0};
  const IFSSpec tstar(alpha, generators, std::move(implied));
  const PointCloud t_cloud = attractor_exhaustive(tstar, depth, cap);
  const auto right = rotated_union(tstar.group(), PointSpan(t_cloud.points));
  const double d = hausdorff(PointSpan(left.points), PointSpan(right));
  return {"corollary", describe_spec(tstar), depth, eps,
          d,           d <= eps,             seconds_since(start)};
}

VerificationReport check_kawamura_allen(std::complex<double> alpha,
                                        const RationalAngle& theta, int depth,
                                        double eps, EnumerationCap cap) {
  const auto start = Clock::now();
  const PointCloud left = cloud_grs_exhaustive(alpha, theta, depth, cap);
  const GeneratorSet pair({RationalAngle(), theta});
  const IFSSpec m_spec(alpha, pair, {{0.0, 0.0}, alpha});
  const PointCloud m_cloud = attractor_exhaustive(m_spec, depth, cap);
  const auto right = rotated_union(m_spec.group(), PointSpan(m_cloud.points));
  const double d = hausdorff(PointSpan(left.points), PointSpan(right));
  return {"kawamura_allen",
          "alpha=" + format_complex(alpha) + " theta=" + theta.str(),
          depth,
          eps,
          d,
          d <= eps,
          seconds_since(start)};
}

VerificationReport check_group_order(const GeneratorSet& generators) {
  const auto start = Clock::now();
  const RevolvingGroup group = build_group(generators);
  std::vector<std::complex<double>> gens;
  gens.reserve(generators.size());
  for (const auto& theta : generators.angles()) gens.push_back(theta.unit());
  const std::size_t brute = closure_size(gens);
  const auto formula = static_cast<std::size_t>(group.order());
  const double d = std::abs(static_cast<double>(brute) -
                            static_cast<double>(formula));
  return {"group_order",
          "S={" + generators.str() + "} closure=" + std::to_string(brute) +
              " lcm=" + std::to_string(formula),
          0,
          0.0,
          d,
          d == 0.0,
          seconds_since(start)};
}

}  // namespace revolve
