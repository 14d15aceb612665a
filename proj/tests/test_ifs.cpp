#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "revolve/cloud_io.hpp"
#include "revolve/ifs.hpp"
#include "revolve/verify.hpp"

using namespace revolve;
using C = std::complex<double>;

namespace {

GeneratorSet make_set(std::initializer_list<std::pair<int, int>> fractions) {
  std::vector<RationalAngle> angles;
  for (auto [q, p] : fractions) angles.emplace_back(q, p);
  return GeneratorSet(std::move(angles));
}

IFSSpec heighway() {
  return IFSSpec(C{0.5, 0.5}, make_set({{0, 1}, {1, 4}}), {C{0, 0}, C{1, 0}});
}

IFSSpec paperfold() {
  return IFSSpec(C{0.5, -0.5}, make_set({{0, 1}, {-1, 4}}),
                 {C{0, 0}, C{0.5, -0.5}});
}

IFSSpec fudgeflake() {
  const C alpha{0.5, -std::sqrt(3.0) / 6.0};
  return IFSSpec(alpha, make_set({{0, 1}, {1, 6}, {-1, 3}}),
                 {C{0, 0}, alpha, std::conj(alpha)});
}

CodingWord random_word(const IFSSpec& spec, int length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> digit(0,
                                           static_cast<int>(spec.arity()) - 1);
  std::vector<int> digits;
  digits.reserve(static_cast<std::size_t>(length));
  for (int n = 0; n < length; ++n) digits.push_back(digit(rng));
  return CodingWord(std::move(digits), spec.arity());
}

// Oracle: iterated map composition psi_{x_1} o ... o psi_{x_N} applied to 0.
C composed_eval(const IFSSpec& spec, const CodingWord& x) {
  const auto maps = spec.maps();
  C z{0.0, 0.0};
  for (std::size_t n = x.size(); n > 0; --n) {
    z = maps[static_cast<std::size_t>(x.digit(n - 1))](z);
  }
  return z;
}

// Oracle: the product form sum_n c_{x_n} prod_k alpha_k^{I_k(x, n-1)}.
C product_form_eval(const IFSSpec& spec, const CodingWord& x) {
  const auto maps = spec.maps();
  C sum{0.0, 0.0};
  for (std::size_t n = 1; n <= x.size(); ++n) {
    C term = spec.constants()[static_cast<std::size_t>(x.digit(n - 1))];
    for (std::size_t k = 0; k < spec.arity(); ++k) {
      const int reps = count_digit(x, static_cast<int>(k), n - 1);
      for (int r = 0; r < reps; ++r) term *= maps[k].ratio;
    }
    sum += term;
  }
  return sum;
}

double cloud_diameter(const std::vector<C>& pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      best = std::max(best, std::abs(pts[i] - pts[j]));
    }
  }
  return best;
}

}  // namespace

TEST_SUITE("ifs-spec") {
  TEST_CASE("validates alpha and constants") {
    CHECK_THROWS_AS(IFSSpec(C{1.0, 0.0}, make_set({{0, 1}, {1, 4}}),
                            {C{0, 0}, C{1, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(IFSSpec(C{0.5, 0.0}, make_set({{0, 1}, {1, 4}}), {C{0, 0}}),
                    std::invalid_argument);
  }

  TEST_CASE("heighway maps") {
    const auto maps = maps_from_spec(heighway());
    REQUIRE(maps.size() == 2);
    CHECK(std::abs(maps[0].ratio - C{0.5, 0.5}) < 1e-15);
    CHECK(std::abs(maps[0].offset) < 1e-15);
    CHECK(std::abs(maps[1].ratio - C{-0.5, 0.5}) < 1e-15);  // (i-1)/2
    CHECK(std::abs(maps[1].offset - C{1.0, 0.0}) < 1e-15);
  }

  TEST_CASE("paper-folding dragon maps") {
    const auto maps = maps_from_spec(paperfold());
    REQUIRE(maps.size() == 2);
    CHECK(std::abs(maps[0].ratio - C{0.5, -0.5}) < 1e-15);
    CHECK(std::abs(maps[0].offset) < 1e-15);
    CHECK(std::abs(maps[1].ratio - C{-0.5, -0.5}) < 1e-15);  // (-1-i)/2
    CHECK(std::abs(maps[1].offset - C{0.5, -0.5}) < 1e-15);
  }

  TEST_CASE("all ratios share the contraction modulus") {
    for (const auto& spec : {heighway(), paperfold(), fudgeflake()}) {
      for (const auto& map : spec.maps()) {
        CHECK(std::abs(map.ratio) ==
              doctest::Approx(spec.contraction()).epsilon(1e-14));
      }
    }
  }
}

TEST_SUITE("count-digit") {
  TEST_CASE("counts a digit in a prefix") {
    const CodingWord x({0, 1, 1, 0, 2}, 3);
    CHECK(count_digit(x, 1, 4) == 2);
    CHECK(count_digit(x, 1, 0) == 0);
    CHECK(count_digit(x, 2, 5) == 1);
    CHECK_THROWS_AS(count_digit(x, 0, 6), std::invalid_argument);
  }

  TEST_CASE("digit counts over a prefix sum to its length") {
    std::mt19937_64 rng(3);
    const IFSSpec spec = fudgeflake();
    for (int i = 0; i < 50; ++i) {
      const CodingWord x = random_word(spec, 12, rng);
      for (std::size_t n = 1; n <= x.size(); ++n) {
        int total = 0;
        for (int k = 0; k < 3; ++k) total += count_digit(x, k, n - 1);
        CHECK(total == static_cast<int>(n) - 1);
      }
    }
  }
}

TEST_SUITE("eval-coding") {
  TEST_CASE("all-zero codings with c_0 = 0 evaluate to 0") {
    const IFSSpec spec = heighway();
    CHECK(eval_coding(spec, CodingWord(std::vector<int>(8, 0), 2)) == C{0, 0});
  }

  TEST_CASE("repeating digit 1 approaches the fixed point of psi_1") {
    const IFSSpec spec = heighway();
    // Oracle: solve psi_1(z) = z, i.e. z = c_1 / (1 - alpha e^{i theta}).
    const C ratio = spec.maps()[1].ratio;
    const C fixed = C{1.0, 0.0} / (C{1.0, 0.0} - ratio);
    CHECK(std::abs(fixed - C{0.6, 0.2}) < 1e-15);
    const C value = eval_coding(spec, CodingWord(std::vector<int>(30, 1), 2));
    CHECK(std::abs(value - fixed) < 1e-4);
  }

  TEST_CASE("series, composed-map, and product forms agree") {
    std::mt19937_64 rng(9);
    for (const auto& spec : {heighway(), paperfold(), fudgeflake()}) {
      for (int i = 0; i < 40; ++i) {
        const CodingWord x = random_word(spec, 30, rng);
        const C series = eval_coding(spec, x);
        CHECK(std::abs(series - composed_eval(spec, x)) < 1e-12);
        CHECK(std::abs(series - product_form_eval(spec, x)) < 1e-10);
      }
    }
  }
}

TEST_SUITE("attractor") {
  TEST_CASE("depth 1 is the constant set") {
    const IFSSpec spec = heighway();
    const PointCloud cloud = attractor_exhaustive(spec, 1);
    REQUIRE(cloud.points.size() == 2);
    CHECK(std::abs(cloud.points[0] - C{0, 0}) < 1e-15);
    CHECK(std::abs(cloud.points[1] - C{1, 0}) < 1e-15);
  }

  TEST_CASE("heighway depth 12 stays inside the geometric-series disk") {
    const IFSSpec spec = heighway();
    const PointCloud cloud = attractor_exhaustive(spec, 12);
    CHECK(cloud.points.size() <= 4096);
    CHECK(cloud.points.size() > 1000);
    // max|c| / (1 - |alpha|) = 1 / (1 - sqrt(2)/2) = 2 + sqrt(2)
    const double radius = 2.0 + std::sqrt(2.0);
    CHECK(spec.bounding_radius() == doctest::Approx(radius).epsilon(1e-12));
    for (const auto& z : cloud.points) {
      CHECK(std::abs(z) <= radius + 1e-9);
    }
  }

  TEST_CASE("doubling the depth moves points at most the tail bound") {
    const IFSSpec spec = heighway();
    const PointCloud a = attractor_exhaustive(spec, 6);
    const PointCloud b = attractor_exhaustive(spec, 12);
    const double bound = spec.max_constant() *
                         std::pow(spec.contraction(), 6) /
                         (1.0 - spec.contraction());
    CHECK(hausdorff(a, b) <= bound);
  }

  TEST_CASE("depth N+1 equals the union of map images of depth N") {
    for (const auto& [spec, depth] :
         {std::pair{heighway(), 8}, {fudgeflake(), 5}}) {
      const PointCloud level = attractor_exhaustive(spec, depth);
      const PointCloud next = attractor_exhaustive(spec, depth + 1);
      std::vector<C> mapped;
      mapped.reserve(level.points.size() * spec.arity());
      for (const auto& map : spec.maps()) {
        for (const auto& z : level.points) mapped.push_back(map(z));
      }
      dedup_points(mapped);
      CHECK(hausdorff(PointSpan(next.points), PointSpan(mapped)) <= 1e-12);
    }
  }

  TEST_CASE("map images contract diameters by |alpha|") {
    const IFSSpec spec = heighway();
    const PointCloud cloud = attractor_exhaustive(spec, 7);
    const double diameter = cloud_diameter(cloud.points);
    for (const auto& map : spec.maps()) {
      std::vector<C> image;
      for (const auto& z : cloud.points) image.push_back(map(z));
      CHECK(cloud_diameter(image) ==
            doctest::Approx(spec.contraction() * diameter).epsilon(1e-12));
    }
  }

  TEST_CASE("enumeration cap refuses deep attractors") {
    CHECK_THROWS_AS(attractor_exhaustive(heighway(), 10, EnumerationCap{100}),
                    cap_exceeded);
  }
}

TEST_SUITE("chaos-game") {
  TEST_CASE("fixed seeds reproduce clouds") {
    const IFSSpec spec = heighway();
    const PointCloud a = attractor_sampled(spec, 2000, 42);
    const PointCloud b = attractor_sampled(spec, 2000, 42);
    CHECK(a.points == b.points);
    const PointCloud c = attractor_sampled(spec, 2000, 43);
    CHECK(a.points != c.points);
  }

  TEST_CASE("sampled points respect the bounding disk") {
    for (const auto& spec : {heighway(), paperfold(), fudgeflake()}) {
      const PointCloud cloud = attractor_sampled(spec, 5000, 7);
      for (const auto& z : cloud.points) {
        CHECK(std::abs(z) <= spec.bounding_radius() + 1e-9);
      }
    }
  }

  TEST_CASE("a single map collapses to its fixed point") {
    const IFSSpec spec(C{0.5, 0.0}, GeneratorSet({RationalAngle()}),
                       {C{1.0, 0.0}});
    const C fixed = C{1.0, 0.0} / (C{1.0, 0.0} - C{0.5, 0.0});
    const PointCloud cloud = attractor_sampled(spec, 100, 0);
    for (const auto& z : cloud.points) {
      CHECK(std::abs(z - fixed) < 1e-5);  // |alpha|^20 * radius < 1e-5
    }
  }
}

TEST_SUITE("point-dedup") {
  TEST_CASE("merges points within tolerance and sorts the rest") {
    std::vector<C> pts{{1.0, 0.0}, {0.0, 0.0}, {1.0 + 1e-14, 0.0}, {0.0, 2.0}};
    dedup_points(pts);
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == C{0.0, 0.0});
    CHECK(pts[1] == C{0.0, 2.0});
    CHECK(std::abs(pts[2] - C{1.0, 0.0}) < 1e-13);
  }
}

TEST_SUITE("cloud-csv") {
  TEST_CASE("17 significant digits round trip exactly") {
    PointCloud cloud;
    cloud.points = {C{1.0 / 3.0, -2.0 / 7.0}, C{0.0, 0.0},
                    C{-1.2345678901234567e-12, 9.87654321e+8},
                    C{0.1 + 0.2, -0.3}};
    const auto parsed = cloud_from_csv(cloud_to_csv(cloud));
    REQUIRE(parsed.size() == cloud.points.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
      CHECK(parsed[i].real() == cloud.points[i].real());
      CHECK(parsed[i].imag() == cloud.points[i].imag());
    }
  }

  TEST_CASE("malformed csv is rejected") {
    CHECK_THROWS_AS(cloud_from_csv("1.0;2.0\n"), std::runtime_error);
    CHECK_THROWS_AS(cloud_from_csv("1.0,2.0,3.0\n"), std::runtime_error);
    CHECK_THROWS_AS(cloud_from_csv("hello\n"), std::runtime_error);
  }
}
