#include <doctest.h>

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <set>

#include "revolve/config.hpp"
#include "revolve/presets.hpp"
#include "revolve/render.hpp"

using namespace revolve;
using C = std::complex<double>;

namespace {

PointCloud cloud_of(std::vector<C> pts) {
  PointCloud cloud;
  cloud.points = std::move(pts);
  return cloud;
}

}  // namespace

TEST_SUITE("rasterize") {
  TEST_CASE("a single point lands in a 1x1 raster") {
    RenderConfig cfg;
    cfg.width = cfg.height = 1;
    const Raster r = rasterize(cloud_of({C{0.25, -1.5}}), cfg);
    REQUIRE(r.hits.size() == 1);
    CHECK(r.hits[0] == 1);
    CHECK(r.total() == 1);
  }

  TEST_CASE("max-edge points clamp inward and totals are preserved") {
    RenderConfig cfg;
    cfg.width = cfg.height = 4;
    cfg.bounds = Bounds{0.0, 1.0, 0.0, 1.0};
    const Raster r = rasterize(
        cloud_of({C{1.0, 0.5}, C{0.5, 1.0}, C{1.0, 1.0}, C{0.0, 0.0}}), cfg);
    CHECK(r.total() == 4);
    // (1.0, 1.0) must land in the last column of the top row.
    CHECK(r.hits[0 * 4 + 3] == 1);
  }

  TEST_CASE("points outside explicit bounds are dropped") {
    RenderConfig cfg;
    cfg.width = cfg.height = 2;
    cfg.bounds = Bounds{0.0, 1.0, 0.0, 1.0};
    const Raster r =
        rasterize(cloud_of({C{2.0, 0.5}, C{0.5, -0.1}, C{0.5, 0.5}}), cfg);
    CHECK(r.total() == 1);
  }

  TEST_CASE("larger imaginary parts draw closer to the top row") {
    RenderConfig cfg;
    cfg.width = 1;
    cfg.height = 2;
    cfg.bounds = Bounds{0.0, 1.0, 0.0, 1.0};
    const Raster r = rasterize(cloud_of({C{0.5, 0.9}}), cfg);
    CHECK(r.hits[0] == 1);
    CHECK(r.hits[1] == 0);
  }

  TEST_CASE("rasterization is additive over partitions") {
    std::vector<C> pts;
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 500; ++i) pts.emplace_back(u(rng), u(rng));

    RenderConfig cfg;
    cfg.width = cfg.height = 16;
    cfg.bounds = Bounds{-1.0, 1.0, -1.0, 1.0};
    const Raster whole = rasterize(cloud_of(pts), cfg);

    const std::vector<C> first(pts.begin(), pts.begin() + 123);
    const std::vector<C> rest(pts.begin() + 123, pts.end());
    const Raster a = rasterize(cloud_of(first), cfg);
    const Raster b = rasterize(cloud_of(rest), cfg);
    for (std::size_t i = 0; i < whole.hits.size(); ++i) {
      CHECK(whole.hits[i] == a.hits[i] + b.hits[i]);
    }
  }

  TEST_CASE("auto bounds pad the bounding box by 5% per side") {
    const Bounds b = auto_bounds(cloud_of({C{0.0, -1.0}, C{2.0, 3.0}}));
    CHECK(b.re_min == doctest::Approx(-0.1));
    CHECK(b.re_max == doctest::Approx(2.1));
    CHECK(b.im_min == doctest::Approx(-1.2));
    CHECK(b.im_max == doctest::Approx(3.2));
    CHECK_THROWS_AS(auto_bounds(cloud_of({})), std::invalid_argument);
  }
}

TEST_SUITE("ppm") {
  TEST_CASE("header and endpoint bytes") {
    Raster r{2, 1, {0, 9}};
    const auto bytes = ppm_bytes(r, IntensityMap::log);
    const std::string header = "P5\n2 1\n255\n";
    REQUIRE(bytes.size() == header.size() + 2);
    CHECK(std::string(bytes.begin(), bytes.begin() + header.size()) == header);
    CHECK(bytes[header.size()] == 0);
    CHECK(bytes[header.size() + 1] == 255);
  }

  TEST_CASE("all-zero rasters map to all-zero bytes") {
    Raster r{3, 2, std::vector<std::uint32_t>(6, 0)};
    const auto bytes = ppm_bytes(r, IntensityMap::log);
    for (std::size_t i = std::string("P5\n3 2\n255\n").size(); i < bytes.size();
         ++i) {
      CHECK(bytes[i] == 0);
    }
  }

  TEST_CASE("log mapping uses floor(255 ln(1+h) / ln(1+max))") {
    Raster r{4, 1, {0, 1, 4, 9}};
    const auto bytes = ppm_bytes(r, IntensityMap::log);
    const std::size_t offset = std::string("P5\n4 1\n255\n").size();
    for (std::size_t i = 0; i < 4; ++i) {
      const double expected =
          std::floor(255.0 * std::log1p(double(r.hits[i])) / std::log1p(9.0));
      CHECK(bytes[offset + i] == static_cast<std::uint8_t>(expected));
    }
  }

  TEST_CASE("linear mapping scales by the maximum") {
    Raster r{3, 1, {0, 5, 10}};
    const auto bytes = ppm_bytes(r, IntensityMap::linear);
    const std::size_t offset = std::string("P5\n3 1\n255\n").size();
    CHECK(bytes[offset + 0] == 0);
    CHECK(bytes[offset + 1] == 127);
    CHECK(bytes[offset + 2] == 255);
  }

  TEST_CASE("writing twice produces identical files") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto path_a = dir / "revolve_test_a.ppm";
    const auto path_b = dir / "revolve_test_b.ppm";
    Raster r{2, 2, {0, 3, 7, 1}};
    write_ppm(r, path_a, IntensityMap::log);
    write_ppm(r, path_b, IntensityMap::log);
    std::ifstream a(path_a, std::ios::binary);
    std::ifstream b(path_b, std::ios::binary);
    const std::string bytes_a((std::istreambuf_iterator<char>(a)),
                              std::istreambuf_iterator<char>());
    const std::string bytes_b((std::istreambuf_iterator<char>(b)),
                              std::istreambuf_iterator<char>());
    CHECK(bytes_a == bytes_b);
    CHECK(!bytes_a.empty());
    std::filesystem::remove(path_a);
    std::filesystem::remove(path_b);
  }
}

TEST_SUITE("config") {
  TEST_CASE("every preset round trips through the config format") {
    for (const auto& preset : preset_registry()) {
      if (preset.rejected()) continue;
      const SeriesSpec& spec = *preset.spec;
      const SeriesSpec loaded = config_from_string(config_to_string(spec));
      CHECK(loaded.kind == spec.kind);
      CHECK(loaded.alpha() == spec.alpha());
      CHECK(loaded.generators() == spec.generators());
      CHECK(loaded.ifs.constants() == spec.ifs.constants());
    }
  }

  TEST_CASE("save/load through a file") {
    const auto path =
        std::filesystem::temp_directory_path() / "revolve_test_cfg.json";
    const SeriesSpec& spec = *find_preset("fudgeflake")->spec;
    save_config(spec, path);
    const SeriesSpec loaded = load_config(path);
    CHECK(loaded.alpha() == spec.alpha());
    CHECK(loaded.generators() == spec.generators());
    std::filesystem::remove(path);
  }

  TEST_CASE("malformed configs fail with distinct messages") {
    const auto expect_error = [](const std::string& text,
                                 const std::string& needle) {
      try {
        config_from_string(text);
        FAIL_CHECK("expected config_error for: " << text);
      } catch (const config_error& e) {
        CHECK(std::string(e.what()).find(needle) != std::string::npos);
      }
    };
    expect_error("not json", "not valid JSON");
    expect_error(R"({"angles": [{"q":0,"p":1}]})", "missing 'alpha'");
    expect_error(R"({"alpha": 0.5, "angles": [{"q":0,"p":1}]})", "[re, im]");
    expect_error(R"({"alpha": [1.0, 0.0], "angles": [{"q":0,"p":1},{"q":1,"p":4}],
                     "constants": [[0,0],[1,0]]})",
                 "|alpha|");
    expect_error(R"({"alpha": [0.5, 0.0]})", "'angles'");
    expect_error(R"({"alpha": [0.5, 0.0], "angles": [{"q":1,"p":4}]})",
                 "first angle");
    expect_error(R"({"alpha": [0.5, 0.0], "angles": [{"q":0,"p":1},{"q":1,"p":4}],
                     "kind": "grs", "constants": [[0,0],[1,0]]})",
                 "only valid for kind 'delta'");
    expect_error(R"({"alpha": [0.5, 0.0], "angles": [{"q":0,"p":1},{"q":1,"p":4}],
                     "constants": [[0,0]]})",
                 "one constant per generator angle");
    expect_error(R"({"alpha": [0.5, 0.0], "angles": [{"q":0,"p":1},{"q":1,"p":4}],
                     "kind": "spiral"})",
                 "unknown kind");
    expect_error(R"({"alpha": [0.5, 0.0], "angles": [{"q":0,"p":0}],
                     "constants": [[0,0]]})",
                 "bad angle");
  }
}

TEST_SUITE("presets") {
  TEST_CASE("the registry carries the classical names") {
    for (const char* name : {"heighway", "twindragon", "fudgeflake", "levy",
                             "paperfold", "tetradragon"}) {
      const Preset* p = find_preset(name);
      REQUIRE(p != nullptr);
      CHECK_FALSE(p->rejected());
      CHECK(p->recommended_depth > 0);
      CHECK_FALSE(p->note.empty());
    }
    CHECK(find_preset("nonesuch") == nullptr);
  }

  TEST_CASE("terdragon is present but rejected with its reason") {
    const Preset* p = find_preset("terdragon");
    REQUIRE(p != nullptr);
    CHECK(p->rejected());
    CHECK(p->rejection_reason.find("zero angle") != std::string::npos);
  }

  TEST_CASE("names are unique") {
    std::set<std::string> names;
    for (const auto& p : preset_registry()) {
      CHECK(names.insert(p.name).second);
    }
  }
}
