// Acceptance suite: one pass/fail line per criterion.  Exit code 0 iff all
// criteria pass.  --cli <path> points at the command-line binary (criterion
// 8 exercises it end to end).

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "revolve/cloud_io.hpp"
#include "revolve/presets.hpp"
#include "revolve/verify.hpp"

using namespace revolve;
using C = std::complex<double>;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

GeneratorSet make_set(std::initializer_list<std::pair<int, int>> fractions) {
  std::vector<RationalAngle> angles;
  for (auto [q, p] : fractions) angles.emplace_back(q, p);
  return GeneratorSet(std::move(angles));
}

std::string cli_path;  // set from --cli

// ---------------------------------------------------------------------------
// 1. Group order: the showcase six-element group, then 200 random generator
//    sets with denominators <= 24, brute-force closure vs the lcm formula.
Outcome criterion_group_order() {
  Outcome out;

  const GeneratorSet showcase = make_set({{0, 1}, {1, 2}, {1, 3}});
  const RevolvingGroup group = build_group(showcase);
  out.require(group.order() == 6, "|Delta| != 6 for {0, pi, 2pi/3}");
  // The six listed elements, as plain complex values.
  const double pi = 3.14159265358979323846;
  std::vector<C> listed;
  for (double t : {0.0, pi, 2 * pi / 3, 4 * pi / 3, pi + 2 * pi / 3,
                   pi + 4 * pi / 3}) {
    listed.push_back(std::exp(C(0.0, t)));
  }
  for (const auto& want : listed) {
    bool found = false;
    for (const auto& e : group.elements()) {
      found = found || std::abs(group.to_complex(e) - want) < 1e-12;
    }
    out.require(found, "a listed element is missing from the group");
  }
  out.require(check_group_order(showcase).pass, "showcase closure mismatch");

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> den(1, 24);
  std::uniform_int_distribution<int> num(-24, 24);
  std::uniform_int_distribution<int> arity(2, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RationalAngle> angles{RationalAngle()};
    const int m = arity(rng);
    while (static_cast<int>(angles.size()) < m) {
      const RationalAngle candidate(num(rng), den(rng));
      bool duplicate = false;
      for (const auto& a : angles) duplicate = duplicate || a == candidate;
      if (!duplicate) angles.push_back(candidate);
    }
    const VerificationReport report = check_group_order(GeneratorSet(angles));
    out.require(report.pass, "closure != lcm for " + report.parameters);
    if (!out.pass) break;
  }
  out.detail = out.pass ? "6 showcase elements + 200 random sets" : out.detail;
  return out;
}

// ---------------------------------------------------------------------------
// 2. Coding <-> Delta bijection at depth 8 for every preset spec with
//    m <= 3: identical value sets, pointwise deviation <= 1e-12.
Outcome criterion_bijection() {
  Outcome out;
  const int depth = 8;
  int specs = 0;
  for (const auto& preset : preset_registry()) {
    if (preset.rejected() || preset.spec->ifs.arity() > 3) continue;
    ++specs;
    const IFSSpec& spec = preset.spec->ifs;

    double max_dev = 0.0;
    std::vector<C> coding_values;
    std::vector<int> digits(depth, 0);
    const auto m = static_cast<int>(spec.arity());
    while (true) {
      const CodingWord x(digits, spec.arity());
      const C via_coding = eval_coding(spec, x);
      const C via_word = eval_delta_word(spec, coding_to_delta(x, spec.group()));
      max_dev = std::max(max_dev, std::abs(via_coding - via_word));
      coding_values.push_back(via_coding);
      int pos = depth - 1;
      while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == m) {
        digits[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    out.require(max_dev <= 1e-12,
                preset.name + ": pointwise deviation " + std::to_string(max_dev));

    std::vector<C> word_values;
    word_values.reserve(coding_values.size());
    for_each_drc_word(spec.group(), depth + 1, GroupElement{0}, {},
                      [&](const DeltaWord& w) {
                        word_values.push_back(eval_delta_word(spec, w));
                      });
    canonicalize(coding_values);
    canonicalize(word_values);
    out.require(coding_values.size() == word_values.size(),
                preset.name + ": enumeration sizes differ");
    for (std::size_t i = 0; out.pass && i < coding_values.size(); ++i) {
      out.require(std::abs(coding_values[i] - word_values[i]) <= 1e-12,
                  preset.name + ": sorted sets deviate");
    }
  }
  if (out.pass) {
    out.detail = std::to_string(specs) + " preset specs at depth 8";
  }
  return out;
}

// ---------------------------------------------------------------------------
// 3. Main decomposition: named presets plus 20 random specs.
Outcome criterion_main_theorem() {
  Outcome out;
  const double eps = 1e-10;

  const auto check_preset = [&](const char* name, int depth) {
    const VerificationReport report =
        check_main_theorem(find_preset(name)->spec->ifs, depth, eps);
    out.require(report.pass, std::string(name) + ": " + report.line());
  };
  check_preset("fudgeflake", 7);
  check_preset("heighway", 10);
  check_preset("twindragon", 10);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> den(1, 8);
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> arity(2, 3);
  std::uniform_real_distribution<double> modulus(0.3, 0.8);
  std::uniform_real_distribution<double> phase(0.0, 6.28318530717958648);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RationalAngle> angles{RationalAngle()};
    const int m = arity(rng);
    while (static_cast<int>(angles.size()) < m) {
      const RationalAngle candidate(num(rng), den(rng));
      bool duplicate = false;
      for (const auto& a : angles) duplicate = duplicate || a == candidate;
      if (!duplicate) angles.push_back(candidate);
    }
    const C alpha = std::polar(modulus(rng), phase(rng));
    std::vector<C> constants;
    for (int k = 0; k < m; ++k) constants.emplace_back(coeff(rng), coeff(rng));
    const IFSSpec spec(alpha, GeneratorSet(angles), constants);
    const int depth = m == 2 ? 9 : 6;
    const VerificationReport report = check_main_theorem(spec, depth, eps);
    out.require(report.pass, "random spec failed: " + report.line());
    if (!out.pass) break;
  }
  if (out.pass) out.detail = "3 presets + 20 random specs at eps=1e-10";
  return out;
}

// ---------------------------------------------------------------------------
// 4. Corollary for the three documented generator sets at N = 6..8.
Outcome criterion_corollary() {
  Outcome out;
  const double eps = 1e-10;
  const struct {
    GeneratorSet s;
    C alpha;
    int depth;
  } cases[] = {
      {make_set({{0, 1}, {1, 2}}), C{0.4, 0.2}, 8},
      {make_set({{0, 1}, {1, 2}, {1, 3}}), C{0.45, -0.15}, 6},
      {make_set({{0, 1}, {1, 4}, {-1, 4}}), C{0.3, 0.35}, 7},
  };
  for (const auto& c : cases) {
    const VerificationReport report =
        check_corollary(c.alpha, c.s, c.depth, eps);
    out.require(report.pass, report.line());
  }
  if (out.pass) out.detail = "3 generator sets at N=6..8, eps=1e-10";
  return out;
}

// ---------------------------------------------------------------------------
// 5. Single-angle reduction at alpha = (1-i)/2, theta = +-pi/2: the GRS
//    cloud equals the Delta-formulation cloud with c = (0, alpha), and the
//    p-rotated-copies decomposition holds within the tail bound.
Outcome criterion_reduction() {
  Outcome out;
  const C alpha{0.5, -0.5};
  const int depth = 10;
  for (int sign : {-1, +1}) {
    const RationalAngle theta(sign, 4);
    const IFSSpec spec(alpha, GeneratorSet({RationalAngle(), theta}),
                       {C{0, 0}, alpha});

    const PointCloud grs = cloud_grs_exhaustive(alpha, theta, depth);
    const PointCloud x = cloud_x_exhaustive(spec, depth);
    const double d = hausdorff(grs, x);
    out.require(d <= 1e-10,
                "GRS vs Delta formulation deviates by " + std::to_string(d));

    const double tail = tail_bound(spec, depth);
    const VerificationReport report =
        check_kawamura_allen(alpha, theta, depth, tail);
    out.require(report.pass, report.line());
  }
  if (out.pass) out.detail = "theta = +-pi/2 at depth 10";
  return out;
}

// ---------------------------------------------------------------------------
// 6. Grammar counts: DRC word counts match |Delta| * m^(N-1) exactly, and
//    GRC counts match a brute-force oracle recomputed here.
Outcome criterion_counts() {
  Outcome out;

  for (const auto& s : {make_set({{0, 1}, {1, 2}}),
                        make_set({{0, 1}, {1, 2}, {1, 3}})}) {
    const RevolvingGroup g = build_group(s);
    std::int64_t power = 1;  // m^(N-1)
    for (int length = 1; length <= 8; ++length) {
      const auto fixed =
          enumerate_drc(g, length, GroupElement{0}, EnumerationCap{200000});
      const auto free = enumerate_drc(g, length, {}, EnumerationCap{200000});
      out.require(static_cast<std::int64_t>(fixed.size()) == power,
                  "fixed-first count law fails at N=" + std::to_string(length));
      out.require(
          static_cast<std::int64_t>(free.size()) == g.order() * power,
          "free-first count law fails at N=" + std::to_string(length));
      power *= static_cast<std::int64_t>(g.arity());
    }
  }

  // Brute-force GRC oracle for theta = pi/2: filter every tuple over
  // {z, 0, 1, 2, 3}.
  const RationalAngle theta(1, 4);
  for (int length = 1; length <= 3; ++length) {
    std::int64_t oracle = 0;
    std::vector<std::int64_t> odo(static_cast<std::size_t>(length), 0);
    while (true) {
      std::vector<ZeroableEntry> entries;
      for (std::int64_t v : odo) {
        entries.push_back(v == 0 ? kZeroEntry : ZeroableEntry(v - 1));
      }
      if (validate_grc(GRWord(theta, entries))) ++oracle;
      int pos = length - 1;
      while (pos >= 0 && ++odo[static_cast<std::size_t>(pos)] == 5) {
        odo[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
    const auto words = enumerate_grc(theta, length);
    out.require(static_cast<std::int64_t>(words.size()) == oracle,
                "GRC count != oracle at N=" + std::to_string(length));
  }
  if (out.pass) out.detail = "DRC count law (N<=8) + GRC oracle (N<=3)";
  return out;
}

// ---------------------------------------------------------------------------
// 7. Tail bound: depth-8 vs depth-13 clouds stay within
//    max|c| |alpha|^8 / (1 - |alpha|) for every preset.
Outcome criterion_tail_bound() {
  Outcome out;
  const int depth = 8;
  for (const auto& preset : preset_registry()) {
    if (preset.rejected()) continue;
    const SeriesSpec& spec = *preset.spec;
    const PointCloud shallow = make_cloud_exhaustive(spec, depth);
    const PointCloud deep = make_cloud_exhaustive(spec, depth + 5);
    const double bound = tail_bound(spec.ifs, depth);
    const double d = hausdorff(shallow, deep);
    out.require(d <= bound, preset.name + ": hausdorff " + std::to_string(d) +
                                " > bound " + std::to_string(bound));
  }
  if (out.pass) out.detail = "all presets, N=8 vs N=13";
  return out;
}

// ---------------------------------------------------------------------------
// 8. Determinism & formats: byte-identical PPM from two CLI runs, exact P5
//    header, and lossless 17-digit CSV round trips.
Outcome criterion_determinism() {
  Outcome out;
  if (cli_path.empty()) {
    out.require(false, "no --cli path given");
    return out;
  }
  const fs::path dir = fs::temp_directory_path();
  const fs::path img_a = dir / "revolve_acc_a.ppm";
  const fs::path img_b = dir / "revolve_acc_b.ppm";

  const auto render = [&](const fs::path& target) {
    const std::string command = cli_path +
                                " render --preset heighway --samples 1000000 "
                                "--seed 0 --size 256 --out " +
                                target.string() + " > /dev/null 2>&1";
    return std::system(command.c_str()) == 0;
  };
  out.require(render(img_a) && render(img_b), "CLI render failed");

  const auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  };
  const std::string bytes_a = slurp(img_a);
  out.require(!bytes_a.empty() && bytes_a == slurp(img_b),
              "renders are not byte-identical");
  out.require(bytes_a.rfind("P5\n256 256\n255\n", 0) == 0,
              "PPM header is not the exact P5 form");
  fs::remove(img_a);
  fs::remove(img_b);

  const PointCloud cloud =
      cloud_x_sampled(find_preset("heighway")->spec->ifs, 24, 100000, 0);
  const auto parsed = cloud_from_csv(cloud_to_csv(cloud));
  out.require(parsed.size() == cloud.points.size(), "CSV point count changed");
  for (std::size_t i = 0; out.pass && i < parsed.size(); ++i) {
    out.require(parsed[i].real() == cloud.points[i].real() &&
                    parsed[i].imag() == cloud.points[i].imag(),
                "CSV round trip altered a coordinate");
  }
  if (out.pass) out.detail = "byte-identical 10^6-sample renders + CSV";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];
  }

  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
    double time_limit;  // seconds; 0 = no limit
  };
  const std::vector<Criterion> criteria{
      {1, "group order (closure = lcm)", criterion_group_order, 5.0},
      {2, "coding <-> Delta bijection", criterion_bijection, 30.0},
      {3, "main decomposition theorem", criterion_main_theorem, 120.0},
      {4, "Delta_0 corollary", criterion_corollary, 0.0},
      {5, "single-angle reduction", criterion_reduction, 0.0},
      {6, "grammar counts", criterion_counts, 0.0},
      {7, "tail bound", criterion_tail_bound, 0.0},
      {8, "determinism & formats", criterion_determinism, 0.0},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome = criterion.run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (criterion.time_limit > 0.0 && seconds >= criterion.time_limit) {
      outcome.pass = false;
      outcome.detail = "exceeded the " + std::to_string(criterion.time_limit) +
                       " s budget";
    }
    failures += outcome.pass ? 0 : 1;
    std::printf("[%s] criterion %d: %s -- %s (%.2f s)\n",
                outcome.pass ? "PASS" : "FAIL", criterion.number,
                criterion.name, outcome.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
