// Command-line surface for revolving-sequence grammars, group checks, and
// dragon/flake rendering.
//
// Exit codes: 0 success / verification pass, 1 verification or validation
// fail, 2 usage error (unknown preset, malformed config, cap exceeded, ...).

#include <complex>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "revolve/cloud_io.hpp"
#include "revolve/config.hpp"
#include "revolve/presets.hpp"
#include "revolve/render.hpp"
#include "revolve/verify.hpp"

namespace {

using namespace revolve;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::complex<double> parse_complex_arg(const std::string& text) {
  double re = 0.0, im = 0.0;
  char trailing = 0;
  const int got2 = std::sscanf(text.c_str(), "%lf,%lf%c", &re, &im, &trailing);
  if (got2 == 2) return {re, im};
  const int got1 = std::sscanf(text.c_str(), "%lf%c", &re, &trailing);
  if (got1 == 1) return {re, 0.0};
  throw std::invalid_argument("expected a complex value 're,im', got '" + text +
                              "'");
}

Bounds parse_bounds_arg(const std::string& text) {
  Bounds b;
  char trailing = 0;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf,%lf%c", &b.re_min, &b.re_max,
                  &b.im_min, &b.im_max, &trailing) != 4) {
    throw std::invalid_argument(
        "expected bounds 're_min,re_max,im_min,im_max', got '" + text + "'");
  }
  return b;
}

std::pair<int, int> parse_size_arg(const std::string& text) {
  int w = 0, h = 0;
  char trailing = 0;
  if (std::sscanf(text.c_str(), "%dx%d%c", &w, &h, &trailing) == 2) {
    return {w, h};
  }
  if (std::sscanf(text.c_str(), "%d%c", &w, &trailing) == 1) return {w, w};
  throw std::invalid_argument("expected a size 'N' or 'WxH', got '" + text +
                              "'");
}

GeneratorSet parse_generator_set(const std::vector<std::string>& fractions) {
  std::vector<RationalAngle> angles;
  angles.reserve(fractions.size());
  for (const auto& text : fractions) angles.push_back(parse_angle(text));
  return GeneratorSet(std::move(angles));
}

std::string format_complex(std::complex<double> z) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "%g%+gi", z.real(), z.imag());
  return buf;
}

// Resolves --preset NAME / --config FILE into a spec; throws on unknown or
// rejected presets.
SeriesSpec resolve_spec(const std::string& preset_name,
                        const std::string& config_path) {
  if (!preset_name.empty() && !config_path.empty()) {
    throw std::invalid_argument("give either --preset or --config, not both");
  }
  if (!preset_name.empty()) {
    const Preset* preset = find_preset(preset_name);
    if (preset == nullptr) {
      throw std::invalid_argument("unknown preset '" + preset_name +
                                  "' (see the 'presets' subcommand)");
    }
    if (preset->rejected()) {
      throw std::invalid_argument(preset->name + ": " +
                                  preset->rejection_reason);
    }
    return *preset->spec;
  }
  if (!config_path.empty()) return load_config(config_path);
  throw std::invalid_argument("need --preset or --config");
}

int recommended_depth(const std::string& preset_name) {
  if (const Preset* p = find_preset(preset_name); p != nullptr) {
    return p->recommended_depth;
  }
  return 30;
}

int run_presets() {
  for (const auto& preset : preset_registry()) {
    if (preset.rejected()) {
      std::printf("%-12s REJECTED    %s -- %s\n", preset.name.c_str(),
                  preset.note.c_str(), preset.rejection_reason.c_str());
      continue;
    }
    std::printf("%-12s %-10s alpha=%s S={%s} depth=%d  %s\n",
                preset.name.c_str(), series_kind_name(preset.spec->kind),
                format_complex(preset.spec->alpha()).c_str(),
                preset.spec->generators().str().c_str(),
                preset.recommended_depth, preset.note.c_str());
  }
  return kExitPass;
}

int run_info(const SeriesSpec& spec) {
  const IFSSpec& ifs = spec.ifs;
  std::printf("kind:            %s\n", series_kind_name(spec.kind));
  std::printf("alpha:           %s\n", format_complex(ifs.alpha()).c_str());
  std::printf("m:               %zu\n", ifs.arity());
  std::printf("angles:          {%s}\n", ifs.generators().str().c_str());
  std::printf("|Delta|:         %lld\n",
              static_cast<long long>(ifs.group().order()));
  std::printf("contraction:     %.17g\n", ifs.contraction());
  std::printf("bounding radius: %.17g\n", ifs.bounding_radius());
  std::string constants;
  for (std::size_t k = 0; k < ifs.constants().size(); ++k) {
    if (k > 0) constants += ", ";
    constants += format_complex(ifs.constants()[k]);
  }
  std::printf("constants:       [%s]\n", constants.c_str());
  if (ifs.generators().degenerate()) {
    std::printf("note:            degenerate (m = 1): the group is trivial and "
                "every sequence is constant\n");
  }
  return kExitPass;
}

struct RenderArgs {
  std::string preset;
  std::string config;
  int depth = 0;
  std::int64_t samples = 0;
  std::string size = "1024";
  std::uint64_t seed = 0;
  std::string map = "log";
  std::string bounds;
  std::string out;
  std::string csv;
  std::int64_t cap = EnumerationCap{}.max_words;
};

int run_render(const RenderArgs& args) {
  const SeriesSpec spec = resolve_spec(args.preset, args.config);
  if (args.depth > 0 && args.samples > 0) {
    throw std::invalid_argument(
        "--depth (exhaustive) and --samples (sampled) are mutually exclusive");
  }
  if (args.out.empty() && args.csv.empty()) {
    throw std::invalid_argument("render needs --out and/or --csv");
  }

  RenderConfig cfg;
  std::tie(cfg.width, cfg.height) = parse_size_arg(args.size);
  cfg.seed = args.seed;
  if (!args.bounds.empty()) cfg.bounds = parse_bounds_arg(args.bounds);
  if (args.map == "log") {
    cfg.mapping = IntensityMap::log;
  } else if (args.map == "linear") {
    cfg.mapping = IntensityMap::linear;
  } else {
    throw std::invalid_argument("--map must be 'log' or 'linear'");
  }

  PointCloud cloud;
  if (args.depth > 0) {
    cloud = make_cloud_exhaustive(spec, args.depth,
                                  EnumerationCap{args.cap});
  } else {
    const std::int64_t samples = args.samples > 0 ? args.samples : 1'000'000;
    const int depth = recommended_depth(args.preset);
    cloud = make_cloud_sampled(spec, depth, samples, cfg.seed);
  }

  if (!args.csv.empty()) write_cloud_csv(cloud, args.csv);
  if (!args.out.empty()) {
    write_ppm(rasterize(cloud, cfg), args.out, cfg.mapping);
  }
  std::printf("%zu points -> %s\n", cloud.points.size(),
              args.out.empty() ? args.csv.c_str() : args.out.c_str());
  return kExitPass;
}

struct GrammarArgs {
  std::string mode;
  std::vector<std::string> angles;
  int length = 0;
  std::string word;
  std::int64_t first = -1;
  std::int64_t cap = EnumerationCap{}.max_words;
};

RationalAngle single_angle(const std::vector<std::string>& fractions) {
  if (fractions.size() != 1) {
    throw std::invalid_argument(
        "mode 'grc' takes exactly one angle (the revolving angle)");
  }
  return parse_angle(fractions[0]);
}

int run_enumerate(const GrammarArgs& args) {
  const EnumerationCap cap{args.cap};
  if (args.mode == "grc") {
    for (const auto& w : enumerate_grc(single_angle(args.angles), args.length,
                                       cap)) {
      std::printf("%s\n", format_word(w).c_str());
    }
    return kExitPass;
  }
  const RevolvingGroup group = build_group(parse_generator_set(args.angles));
  if (args.mode == "drc") {
    std::optional<GroupElement> first;
    if (args.first >= 0) first = GroupElement{args.first};
    for (const auto& w : enumerate_drc(group, args.length, first, cap)) {
      std::printf("%s\n", format_word(w).c_str());
    }
    return kExitPass;
  }
  if (args.mode == "dzrc") {
    for (const auto& w : enumerate_dzrc(group, args.length, cap)) {
      std::printf("%s\n", format_word(w).c_str());
    }
    return kExitPass;
  }
  throw std::invalid_argument("--mode must be grc, drc, or dzrc");
}

int run_validate(const GrammarArgs& args) {
  bool ok = false;
  if (args.mode == "grc") {
    ok = validate_grc(parse_gr_word(args.word, single_angle(args.angles)));
  } else if (args.mode == "drc") {
    const RevolvingGroup group = build_group(parse_generator_set(args.angles));
    ok = validate_drc(parse_delta_word(args.word, group));
  } else if (args.mode == "dzrc") {
    const RevolvingGroup group = build_group(parse_generator_set(args.angles));
    ok = validate_dzrc(parse_delta_zero_word(args.word, group));
  } else {
    throw std::invalid_argument("--mode must be grc, drc, or dzrc");
  }
  std::printf("%s\n", ok ? "valid" : "invalid");
  return ok ? kExitPass : kExitFail;
}

struct VerifyArgs {
  std::string preset;
  std::string config;
  std::string alpha;
  std::vector<std::string> angles;
  std::string angle;
  int depth = 0;
  double tol = 1e-10;
  std::int64_t cap = EnumerationCap{}.max_words;
};

int finish_verify(const VerificationReport& report) {
  std::printf("%s\n", report.line().c_str());
  std::printf("%s\n", summary_line({&report, 1}).c_str());
  return report.pass ? kExitPass : kExitFail;
}

int run_verify_main(const VerifyArgs& args) {
  SeriesSpec spec = [&] {
    if (!args.alpha.empty() || !args.angles.empty()) {
      throw std::invalid_argument(
          "verify main takes --preset or --config (the theorem needs "
          "constants, which flags cannot express)");
    }
    return resolve_spec(args.preset, args.config);
  }();
  const int depth = args.depth > 0 ? args.depth : 8;
  return finish_verify(check_main_theorem(spec.ifs, depth, args.tol,
                                          EnumerationCap{args.cap}));
}

int run_verify_corollary(const VerifyArgs& args) {
  const int depth = args.depth > 0 ? args.depth : 7;
  if (!args.angles.empty()) {
    if (args.alpha.empty()) {
      throw std::invalid_argument("verify corollary needs --alpha with --angles");
    }
    return finish_verify(check_corollary(parse_complex_arg(args.alpha),
                                         parse_generator_set(args.angles),
                                         depth, args.tol,
                                         EnumerationCap{args.cap}));
  }
  const SeriesSpec spec = resolve_spec(args.preset, args.config);
  return finish_verify(check_corollary(spec.alpha(), spec.generators(), depth,
                                       args.tol, EnumerationCap{args.cap}));
}

int run_verify_ka(const VerifyArgs& args) {
  const int depth = args.depth > 0 ? args.depth : 10;
  if (!args.angle.empty()) {
    if (args.alpha.empty()) {
      throw std::invalid_argument("verify ka needs --alpha with --angle");
    }
    return finish_verify(check_kawamura_allen(parse_complex_arg(args.alpha),
                                              parse_angle(args.angle), depth,
                                              args.tol,
                                              EnumerationCap{args.cap}));
  }
  const SeriesSpec spec = resolve_spec(args.preset, args.config);
  if (spec.generators().size() != 2) {
    throw std::invalid_argument(
        "verify ka needs a spec with exactly one nonzero angle");
  }
  return finish_verify(check_kawamura_allen(spec.alpha(),
                                            spec.generators().angle(1), depth,
                                            args.tol, EnumerationCap{args.cap}));
}

int run_verify_group(const VerifyArgs& args) {
  if (!args.angles.empty()) {
    const GeneratorSet s = parse_generator_set(args.angles);
    const VerificationReport report = check_group_order(s);
    std::printf("|Delta| = %lld\n",
                static_cast<long long>(build_group(s).order()));
    return finish_verify(report);
  }
  const SeriesSpec spec = resolve_spec(args.preset, args.config);
  const VerificationReport report = check_group_order(spec.generators());
  std::printf("|Delta| = %lld\n",
              static_cast<long long>(spec.ifs.group().order()));
  return finish_verify(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"revolve: revolving-sequence grammars, revolving groups, and "
               "dragon/flake fractal rendering"};
  app.require_subcommand(1);

  auto* cmd_presets =
      app.add_subcommand("presets", "list the preset registry");

  std::string info_preset, info_config;
  auto* cmd_info =
      app.add_subcommand("info", "print m, |Delta|, contraction, bounding disk");
  cmd_info->add_option("--config", info_config, "config file");
  cmd_info->add_option("--preset", info_preset, "preset name");

  RenderArgs render_args;
  auto* cmd_render =
      app.add_subcommand("render", "rasterize a series set to a PPM image");
  cmd_render->add_option("--preset", render_args.preset, "preset name");
  cmd_render->add_option("--config", render_args.config, "config file");
  cmd_render->add_option("--depth", render_args.depth,
                         "exhaustive enumeration depth");
  cmd_render->add_option("--samples", render_args.samples,
                         "number of random samples");
  cmd_render->add_option("--size", render_args.size, "image size N or WxH");
  cmd_render->add_option("--seed", render_args.seed, "random seed");
  cmd_render->add_option("--map", render_args.map, "intensity map: log|linear");
  cmd_render->add_option("--bounds", render_args.bounds,
                         "re_min,re_max,im_min,im_max (default: auto)");
  cmd_render->add_option("--out", render_args.out, "output PPM path");
  cmd_render->add_option("--csv", render_args.csv, "also dump the cloud as CSV");
  cmd_render->add_option("--cap", render_args.cap, "enumeration cap");

  GrammarArgs enum_args;
  auto* cmd_enumerate =
      app.add_subcommand("enumerate", "list all words of a grammar");
  cmd_enumerate->add_option("--mode", enum_args.mode, "grc|drc|dzrc")
      ->required();
  cmd_enumerate->add_option("--length", enum_args.length, "word length")
      ->required();
  cmd_enumerate
      ->add_option("--angles", enum_args.angles,
                   "angles as fractions of 2*pi, e.g. 0 1/2 1/3")
      ->required();
  cmd_enumerate->add_option("--first", enum_args.first,
                            "fix the first exponent (drc only)");
  cmd_enumerate->add_option("--cap", enum_args.cap, "enumeration cap");

  GrammarArgs validate_args;
  auto* cmd_validate =
      app.add_subcommand("validate", "check a word against a grammar");
  cmd_validate->add_option("--mode", validate_args.mode, "grc|drc|dzrc")
      ->required();
  cmd_validate->add_option("--word", validate_args.word, "word text")
      ->required();
  cmd_validate
      ->add_option("--angles", validate_args.angles,
                   "angles as fractions of 2*pi")
      ->required();

  auto* cmd_verify = app.add_subcommand(
      "verify", "numerically certify the decomposition results");
  cmd_verify->require_subcommand(1);
  VerifyArgs verify_args;
  const auto add_verify_flags = [&](CLI::App* cmd) {
    cmd->add_option("--preset", verify_args.preset, "preset name");
    cmd->add_option("--config", verify_args.config, "config file");
    cmd->add_option("--alpha", verify_args.alpha, "complex scale 're,im'");
    cmd->add_option("--angles", verify_args.angles,
                    "angles as fractions of 2*pi");
    cmd->add_option("--angle", verify_args.angle,
                    "single revolving angle (ka only)");
    cmd->add_option("--depth", verify_args.depth, "series depth");
    cmd->add_option("--tol", verify_args.tol, "tolerance");
    cmd->add_option("--cap", verify_args.cap, "enumeration cap");
  };
  auto* cmd_verify_main = cmd_verify->add_subcommand(
      "main", "X = union of rotated attractor copies");
  auto* cmd_verify_corollary = cmd_verify->add_subcommand(
      "corollary", "X* = union of rotated T* copies");
  auto* cmd_verify_ka = cmd_verify->add_subcommand(
      "ka", "single-angle decomposition into p rotated copies");
  auto* cmd_verify_group =
      cmd_verify->add_subcommand("group", "|Delta| = lcm of denominators");
  add_verify_flags(cmd_verify_main);
  add_verify_flags(cmd_verify_corollary);
  add_verify_flags(cmd_verify_ka);
  add_verify_flags(cmd_verify_group);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (cmd_presets->parsed()) return run_presets();
    if (cmd_info->parsed()) {
      return run_info(resolve_spec(info_preset, info_config));
    }
    if (cmd_render->parsed()) return run_render(render_args);
    if (cmd_enumerate->parsed()) return run_enumerate(enum_args);
    if (cmd_validate->parsed()) return run_validate(validate_args);
    if (cmd_verify->parsed()) {
      if (cmd_verify_main->parsed()) return run_verify_main(verify_args);
      if (cmd_verify_corollary->parsed()) {
        return run_verify_corollary(verify_args);
      }
      if (cmd_verify_ka->parsed()) return run_verify_ka(verify_args);
      if (cmd_verify_group->parsed()) return run_verify_group(verify_args);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
