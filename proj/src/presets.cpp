#include "revolve/presets.hpp"

#include <cmath>

namespace revolve {

namespace {

GeneratorSet angles(std::initializer_list<std::pair<int, int>> fractions) {
  std::vector<RationalAngle> out;
  for (const auto& [q, p] : fractions) out.emplace_back(q, p);
  return GeneratorSet(std::move(out));
}

std::vector<Preset> build_registry() {
  using C = std::complex<double>;
  std::vector<Preset> presets;

  const C half_plus{0.5, 0.5};    // (1+i)/2
  const C half_minus{0.5, -0.5};  // (1-i)/2
  const C flake{0.5, -std::sqrt(3.0) / 6.0};

  presets.push_back(
      {"heighway",
       "Heighway dragon (Edgar 1990); the series set is a union of 4 rotated "
       "dragons",
       40,
       make_series_spec(SeriesKind::delta, half_plus, angles({{0, 1}, {1, 4}}),
                        {{C{0.0, 0.0}, C{1.0, 0.0}}}),
       ""});
  presets.push_back(
      {"twindragon",
       "Twindragon (Edgar 1990); the series set is a union of 2 rotated "
       "twindragons",
       40,
       make_series_spec(SeriesKind::delta, half_plus, angles({{0, 1}, {1, 2}}),
                        {{C{0.0, 0.0}, C{1.0, 0.0}}}),
       ""});
  presets.push_back(
      {"fudgeflake",
       "Fudgeflake (Mandelbrot 1982; Edgar 1990); the series set is a union "
       "of rotated flakes",
       26,
       make_series_spec(SeriesKind::delta, flake,
                        angles({{0, 1}, {1, 6}, {-1, 3}}),
                        {{C{0.0, 0.0}, flake, std::conj(flake)}}),
       ""});
  presets.push_back(
      {"paperfold",
       "Paper-folding dragon (Davis & Knuth 1970); the series set is a union "
       "of 4 rotated copies",
       40,
       make_series_spec(SeriesKind::delta, half_minus,
                        angles({{0, 1}, {-1, 4}}),
                        {{C{0.0, 0.0}, half_minus}}),
       ""});
  presets.push_back(
      {"levy",
       "Levy dragon curve (Levy 1938; proof by Kawamura 2002); a union of 4 "
       "rotated Levy curves",
       40,
       make_series_spec(SeriesKind::grs, half_minus, angles({{0, 1}, {1, 4}}),
                        std::nullopt),
       ""});
  presets.push_back(
      {"tetradragon",
       "Tetradragon (Mizutani & Ito 1987); tiled by 4 rotated paper-folding "
       "dragons",
       40,
       make_series_spec(SeriesKind::grs, half_minus, angles({{0, 1}, {-1, 4}}),
                        std::nullopt),
       ""});
  presets.push_back(
      {"terdragon", "Terdragon (Davis & Knuth 1970; Edgar 1990)", 0,
       std::nullopt,
       "rejected: the terdragon IFS rotates by {2pi/3, 0}; the second zero "
       "angle duplicates theta_0, so the generator set is invalid and no "
       "revolving-group decomposition applies"});

  return presets;
}

}  // namespace

const std::vector<Preset>& preset_registry() {
  static const std::vector<Preset> registry = build_registry();
  return registry;
}

const Preset* find_preset(std::string_view name) {
  for (const auto& preset : preset_registry()) {
    if (preset.name == name) return &preset;
  }
  return nullptr;
}

}  // namespace revolve
