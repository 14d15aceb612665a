#include "revolve/config.hpp"

#include <fstream>
#include <json.hpp>

namespace revolve {

namespace {

using nlohmann::json;

std::complex<double> parse_complex(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw config_error("config: '" + field + "' must be a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(std::complex<double> z) {
  return json::array({z.real(), z.imag()});
}

}  // namespace

SeriesSpec config_from_string(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::exception& e) {
    throw config_error(std::string("config: not valid JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw config_error("config: top level must be an object");
  }

  SeriesKind kind = SeriesKind::delta;
  if (root.contains("kind")) {
    if (!root["kind"].is_string()) {
      throw config_error("config: 'kind' must be a string");
    }
    const auto parsed = series_kind_from_name(root["kind"].get<std::string>());
    if (!parsed) {
      throw config_error("config: unknown kind '" +
                         root["kind"].get<std::string>() +
                         "' (expected delta, delta_zero, or grs)");
    }
    kind = *parsed;
  }

  if (!root.contains("alpha")) throw config_error("config: missing 'alpha'");
  const std::complex<double> alpha = parse_complex(root["alpha"], "alpha");

  if (!root.contains("angles") || !root["angles"].is_array() ||
      root["angles"].empty()) {
    throw config_error("config: 'angles' must be a nonempty array");
  }
  std::vector<RationalAngle> angle_list;
  for (const auto& entry : root["angles"]) {
    if (!entry.is_object() || !entry.contains("q") || !entry.contains("p") ||
        !entry["q"].is_number_integer() || !entry["p"].is_number_integer()) {
      throw config_error("config: each angle must be {\"q\": int, \"p\": int}");
    }
    try {
      angle_list.emplace_back(entry["q"].get<std::int64_t>(),
                              entry["p"].get<std::int64_t>());
    } catch (const std::invalid_argument& e) {
      throw config_error(std::string("config: bad angle: ") + e.what());
    }
  }
  if (!angle_list.front().is_zero()) {
    throw config_error("config: the first angle must be {\"q\": 0, \"p\": 1}");
  }

  std::optional<std::vector<std::complex<double>>> constants;
  if (root.contains("constants")) {
    if (kind != SeriesKind::delta) {
      throw config_error(
          "config: 'constants' is only valid for kind 'delta'; delta_zero and "
          "grs determine their constants from alpha");
    }
    if (!root["constants"].is_array()) {
      throw config_error("config: 'constants' must be an array");
    }
    constants.emplace();
    for (const auto& entry : root["constants"]) {
      constants->push_back(parse_complex(entry, "constants"));
    }
  }

  try {
    return make_series_spec(kind, alpha,
                            GeneratorSet(std::move(angle_list)),
                            std::move(constants));
  } catch (const std::invalid_argument& e) {
    throw config_error(std::string("config: ") + e.what());
  }
}

std::string config_to_string(const SeriesSpec& spec) {
  json root;
  root["kind"] = series_kind_name(spec.kind);
  root["alpha"] = complex_to_json(spec.alpha());
  json angle_list = json::array();
  for (const auto& theta : spec.generators().angles()) {
    angle_list.push_back({{"q", theta.num()}, {"p", theta.den()}});
  }
  root["angles"] = angle_list;
  if (spec.kind == SeriesKind::delta) {
    json constant_list = json::array();
    for (const auto& c : spec.ifs.constants()) {
      constant_list.push_back(complex_to_json(c));
    }
    root["constants"] = constant_list;
  }
  return root.dump(2) + "\n";
}

SeriesSpec load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw config_error("config: cannot open '" + path.string() + "'");
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return config_from_string(text);
}

void save_config(const SeriesSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw config_error("config: cannot write '" + path.string() + "'");
  }
  out << config_to_string(spec);
}

}  // namespace revolve
