// Python bindings for the core operations: exact angle/group arithmetic,
// the three sequence grammars, series evaluation, theorem checks, and
// rendering.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "revolve/cloud_io.hpp"
#include "revolve/config.hpp"
#include "revolve/presets.hpp"
#include "revolve/render.hpp"
#include "revolve/verify.hpp"

namespace py = pybind11;
using namespace revolve;

namespace {

GeneratorSet generator_set_from_pairs(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& fractions) {
  std::vector<RationalAngle> angles;
  angles.reserve(fractions.size());
  for (const auto& [q, p] : fractions) angles.emplace_back(q, p);
  return GeneratorSet(std::move(angles));
}

DeltaWord delta_word(const RevolvingGroup& g,
                     const std::vector<std::int64_t>& exponents) {
  std::vector<GroupElement> elems;
  elems.reserve(exponents.size());
  for (auto k : exponents) elems.push_back({k});
  return DeltaWord(g, std::move(elems));
}

std::vector<std::int64_t> delta_word_exponents(const DeltaWord& w) {
  std::vector<std::int64_t> out;
  out.reserve(w.size());
  for (const auto& e : w.elements()) out.push_back(e.exponent);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Revolving-sequence grammars, revolving groups, and finite-depth "
            "series evaluation of self-similar sets";

  py::register_exception<cap_exceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<config_error>(m, "ConfigError", PyExc_ValueError);

  py::class_<RationalAngle>(m, "RationalAngle")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("q"), py::arg("p"))
      .def_property_readonly("q", &RationalAngle::num)
      .def_property_readonly("p", &RationalAngle::den)
      .def_property_readonly("is_zero", &RationalAngle::is_zero)
      .def("radians", &RationalAngle::radians)
      .def("unit", &RationalAngle::unit)
      .def("__eq__", [](const RationalAngle& a,
                        const RationalAngle& b) { return a == b; })
      .def("__repr__", [](const RationalAngle& a) {
        return "RationalAngle(" + a.str() + " of 2*pi)";
      });

  m.def("make_angle", &make_angle, py::arg("q"), py::arg("p"));
  m.def("parse_angle", &parse_angle, py::arg("text"));

  py::class_<GeneratorSet>(m, "GeneratorSet")
      .def(py::init(&generator_set_from_pairs), py::arg("fractions"),
           "Build from [(q, p), ...] fractions of 2*pi; the first must be "
           "(0, 1).")
      .def(py::init<std::vector<RationalAngle>>(), py::arg("angles"))
      .def_property_readonly("m", &GeneratorSet::size)
      .def_property_readonly("degenerate", &GeneratorSet::degenerate)
      .def_property_readonly("angles", &GeneratorSet::angles)
      .def("__repr__",
           [](const GeneratorSet& s) { return "GeneratorSet{" + s.str() + "}"; });

  py::class_<RevolvingGroup>(m, "RevolvingGroup")
      .def(py::init<GeneratorSet>(), py::arg("generators"))
      .def_property_readonly("order", &RevolvingGroup::order)
      .def_property_readonly("generators", &RevolvingGroup::generators)
      .def("step_exponent", &RevolvingGroup::step_exponent, py::arg("j"))
      .def("apply",
           [](const RevolvingGroup& g, std::int64_t k, std::size_t j) {
             return g.apply({k}, j).exponent;
           },
           py::arg("exponent"), py::arg("j"))
      .def("apply_angle",
           [](const RevolvingGroup& g, std::int64_t k,
              const RationalAngle& theta) {
             return g.apply_angle({k}, theta).exponent;
           },
           py::arg("exponent"), py::arg("theta"))
      .def("to_complex",
           [](const RevolvingGroup& g, std::int64_t k) {
             return g.to_complex({k});
           },
           py::arg("exponent"))
      .def("elements", [](const RevolvingGroup& g) {
        std::vector<std::int64_t> out;
        for (const auto& e : g.elements()) out.push_back(e.exponent);
        return out;
      });

  m.def("build_group", &build_group, py::arg("generators"));

  // Words cross the boundary as plain lists: coding words as list[int]
  // digits, Delta-words as list[int] exponents, Delta_0/GR words as
  // list[int | None] with None for the zero symbol.
  m.def("validate_drc",
        [](const RevolvingGroup& g, const std::vector<std::int64_t>& w) {
          return validate_drc(delta_word(g, w));
        },
        py::arg("group"), py::arg("exponents"));
  m.def("validate_dzrc",
        [](const RevolvingGroup& g, const std::vector<ZeroableEntry>& w) {
          return validate_dzrc(DeltaZeroWord(g, w));
        },
        py::arg("group"), py::arg("entries"));
  m.def("validate_grc",
        [](const RationalAngle& theta, const std::vector<ZeroableEntry>& w) {
          return validate_grc(GRWord(theta, w));
        },
        py::arg("theta"), py::arg("entries"));

  m.def("enumerate_drc",
        [](const RevolvingGroup& g, int length,
           std::optional<std::int64_t> first, std::int64_t cap) {
          std::optional<GroupElement> f;
          if (first) f = GroupElement{*first};
          std::vector<std::vector<std::int64_t>> out;
          for (const auto& w :
               enumerate_drc(g, length, f, EnumerationCap{cap})) {
            out.push_back(delta_word_exponents(w));
          }
          return out;
        },
        py::arg("group"), py::arg("length"), py::arg("first") = py::none(),
        py::arg("cap") = EnumerationCap{}.max_words);
  m.def("enumerate_dzrc",
        [](const RevolvingGroup& g, int length, std::int64_t cap) {
          std::vector<std::vector<ZeroableEntry>> out;
          for (const auto& w : enumerate_dzrc(g, length, EnumerationCap{cap})) {
            out.push_back(w.entries());
          }
          return out;
        },
        py::arg("group"), py::arg("length"),
        py::arg("cap") = EnumerationCap{}.max_words);
  m.def("enumerate_grc",
        [](const RationalAngle& theta, int length, std::int64_t cap) {
          std::vector<std::vector<ZeroableEntry>> out;
          for (const auto& w :
               enumerate_grc(theta, length, EnumerationCap{cap})) {
            out.push_back(w.entries());
          }
          return out;
        },
        py::arg("theta"), py::arg("length"),
        py::arg("cap") = EnumerationCap{}.max_words);

  m.def("sample_drc",
        [](const RevolvingGroup& g, int length, std::uint64_t seed) {
          return delta_word_exponents(sample_drc(g, length, seed));
        },
        py::arg("group"), py::arg("length"), py::arg("seed"));
  m.def("sample_dzrc",
        [](const RevolvingGroup& g, int length, std::uint64_t seed) {
          return sample_dzrc(g, length, seed).entries();
        },
        py::arg("group"), py::arg("length"), py::arg("seed"));
  m.def("sample_grc",
        [](const RationalAngle& theta, int length, std::uint64_t seed) {
          return sample_grc(theta, length, seed).entries();
        },
        py::arg("theta"), py::arg("length"), py::arg("seed"));

  m.def("coding_to_delta",
        [](const RevolvingGroup& g, const std::vector<int>& digits) {
          return delta_word_exponents(
              coding_to_delta(CodingWord(digits, g.arity()), g));
        },
        py::arg("group"), py::arg("digits"));
  m.def("delta_to_coding",
        [](const RevolvingGroup& g, const std::vector<std::int64_t>& w) {
          return delta_to_coding(delta_word(g, w)).digits();
        },
        py::arg("group"), py::arg("exponents"));
  m.def("dzrc_from_coding",
        [](const RevolvingGroup& g, const std::vector<int>& digits) {
          return dzrc_from_coding(CodingWord(digits, g.arity()), g).entries();
        },
        py::arg("group"), py::arg("digits"));
  m.def("constant_sequence",
        [](const RevolvingGroup& g, const std::vector<std::int64_t>& w,
           const std::vector<std::complex<double>>& constants) {
          return constant_sequence(delta_word(g, w), constants);
        },
        py::arg("group"), py::arg("exponents"), py::arg("constants"));

  py::class_<IFSSpec>(m, "IFSSpec")
      .def(py::init<std::complex<double>, GeneratorSet,
                    std::vector<std::complex<double>>>(),
           py::arg("alpha"), py::arg("generators"), py::arg("constants"))
      .def_property_readonly("alpha", &IFSSpec::alpha)
      .def_property_readonly("generators", &IFSSpec::generators)
      .def_property_readonly("constants", &IFSSpec::constants)
      .def_property_readonly("m", &IFSSpec::arity)
      .def_property_readonly("group_order",
                             [](const IFSSpec& s) { return s.group().order(); })
      .def("maps",
           [](const IFSSpec& s) {
             std::vector<std::pair<std::complex<double>, std::complex<double>>>
                 out;
             for (const auto& map : s.maps()) {
               out.emplace_back(map.ratio, map.offset);
             }
             return out;
           })
      .def_property_readonly("contraction", &IFSSpec::contraction)
      .def_property_readonly("bounding_radius", &IFSSpec::bounding_radius);

  py::enum_<SeriesKind>(m, "SeriesKind")
      .value("delta", SeriesKind::delta)
      .value("delta_zero", SeriesKind::delta_zero)
      .value("grs", SeriesKind::grs);

  py::class_<SeriesSpec>(m, "SeriesSpec")
      .def_readonly("kind", &SeriesSpec::kind)
      .def_readonly("ifs", &SeriesSpec::ifs);

  m.def("make_series_spec", &make_series_spec, py::arg("kind"),
        py::arg("alpha"), py::arg("generators"),
        py::arg("constants") = py::none());

  m.def("eval_coding",
        [](const IFSSpec& spec, const std::vector<int>& digits) {
          return eval_coding(spec, CodingWord(digits, spec.arity()));
        },
        py::arg("spec"), py::arg("digits"));
  m.def("eval_delta_word",
        [](const IFSSpec& spec, const std::vector<std::int64_t>& w) {
          return eval_delta_word(spec, delta_word(spec.group(), w));
        },
        py::arg("spec"), py::arg("exponents"));
  m.def("eval_grs_word",
        [](std::complex<double> alpha, const RationalAngle& theta,
           const std::vector<ZeroableEntry>& entries) {
          return eval_grs_word(alpha, GRWord(theta, entries));
        },
        py::arg("alpha"), py::arg("theta"), py::arg("entries"));
  m.def("eval_dzrc_word",
        [](std::complex<double> alpha, const RevolvingGroup& g,
           const std::vector<ZeroableEntry>& entries) {
          return eval_dzrc_word(alpha, DeltaZeroWord(g, entries));
        },
        py::arg("alpha"), py::arg("group"), py::arg("entries"));

  py::class_<PointCloud>(m, "PointCloud")
      .def_readonly("points", &PointCloud::points)
      .def_readonly("depth", &PointCloud::depth)
      .def_readonly("source", &PointCloud::source)
      .def("__len__", [](const PointCloud& c) { return c.points.size(); });

  py::class_<EnumerationCap>(m, "EnumerationCap")
      .def(py::init<std::int64_t>(), py::arg("max_words"))
      .def_readwrite("max_words", &EnumerationCap::max_words);

  m.def("attractor", &attractor_exhaustive, py::arg("spec"), py::arg("depth"),
        py::arg("cap") = EnumerationCap{});
  m.def("attractor_sampled", &attractor_sampled, py::arg("spec"),
        py::arg("n_points"), py::arg("seed"));
  m.def("cloud_x", &cloud_x_exhaustive, py::arg("spec"), py::arg("depth"),
        py::arg("cap") = EnumerationCap{});
  m.def("cloud_x_sampled", &cloud_x_sampled, py::arg("spec"), py::arg("depth"),
        py::arg("n_points"), py::arg("seed"));
  m.def("cloud_xstar", &cloud_xstar_exhaustive, py::arg("alpha"),
        py::arg("generators"), py::arg("depth"),
        py::arg("cap") = EnumerationCap{});
  m.def("cloud_grs", &cloud_grs_exhaustive, py::arg("alpha"), py::arg("theta"),
        py::arg("depth"), py::arg("cap") = EnumerationCap{});

  m.def("hausdorff",
        [](const std::vector<std::complex<double>>& a,
           const std::vector<std::complex<double>>& b) {
          return hausdorff(PointSpan(a), PointSpan(b));
        },
        py::arg("a"), py::arg("b"));
  m.def("closure_size",
        [](const std::vector<std::complex<double>>& generators,
           std::size_t max_size) {
          return closure_size(PointSpan(generators), max_size);
        },
        py::arg("generators"), py::arg("max_size") = std::size_t{1} << 20);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("claim_id", &VerificationReport::claim_id)
      .def_readonly("parameters", &VerificationReport::parameters)
      .def_readonly("depth", &VerificationReport::depth)
      .def_readonly("tolerance", &VerificationReport::tolerance)
      .def_readonly("discrepancy", &VerificationReport::discrepancy)
      .def_readonly("passed", &VerificationReport::pass)
      .def_readonly("seconds", &VerificationReport::seconds)
      .def("line", &VerificationReport::line)
      .def("__repr__", &VerificationReport::line);

  m.def("check_main_theorem", &check_main_theorem, py::arg("spec"),
        py::arg("depth"), py::arg("eps"), py::arg("cap") = EnumerationCap{});
  m.def("check_corollary", &check_corollary, py::arg("alpha"),
        py::arg("generators"), py::arg("depth"), py::arg("eps"),
        py::arg("cap") = EnumerationCap{});
  m.def("check_kawamura_allen", &check_kawamura_allen, py::arg("alpha"),
        py::arg("theta"), py::arg("depth"), py::arg("eps"),
        py::arg("cap") = EnumerationCap{});
  m.def("check_group_order", &check_group_order, py::arg("generators"));

  m.def("presets", [] {
    std::vector<std::string> names;
    for (const auto& p : preset_registry()) names.push_back(p.name);
    return names;
  });
  m.def("preset_spec", [](const std::string& name) {
    const Preset* p = find_preset(name);
    if (p == nullptr) throw std::invalid_argument("unknown preset '" + name + "'");
    if (p->rejected()) throw std::invalid_argument(p->name + ": " + p->rejection_reason);
    return *p->spec;
  });
  m.def("preset_note", [](const std::string& name) {
    const Preset* p = find_preset(name);
    if (p == nullptr) throw std::invalid_argument("unknown preset '" + name + "'");
    return p->rejected() ? p->note + " -- " + p->rejection_reason : p->note;
  });

  m.def("load_config", &load_config, py::arg("path"));
  m.def("save_config", &save_config, py::arg("spec"), py::arg("path"));
  m.def("config_from_string", &config_from_string, py::arg("text"));
  m.def("config_to_string", &config_to_string, py::arg("spec"));

  m.def("render_ppm",
        [](const PointCloud& cloud, const std::filesystem::path& path,
           int width, int height, bool log_map) {
          RenderConfig cfg;
          cfg.width = width;
          cfg.height = height;
          cfg.mapping = log_map ? IntensityMap::log : IntensityMap::linear;
          write_ppm(rasterize(cloud, cfg), path, cfg.mapping);
        },
        py::arg("cloud"), py::arg("path"), py::arg("width") = 512,
        py::arg("height") = 512, py::arg("log_map") = true);
  m.def("write_cloud_csv", &write_cloud_csv, py::arg("cloud"), py::arg("path"));
  m.def("read_cloud_csv", &read_cloud_csv, py::arg("path"));
}
