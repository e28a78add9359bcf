#include "pjrl/run.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pjrl;

namespace {

RunConfig make_config(const std::string& plant, int samples, bool symbolic) {
    RunConfig config;
    config.plant = plant;
    config.samples = samples;
    config.symbolic_lambda = symbolic;
    config.emit.clear();  // no file output from the in-memory API
    return config;
}

}  // namespace

PYBIND11_MODULE(_pjrl, m) {
    m.doc() = "Exact projective root locus";

    py::register_exception<ParseError>(m, "PlantParseError");
    py::register_exception<NonCoprimeError>(m, "NonCoprimeError");

    m.def(
        "parse",
        [](const std::string& plant) {
            const RationalFunction g = parse_transfer_function(plant);
            return py::make_tuple(g.num.str(), g.den.str());
        },
        py::arg("plant"), "Parse a plant into canonical (numerator, denominator) strings.");

    m.def(
        "closure_system",
        [](const std::string& plant) {
            const HomogeneousSystem sys = projective_closure(build_pencil(parse_transfer_function(plant)));
            std::vector<std::string> out;
            for (const auto& g : sys.polys) out.push_back(g.str());
            return out;
        },
        py::arg("plant"), "Homogenized Groebner system defining the projective closure.");

    m.def(
        "report",
        [](const std::string& plant, int samples, bool symbolic) {
            return report_json(run(make_config(plant, samples, symbolic)));
        },
        py::arg("plant"), py::arg("samples") = 101, py::arg("symbolic") = false,
        "Full pipeline report as a JSON string (writes no files).");

    m.def(
        "run",
        [](const std::string& plant, const std::string& out_dir, const std::string& patch, int samples,
           const std::vector<std::string>& emit) {
            RunConfig config = make_config(plant, samples, false);
            config.patch = patch;
            config.out_dir = out_dir;
            config.emit = std::set<std::string>(emit.begin(), emit.end());
            return report_json(run(config));
        },
        py::arg("plant"), py::arg("out_dir"), py::arg("patch") = "all", py::arg("samples") = 400,
        py::arg("emit") = std::vector<std::string>{"csv", "json"},
        "Run the pipeline and emit artifact files into out_dir.");

    m.def(
        "lift",
        [](const std::string& x, const std::string& y, const std::string& z) {
            const auto coord = [](const std::string& s) {
                const auto r = parse_rational(s);
                if (!r) throw std::invalid_argument("bad rational: " + s);
                return *r;
            };
            const SpherePoint sp = gnomonic_lift(ProjectivePoint(coord(x), coord(y), coord(z)));
            return py::make_tuple(sp.X, sp.Y, sp.Z);
        },
        py::arg("x"), py::arg("y"), py::arg("z"),
        "Gnomonic lift of a rational projective point onto the unit semi-sphere.");
}
