#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frobalg/io.hpp"

namespace py = pybind11;
using namespace frobalg;

namespace {

RunOptions make_options(std::uint64_t seed, std::size_t trials, std::size_t symbolic_cap) {
    RunOptions opt;
    opt.seed = seed;
    opt.trials = trials;
    opt.symbolic_cap = symbolic_cap;
    opt.format = "structured";
    return opt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact decision procedures for Frobenius and separability properties of\n"
              "rational algebras, algebra extensions and wreath products";

    py::register_exception<ParseError>(m, "SpecParseError", PyExc_ValueError);
    py::register_exception<SpecValidationError>(m, "SpecValidationError", PyExc_ValueError);
    py::register_exception<SymbolicCapExceeded>(m, "SymbolicCapExceeded", PyExc_RuntimeError);

    m.def(
        "run",
        [](const std::string& command, const std::string& spec_text, std::uint64_t seed,
           std::size_t trials, std::size_t symbolic_cap) {
            SpecFile spec = parse_spec(spec_text);
            RunReport rep = run_command(command, spec, make_options(seed, trials, symbolic_cap));
            return render_structured(rep);
        },
        py::arg("command"), py::arg("spec"), py::arg("seed") = 1, py::arg("trials") = 32,
        py::arg("symbolic_cap") = 6,
        "Runs one command (check-frobenius, check-separable, nakayama, check-extension,\n"
        "check-wreath, crosscheck) on a JSON spec string; returns the structured report "
        "as a JSON string.");

    m.def(
        "export_builtin",
        [](const std::string& name, const std::vector<std::size_t>& params) {
            Algebra a = builtin(name, params);
            std::string spec_name = name;
            for (auto p : params) spec_name += "_" + std::to_string(p);
            return algebra_spec_text(a, spec_name, a.name);
        },
        py::arg("name"), py::arg("params") = std::vector<std::size_t>{},
        "Returns the spec document for a builtin algebra as a JSON string.");

    m.def("render_text", [](const std::string& command, const std::string& spec_text,
                            std::uint64_t seed) {
        SpecFile spec = parse_spec(spec_text);
        RunOptions opt = make_options(seed, 32, 6);
        return render_text(run_command(command, spec, opt));
    },
    py::arg("command"), py::arg("spec"), py::arg("seed") = 1);

    m.attr("builtin_names") =
        std::vector<std::string>{"field", "group_algebra", "matrix_algebra", "truncated_poly",
                                 "upper_triangular"};
    m.attr("commands") = std::vector<std::string>{"check-frobenius", "check-separable", "nakayama",
                                                  "check-extension", "check-wreath", "crosscheck"};
#ifdef VERSION_INFO
#define FROBALG_STR2(x) #x
#define FROBALG_STR(x) FROBALG_STR2(x)
    m.attr("__version__") = FROBALG_STR(VERSION_INFO);
#else
    m.attr("__version__") = "0.1.0";
#endif
}
