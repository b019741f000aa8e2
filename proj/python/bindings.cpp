#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "rebit/selftest.hpp"

namespace py = pybind11;
using namespace rebit;

namespace {

rebit::Tensor tensor_arg(const std::string& text) { return cli::tensor_from_json(cli::Json::parse(text)); }

}  // namespace

PYBIND11_MODULE(_rebit, m) {
    m.doc() = "Exact orbit classification for real 2x2x2x2 tensors (JSON in, JSON out)";

    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    static py::exception<MathError> math_error(m, "MathError", PyExc_ArithmeticError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            parse_error(e.what());
        } catch (const MathError& e) {
            math_error(e.what());
        } catch (const nlohmann::json::exception& e) {
            parse_error(e.what());
        }
    });

    m.def("classify", [](const std::string& s) { return cli::classify_json(tensor_arg(s)).dump(); }, py::arg("state"));
    m.def("decompose", [](const std::string& s) { return cli::decompose_json(tensor_arg(s)).dump(); },
          py::arg("state"));
    m.def("invariants", [](const std::string& s) { return cli::invariants_json(tensor_arg(s)).dump(); },
          py::arg("state"));
    m.def("h1", [](const std::string& g) { return cli::h1_json(g).dump(); }, py::arg("group"));
    m.def("run", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));

    py::class_<CriterionResult>(m, "CriterionResult")
        .def_readonly("id", &CriterionResult::id)
        .def_readonly("name", &CriterionResult::name)
        .def_readonly("passed", &CriterionResult::pass)
        .def_readonly("detail", &CriterionResult::detail)
        .def_readonly("seconds", &CriterionResult::seconds)
        .def("__repr__", [](const CriterionResult& r) {
            return "<criterion " + std::to_string(r.id) + " " + (r.pass ? "PASS" : "FAIL") + ">";
        });
    m.def("selftest", [](const std::vector<int>& only, std::uint64_t seed) {
        SelftestOptions opt;
        opt.only = only;
        opt.seed = seed;
        py::gil_scoped_release release;
        return run_selftest(opt);
    }, py::arg("only") = std::vector<int>{}, py::arg("seed") = SelftestOptions{}.seed);
}
