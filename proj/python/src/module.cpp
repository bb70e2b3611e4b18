#include "adelic/catalog.hpp"
#include "adelic/serialize.hpp"
#include "adelic/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace adelic;

namespace {

py::object to_fraction(const Rational& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(q.get_str());
}

Rational from_python(const py::handle& obj) { return parse_rational(py::str(obj).cast<std::string>()); }

struct System {
    std::shared_ptr<const LeviSystem> system;
    std::vector<NamedLeviElement> named;
};

System load_system(const std::string& text) {
    auto doc = system_from_json(parse_json(text));
    return {std::make_shared<const LeviSystem>(std::move(doc.system)), std::move(doc.named_elements)};
}

AdeleCharacter load_lambda(const System& s, const std::string& text) {
    auto lambda = lambda_from_json(parse_json(text));
    if (lambda.dim() != s.system->dim()) {
        throw DimensionError("character has dim " + std::to_string(lambda.dim()) + " but the system has dim " +
                             std::to_string(s.system->dim()));
    }
    return lambda;
}

std::string dump(const Json& j) { return canonical_dump(j); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact classification of characters of rational Levi systems";
    m.attr("__version__") = kToolVersion;

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("frac", [](const py::object& x) { return to_fraction(frac(from_python(x))); }, py::arg("x"));
    m.def("frac_p", [](const py::object& x, std::uint64_t p) { return to_fraction(frac_p(from_python(x), p)); },
          py::arg("x"), py::arg("p"));
    m.def("global_phase_zero", [](const py::object& x) { return global_phase_zero(from_python(x)); }, py::arg("x"));

    py::class_<System>(m, "System")
        .def_property_readonly("dim", [](const System& s) { return s.system->dim(); })
        .def_property_readonly("basis_names", [](const System& s) { return s.system->basis_names(); })
        .def("to_json", [](const System& s) { return dump(to_json(*s.system, s.named)); });

    m.def("load_system", &load_system, py::arg("text"));
    m.def("catalog_names", &catalog_names);
    m.def(
        "catalog_system",
        [](const std::string& name) {
            auto fx = catalog_fixture(name);
            return System{fx.system, fx.named_elements};
        },
        py::arg("name"));
    m.def(
        "catalog_lambdas",
        [](const std::string& name) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& [n, l] : catalog_fixture(name).lambdas) out.emplace_back(n, dump(to_json(l)));
            return out;
        },
        py::arg("name"));

    m.def(
        "eval",
        [](const System& s, const std::string& lambda, const std::vector<py::object>& x) {
            RatVector v;
            for (const auto& c : x) v.push_back(from_python(c));
            return to_fraction(eval(load_lambda(s, lambda), v).value());
        },
        py::arg("system"), py::arg("lambda_json"), py::arg("x"));
    m.def(
        "classify",
        [](const System& s, const std::string& lambda) {
            return dump(to_json(classify(load_lambda(s, lambda), *s.system, default_levi_samples(*s.system, s.named))));
        },
        py::arg("system"), py::arg("lambda_json"));
    m.def(
        "same_quasi_orbit",
        [](const System& s, const std::string& a, const std::string& b) {
            return same_quasi_orbit(load_lambda(s, a), load_lambda(s, b), *s.system);
        },
        py::arg("system"), py::arg("a_json"), py::arg("b_json"));
    m.def(
        "verify",
        [](const System& s, const std::string& suite, std::uint64_t seed, std::size_t lambdas, bool negative_control) {
            VerifyOptions opts{parse_suite(suite), seed, lambdas, negative_control};
            Json out = Json::array();
            for (const auto& r : run_verification(*s.system, s.named, opts)) out.push_back(to_json(r));
            return dump(out);
        },
        py::arg("system"), py::arg("suite") = "all", py::arg("seed") = 0, py::arg("lambdas") = 25,
        py::arg("negative_control") = false);
}
