#include "dec/io.hpp"
#include "dec/maps.hpp"
#include "dec/operators.hpp"
#include "dec/verify.hpp"
#include "dec/whitney.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

// Scalars cross the boundary as "p/q" strings so nothing is rounded.
std::map<std::string, std::string> values_dict(const dec::Cochain& a) {
    std::map<std::string, std::string> out;
    for (const auto& [s, v] : a.values()) out[dec::simplex_str(s)] = dec::to_string(v);
    return out;
}

dec::WedgeMethod parse_method(const std::string& name) {
    if (name == "perm") return dec::WedgeMethod::PermutationSum;
    if (name == "avg-left") return dec::WedgeMethod::AverageOuterLeft;
    if (name == "avg-right") return dec::WedgeMethod::AverageOuterRight;
    throw py::value_error("method must be one of 'perm', 'avg-left', 'avg-right'");
}

}  // namespace

PYBIND11_MODULE(decpy, m) {
    m.doc() = "Exact discrete exterior calculus on simplicial cochains";

    py::register_exception<dec::Error>(m, "DecError");

    py::class_<dec::SimplicialComplex>(m, "SimplicialComplex")
        .def_static("closure", &dec::SimplicialComplex::closure, "top_simplices"_a,
                    "Face closure of the listed top simplices (integer vertex lists).")
        .def_property_readonly("dimension", &dec::SimplicialComplex::dimension)
        .def("contains", &dec::SimplicialComplex::contains, "canonical"_a)
        .def("euler_characteristic", &dec::SimplicialComplex::euler_characteristic)
        .def("simplex_count", [](const dec::SimplicialComplex& c, int k) {
            return c.simplices(k).size();
        }, "k"_a);

    py::class_<dec::Cochain>(m, "Cochain")
        .def(py::init<int>(), "degree"_a)
        .def_property_readonly("degree", &dec::Cochain::degree)
        .def("set", [](dec::Cochain& a, const dec::Simplex& s, const std::string& v) {
            a.set(s, dec::parse_rational(v));
        }, "oriented"_a, "value"_a, "Value as an exact 'p/q' string.")
        .def("eval", [](const dec::Cochain& a, const dec::Simplex& s) {
            return dec::to_string(a.eval(s));
        }, "oriented"_a)
        .def("values", &values_dict)
        .def("is_zero", &dec::Cochain::is_zero)
        .def("__eq__", [](const dec::Cochain& a, const dec::Cochain& b) { return a == b; });

    py::class_<dec::SimplicialMap>(m, "SimplicialMap")
        .def(py::init<const dec::SimplicialComplex&, const dec::SimplicialComplex&,
                      std::map<dec::VertexId, dec::VertexId>>(),
             "source"_a, "target"_a, "vertex_map"_a, py::keep_alive<1, 2>(),
             py::keep_alive<1, 3>());

    m.def("d", &dec::d, "complex"_a, "cochain"_a, "Discrete exterior derivative.");
    m.def("wedge", [](const dec::SimplicialComplex& c, const dec::Cochain& a,
                      const dec::Cochain& b, const std::string& method) {
        return dec::wedge(c, a, b, parse_method(method));
    }, "complex"_a, "a"_a, "b"_a, "method"_a = "avg-left");
    m.def("wilson_product", [](const dec::SimplicialComplex& c, const dec::Cochain& a,
                               const dec::Cochain& b, bool symbolic) {
        return dec::wilson_product(c, a, b,
                                   symbolic ? dec::WilsonPath::Symbolic
                                            : dec::WilsonPath::ClosedForm);
    }, "complex"_a, "a"_a, "b"_a, "symbolic"_a = true,
        "Wedge through Whitney interpolation and exact integration.");
    m.def("pullback", &dec::pullback, "map"_a, "cochain"_a);
    m.def("verify", [](const dec::SimplicialComplex& c, int trials, std::uint64_t seed) {
        dec::VerifyOptions opt;
        opt.trials = trials;
        opt.seed = seed;
        std::map<std::string, std::string> out;
        for (const auto& r : dec::run_verification(c, opt)) {
            out[r.name] = r.status == dec::PropertyStatus::Pass   ? "pass"
                          : r.status == dec::PropertyStatus::Skip ? "skipped"
                                                                  : "fail: " + r.witness;
        }
        return out;
    }, "complex"_a, "trials"_a = 25, "seed"_a = 0);
}
