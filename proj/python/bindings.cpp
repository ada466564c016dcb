// Python bindings for the cliffdef core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cliffdef/ag_codes.hpp"
#include "cliffdef/analysis.hpp"
#include "cliffdef/clifford.hpp"
#include "cliffdef/errors.hpp"
#include "cliffdef/families.hpp"
#include "cliffdef/half_int.hpp"
#include "cliffdef/semigroup.hpp"

namespace py = pybind11;
using namespace cliffdef;

namespace {

py::dict family_result_dict(const FamilyResult& fr) {
    py::dict d;
    d["family"] = std::string(family_name(fr.family));
    py::dict params;
    for (const auto& [k, v] : fr.params) params[py::str(k)] = v;
    d["params"] = params;
    d["genus"] = fr.genus_formula;
    d["conductor"] = fr.conductor_formula;
    d["argmax"] = fr.argmax_closed_form;
    if (fr.defect_closed_form)
        d["defect"] = *fr.defect_closed_form;
    else
        d["defect"] = py::none();
    if (fr.semigroup)
        d["semigroup"] = *fr.semigroup;
    else
        d["semigroup"] = py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(_cliffdef, mod) {
    mod.doc() = "Clifford defects of numerical semigroups";

    py::register_exception<NotNumerical>(mod, "NotNumericalError", PyExc_ValueError);
    py::register_exception<UnsupportedParameters>(mod, "UnsupportedParametersError",
                                                  PyExc_ValueError);
    py::register_exception<Error>(mod, "CliffdefError", PyExc_ValueError);

    py::class_<HalfInt>(mod, "HalfInt")
        .def(py::init([](std::int64_t twice) { return HalfInt::from_twice(twice); }),
             py::arg("twice"))
        .def_readonly("twice", &HalfInt::twice)
        .def_property_readonly("value", [](const HalfInt& h) { return h.twice / 2.0; })
        .def("is_integer", &HalfInt::is_integer)
        .def("as_integer", &HalfInt::as_integer)
        .def("__float__", [](const HalfInt& h) { return h.twice / 2.0; })
        .def("__eq__", [](const HalfInt& a, const HalfInt& b) { return a == b; })
        .def("__lt__", [](const HalfInt& a, const HalfInt& b) { return a < b; })
        .def("__le__", [](const HalfInt& a, const HalfInt& b) { return a <= b; })
        .def("__hash__", [](const HalfInt& h) { return py::hash(py::int_(h.twice)); })
        .def("__repr__", [](const HalfInt& h) { return "HalfInt(" + h.str() + ")"; })
        .def("__str__", &HalfInt::str);

    py::class_<NumericalSemigroup>(mod, "NumericalSemigroup")
        .def_static("from_generators", &NumericalSemigroup::from_generators, py::arg("gens"))
        .def_static("from_membership", &NumericalSemigroup::from_membership, py::arg("bits"))
        .def_property_readonly("generators", &NumericalSemigroup::generators)
        .def_property_readonly("genus", &NumericalSemigroup::genus)
        .def_property_readonly("frobenius", &NumericalSemigroup::frobenius)
        .def_property_readonly("conductor", &NumericalSemigroup::conductor)
        .def_property_readonly("multiplicity", &NumericalSemigroup::multiplicity)
        .def("contains", &NumericalSemigroup::contains, py::arg("x"))
        .def("__contains__", &NumericalSemigroup::contains)
        .def("count_up_to", &NumericalSemigroup::count_up_to, py::arg("x"))
        .def("apery_set", &NumericalSemigroup::apery_set, py::arg("n"))
        .def("is_symmetric", &NumericalSemigroup::is_symmetric)
        .def("is_sparse", &NumericalSemigroup::is_sparse)
        .def("phi", &NumericalSemigroup::phi, py::arg("x"))
        .def("has_max_embedding_dimension", &NumericalSemigroup::has_max_embedding_dimension)
        .def("derived_semigroup", &NumericalSemigroup::derived_semigroup)
        .def("__eq__", [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
            return a == b;
        })
        .def("__repr__", [](const NumericalSemigroup& s) {
            std::string r = "NumericalSemigroup.from_generators([";
            const auto& g = s.generators();
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (i) r += ", ";
                r += std::to_string(g[i]);
            }
            return r + "])";
        });

    mod.def("sigma", &sigma, py::arg("s"), py::arg("x"));
    mod.def("delta", &delta, py::arg("s"), py::arg("a"));
    mod.def("clifford_defect", &clifford_defect, py::arg("s"));
    mod.def("duursma_defect", &duursma_defect, py::arg("s"));
    mod.def(
        "clifford_argmax",
        [](const NumericalSemigroup& s) { return profile(s, DomainKind::RestrictedToS).argmax; },
        py::arg("s"));
    mod.def(
        "sigma_compare",
        [](const NumericalSemigroup& s, std::int64_t a, std::int64_t b) {
            switch (sigma_compare(s, a, b)) {
                case Ordering::Less: return -1;
                case Ordering::Greater: return 1;
                default: return 0;
            }
        },
        py::arg("s"), py::arg("s1"), py::arg("s2"));

    mod.def(
        "analyze",
        [](const NumericalSemigroup& s) {
            return py::module_::import("json").attr("loads")(to_json(analyze(s)).dump());
        },
        py::arg("s"), "Full analysis report as a plain dict.");

    mod.def(
        "interval",
        [](std::int64_t m, std::int64_t h, std::int64_t cap) {
            return family_result_dict(interval(m, h, cap));
        },
        py::arg("m"), py::arg("h"), py::arg("conductor_cap") = kDefaultConductorCap);
    mod.def(
        "klein",
        [](std::int64_t m, std::int64_t cap) { return family_result_dict(klein(m, cap)); },
        py::arg("m"), py::arg("conductor_cap") = kDefaultConductorCap);
    mod.def(
        "hermitian_quotient",
        [](std::int64_t m, std::int64_t q, std::int64_t cap) {
            return family_result_dict(hermitian_quotient(m, q, cap));
        },
        py::arg("m"), py::arg("q"), py::arg("conductor_cap") = kDefaultConductorCap);
    mod.def(
        "pedersen_sorensen",
        [](std::int64_t q0, std::int64_t t, std::int64_t cap) {
            return family_result_dict(pedersen_sorensen(q0, t, cap));
        },
        py::arg("q0"), py::arg("t"), py::arg("conductor_cap") = kDefaultConductorCap);
    mod.def(
        "suzuki",
        [](std::int64_t q0, std::int64_t cap) { return family_result_dict(suzuki(q0, cap)); },
        py::arg("q0"), py::arg("conductor_cap") = kDefaultConductorCap);
    mod.def(
        "norm_trace",
        [](std::int64_t q, std::int64_t r, std::int64_t cap) {
            return family_result_dict(norm_trace(q, r, cap));
        },
        py::arg("q"), py::arg("r"), py::arg("conductor_cap") = kDefaultConductorCap);
    mod.def(
        "hyperelliptic",
        [](std::int64_t g, std::int64_t cap) { return family_result_dict(hyperelliptic(g, cap)); },
        py::arg("g"), py::arg("conductor_cap") = kDefaultConductorCap);

    mod.def("suzuki_fast_count", &suzuki_fast_count, py::arg("q0"), py::arg("s"));
    mod.def("norm_trace_fast_count", &norm_trace_fast_count, py::arg("q"), py::arg("r"),
            py::arg("s"));
    mod.def("interval_contains", &interval_contains, py::arg("m"), py::arg("h"), py::arg("x"));
    mod.def("hermitian_quotient_contains", &hermitian_quotient_contains, py::arg("m"),
            py::arg("q"), py::arg("x"));

    mod.def(
        "bound_report",
        [](const NumericalSemigroup& s, std::int64_t m) {
            CodeBoundReport r = bound_report(s, m);
            py::dict d;
            d["m"] = r.m;
            d["genus"] = r.genus;
            d["duursma_defect"] = r.duursma;
            d["rr_raw"] = r.rr_raw;
            d["rr_bound"] = r.rr_bound;
            d["clifford_raw"] = r.clifford_raw;
            d["clifford_bound"] = r.clifford_bound;
            d["exact_dimension"] = r.exact_dimension;
            d["winner"] = r.winner == CodeBoundReport::Winner::Clifford ? "clifford"
                          : r.winner == CodeBoundReport::Winner::RiemannRoch ? "riemann-roch"
                                                                             : "tie";
            if (r.clifford_wins_interval)
                d["clifford_wins_interval"] =
                    py::make_tuple(r.clifford_wins_interval->first, r.clifford_wins_interval->second);
            else
                d["clifford_wins_interval"] = py::none();
            return d;
        },
        py::arg("s"), py::arg("m"));
    mod.def("ma_capability", &ma_capability, py::arg("s"), py::arg("d"));
}
