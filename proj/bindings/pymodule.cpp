// Python bindings for the main operations: building groups from recipes or
// table files, the classification checks, exact spectra, and the
// fixed-point-free automorphism search.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "icayley/analysis.hpp"
#include "icayley/constructors.hpp"
#include "icayley/errors.hpp"
#include "icayley/group.hpp"
#include "icayley/io.hpp"
#include "icayley/morphisms.hpp"
#include "icayley/recipe.hpp"
#include "icayley/spectra.hpp"

namespace py = pybind11;
using namespace icayley;

namespace {

ConnectionSet set_from_tuple(const std::array<int, 3>& t) {
    std::array<Elem, 3> m{t[0], t[1], t[2]};
    std::sort(m.begin(), m.end());
    return ConnectionSet{m};
}

}  // namespace

PYBIND11_MODULE(icayley, m) {
    m.doc() = "finite group engine for the cubic integral Cayley graph classification";

    py::register_exception<Error>(m, "IcayleyError");

    py::class_<FiniteGroup>(m, "Group")
        .def_property_readonly("size", &FiniteGroup::size)
        .def_property_readonly("recipe", &FiniteGroup::recipe)
        .def("mul", &FiniteGroup::mul, py::arg("a"), py::arg("b"))
        .def("inv", &FiniteGroup::inv, py::arg("a"))
        .def("order", &FiniteGroup::order, py::arg("a"))
        .def("label", &FiniteGroup::label, py::arg("a"))
        .def("__len__", &FiniteGroup::size)
        .def("__repr__", [](const FiniteGroup& g) {
            std::string r = g.recipe().empty() ? "?" : g.recipe();
            return "Group(" + r + ", n=" + std::to_string(g.size()) + ")";
        });

    m.def("group", &group_from_recipe, py::arg("recipe"),
          "Build a group from a recipe string such as 'dihedral(3)' or "
          "'cyclic(2)^3 x builtin(Q8)'.");
    m.def("builtin_names", &builtin_names, "Names accepted by builtin(...).");
    m.def(
        "load_group",
        [](const std::string& path) { return load_group(path); }, py::arg("path"),
        "Load a multiplication table (cgt1 format).");
    m.def(
        "save_group",
        [](const FiniteGroup& g, const std::string& path) { save_group(g, path); },
        py::arg("group"), py::arg("path"), "Save a multiplication table (cgt1 format).");

    m.def("is_abelian", py::overload_cast<const FiniteGroup&>(&is_abelian), py::arg("group"));
    m.def("exponent", py::overload_cast<const FiniteGroup&>(&exponent), py::arg("group"));
    m.def(
        "has_property_p",
        [](const FiniteGroup& g) { return has_property_p(g).holds; }, py::arg("group"),
        "Whether every two-generator subgroup anchored at an involution is on "
        "the allowed list.");
    m.def(
        "in_a3_theorem",
        [](const FiniteGroup& g) { return in_a3_theorem(g).in_class; }, py::arg("group"),
        "Structural membership test for the all-cubic-Cayley-graphs-integral class.");
    m.def(
        "in_a3_spectral",
        [](const FiniteGroup& g, int ceiling) { return in_a3_spectral(g, ceiling).in_class; },
        py::arg("group"), py::arg("ceiling") = 256,
        "Spectral membership test: every cubic Cayley graph has an integral "
        "spectrum (decided by exact nullity sums).");
    m.def(
        "verify_family",
        [](const FiniteGroup& g, const std::string& family) {
            if (family.size() != 1) throw PreconditionViolated("family must be a/b/c/d");
            return verify_family(g, family[0]).ok;
        },
        py::arg("group"), py::arg("family"),
        "Check the defining axioms of one of the four nonabelian families.");

    m.def(
        "connection_sets",
        [](const FiniteGroup& g) {
            py::list out;
            for (const auto& s : enumerate_3_subsets(g))
                out.append(py::make_tuple(s.members[0], s.members[1], s.members[2]));
            return out;
        },
        py::arg("group"), "All inverse-closed 3-subsets of nonidentity elements.");
    m.def(
        "spectrum",
        [](const FiniteGroup& g, const std::array<int, 3>& set, int ceiling) {
            auto rep = integral_spectrum_3valent(g, set_from_tuple(set), ceiling);
            py::dict d;
            for (int k = -3; k <= 3; ++k)
                if (rep.multiplicity(k) > 0) d[py::int_(k)] = rep.multiplicity(k);
            return py::make_tuple(d, rep.integral);
        },
        py::arg("group"), py::arg("set"), py::arg("ceiling") = 256,
        "Eigenvalue multiplicities of one cubic Cayley graph as ({eigenvalue: "
        "multiplicity}, integral). Multiplicities outside -3..3 never occur; "
        "integral is False when the listed multiplicities do not sum to the "
        "group order.");

    m.def(
        "automorphism_count",
        [](const FiniteGroup& g) { return automorphism_group(g).size(); }, py::arg("group"));
    m.def(
        "find_order3_fpf",
        [](const FiniteGroup& g) -> std::optional<std::vector<Elem>> {
            auto phi = find_order3_fpf(g);
            if (!phi) return std::nullopt;
            return phi->img;
        },
        py::arg("group"),
        "Image vector of an order-3 fixed-point-free automorphism, or None "
        "after an exhaustive refutation.");
}
