#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "krc/golden_data.hpp"
#include "krc/minimal.hpp"
#include "krc/perfect.hpp"

namespace py = pybind11;
using namespace krc;

namespace {

KRIndex make_index(const std::string& cartan, int r, int s) {
    return KRIndex{AffineType::parse(cartan), r, s};
}

std::vector<int> weight_coeffs(const Weight& w) { return w.coeffs; }

Weight weight_from(const AffineType& t, const std::vector<int>& coeffs) {
    return Weight(t, coeffs);
}

}  // namespace

PYBIND11_MODULE(_krc, m) {
    m.doc() = "Kirillov-Reshetikhin crystals for nonexceptional affine types";

    py::class_<AffineType>(m, "AffineType")
        .def_static("parse", &AffineType::parse)
        .def_property_readonly("rank", [](const AffineType& t) { return t.rank; })
        .def("dual_kac_labels", &AffineType::dual_kac_labels)
        .def("cartan_matrix", &AffineType::cartan_matrix)
        .def("__str__", &AffineType::to_string)
        .def("__repr__", &AffineType::to_string)
        .def("__eq__", [](const AffineType& a, const AffineType& b) { return a == b; });

    m.def("level", [](const std::string& cartan, const std::vector<int>& coeffs) {
        auto t = AffineType::parse(cartan);
        return weight_from(t, coeffs).level();
    },
          "level of a weight given by its Lambda coefficients");

    m.def("c_r", [](const std::string& cartan, int r) {
        return c_r(make_index(cartan, r, 1));
    });

    m.def("dominant_weights", [](const std::string& cartan, int ell) {
        std::vector<std::vector<int>> out;
        for (auto& w : enumerate_dominant(AffineType::parse(cartan), ell))
            out.push_back(w.coeffs);
        return out;
    });

    m.def("tau", [](const std::string& cartan, int r, int s, const std::vector<int>& coeffs) {
        auto idx = make_index(cartan, r, s);
        return tau(idx, weight_from(idx.type, coeffs)).coeffs;
    });

    py::class_<AffineCrystal, std::shared_ptr<AffineCrystal>>(m, "Crystal")
        .def_property_readonly("size", &AffineCrystal::size)
        .def_property_readonly("has_affine", &AffineCrystal::has_affine)
        .def("element", [](const AffineCrystal& c, int v) {
            return c.g.elements.at(v).one_line();
        })
        .def("find", [](const AffineCrystal& c, const std::string& s) {
            ClassicalType ct{c.idx.type.classical_family(), c.idx.type.rank};
            bool spin = !c.g.elements.empty() && c.g.elements[0].spin;
            return c.g.find(parse_tableau(ct, s, spin));
        })
        .def("f", [](const AffineCrystal& c, int i, int v) { return c.g.f(i, v); })
        .def("e", [](const AffineCrystal& c, int i, int v) { return c.g.e(i, v); })
        .def("eps", [](const AffineCrystal& c, int v) { return weight_coeffs(c.eps(v)); })
        .def("phi", [](const AffineCrystal& c, int v) { return weight_coeffs(c.phi(v)); })
        .def("weight", [](const AffineCrystal& c, int v) { return weight_coeffs(c.wt(v)); })
        .def("eps_i", [](const AffineCrystal& c, int i, int v) { return c.g.eps(i, v); })
        .def("phi_i", [](const AffineCrystal& c, int i, int v) { return c.g.phi(i, v); })
        .def("min_eps_level", &AffineCrystal::min_eps_level)
        .def("dot", [](const AffineCrystal& c) { return c.g.dot(); })
        .def("json", [](const AffineCrystal& c) { return c.g.json(); });

    m.def("build", [](const std::string& cartan, int r, int s) {
        return std::const_pointer_cast<AffineCrystal>(build_kr(make_index(cartan, r, s)));
    },
          py::arg("cartan"), py::arg("r"), py::arg("s"),
          "build (and memoize) the KR crystal B^{r,s}");

    m.def("classical_decomposition", [](const std::string& cartan, int r, int s) {
        std::vector<std::vector<int>> out;
        for (auto& w : classical_decomposition(make_index(cartan, r, s)))
            out.push_back(w.coeffs);
        return out;
    });

    m.def("check", [](const std::string& cartan, int r, int s) {
        auto idx = make_index(cartan, r, s);
        auto rep = verdict(idx);
        py::dict d;
        d["verdict"] = rep.verdict;
        d["level"] = rep.level;
        d["min_eps_level"] = rep.min_eps_level;
        d["agrees_with_conjecture"] = rep.agrees_with_conjecture;
        if (rep.verdict != "partial") {
            py::list classes;
            for (auto& [w, elems] : rep.minimal_classes) {
                py::dict cls;
                cls["eps"] = w.coeffs;
                cls["elements"] = elems;
                classes.append(cls);
            }
            d["minimal_classes"] = classes;
            d["tau"] = rep.tau_perm;
        }
        return d;
    },
          "run the Definition-2.2 checks and report the verdict");

    m.def("minimal_element", [](const std::string& cartan, int r, int s,
                                const std::vector<int>& coeffs) {
        auto idx = make_index(cartan, r, s);
        auto c = build_kr(idx);
        int v = minimal_element_id(*c, weight_from(idx.type, coeffs));
        return py::make_tuple(v, c->g.elements.at(v).one_line());
    },
          "the minimal element b with eps(b) = Lambda (affine families)");
}
