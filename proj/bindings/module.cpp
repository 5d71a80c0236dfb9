// Python bindings: the main operations, reported as JSON strings that the
// zscheme package parses into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zscheme/parser.hpp"
#include "zscheme/report_json.hpp"

namespace py = pybind11;
using namespace zscheme;

namespace {

RegularModel model_from_selector(const std::string& sel) {
    if (sel.rfind("pn:", 0) == 0) return projective_space_model(std::stoi(sel.substr(3)));
    if (sel.rfind("flag:", 0) == 0) return flag_model_a(std::stoi(sel.substr(5)));
    throw Error(Errc::BadInput, "model selector must be pn:N or flag:L");
}

HessenbergSpace omega_from_spec(int rank, const std::string& spec) {
    if (spec == "peterson") return peterson_omega(rank);
    if (spec == "full") return make_hessenberg_space(rank, build_type_a(rank).negative_roots());
    return parse_omega(spec, rank);
}

/// Value-semantics wrapper so Python holds the model and its Z-scheme caches.
class PyZScheme {
public:
    explicit PyZScheme(const std::string& selector)
        : model_(model_from_selector(selector)), z_(zscheme_ideal(model_)) {}

    PyZScheme(std::vector<std::string> coordinates, std::vector<int> weights,
              const std::map<std::string, std::string>& v_images) {
        RingPtr ring = WeightedRing::make(coordinates, weights);
        std::vector<PolyQ> images;
        for (const auto& name : coordinates) {
            auto it = v_images.find(name);
            if (it == v_images.end())
                throw Error(Errc::BadInput, "missing V(" + name + ")");
            images.push_back(parse_polynomial(it->second, ring));
        }
        model_ = custom_model(ring, std::move(images));
        z_.emplace(zscheme_ideal(model_));
    }

    std::string provenance() const { return model_.provenance_str(); }
    std::vector<std::string> coordinates() const { return model_.ring->vars(); }
    std::vector<int> weights() const { return model_.ring->weights(); }

    std::vector<std::string> generators() const {
        std::vector<std::string> out;
        for (const auto& g : z_->generators()) out.push_back(g.str());
        return out;
    }
    int flat_degree_py() const { return flat_degree(*z_); }
    int euler() const { return euler_characteristic(model_); }

    std::string jacobian() const { return jacobian_class(*z_).str(); }

    std::string trace_py(const std::string& expr) const {
        return pf_trace(*z_, parse_polynomial(expr, z_->xv_ring())).str("v");
    }
    std::string integrate_py(const std::string& expr) const {
        return equivariant_integral(*z_, parse_polynomial(expr, z_->xv_ring())).value.str("v");
    }
    std::string integrate_jacobian() const {
        return equivariant_integral(*z_, jacobian_class(*z_)).value.str("v");
    }
    std::string fiber_sum(const std::string& expr, const std::string& v0) const {
        return fiber_sum_oracle(*z_, parse_polynomial(expr, z_->xv_ring()), Rational::parse(v0))
            .str();
    }
    std::string component_restriction_py(const std::string& expr, int m) const {
        return component_restriction(*z_, parse_polynomial(expr, z_->xv_ring()), m).str("v");
    }
    std::string normal_form_py(const std::string& expr) const {
        return normal_form(parse_polynomial(expr, z_->xv_ring()), z_->gb_xv()).str();
    }
    std::string present_json() const { return present_report(model_).dump(); }

    std::map<std::string, std::string> fiber_py(const std::string& v0) const {
        const FiberDecomposition fd = fiber(*z_, Rational::parse(v0));
        std::map<std::string, std::string> out;
        out["dimension"] = std::to_string(fd.dimension);
        out["reduced"] = fd.reduced ? "true" : "false";
        out["trace_form_det"] = fd.trace_form_det.str();
        for (std::size_t i = 0; i < fd.char_polys.size(); ++i)
            out["charpoly_" + model_.ring->var_name(static_cast<int>(i))] =
                fd.char_polys[i].str("x");
        return out;
    }

private:
    RegularModel model_;
    std::optional<ZSchemeIdeal> z_;
};

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact equivariant cohomology of regular B-varieties";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<PyZScheme>(m, "ZScheme")
        .def(py::init<const std::string&>(), py::arg("selector"),
             "Build from a selector: pn:N or flag:L")
        .def(py::init<std::vector<std::string>, std::vector<int>,
                      const std::map<std::string, std::string>&>(),
             py::arg("coordinates"), py::arg("weights"), py::arg("v_images"),
             "Build a custom model from coordinates, weights and V images")
        .def("provenance", &PyZScheme::provenance)
        .def("coordinates", &PyZScheme::coordinates)
        .def("weights", &PyZScheme::weights)
        .def("generators", &PyZScheme::generators)
        .def("flat_degree", &PyZScheme::flat_degree_py)
        .def("euler", &PyZScheme::euler)
        .def("jacobian", &PyZScheme::jacobian)
        .def("trace", &PyZScheme::trace_py, py::arg("expr"))
        .def("integrate", &PyZScheme::integrate_py, py::arg("expr"))
        .def("integrate_jacobian", &PyZScheme::integrate_jacobian)
        .def("fiber_sum", &PyZScheme::fiber_sum, py::arg("expr"), py::arg("v0"))
        .def("component_restriction", &PyZScheme::component_restriction_py, py::arg("expr"),
             py::arg("m"))
        .def("normal_form", &PyZScheme::normal_form_py, py::arg("expr"))
        .def("fiber", &PyZScheme::fiber_py, py::arg("v0"))
        .def("present_json", &PyZScheme::present_json);

    m.def(
        "parse",
        [](const std::string& expr, const std::vector<std::string>& vars,
           const std::vector<int>& weights) {
            return parse_polynomial(expr, WeightedRing::make(vars, weights)).str();
        },
        py::arg("expr"), py::arg("vars"), py::arg("weights"),
        "Parse an expression and return its expanded canonical form");

    m.def(
        "present_json",
        [](const std::string& selector) { return present_report(model_from_selector(selector)).dump(); },
        py::arg("selector"));

    m.def(
        "hessenberg_json",
        [](int rank, const std::string& omega) {
            return hessenberg_report(rank, omega_from_spec(rank, omega)).dump();
        },
        py::arg("rank"), py::arg("omega"));

    m.def(
        "product_formula",
        [](int rank, const std::string& omega_spec) {
            const ProductFormulaResult pf = product_formula(omega_from_spec(rank, omega_spec));
            py::dict d;
            d["is_polynomial"] = pf.is_polynomial;
            d["value_q"] = pf.is_polynomial ? pf.value_q.str("q") : pf.ratio;
            d["nonnegative"] = pf.nonnegative;
            return d;
        },
        py::arg("rank"), py::arg("omega"));

    m.def(
        "fixed_point_count",
        [](int rank, const std::string& omega_spec) {
            return hessenberg_fixed_points(omega_from_spec(rank, omega_spec)).size();
        },
        py::arg("rank"), py::arg("omega"));

    m.def(
        "valid_omegas",
        [](int rank) {
            std::vector<std::string> out;
            for (const auto& o : enumerate_valid_omegas(rank)) out.push_back(o.str());
            return out;
        },
        py::arg("rank"));

    m.def(
        "verify_json",
        [](const std::string& suite) {
            return verify_report(suite, run_verify(suite), false).dump();
        },
        py::arg("suite"));
}
