// pybind11 bindings for the main operations. Matrices cross the boundary as
// flat row-major complex lists to keep the interface dependency-free.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quiverinv/driver.hpp"
#include "quiverinv/invariants.hpp"
#include "quiverinv/normal_form.hpp"

namespace py = pybind11;
using namespace quiverinv;

namespace {

SquareMatrix matrix_from_list(int n, const std::vector<Complex>& entries) {
    return SquareMatrix(n, entries);
}

std::vector<std::vector<Complex>> matrices_to_lists(const std::vector<SquareMatrix>& ms) {
    std::vector<std::vector<Complex>> out;
    out.reserve(ms.size());
    for (const SquareMatrix& m : ms) out.push_back(m.entries());
    return out;
}

RepPoint rep_from_lists(int m, int n, const std::vector<std::vector<Complex>>& xs) {
    std::vector<SquareMatrix> mats;
    mats.reserve(xs.size());
    for (const auto& e : xs) mats.push_back(SquareMatrix(n, e));
    return RepPoint(QuiverShape(m, n), std::move(mats));
}

DoubleRepPoint double_from_lists(int m, int n, const std::vector<std::vector<Complex>>& xs,
                                 const std::vector<std::vector<Complex>>& ys) {
    std::vector<SquareMatrix> xm, ym;
    for (const auto& e : xs) xm.push_back(SquareMatrix(n, e));
    for (const auto& e : ys) ym.push_back(SquareMatrix(n, e));
    return DoubleRepPoint(QuiverShape(m, n), std::move(xm), std::move(ym));
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "cyclic-quiver invariant theory toolkit";

    // Translators run newest-first: register the base before the leaves.
    py::register_exception<Error>(mod, "QuiverError");
    py::register_exception<InputError>(mod, "InputError");
    py::register_exception<NotGeneric>(mod, "NotGenericError");

    py::class_<QuiverShape>(mod, "QuiverShape")
        .def(py::init<int, int>(), py::arg("m"), py::arg("n"))
        .def_readonly("m", &QuiverShape::m)
        .def_readonly("n", &QuiverShape::n);

    py::class_<RepPoint>(mod, "RepPoint")
        .def(py::init(&rep_from_lists), py::arg("m"), py::arg("n"), py::arg("x"),
             "m matrices given as flat row-major complex lists")
        .def_property_readonly("m", [](const RepPoint& p) { return p.shape.m; })
        .def_property_readonly("n", [](const RepPoint& p) { return p.shape.n; })
        .def_property_readonly("x", [](const RepPoint& p) { return matrices_to_lists(p.x); });

    py::class_<DoubleRepPoint>(mod, "DoubleRepPoint")
        .def(py::init(&double_from_lists), py::arg("m"), py::arg("n"), py::arg("x"), py::arg("y"))
        .def_property_readonly("m", [](const DoubleRepPoint& p) { return p.shape.m; })
        .def_property_readonly("n", [](const DoubleRepPoint& p) { return p.shape.n; })
        .def_property_readonly("x", [](const DoubleRepPoint& p) { return matrices_to_lists(p.x); })
        .def_property_readonly("y", [](const DoubleRepPoint& p) { return matrices_to_lists(p.y); });

    py::class_<GaugeElement>(mod, "GaugeElement")
        .def_property_readonly("g", [](const GaugeElement& g) { return matrices_to_lists(g.g); });

    mod.def("matrix", &matrix_from_list, py::arg("n"), py::arg("entries"));

    mod.def(
        "random_rep",
        [](int m, int n, std::uint64_t seed) { return random_rep(QuiverShape(m, n), seed); },
        py::arg("m"), py::arg("n"), py::arg("seed"));
    mod.def(
        "random_gauge",
        [](int m, int n, std::uint64_t seed) { return random_gauge(QuiverShape(m, n), seed); },
        py::arg("m"), py::arg("n"), py::arg("seed"));
    mod.def(
        "random_z_point",
        [](int m, int n, std::uint64_t seed) { return random_Z_point(QuiverShape(m, n), seed); },
        py::arg("m"), py::arg("n"), py::arg("seed"));

    mod.def("act_gauge", &act_gauge);
    mod.def("act_gauge_double", &act_gauge_double);
    mod.def("cycle_product", [](const RepPoint& p) { return cycle_product(p).entries(); });
    mod.def("moment_residual_norm", &moment_residual_norm);
    mod.def("is_generic", [](const RepPoint& p) { return is_generic(p).generic; });

    mod.def(
        "embed_l",
        [](const std::vector<Complex>& z, int m) { return embed_L(LPoint{z}, m); },
        py::arg("z"), py::arg("m"));
    mod.def(
        "embed_ll",
        [](const std::vector<Complex>& z, const std::vector<Complex>& zp, int m) {
            return embed_LL(LLPoint{z, zp}, m);
        },
        py::arg("z"), py::arg("zp"), py::arg("m"));

    mod.def("charpoly_invariant", &eval_charpoly_invariant, py::arg("k"), py::arg("p"));
    mod.def(
        "trace_word",
        [](int r, int s, const DoubleRepPoint& p) {
            return eval_trace_word(TraceWord(r, s, p.shape.m), p);
        },
        py::arg("r"), py::arg("s"), py::arg("p"));
    mod.def(
        "e_zm", [](int k, const std::vector<Complex>& z, int m) { return eval_e_zm(k, LPoint{z}, m); },
        py::arg("k"), py::arg("z"), py::arg("m"));
    mod.def(
        "p_rs",
        [](int r, int s, const std::vector<Complex>& z, const std::vector<Complex>& zp) {
            return eval_p_rs(r, s, LLPoint{z, zp});
        },
        py::arg("r"), py::arg("s"), py::arg("z"), py::arg("zp"));

    mod.def("canonical_form", [](const RepPoint& p) { return to_canonical_L(p).z; });
    mod.def("orbit_equal",
            [](const RepPoint& p, const RepPoint& q) { return orbit_equal(p, q); });
    mod.def("z1_normal_form", [](const DoubleRepPoint& p) {
        const Z1NormalForm nf = z1_normal_form(p);
        return py::make_tuple(nf.d, nf.e);
    });
    mod.def("canonicalize_double", [](const DoubleRepPoint& p) {
        const CanonicalDouble c = canonicalize_double(p);
        py::dict out;
        out["on_saturation"] = c.status == SaturationStatus::OnSaturation;
        out["z"] = c.z;
        out["zp"] = c.zp;
        out["offdiagonal_residual"] = c.offdiagonal_residual;
        return out;
    });

    mod.def(
        "molien_L",
        [](int n, int m, int max_degree) {
            const MolienSeries s = molien(wreath_enumerate(n, m), WreathRep::L, max_degree);
            std::vector<long> out;
            for (const BigRational& c : s.coefficients) out.push_back(c.to_long());
            return out;
        },
        py::arg("n"), py::arg("m"), py::arg("max_degree"));
    mod.def(
        "molien_LL",
        [](int n, int m, int max_degree) {
            const MolienSeries s = molien(wreath_enumerate(n, m), WreathRep::LL, max_degree);
            std::vector<long> out;
            for (const BigRational& c : s.coefficients) out.push_back(c.to_long());
            return out;
        },
        py::arg("n"), py::arg("m"), py::arg("max_degree"));
    mod.def(
        "molien_closed_form_L",
        [](int n, int m, int max_degree) {
            const MolienSeries s = molien_closed_form_L(n, m, max_degree);
            std::vector<long> out;
            for (const BigRational& c : s.coefficients) out.push_back(c.to_long());
            return out;
        },
        py::arg("n"), py::arg("m"), py::arg("max_degree"));

    mod.def(
        "generation_check",
        [](int n, int m, int d, int R, const std::string& rep) {
            const GenerationReport g =
                generation_check(n, m, d, R, rep == "L" ? WreathRep::L : WreathRep::LL);
            py::dict out;
            out["n"] = g.n;
            out["m"] = g.m;
            out["d"] = g.d;
            out["R"] = g.generator_cutoff;
            out["molien_dim"] = g.molien_dim;
            out["span_dim"] = g.span_dim;
            out["verdict"] = g.verdict;
            return out;
        },
        py::arg("n"), py::arg("m"), py::arg("d"), py::arg("R"), py::arg("rep") = "LL");

    mod.def(
        "jacobian_check",
        [](int n, int m, int trials, std::uint64_t seed) {
            const JacobianCheck jc = jacobian_check(n, m, trials, seed);
            py::dict out;
            out["mean_constant"] = jc.mean_constant;
            out["relative_spread"] = jc.relative_spread;
            out["exact_mode_ran"] = jc.exact_mode_ran;
            out["proportional"] = jc.proportional;
            out["exact_constant"] = jc.exact_constant.to_string();
            return out;
        },
        py::arg("n"), py::arg("m"), py::arg("trials") = 50, py::arg("seed") = 42);

    mod.def(
        "rho_identity_residual",
        [](const std::vector<Complex>& z, int m, int k) {
            return rho_identity_residual(LPoint{z}, m, k);
        },
        py::arg("z"), py::arg("m"), py::arg("k"));
    mod.def(
        "phi_identity_residual",
        [](const std::vector<Complex>& z, const std::vector<Complex>& zp, int m, int r, int s) {
            return phi_identity_residual(LLPoint{z, zp}, m, r, s);
        },
        py::arg("z"), py::arg("zp"), py::arg("m"), py::arg("r"), py::arg("s"));

    mod.attr("__version__") = "0.1.0";
}
