#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wlab/serialize.hpp"

namespace py = pybind11;
using namespace wlab;

namespace {

// Results cross the boundary as plain dicts/lists with rationals rendered
// as "num/den" strings; json round-trip keeps the shapes identical to the
// CLI output.
py::object to_py(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::list poly_list(const Poly& p) {
    py::list out;
    for (const auto& c : p.coeffs())
        out.append(c.str());
    return out;
}

OracleOptions opts_for(unsigned workers) {
    OracleOptions opts;
    opts.workers = workers;
    return opts;
}

} // namespace

PYBIND11_MODULE(_wlab, m) {
    m.doc() = "Exact constant-term residues, W_{2,p} characters and Zhu center data";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    // residues
    m.def(
        "brute_residue",
        [](int n, long i, int p, int m_, bool include_log, unsigned workers) {
            Json j;
            {
                py::gil_scoped_release release;
                j = json_of(brute_residue({n, i, p, m_, include_log}, opts_for(workers)));
            }
            return to_py(j);
        },
        py::arg("n"), py::arg("i"), py::arg("p"), py::arg("m") = 0,
        py::arg("include_log") = true, py::arg("workers") = 0);
    m.def(
        "brute_residue_at",
        [](int n, long i, int p, int m_, const std::string& t, bool include_log) {
            return brute_residue_at({n, i, p, m_, include_log}, Rational::parse(t)).str();
        },
        py::arg("n"), py::arg("i"), py::arg("p"), py::arg("m"), py::arg("t"),
        py::arg("include_log") = true);
    m.def("log_order_bound",
          [](int n, long i, int p, int m_) { return log_order_bound({n, i, p, m_}); },
          py::arg("n"), py::arg("i"), py::arg("p"), py::arg("m") = 0);

    // recursion solver
    m.def(
        "closed_form",
        [](int n, long i, int p, std::optional<std::string> base) {
            std::optional<Rational> b;
            if (base)
                b = Rational::parse(*base);
            return to_py(json_of(closed_form(n, i, p, b)));
        },
        py::arg("n"), py::arg("i"), py::arg("p"), py::arg("base") = py::none());
    m.def(
        "step_factor",
        [](int n, long i, int p, int m_) {
            StepFactor f = step_factor(n, i, p, m_);
            return py::make_tuple(poly_list(f.numerator), f.denominator.str());
        },
        py::arg("n"), py::arg("i"), py::arg("p"), py::arg("m"));
    m.def("theorem_ct_rhs", [](int k, int p) { return poly_list(theorem_ct_rhs(k, p)); },
          py::arg("k"), py::arg("p"));
    m.def("conjectured_base_constant",
          [](int k, int m_) { return conjectured_base_constant(k, m_).str(); }, py::arg("k"),
          py::arg("m"));
    m.def(
        "verify_theorem_ct",
        [](int k, int p, long budget_seconds, unsigned workers) {
            Json j;
            {
                py::gil_scoped_release release;
                j = json_of(verify_theorem_ct(k, p, std::chrono::seconds(budget_seconds),
                                              workers));
            }
            return to_py(j);
        },
        py::arg("k"), py::arg("p"), py::arg("budget_seconds") = 900, py::arg("workers") = 0);

    // weights and characters
    m.def("central_charge", [](int p) { return central_charge(p).str(); }, py::arg("p"));
    m.def("conformal_weight",
          [](int p, long r, long s) { return conformal_weight(p, r, s).str(); }, py::arg("p"),
          py::arg("r"), py::arg("s"));
    m.def("fock_lowest_weight",
          [](int p, const std::string& x) {
              return fock_lowest_weight(p, Rational::parse(x)).str();
          },
          py::arg("p"), py::arg("x"));
    m.def("eta", [](long order) { return to_py(json_of(eta(order))); }, py::arg("order"));
    m.def("phi_inverse", [](long order) { return to_py(json_of(phi_inverse(order))); },
          py::arg("order"));
    m.def(
        "theta",
        [](long r, int p, long order) { return to_py(json_of(theta(r, p, order))); },
        py::arg("r"), py::arg("p"), py::arg("order"));
    m.def(
        "virasoro_char",
        [](int p, long r, long s, long order) {
            return to_py(json_of(virasoro_char(p, r, s, order)));
        },
        py::arg("p"), py::arg("r"), py::arg("s"), py::arg("order"));
    m.def(
        "minimal_model_char",
        [](int p, int r, long order) { return to_py(json_of(minimal_model_char(p, r, order))); },
        py::arg("p"), py::arg("r"), py::arg("order"));
    m.def(
        "triplet_char",
        [](int p, const std::string& family, int k, long order) {
            return to_py(
                json_of(triplet_char_decomp(p, triplet_family_from_string(family), k, order)));
        },
        py::arg("p"), py::arg("family"), py::arg("k"), py::arg("order"));
    m.def("singlet_fock_check",
          [](int p, long order) { return singlet_fock_check(p, order).pass; }, py::arg("p"),
          py::arg("order") = 50);
    m.def("x2p_lattice_check",
          [](int p, long order) { return x2p_lattice_check(p, order).pass; }, py::arg("p"),
          py::arg("order") = 50);
    m.def(
        "closure_rank",
        [](int p, long order) {
            ClosureRank r;
            {
                py::gil_scoped_release release;
                r = closure_rank(closure_basis(p, order));
            }
            return py::make_tuple(r.cardinality, r.rank);
        },
        py::arg("p"), py::arg("order") = 200);
    m.def(
        "calibrate_theta_formula",
        [](int p, long order) { return to_py(json_of(calibrate_theta_formula(p, order))); },
        py::arg("p"), py::arg("order") = 50);

    // Zhu structure
    m.def("weight_set", [](int p) { return to_py(json_of(weight_set(p))); }, py::arg("p"));
    m.def("f2p", [](int p, int form) { return poly_list(f2p(p, form)); }, py::arg("p"),
          py::arg("form") = 1);
    m.def("ppoly", [](int p) { return poly_list(ppoly(p)); }, py::arg("p"));
    m.def("singlet_relation_shape", [](int p) { return poly_list(singlet_relation_shape(p)); },
          py::arg("p"));
    m.def("center_nilpotency",
          [](const std::string& h, int p) { return center_nilpotency(Rational::parse(h), p); },
          py::arg("h"), py::arg("p"));
    m.def("jordan_blocks", [](int p) { return to_py(json_of(jordan_blocks(p))); }, py::arg("p"));
}
