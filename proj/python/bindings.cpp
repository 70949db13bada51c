#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polybern/combinatorics.hpp"
#include "polybern/polybernoulli.hpp"
#include "polybern/special.hpp"
#include "polybern/verify.hpp"
#include "polybern/zeta.hpp"

namespace py = pybind11;
using namespace polybern;
using numeric::QuadratureResult;
using numeric::QuadratureSpec;

namespace {

// Exact values cross the boundary as "p/q" strings; the Python layer turns
// them into fractions.Fraction.
std::vector<std::string> coefficients(const ZPolynomial& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(c.str());
    return out;
}

py::dict result_dict(const QuadratureResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["imag_residue"] = r.imag_residue;
    d["convergence_delta"] = r.convergence_delta;
    d["levels_used"] = r.levels_used;
    d["tail_bound"] = r.tail_bound ? py::cast(*r.tail_bound) : py::none();
    return d;
}

ZPolynomial polynomial(long n, int k, const std::string& variant, const std::string& method) {
    const Variant v = parse_variant(variant);
    const Route r = parse_route(method);
    if (r == Route::Series) return poly_bernoulli_series(n, k, v).polynomial(n);
    if (r == Route::Umbral) return poly_bernoulli_umbral(n, k, v);
    throw std::invalid_argument("method must be series or umbral for polynomials");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact poly-Bernoulli arithmetic and Arakawa-Kaneko zeta numerics.";

    py::register_exception<numeric::ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);
    py::register_exception<umbral::ExpansionLimitError>(m, "ExpansionLimitError", PyExc_MemoryError);

    py::class_<QuadratureSpec>(m, "QuadratureSpec")
        .def(py::init([](int panels, int nodes, int levels, double tolerance) {
                 QuadratureSpec s{panels, nodes, levels, tolerance};
                 s.validate();
                 return s;
             }),
             py::arg("panels") = 4, py::arg("nodes") = 16, py::arg("levels") = 3, py::arg("tolerance") = 1e-8)
        .def_readonly("panels", &QuadratureSpec::panels)
        .def_readonly("nodes", &QuadratureSpec::nodes)
        .def_readonly("levels", &QuadratureSpec::levels)
        .def_readonly("tolerance", &QuadratureSpec::tolerance);

    m.def("bernoulli_numbers", [](long n_max) {
        std::vector<std::string> out;
        for (const auto& b : bernoulli_numbers(n_max)) out.push_back(b.str());
        return out;
    });
    m.def("poly_bernoulli_polynomial", [](long n, int k, const std::string& variant, const std::string& method) {
        return coefficients(polynomial(n, k, variant, method));
    }, py::arg("n"), py::arg("k"), py::arg("variant") = "B", py::arg("method") = "series");
    m.def("poly_bernoulli", [](long n, int k, const std::string& variant, const std::string& method,
                               const std::string& z) {
        if (parse_route(method) == Route::Stirling) {
            if (parse_variant(variant) != Variant::B || Rational::parse(z) != Rational(0))
                throw std::invalid_argument("stirling method: B variant at z = 0 only");
            return poly_bernoulli_stirling(n, k).str();
        }
        return polynomial(n, k, variant, method)(Rational::parse(z)).str();
    }, py::arg("n"), py::arg("k"), py::arg("variant") = "B", py::arg("method") = "series", py::arg("z") = "0");
    m.def("barnes_transform_cube", [](long n, int k) { return coefficients(barnes_transform_cube(n, k)); });
    m.def("simplex_transform", [](long n, int k) { return coefficients(simplex_transform(n, k)); });

    m.def("negative_moment", [](int k, int mm, double z, const QuadratureSpec& spec) {
        return result_dict(numeric::negative_moment(k, mm, z, spec));
    }, py::arg("k"), py::arg("m"), py::arg("z") = 0.0, py::arg("spec") = QuadratureSpec{});
    m.def("ak_zeta_mellin", [](int k, int mm, double tol, const QuadratureSpec& spec) {
        return result_dict(numeric::ak_zeta_mellin(k, mm, tol, spec));
    }, py::arg("k"), py::arg("m"), py::arg("tol") = 1e-10, py::arg("spec") = QuadratureSpec{});
    m.def("barnes_zeta_mellin", [](int mm, double w, const std::vector<double>& a, double tol) {
        return result_dict(numeric::barnes_zeta_mellin(mm, w, a, tol));
    }, py::arg("m"), py::arg("w"), py::arg("a"), py::arg("tol") = 1e-10);
    m.def("barnes_zeta_sech", [](int mm, double w, const std::vector<double>& a, const QuadratureSpec& spec) {
        return result_dict(numeric::barnes_zeta_sech(mm, w, a, spec));
    }, py::arg("m"), py::arg("w"), py::arg("a"), py::arg("spec") = QuadratureSpec{});
    m.def("mz_truncated", [](const std::vector<int>& exponents, bool starred, long N) {
        const auto r = numeric::mz_truncated(numeric::MzSignature{exponents, starred}, N);
        return py::make_tuple(r.value, r.tail_bound);
    }, py::arg("exponents"), py::arg("starred") = false, py::arg("N") = 10000);

    m.def("polylog", [](int k, double x) { return numeric::polylog(k, x); });
    m.def("polygamma", [](int mm, double x) { return numeric::polygamma(mm, x); });
    m.def("hurwitz_zeta", [](double s, double a) { return numeric::hurwitz_zeta(s, a); });

    m.def("verify_json", [](const std::vector<std::string>& suites, int max_n, int zeta_k_max) {
        verify::VerifyConfig cfg;
        cfg.suites = {suites.begin(), suites.end()};
        if (max_n >= 0) cfg.narrow_n(max_n);
        cfg.zeta_k_max = zeta_k_max;
        py::gil_scoped_release release;
        return verify::run_all(cfg).to_json().dump();
    }, py::arg("suites"), py::arg("max_n") = -1, py::arg("zeta_k_max") = 2);
}
