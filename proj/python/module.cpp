#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "crpoisson/checks.hpp"

namespace py = pybind11;
using namespace crp;

namespace {

Scalar scalarFrom(const std::string& re, const std::string& im) {
    Rational r, i;
    if (r.set_str(re, 10) != 0 || i.set_str(im, 10) != 0)
        throw py::value_error("expected exact rationals like '1', '-2/3'");
    r.canonicalize();
    i.canonicalize();
    return Scalar(r, i);
}

/// Owns the exact engine for one rank; forms stay opaque handles.
struct Engine {
    explicit Engine(int n)
        : cal(std::make_shared<Calculus>(buildModel(n))),
          hodge(std::make_shared<Hodge>(*cal)),
          kernels(std::make_shared<KernelFactory>(*cal)) {}
    std::shared_ptr<Calculus> cal;
    std::shared_ptr<Hodge> hodge;
    std::shared_ptr<KernelFactory> kernels;
};

}  // namespace

PYBIND11_MODULE(_crpoisson, m) {
    m.doc() = "Exact invariant-form calculus on G/M for G = SU(n+1,1)";

    py::class_<Multiform>(m, "Form")
        .def_property_readonly("n", [](const Multiform& f) { return f.n; })
        .def("is_zero", &Multiform::isZero)
        .def("degree",
             [](const Multiform& f) -> py::object {
                 auto d = f.degree();
                 return d ? py::cast(*d) : py::none();
             })
        .def("terms", [](const Multiform& f) { return f.v.terms.size(); })
        .def("__eq__", [](const Multiform& a, const Multiform& b) { return a == b; })
        .def("__add__", [](const Multiform& a, const Multiform& b) { return a + b; })
        .def("__sub__", [](const Multiform& a, const Multiform& b) { return a - b; })
        .def("__neg__", [](const Multiform& a) { return -a; })
        .def("__repr__", [](const Multiform& f) { return serializeMultiform(f); })
        .def("serialize", [](const Multiform& f) { return serializeMultiform(f); });

    m.def("wedge", [](const Multiform& a, const Multiform& b) { return wedge(a, b); });
    m.def("conjugate", [](const Multiform& a) { return conjugate(a); });
    m.def("scale", [](const Multiform& a, const std::string& re, const std::string& im) {
        return a * scalarFrom(re, im);
    }, py::arg("form"), py::arg("re"), py::arg("im") = "0");

    py::class_<Engine>(m, "Model")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", [](const Engine& e) { return e.cal->n(); })
        .def("istar", [](const Engine& e) { return e.cal->basic().Istar; })
        .def("zstar", [](const Engine& e) { return e.cal->basic().Zstar; })
        .def("zbarstar", [](const Engine& e) { return e.cal->basic().Zbarstar; })
        .def("w20", [](const Engine& e) { return e.cal->basic().w20; })
        .def("w11", [](const Engine& e) { return e.cal->basic().w11; })
        .def("w11bar", [](const Engine& e) { return e.cal->basic().w11bar; })
        .def("w02", [](const Engine& e) { return e.cal->basic().w02; })
        .def("vol_k", [](const Engine& e) { return e.cal->basic().volK; })
        .def("d", [](const Engine& e, const Multiform& a) { return e.cal->d(a); })
        .def("d_k", [](const Engine& e, const Multiform& a) { return e.cal->dK(a); })
        .def("d_p", [](const Engine& e, const Multiform& a) { return e.cal->dP(a); })
        .def("del_k", [](const Engine& e, const Multiform& a) { return e.cal->delK(a); })
        .def("del_k_bar", [](const Engine& e, const Multiform& a) { return e.cal->delKbar(a); })
        .def("p_codiff", [](const Engine& e, const Multiform& a) { return e.cal->pCodiff(a); })
        .def("star_k", [](const Engine& e, const Multiform& a) { return e.hodge->starK(a); })
        .def("delta_k", [](const Engine& e, const Multiform& a) { return e.hodge->deltaK(a); })
        .def("lefschetz_k",
             [](const Engine& e, const Multiform& a) { return e.hodge->lefschetzK(a); })
        .def("lefschetz_k_adj",
             [](const Engine& e, const Multiform& a) { return e.hodge->lefschetzKAdj(a); })
        .def("is_invariant",
             [](const Engine& e, const Multiform& a) { return e.cal->isInvariant(a); })
        .def("invariant_dimension",
             [](const Engine& e, int i, int j) {
                 StratumFilter f;
                 f.bidegree = {i, j};
                 return e.cal->invariantSubspace(f).size();
             })
        .def("omega_j",
             [](const Engine& e, long p, long q, long k, long j) {
                 return e.kernels->omegaJ(p, q, k, j);
             })
        .def("pi_j",
             [](const Engine& e, long p, long q, long k, long j) {
                 return e.kernels->piJ(p, q, k, j);
             })
        .def("tilde_pi_j",
             [](const Engine& e, long p, long q, long k, long j) {
                 return e.kernels->tildePiJ(p, q, k, j);
             })
        .def("kernel_low",
             [](const Engine& e, long p, long q) { return e.kernels->kernelLow(p, q); })
        .def("kernel_high",
             [](const Engine& e, long p, long q, const std::string& alphaRe,
                const std::string& alphaIm, const std::string& betaRe,
                const std::string& betaIm) {
                 return e.kernels->kernelHigh(p, q, scalarFrom(alphaRe, alphaIm),
                                              scalarFrom(betaRe, betaIm));
             },
             py::arg("p"), py::arg("q"), py::arg("alpha_re") = "1", py::arg("alpha_im") = "0",
             py::arg("beta_re") = "0", py::arg("beta_im") = "0")
        .def("kernel_real", [](const Engine& e, long k) { return e.kernels->kernelReal(k); });

    m.def("kappa", &KernelFactory::kappa, py::arg("p"), py::arg("q"), py::arg("k"),
          py::arg("j"));
    m.def("suite_names", &suiteNames);
    m.def(
        "run_suite",
        [](int n, const std::string& suite, std::uint64_t seed, bool timings) {
            return reportToJson(runSuite(n, suite, seed), timings);
        },
        py::arg("n"), py::arg("suite") = "all", py::arg("seed") = 0,
        py::arg("timings") = false);
    m.attr("__version__") = kVersion;
}
