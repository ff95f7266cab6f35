// Python bindings: the query surface of the CLI, returning plain values.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tritile/casework.hpp"
#include "tritile/tiling.hpp"

namespace py = pybind11;
using namespace tritile;

namespace {

CertificateReport certificate(const std::string& name, long pmax) {
  if (name == "piover6") return certify_piover6();
  if (name == "piover5") return certify_piover5();
  if (name == "twopifive") return certify_twopifive();
  if (name == "pi11") return certify_pi11_all();
  if (name == "pi14") return certify_pi14_all();
  if (name == "threetwo-case1") return engine_32_case1();
  if (name == "threetwo-case2") return engine_32_case2();
  if (name == "ell3") return eliminate_ell(3, pmax);
  if (name == "ell4") return eliminate_ell(4, pmax);
  if (name == "ell5") return eliminate_ell(5, pmax);
  throw py::value_error("unknown certificate: " + name);
}

}  // namespace

PYBIND11_MODULE(_tritile, mod) {
  mod.doc() = "exact triangle-tiling certificates";
  py::register_exception<AlgebraError>(mod, "AlgebraError", PyExc_ValueError);
  py::register_exception<TilingParseError>(mod, "TilingParseError", PyExc_ValueError);

  mod.def("totient", &totient);
  mod.def("cyclotomic", [](long n) { return cyclotomic_poly(n).str("x"); }, py::arg("n"));
  mod.def(
      "minpoly_sin", [](long k, long n) { return monic(minpoly(sin_pi(k, n))).str("x"); }, py::arg("k"), py::arg("n"));
  mod.def(
      "minpoly_cos", [](long k, long n) { return monic(minpoly(cos_pi(k, n))).str("x"); }, py::arg("k"), py::arg("n"));

  mod.def(
      "certify",
      [](const std::string& name, long pmax) {
        auto r = certificate(name, pmax);
        return py::make_tuple(to_string(r.verdict), r.str());
      },
      py::arg("name"), py::arg("pmax") = 30, "(verdict, report text)");

  mod.def(
      "search_threetwo",
      [](long nmax, int workers) {
        SearchReport r;
        {
          py::gil_scoped_release release;
          r = search_32(nmax, workers);
        }
        std::vector<std::vector<long>> sols;
        for (const auto& s : r.solutions) sols.push_back({s.N, s.p, s.d, s.e, s.g, s.m, s.f, s.h, s.l, s.r});
        return py::make_tuple(sols, r.str());
      },
      py::arg("nmax"), py::arg("workers") = 1, "(solutions, report text)");

  mod.def(
      "classify",
      [](long n) {
        py::list out;
        for (const auto& f : classify(n)) {
          py::dict d;
          d["id"] = f.id;
          d["description"] = f.description;
          d["witnesses"] = f.witnesses;
          d["constructive"] = f.constructive;
          out.append(d);
        }
        return out;
      },
      py::arg("n"));

  mod.def(
      "generate",
      [](const std::string& family, long n) {
        if (family == "three") return save_tiling(gen_three());
        if (family == "threem2") return save_tiling(gen_3m2(n));
        if (family == "twentyseven") return save_tiling(gen_27());
        if (family == "quadratic") return save_tiling(gen_quadratic(gen_three().tile, n));
        throw py::value_error("unknown family: " + family);
      },
      py::arg("family"), py::arg("n") = 1, "tiling file text");

  mod.def(
      "verify",
      [](const std::string& text) {
        auto r = verify_tiling(load_tiling(text));
        std::vector<std::array<long, 3>> rows{r.dmatrix.row(0), r.dmatrix.row(1), r.dmatrix.row(2)};
        return py::make_tuple(r.pass, r.N, rows);
      },
      py::arg("text"), "(pass, N, d-matrix rows)");

  mod.def("witness", [](const std::string& w) { return save_tiling(build_witness(w)); }, py::arg("witness"));
}
