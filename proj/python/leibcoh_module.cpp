#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "leibcoh/cli.hpp"
#include "leibcoh/cohomology.hpp"
#include "leibcoh/errors.hpp"
#include "leibcoh/ext.hpp"
#include "leibcoh/io.hpp"
#include "leibcoh/quiver.hpp"
#include "leibcoh/repsl2.hpp"

namespace py = pybind11;
using namespace leibcoh;

namespace {

std::map<unsigned, std::size_t> weights(const WeightMultiset& w) { return w.counts; }

std::vector<std::size_t> ext_trivial(const std::string& src, const std::string& dst, std::size_t nmax,
                                     const std::string& method) {
  const OneDimBimodule a = cli::parse_one_dim(src), b = cli::parse_one_dim(dst);
  if (method == "closed") return ext_trivial_closed(a, b, nmax);
  if (method == "spectral")
    return ext_dims(trivial_algebra(), SourceDescriptor{a.kind(), a.underlying()}, b.materialize(), nmax).dims;
  throw InputError("method must be closed or spectral");
}

std::size_t ext_hemi(unsigned n, const std::string& src, const std::string& dst, unsigned degree,
                     const std::string& method) {
  if (n == 0) throw InputError("n must be positive");
  const HemiSimple a = cli::parse_hemi(src), b = cli::parse_hemi(dst);
  if (method == "closed") return ext_simple_closed(n, a, b, degree);
  if (method != "spectral") throw InputError("method must be closed or spectral");
  const LeibnizAlgebra h = hemi_semidirect(sl2(), simple_module(n).underlying());
  const Bimodule x = cli::hemi_bimodule(h, b);
  return ext_dims(h, SourceDescriptor{a.kind, simple_module(a.weight).underlying()}, x, degree).dims.at(degree);
}

std::vector<std::size_t> hl_dims(const std::string& algebra_json, const std::string& bimodule_json, std::size_t qmax) {
  const LeibnizAlgebra h = algebra_from_json(algebra_json);
  return leibniz_cohomology_dims(h, bimodule_from_json(h, bimodule_json), qmax);
}

std::vector<std::size_t> ce_dims(unsigned m, std::size_t pmax) {
  return ce_cohomology(sl2(), simple_module(m).underlying(), pmax).dims();
}

std::string render(const Quiver& q, const std::string& format) {
  if (format == "dot") return to_dot(q);
  if (format == "json") return to_json(q);
  throw InputError("format must be dot or json");
}

}  // namespace

PYBIND11_MODULE(leibcoh, m) {
  m.doc() = "Leibniz-algebra cohomology, Ext groups and Gabriel quivers over exact rationals";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("ext_trivial", &ext_trivial, py::arg("src"), py::arg("dst"), py::arg("nmax") = 3,
        py::arg("method") = "closed", "Ext^0..Ext^nmax between simple bimodules over the 1-dimensional algebra.");
  m.def("ext_hemi", &ext_hemi, py::arg("n"), py::arg("src"), py::arg("dst"), py::arg("degree") = 1,
        py::arg("method") = "closed", "dim Ext^degree between simple bimodules over V_n x_hs sl2.");
  m.def("ext1_hemi_closed", &ext1_hemi_closed, py::arg("n"), py::arg("p"), py::arg("m"));
  m.def("hl_dims", &hl_dims, py::arg("algebra_json"), py::arg("bimodule_json"), py::arg("qmax") = 3,
        "Leibniz cohomology dimensions HL^0..HL^qmax from JSON descriptions.");
  m.def("ce_dims", &ce_dims, py::arg("m"), py::arg("pmax") = 3, "CE cohomology of sl2 with coefficients in V_m.");
  m.def(
      "clebsch_gordan", [](unsigned a, unsigned b) { return weights(clebsch_gordan(a, b)); }, py::arg("m"),
      py::arg("n"));
  m.def(
      "decompose_tensor",
      [](unsigned a, unsigned b) { return weights(decompose(tensor(simple_module(a), simple_module(b)))); },
      py::arg("m"), py::arg("n"), "Weight multiplicities of V_m (x) V_n computed from the matrices.");
  m.def(
      "quiver_trivial",
      [](const std::vector<std::string>& lambdas, const std::string& format) {
        std::vector<Scalar> ls;
        for (const auto& l : lambdas) ls.push_back(parse_scalar(l));
        return render(quiver_trivial(ls), format);
      },
      py::arg("lambdas"), py::arg("format") = "json");
  m.def(
      "quiver_hemi",
      [](unsigned n, unsigned max_weight, bool verify, const std::string& format) {
        return render(quiver_hemi(n, max_weight, verify), format);
      },
      py::arg("n"), py::arg("max_weight"), py::arg("verify") = false, py::arg("format") = "json");
}
