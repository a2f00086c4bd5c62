#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

#include "sumcolour/certificate.hpp"
#include "sumcolour/digits.hpp"
#include "sumcolour/errors.hpp"
#include "sumcolour/exact_core.hpp"
#include "sumcolour/phi.hpp"
#include "sumcolour/registry.hpp"
#include "sumcolour/search.hpp"

namespace py = pybind11;
using namespace sumcolour;

namespace {

// Rationals cross the boundary as "a/b" strings; the Python layer wraps them in Fraction.
IntervalSet interval_set(const std::vector<std::pair<std::string, std::string>>& parts) {
  IntervalSet out;
  for (const auto& [lo, hi] : parts) out = out.unite(IntervalSet::open(Rational::parse(lo), Rational::parse(hi)));
  return out;
}

std::vector<std::string> strs(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& q : v) out.push_back(q.str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact colourings of rational vector spaces and sumset search.";

  py::register_exception<Error>(m, "SumcolourError", PyExc_ValueError);

  m.def("flog", [](std::uint64_t k, unsigned u, const std::string& q) { return flog(k, u, Rational::parse(q)); },
        py::arg("k"), py::arg("u"), py::arg("q"));

  m.def("decompose", [](const std::string& x) {
    const PhiDecomp d = decompose(Rational::parse(x));
    std::vector<std::tuple<std::uint64_t, unsigned, std::string>> parts;
    for (const auto& p : d.parts) parts.emplace_back(p.p, p.n, p.a.get_str());
    return std::make_pair(parts, d.value.str());
  }, py::arg("x"));

  m.def("colour", [](const std::string& id, const std::string& x) { return resolve_colouring(id)(parse_qvec(x)); },
        py::arg("id"), py::arg("x"));

  m.def("search", [](const std::string& id, const std::string& mode, std::uint64_t k, unsigned height,
                     std::size_t dim, std::size_t max_size, std::uint64_t budget, unsigned threads) {
    SearchOptions o{id, parse_sum_mode(mode), k, {height, dim}, max_size, budget, threads};
    SearchResult r;
    {
      py::gil_scoped_release release;
      r = search_mono(o);
    }
    return py::make_tuple(to_string(r.status), r.best_size, r.nodes, to_json(r.cert).dump());
  }, py::arg("id"), py::arg("mode"), py::arg("k"), py::arg("height"), py::arg("dim"), py::arg("max_size"),
     py::arg("budget") = 1'000'000, py::arg("threads") = 1);

  m.def("verify", [](const std::string& text, unsigned threads) {
    VerifyReport r;
    {
      py::gil_scoped_release release;
      r = verify_cert_text(text, threads);
    }
    return std::make_pair(r.ok, r.reason);
  }, py::arg("text"), py::arg("threads") = 1);

  m.def("build_cylinder", [](const std::vector<std::pair<std::string, std::string>>& Z, std::uint64_t k,
                             std::size_t T, unsigned threads) {
    const IntervalSet z = interval_set(Z);
    const CylinderHit hit = find_cylinder_in(z, static_cast<unsigned>(k + 2));
    std::vector<std::size_t> X;
    for (std::size_t t = 1; t <= T; ++t) X.push_back(hit.depth + t);
    py::gil_scoped_release release;
    return to_json(build_H(hit.prefix, hit.depth, X, k, z, threads)).dump();
  }, py::arg("Z"), py::arg("k"), py::arg("T"), py::arg("threads") = 1);

  m.def("greedy", [](const std::vector<std::pair<std::string, std::string>>& Z, std::uint64_t k, std::size_t T) {
    return strs(greedy_baire(interval_set(Z), k, T));
  }, py::arg("Z"), py::arg("k"), py::arg("T"));
}
