#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "ringcount/counting.hpp"
#include "ringcount/io.hpp"

namespace py = pybind11;
using namespace ringcount;

namespace {

// python ints have no size limit, so go through the decimal string
py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.str())); }

BigInt from_py(const py::int_& v) { return BigInt(py::cast<std::string>(py::repr(v))); }

ExtPtr chain_extension(const std::string& ring, unsigned degree) {
  const RingSpec rs = parse_ring_spec(ring);
  if (rs.is_pir()) throw ParameterError("expected a chain ring, got " + ring);
  return extension_for(rs, degree);
}

AlephSource aleph_source(const std::string& s) {
  if (s == "oracle") return AlephSource::oracle;
  if (s == "formula") return AlephSource::formula;
  throw ParameterError("aleph source must be oracle or formula");
}

}  // namespace

PYBIND11_MODULE(_ringcount, m) {
  m.doc() = "Counting codes over finite chain rings and their Galois extensions";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<GuardExceeded>(m, "GuardExceeded", PyExc_RuntimeError);
  py::register_exception<InternalFault>(m, "InternalFault", PyExc_RuntimeError);

  m.def("gaussian_binomial", [](std::int64_t l, std::int64_t k, const py::int_& q) {
    return to_py(gaussian_binomial(l, k, from_py(q)));
  }, py::arg("l"), py::arg("k"), py::arg("q"));

  m.def("chain_binomial", [](std::int64_t l, std::int64_t k, const py::int_& q, std::uint32_t s) {
    return to_py(chain_binomial(l, k, from_py(q), s));
  }, py::arg("l"), py::arg("k"), py::arg("q"), py::arg("s"));

  m.def("kappa", &kappa, py::arg("l"), py::arg("m"));

  m.def("aleph", [](const std::string& ring, unsigned degree, std::size_t l, std::size_t k, const std::string& source) {
    const ExtPtr ext = chain_extension(ring, degree);
    return to_py(aleph_source(source) == AlephSource::formula ? aleph_formula(*ext, l, k) : aleph_bruteforce(*ext, l, k));
  }, py::arg("ring"), py::arg("degree"), py::arg("l"), py::arg("k"), py::arg("source") = "oracle");

  m.def("omega", [](const std::string& ring, unsigned degree, std::size_t l, std::size_t k, std::size_t kp,
                    const std::string& source) {
    return to_py(omega_formula(*chain_extension(ring, degree), l, k, kp, aleph_source(source)));
  }, py::arg("ring"), py::arg("degree"), py::arg("l"), py::arg("k"), py::arg("kp"), py::arg("source") = "oracle");

  m.def("omega_histogram", [](const std::string& ring, unsigned degree, std::size_t l, std::size_t k) {
    py::dict out;
    for (const auto& [kp, v] : omega_bruteforce(*chain_extension(ring, degree), l, k)) out[py::int_(kp)] = to_py(v);
    return out;
  }, py::arg("ring"), py::arg("degree"), py::arg("l"), py::arg("k"));

  m.def("restrict", [](const std::string& ring, unsigned degree, const std::string& gens) {
    const ExtPtr ext = chain_extension(ring, degree);
    const auto rows = parse_rows(*ext->ext(), gens);
    if (rows.empty()) throw ParseError("no generators");
    return format_codewords(restriction(*ext, LinearCode::from_generators(ext->ext(), rows.front().size(), rows)));
  }, py::arg("ring"), py::arg("degree"), py::arg("gens"));

  m.def("run", [](const std::vector<std::string>& args) {
    std::vector<std::string> argv{"ringcount"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = cli::run(argv, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs one CLI command; returns (exit_code, stdout, stderr).");
}
