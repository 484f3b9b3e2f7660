#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weilrep/errors.hpp"
#include "weilrep/group.hpp"
#include "weilrep/suites.hpp"
#include "weilrep/tables.hpp"
#include "weilrep/theorems.hpp"
#include "weilrep/weil.hpp"

namespace py = pybind11;
using namespace weilrep;

namespace {

using Rows = std::vector<std::vector<Complex>>;

Rows to_rows(const FloatMatrix& m) {
  Rows out(m.rows(), std::vector<Complex>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

py::dict exact_value(const CycloNum& x) {
  py::dict d;
  d["text"] = x.to_string();
  d["level"] = x.level();
  d["value"] = x.embed();
  return d;
}

Sl2Elem elem(const std::array<std::int64_t, 4>& m, std::int64_t n) { return Sl2Elem(m[0], m[1], m[2], m[3], n); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite Weil representation: exact and float checks";

  static py::exception<Error> base(m, "Error");
  static py::exception<InvalidParams> invalid(m, "InvalidParams", base.ptr());
  static py::exception<UnknownSuite> unknown(m, "UnknownSuite", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InvalidParams& e) {
      py::set_error(invalid, e.what());
    } catch (const UnknownSuite& e) {
      py::set_error(unknown, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite_json",
      [](const std::string& name, std::optional<std::int64_t> n, std::optional<std::int64_t> primes_up_to,
         const std::string& backend, std::optional<double> tol, std::uint64_t seed, bool timing) {
        SuiteParams p;
        p.n = n;
        p.primes_up_to = primes_up_to;
        p.backend = backend_from_string(backend);
        p.tol = tol;
        p.seed = seed;
        SuiteReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(name, p);
        }
        return report_to_json(r, timing).dump();
      },
      py::arg("name"), py::arg("n") = py::none(), py::arg("primes_up_to") = py::none(),
      py::arg("backend") = "exact", py::arg("tol") = py::none(), py::arg("seed") = 1, py::arg("timing") = true);
  m.def("emit_table", &emit_table, py::arg("kind"), py::arg("bound"));

  m.def("legendre", py::overload_cast<std::int64_t, std::int64_t>(&legendre), py::arg("a"), py::arg("p"));
  m.def("jacobi", py::overload_cast<std::int64_t, std::int64_t>(&jacobi), py::arg("a"), py::arg("n"));
  m.def("sl2_order", &sl2_order, py::arg("n"));
  m.def("commutant_dim", &commutant_dim, py::arg("n"));
  m.def("abelianization_exponent", [](std::int64_t n) { return abelianization_exponent(n); }, py::arg("n"));

  m.def("gauss_sum", [](std::int64_t n, std::int64_t a) { return exact_value(gauss_sum<CycloNum>(n, a)); },
        py::arg("n"), py::arg("a") = 1);
  m.def("proportionality_constant",
        [](std::int64_t n, std::int64_t a) { return exact_value(proportionality_constant<CycloNum>(n, a)); },
        py::arg("n"), py::arg("a") = 1);
  m.def("dft_det", [](std::int64_t n) { return exact_value(det_exact(dft_matrix<CycloNum>(n))); }, py::arg("n"));

  m.def("dft_matrix", [](std::int64_t n, std::int64_t a) { return to_rows(dft_matrix<Complex>(n, a)); },
        py::arg("n"), py::arg("a") = 1);
  m.def(
      "rho", [](const std::array<std::int64_t, 4>& g, std::int64_t n) { return to_rows(rho<Complex>(elem(g, n)).matrix); },
      py::arg("g"), py::arg("n"), "float matrix of rho_n(g), g = (a, b, c, d)");
  m.def(
      "character",
      [](const std::array<std::int64_t, 4>& g, std::int64_t p) {
        const auto v = char_formula_check<CycloNum>(elem(g, p));
        return py::make_tuple(exact_value(v.computed), v.predicted);
      },
      py::arg("g"), py::arg("p"), "(trace of rho_p(g), legendre(-det(g - I), p))");

  m.def(
      "qr_verify",
      [](std::int64_t p, std::int64_t q, const std::string& backend) {
        QrOptions opts;
        opts.trace_backend = backend_from_string(backend);
        const auto v = qr_verify(p, q, opts);
        py::dict d;
        d["p"] = v.p;
        d["q"] = v.q;
        d["direct"] = v.lhs_direct;
        d["gauss_ratio"] = v.lhs_gauss_ratio;
        d["trace_route"] = v.lhs_trace_route;
        d["parity"] = v.rhs_parity;
        d["trace_backend"] = to_string(v.trace_backend);
        d["residual"] = v.residual;
        d["pass"] = v.pass;
        return d;
      },
      py::arg("p"), py::arg("q"), py::arg("backend") = "exact");

  m.def(
      "find_conjugator",
      [](const std::array<std::int64_t, 4>& g0, const std::array<std::int64_t, 4>& s, std::int64_t n) {
        const Mat2 sm{Residue(s[0], n), Residue(s[1], n), Residue(s[2], n), Residue(s[3], n)};
        const Sl2Elem g = find_conjugator(elem(g0, n), sm);
        return std::array<std::int64_t, 4>{g.a().value(), g.b().value(), g.c().value(), g.d().value()};
      },
      py::arg("g0"), py::arg("s"), py::arg("n"));
}
