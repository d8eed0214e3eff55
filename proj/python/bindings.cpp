#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commands.hpp"
#include "orelclm/algorithms.hpp"
#include "orelclm/clm.hpp"
#include "orelclm/document.hpp"

namespace py = pybind11;
using namespace orelclm;

namespace {

// Operators cross the boundary as lists of coefficient lists, ascending in D
// and then in x, the same layout as the "ops" entries of a document.  Python
// integers of any size are reduced with Python's own modulo.
OreOperator to_operator(const PrimeField& f, const py::sequence& op) {
  const py::int_ p(f.prime());
  std::vector<DensePoly> coeffs;
  for (const auto& c : op) {
    std::vector<std::uint64_t> v;
    for (const auto& a : c.cast<py::sequence>()) {
      if (!py::isinstance<py::int_>(a)) throw py::type_error("coefficients must be integers");
      v.push_back(py::reinterpret_borrow<py::object>(a).attr("__mod__")(p).cast<std::uint64_t>());
    }
    coeffs.emplace_back(f, std::move(v));
  }
  return OreOperator(f, std::move(coeffs));
}

std::vector<OreOperator> to_operators(const PrimeField& f, const py::sequence& ops) {
  std::vector<OreOperator> out;
  for (const auto& op : ops) out.push_back(to_operator(f, op.cast<py::sequence>()));
  return out;
}

py::list from_operator(const OreOperator& L) {
  py::list out;
  for (const auto& c : L.coeffs()) {
    py::list poly;
    if (c.is_zero()) poly.append(0);
    for (auto v : c.coeffs()) poly.append(v);
    out.append(poly);
  }
  if (L.is_zero()) out.append(py::list(py::make_tuple(0)));
  return out;
}

py::list from_operators(const std::vector<OreOperator>& ops) {
  py::list out;
  for (const auto& L : ops) out.append(from_operator(L));
  return out;
}

py::dict describe(const OreOperator& L) {
  py::dict d;
  d["operator"] = from_operator(L);
  d["order"] = L.order();
  d["degree"] = degree(L);
  d["size"] = arithmetic_size(L);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "LCLMs of linear differential operators over F_p(x)";
  m.attr("DEFAULT_PRIME") = PrimeField::kDefaultPrime;

  // Leaked on purpose: it must outlive the interpreter teardown.
  static auto* document_error = new py::exception<DocumentError>(m, "DocumentError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr e) {
    try {
      if (e) std::rethrow_exception(e);
    } catch (const DocumentError& err) {
      py::object exc = py::handle(document_error->ptr())(err.what());
      exc.attr("where") = err.where();
      exc.attr("position") = err.position() == DocumentError::npos ? py::none() : py::cast(err.position());
      PyErr_SetObject(document_error->ptr(), exc.ptr());
    } catch (const ArithmeticError& err) {
      PyErr_SetString(PyExc_ArithmeticError, err.what());
    }
  });

  m.def("algorithms", &base_algorithm_tags, "Base algorithm tags; dac:<tag> and iter:<tag> are also accepted.");
  m.def("is_known_algorithm", [](const std::string& tag) { return is_known_algorithm(tag); }, py::arg("tag"));

  m.def(
      "lclm",
      [](const py::sequence& ops, const std::string& algorithm, std::uint64_t p, int trials, std::uint64_t seed) {
        const PrimeField f(p);
        const auto v = to_operators(f, ops);
        LclmResult r;
        {
          py::gil_scoped_release release;
          r = compute_lclm(v, algorithm, {.heuristic_trials = trials, .seed = seed});
        }
        auto d = describe(r.lclm);
        d["algorithm"] = r.algorithm;
        d["rank"] = r.rank ? py::cast(*r.rank) : py::none();
        return d;
      },
      py::arg("ops"), py::arg("algorithm") = "new", py::arg("p") = PrimeField::kDefaultPrime, py::arg("trials") = 3,
      py::arg("seed") = 1);

  m.def(
      "order_of_lclm",
      [](const py::sequence& ops, std::uint64_t p) { return order_of_lclm(to_operators(PrimeField(p), ops)); },
      py::arg("ops"), py::arg("p") = PrimeField::kDefaultPrime);

  m.def(
      "clm",
      [](const py::sequence& ops, std::uint64_t p) {
        const auto v = to_operators(PrimeField(p), ops);
        ClmResult r;
        {
          py::gil_scoped_release release;
          r = clm_compute(v);
        }
        auto d = describe(r.clm);
        d["total_degree"] = r.total_degree;
        d["N"] = r.N_used;
        return d;
      },
      py::arg("ops"), py::arg("p") = PrimeField::kDefaultPrime);
  m.def("clm_bound", &clm_bound, py::arg("k"), py::arg("delta"));

  m.def(
      "gcrd",
      [](const py::sequence& a, const py::sequence& b, std::uint64_t p) {
        const PrimeField f(p);
        return from_operator(gcrd(to_operator(f, a), to_operator(f, b)));
      },
      py::arg("a"), py::arg("b"), py::arg("p") = PrimeField::kDefaultPrime);
  m.def(
      "mul",
      [](const py::sequence& a, const py::sequence& b, std::uint64_t p) {
        const PrimeField f(p);
        return from_operator(to_operator(f, a) * to_operator(f, b));
      },
      py::arg("a"), py::arg("b"), py::arg("p") = PrimeField::kDefaultPrime);
  m.def(
      "right_divides",
      [](const py::sequence& b, const py::sequence& a, std::uint64_t p) {
        const PrimeField f(p);
        return right_divides(to_operator(f, b), to_operator(f, a));
      },
      py::arg("b"), py::arg("a"), py::arg("p") = PrimeField::kDefaultPrime, "True if a = Q * b for some operator Q.");

  m.def(
      "random_operators",
      [](int k, int degree, int order, std::uint64_t seed, std::uint64_t p) {
        return from_operators(cli::random_document(PrimeField(p), k, degree, order, seed).ops);
      },
      py::arg("k"), py::arg("degree"), py::arg("order"), py::arg("seed") = 1, py::arg("p") = PrimeField::kDefaultPrime);

  m.def(
      "parse_document",
      [](const std::string& text) {
        const auto doc = parse_operators(text);
        return py::make_tuple(doc.field.prime(), from_operators(doc.ops));
      },
      py::arg("text"), "Returns (p, ops).");
  m.def(
      "format_document",
      [](const py::sequence& ops, std::uint64_t p) {
        const PrimeField f(p);
        return format_operators({f, to_operators(f, ops)});
      },
      py::arg("ops"), py::arg("p") = PrimeField::kDefaultPrime);
}
