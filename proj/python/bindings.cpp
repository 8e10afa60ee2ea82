#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "twinspec/charpoly.hpp"
#include "twinspec/displacement.hpp"
#include "twinspec/error.hpp"
#include "twinspec/graph.hpp"
#include "twinspec/report.hpp"
#include "twinspec/reproduce.hpp"
#include "twinspec/spectrum.hpp"

namespace py = pybind11;
using namespace twinspec;

namespace {

py::object to_python(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(to_python(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = to_python(value);
      return out;
    }
    default:
      return py::none();
  }
}

// Ascending coefficients as Python ints of unbounded size.
py::list coefficients(const Polynomial& p) {
  py::list out;
  py::object to_int = py::module_::import("builtins").attr("int");
  for (const auto& c : p.coefficients()) out.append(to_int(py::str(c.get_str())));
  return out;
}

TwinPair resolve_pair(const Graph& g, std::optional<int> ell, std::optional<int> k) {
  if (ell.has_value() != k.has_value()) throw Error(ErrorCode::InvalidArgument, "give both ell and k, or neither");
  if (ell) return make_twin_pair(g, *ell, *k);
  const auto twins = find_twins(g);
  if (twins.empty()) throw Error(ErrorCode::NotTwins, "graph has no twin pair");
  return twins.front();
}

std::filesystem::path data_dir_or_default(const std::optional<std::string>& dir) {
  return dir ? std::filesystem::path(*dir) : default_data_dir();
}

}  // namespace

PYBIND11_MODULE(_twinspec, m) {
  m.doc() = "Exact characteristic polynomials and eigenvalue displacement for graphs with twin vertices";

  static py::handle error_type = py::exception<Error>(m, "TwinspecError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::reinterpret_borrow<py::object>(error_type)(e.what());
      err.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type.ptr(), err.ptr());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init(&Graph::from_edges), py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_static("parse", [](const std::string& text) { return parse_graph(text); }, py::arg("text"),
                  "JSON {\"n\":..,\"edges\":[[u,v],..]} or whitespace edge list")
      .def_static(
          "nsg", [](const std::string& seq) { return build_nsg(CreationSequence::parse(seq)); }, py::arg("sequence"),
          "Nested split graph from a creation sequence such as \"2,2,1,1\"")
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("complement", [](const Graph& g) { return complement(g); })
      .def("delete_vertex", [](const Graph& g, int v) { return delete_vertex(g, v); })
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def("to_json", [](const Graph& g) { return to_json_string(g); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("charpoly", [](const Graph& g) { return coefficients(charpoly(g)); }, py::arg("graph"),
        "Coefficients of det(λI - A), lowest degree first");
  m.def("cofactor", [](const Graph& g, int ell, int k) { return coefficients(cofactor(g, ell, k)); },
        py::arg("graph"), py::arg("ell"), py::arg("k"), "Entry (ell, k) of adj(λI - A), lowest degree first");
  m.def("main_polynomial", [](const Graph& g) { return coefficients(main_polynomial(g)); }, py::arg("graph"));
  m.def("polynomial_string", [](const Graph& g) { return to_string(charpoly(g)); }, py::arg("graph"));

  m.def("find_twins", [](const Graph& g) {
    py::list out;
    for (const auto& p : find_twins(g)) out.append(to_python(twin_pair_to_json(p)));
    return out;
  });
  m.def(
      "twin_deleted_charpoly",
      [](const Graph& g, int ell, int k) { return coefficients(twin_deleted_charpoly(g, make_twin_pair(g, ell, k))); },
      py::arg("graph"), py::arg("ell"), py::arg("k"));
  m.def(
      "verify",
      [](const Graph& g, std::optional<int> ell, std::optional<int> k) {
        return to_python(identity_report_to_json(verify_twin_identity(g, resolve_pair(g, ell, k))));
      },
      py::arg("graph"), py::arg("ell") = py::none(), py::arg("k") = py::none());

  m.def("eigenvalues", [](const Graph& g, double tol) { return eigenvalues(g, tol).values(); }, py::arg("graph"),
        py::arg("tol") = kDefaultTolerance, "Sorted eigenvalues with multiplicity");
  m.def(
      "spectrum", [](const Graph& g, double tol) { return to_python(spectrum_to_json(eigenvalues(g, tol))); },
      py::arg("graph"), py::arg("tol") = kDefaultTolerance);

  m.def(
      "estimate",
      [](const Graph& g, std::optional<int> ell, std::optional<int> k, double tol,
         const std::string& format) -> py::object {
        const auto report = displacement_report(g, resolve_pair(g, ell, k), tol);
        if (format == "json") return to_python(report_to_json(report));
        if (format == "csv") return py::str(report_to_csv(report));
        if (format == "text") return py::str(report_to_text(report));
        throw Error(ErrorCode::InvalidArgument, "format must be json, csv or text");
      },
      py::arg("graph"), py::arg("ell") = py::none(), py::arg("k") = py::none(), py::arg("tol") = kDefaultTolerance,
      py::arg("format") = "json");

  m.def(
      "reproduce",
      [](const std::string& table, std::optional<std::string> data_dir, bool as_text) -> py::object {
        const auto r = reproduce(parse_table_id(table), data_dir_or_default(data_dir));
        if (as_text) return py::str(reproduction_to_text(r));
        return to_python(reproduction_to_json(r));
      },
      py::arg("table"), py::arg("data_dir") = py::none(), py::arg("as_text") = false);
  m.def("load_g8", [](std::optional<std::string> data_dir) { return load_g8(data_dir_or_default(data_dir)); },
        py::arg("data_dir") = py::none());
  m.def("default_data_dir", [] { return default_data_dir().string(); });
}
