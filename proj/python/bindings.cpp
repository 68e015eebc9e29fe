#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hcd/constructions.hpp"
#include "hcd/errors.hpp"
#include "hcd/io.hpp"
#include "hcd/permanent.hpp"
#include "hcd/search.hpp"

namespace py = pybind11;
using namespace hcd;

// Codewords cross the boundary as their text form.
namespace {

std::vector<std::string> texts(const std::vector<Codeword>& words) {
  std::vector<std::string> out;
  out.reserve(words.size());
  for (const auto& c : words) out.push_back(c.to_string());
  return out;
}

std::vector<Codeword> parse_all(const std::vector<std::string>& words, std::uint32_t q) {
  std::vector<Codeword> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(Codeword::parse(w, q));
  return out;
}

Guard make_guard(std::optional<std::uint64_t> incidence_limit, std::uint64_t time_budget_ms) {
  Guard g;
  if (incidence_limit) g.incidence_limit = *incidence_limit;
  g.time_budget = std::chrono::milliseconds(time_budget_ms);
  return g;
}

py::dict report_dict(const VerificationReport& r) {
  py::list violations;
  for (const auto& v : r.violations) violations.append(py::make_tuple(v.witness.to_string(), v.count));
  py::dict d;
  d["valid"] = r.valid;
  d["violations"] = violations;
  return d;
}

}  // namespace

PYBIND11_MODULE(_hcd, m) {
  m.doc() = "H- and A-designs on the hypercube Q_q^n";

  auto base = py::register_exception<Error>(m, "HcdError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<MalformedDesign>(m, "MalformedDesign", base);
  py::register_exception<VerificationFailed>(m, "VerificationFailed", base);
  py::register_exception<GuardExceeded>(m, "GuardExceeded", base);
  py::register_exception<HypergraphError>(m, "HypergraphError", base);

  py::enum_<Kind>(m, "Kind").value("H", Kind::H).value("A", Kind::A);

  py::class_<DesignParams>(m, "DesignParams")
      .def(py::init([](Kind kind, std::size_t n, std::uint32_t q, std::size_t w, std::size_t t) {
             return DesignParams{kind, n, q, w, t};
           }),
           py::arg("kind"), py::arg("n"), py::arg("q"), py::arg("w"), py::arg("t"))
      .def_readwrite("kind", &DesignParams::kind)
      .def_readwrite("n", &DesignParams::n)
      .def_readwrite("q", &DesignParams::q)
      .def_readwrite("w", &DesignParams::w)
      .def_readwrite("t", &DesignParams::t)
      .def("validate", [](const DesignParams& p, bool allow_zero_t) {
             p.validate(allow_zero_t ? ParamPolicy::kAllowZeroT : ParamPolicy::kStrict);
           }, py::arg("allow_zero_t") = false)
      .def("word_weight", &DesignParams::word_weight)
      .def("witness_weight", &DesignParams::witness_weight)
      .def("expected_cardinality", [](const DesignParams& p) {
        const Cardinality c = expected_cardinality(p);
        return py::make_tuple(c.numerator, c.denominator);
      })
      .def("__eq__", [](const DesignParams& a, const DesignParams& b) { return a == b; })
      .def("__repr__", &DesignParams::to_string)
      .def("__str__", &DesignParams::to_string);

  py::class_<Design>(m, "Design")
      .def(py::init([](const DesignParams& p, const std::vector<std::string>& words, bool allow_zero_t) {
             return Design(p, parse_all(words, p.q), allow_zero_t ? ParamPolicy::kAllowZeroT : ParamPolicy::kStrict);
           }),
           py::arg("params"), py::arg("words"), py::arg("allow_zero_t") = false)
      .def_property_readonly("params", &Design::params)
      .def_property_readonly("words", [](const Design& d) { return texts(d.words()); })
      .def("__len__", &Design::size)
      .def("__eq__", [](const Design& a, const Design& b) { return a == b; })
      .def("verify", [](const Design& d, unsigned workers) { return report_dict(verify(d, {workers})); },
           py::arg("workers") = 1)
      .def("is_valid", [](const Design& d) { return verify(d).valid; })
      .def("min_distance", [](const Design& d) { return min_distance(d); })
      .def("is_generalized_steiner", [](const Design& d) { return is_generalized_steiner(d); })
      .def("to_text", [](const Design& d) { return format_design(d); })
      .def_static("from_text", [](const std::string& text, bool allow_zero_t) {
             return parse_design(text, allow_zero_t ? ParamPolicy::kAllowZeroT : ParamPolicy::kStrict);
           }, py::arg("text"), py::arg("allow_zero_t") = false)
      .def("__repr__", [](const Design& d) {
        return "<Design " + d.params().to_string() + " with " + std::to_string(d.size()) + " words>";
      });

  py::class_<Partition>(m, "Partition")
      .def(py::init([](const DesignParams& p, std::vector<Design> parts) { return Partition{p, std::move(parts)}; }),
           py::arg("params"), py::arg("parts"))
      .def_readonly("params", &Partition::params)
      .def_readonly("parts", &Partition::parts)
      .def("validate", [](const Partition& p) {
        const PartitionReport r = validate_partition(p);
        return py::make_tuple(r.valid, r.problems);
      })
      .def("to_text", [](const Partition& p) { return format_partition(p); })
      .def_static("from_text", [](const std::string& text) { return parse_partition(text); });

  // faces
  m.def("weight", [](const std::string& c, std::uint32_t q) { return weight(Codeword::parse(c, q)); },
        py::arg("word"), py::arg("q"));
  m.def("covers", [](const std::string& outer, const std::string& inner, std::uint32_t q) {
    return covers(Codeword::parse(outer, q), Codeword::parse(inner, q));
  }, py::arg("outer"), py::arg("inner"), py::arg("q"));
  m.def("hamming_distance", [](const std::string& a, const std::string& b, std::uint32_t q) {
    return hamming_distance(Codeword::parse(a, q), Codeword::parse(b, q));
  }, py::arg("a"), py::arg("b"), py::arg("q"));
  m.def("subfaces", [](const std::string& c, std::uint32_t q, std::size_t w) {
    return texts(subfaces(Codeword::parse(c, q), w));
  }, py::arg("word"), py::arg("q"), py::arg("w"));
  m.def("superfaces", [](const std::string& c, std::uint32_t q, std::size_t t) {
    return texts(superfaces(Codeword::parse(c, q), t));
  }, py::arg("word"), py::arg("q"), py::arg("t"));
  m.def("enumerate_faces", [](std::size_t n, std::uint32_t q, std::size_t w) {
    return texts(enumerate_faces(n, q, w));
  }, py::arg("n"), py::arg("q"), py::arg("w"));

  // constructions
  m.def("mds_distance2", &mds_distance2, py::arg("m"), py::arg("q"));
  m.def("construct_i", [](const Design& outer, const std::vector<Design>& inner) {
    return construct_i(outer, std::span<const Design>(inner));
  }, py::arg("outer"), py::arg("inner"));
  m.def("corollary2", &corollary2, py::arg("t"), py::arg("s"), py::arg("base") = std::nullopt,
        py::call_guard<py::gil_scoped_release>());
  m.def("construct_ii", &construct_ii, py::arg("design"), py::arg("q_inner"));
  m.def("construct_iii", &construct_iii, py::arg("design"));
  m.def("from_steiner", [](const std::vector<std::vector<std::size_t>>& blocks, std::size_t n, std::size_t w,
                           std::size_t t) { return from_steiner(blocks, n, w, t); },
        py::arg("blocks"), py::arg("n"), py::arg("w"), py::arg("t"));

  // search and counting
  m.def("search_design",
        [](const DesignParams& p, std::size_t max_solutions, std::size_t min_distance,
           const std::vector<std::string>& forbidden, const std::vector<std::string>& required,
           bool symmetry_breaking, unsigned workers, std::optional<std::uint64_t> incidence_limit,
           std::uint64_t time_budget_ms) {
          SearchOptions o;
          o.max_solutions = max_solutions;
          o.min_distance = min_distance;
          o.forbidden = parse_all(forbidden, p.q);
          o.required = parse_all(required, p.q);
          o.symmetry_breaking = symmetry_breaking;
          o.workers = workers;
          o.guard = make_guard(incidence_limit, time_budget_ms);
          py::gil_scoped_release release;
          return search_design(p, o);
        },
        py::arg("params"), py::arg("max_solutions") = 0, py::arg("min_distance") = 0,
        py::arg("forbidden") = std::vector<std::string>{}, py::arg("required") = std::vector<std::string>{},
        py::arg("symmetry_breaking") = false, py::arg("workers") = 1, py::arg("incidence_limit") = std::nullopt,
        py::arg("time_budget_ms") = 0);
  m.def("count_designs",
        [](const DesignParams& p, unsigned workers, std::optional<std::uint64_t> incidence_limit,
           std::uint64_t time_budget_ms) {
          CountOptions o;
          o.workers = workers;
          o.guard = make_guard(incidence_limit, time_budget_ms);
          py::gil_scoped_release release;
          return count_designs(p, o);
        },
        py::arg("params"), py::arg("workers") = 1, py::arg("incidence_limit") = std::nullopt,
        py::arg("time_budget_ms") = 0);
  m.def("partition_into_designs",
        [](const DesignParams& p, std::optional<std::uint64_t> incidence_limit, std::uint64_t time_budget_ms) {
          PartitionOptions o;
          o.guard = make_guard(incidence_limit, time_budget_ms);
          py::gil_scoped_release release;
          return partition_into_designs(p, o);
        },
        py::arg("params"), py::arg("incidence_limit") = std::nullopt, py::arg("time_budget_ms") = 0);

  // permanents
  m.def("permanent",
        [](std::size_t k, std::size_t n, const std::vector<std::vector<std::uint32_t>>& cells, unsigned workers) {
          const AdjacencyArray a(k, n, cells);
          PermanentOptions o;
          o.workers = workers;
          py::gil_scoped_release release;
          return permanent_k(a, o);
        },
        py::arg("k"), py::arg("n"), py::arg("cells"), py::arg("workers") = 1,
        "Permanent of a k-dimensional 0/1 array given by its 0-based 1-cells.");
  m.def("count_a_designs_via_permanent",
        [](const Partition& p, unsigned workers) { return count_a_designs_via_permanent(p, {workers}); },
        py::arg("h_partition"), py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
  m.def("count_h_designs_via_permanent",
        [](const Partition& p, unsigned workers) { return count_h_designs_via_permanent(p, {workers}); },
        py::arg("a_partition"), py::arg("workers") = 1, py::call_guard<py::gil_scoped_release>());
}
