// Python bindings for the core operations. Ordinals and sets cross the
// boundary as wrapper objects that also accept their literal strings.

#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ordlab/colorings.hpp"
#include "ordlab/posets.hpp"
#include "ordlab/sequences.hpp"
#include "ordlab/walks.hpp"

namespace py = pybind11;
using namespace ordlab;

namespace {

py::dict report_dict(const Report& r) {
  py::list vs;
  for (const Violation& v : r.violations)
    vs.append(py::dict(py::arg("check") = v.check, py::arg("inputs") = v.inputs, py::arg("expected") = v.expected,
                       py::arg("actual") = v.actual));
  return py::dict(py::arg("checked") = r.checked, py::arg("ok") = r.ok(), py::arg("violations") = vs);
}

const UniverseParams& defaults() {
  static const UniverseParams p = UniverseParams::defaults();
  return p;
}

std::vector<Ordinal> probe_or_default(const std::optional<std::vector<Ordinal>>& probe) {
  return probe ? *probe : defaults().probe;
}

}  // namespace

PYBIND11_MODULE(_ordlab, m) {
  m.doc() = "Exact ordinal arithmetic, club sequences, walks and finite colorings";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<Ordinal>(m, "Ordinal")
      .def(py::init<>())
      .def(py::init<std::uint64_t>())
      .def(py::init([](const std::string& s) { return parse_ordinal(s); }))
      .def_property_readonly("is_limit", &Ordinal::is_limit)
      .def_property_readonly("is_successor", &Ordinal::is_successor)
      .def_property_readonly("valuation", &Ordinal::valuation)
      .def("__add__", [](const Ordinal& a, const Ordinal& b) { return ord_add(a, b); })
      .def("__sub__", [](const Ordinal& a, const Ordinal& b) { return ord_sub(a, b); })
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def("__hash__", [](const Ordinal& a) { return py::hash(py::str(a.to_string())); })
      .def("__str__", &Ordinal::to_string)
      .def("__repr__", [](const Ordinal& a) { return "Ordinal('" + a.to_string() + "')"; });
  py::implicitly_convertible<std::string, Ordinal>();
  py::implicitly_convertible<std::uint64_t, Ordinal>();

  py::class_<OrdSet>(m, "OrdSet")
      .def(py::init<>())
      .def(py::init([](const std::string& s) { return parse_set(s); }))
      .def_static("range", &OrdSet::range)
      .def_static("valuation_range", &OrdSet::valuation_range)
      .def("__contains__", &OrdSet::contains)
      .def("__or__", &OrdSet::unite)
      .def("__and__", &OrdSet::intersect)
      .def("__sub__", &OrdSet::minus)
      .def(py::self == py::self)
      .def("restrict", &OrdSet::restrict)
      .def("otp", &OrdSet::otp)
      .def("acc", &OrdSet::acc)
      .def("nacc", &OrdSet::nacc)
      .def("succ_sigma", &OrdSet::succ_sigma, py::arg("sigma") = py::none())
      .def("is_club_in", &OrdSet::is_club_in)
      .def("first", &OrdSet::first_elements)
      .def("__str__", &OrdSet::to_literal)
      .def("__repr__", [](const OrdSet& s) { return "OrdSet('" + s.to_literal() + "')"; });
  py::implicitly_convertible<std::string, OrdSet>();

  py::class_<IndexedSeq>(m, "IndexedSeq")
      .def_property_readonly("name", &IndexedSeq::name)
      .def("i_of", &IndexedSeq::i_of)
      .def("club", &IndexedSeq::club)
      .def("case_counts", [](const IndexedSeq& s) -> std::optional<std::array<std::size_t, 4>> {
        if (const TransformRule* t = as_transform(s)) return t->case_counts();
        return std::nullopt;
      });

  m.def("ladder", [] { return gen_ladder(defaults()); });
  m.def("limits", [] { return gen_limits(defaults()); });
  m.def("transform", [](const IndexedSeq& base) { return transform_square_to_indexed(base, defaults()); });
  m.def("default_probe", [] { return defaults().probe; });
  m.def("index_bound", [] { return defaults().index_bound; });

  m.def(
      "validate_indexed",
      [](const IndexedSeq& s, std::optional<std::vector<Ordinal>> probe) {
        return report_dict(validate_indexed(s, probe_or_default(probe)));
      },
      py::arg("seq"), py::arg("probe") = py::none());
  m.def(
      "validate_plain",
      [](const IndexedSeq& s, std::optional<std::vector<Ordinal>> probe) {
        return report_dict(validate_plain(PlainSeq::single(s), probe_or_default(probe)));
      },
      py::arg("seq"), py::arg("probe") = py::none());
  m.def(
      "check_walk_lemmas",
      [](const IndexedSeq& s, std::optional<std::vector<Ordinal>> probe) {
        const std::vector<Ordinal> p = probe_or_default(probe);
        const std::vector<unsigned> idx = all_indices(defaults());
        Report r = check_lemma1(s, p, idx);
        r.merge(check_lemma2(s, p, idx));
        return report_dict(r);
      },
      py::arg("seq"), py::arg("probe") = py::none());

  m.def("walk", [](const IndexedSeq& s, const Ordinal& alpha, const Ordinal& beta, unsigned i) {
    const WalkResult w = walk(s, alpha, beta, i);
    py::list steps;
    for (const WalkStep& st : w.steps) steps.append(py::make_tuple(st.beta, st.index));
    return py::dict(py::arg("steps") = steps, py::arg("projection") = w.projection, py::arg("trace") = w.trace);
  });
  m.def("kb_less", &kb_less);

  py::class_<Coloring>(m, "Coloring")
      .def(py::init<unsigned, unsigned, std::vector<unsigned>>(), py::arg("n"), py::arg("l"), py::arg("upper"))
      .def_static("parse", &parse_coloring)
      .def_static("random", &random_coloring)
      .def_property_readonly("n", &Coloring::n)
      .def_property_readonly("l", &Coloring::l)
      .def("__call__", &Coloring::at)
      .def(py::self == py::self)
      .def("__str__", &format_coloring);

  m.def("check_subadditive", [](const Coloring& c) { return report_dict(check_subadditive(c)); });
  m.def("check_unbounded", &check_unbounded);
  m.def("covering_matrix", [](const Coloring& c) {
    const CoveringMatrix cm = matrix_from_coloring(c);
    std::vector<std::vector<Mask>> rows(cm.l);
    for (unsigned i = 0; i < cm.l; ++i)
      for (unsigned b = 0; b < cm.n; ++b) rows[i].push_back(cm.at(i, b));
    return rows;
  });
  m.def("validate_matrix", [](const Coloring& c, unsigned max_x) {
    return report_dict(validate_matrix(matrix_from_coloring(c), max_x));
  });
  m.def("cp_search", [](const Coloring& c, double min_frac, unsigned max_x) -> std::optional<Mask> {
    return cp_search(matrix_from_coloring(c), min_frac, max_x).witness;
  });

  m.def("diamond_encode", &diamond_encode);
  m.def("diamond_decode", &diamond_decode);
}
