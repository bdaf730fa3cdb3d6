#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "largesub/catalog.hpp"
#include "largesub/classes.hpp"
#include "largesub/corpus.hpp"
#include "largesub/group_spec.hpp"
#include "largesub/largeness.hpp"
#include "largesub/radicals.hpp"
#include "largesub/report.hpp"
#include "largesub/structure.hpp"

namespace py = pybind11;
using namespace largesub;

namespace {

Json verify_json(const FiniteGroup& g, const std::string& theorem, const std::string& arg) {
  auto need_bound = [&] {
    if (arg.empty()) throw Error(ErrorKind::BadBound, "theorem " + theorem + " needs a bound");
    return static_cast<std::size_t>(std::stoul(arg));
  };
  if (theorem == "B") {
    const auto z = center(g);
    return to_json(prop_b_witness(g, z));
  }
  VerificationReport r;
  if (theorem == "A") r = verify_theorem_A(g, builtin_class(arg));
  else if (theorem == "C") r = verify_theorem_C(g, builtin_class(arg));
  else if (theorem == "D") r = verify_corollary(g, Corollary::D);
  else if (theorem == "E") r = verify_corollary(g, Corollary::E);
  else if (theorem == "F") r = verify_corollary(g, Corollary::F, parse_prime_set(arg));
  else if (theorem == "G") r = verify_prop_G(g, need_bound());
  else if (theorem == "Gd") r = verify_derived_length_variant(g, need_bound());
  else if (theorem == "H") r = verify_prop_H(g);
  else throw Error(ErrorKind::ParseError, "unknown theorem selector '" + theorem + "'");
  return to_json(g, r);
}

Subgroup as_subgroup(const FiniteGroup& g, const std::vector<Element>& elements) {
  return make_subgroup(g, elements);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite groups given by Cayley tables, their radicals and largeness checks";

  static py::exception<Error> error(m, "LargesubError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      inst.attr("kind") = std::string(to_string(e.kind()));
      py::set_error(error, inst);
    }
  });

  py::class_<FiniteGroup>(m, "Group")
      .def_property_readonly("order", &FiniteGroup::order)
      .def_property_readonly("name", &FiniteGroup::name)
      .def("mul", &FiniteGroup::mul, py::arg("x"), py::arg("y"))
      .def("inv", &FiniteGroup::inv, py::arg("x"))
      .def("element_order", &FiniteGroup::element_order, py::arg("x"))
      .def("label", &FiniteGroup::label, py::arg("x"))
      .def("table", &FiniteGroup::flat_table)
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) {
        return "<Group " + g.name() + " of order " + std::to_string(g.order()) + ">";
      });

  m.def("group", [](const std::string& spec) { return parse_group_spec(spec); }, py::arg("spec"),
        "Build a group from a spec such as 'direct(alternating(4),cyclic(2))'.");
  m.def("from_table",
        [](const std::vector<std::vector<Element>>& rows, const std::string& name) {
          return FiniteGroup::from_multiplication_table(rows, {}, name);
        },
        py::arg("table"), py::arg("name") = "");
  m.def("load_corpus", [](const std::string& path) { return corpus_groups(load_corpus(path)); },
        py::arg("path"));
  m.def("catalog_keys", &catalog_keys);

  m.def("info_json", [](const FiniteGroup& g) { return group_info(g).dump(); }, py::arg("g"));
  m.def("verify_json",
        [](const FiniteGroup& g, const std::string& theorem, const std::string& arg) {
          return verify_json(g, theorem, arg).dump();
        },
        py::arg("g"), py::arg("theorem"), py::arg("arg") = "");
  m.def("scan_json",
        [](const std::vector<FiniteGroup>& groups, unsigned threads) {
          std::vector<std::string> out;
          py::gil_scoped_release release;
          for (const auto& e : scan_open_question(groups, threads)) out.push_back(to_json(e).dump());
          return out;
        },
        py::arg("groups"), py::arg("threads") = 1);

  m.def("is_large",
        [](const FiniteGroup& g, const std::vector<Element>& n) { return is_large(g, as_subgroup(g, n)); },
        py::arg("g"), py::arg("elements"));
  m.def("center", [](const FiniteGroup& g) { return center(g).elements(); }, py::arg("g"));
  m.def("centralizer",
        [](const FiniteGroup& g, const std::vector<Element>& s) {
          return centralizer(g, as_subgroup(g, s)).elements();
        },
        py::arg("g"), py::arg("elements"));
  m.def("normal_subgroups", [](const FiniteGroup& g) {
        std::vector<std::vector<Element>> out;
        for (const auto& n : normal_subgroups(g)) out.push_back(n.elements());
        return out;
      },
      py::arg("g"));
  m.def("fitting", [](const FiniteGroup& g) { return fitting(g).subgroup.elements(); }, py::arg("g"));
  m.def("generalized_fitting", [](const FiniteGroup& g) { return generalized_fitting(g).subgroup.elements(); },
        py::arg("g"));
  m.def("supersoluble_residual", [](const FiniteGroup& g) { return supersoluble_residual(g).elements(); },
        py::arg("g"));
  m.def("is_soluble", [](const FiniteGroup& g) { return is_soluble(g); }, py::arg("g"));
  m.def("is_in_X0", [](const FiniteGroup& g) { return is_in_X0(g); }, py::arg("g"));

  m.def("order_cap", &order_cap);
  m.def("set_order_cap", &set_order_cap, py::arg("cap"));
}
