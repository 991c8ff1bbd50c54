// Python bindings: permutations, groups, exact factorizations, orbit
// decompositions, indicator reports, and the brute-force Hopf oracle.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bismash/catalog.hpp"
#include "bismash/chars.hpp"
#include "bismash/errors.hpp"
#include "bismash/factorization.hpp"
#include "bismash/group.hpp"
#include "bismash/hopf_oracle.hpp"
#include "bismash/indicators.hpp"
#include "bismash/orbits.hpp"
#include "bismash/perm.hpp"

namespace py = pybind11;
using namespace bismash;

PYBIND11_MODULE(_bismash, m) {
  m.doc() = "exact factorizations of symmetric groups and the simple "
            "modules of their bismash products";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<NotExactError>(m, "NotExactError", PyExc_ValueError);
  py::register_exception<CapError>(m, "CapError", PyExc_RuntimeError);
  py::register_exception<StructureError>(m, "StructureError",
                                         PyExc_RuntimeError);

  py::class_<Perm>(m, "Perm")
      .def(py::init<int>(), py::arg("degree"),
           "identity permutation on {1..degree}")
      .def_static(
          "parse",
          [](const std::string& text, int degree) {
            return parse_cycles(text, degree);
          },
          py::arg("text"), py::arg("degree"),
          "parse cycle notation, e.g. \"(1,2)(3,4,5)\"")
      .def_static("from_one_line", &Perm::from_one_line, py::arg("images"),
                  "permutation sending i to images[i-1]")
      .def("apply", &Perm::apply, py::arg("point"))
      .def("inverse", &Perm::inverse)
      .def("conjugate_by", &Perm::conjugate_by, py::arg("x"))
      .def("power", &Perm::power, py::arg("e"))
      .def("is_identity", &Perm::is_identity)
      .def("is_involution", &Perm::is_involution)
      .def("sign", &Perm::sign)
      .def("degree", &Perm::degree)
      .def("cycle_type", &Perm::cycle_type)
      .def("images", &Perm::images)
      .def("__mul__", [](const Perm& a, const Perm& b) { return a * b; })
      .def("__eq__", [](const Perm& a, const Perm& b) { return a == b; })
      .def("__ne__", [](const Perm& a, const Perm& b) { return a != b; })
      .def("__hash__", [](const Perm& p) { return PermHash{}(p); })
      .def("__str__", &Perm::str)
      .def("__repr__",
           [](const Perm& p) { return "Perm(\"" + p.str() + "\")"; });

  py::class_<PermGroup>(m, "PermGroup")
      .def_static("from_generators", &PermGroup::from_generators,
                  py::arg("degree"), py::arg("generators"))
      .def_static("trivial", &PermGroup::trivial, py::arg("degree"))
      .def_static("full_symmetric_on", &PermGroup::full_symmetric_on,
                  py::arg("degree"), py::arg("points"))
      .def_static("full_alternating_on", &PermGroup::full_alternating_on,
                  py::arg("degree"), py::arg("points"))
      .def("degree", &PermGroup::degree)
      .def("order", &PermGroup::order)
      .def("identity", &PermGroup::identity)
      .def("generators", &PermGroup::generators)
      .def("elements", &PermGroup::elements)
      .def("contains", &PermGroup::contains, py::arg("p"))
      .def("same_group", &PermGroup::same_group, py::arg("other"))
      .def("is_trivial", &PermGroup::is_trivial)
      .def("count_involutions", &PermGroup::count_involutions)
      .def("point_stabilizer", &PermGroup::point_stabilizer, py::arg("points"))
      .def("__repr__", [](const PermGroup& g) {
        std::ostringstream os;
        os << "PermGroup(degree=" << g.degree() << ", order=" << g.order()
           << ")";
        return os.str();
      });

  py::class_<ExactFactorization>(m, "ExactFactorization")
      .def_static("build", &ExactFactorization::build, py::arg("f"),
                  py::arg("g"),
                  "verify that F and G factor their closure exactly")
      .def_static("from_spec_file", &ExactFactorization::from_spec_file,
                  py::arg("path"))
      .def_property_readonly("degree", &ExactFactorization::degree)
      .def_property_readonly("shape_route", &ExactFactorization::shape_route)
      .def_property_readonly("k", &ExactFactorization::k)
      .def("ambient", &ExactFactorization::ambient)
      .def("left_factor", &ExactFactorization::left_factor)
      .def("right_factor", &ExactFactorization::right_factor)
      .def("decompose", &ExactFactorization::decompose, py::arg("l"),
           "the unique pair (f, g) with l = f*g")
      .def("act_left", &ExactFactorization::act_left, py::arg("g"),
           py::arg("f"), "the matched-pair action g |> f, valued in F")
      .def("act_right", &ExactFactorization::act_right, py::arg("g"),
           py::arg("f"), "the matched-pair action g <| f, valued in G")
      .def("conjugate_factors", &ExactFactorization::conjugate_factors,
           py::arg("x"), py::arg("y"));

  py::class_<OrbitRecord>(m, "OrbitRecord")
      .def_readonly("representative", &OrbitRecord::representative)
      .def_readonly("size", &OrbitRecord::size)
      .def_readonly("members", &OrbitRecord::members)
      .def_readonly("stabilizer", &OrbitRecord::stabilizer)
      .def_readonly("null_indicator", &OrbitRecord::null_indicator)
      .def_property_readonly("family",
                             [](const OrbitRecord& r) -> py::object {
                               if (r.member_class)
                                 return py::int_(r.member_class->m);
                               return py::none();
                             })
      .def("__repr__", [](const OrbitRecord& r) {
        std::ostringstream os;
        os << "OrbitRecord(rep=\"" << r.representative.str()
           << "\", size=" << r.size
           << (r.null_indicator ? ", null)" : ")");
        return os.str();
      });

  py::class_<OrbitSet>(m, "OrbitSet")
      .def("count", &OrbitSet::count)
      .def("orbits", &OrbitSet::orbits)
      .def("orbit_of_index", &OrbitSet::orbit_of_index, py::arg("g_index"))
      .def("family_census", &OrbitSet::family_census);

  m.def("compute_orbits", &compute_orbits, py::arg("fact"),
        py::call_guard<py::gil_scoped_release>(),
        "decompose G into F-orbits under the right action");

  py::class_<CharacterTable>(m, "CharacterTable")
      .def("num_rows", &CharacterTable::num_rows)
      .def("num_classes", &CharacterTable::num_classes)
      .def("degree", &CharacterTable::degree, py::arg("row"))
      .def("value", &CharacterTable::value, py::arg("row"), py::arg("cls"))
      .def("row_integral", &CharacterTable::row_integral, py::arg("row"))
      .def("ivalue", &CharacterTable::ivalue, py::arg("row"), py::arg("cls"))
      .def("class_of", &CharacterTable::class_of, py::arg("p"));

  m.def("group_fs_indicator", &group_fs_indicator, py::arg("table"),
        py::arg("row"));

  py::class_<HopfBasisElem>(m, "HopfBasisElem")
      .def(py::init<Perm, Perm>(), py::arg("y"), py::arg("a"))
      .def_readonly("y", &HopfBasisElem::y)
      .def_readonly("a", &HopfBasisElem::a);

  py::class_<InducedModule>(m, "InducedModule")
      .def(py::init<const ExactFactorization&, const Perm&, uint64_t>(),
           py::arg("fact"), py::arg("x"), py::arg("shuffle_seed") = 0,
           py::keep_alive<1, 2>())
      .def("representative", &InducedModule::representative)
      .def("members", &InducedModule::members)
      .def("orbit_size", &InducedModule::orbit_size)
      .def("null_orbit", &InducedModule::null_orbit)
      .def("stabilizer", &InducedModule::stabilizer)
      .def("table", &InducedModule::table,
           py::return_value_policy::reference_internal)
      .def("dim", &InducedModule::dim, py::arg("row"))
      .def("induced_value", &InducedModule::induced_value, py::arg("row"),
           py::arg("elem"))
      .def("indicators", &InducedModule::indicators);

  m.def("indicator", &indicator, py::arg("fact"), py::arg("x"), py::arg("row"),
        "Frobenius-Schur indicator of the simple module at (orbit of x, row)");

  py::class_<SimpleModuleDescriptor>(m, "SimpleModuleDescriptor")
      .def_readonly("orbit_index", &SimpleModuleDescriptor::orbit_index)
      .def_readonly("char_index", &SimpleModuleDescriptor::char_index)
      .def_readonly("char_degree", &SimpleModuleDescriptor::char_degree)
      .def_readonly("dim", &SimpleModuleDescriptor::dim)
      .def_readonly("indicator", &SimpleModuleDescriptor::indicator)
      .def("__repr__", [](const SimpleModuleDescriptor& d) {
        std::ostringstream os;
        os << "SimpleModuleDescriptor(orbit=" << d.orbit_index
           << ", char=" << d.char_index << ", dim=" << d.dim
           << ", indicator=" << d.indicator << ")";
        return os.str();
      });

  py::class_<IndicatorReport>(m, "IndicatorReport")
      .def_readonly("id", &IndicatorReport::id)
      .def_readonly("degree", &IndicatorReport::degree)
      .def_readonly("f_order", &IndicatorReport::f_order)
      .def_readonly("g_order", &IndicatorReport::g_order)
      .def_readonly("k", &IndicatorReport::k)
      .def_readonly("orbits", &IndicatorReport::orbits)
      .def_readonly("orbit_modules", &IndicatorReport::orbit_modules)
      .def_readonly("trace_lhs", &IndicatorReport::trace_lhs)
      .def_readonly("trace_rhs", &IndicatorReport::trace_rhs)
      .def_readonly("totally_orthogonal", &IndicatorReport::totally_orthogonal)
      .def_property_readonly(
          "histogram",
          [](const IndicatorReport& r) { return r.indicator_histogram; })
      .def("all_modules", &IndicatorReport::all_modules)
      .def("json", [](const IndicatorReport& r) { return report_json(r); })
      .def("csv", [](const IndicatorReport& r) { return report_csv(r); });

  m.def("full_report", &full_report, py::arg("fact"), py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>(),
        "orbits, simple modules, indicators, and the antipode trace check");

  m.def("conjugation_invariance_check", &conjugation_invariance_check,
        py::arg("fact"), py::arg("x"), py::arg("y"), py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());

  py::class_<OracleCheck>(m, "OracleCheck")
      .def_readonly("name", &OracleCheck::name)
      .def_readonly("ok", &OracleCheck::ok)
      .def_readonly("witness", &OracleCheck::witness);

  py::class_<HopfOracleReport>(m, "HopfOracleReport")
      .def_readonly("dim", &HopfOracleReport::dim)
      .def_readonly("trace_s", &HopfOracleReport::trace_s)
      .def_readonly("involutions", &HopfOracleReport::involutions)
      .def_readonly("checks", &HopfOracleReport::checks)
      .def("all_ok", &HopfOracleReport::all_ok);

  m.def("hopf_oracle", &hopf_oracle, py::arg("fact"), py::arg("cap") = 5040,
        py::call_guard<py::gil_scoped_release>(),
        "rebuild the bismash product by brute force and verify the Hopf "
        "axioms");
  m.def("oracle_text", &oracle_text, py::arg("report"));

  m.def("cyclic_regular", &cyclic_regular, py::arg("m"));
  m.def("symmetric_group", &symmetric_group, py::arg("m"));
  m.def("alternating_group", &alternating_group, py::arg("m"));
  m.def("twisted_symmetric", &twisted_symmetric, py::arg("n"), py::arg("k"));
  m.def("agl1", &agl1, py::arg("q"));
  m.def("asl1", &asl1, py::arg("q"));
  m.def("agammal1", &agammal1, py::arg("q"));
  m.def("pgl2", &pgl2, py::arg("q"));
  m.def("psl2", &psl2, py::arg("q"));
  m.def("pgammal2", &pgammal2, py::arg("q"));
  m.def("mathieu11", &mathieu11);
  m.def("mathieu12", &mathieu12);
  m.def("catalog_group", &catalog_group, py::arg("name"));
  m.def("catalog_group_at_degree", &catalog_group_at_degree, py::arg("name"),
        py::arg("degree"));
  m.def("is_sharply_k_transitive", &is_sharply_k_transitive, py::arg("g"),
        py::arg("k"));

  m.def("involution_count", &involution_count, py::arg("n"));
  m.def("fixed_point_profile", &fixed_point_profile, py::arg("n"));
  m.def("ambient_involution_count", &ambient_involution_count,
        py::arg("fact"));
}
