#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pha/errors.hpp"
#include "pha/io.hpp"
#include "pha/random_instances.hpp"
#include "pha/recognition.hpp"

namespace py = pybind11;
using namespace pha;

namespace {

Field field_arg(const std::string& f) { return f.empty() ? io::default_field() : Field::parse(f); }

// ints, strings and fractions.Fraction all go through their decimal text
Scalar to_scalar(const py::handle& x, Field f) { return Scalar::parse(py::str(x).cast<std::string>(), f); }

Vec to_vec(const py::sequence& s, Field f) {
  Vec v;
  for (const auto& x : s) v.push_back(to_scalar(x, f));
  return v;
}

Mat to_mat(const py::sequence& rows, Field f) {
  std::vector<Vec> r;
  for (const auto& row : rows) r.push_back(to_vec(row.cast<py::sequence>(), f));
  std::size_t cols = r.empty() ? 0 : r[0].size();
  for (const auto& v : r)
    if (v.size() != cols) fail(ErrorKind::DimMismatch, "ragged matrix");
  Mat m(r.size(), cols);
  for (std::size_t i = 0; i < r.size(); ++i) m.set_row(i, r[i]);
  return m;
}

py::list from_vec(const Vec& v) {
  py::list out;
  for (const auto& s : v) out.append(s.str());
  return out;
}

py::list from_mat(const Mat& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.append(from_vec(m.row(i)));
  return out;
}

py::dict report_dict(const Report& r) {
  py::list checks;
  for (const auto& c : r.checks()) {
    py::dict d;
    d["name"] = c.name;
    d["status"] = status_name(c.status);
    d["witness"] = c.witness;
    d["informational"] = c.informational;
    checks.append(d);
  }
  py::dict out;
  out["subject"] = r.subject();
  out["ok"] = r.ok();
  out["checks"] = checks;
  return out;
}

}  // namespace

PYBIND11_MODULE(partial_hopf, m) {
  m.doc() = "Exact partial Hopf actions, globalizations and Morita contexts";

  static py::exception<Error> error(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  py::class_<FiniteGroup>(m, "FiniteGroup")
      .def_static("cyclic", &FiniteGroup::cyclic)
      .def_static("product_of_cyclic", &FiniteGroup::product_of_cyclic)
      .def_static("from_table", [](std::vector<std::vector<std::size_t>> t) { return FiniteGroup::from_table(std::move(t)); })
      .def_property_readonly("order", &FiniteGroup::order)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv);

  py::class_<FDAlgebra>(m, "Algebra")
      .def(py::init([](const py::sequence& mult, std::optional<py::sequence> unit, const std::string& field) {
             Field f = field_arg(field);
             std::optional<Vec> u;
             if (unit) u = to_vec(*unit, f);
             return make_algebra(to_mat(mult, f), u, f);
           }),
           py::arg("mult"), py::arg("unit") = py::none(), py::arg("field") = "")
      .def_property_readonly("dim", &FDAlgebra::dim)
      .def_property_readonly("field", [](const FDAlgebra& a) { return a.field().name(); })
      .def_property_readonly("mult", [](const FDAlgebra& a) { return from_mat(a.mult()); })
      .def_property_readonly("unit", [](const FDAlgebra& a) -> py::object {
        if (!a.unit()) return py::none();
        return from_vec(*a.unit());
      })
      .def("product", [](const FDAlgebra& a, const py::sequence& x, const py::sequence& y) {
        return from_vec(a.product(to_vec(x, a.field()), to_vec(y, a.field())));
      })
      .def("right_annihilator_dim", [](const FDAlgebra& a) { return right_annihilator(a).dim(); })
      .def("left_annihilator_dim", [](const FDAlgebra& a) { return left_annihilator(a).dim(); })
      .def("is_idempotent", [](const FDAlgebra& a) { return is_idempotent_algebra(a); })
      .def("__eq__", &FDAlgebra::operator==);

  m.def("base_field_algebra", [](const std::string& f) { return base_field_algebra(field_arg(f)); }, py::arg("field") = "");
  m.def("matrix_algebra", [](std::size_t n, const std::string& f) { return matrix_algebra(n, field_arg(f)); },
        py::arg("n"), py::arg("field") = "");
  m.def("product_of_fields", [](std::size_t n, const std::string& f) { return product_of_fields(n, field_arg(f)); },
        py::arg("n"), py::arg("field") = "");
  m.def("truncated_polynomial", [](std::size_t n, const std::string& f) { return truncated_polynomial(n, field_arg(f)); },
        py::arg("n"), py::arg("field") = "");
  m.def("left_unit_algebra", [](const std::string& f) { return left_unit_algebra(field_arg(f)); }, py::arg("field") = "");
  m.def("opposite_algebra", &opposite_algebra);
  m.def("matrix_algebra_over", &matrix_algebra_over);

  py::class_<HopfAlgebra>(m, "HopfAlgebra")
      .def_property_readonly("dim", &HopfAlgebra::dim)
      .def_property_readonly("cocommutative", &HopfAlgebra::cocommutative)
      .def_property_readonly("comult", [](const HopfAlgebra& h) { return from_mat(h.comult()); })
      .def_property_readonly("antipode", [](const HopfAlgebra& h) { return from_mat(h.antipode()); })
      .def("verify", [](const HopfAlgebra& h) { return report_dict(verify_hopf(h.data())); });
  m.def("group_algebra", [](const FiniteGroup& g, const std::string& f) { return group_algebra(g, field_arg(f)); },
        py::arg("group"), py::arg("field") = "");
  m.def("dual_group_algebra", [](const FiniteGroup& g, const std::string& f) { return dual_group_algebra(g, field_arg(f)); },
        py::arg("group"), py::arg("field") = "");

  py::class_<PartialAction>(m, "PartialAction")
      .def(py::init([](const HopfAlgebra& h, const FDAlgebra& a, const py::sequence& ops) {
             std::vector<Mat> mats;
             for (const auto& op : ops) mats.push_back(to_mat(op.cast<py::sequence>(), a.field()));
             if (mats.size() != h.dim()) fail(ErrorKind::DimMismatch, "need one operator per basis element of H");
             return PartialAction(h, a, action_from_operators(mats, a.dim()));
           }),
           py::arg("hopf"), py::arg("algebra"), py::arg("operators"))
      .def_property_readonly("algebra", [](const PartialAction& p) { return p.alg(); })
      .def_property_readonly("hopf", [](const PartialAction& p) { return p.hopf(); })
      .def("operator", [](const PartialAction& p, std::size_t i) { return from_mat(p.op(i)); })
      .def("apply", [](const PartialAction& p, std::size_t i, const py::sequence& a) {
        return from_vec(p.apply_basis(i, to_vec(a, p.alg().field())));
      })
      .def("verify", [](PartialAction& p) { return report_dict(verify_partial_action(p)); })
      .def("verify_unital", [](const PartialAction& p) { return report_dict(verify_unital_partial_action(p)); });

  m.def("zero_on_nonidentity", &zero_on_nonidentity);
  m.def("partial_representation_report",
        [](const PartialAction& p) { return report_dict(verify_partial_representation(action_to_partial_representation(p))); });

  py::class_<GlobalizationResult>(m, "Globalization")
      .def_property_readonly("algebra", [](const GlobalizationResult& g) { return g.B; })
      .def_property_readonly("dim", [](const GlobalizationResult& g) { return g.B.dim(); })
      .def_property_readonly("theta", [](const GlobalizationResult& g) { return from_mat(g.theta.map); })
      .def_property_readonly("minimal", [](const GlobalizationResult& g) { return g.minimal; })
      .def("operator", [](const GlobalizationResult& g, std::size_t i) { return from_mat(g.action.op(i)); });
  m.def("standard_globalization", &standard_globalization);
  m.def("verify_globalization",
        [](const PartialAction& p, const GlobalizationResult& g) { return report_dict(verify_globalization(p, g)); });
  m.def("is_minimal", &is_minimal);

  m.def("smash_dimensions", [](const PartialAction& p) {
    SmashAlgebra s = build_smash(p);
    return py::make_tuple(s.alg.dim(), build_partial_smash(s).alg.dim());
  });
  m.def("smash_algebra", [](const PartialAction& p) { return build_smash(p).alg; });
  m.def("smash_is_associative", &smash_is_associative);

  m.def("smash_morita_context", [](const PartialAction& p) {
    MoritaContextData c = smash_morita_context(p, standard_globalization(p));
    py::dict d;
    d["report"] = report_dict(verify_context(c));
    d["dims"] = py::make_tuple(c.A.dim(), c.B.dim(), c.M.dim, c.N.dim);
    d["strict"] = is_strict(c);
    d["B"] = c.B;
    return d;
  });

  m.def("iso_to_matrix_algebra", [](const FDAlgebra& a, std::size_t n) -> py::object {
    auto iso = iso_to_matrix_algebra(a, n);
    if (!iso) return py::none();
    return from_mat(*iso);
  });
  m.def("iso_to_product_of_fields", [](const FDAlgebra& a) -> py::object {
    auto iso = iso_to_product_of_fields(a);
    if (!iso) return py::none();
    return from_mat(*iso);
  });

  m.def(
      "grading_pipeline",
      [](std::size_t order, std::vector<std::size_t> subgroup, std::vector<std::size_t> sequence, const std::string& f) {
        Field fld = field_arg(f);
        GoodGradingSpec s = spec_from_sequence(FiniteGroup::cyclic(order), subgroup, sequence);
        py::dict d;
        d["spec"] = report_dict(validate_spec(s, fld));
        PartialAction pa = build_grading_action(s, fld);
        d["action"] = report_dict(verify_partial_action(pa));
        GlobalizationResult g = build_grading_globalization(s, fld);
        d["dim"] = g.B.dim();
        d["minimal"] = is_minimal(pa, g);
        d["mutually_inverse"] = compare_with_standard(s, fld).mutually_inverse;
        return d;
      },
      py::arg("order"), py::arg("subgroup"), py::arg("sequence"), py::arg("field") = "");

  m.def(
      "fuzz_suite",
      [](std::uint64_t seed, std::size_t count, std::size_t max_dim) {
        py::list out;
        for (auto& f : fuzz_suite(seed, count, max_dim)) out.append(py::make_tuple(f.label, f.action));
        return out;
      },
      py::arg("seed"), py::arg("count"), py::arg("max_dim") = 4);

  m.def("load_action", [](const std::string& text) {
    io::Library lib;
    io::json doc = io::json::parse(text);
    io::Source src{"<string>", io::hex64(io::fnv1a(text))};
    std::optional<io::json> target;
    auto take = [&](const io::json& d) {
      lib.add(d, src);
      if (d.value("kind", "") == "action" && !target) target = d;
    };
    if (doc.contains("documents"))
      for (const auto& d : doc["documents"]) take(d);
    else
      take(doc);
    if (!target) fail(ErrorKind::ParseError, "no action document");
    return lib.action(*target);
  });
}
