#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "hklat/report.hpp"
#include "hklat/selftest.hpp"

namespace py = pybind11;

namespace {

// Python ints <-> cpp_int via decimal strings, so nothing truncates.
hklat::Int int_from_py(py::handle h) {
  if (!py::isinstance<py::int_>(h))
    throw py::type_error("expected an int, got " +
                         std::string(py::str(py::type::handle_of(h))));
  return hklat::Int(std::string(py::str(h)));
}

py::int_ int_to_py(const hklat::Int& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

hklat::Rat rat_from_py(py::handle h) {
  // Accepts int, "p/q" strings, and anything whose str() is p/q or p
  // (e.g. fractions.Fraction).
  return hklat::rat_from_string(std::string(py::str(h)));
}

hklat::IntVec coords_from_py(py::handle seq) {
  hklat::IntVec out;
  for (py::handle item : py::cast<py::sequence>(seq))
    out.push_back(int_from_py(item));
  return out;
}

py::list coords_to_py(const hklat::IntVec& v) {
  py::list out;
  for (const auto& x : v) out.append(int_to_py(x));
  return out;
}

struct PyLattice {
  hklat::LatticePtr p;

  hklat::LatticeVector vec(py::handle coords) const {
    return {p, coords_from_py(coords)};
  }
};

std::string dump(const hklat::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact lattice arithmetic for rational Lagrangian fibrations on Hilbert "
      "schemes of points on K3 surfaces";

  py::register_exception<hklat::NonexistenceError>(m, "NonexistenceError");
  py::register_exception<hklat::PreconditionError>(m, "PreconditionError",
                                                   PyExc_ValueError);

  py::class_<PyLattice>(m, "Lattice")
      .def(py::init([](py::sequence gram, std::vector<std::string> labels) {
             hklat::IntMat g;
             for (py::handle row : gram) g.push_back(coords_from_py(row));
             return PyLattice{hklat::IntLattice::make(std::move(g),
                                                      std::move(labels))};
           }),
           py::arg("gram"), py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly(
          "rank", [](const PyLattice& L) { return L.p->rank(); })
      .def_property_readonly("gram",
                             [](const PyLattice& L) {
                               py::list rows;
                               for (const auto& r : L.p->gram())
                                 rows.append(coords_to_py(r));
                               return rows;
                             })
      .def_property_readonly(
          "labels", [](const PyLattice& L) { return L.p->labels(); })
      .def("pair",
           [](const PyLattice& L, py::handle x, py::handle y) {
             return int_to_py(hklat::pair(L.vec(x), L.vec(y)));
           })
      .def("is_primitive",
           [](const PyLattice& L, py::handle x) {
             return hklat::is_primitive(L.vec(x));
           })
      .def("reflect",
           [](const PyLattice& L, py::handle v, py::handle c) {
             return coords_to_py(hklat::reflect(L.vec(v), L.vec(c)).coords());
           },
           py::arg("v"), py::arg("c"),
           "reflect c in the square-2 vector v")
      .def("orthogonal_complement",
           [](const PyLattice& L, py::sequence span) {
             std::vector<hklat::LatticeVector> s;
             for (py::handle row : span) s.push_back(L.vec(row));
             py::list out;
             for (const auto& b : hklat::orthogonal_complement(L.p, s))
               out.append(coords_to_py(b.coords()));
             return out;
           })
      .def("quotient_square",
           [](const PyLattice& L, py::handle v, py::handle w) {
             return int_to_py(hklat::quotient_square(L.vec(v), L.vec(w)));
           })
      .def("intersect_rational",
           [](const PyLattice& L, py::sequence rows) {
             std::vector<hklat::RationalVector> sub;
             for (py::handle row : rows) {
               hklat::RatVec r;
               for (py::handle cell : py::cast<py::sequence>(row))
                 r.push_back(rat_from_py(cell));
               sub.emplace_back(L.p, std::move(r));
             }
             py::list out;
             for (const auto& b : hklat::intersect_rational(sub, L.p))
               out.append(coords_to_py(b.coords()));
             return out;
           })
      .def("to_json", [](const PyLattice& L) {
        return dump(hklat::lattice_json(*L.p));
      });

  m.def("from_json", [](const std::string& s) {
    return PyLattice{hklat::lattice_from_json(hklat::json::parse(s))};
  });

  // Scalar operations.
  m.def("fujiki_constant",
        [](int d) { return int_to_py(hklat::fujiki_constant(d)); });
  m.def("isotropic_chi",
        [](int d) { return int_to_py(hklat::isotropic_chi(d)); });
  m.def("squarefree_part", [](py::handle n) {
    return int_to_py(hklat::squarefree_part(int_from_py(n)));
  });
  m.def("moduli_k3_degree",
        [](int d, int m) { return int_to_py(hklat::moduli_k3_degree(d, m)); });
  m.def("fibration_base_dimension",
        [](int d) { return int_to_py(hklat::fibration_base_dimension(d)); });
  m.def("bn_number", [](py::handle g, py::handle r, py::handle c) {
    return int_to_py(
        hklat::bn_number(int_from_py(g), int_from_py(r), int_from_py(c)));
  });
  m.def("section_count", [](int d, int m, int k) {
    return int_to_py(hklat::section_count(d, m, k));
  });

  m.def("isotropic_witness", [](py::handle n, int d) {
    hklat::IsotropicWitness w = hklat::isotropic_exists(int_from_py(n), d);
    py::dict out;
    out["exists"] = w.exists;
    if (w.exists) {
      out["k"] = int_to_py(w.k);
      out["m"] = int_to_py(w.m);
    }
    return out;
  });
  m.def("primitive_isotropic_classes", [](py::handle n, int d) {
    py::list out;
    for (const auto& sol : hklat::primitive_isotropic_classes(int_from_py(n), d))
      out.append(py::make_tuple(int_to_py(sol.a), int_to_py(sol.b)));
    return out;
  });
  m.def("fibration_class", [](py::handle n, int d) {
    const auto cls = hklat::fibration_class(int_from_py(n), d);
    return py::make_tuple(int_to_py(cls.coords()[0]), int_to_py(cls.coords()[1]));
  });

  // Report builders, returned as JSON strings; the python wrapper parses them.
  m.def("_scenario_json", [](int d, int m, py::handle degree, bool with_polar2,
                             int b_denominator, const std::string& b_direction) {
    hklat::ScenarioConfig cfg;
    cfg.d = d;
    cfg.m = m;
    if (!degree.is_none()) {
      cfg.has_degree = true;
      cfg.degree = int_from_py(degree);
    }
    cfg.with_polar2 = with_polar2;
    cfg.b_denominator = b_denominator;
    cfg.b_direction = b_direction;
    return dump(hklat::scenario_document(cfg));
  });
  m.def("_isotropic_json", [](py::handle n, int d) {
    return dump(hklat::isotropic_document(int_from_py(n), d));
  });
  m.def("_polar2_json",
        [](int d, int m) { return dump(hklat::polar2_document(d, m)); });
  m.def("_bn_json", [](int d, int m) { return dump(hklat::bn_document(d, m)); });
  m.def("_fm_json", [](int d, int m) { return dump(hklat::fm_document(d, m)); });
  m.def("_twisted_json",
        [](int denominator, const std::string& direction, py::handle pic_square) {
          return dump(hklat::twisted_document(denominator, direction,
                                              int_from_py(pic_square)));
        });

  m.def("_selftest_json", [](int grid_max, int degree_max, int coeff_bound,
                             int samples, std::uint64_t seed, bool inject_fault) {
    hklat::SelftestOptions opt;
    opt.grid_max = grid_max;
    opt.degree_max = degree_max;
    opt.coeff_bound = coeff_bound;
    opt.samples = samples;
    opt.seed = seed;
    opt.inject_fault = inject_fault;
    hklat::SelftestReport rep = hklat::run_selftest(opt);
    hklat::json checks = hklat::json::array();
    for (const auto& c : rep.checks)
      checks.push_back(hklat::json{
          {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return dump(hklat::json{{"checks", std::move(checks)},
                            {"all_pass", rep.all_pass}});
  });
}
