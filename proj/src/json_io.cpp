#include "hklat/json_io.hpp"

namespace hklat {

std::string int_str(const Int& v) { return v.str(); }

json int_vec_json(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_str(x));
  return a;
}

json rat_vec_json(const RatVec& v) {
  json a = json::array();
  for (const Rat& q : v) a.push_back(rat_to_string(q));
  return a;
}

json lattice_json(const IntLattice& lat) {
  json rows = json::array();
  for (const auto& row : lat.gram()) rows.push_back(int_vec_json(row));
  json j{{"rank", lat.rank()}, {"gram", std::move(rows)}};
  if (!lat.labels().empty()) j["labels"] = lat.labels();
  return j;
}

LatticePtr lattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("gram"))
    throw PreconditionError("lattice JSON must be an object with a 'gram' key");
  IntMat gram;
  for (const auto& row : j.at("gram")) {
    IntVec r;
    for (const auto& cell : row) r.emplace_back(cell.get<std::string>());
    gram.push_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  LatticePtr lat = IntLattice::make(std::move(gram), std::move(labels));
  if (j.contains("rank") && j.at("rank").get<std::size_t>() != lat->rank())
    throw PreconditionError("lattice JSON rank disagrees with the Gram matrix");
  return lat;
}

json vector_json(const LatticeVector& x) {
  return json{{"coords", int_vec_json(x.coords())}};
}

json mukai_vector_json(const MukaiVector& v) {
  return json{{"r", int_str(v.r())},
              {"c", int_vec_json(v.c().coords())},
              {"s", int_str(v.s())}};
}

json imported_fact_json(const ImportedFact& f) {
  return json{{"claim", f.claim}, {"paper_location", f.paper_location}};
}

json fm_report_json(const FMNumericReport& r) {
  json perp = json::array();
  for (const auto& x : r.v_perp_basis) perp.push_back(mukai_vector_json(x));
  json imported = json::array();
  for (const auto& f : r.imported) imported.push_back(imported_fact_json(f));
  return json{{"d", int_str(r.d)},
              {"m", int_str(r.m)},
              {"n", int_str(r.n)},
              {"v", mukai_vector_json(r.v)},
              {"w", mukai_vector_json(r.w)},
              {"v_perp_basis", std::move(perp)},
              {"hhat_square", int_str(r.hhat_square)},
              {"dim_v", int_str(r.dim_v)},
              {"base_dim", int_str(r.base_dim)},
              {"brauer_order", int_str(r.brauer_ord)},
              {"fibration_class",
               json{{"coords", int_vec_json(r.fibration_coords)},
                    {"name", r.fibration_name}}},
              {"k_component", r.k_component},
              {"imported_facts", std::move(imported)}};
}

namespace {

json serre_params_json(const SerreParams& p) {
  return json{{"d", int_str(p.d)},     {"m", int_str(p.m)},
              {"n", int_str(p.n)},     {"genus", int_str(p.g)},
              {"colength", int_str(p.c)}, {"defect", int_str(p.delta)}};
}

}  // namespace

json serre_certificate_json(const SerreCertificate& c) {
  return json{{"params", serre_params_json(c.params)},
              {"rho", int_str(c.rho)},
              {"rho_below", int_str(c.rho_below)},
              {"rho_above", int_str(c.rho_above)},
              {"pass", c.pass}};
}

json serre_chi_json(const SerreChi& c) {
  return json{{"params", serre_params_json(c.params)},
              {"chi_structure", int_str(c.chi_structure)},
              {"chi_polarization", int_str(c.chi_polarization)},
              {"chi_ideal", int_str(c.chi_ideal)},
              {"chi_bundle", int_str(c.chi_bundle)},
              {"bundle_vector", mukai_vector_json(c.bundle)},
              {"chi_serre_dual", int_str(c.chi_serre_dual)},
              {"deg_serre_dual", int_str(c.deg_serre_dual)},
              {"pass", c.pass}};
}

json polar2_json(const Polar2Report& r) {
  return json{{"d", int_str(r.d)},
              {"m", int_str(r.m)},
              {"picard", lattice_json(*r.picard)},
              {"bb_lattice", lattice_json(*r.bb)},
              {"square2_class", vector_json(r.square2_class)},
              {"source_class", vector_json(r.source_class)},
              {"reflected", vector_json(r.reflected)},
              {"divisor_part", vector_json(r.divisor_part)},
              {"divisor_square", int_str(r.divisor_square)},
              {"pairing_with_f2d", int_str(r.pairing_with_f2d)},
              {"effective", r.effective}};
}

}  // namespace hklat
