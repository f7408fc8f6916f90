#include "hklat/report.hpp"

#include <utility>

#include "hklat/twisted.hpp"

namespace hklat {

namespace {

const char* kSchema = "hklat/1";

json isotropic_body(const Int& n, int d) {
  IsotropicWitness w = isotropic_exists(n, d);
  json body{{"exists", w.exists}};
  if (w.exists) {
    body["witness"] = json{{"k", int_str(w.k)}, {"m", int_str(w.m)}};
  } else {
    body["witness"] = nullptr;
  }
  json classes = json::array();
  for (const auto& sol : primitive_isotropic_classes(n, d)) {
    classes.push_back(json{{"a", int_str(sol.a)},
                           {"b", int_str(sol.b)},
                           {"coords", int_vec_json(sol.cls.coords())},
                           {"name", class_name(sol.a, sol.b)}});
  }
  body["classes"] = std::move(classes);
  return body;
}

// The worked twisted example: H^2 model of rank 2 with a Picard class P of
// the given square and a transcendental class T of square -2.
json twisted_body(int denominator, const std::string& direction,
                  const Int& pic_square) {
  if (denominator < 1)
    throw PreconditionError("B-field denominator must be at least 1");
  if (pic_square <= 0 || pic_square % 2 != 0)
    throw PreconditionError("Picard square must be positive and even");
  LatticePtr h2 =
      IntLattice::make({{pic_square, 0}, {0, -2}}, {"P", "T"});
  auto model = H2Model::make(h2, {LatticeVector(h2, {1, 0})});

  Rat q(1, denominator);
  RatVec coords;
  if (direction == "transcendental") {
    coords = {Rat(0), q};
  } else if (direction == "picard") {
    coords = {q, Rat(0)};
  } else if (direction == "mixed") {
    // Picard admixture of unrelated denominator; it must not affect the order.
    coords = {Rat(1, 3), q};
  } else {
    throw PreconditionError(
        "B-field direction must be transcendental, picard or mixed");
  }
  BField b(model, coords);

  std::vector<LatticeVector> basis = twisted_algebraic_lattice(b);
  json basis_json = json::array();
  for (const auto& x : basis) basis_json.push_back(int_vec_json(x.coords()));

  Int order = brauer_order(b);
  Int min_rank = minimal_positive_rank(basis);
  if (direction != "picard") {
    internal_check(order == denominator,
                   "a transcendental B-field of denominator q has order q");
    internal_check(min_rank == order,
                   "minimal twisted rank equals the Brauer order");
  }

  return json{
      {"h2", lattice_json(*h2)},
      {"pic_basis", json::array({int_vec_json({1, 0})})},
      {"b_field", rat_vec_json(coords)},
      {"direction", direction},
      {"brauer_order", int_str(order)},
      {"twisted_lattice",
       json{{"basis", std::move(basis_json)},
            {"rank", basis.size()},
            {"minimal_positive_rank", int_str(min_rank)}}}};
}

}  // namespace

json isotropic_document(const Int& n, int d) {
  json doc{{"schema", kSchema},
           {"command", "isotropic"},
           {"input", json{{"degree", int_str(n)}, {"d", int_str(d)}}}};
  doc.update(isotropic_body(n, d));
  return doc;
}

json polar2_document(int d, int m) {
  json doc{{"schema", kSchema},
           {"command", "reflect"},
           {"input", json{{"d", int_str(d)}, {"m", int_str(m)}}}};
  doc["reflection"] = polar2_json(polar2_scenario(d, m));
  return doc;
}

json bn_document(int d, int m) {
  return json{{"schema", kSchema},
              {"command", "bn"},
              {"input", json{{"d", int_str(d)}, {"m", int_str(m)}}},
              {"certificate", serre_certificate_json(certify_serre(d, m))},
              {"euler_characteristics",
               serre_chi_json(serre_euler_characteristics(d, m))}};
}

json fm_document(int d, int m) {
  return json{{"schema", kSchema},
              {"command", "fm"},
              {"input", json{{"d", int_str(d)}, {"m", int_str(m)}}},
              {"report", fm_report_json(replay_theorem(d, m))}};
}

json twisted_document(int denominator, const std::string& direction,
                      const Int& pic_square) {
  json doc{{"schema", kSchema},
           {"command", "twisted"},
           {"input", json{{"denominator", int_str(denominator)},
                          {"direction", direction},
                          {"pic_square", int_str(pic_square)}}}};
  doc["twist"] = twisted_body(denominator, direction, pic_square);
  return doc;
}

json scenario_document(const ScenarioConfig& cfg) {
  if (cfg.d < 2) throw PreconditionError("d must be at least 2");
  if (cfg.m == 0 && !cfg.has_degree)
    throw PreconditionError("scenario requires --m or --degree");
  if (cfg.m != 0 && cfg.m < 1) throw PreconditionError("m must be at least 1");

  // Resolve (m, degree) and the witness.  A degree given without m pins m via
  // the isotropic witness; given both, they must agree.
  Int degree;
  int m = cfg.m;
  IsotropicWitness w;
  if (cfg.has_degree) {
    degree = cfg.degree;
    w = isotropic_exists(degree, cfg.d);
    if (!w.exists)
      throw NonexistenceError(
          "Bogomolov-Beauville form does not represent zero");
    if (m != 0 && (w.m != m || w.k != 1))
      throw PreconditionError(
          "--degree disagrees with --m: the isotropic witness for this degree "
          "is (k, m) = (" +
          w.k.str() + ", " + w.m.str() + ")");
    if (m == 0 && w.k == 1) m = static_cast<int>(w.m.convert_to<long long>());
  } else {
    degree = Int(2 * cfg.d - 2) * m * m;
    w = isotropic_exists(degree, cfg.d);
    internal_check(w.exists && w.k == 1 && w.m == m,
                   "degree (2d-2) m^2 has witness (1, m)");
  }

  json doc{{"schema", kSchema},
           {"command", "scenario"},
           {"input", json{{"d", int_str(cfg.d)},
                          {"m", m == 0 ? json() : json(int_str(m))},
                          {"degree", int_str(degree)},
                          {"b_denominator",
                           cfg.b_denominator == 0 && m == 0
                               ? json()
                               : json(int_str(cfg.b_denominator == 0
                                                  ? m
                                                  : cfg.b_denominator))},
                          {"b_direction", cfg.b_direction}}}};
  doc["isotropic"] = isotropic_body(degree, cfg.d);

  json notes = json::array();
  const bool plain = (w.k == 1 && m == 1);
  const bool standard = (w.k == 1 && m >= 2);

  if (standard) {
    doc["fibration"] = fm_report_json(replay_theorem(cfg.d, m));
    doc["brill_noether"] = serre_certificate_json(certify_serre(cfg.d, m));
    doc["euler_characteristics"] =
        serre_chi_json(serre_euler_characteristics(cfg.d, m));
    int q = cfg.b_denominator == 0 ? m : cfg.b_denominator;
    doc["twisted"] = twisted_body(q, cfg.b_direction, Int(2 * cfg.d - 2));
  } else if (plain) {
    // m = 1: the moduli space is untwisted and the fibration is classical.
    LatticeVector fib = fibration_class(degree, cfg.d);
    doc["fibration"] =
        json{{"fibration_class",
              json{{"coords", int_vec_json(fib.coords())},
                   {"name", class_name(fib.coords()[0], fib.coords()[1])}}},
             {"base_dim", int_str(fibration_base_dimension(cfg.d))}};
    doc["brill_noether"] = nullptr;
    doc["euler_characteristics"] = nullptr;
    doc["twisted"] = json{{"status", "not applicable"},
                          {"note", "no Brauer twist when m = 1"}};
    notes.push_back(
        "m = 1: the fibration class h - e already lies in the untwisted "
        "regime; the Brill-Noether and twisted sections do not apply");
  } else {
    // k > 1: the candidate class exists but the replayed construction only
    // covers k = 1.
    LatticeVector fib = fibration_class(degree, cfg.d);
    doc["fibration"] =
        json{{"fibration_class",
              json{{"coords", int_vec_json(fib.coords())},
                   {"name", class_name(fib.coords()[0], fib.coords()[1])}}},
             {"status", "candidate only"}};
    doc["brill_noether"] = nullptr;
    doc["euler_characteristics"] = nullptr;
    doc["twisted"] = nullptr;
    notes.push_back(
        "isotropic witness has k = " + w.k.str() +
        " > 1: the class " + class_name(w.k, -w.m) +
        " is primitive isotropic, but the moduli construction replayed here "
        "requires k = 1, so only the lattice data is reported");
  }

  if (cfg.with_polar2) {
    if (standard)
      doc["polar2"] = polar2_json(polar2_scenario(cfg.d, m));
    else {
      doc["polar2"] = nullptr;
      notes.push_back("polar2 section requires k = 1 and m >= 2");
    }
  }

  doc["notes"] = std::move(notes);
  return doc;
}

namespace {

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "null";
  return v.dump();
}

void flatten(const json& v, const std::string& prefix, std::string& out) {
  auto key = [&prefix](const std::string& k) {
    return prefix.empty() ? k : prefix + "." + k;
  };
  if (v.is_object()) {
    for (const auto& [k, val] : v.items()) flatten(val, key(k), out);
    return;
  }
  if (v.is_array()) {
    bool all_scalar = true;
    for (const auto& item : v)
      if (item.is_object() || item.is_array()) all_scalar = false;
    if (all_scalar) {
      std::string line = prefix + " = [";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) line += ", ";
        line += scalar_text(v[i]);
      }
      out += line + "]\n";
    } else {
      for (std::size_t i = 0; i < v.size(); ++i)
        flatten(v[i], prefix + "." + std::to_string(i), out);
    }
    return;
  }
  out += prefix + " = " + scalar_text(v) + "\n";
}

}  // namespace

std::string render_text(const json& doc) {
  std::string out;
  flatten(doc, "", out);
  return out;
}

std::string render(const json& doc, const std::string& format) {
  if (format == "json") return doc.dump(2) + "\n";
  if (format == "text") return render_text(doc);
  throw PreconditionError("format must be json or text");
}

}  // namespace hklat
