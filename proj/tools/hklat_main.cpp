#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "hklat/report.hpp"
#include "hklat/selftest.hpp"

namespace {

// Exit codes: 0 success, 1 the requested object does not exist, 2 usage or
// precondition error, 70 internal consistency failure (EX_SOFTWARE).
constexpr int kExitNonexistence = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 70;

struct Options {
  std::string format = "text";

  int d = 0;
  int m = 0;
  std::string degree;  // parsed as a big integer
  bool with_polar2 = false;
  int b_denominator = 0;
  std::string b_direction = "transcendental";

  std::string pic_square = "2";
  int denominator = 0;
  std::string direction = "transcendental";

  hklat::SelftestOptions selftest;
};

void emit(const hklat::json& doc, const std::string& format) {
  std::cout << hklat::render(doc, format);
}

hklat::Int parse_int(const std::string& s) {
  try {
    return hklat::Int(s);
  } catch (const std::exception&) {
    throw hklat::PreconditionError("malformed integer: '" + s + "'");
  }
}

int run_selftest_command(const Options& o) {
  hklat::SelftestReport rep = hklat::run_selftest(o.selftest);
  if (o.format == "json") {
    hklat::json checks = hklat::json::array();
    for (const auto& c : rep.checks)
      checks.push_back(hklat::json{
          {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    emit(hklat::json{{"schema", "hklat/1"},
                     {"command", "selftest"},
                     {"checks", std::move(checks)},
                     {"all_pass", rep.all_pass}},
         o.format);
  } else {
    int failed = 0;
    for (const auto& c : rep.checks) {
      std::cout << (c.pass ? "ok   " : "FAIL ") << c.name << " (" << c.detail
                << ")\n";
      if (!c.pass) ++failed;
    }
    std::cout << "selftest: " << rep.checks.size() << " checks, " << failed
              << " failed\n";
  }
  return rep.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hklat: exact lattice arithmetic for rational Lagrangian fibrations on "
      "Hilbert schemes of points on K3 surfaces"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.set_config("--config", "", "read options from an INI/TOML file");

  auto* scenario = app.add_subcommand(
      "scenario", "full numeric replay of the construction for one (d, m)");
  scenario->add_option("--d", o.d, "number of points")->required();
  scenario->add_option("--m", o.m, "multiplicity / Brauer order");
  scenario->add_option("--degree", o.degree, "K3 degree n (alternative to --m)");
  scenario->add_flag("--polar2", o.with_polar2,
                     "include the Picard-rank-2 reflection section");
  scenario->add_option("--b-denominator", o.b_denominator,
                       "denominator of the demo B-field (default m)");
  scenario->add_option("--b-direction", o.b_direction,
                       "transcendental, picard or mixed")
      ->check(CLI::IsMember({"transcendental", "picard", "mixed"}));

  auto* isotropic = app.add_subcommand(
      "isotropic", "primitive isotropic classes a h + b e for a degree-n K3");
  isotropic->add_option("--degree", o.degree, "K3 degree n")->required();
  isotropic->add_option("--d", o.d, "number of points")->required();

  auto* reflect = app.add_subcommand(
      "reflect", "Picard-rank-2 reflection producing the fibration class");
  reflect->add_option("--d", o.d, "number of points")->required();
  reflect->add_option("--m", o.m, "multiplicity")->required();

  auto* bn = app.add_subcommand(
      "bn", "Brill-Noether certificate and Euler characteristics");
  bn->add_option("--d", o.d, "number of points")->required();
  bn->add_option("--m", o.m, "multiplicity")->required();

  auto* twisted = app.add_subcommand(
      "twisted", "B-field twist: Brauer order and twisted algebraic lattice");
  twisted->add_option("--denominator", o.denominator, "B-field denominator")
      ->required();
  twisted
      ->add_option("--direction", o.direction,
                   "transcendental, picard or mixed")
      ->check(CLI::IsMember({"transcendental", "picard", "mixed"}));
  twisted->add_option("--pic-square", o.pic_square,
                      "square of the Picard generator (positive even)");

  auto* fm = app.add_subcommand(
      "fm", "cohomological-transform report for one (d, m)");
  fm->add_option("--d", o.d, "number of points")->required();
  fm->add_option("--m", o.m, "multiplicity")->required();

  auto* selftest = app.add_subcommand(
      "selftest", "re-derive pinned identities and brute-force oracles");
  selftest->add_option("--grid-max", o.selftest.grid_max,
                       "(d, m) grids run over [2, grid-max]^2");
  selftest->add_option("--degree-max", o.selftest.degree_max,
                       "isotropic brute force: even degrees up to this");
  selftest->add_option("--coeff-bound", o.selftest.coeff_bound,
                       "isotropic brute force: coefficient bound");
  selftest->add_option("--samples", o.selftest.samples,
                       "random samples per property");
  selftest->add_option("--seed", o.selftest.seed, "RNG seed");
  selftest->add_flag("--inject-fault", o.selftest.inject_fault,
                     "deliberately break one identity (the suite must fail)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (scenario->parsed()) {
      hklat::ScenarioConfig cfg;
      cfg.d = o.d;
      cfg.m = o.m;
      if (!o.degree.empty()) {
        cfg.has_degree = true;
        cfg.degree = parse_int(o.degree);
      }
      cfg.with_polar2 = o.with_polar2;
      cfg.b_denominator = o.b_denominator;
      cfg.b_direction = o.b_direction;
      emit(hklat::scenario_document(cfg), o.format);
      return 0;
    }
    if (isotropic->parsed()) {
      hklat::json doc = hklat::isotropic_document(parse_int(o.degree), o.d);
      emit(doc, o.format);
      return doc.at("exists").get<bool>() ? 0 : kExitNonexistence;
    }
    if (reflect->parsed()) {
      emit(hklat::polar2_document(o.d, o.m), o.format);
      return 0;
    }
    if (bn->parsed()) {
      emit(hklat::bn_document(o.d, o.m), o.format);
      return 0;
    }
    if (twisted->parsed()) {
      emit(hklat::twisted_document(o.denominator, o.direction,
                                   parse_int(o.pic_square)),
           o.format);
      return 0;
    }
    if (fm->parsed()) {
      emit(hklat::fm_document(o.d, o.m), o.format);
      return 0;
    }
    if (selftest->parsed()) return run_selftest_command(o);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const hklat::NonexistenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNonexistence;
  } catch (const hklat::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const hklat::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
