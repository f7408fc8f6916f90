#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hklat/mukai.hpp"

using namespace hklat;

TEST_CASE("mukai_extension gram") {
  LatticePtr mid = IntLattice::make({{8}}, {"H"});
  LatticePtr M = mukai_extension(mid);
  CHECK(M->rank() == 3);
  CHECK(M->gram() == IntMat{{0, 0, -1}, {0, 8, 0}, {-1, 0, 0}});
  CHECK(M->labels() == std::vector<std::string>{"unit", "H", "point"});
}

TEST_CASE("model construction guards") {
  CHECK_THROWS_AS(K3Model::generic(7), PreconditionError);   // odd
  CHECK_THROWS_AS(K3Model::generic(-2), PreconditionError);  // negative
  CHECK_THROWS_AS(K3Model::make(IntLattice::make({{2, 0}, {0, 2}})),
                  PreconditionError);  // rank 2 needs indefinite form
  CHECK(K3Model::make(IntLattice::make({{2, 1}, {1, -2}})) != nullptr);
}

TEST_CASE("mukai_pair worked examples") {
  auto model = K3Model::generic(8);
  LatticeVector H = model->polarization();
  LatticeVector zero(model->picard(), {0});
  MukaiVector v(model, 2, H, 2);
  MukaiVector w(model, 1, zero, -1);
  MukaiVector unit(model, 1, zero, 0);
  MukaiVector point(model, 0, zero, 1);
  CHECK(mukai_pair(v, v) == 0);  // 8 - 2*2 - 2*2
  CHECK(mukai_pair(v, w) == 0);  // 0 + 2 - 2
  CHECK(mukai_pair(unit, point) == -1);
  CHECK(mukai_pair(w, w) == 2);
}

TEST_CASE("mukai_pair agrees with the embedded pairing, randomized") {
  auto model = K3Model::make(IntLattice::make({{4, 1}, {1, -6}}));
  std::mt19937_64 rng(41);
  auto rnd = [&rng] { return int(rng() % 21) - 10; };
  for (int trial = 0; trial < 300; ++trial) {
    MukaiVector a(model, rnd(), LatticeVector(model->picard(), {rnd(), rnd()}),
                  rnd());
    MukaiVector b(model, rnd(), LatticeVector(model->picard(), {rnd(), rnd()}),
                  rnd());
    CHECK(mukai_pair(a, b) == pair(a.embed(), b.embed()));
    CHECK(mukai_pair(a, b) == mukai_pair(b, a));
    CHECK(MukaiVector::from_embedded(model, a.embed()) == a);
  }
}

TEST_CASE("mukai_vector_of_sheaf") {
  auto model = degree_model(2, 2);  // degree 8
  LatticeVector H = model->polarization();
  LatticeVector zero(model->picard(), {0});
  // chi = dm with epsilon 1 gives (m, H, (d-1)m).
  CHECK(mukai_vector_of_sheaf(model, 2, H, 4, 1) == bundle_vector(model, 2, 2));
  CHECK(mukai_vector_of_sheaf(model, 1, zero, 0, 1) ==
        ideal_sheaf_vector(model, 2));
  // A sheaf on a curve C in |H| with chi = 1: (0, C, 1).
  MukaiVector curve = mukai_vector_of_sheaf(model, 0, H, 1, 1);
  CHECK(curve.r() == 0);
  CHECK(curve.s() == 1);
  CHECK_THROWS_AS(mukai_vector_of_sheaf(model, 1, H, 1, 2), PreconditionError);
}

TEST_CASE("mukai_vector_of_sheaf is additive in (rank, c1, chi)") {
  auto model = degree_model(3, 2);
  LatticeVector H = model->polarization();
  LatticeVector zero(model->picard(), {0});
  for (int eps : {0, 1}) {
    MukaiVector a = mukai_vector_of_sheaf(model, 2, H, 5, eps);
    MukaiVector b = mukai_vector_of_sheaf(model, 3, Int(2) * H, -1, eps);
    MukaiVector sum = mukai_vector_of_sheaf(model, 5, Int(3) * H, 4, eps);
    CHECK(sum.r() == a.r() + b.r());
    CHECK(sum.c() == a.c() + b.c());
    CHECK(sum.s() == a.s() + b.s());
  }
}

TEST_CASE("moduli_dimension") {
  auto model = K3Model::generic(8);
  LatticeVector zero(model->picard(), {0});
  CHECK(moduli_dimension(MukaiVector(model, 1, zero, -1)) == 4);
  CHECK(moduli_dimension(MukaiVector(model, 2, model->polarization(), 2)) == 2);
  CHECK(moduli_dimension(MukaiVector(model, 1, zero, 1)) == 0);   // square -2
  CHECK_THROWS_WITH_AS(
      moduli_dimension(MukaiVector(model, 2, zero, 1)),  // square -4
      "not a valid moduli dimension", PreconditionError);
}

TEST_CASE("fine_moduli_gcd") {
  auto model = degree_model(2, 2);
  CHECK(fine_moduli_gcd(bundle_vector(model, 2, 2)) == 2);
  CHECK(fine_moduli_gcd(ideal_sheaf_vector(model, 2)) == 1);
  // gcd sees the pairing functional, not the raw coordinates: (0, H, 0) on a
  // degree-8 K3 pairs to multiples of 8.
  MukaiVector col(model, 0, model->polarization(), 0);
  CHECK(fine_moduli_gcd(col) == 8);
  LatticeVector zero(model->picard(), {0});
  CHECK_THROWS_AS(fine_moduli_gcd(MukaiVector(model, 0, zero, 0)),
                  PreconditionError);
}

TEST_CASE("grid identities for the standard actors") {
  for (int d = 2; d <= 12; ++d) {
    for (int m = 2; m <= 12; ++m) {
      auto model = degree_model(d, m);
      MukaiVector v = bundle_vector(model, d, m);
      MukaiVector w = ideal_sheaf_vector(model, d);
      CHECK(mukai_pair(v, v) == 0);
      CHECK(mukai_pair(v, w) == 0);
      CHECK(fine_moduli_gcd(v) == m);
      CHECK(moduli_dimension(w) == 2 * d);
      CHECK(moduli_k3_degree(d, m) == 2 * d - 2);
      CHECK(fibration_base_dimension(d) == d);
    }
  }
}

TEST_CASE("degree guards") {
  CHECK_THROWS_AS(degree_model(1, 2), PreconditionError);
  CHECK_THROWS_AS(degree_model(2, 0), PreconditionError);
  CHECK_THROWS_AS(fibration_base_dimension(1), PreconditionError);
}
