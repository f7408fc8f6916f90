#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hklat/hilbert.hpp"

using namespace hklat;

TEST_CASE("BBLattice gram") {
  BBLattice bb(IntLattice::make({{8}}, {"h"}), 2);
  CHECK(bb.full()->gram() == IntMat{{8, 0}, {0, -2}});
  CHECK(bb.full()->labels() == std::vector<std::string>{"h", "e"});
  CHECK(pair(bb.exceptional(), bb.exceptional()) == -2);
  BBLattice bb5(IntLattice::make({{18}}, {"h"}), 5);
  CHECK(pair(bb5.exceptional(), bb5.exceptional()) == -8);
  CHECK_THROWS_AS(BBLattice(IntLattice::make({{8}}), 1), PreconditionError);
}

TEST_CASE("fujiki_constant") {
  CHECK(fujiki_constant(1) == 1);
  CHECK(fujiki_constant(2) == 3);
  CHECK(fujiki_constant(3) == 15);
  CHECK(fujiki_constant(4) == 105);
  // (2d)!/(d! 2^d) is the product of the first d odd numbers.
  Int odd = 1;
  for (int d = 1; d <= 50; ++d) {
    odd *= 2 * d - 1;
    CHECK(fujiki_constant(d) == odd);
  }
  CHECK_THROWS_AS(fujiki_constant(0), PreconditionError);
}

TEST_CASE("isotropic_chi") {
  for (int d = 1; d <= 50; ++d) CHECK(isotropic_chi(d) == d + 1);
}

TEST_CASE("isotropic_exists worked examples") {
  IsotropicWitness w = isotropic_exists(8, 2);
  CHECK(w.exists);
  CHECK(w.k == 1);
  CHECK(w.m == 2);

  w = isotropic_exists(18, 5);  // 2*9 vs 8 = 2*4: k = 2, m = 3
  CHECK(w.exists);
  CHECK(w.k == 2);
  CHECK(w.m == 3);

  CHECK(!isotropic_exists(4, 2).exists);
  CHECK(!isotropic_exists(6, 2).exists);
  CHECK(isotropic_exists(2, 2).m == 1);  // degree 2d-2 itself

  CHECK_THROWS_WITH_AS(isotropic_exists(7, 2), "not a K3 degree",
                       PreconditionError);
  CHECK_THROWS_WITH_AS(isotropic_exists(0, 2), "not a K3 degree",
                       PreconditionError);
  CHECK_THROWS_AS(isotropic_exists(8, 1), PreconditionError);
}

TEST_CASE("primitive_isotropic_classes vs brute force") {
  const int bound = 60;
  for (int n = 2; n <= 80; n += 2) {
    for (int d = 2; d <= 8; ++d) {
      std::vector<std::pair<long long, long long>> oracle;
      for (long long a = 1; a <= bound; ++a)
        for (long long b = -bound; b <= bound; ++b)
          if (n * a * a == 2 * (d - 1) * b * b &&
              std::gcd(a, b < 0 ? -b : b) == 1)
            oracle.emplace_back(a, b);
      std::vector<std::pair<long long, long long>> got;
      for (const auto& s : primitive_isotropic_classes(n, d))
        got.emplace_back(s.a.convert_to<long long>(),
                         s.b.convert_to<long long>());
      std::sort(oracle.begin(), oracle.end());
      std::sort(got.begin(), got.end());
      CHECK(oracle == got);
    }
  }
}

TEST_CASE("solution classes are isotropic and primitive") {
  auto sols = primitive_isotropic_classes(8, 2);
  REQUIRE(sols.size() == 2);
  for (const auto& s : sols) {
    CHECK(pair(s.cls, s.cls) == 0);
    CHECK(is_primitive(s.cls));
  }
  CHECK(sols[0].cls.coords() == IntVec{1, 2});
  CHECK(sols[1].cls.coords() == IntVec{1, -2});
}

TEST_CASE("fibration_class") {
  CHECK(fibration_class(8, 2).coords() == IntVec{1, -2});
  CHECK(fibration_class(18, 5).coords() == IntVec{2, -3});
  CHECK(fibration_class(2, 2).coords() == IntVec{1, -1});
  CHECK_THROWS_WITH_AS(fibration_class(6, 2),
                       "Bogomolov-Beauville form does not represent zero",
                       NonexistenceError);
  // Fibration classes over the (d, m) grid.
  for (int d = 2; d <= 10; ++d)
    for (int m = 1; m <= 10; ++m) {
      LatticeVector f = fibration_class(Int(2 * d - 2) * m * m, d);
      CHECK(f.coords() == IntVec({1, Int(-m)}));
    }
}

TEST_CASE("polar2_scenario") {
  Polar2Report r = polar2_scenario(2, 2);
  CHECK(r.picard->gram() == IntMat{{4, 5}, {5, 2}});
  CHECK(r.square2_class.coords() == IntVec{1, 0, -1});
  CHECK(r.source_class.coords() == IntVec{0, 1, -1});
  CHECK(r.reflected.coords() == IntVec{3, -1, -2});
  CHECK(r.divisor_square == 8);
  CHECK(r.pairing_with_f2d == 7);  // (3 f1 - f2, f1) = 12 - 5
  CHECK(r.effective);

  Polar2Report r32 = polar2_scenario(3, 2);
  CHECK(r32.picard->gram() == IntMat{{6, 7}, {7, 4}});
  CHECK(r32.divisor_square == 16);

  for (int d = 2; d <= 10; ++d)
    for (int m = 2; m <= 10; ++m) {
      Polar2Report rep = polar2_scenario(d, m);
      CHECK(rep.divisor_square == Int(2 * d - 2) * m * m);
      CHECK(rep.pairing_with_f2d == Int(m) * (2 * d - 1) + 1);
      // The reflected class and the two e-free pieces are consistent.
      CHECK(rep.reflected ==
            rep.divisor_part - (Int(m) * BBLattice(rep.picard, d).exceptional()));
    }

  CHECK_THROWS_AS(polar2_scenario(2, 1), PreconditionError);
}

TEST_CASE("class_name") {
  CHECK(class_name(1, -2) == "h - 2e");
  CHECK(class_name(2, 3) == "2h + 3e");
  CHECK(class_name(1, -1) == "h - e");
  CHECK(class_name(1, 0) == "h");
  CHECK(class_name(0, -1) == "-e");
  CHECK(class_name(0, 0) == "0");
  CHECK(class_name(-1, 1) == "-h + e");
}
