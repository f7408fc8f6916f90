#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hklat/intmat.hpp"

using namespace hklat;

namespace {

IntMat mul(const IntMat& a, const IntMat& b, std::size_t bcols) {
  IntMat c(a.size(), IntVec(bcols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < bcols; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

}  // namespace

TEST_CASE("hnf of a worked example") {
  // Row span of {(2, 4, 4), (-2, -2, 0)}: HNF {(2, 0, -4), (0, 2, 4)}.
  IntMat h = hnf({{2, 4, 4}, {-2, -2, 0}});
  CHECK(h == IntMat{{2, 0, -4}, {0, 2, 4}});
}

TEST_CASE("hnf normalization rules") {
  // Pivots positive, entries above a pivot in [0, pivot), zero rows dropped.
  IntMat h = hnf({{0, 0, 0}, {-3, 1, 2}, {6, -2, -4}});
  CHECK(h == IntMat{{3, -1, -2}});
  h = hnf({{5, 3}, {0, 2}});
  CHECK(h == IntMat{{5, 1}, {0, 2}});
}

TEST_CASE("hnf is canonical on the row lattice") {
  std::mt19937_64 rng(7);
  auto rnd = [&rng] { return int(rng() % 19) - 9; };
  for (int trial = 0; trial < 200; ++trial) {
    IntMat a(3, IntVec(4));
    for (auto& row : a)
      for (auto& x : row) x = rnd();
    IntMat h1 = hnf(a);
    // Apply a random unimodular row operation; the HNF must not move.
    IntMat b = a;
    b[0] = b[0];
    for (std::size_t j = 0; j < 4; ++j) {
      b[0][j] += 3 * b[1][j];
      b[2][j] -= 2 * b[0][j];
    }
    std::swap(b[1], b[2]);
    CHECK(hnf(b) == h1);
  }
}

TEST_CASE("hnf_with_transform tracks a unimodular matrix") {
  std::mt19937_64 rng(11);
  auto rnd = [&rng] { return int(rng() % 21) - 10; };
  for (int trial = 0; trial < 100; ++trial) {
    IntMat a(4, IntVec(3));
    for (auto& row : a)
      for (auto& x : row) x = rnd();
    auto [h, u] = hnf_with_transform(a);
    CHECK(h.size() == a.size());  // zero rows retained
    CHECK(mul(u, a, 3) == h);
    Int du = det(u);
    CHECK((du == 1 || du == -1));
  }
}

TEST_CASE("kernel") {
  // x + y + z = 0 over Z: rank-2 kernel.
  IntMat k = kernel({{1, 1, 1}}, 3);
  CHECK(k == IntMat{{1, 0, -1}, {0, 1, -1}});
  // Full-rank constraints: trivial kernel.
  CHECK(kernel({{1, 0}, {0, 1}}, 2).empty());
  // No constraints: everything.
  CHECK(kernel(IntMat{}, 2) == identity(2));
  // Kernel vectors of {(2, 4)} must be primitive: (2, -1), not (4, -2).
  CHECK(kernel({{2, 4}}, 2) == IntMat{{2, -1}});
}

TEST_CASE("kernel solves the system, randomized") {
  std::mt19937_64 rng(13);
  auto rnd = [&rng] { return int(rng() % 15) - 7; };
  for (int trial = 0; trial < 200; ++trial) {
    IntMat a(2, IntVec(5));
    for (auto& row : a)
      for (auto& x : row) x = rnd();
    IntMat k = kernel(a, 5);
    for (const auto& v : k) {
      for (const auto& row : a) {
        Int dot = 0;
        for (std::size_t j = 0; j < 5; ++j) dot += row[j] * v[j];
        CHECK(dot == 0);
      }
    }
    // Rank-nullity over Q.
    CHECK(hnf(a).size() + k.size() == 5);
  }
}

TEST_CASE("saturate") {
  // span{(2, 0), (0, 3)} over Q meets Z^2 in all of Z^2.
  CHECK(saturate({{2, 0}, {0, 3}}, 2) == identity(2));
  // span{(2, 4)} over Q meets Z^2 in Z (1, 2).
  CHECK(saturate({{2, 4}}, 2) == IntMat{{1, 2}});
  // Already saturated input is unchanged.
  CHECK(saturate({{1, 2, 3}}, 3) == IntMat{{1, 2, 3}});
  CHECK(saturate(IntMat{}, 3).empty());
}

TEST_CASE("saturation via maximal minors, randomized") {
  // A rank-2 integer 2x4 matrix is saturated iff the gcd of its 2x2 minors
  // is 1; check saturate() output always has coprime maximal minors and the
  // same rational span as the input.
  std::mt19937_64 rng(17);
  auto rnd = [&rng] { return int(rng() % 13) - 6; };
  for (int trial = 0; trial < 300; ++trial) {
    IntMat a(2, IntVec(4));
    for (auto& row : a)
      for (auto& x : row) x = rnd();
    if (hnf(a).size() != 2) continue;  // need full rank for the minor test
    IntMat s = saturate(a, 4);
    REQUIRE(s.size() == 2);
    Int g = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        g = gcd(g, abs(s[0][i] * s[1][j] - s[0][j] * s[1][i]));
    CHECK(g == 1);
    // Same rational span: each original row is in the saturation, which as a
    // lattice contains the row lattice of a with finite index.
    IntMat joint = a;
    joint.push_back(s[0]);
    joint.push_back(s[1]);
    CHECK(hnf(joint) == s);
  }
}

TEST_CASE("det") {
  CHECK(det({{Int(2)}}) == 2);
  CHECK(det({{1, 2}, {3, 4}}) == -2);
  CHECK(det({{0, 1}, {1, 0}}) == -1);
  CHECK(det({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}) == 30);
  CHECK(det({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  // 4x4 with a zero leading pivot exercises the row swap; cofactor expansion
  // along the first column gives 7 - 48 = -41.
  CHECK(det({{0, 2, 1, 0}, {1, 0, 0, 3}, {2, 1, 1, 1}, {0, 0, 4, 1}}) == -41);
}

TEST_CASE("det agrees with cofactor expansion, randomized") {
  std::mt19937_64 rng(23);
  auto rnd = [&rng] { return int(rng() % 11) - 5; };
  for (int trial = 0; trial < 200; ++trial) {
    IntMat a(3, IntVec(3));
    for (auto& row : a)
      for (auto& x : row) x = rnd();
    Int cof = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
              a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
              a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    CHECK(det(a) == cof);
  }
}
