#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hklat/numeric.hpp"

namespace hklat {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row major; an empty vector is the 0 x n matrix
using RatVec = std::vector<Rat>;

IntMat identity(std::size_t n);
IntMat transpose(const IntMat& a, std::size_t ncols);
bool is_zero_row(const IntVec& v);

// Row-style Hermite normal form: pivots positive, entries above each pivot
// reduced into [0, pivot), zero rows dropped.  Canonical for a given row span,
// so HNF equality is row-lattice equality.
IntMat hnf(IntMat a);

// As hnf() but keeps zero rows (at the bottom) and also returns the unimodular
// transform u with u * input == result.
std::pair<IntMat, IntMat> hnf_with_transform(IntMat a);

// Basis, in HNF, of { x in Z^ncols : a x = 0 }.  Kernels of integer matrices
// are saturated automatically.
IntMat kernel(const IntMat& a, std::size_t ncols);

// Basis, in HNF, of (Q-span of the rows) intersected with Z^ncols, computed as
// a double kernel.
IntMat saturate(const IntMat& rows, std::size_t ncols);

// Determinant by Bareiss fraction-free elimination.
Int det(IntMat a);

}  // namespace hklat
