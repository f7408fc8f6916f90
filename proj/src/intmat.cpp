#include "hklat/intmat.hpp"

#include <algorithm>

namespace hklat {

IntMat identity(std::size_t n) {
  IntMat a(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) a[i][i] = 1;
  return a;
}

IntMat transpose(const IntMat& a, std::size_t ncols) {
  IntMat t(ncols, IntVec(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != ncols)
      throw PreconditionError("transpose: ragged matrix");
    for (std::size_t j = 0; j < ncols; ++j) t[j][i] = a[i][j];
  }
  return t;
}

bool is_zero_row(const IntVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

namespace {

void sub_scaled(IntVec& target, const Int& q, const IntVec& src) {
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * src[j];
}

void negate_row(IntVec& v) {
  for (auto& x : v) x = -x;
}

// Shared HNF worker.  If u is nonnull it is kept synchronized so that
// (*u) * input == current state of a; zero rows collect at the bottom.
void hnf_in_place(IntMat& a, IntMat* u) {
  const std::size_t rows = a.size();
  if (rows == 0) return;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < rows; ++j) {
    // Euclidean elimination below row r in column j: repeatedly move the
    // smallest nonzero entry up and reduce the others modulo it.
    for (;;) {
      std::size_t piv = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a[i][j] != 0 && (piv == rows || abs(a[i][j]) < abs(a[piv][j])))
          piv = i;
      if (piv == rows) break;  // column is zero at and below r
      std::swap(a[piv], a[r]);
      if (u) std::swap((*u)[piv], (*u)[r]);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a[i][j] == 0) continue;
        Int q = a[i][j] / a[r][j];
        sub_scaled(a[i], q, a[r]);
        if (u) sub_scaled((*u)[i], q, (*u)[r]);
        if (a[i][j] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (a[r][j] == 0) continue;
    if (a[r][j] < 0) {
      negate_row(a[r]);
      if (u) negate_row((*u)[r]);
    }
    // Reduce the entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(a[i][j], a[r][j]);
      if (q != 0) {
        sub_scaled(a[i], q, a[r]);
        if (u) sub_scaled((*u)[i], q, (*u)[r]);
      }
    }
    ++r;
  }
}

}  // namespace

IntMat hnf(IntMat a) {
  hnf_in_place(a, nullptr);
  while (!a.empty() && is_zero_row(a.back())) a.pop_back();
  return a;
}

std::pair<IntMat, IntMat> hnf_with_transform(IntMat a) {
  IntMat u = identity(a.size());
  hnf_in_place(a, &u);
  return {std::move(a), std::move(u)};
}

IntMat kernel(const IntMat& a, std::size_t ncols) {
  // Row-reduce the transpose while tracking the transform; rows of the
  // transform opposite zero rows of the HNF are a kernel basis.
  auto [h, u] = hnf_with_transform(transpose(a, ncols));
  IntMat out;
  for (std::size_t i = 0; i < h.size(); ++i)
    if (is_zero_row(h[i])) out.push_back(u[i]);
  return hnf(std::move(out));
}

IntMat saturate(const IntMat& rows, std::size_t ncols) {
  if (rows.empty()) return {};
  // Q-span(rows) meet Z^n is the kernel of the kernel: integer kernels are
  // saturated, and x is in the double kernel iff x is orthogonal to the
  // orthogonal complement of the row span, i.e. in the rational row span.
  return kernel(kernel(rows, ncols), ncols);
}

Int det(IntMat a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw PreconditionError("det: matrix must be square");
  if (n == 0) return 1;
  // Bareiss fraction-free elimination; every division is exact.
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace hklat
