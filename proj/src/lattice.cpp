#include "hklat/lattice.hpp"

#include <utility>

namespace hklat {

IntLattice::IntLattice(IntMat gram, std::vector<std::string> labels, Int det)
    : gram_(std::move(gram)), labels_(std::move(labels)), det_(std::move(det)) {}

LatticePtr IntLattice::make(IntMat gram, std::vector<std::string> labels) {
  const std::size_t n = gram.size();
  if (n == 0) throw PreconditionError("lattice rank must be at least 1");
  for (const auto& row : gram)
    if (row.size() != n)
      throw PreconditionError("Gram matrix must be square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram[i][j] != gram[j][i])
        throw PreconditionError("Gram matrix must be symmetric");
  if (!labels.empty() && labels.size() != n)
    throw PreconditionError("label count must equal the rank");
  Int d = hklat::det(gram);
  if (d == 0) throw PreconditionError("Gram matrix must be nondegenerate");
  return LatticePtr(new IntLattice(std::move(gram), std::move(labels), std::move(d)));
}

bool same_lattice(const LatticePtr& a, const LatticePtr& b) {
  if (!a || !b) return false;
  return a == b || a->gram() == b->gram();
}

namespace {

void require_same(const LatticePtr& a, const LatticePtr& b) {
  if (!same_lattice(a, b)) throw PreconditionError("incompatible lattices");
}

}  // namespace

LatticeVector::LatticeVector(LatticePtr lattice, IntVec coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (!lattice_) throw PreconditionError("vector requires a lattice");
  if (coords_.size() != lattice_->rank())
    throw PreconditionError("coordinate count must equal the lattice rank");
}

bool LatticeVector::is_zero() const { return is_zero_row(coords_); }

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
  require_same(lattice_, o.lattice_);
  IntVec c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return {lattice_, std::move(c)};
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
  require_same(lattice_, o.lattice_);
  IntVec c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
  return {lattice_, std::move(c)};
}

LatticeVector LatticeVector::operator-() const {
  IntVec c(coords_);
  for (auto& x : c) x = -x;
  return {lattice_, std::move(c)};
}

bool LatticeVector::operator==(const LatticeVector& o) const {
  return same_lattice(lattice_, o.lattice_) && coords_ == o.coords_;
}

LatticeVector operator*(const Int& k, const LatticeVector& x) {
  IntVec c(x.coords());
  for (auto& v : c) v *= k;
  return {x.lattice(), std::move(c)};
}

RationalVector::RationalVector(LatticePtr lattice, RatVec coords)
    : lattice_(std::move(lattice)), coords_(std::move(coords)) {
  if (!lattice_) throw PreconditionError("vector requires a lattice");
  if (coords_.size() != lattice_->rank())
    throw PreconditionError("coordinate count must equal the lattice rank");
}

RationalVector::RationalVector(const LatticeVector& x)
    : lattice_(x.lattice()), coords_(x.coords().begin(), x.coords().end()) {}

RationalVector RationalVector::operator+(const RationalVector& o) const {
  require_same(lattice_, o.lattice_);
  RatVec c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return {lattice_, std::move(c)};
}

bool RationalVector::operator==(const RationalVector& o) const {
  return same_lattice(lattice_, o.lattice_) && coords_ == o.coords_;
}

RationalVector operator*(const Rat& k, const RationalVector& x) {
  RatVec c(x.coords());
  for (auto& v : c) v *= k;
  return {x.lattice(), std::move(c)};
}

Int pair(const LatticeVector& x, const LatticeVector& y) {
  require_same(x.lattice(), y.lattice());
  const IntMat& g = x.lattice()->gram();
  Int acc = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (x.coords()[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < g.size(); ++j) row += g[i][j] * y.coords()[j];
    acc += x.coords()[i] * row;
  }
  return acc;
}

Rat pair(const RationalVector& x, const RationalVector& y) {
  require_same(x.lattice(), y.lattice());
  const IntMat& g = x.lattice()->gram();
  Rat acc = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (x.coords()[i] == 0) continue;
    Rat row = 0;
    for (std::size_t j = 0; j < g.size(); ++j)
      row += Rat(g[i][j]) * y.coords()[j];
    acc += x.coords()[i] * row;
  }
  return acc;
}

bool is_primitive(const LatticeVector& x) {
  if (x.is_zero()) throw PreconditionError("zero vector has no primitivity");
  Int g = 0;
  for (const Int& c : x.coords()) g = gcd(g, c);
  return g == 1;
}

LatticeVector reflect(const LatticeVector& v, const LatticeVector& c) {
  require_same(v.lattice(), c.lattice());
  if (pair(v, v) != 2)
    throw PreconditionError("reflection vector must have square 2");
  return pair(c, v) * v - c;
}

std::vector<LatticeVector> orthogonal_complement(
    const LatticePtr& lattice, const std::vector<LatticeVector>& span) {
  if (!lattice) throw PreconditionError("orthogonal_complement requires a lattice");
  IntMat constraints;
  for (const auto& s : span) {
    require_same(lattice, s.lattice());
    // Row i of the constraint matrix is G s, so the condition reads x . (G s) = 0.
    IntVec row(lattice->rank(), 0);
    for (std::size_t i = 0; i < lattice->rank(); ++i)
      for (std::size_t j = 0; j < lattice->rank(); ++j)
        row[i] += lattice->gram()[i][j] * s.coords()[j];
    constraints.push_back(std::move(row));
  }
  IntMat basis = kernel(constraints, lattice->rank());
  std::vector<LatticeVector> out;
  out.reserve(basis.size());
  for (auto& row : basis) out.emplace_back(lattice, std::move(row));
  return out;
}

Int quotient_square(const LatticeVector& v, const LatticeVector& w) {
  require_same(v.lattice(), w.lattice());
  if (pair(v, v) != 0)
    throw PreconditionError("quotient_square requires an isotropic v: (v, v) = 0");
  if (pair(v, w) != 0)
    throw PreconditionError("quotient_square requires (v, w) = 0");
  // On v^perp the square descends to v^perp / v unchanged: (w + t v)^2 = w^2.
  return pair(w, w);
}

std::vector<LatticeVector> intersect_rational(
    const std::vector<RationalVector>& sub, const LatticePtr& lattice) {
  if (!lattice) throw PreconditionError("intersect_rational requires a lattice");
  IntMat rows;
  for (const auto& v : sub) {
    require_same(lattice, v.lattice());
    Int den = 1;
    for (const Rat& q : v.coords()) den = lcm(den, denominator(q));
    IntVec row(lattice->rank());
    for (std::size_t i = 0; i < row.size(); ++i)
      row[i] = numerator(Rat(v.coords()[i] * den));
    rows.push_back(std::move(row));
  }
  IntMat basis = saturate(rows, lattice->rank());
  std::vector<LatticeVector> out;
  out.reserve(basis.size());
  for (auto& row : basis) out.emplace_back(lattice, std::move(row));
  return out;
}

}  // namespace hklat
