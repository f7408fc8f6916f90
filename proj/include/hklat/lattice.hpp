#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hklat/intmat.hpp"

namespace hklat {

class IntLattice;
using LatticePtr = std::shared_ptr<const IntLattice>;

// Free Z-module of finite rank with a nondegenerate symmetric integer Gram
// matrix.  Immutable; vectors hold a shared pointer to their lattice so
// mixed-lattice operations can be rejected.
class IntLattice {
 public:
  static LatticePtr make(IntMat gram, std::vector<std::string> labels = {});

  std::size_t rank() const { return gram_.size(); }
  const IntMat& gram() const { return gram_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Int& det() const { return det_; }

 private:
  IntLattice(IntMat gram, std::vector<std::string> labels, Int det);

  IntMat gram_;
  std::vector<std::string> labels_;
  Int det_;
};

// Same object or equal Gram matrices; labels are documentation only.
bool same_lattice(const LatticePtr& a, const LatticePtr& b);

class LatticeVector {
 public:
  LatticeVector(LatticePtr lattice, IntVec coords);

  const LatticePtr& lattice() const { return lattice_; }
  const IntVec& coords() const { return coords_; }
  bool is_zero() const;

  LatticeVector operator+(const LatticeVector& o) const;
  LatticeVector operator-(const LatticeVector& o) const;
  LatticeVector operator-() const;
  bool operator==(const LatticeVector& o) const;

 private:
  LatticePtr lattice_;
  IntVec coords_;
};

LatticeVector operator*(const Int& k, const LatticeVector& x);

class RationalVector {
 public:
  RationalVector(LatticePtr lattice, RatVec coords);
  explicit RationalVector(const LatticeVector& x);

  const LatticePtr& lattice() const { return lattice_; }
  const RatVec& coords() const { return coords_; }

  RationalVector operator+(const RationalVector& o) const;
  bool operator==(const RationalVector& o) const;

 private:
  LatticePtr lattice_;
  RatVec coords_;
};

RationalVector operator*(const Rat& k, const RationalVector& x);

// Bilinear form given by the Gram matrix.
Int pair(const LatticeVector& x, const LatticeVector& y);
Rat pair(const RationalVector& x, const RationalVector& y);

// gcd of the coordinates is 1.  The zero vector is rejected.
bool is_primitive(const LatticeVector& x);

// c |-> -c + (c,v) v for a vector v of square 2.  An involutive isometry.
LatticeVector reflect(const LatticeVector& v, const LatticeVector& c);

// HNF basis of { x : (x, s) = 0 for all s in span }; saturated by construction.
std::vector<LatticeVector> orthogonal_complement(
    const LatticePtr& lattice, const std::vector<LatticeVector>& span);

// (w, w) for w orthogonal to an isotropic v: the square of the image of w in
// the rank-reduced form v^perp / v, which is well defined exactly then.
Int quotient_square(const LatticeVector& v, const LatticeVector& w);

// HNF basis of (Q-span of sub) intersected with the integer lattice.
std::vector<LatticeVector> intersect_rational(
    const std::vector<RationalVector>& sub, const LatticePtr& lattice);

}  // namespace hklat
