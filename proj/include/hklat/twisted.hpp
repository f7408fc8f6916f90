#pragma once

#include <memory>
#include <vector>

#include "hklat/lattice.hpp"

namespace hklat {

class H2Model;
using H2ModelPtr = std::shared_ptr<const H2Model>;

// Finite-rank stand-in for the degree-2 cohomology of a surface, with a
// distinguished saturated Picard sublattice.  total() is the mukai_extension,
// where rational (r, c, s) triples live.
class H2Model {
 public:
  static H2ModelPtr make(LatticePtr h2, std::vector<LatticeVector> pic_basis);

  const LatticePtr& h2() const { return h2_; }
  const std::vector<LatticeVector>& pic_basis() const { return pic_; }
  const LatticePtr& total() const { return total_; }

 private:
  H2Model(LatticePtr h2, std::vector<LatticeVector> pic, LatticePtr total);

  LatticePtr h2_;
  std::vector<LatticeVector> pic_;
  LatticePtr total_;
};

bool same_model(const H2ModelPtr& a, const H2ModelPtr& b);

// Rational class B in h2 x Q twisting the surface.
class BField {
 public:
  BField(H2ModelPtr model, RatVec coords);

  const H2ModelPtr& model() const { return model_; }
  const RatVec& coords() const { return coords_; }
  RationalVector as_vector() const;
  Rat square() const;

 private:
  H2ModelPtr model_;
  RatVec coords_;
};

// Rational triple (r, c, s) in total() x Q.
struct TwistedTriple {
  H2ModelPtr model;
  Rat r;
  RatVec c;
  Rat s;

  RationalVector as_vector() const;  // coordinates (r, c..., s)
  bool operator==(const TwistedTriple& o) const;
};

TwistedTriple make_triple(H2ModelPtr model, Rat r, RatVec c, Rat s);

Rat mukai_pair(const TwistedTriple& x, const TwistedTriple& y);

// Multiplication by exp(B) = 1 + B + B^2/2:
// (r, c, s) |-> (r, c + r B, s + (B, c) + r (B, B)/2).  An isometry of the
// rational Mukai pairing; exp(-B) inverts it.
TwistedTriple exp_b_action(const BField& b, const TwistedTriple& t);

// Integer triples that stay algebraic after the B-field twist:
// exp(B)(Z + Pic + Z) intersected with the integral lattice, spanned over Q by
// (1, B, (B,B)/2), (0, p, (B, p)) for Picard p, and (0, 0, 1).  Returned as an
// HNF basis inside total(); the rank is always 2 + |pic_basis|.
std::vector<LatticeVector> twisted_algebraic_lattice(const BField& b);

// Order of B in (h2 x Q) / (Z^n + Pic x Q): the smallest k with k B integral
// up to a rational Picard class.  This is the order of the Brauer class of
// the twist.
Int brauer_order(const BField& b);

// Smallest positive rank component among the integer triples in the span of
// the given basis; every rank is a multiple of it.
Int minimal_positive_rank(const std::vector<LatticeVector>& twisted_basis);

}  // namespace hklat
