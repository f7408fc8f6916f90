#pragma once

#include <string>
#include <vector>

#include "hklat/lattice.hpp"

namespace hklat {

// Degree-2 cohomology of the Hilbert scheme of d points on a surface with the
// Beauville-Bogomolov form: base lattice plus Z e with (e, e) = -2(d-1),
// orthogonal to the base.
class BBLattice {
 public:
  BBLattice(LatticePtr base, int d);

  const LatticePtr& base() const { return base_; }
  int d() const { return d_; }
  const LatticePtr& full() const { return full_; }

  LatticeVector exceptional() const;  // e
  // Class with the given base coordinates and e-coefficient.
  LatticeVector make_class(const IntVec& base_coords, const Int& e_coeff) const;

 private:
  LatticePtr base_;
  int d_ = 0;
  LatticePtr full_;
};

// Fujiki constant of the d-point Hilbert scheme: (2d)! / (d! 2^d).
Int fujiki_constant(int d);

// Euler characteristic d + 1 of a line bundle with isotropic first Chern
// class: the expected h^0 for the fibration pullback, matching a base P^d.
Int isotropic_chi(int d);

// Does a h - b e with a, b > 0 coprime satisfy q(a h - b e) = 0 on the
// d-point Hilbert scheme of a degree-n K3?  Equivalent to n a^2 = (2d-2) b^2,
// solved exactly through squarefree parts.
struct IsotropicWitness {
  bool exists = false;
  Int k;  // a = k
  Int m;  // b = m
};
IsotropicWitness isotropic_exists(const Int& n, int d);

struct IsotropicSolution {
  Int a;
  Int b;
  LatticeVector cls;  // a h + b e in the rank-2 lattice [[n], [-2(d-1)]]
};

// All primitive solutions of q(a h + b e) = 0 with a > 0: either none or the
// pair (k, m), (k, -m) from the witness.
std::vector<IsotropicSolution> primitive_isotropic_classes(const Int& n, int d);

// The candidate fibration class k h - m e (positive h-part, negative e-part);
// throws NonexistenceError when the form does not represent zero.
LatticeVector fibration_class(const Int& n, int d);

// Picard-rank-2 scenario: K3 of degree 2d with an extra polarization of
// degree 2d-2, intersection 2d-1+m.  Reflecting f_{2d-2} - e in the square-2
// class f_2d - e produces (m+1) f_2d - f_{2d-2} - m e, whose divisor part has
// square (2d-2)m^2; the two pairing checks are the effectivity criterion.
struct Polar2Report {
  int d = 0;
  int m = 0;
  LatticePtr picard;            // [[2d, 2d-1+m], [2d-1+m, 2d-2]]
  LatticePtr bb;                // picard plus the exceptional direction
  LatticeVector square2_class;  // f_2d - e
  LatticeVector source_class;   // f_{2d-2} - e
  LatticeVector reflected;      // (m+1) f_2d - f_{2d-2} - m e
  LatticeVector divisor_part;   // (m+1) f_2d - f_{2d-2}
  Int divisor_square;           // (2d-2) m^2
  Int pairing_with_f2d;         // positive
  bool effective;
};
Polar2Report polar2_scenario(int d, int m);

// "a h + b e" with the usual elisions: "h - e", "2h + 3e", "h".
std::string class_name(const Int& a, const Int& b);

}  // namespace hklat
