#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hklat/lattice.hpp"

namespace hklat {

// Rank p+2 lattice on (unit, middle basis..., point) with the pairing
// <(r,c,s),(r',c',s')> = (c,c') - r s' - s r'.
LatticePtr mukai_extension(const LatticePtr& middle);

class K3Model;
using K3ModelPtr = std::shared_ptr<const K3Model>;

// Algebraic model of a projective K3 surface: its Picard lattice plus the two
// hyperbolic directions (rank 0 and 4 classes) glued on by mukai_extension.
class K3Model {
 public:
  static K3ModelPtr make(LatticePtr picard, std::string label = {});
  // Picard rank 1, generated by a polarization of the given even degree.
  static K3ModelPtr generic(const Int& degree, std::string label = {});

  const LatticePtr& picard() const { return picard_; }
  const LatticePtr& mukai_lattice() const { return mukai_; }
  const std::string& label() const { return label_; }
  LatticeVector polarization() const;  // first Picard basis vector

 private:
  K3Model(LatticePtr picard, LatticePtr mukai, std::string label);

  LatticePtr picard_;
  LatticePtr mukai_;
  std::string label_;
};

bool same_model(const K3ModelPtr& a, const K3ModelPtr& b);

// Triple (r, c, s) with r, s integers and c in the Picard lattice.
class MukaiVector {
 public:
  MukaiVector(K3ModelPtr model, Int r, LatticeVector c, Int s);

  const K3ModelPtr& model() const { return model_; }
  const Int& r() const { return r_; }
  const LatticeVector& c() const { return c_; }
  const Int& s() const { return s_; }
  bool is_zero() const;

  LatticeVector embed() const;  // coordinates (r, c..., s) in mukai_lattice()
  static MukaiVector from_embedded(const K3ModelPtr& model,
                                   const LatticeVector& x);

  bool operator==(const MukaiVector& o) const;

 private:
  K3ModelPtr model_;
  Int r_;
  LatticeVector c_;
  Int s_;
};

Int mukai_pair(const MukaiVector& v, const MukaiVector& w);

// (rank, c1, chi - epsilon * rank): converts Euler-characteristic bookkeeping
// into the degree-4 component.  epsilon = 1 is the usual convention on a K3
// (chi(E) = r + s); epsilon = 0 takes chi as the degree-4 component directly,
// as for sheaves supported on curves, whose surface rank is 0.
MukaiVector mukai_vector_of_sheaf(const K3ModelPtr& model, const Int& rank,
                                  const LatticeVector& c1, const Int& chi,
                                  int epsilon);

// <v,v> + 2; rejects odd or < 0 results.
Int moduli_dimension(const MukaiVector& v);

// gcd of r, s and the pairings of c with the Picard basis; divisibility of the
// functional <v, -> on the full algebraic lattice.  1 means a fine moduli
// space, m > 1 leaves a Brauer obstruction of order m.
Int fine_moduli_gcd(const MukaiVector& v);

// The standard actors: on a K3 of degree (2d-2)m^2 with polarization H,
// v = (m, H, (d-1)m) is isotropic and w = (1, 0, 1-d) is the ideal-sheaf
// vector of d points, orthogonal to v.
K3ModelPtr degree_model(int d, int m);
MukaiVector bundle_vector(const K3ModelPtr& model, int d, int m);
MukaiVector ideal_sheaf_vector(const K3ModelPtr& model, int d);

// quotient_square(v, w) = 2d - 2: the moduli space of sheaves with vector v is
// again a K3, of degree 2d - 2.
Int moduli_k3_degree(int d, int m);

// Half the dimension of the moduli space of w-sheaves = d: the dimension of
// the base of the fibration.
Int fibration_base_dimension(int d);

}  // namespace hklat
