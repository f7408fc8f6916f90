#include "hklat/mukai.hpp"

#include <utility>

namespace hklat {

LatticePtr mukai_extension(const LatticePtr& middle) {
  if (!middle) throw PreconditionError("mukai_extension requires a lattice");
  const std::size_t p = middle->rank();
  IntMat g(p + 2, IntVec(p + 2, 0));
  g[0][p + 1] = -1;
  g[p + 1][0] = -1;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) g[1 + i][1 + j] = middle->gram()[i][j];
  std::vector<std::string> labels;
  labels.reserve(p + 2);
  labels.push_back("unit");
  for (std::size_t i = 0; i < p; ++i)
    labels.push_back(middle->labels().empty() ? "b" + std::to_string(i + 1)
                                              : middle->labels()[i]);
  labels.push_back("point");
  return IntLattice::make(std::move(g), std::move(labels));
}

K3Model::K3Model(LatticePtr picard, LatticePtr mukai, std::string label)
    : picard_(std::move(picard)), mukai_(std::move(mukai)), label_(std::move(label)) {}

K3ModelPtr K3Model::make(LatticePtr picard, std::string label) {
  if (!picard) throw PreconditionError("K3 model requires a Picard lattice");
  if (picard->rank() == 1) {
    const Int& d = picard->gram()[0][0];
    if (d <= 0 || d % 2 != 0)
      throw PreconditionError(
          "rank-1 Picard lattice of a K3 must have positive even degree");
  } else if (picard->rank() == 2) {
    // Hyperbolic signature (1, 1) for a projective surface.
    if (picard->det() >= 0)
      throw PreconditionError(
          "rank-2 Picard lattice of a projective K3 must have negative "
          "determinant");
  }
  LatticePtr mukai = mukai_extension(picard);
  return K3ModelPtr(new K3Model(std::move(picard), std::move(mukai), std::move(label)));
}

K3ModelPtr K3Model::generic(const Int& degree, std::string label) {
  if (label.empty()) label = "K3 of degree " + degree.str();
  return make(IntLattice::make({{degree}}, {"H"}), std::move(label));
}

LatticeVector K3Model::polarization() const {
  IntVec c(picard_->rank(), 0);
  c[0] = 1;
  return {picard_, std::move(c)};
}

bool same_model(const K3ModelPtr& a, const K3ModelPtr& b) {
  if (!a || !b) return false;
  return a == b || same_lattice(a->picard(), b->picard());
}

MukaiVector::MukaiVector(K3ModelPtr model, Int r, LatticeVector c, Int s)
    : model_(std::move(model)), r_(std::move(r)), c_(std::move(c)), s_(std::move(s)) {
  if (!model_) throw PreconditionError("Mukai vector requires a K3 model");
  if (!same_lattice(c_.lattice(), model_->picard()))
    throw PreconditionError("incompatible lattices");
}

bool MukaiVector::is_zero() const { return r_ == 0 && s_ == 0 && c_.is_zero(); }

LatticeVector MukaiVector::embed() const {
  IntVec x;
  x.reserve(model_->picard()->rank() + 2);
  x.push_back(r_);
  for (const Int& v : c_.coords()) x.push_back(v);
  x.push_back(s_);
  return {model_->mukai_lattice(), std::move(x)};
}

MukaiVector MukaiVector::from_embedded(const K3ModelPtr& model,
                                       const LatticeVector& x) {
  if (!model) throw PreconditionError("Mukai vector requires a K3 model");
  if (!same_lattice(x.lattice(), model->mukai_lattice()))
    throw PreconditionError("incompatible lattices");
  const std::size_t p = model->picard()->rank();
  IntVec mid(x.coords().begin() + 1, x.coords().begin() + 1 + p);
  return {model, x.coords().front(), LatticeVector(model->picard(), std::move(mid)),
          x.coords().back()};
}

bool MukaiVector::operator==(const MukaiVector& o) const {
  return same_model(model_, o.model_) && r_ == o.r_ && s_ == o.s_ && c_ == o.c_;
}

Int mukai_pair(const MukaiVector& v, const MukaiVector& w) {
  if (!same_model(v.model(), w.model()))
    throw PreconditionError("incompatible lattices");
  return pair(v.c(), w.c()) - v.r() * w.s() - v.s() * w.r();
}

MukaiVector mukai_vector_of_sheaf(const K3ModelPtr& model, const Int& rank,
                                  const LatticeVector& c1, const Int& chi,
                                  int epsilon) {
  if (epsilon != 0 && epsilon != 1)
    throw PreconditionError("epsilon must be 0 or 1");
  return {model, rank, c1, chi - epsilon * rank};
}

Int moduli_dimension(const MukaiVector& v) {
  Int sq = mukai_pair(v, v);
  Int dim = sq + 2;
  if (sq % 2 != 0 || dim < 0)
    throw PreconditionError("not a valid moduli dimension");
  return dim;
}

Int fine_moduli_gcd(const MukaiVector& v) {
  if (v.is_zero())
    throw PreconditionError("fine_moduli_gcd of the zero Mukai vector");
  // Divisibility of <v, -> over the whole algebraic Mukai lattice: pairing
  // with (0,0,1), (1,0,0) and the Picard basis gives r, s and the rows of G c.
  Int g = gcd(abs(v.r()), abs(v.s()));
  const IntMat& gram = v.model()->picard()->gram();
  for (std::size_t i = 0; i < gram.size(); ++i) {
    Int row = 0;
    for (std::size_t j = 0; j < gram.size(); ++j)
      row += gram[i][j] * v.c().coords()[j];
    g = gcd(g, abs(row));
  }
  internal_check(g > 0, "pairing functional of a nonzero Mukai vector is nonzero");
  return g;
}

K3ModelPtr degree_model(int d, int m) {
  if (d < 2) throw PreconditionError("d must be at least 2");
  if (m < 1) throw PreconditionError("m must be at least 1");
  return K3Model::generic(Int(2 * d - 2) * m * m);
}

MukaiVector bundle_vector(const K3ModelPtr& model, int d, int m) {
  if (!model) throw PreconditionError("bundle_vector requires a K3 model");
  if (d < 2) throw PreconditionError("d must be at least 2");
  if (m < 1) throw PreconditionError("m must be at least 1");
  return {model, m, model->polarization(), Int(d - 1) * m};
}

MukaiVector ideal_sheaf_vector(const K3ModelPtr& model, int d) {
  if (!model) throw PreconditionError("ideal_sheaf_vector requires a K3 model");
  if (d < 2) throw PreconditionError("d must be at least 2");
  IntVec zero(model->picard()->rank(), 0);
  return {model, 1, LatticeVector(model->picard(), std::move(zero)), 1 - d};
}

Int moduli_k3_degree(int d, int m) {
  auto model = degree_model(d, m);
  MukaiVector v = bundle_vector(model, d, m);
  MukaiVector w = ideal_sheaf_vector(model, d);
  internal_check(mukai_pair(v, v) == 0, "bundle vector is isotropic");
  internal_check(mukai_pair(v, w) == 0,
                 "ideal-sheaf vector is orthogonal to the bundle vector");
  Int sq = quotient_square(v.embed(), w.embed());
  internal_check(sq == 2 * d - 2, "moduli K3 degree equals 2d - 2");
  return sq;
}

Int fibration_base_dimension(int d) {
  Int deg = moduli_k3_degree(d, 2);  // any m >= 1 gives the same degree
  Int base = deg / 2 + 1;
  auto model = degree_model(d, 2);
  Int dim_w = moduli_dimension(ideal_sheaf_vector(model, d));
  internal_check(dim_w == 2 * base,
                 "w-moduli dimension is twice the base dimension");
  internal_check(base == d, "base dimension equals d");
  return base;
}

}  // namespace hklat
