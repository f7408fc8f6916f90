#include "hklat/twisted.hpp"

#include <utility>

#include "hklat/mukai.hpp"

namespace hklat {

H2Model::H2Model(LatticePtr h2, std::vector<LatticeVector> pic, LatticePtr total)
    : h2_(std::move(h2)), pic_(std::move(pic)), total_(std::move(total)) {}

H2ModelPtr H2Model::make(LatticePtr h2, std::vector<LatticeVector> pic_basis) {
  if (!h2) throw PreconditionError("H2 model requires a lattice");
  IntMat rows;
  std::vector<RationalVector> rational;
  for (const auto& p : pic_basis) {
    if (!same_lattice(p.lattice(), h2))
      throw PreconditionError("incompatible lattices");
    rows.push_back(p.coords());
    rational.emplace_back(p);
  }
  if (hnf(rows).size() != pic_basis.size())
    throw PreconditionError("Picard basis must be linearly independent");
  // Saturation: the rational span must meet the integer lattice exactly in
  // the integer span of the given basis.
  std::vector<LatticeVector> sat = intersect_rational(rational, h2);
  IntMat sat_rows;
  for (const auto& s : sat) sat_rows.push_back(s.coords());
  if (sat_rows != hnf(rows))
    throw PreconditionError("Picard sublattice must be saturated");
  LatticePtr total = mukai_extension(h2);
  return H2ModelPtr(new H2Model(std::move(h2), std::move(pic_basis), std::move(total)));
}

bool same_model(const H2ModelPtr& a, const H2ModelPtr& b) {
  if (!a || !b) return false;
  if (a == b) return true;
  if (!same_lattice(a->h2(), b->h2())) return false;
  if (a->pic_basis().size() != b->pic_basis().size()) return false;
  for (std::size_t i = 0; i < a->pic_basis().size(); ++i)
    if (a->pic_basis()[i].coords() != b->pic_basis()[i].coords()) return false;
  return true;
}

BField::BField(H2ModelPtr model, RatVec coords)
    : model_(std::move(model)), coords_(std::move(coords)) {
  if (!model_) throw PreconditionError("B-field requires an H2 model");
  if (coords_.size() != model_->h2()->rank())
    throw PreconditionError("coordinate count must equal the lattice rank");
}

RationalVector BField::as_vector() const { return {model_->h2(), coords_}; }

Rat BField::square() const { return pair(as_vector(), as_vector()); }

RationalVector TwistedTriple::as_vector() const {
  RatVec x;
  x.reserve(model->h2()->rank() + 2);
  x.push_back(r);
  for (const Rat& q : c) x.push_back(q);
  x.push_back(s);
  return {model->total(), std::move(x)};
}

bool TwistedTriple::operator==(const TwistedTriple& o) const {
  return same_model(model, o.model) && r == o.r && c == o.c && s == o.s;
}

TwistedTriple make_triple(H2ModelPtr model, Rat r, RatVec c, Rat s) {
  if (!model) throw PreconditionError("triple requires an H2 model");
  if (c.size() != model->h2()->rank())
    throw PreconditionError("coordinate count must equal the lattice rank");
  return {std::move(model), std::move(r), std::move(c), std::move(s)};
}

Rat mukai_pair(const TwistedTriple& x, const TwistedTriple& y) {
  if (!same_model(x.model, y.model))
    throw PreconditionError("incompatible lattices");
  RationalVector cx(x.model->h2(), x.c);
  RationalVector cy(y.model->h2(), y.c);
  return pair(cx, cy) - x.r * y.s - x.s * y.r;
}

TwistedTriple exp_b_action(const BField& b, const TwistedTriple& t) {
  if (!same_model(b.model(), t.model))
    throw PreconditionError("incompatible lattices");
  // (1 + B + B^2/2) (r, c, s): degree 0 keeps r, degree 2 gains r B, degree 4
  // gains (B, c) + r (B, B)/2.
  RationalVector cv(t.model->h2(), t.c);
  RatVec c2(t.c);
  for (std::size_t i = 0; i < c2.size(); ++i) c2[i] += t.r * b.coords()[i];
  Rat s2 = t.s + pair(b.as_vector(), cv) + t.r * b.square() / 2;
  return {t.model, t.r, std::move(c2), std::move(s2)};
}

std::vector<LatticeVector> twisted_algebraic_lattice(const BField& b) {
  const H2ModelPtr& model = b.model();
  const std::size_t n = model->h2()->rank();
  std::vector<RationalVector> span;

  // exp(B) applied to (1, 0, 0): (1, B, (B,B)/2).
  RatVec u0(n + 2, Rat(0));
  u0[0] = 1;
  for (std::size_t i = 0; i < n; ++i) u0[1 + i] = b.coords()[i];
  u0[n + 1] = b.square() / 2;
  span.emplace_back(model->total(), std::move(u0));

  // exp(B) applied to (0, p, 0) for each Picard basis vector: (0, p, (B, p)).
  for (const auto& p : model->pic_basis()) {
    RatVec up(n + 2, Rat(0));
    for (std::size_t i = 0; i < n; ++i) up[1 + i] = p.coords()[i];
    up[n + 1] = pair(b.as_vector(), RationalVector(p));
    span.emplace_back(model->total(), std::move(up));
  }

  // exp(B) applied to (0, 0, 1) is itself.
  RatVec us(n + 2, Rat(0));
  us[n + 1] = 1;
  span.emplace_back(model->total(), std::move(us));

  std::vector<LatticeVector> basis = intersect_rational(span, model->total());
  internal_check(basis.size() == 2 + model->pic_basis().size(),
                 "twisted lattice has rank 2 + Picard rank");
  return basis;
}

Int brauer_order(const BField& b) {
  const H2ModelPtr& model = b.model();
  const std::size_t n = model->h2()->rank();
  // Change coordinates so the Picard span becomes the leading coordinates;
  // k B lies in Z^n + Pic Q iff the trailing coordinates of k B are integral.
  IntMat pt(n, IntVec(model->pic_basis().size(), 0));
  for (std::size_t j = 0; j < model->pic_basis().size(); ++j)
    for (std::size_t i = 0; i < n; ++i)
      pt[i][j] = model->pic_basis()[j].coords()[i];
  auto [h, u] = hnf_with_transform(std::move(pt));
  std::size_t lead = 0;
  while (lead < h.size() && !is_zero_row(h[lead])) ++lead;
  Int order = 1;
  for (std::size_t i = lead; i < n; ++i) {
    Rat yi = 0;
    for (std::size_t j = 0; j < n; ++j) yi += Rat(u[i][j]) * b.coords()[j];
    order = lcm(order, denominator(yi));
  }
  return order;
}

Int minimal_positive_rank(const std::vector<LatticeVector>& twisted_basis) {
  if (twisted_basis.empty())
    throw PreconditionError("minimal_positive_rank of an empty basis");
  // The rank components of the integer span form the ideal generated by the
  // basis ranks; the minimal positive one is their gcd.
  Int g = 0;
  for (const auto& v : twisted_basis) g = gcd(g, v.coords().front());
  if (g == 0)
    throw NonexistenceError("no class in the span has nonzero rank component");
  return abs(g);
}

}  // namespace hklat
