#include "hklat/hilbert.hpp"

#include <utility>

namespace hklat {

BBLattice::BBLattice(LatticePtr base, int d) : base_(std::move(base)), d_(d) {
  if (!base_) throw PreconditionError("BBLattice requires a base lattice");
  if (d_ < 2) throw PreconditionError("d must be at least 2");
  const std::size_t p = base_->rank();
  IntMat g(p + 1, IntVec(p + 1, 0));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) g[i][j] = base_->gram()[i][j];
  g[p][p] = Int(-2) * (d_ - 1);
  std::vector<std::string> labels;
  labels.reserve(p + 1);
  for (std::size_t i = 0; i < p; ++i)
    labels.push_back(base_->labels().empty() ? "f" + std::to_string(i + 1)
                                             : base_->labels()[i]);
  labels.push_back("e");
  full_ = IntLattice::make(std::move(g), std::move(labels));
}

LatticeVector BBLattice::exceptional() const {
  IntVec c(full_->rank(), 0);
  c.back() = 1;
  return {full_, std::move(c)};
}

LatticeVector BBLattice::make_class(const IntVec& base_coords,
                                    const Int& e_coeff) const {
  if (base_coords.size() != base_->rank())
    throw PreconditionError("coordinate count must equal the base rank");
  IntVec c(base_coords);
  c.push_back(e_coeff);
  return {full_, std::move(c)};
}

Int fujiki_constant(int d) {
  if (d < 1) throw PreconditionError("d must be at least 1");
  Int num = factorial(2 * d);
  Int den = factorial(d) * (Int(1) << d);
  internal_check(num % den == 0, "Fujiki constant is an integer");
  return num / den;
}

Int isotropic_chi(int d) {
  if (d < 1) throw PreconditionError("d must be at least 1");
  return Int(d) + 1;
}

IsotropicWitness isotropic_exists(const Int& n, int d) {
  if (n <= 0 || n % 2 != 0) throw PreconditionError("not a K3 degree");
  if (d < 2) throw PreconditionError("d must be at least 2");
  // q(a h - b e) = n a^2 - (2d-2) b^2, so a zero needs n and 2d-2 to have the
  // same squarefree part s; writing n = s u^2, 2d-2 = s t^2, the primitive
  // solution is a = t/gcd, b = u/gcd.
  SquareSplit sn = split_square(n);
  SquareSplit sd = split_square(Int(2) * (d - 1));
  if (sn.squarefree != sd.squarefree) return {};
  Int g = gcd(sn.root, sd.root);
  IsotropicWitness w{true, sd.root / g, sn.root / g};
  internal_check(w.k * w.k * n == Int(2) * (d - 1) * w.m * w.m,
                 "isotropic witness satisfies k^2 n = (2d-2) m^2");
  internal_check(gcd(w.k, w.m) == 1, "isotropic witness is primitive");
  return w;
}

namespace {

BBLattice degree_n_bb(const Int& n, int d) {
  return {IntLattice::make({{n}}, {"h"}), d};
}

}  // namespace

std::vector<IsotropicSolution> primitive_isotropic_classes(const Int& n, int d) {
  IsotropicWitness w = isotropic_exists(n, d);
  if (!w.exists) return {};
  BBLattice bb = degree_n_bb(n, d);
  std::vector<IsotropicSolution> out;
  for (int sign : {+1, -1}) {
    Int b = sign * w.m;
    LatticeVector cls = bb.make_class({w.k}, b);
    internal_check(pair(cls, cls) == 0, "solution classes are isotropic");
    internal_check(is_primitive(cls), "solution classes are primitive");
    out.push_back({w.k, b, cls});
  }
  return out;
}

LatticeVector fibration_class(const Int& n, int d) {
  IsotropicWitness w = isotropic_exists(n, d);
  if (!w.exists)
    throw NonexistenceError("Bogomolov-Beauville form does not represent zero");
  return degree_n_bb(n, d).make_class({w.k}, -w.m);
}

Polar2Report polar2_scenario(int d, int m) {
  if (d < 2) throw PreconditionError("d must be at least 2");
  if (m < 2) throw PreconditionError("m must be at least 2");
  LatticePtr picard = IntLattice::make(
      {{Int(2) * d, Int(2) * d - 1 + m}, {Int(2) * d - 1 + m, Int(2) * d - 2}},
      {"f1", "f2"});
  BBLattice bb(picard, d);

  LatticeVector v = bb.make_class({1, 0}, -1);   // f_2d - e
  LatticeVector c = bb.make_class({0, 1}, -1);   // f_{2d-2} - e
  internal_check(pair(v, v) == 2, "f_2d - e has square 2");
  LatticeVector r = reflect(v, c);
  internal_check(r == bb.make_class({m + 1, -1}, -m),
                 "reflection sends f_{2d-2} - e to (m+1) f_2d - f_{2d-2} - m e");

  LatticeVector divisor = bb.make_class({m + 1, -1}, 0);
  Int dsq = pair(divisor, divisor);
  internal_check(dsq == Int(2) * (d - 1) * m * m,
                 "divisor part has square (2d-2) m^2");
  Int with_f2d = pair(divisor, bb.make_class({1, 0}, 0));
  internal_check(with_f2d > 0, "divisor part pairs positively with f_2d");

  return {d,  m, picard,  bb.full(), v,
          c,  r, divisor, dsq,       with_f2d,
          dsq > 0 && with_f2d > 0};
}

std::string class_name(const Int& a, const Int& b) {
  std::string out;
  if (a != 0) {
    if (a == -1)
      out += "-h";
    else if (a != 1)
      out += a.str() + "h";
    else
      out += "h";
  }
  if (b != 0) {
    Int ab = abs(b);
    if (!out.empty()) out += b > 0 ? " + " : " - ";
    else if (b < 0) out += "-";
    out += ab == 1 ? "e" : ab.str() + "e";
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace hklat
