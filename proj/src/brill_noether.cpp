#include "hklat/brill_noether.hpp"

namespace hklat {

SerreParams serre_params(int d, int m) {
  if (d < 2) throw PreconditionError("d must be at least 2");
  if (m < 2) throw PreconditionError("m must be at least 2");
  SerreParams p;
  p.d = d;
  p.m = m;
  p.n = Int(2 * d - 2) * m * m;
  p.g = p.n / 2 + 1;
  p.c = Int(d - 1) * (Int(m) * m - m) + m;
  p.delta = m - 1;
  internal_check(p.g == Int(d - 1) * m * m + 1, "genus equals (d-1) m^2 + 1");
  internal_check(p.c >= m, "cluster colength is at least m");
  return p;
}

Int bn_number(const Int& g, const Int& r, const Int& c) {
  if (g < 0) throw PreconditionError("genus must be nonnegative");
  if (r < 0) throw PreconditionError("series rank must be nonnegative");
  return g - (r + 1) * (g - c + r);
}

SerreCertificate certify_serre(int d, int m) {
  SerreParams p = serre_params(d, m);
  SerreCertificate cert{p,
                        bn_number(p.g, m - 1, p.c),
                        bn_number(p.g, m - 1, p.c - 1),
                        bn_number(p.g, m, p.c + 1),
                        false};
  cert.pass = cert.rho == 1 && cert.rho_below < 0 && cert.rho_above < 0;
  // These are polynomial identities in (d, m): rho = 1, rho_below = 1 - m,
  // rho_above = 1 - (d-1) m.  Failure means the formulas above are wrong.
  internal_check(cert.pass, "Brill-Noether certificate holds");
  internal_check(cert.rho_below == 1 - m, "rho drops by m below the cluster");
  internal_check(cert.rho_above == 1 - Int(d - 1) * m,
                 "rho drops by (d-1) m above the cluster");
  return cert;
}

SerreChi serre_euler_characteristics(int d, int m) {
  SerreParams p = serre_params(d, m);
  auto model = degree_model(d, m);

  Int chi_structure = 2;
  Int chi_polarization = 2 + p.n / 2;
  Int chi_ideal = chi_polarization - p.c;
  // E is the extension of the twisted ideal sheaf by m-1 structure sheaves.
  Int chi_bundle = Int(m - 1) * chi_structure + chi_ideal;
  internal_check(chi_bundle == Int(d) * m, "chi(E) = d m");

  MukaiVector bundle = mukai_vector_of_sheaf(model, m, model->polarization(),
                                             chi_bundle, /*epsilon=*/1);
  internal_check(bundle == bundle_vector(model, d, m),
                 "the extension bundle has Mukai vector (m, H, (d-1) m)");

  // O_C(K - Z) has degree 2g - 2 - c; Riemann-Roch gives its chi, which must
  // agree with chi(E) - m chi(O_X) = (d-2) m.
  Int deg_dual = 2 * p.g - 2 - p.c;
  Int chi_dual = deg_dual - p.g + 1;
  internal_check(chi_dual == Int(d - 2) * m, "chi(O_C(K - Z)) = (d-2) m");
  internal_check(chi_dual == chi_bundle - m * chi_structure,
                 "Serre-dual chi matches chi(E) - m chi(O_X)");

  return {p,
          std::move(chi_structure),
          std::move(chi_polarization),
          std::move(chi_ideal),
          std::move(chi_bundle),
          std::move(bundle),
          std::move(chi_dual),
          std::move(deg_dual),
          true};
}

Int section_count(int d, int m, int k) {
  if (d < 2) throw PreconditionError("d must be at least 2");
  if (m < 2) throw PreconditionError("m must be at least 2");
  if (k < 1 || k > d) throw PreconditionError("k must lie in [1, d]");
  return Int(m) * (d - k);
}

}  // namespace hklat
