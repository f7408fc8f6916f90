#pragma once

#include "hklat/mukai.hpp"

namespace hklat {

// Numerology of the curve section: on a K3 of degree n = (2d-2)m^2 a smooth
// curve C in |H| has genus g = n/2 + 1, and the distinguished point cluster
// has colength c = (d-1)(m^2 - m) + m, defect delta = m - 1.
struct SerreParams {
  int d = 0;
  int m = 0;
  Int n;
  Int g;
  Int c;
  Int delta;
};
SerreParams serre_params(int d, int m);

// Brill-Noether number rho(g, r, c) = g - (r+1)(g - c + r) for linear series
// of rank r cut by clusters of colength c.
Int bn_number(const Int& g, const Int& r, const Int& c);

// rho(g, m-1, c) = 1 while both neighbours are negative: the cluster carries
// exactly an (m-1)-dimensional series and is rigid against growing or
// shrinking.
struct SerreCertificate {
  SerreParams params;
  Int rho;        // rho(g, m-1, c), expected 1
  Int rho_below;  // rho(g, m-1, c-1), expected 1 - m
  Int rho_above;  // rho(g, m, c+1), expected 1 - (d-1)m
  bool pass;
};
SerreCertificate certify_serre(int d, int m);

// Euler-characteristic bookkeeping for the rank-m bundle E built from the
// cluster: chi(E) = d m and its Mukai vector is (m, H, (d-1)m), plus the
// Serre-dual count chi(O_C(K - Z)) = (d-2) m cross-checked against
// deg - g + 1.
struct SerreChi {
  SerreParams params;
  Int chi_structure;     // chi(O_X) = 2
  Int chi_polarization;  // chi(O_X(1)) = 2 + n/2
  Int chi_ideal;         // chi(I_Z(1)) = chi(O_X(1)) - c
  Int chi_bundle;        // chi(E) = d m
  MukaiVector bundle;    // (m, H, (d-1)m)
  Int chi_serre_dual;    // chi(O_C(K - Z)) = (d-2) m
  Int deg_serre_dual;    // 2g - 2 - c
  bool pass;
};
SerreChi serre_euler_characteristics(int d, int m);

// h^0(E tensor I_xi) = m(d - k) for a generic length-k cluster xi, 1 <= k <= d:
// the section count that cuts out the fibration structure.
Int section_count(int d, int m, int k);

}  // namespace hklat
