#pragma once

#include <json.hpp>

#include <string>

#include "hklat/brill_noether.hpp"
#include "hklat/fm.hpp"
#include "hklat/hilbert.hpp"
#include "hklat/lattice.hpp"
#include "hklat/mukai.hpp"
#include "hklat/twisted.hpp"

namespace hklat {

using json = nlohmann::json;

// Serialization conventions, applied everywhere:
//  * integers are decimal strings (values routinely exceed 64 bits), except
//    "rank", which is a plain JSON number;
//  * rationals are "p/q" in lowest terms with q >= 1, so "0/1" and "3/1";
//  * objects use sorted keys (nlohmann's default map), so dumping the same
//    document twice is byte-identical.
std::string int_str(const Int& v);
json int_vec_json(const IntVec& v);
json rat_vec_json(const RatVec& v);

json lattice_json(const IntLattice& lat);
LatticePtr lattice_from_json(const json& j);

json vector_json(const LatticeVector& x);
json mukai_vector_json(const MukaiVector& v);

json imported_fact_json(const ImportedFact& f);
json fm_report_json(const FMNumericReport& r);
json serre_certificate_json(const SerreCertificate& c);
json serre_chi_json(const SerreChi& c);
json polar2_json(const Polar2Report& r);

}  // namespace hklat
