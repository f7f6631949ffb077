// JSON serialization for every exchanged object. Scalars travel as "p/q"
// strings (plain "p" for integers) so nothing is ever rounded; documents
// use insertion-ordered keys so identical inputs yield identical bytes.

#ifndef HOPFGALOIS_IO_HPP_
#define HOPFGALOIS_IO_HPP_

#include <json.hpp>

#include "hopfgalois/transfer.hpp"

namespace hopfgalois {

using Json = nlohmann::ordered_json;

Json rat_json(const Rat& q);
Rat json_rat(const Json& j);

Json vec_json(const RatVec& v);
RatVec json_vec(const Json& j);

Json mat_json(const RatMatrix& m);
RatMatrix json_mat(const Json& j);

// {"dim": n, "den": d, "basis": [["p", ...], ...]}
Json lattice_json(const Lattice& lat);
Lattice json_lattice(const Json& j);

// {"order": n, "identity": i, "table": [[...]], "labels": [...]}
Json group_json(const FiniteGroup& G);
FiniteGroup json_group(const Json& j);

// Array of image vectors, one per element, in index order.
Json subgroup_json(const RegularSubgroup& N);

// Split: {"mode": "split", "group": ...}; field: adds "mult", "one",
// "auto" keyed by element label. Loading re-validates everything.
Json context_json(const GaloisContext& ctx);
GaloisContext json_context(const Json& j);

// {"N": <subgroup doc>, "coeffs": {"<eta index>": ["p/q", ...], ...}}
Json hopf_elt_json(const RegularSubgroup& N, const HopfElt& h);

// {"ambient": "kg"|"hlambda", "lattice": <lattice doc>}
Json order_json(const OrderLattice& A);

Json certificate_json(const FreenessCertificate& cert);
FreenessCertificate json_certificate(const Json& j);

Json transfer_report_json(const TransferReport& rep);
Json main_report_json(const MainTheoremReport& rep);

}  // namespace hopfgalois

#endif
