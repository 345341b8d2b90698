#pragma once

#include <json.hpp>

#include "fomcert/hyperell.hpp"
#include "fomcert/planecurve.hpp"

namespace fomcert {

using Json = nlohmann::ordered_json;

// field element: {"N": 12, "coeffs": ["1/2", "0", ...]} (power basis)
Json cyc_to_json(const CycElt& x);
CycElt cyc_from_json(const Json& j);
// bare coefficient array against a known context
Json cyc_coeffs_json(const CycElt& x);
CycElt cyc_from_coeffs_json(const CtxPtr& ctx, const Json& j);

// matrix: {"N":..., "dim": n, "entries": [coeff-array, ...]} row-major
Json mat_to_json(const ProjMat<CycElt>& m);
ProjMat<CycElt> mat_from_json(const Json& j);

// form: {"N":..., "degree": d, "nvars": n, "terms": [{"exp":[i,j,k],"coeff":[...]}]}
Json form_to_json(const HomForm<CycElt>& f);
HomForm<CycElt> form_from_json(const Json& j);

// curve: {"field": {"N":...}, "coeffs": [...], "roots": [...] optional}
Json curve_to_json(const HyperCurve& x);
HyperCurve curve_from_json(const Json& j);

Json cert_to_json(const SmoothCert& c);

} // namespace fomcert
