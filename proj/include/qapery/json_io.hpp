#pragma once

#include <qapery/apery.hpp>
#include <qapery/verify.hpp>

#include <json.hpp>

namespace qapery {

/// Insertion order is preserved so emitted records have a stable, documented
/// byte layout; coefficients serialize as decimal strings so consumers never
/// hit integer-width limits.
using Json = nlohmann::ordered_json;

/// {"offset": int, "coeffs": ["c0", "c1", ...]} with coeffs[i] * q^(offset+i).
Json to_json(const Laurent& f);
Laurent laurent_from_json(const Json& j);

/// IntPoly serializes as the equivalent Laurent value with offset 0.
Json to_json(const IntPoly& f);

/// {"coeffs": ["c0", "c1", ...]} with coeffs[k] * x^k.
Json to_json(const IntXPoly& f);
IntXPoly intxpoly_from_json(const Json& j);

/// {"coeffs": [<laurent>, ...]} with coeffs[k] * x^k.
Json to_json(const XPoly& f);
XPoly xpoly_from_json(const Json& j);

/// {"limit": N, "a": ["a1", ..., "aN"]}.
Json to_json(const EtaCoefficients& eta);

/// {"theorem": ..., "params": {...}, "status": ..., "witness"?: {...},
///  "elapsed_ms"?: ...}. Failure witnesses are always emitted; the quotient
/// witness of a passing q-theorem only when include_quotients is set (it can
/// dwarf the rest of the record). elapsed_ms is the one run-dependent field
/// and is dropped when include_elapsed is false.
Json report_to_json(const VerificationReport& r, bool include_elapsed = true,
                    bool include_quotients = false);

}  // namespace qapery
