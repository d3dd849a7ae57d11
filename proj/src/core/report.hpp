#pragma once

#include <string>

#include <json.hpp>

#include "core/identities.hpp"
#include "core/trace.hpp"

namespace geozeta {

using ojson = nlohmann::ordered_json;

ojson to_json(cplx z);
ojson to_json(const IdentityReport& r);
/// {"s", "value", "abs_error_bound", "in_convergence_domain", "flags"}.
ojson to_json(cplx s, const ZetaValue& v);
ojson to_json(const TorsionPrediction& t);
ojson to_json(const HeatTraceResult& h);
ojson to_json(const SmallTimeFit& f);

/// Two-space indentation plus a trailing newline; non-finite numbers become null.
std::string dump(const ojson& j);

}  // namespace geozeta
