#pragma once

#include "qsym/chidentity.hpp"
#include "qsym/multipoly.hpp"
#include "qsym/symfunc.hpp"

#include <json.hpp>

namespace qsym {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json to_json(const Partition& lam);
/// {"terms":[{"partition":[2],"coeff":"1"}, ...]} in reverse lexicographic order.
Json to_json(const SchurVector& f);
/// {"vars":["q","mu1",...],"terms":[{"exp":[...],"coeff":"-1"}, ...]}.
Json to_json(const MultiPoly& p);
Json to_json(const PolyRatio& r);
/// [{"power":k,"basis":"power","coeff":...}, ...], highest power first.
Json to_json(const PowVector& u);
Json to_json(const ParamPowVector& u);

SchurVector schur_vector_from_json(const Json& j);

/// Compact single-line dump, keys in insertion order.
std::string dump(const Json& j);

}  // namespace qsym
