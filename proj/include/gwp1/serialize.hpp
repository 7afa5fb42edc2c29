#pragma once

#include <string>

#include "json.hpp"

#include "gwp1/charlier.hpp"
#include "gwp1/invariants.hpp"
#include "gwp1/multiseries.hpp"
#include "gwp1/symmetric.hpp"
#include "gwp1/zseries.hpp"

namespace gwp1 {

using Json = nlohmann::ordered_json;

/// {"<exponent>": "p/q"} in increasing exponent order.
Json to_json(const EpsLaurent& p);
EpsLaurent eps_laurent_from_json(const Json& j);

/// {"vars", "top", "order", "coeffs": [{"exp", "val"}]}; order is null when exact.
Json to_json(const ZSeries& s);
ZSeries zseries_from_json(const Json& j);

/// Same schema plus "region", "floors" and "prefix_tops".
Json to_json(const MultiSeries& s);
MultiSeries multiseries_from_json(const Json& j);

/// {"<z exponent>": {eps coefficients}} from the top coefficient down.
Json wave_to_json(const ZSeries& s);

/// {"scaled", "degree_bound", "terms": [{"t": [...], "val": {...}}]}
Json to_json(const MiwaPolynomial& p);

/// {"ks", "value"} and, when requested, "by_genus": {"g,d": "p/q"}.
Json to_json(const InvariantRecord& r, bool by_genus = false);

/// Decimal string with enough digits for the value's precision.
std::string decimal(const BigFloat& x);

/// {"input", "value", "target", "abs_error"} plus "bound" and "ok".
Json to_json(const NumericRow& row);

enum class Format { json, csv, text };

Format parse_format(const std::string& s);

/// Pretty JSON, or a path/value projection of it for csv and text.
std::string render(const Json& j, Format f);

}  // namespace gwp1
