#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "ineqlab/extremal.hpp"
#include "ineqlab/forms.hpp"
#include "ineqlab/monotone_fn.hpp"
#include "ineqlab/params.hpp"

namespace ineqlab {

// MonotoneFn JSON:
//   {"form": "S|s|h|q", "nodes": [...], "values": [...], "left": 0.0,
//    "right": {"kind": "constant|power", "exponent": e}}
// with optional "interpolation": "linear|step". Functions that are neither
// linear nor step data (transform outputs, non-linear powers) add
// "segments": [{"terms": [[coeff, power], ...], "log": d}, ...], one per piece;
// the reader then uses the segments and treats "values" as informational.
void to_json(nlohmann::json& j, const MonotoneFn& f);
MonotoneFn monotone_from_json(const nlohmann::json& j);

// Parses text; ParseError carries the byte offset for malformed JSON.
MonotoneFn parse_monotone_fn(std::string_view text);
std::string dump_monotone_fn(const MonotoneFn& f, int indent = 2);

void to_json(nlohmann::json& j, const ParamSet& p);

namespace forms {
void to_json(nlohmann::json& j, const Verdict& v);
}

namespace extremal {
void to_json(nlohmann::json& j, const DiscretizationSpec& d);
void to_json(nlohmann::json& j, const Certificate& c);
void to_json(nlohmann::json& j, const SearchReport& r);
}

}  // namespace ineqlab
