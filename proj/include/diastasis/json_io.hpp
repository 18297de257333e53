#pragma once

#include <json.hpp>

#include "diastasis/calabi.hpp"
#include "diastasis/rational_function.hpp"
#include "diastasis/series.hpp"

namespace dia {

using json = nlohmann::ordered_json;

/// Schema (version 1):
///   HermSeries  {"schema":"herm-series/1","nvars":n,"order":H,
///                "terms":[{"i":[...],"j":[...],"c":"p/q" | "p/q+r/s i"}]}
///   Poly        {"schema":"poly/1","cvars":m,
///                "terms":[{"e":[... 2m exponents ...],"c":...}]}
///   RationalFunction {"schema":"rational-function/1","num":Poly,"den":Poly}
/// Coefficients are exact strings; term order is the storage order, which is
/// deterministic, so serialization is byte-stable.
json to_json(const HermSeries& s);
HermSeries series_from_json(const json& j);

json to_json(const Poly& p);
Poly poly_from_json(const json& j);

json to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const json& j);

/// Verdict record {"verdict":..., "order":..., "witness":{...}} for the
/// truncated Calabi criterion.
json to_json(const ProjectiveVerdict& v);

}  // namespace dia
