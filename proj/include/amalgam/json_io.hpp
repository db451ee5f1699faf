#ifndef AMALGAM_JSON_IO_HPP
#define AMALGAM_JSON_IO_HPP

#include <json.hpp>

#include "amalgam/decide.hpp"
#include "amalgam/verifier.hpp"

namespace amalgam {

using json = nlohmann::ordered_json;

// Weight: {"family":"polynomial","s":2.0} | {"family":"exponential","a":1.0}
//         | {"family":"product","factors":[...]}
//         | {"family":"tabulated","x":[...],"v":[...]}
json weight_to_json(const Weight& w);
Weight weight_from_json(const json& j);

// Grid: {"L":16,"m":256}
json grid_to_json(const GridSpec& g);
GridSpec grid_from_json(const json& j);

// Function spec: {"kind":"gaussian"} | {"kind":"indicator","a":0,"b":1}
//   | {"kind":"bump","center":0,"radius":0.5} | {"kind":"samples","values":[...]}
SampledFunction function_from_json(const json& j, const GridSpec& grid);

// Measure: {"atoms":[{"x":0.0,"c":[1.0,0.0]}, ...]}
json measure_to_json(const DiscreteMeasure& mu);
DiscreteMeasure measure_from_json(const json& j);

// NormReport: {"p":2,"q":1,"weight":{...},"global":...,"locals":{...},"m":256}
// Infinite exponents serialize as the string "inf".
json norm_report_to_json(const NormReport& rep);

json a_norm_report_to_json(const ANormReport& rep);

// Verdict: {"relation":...,"rule":...,"trace":[...],"constant_hint":...}
json verdict_to_json(const Verdict& v);

json suite_report_to_json(const SuiteReport& rep);

// CSV flattening: one row per case, columns
// suite,case,measured,bound,pass,note
std::string suite_reports_to_csv(std::span<const SuiteReport> reps);

}  // namespace amalgam

#endif
