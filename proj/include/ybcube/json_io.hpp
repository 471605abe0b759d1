#pragma once

#include "json.hpp"

#include "ybcube/census.hpp"
#include "ybcube/complex.hpp"
#include "ybcube/field.hpp"
#include "ybcube/homology.hpp"
#include "ybcube/presentation.hpp"
#include "ybcube/ybmap.hpp"

// JSON shapes:
//   FieldSpec      {p, e, modulus: [c0,...], delta_exponent}
//   Presentation   {labels: [{id,name,color,inverse}], squares: [[id,id,id,id]], kind}
//   CheckReport    {check, pass, witnesses: [{kind, labels, detail}]}
//   YBSolution     {X: [labels], map: [[x,y,u,v],...]}
//   AbelianGroup   {rank, factors}
//   LabeledCensus  {m, l, labeled_count, mass}   (exact values as strings)

namespace ybcube {

void to_json(nlohmann::json& j, const FieldSpec& spec);
void from_json(const nlohmann::json& j, FieldSpec& spec);

void to_json(nlohmann::json& j, const Presentation& pres);
void from_json(const nlohmann::json& j, Presentation& pres);

void to_json(nlohmann::json& j, const Witness& w);
void to_json(nlohmann::json& j, const CheckReport& report);

void to_json(nlohmann::json& j, const YBSolution& r);
void from_json(const nlohmann::json& j, YBSolution& r);

void to_json(nlohmann::json& j, const AbelianGroup& g);

void to_json(nlohmann::json& j, const LabeledCensus& census);

// Accepts either a bare presentation object or one wrapped as
// {"presentation": {...}, ...} (the build command's output).
Presentation parse_presentation(const nlohmann::json& j);

}  // namespace ybcube
