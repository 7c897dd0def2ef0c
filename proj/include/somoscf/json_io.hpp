/*
   Copyright 2026 the somoscf authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <json.hpp>

#include "somoscf/recover.hpp"

namespace somoscf {

using json = nlohmann::json;

// Scalars travel as canonical strings ("2", "-1/2", "5 mod 10007");
// polynomials as coefficient lists, constant term first.

json scalar_to_json(const FieldScalar& s);
FieldScalar scalar_from_json(const json& j);

json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j, Field f = Field{});

/// {"mode":"reduced","f":"-4","g":"1","v":"-1","w":"2"} (+ "u" in full mode)
json curve_to_json(const CurveParams& c);
CurveParams curve_from_json(const json& j);

/// {"h":0,"d":"2","e":"-1/2","u":"1","v":"0","w":"-1"}
json line_to_json(const NormalLine& l);
NormalLine line_from_json(const json& j);

/// {"h":0,"P":["-1","2"],"Q":["-1","0","1"]}
json surd_line_to_json(const SurdLine& l);
SurdLine surd_line_from_json(const json& j, Field f = Field{});

/// {"offset":-1,"a":"1","b":"1","terms":["2","1",...]}; a/b only when known
json window_to_json(const SomosWindow& w);
SomosWindow window_from_json(const json& j);

/// {"curve":{...},"seed":{...},"v_branch":"-1","verified":true,
///  "constraint_poly":["-12","6"]}
json candidate_to_json(const RecoveryCandidate& c);
RecoveryCandidate candidate_from_json(const json& j);

json report_to_json(const IdentityReport& r);

}  // namespace somoscf
