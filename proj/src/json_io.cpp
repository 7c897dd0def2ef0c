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

#include "somoscf/json_io.hpp"

namespace somoscf {

namespace {

FieldScalar scalar_field_checked(const json& j, const char* what) {
    if (!j.is_string()) throw invalid_scalar_error(std::string(what) + ": expected a scalar string");
    return FieldScalar::parse(j.get<std::string>());
}

}  // namespace

json scalar_to_json(const FieldScalar& s) { return s.str(); }

FieldScalar scalar_from_json(const json& j) { return scalar_field_checked(j, "scalar"); }

json poly_to_json(const Poly& p) {
    json a = json::array();
    for (int i = 0; i <= (p.is_zero() ? -1 : p.degree()); ++i) a.push_back(p.coeff(i).str());
    return a;
}

Poly poly_from_json(const json& j, Field f) {
    if (!j.is_array()) throw invalid_scalar_error("polynomial: expected a coefficient array");
    std::vector<FieldScalar> cs;
    for (const auto& e : j) cs.push_back(scalar_field_checked(e, "coefficient"));
    if (!cs.empty()) f = cs.front().field();
    return Poly::from_coeffs(f, std::move(cs));
}

json curve_to_json(const CurveParams& c) {
    json j{{"mode", c.mode == CurveMode::Full ? "full" : "reduced"},
           {"f", c.f.str()},
           {"g", c.g.str()},
           {"v", c.v.str()},
           {"w", c.w.str()}};
    if (c.mode == CurveMode::Full) j["u"] = c.u.str();
    return j;
}

CurveParams curve_from_json(const json& j) {
    std::string mode = j.at("mode").get<std::string>();
    FieldScalar f = scalar_field_checked(j.at("f"), "f");
    FieldScalar g = scalar_field_checked(j.at("g"), "g");
    FieldScalar v = scalar_field_checked(j.at("v"), "v");
    FieldScalar w = scalar_field_checked(j.at("w"), "w");
    if (mode == "full") return CurveParams::full(f, g, scalar_field_checked(j.at("u"), "u"), v, w);
    if (mode == "reduced") return CurveParams::reduced(f, g, v, w);
    throw std::invalid_argument("curve mode must be \"full\" or \"reduced\"");
}

json line_to_json(const NormalLine& l) {
    return json{{"h", l.h}, {"d", l.d.str()}, {"e", l.e.str()}, {"u", l.u.str()},
                {"v", l.v.str()}, {"w", l.w.str()}};
}

NormalLine line_from_json(const json& j) {
    return NormalLine{j.at("h").get<long long>(),
                      scalar_field_checked(j.at("d"), "d"),
                      scalar_field_checked(j.at("e"), "e"),
                      scalar_field_checked(j.at("u"), "u"),
                      scalar_field_checked(j.at("v"), "v"),
                      scalar_field_checked(j.at("w"), "w")};
}

json surd_line_to_json(const SurdLine& l) {
    return json{{"h", l.h}, {"P", poly_to_json(l.P)}, {"Q", poly_to_json(l.Q)}};
}

SurdLine surd_line_from_json(const json& j, Field f) {
    return SurdLine{j.at("h").get<long long>(), poly_from_json(j.at("P"), f), poly_from_json(j.at("Q"), f)};
}

json window_to_json(const SomosWindow& w) {
    json j{{"offset", w.offset}};
    if (w.coeffs) {
        j["a"] = w.coeffs->first.str();
        j["b"] = w.coeffs->second.str();
    }
    json terms = json::array();
    for (const auto& t : w.terms) terms.push_back(t.str());
    j["terms"] = std::move(terms);
    return j;
}

SomosWindow window_from_json(const json& j) {
    SomosWindow w;
    w.offset = j.at("offset").get<long long>();
    if (j.contains("a") != j.contains("b")) throw std::invalid_argument("window needs both of a and b or neither");
    if (j.contains("a")) {
        w.coeffs = std::make_pair(scalar_field_checked(j.at("a"), "a"), scalar_field_checked(j.at("b"), "b"));
    }
    for (const auto& t : j.at("terms")) w.terms.push_back(scalar_field_checked(t, "term"));
    return w;
}

json candidate_to_json(const RecoveryCandidate& c) {
    return json{{"curve", curve_to_json(c.curve)},
                {"seed", line_to_json(c.seed)},
                {"v_branch", c.v_branch.str()},
                {"verified", c.verified},
                {"constraint_poly", poly_to_json(c.constraint)}};
}

RecoveryCandidate candidate_from_json(const json& j) {
    RecoveryCandidate c{curve_from_json(j.at("curve")), line_from_json(j.at("seed")),
                        scalar_field_checked(j.at("v_branch"), "v_branch"),
                        j.at("verified").get<bool>(), poly_from_json(j.at("constraint_poly"))};
    return c;
}

json report_to_json(const IdentityReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(json{{"id", c.id}, {"h", c.h}, {"pass", c.pass}});
    return json{{"all_pass", r.all_pass()}, {"checks", std::move(checks)}};
}

}  // namespace somoscf
