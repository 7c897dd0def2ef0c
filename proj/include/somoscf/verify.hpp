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

#include <cstdint>
#include <string>

#include "somoscf/somos.hpp"

namespace somoscf {

/// One randomized check of everything the parametric engine claims:
/// the identity battery over a stepped window, agreement with the generic
/// (P,Q) engine at two precisions, and (reduced mode) the gap-6 recurrence
/// of the induced sequence.
struct TrialOptions {
    CurveMode mode = CurveMode::Reduced;
    int window = 15;          // forward steps attempted from the seed
    long coefficient_bound = 3;
    Field field;              // rationals by default
    bool corrupt = false;     // deliberately damage one line (harness self-test)
};

struct TrialResult {
    bool pass = false;
    std::string detail;       // first failed check, empty on pass
    CurveParams curve;
    NormalLine seed;
};

TrialResult run_trial(std::uint64_t rng_seed, const TrialOptions& options);

/// Expands the window (stopping early at a degeneracy) and returns it.
std::vector<NormalLine> stepped_window(const CurveParams& curve, const NormalLine& seed, int steps);

/// Line-by-line comparison of the parametric and generic engines over the
/// given lines, including the partial quotients, at the driver's default
/// precision and again at double precision.
bool engines_agree(const CurveParams& curve, const std::vector<NormalLine>& lines, std::string* detail);

/// Reduced mode: builds the sequence with T = 1, 1 from the window's
/// d-stream and checks the gap-6 recurrence with the curve's coefficients.
bool theorem_reproduction(const CurveParams& curve, const std::vector<NormalLine>& lines, std::string* detail);

}  // namespace somoscf
