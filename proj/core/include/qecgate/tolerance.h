// Copyright 2026 The qecgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QECGATE_TOLERANCE_H
#define QECGATE_TOLERANCE_H

namespace qecgate {

/// Numerical tolerances shared by every module.
struct Tolerances {
    /// Algebraic identities: unitarity, normalization, branch completeness.
    double algebra = 1e-12;
    /// Decompositions: SVD reconstruction, Schmidt round trips.
    double decomposition = 1e-10;
    /// Accepted deviation from unit norm for user-supplied amplitudes.
    double input_norm = 1e-9;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace qecgate

#endif
