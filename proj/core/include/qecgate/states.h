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

#ifndef QECGATE_STATES_H
#define QECGATE_STATES_H

#include <string_view>

#include "qecgate/linalg.h"
#include "qecgate/tolerance.h"

namespace qecgate {

/// Canonical form of a pure two-qubit state:
///
///     (frame_a ⊗ frame_b) (cos(theta)|11> + sin(theta)|00>)
///
/// with 0 <= theta <= pi/4. At theta = pi/4 the frames are not unique.
struct SchmidtState {
    double theta = 0;
    ComplexMatrix frame_a = ComplexMatrix::identity(2);
    ComplexMatrix frame_b = ComplexMatrix::identity(2);
};

/// Entropy of entanglement in ebits, in [0, 1].
struct EntanglementValue {
    double entropy = 0;
};

/// cos(theta)|11> + sin(theta)|00> as a dimension 4 vector (no frames).
ComplexVector schmidt_form(double theta);

/// Canonicalizes a normalized two-qubit amplitude vector (|00>,|01>,|10>,|11>).
///
/// Throws DomainError if the dimension is not 4 or the norm deviates from 1 by
/// more than tol.input_norm. Accepted inputs are renormalized first.
SchmidtState schmidt_decompose(const ComplexVector &amps, const Tolerances &tol = kDefaultTolerances);

ComplexVector reconstruct(const SchmidtState &s);

/// -cos²θ log2 cos²θ - sin²θ log2 sin²θ, with 0 log 0 = 0.
/// Throws DomainError unless 0 <= theta <= pi/2.
EntanglementValue entanglement(double theta);

/// Parses four comma separated complex numbers written as `re+imj`
/// (also accepts `re`, `imj`, `re-imj`, and surrounding whitespace).
/// No normalization check is done here.
ComplexVector parse_amplitudes(std::string_view text);

/// Parses a single `re+imj` style complex literal.
Complex parse_complex(std::string_view text);

}  // namespace qecgate

#endif
