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

#ifndef QECGATE_GATE_H
#define QECGATE_GATE_H

#include <array>
#include <cstddef>

#include "qecgate/linalg.h"
#include "qecgate/tolerance.h"

namespace qecgate {

/// Parameters of one concentration gate G(xi, eta), 0 < xi < eta < pi/4.
///
/// A successful application maps the Schmidt angle theta to
/// arctan(step * tan(theta)) where step = tan(eta) / tan(xi) > 1.
class GateParams {
   public:
    /// Throws DomainError unless 0 < xi < eta < pi/4.
    GateParams(double xi, double eta);

    /// Gate with concentration step `step` > 1 whose target angle is `eta`.
    static GateParams from_step(double step, double eta);

    double xi() const {
        return xi_;
    }
    double eta() const {
        return eta_;
    }
    /// tan(xi) / tan(eta), the controlled rotation's cosine. In (0, 1).
    double delta() const {
        return delta_;
    }
    /// Concentration step 1 / delta. Greater than 1.
    double step() const {
        return 1.0 / delta_;
    }
    /// sin²(xi) / sin²(eta): optimal success probability for xi -> eta.
    double gamma0() const;

   private:
    double xi_;
    double eta_;
    double delta_;
};

/// Two-qubit unitary on Alice ⊗ probe (Alice most significant).
///
/// Identity when Alice is |0>; when Alice is |1> the probe is rotated by
///
///     [[delta, -sqrt(1 - delta²)],
///      [sqrt(1 - delta²), delta]].
ComplexMatrix build_gate(const GateParams &params);
ComplexMatrix build_gate(double xi, double eta);

enum class ProbeOutcome { P0, P1 };

/// One probe readout branch after a gate application.
struct BranchOutcome {
    ProbeOutcome probe = ProbeOutcome::P0;
    /// Conditional state on Alice ⊗ Bob, normalized when `valid`.
    ComplexVector state;
    double probability = 0;
    /// False for a zero-probability branch, whose state is the zero vector.
    bool valid = false;
};

/// Lifts a two-qubit gate to `num_qubits` qubits, acting on qubits `first`
/// and `second` (big-endian positions; qubit 0 is most significant) with the
/// gate's own ordering (first ⊗ second). Other qubits see the identity.
ComplexMatrix embed_two_qubit(const ComplexMatrix &gate, std::size_t num_qubits, std::size_t first, std::size_t second);

/// Applies (gate_AP ⊗ I_B) to |state>_AB |P0> and projects the probe.
///
/// The full register is ordered A ⊗ B ⊗ P. Returns {P0 branch, P1 branch}.
/// Throws DomainError if the state is not a unit vector of dimension 4 or the
/// gate is not a 4x4 unitary.
std::array<BranchOutcome, 2> apply_postselect(
    const ComplexMatrix &gate, const ComplexVector &state, const Tolerances &tol = kDefaultTolerances);

}  // namespace qecgate

#endif
