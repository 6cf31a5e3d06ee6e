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

#include "qecgate/gate.h"

#include <cmath>
#include <numbers>
#include <string>

#include "qecgate/errors.h"

namespace qecgate {

GateParams::GateParams(double xi, double eta) : xi_(xi), eta_(eta) {
    if (!(xi > 0 && xi < eta && eta < std::numbers::pi / 4)) {
        throw DomainError(
            "gate parameters must satisfy 0 < xi < eta < pi/4 (xi = " + std::to_string(xi) + ", eta = " + std::to_string(eta) +
            ")");
    }
    delta_ = std::tan(xi) / std::tan(eta);
}

GateParams GateParams::from_step(double step, double eta) {
    if (!(step > 1) || !std::isfinite(step)) {
        throw DomainError("concentration step must be a finite number > 1, got " + std::to_string(step));
    }
    return GateParams(std::atan(std::tan(eta) / step), eta);
}

double GateParams::gamma0() const {
    double ratio = std::sin(xi_) / std::sin(eta_);
    return ratio * ratio;
}

ComplexMatrix build_gate(const GateParams &params) {
    double c = params.delta();
    double s = std::sqrt((1 - c) * (1 + c));
    return ComplexMatrix{
        {1, 0, 0, 0},
        {0, 1, 0, 0},
        {0, 0, c, -s},
        {0, 0, s, c},
    };
}

ComplexMatrix build_gate(double xi, double eta) {
    return build_gate(GateParams(xi, eta));
}

ComplexMatrix embed_two_qubit(const ComplexMatrix &gate, std::size_t num_qubits, std::size_t first, std::size_t second) {
    if (gate.rows() != 4 || gate.cols() != 4) {
        throw DomainError("embed_two_qubit requires a 4x4 gate");
    }
    if (first >= num_qubits || second >= num_qubits || first == second) {
        throw DomainError("embed_two_qubit: invalid qubit positions");
    }
    std::size_t dim = std::size_t{1} << num_qubits;
    std::size_t first_bit = num_qubits - 1 - first;
    std::size_t second_bit = num_qubits - 1 - second;
    std::size_t touched = (std::size_t{1} << first_bit) | (std::size_t{1} << second_bit);
    auto local = [&](std::size_t index) {
        return (((index >> first_bit) & 1) << 1) | ((index >> second_bit) & 1);
    };

    ComplexMatrix full(dim, dim);
    for (std::size_t row = 0; row < dim; row++) {
        for (std::size_t col = 0; col < dim; col++) {
            if ((row & ~touched) != (col & ~touched)) {
                continue;
            }
            full(row, col) = gate(local(row), local(col));
        }
    }
    return full;
}

std::array<BranchOutcome, 2> apply_postselect(const ComplexMatrix &gate, const ComplexVector &state, const Tolerances &tol) {
    if (state.dim() != 4) {
        throw DomainError("apply_postselect expects a two-qubit state");
    }
    if (!(std::abs(state.norm() - 1) <= tol.input_norm)) {
        throw DomainError("apply_postselect input is not normalized (norm = " + std::to_string(state.norm()) + ")");
    }
    if (gate.rows() != 4 || !is_unitary(gate, tol.algebra)) {
        throw DomainError("apply_postselect gate must be a 4x4 unitary");
    }

    // Register A ⊗ B ⊗ P; the gate touches A (qubit 0) and P (qubit 2).
    ComplexVector input = state.normalized();
    ComplexVector full = apply(embed_two_qubit(gate, 3, 0, 2), tensor(input, ComplexVector::basis(2, 0)));

    std::array<BranchOutcome, 2> branches;
    for (std::size_t p = 0; p < 2; p++) {
        BranchOutcome &branch = branches[p];
        branch.probe = p == 0 ? ProbeOutcome::P0 : ProbeOutcome::P1;
        ComplexVector projected(4);
        for (std::size_t ab = 0; ab < 4; ab++) {
            projected[ab] = full[ab * 2 + p];
        }
        branch.probability = projected.norm_squared();
        branch.valid = branch.probability > 0;
        branch.state = branch.valid ? projected.normalized() : projected;
    }
    return branches;
}

}  // namespace qecgate
