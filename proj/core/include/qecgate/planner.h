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

#ifndef QECGATE_PLANNER_H
#define QECGATE_PLANNER_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qecgate/gate.h"
#include "qecgate/linalg.h"
#include "qecgate/states.h"

/// Closed-form theory of iterated concentration gates.
///
/// Every successful gate application multiplies tan(theta) by the
/// concentration step; the planner decides how many applications to make and
/// predicts the success probability and final fidelity with the Bell state
/// (|00> + |11>)/sqrt(2).
namespace qecgate {

/// How the number of gate applications is chosen.
///
/// kCapped stops at the last angle not exceeding pi/4 (floor of
/// -ln tan(theta0) / ln step). kNearest may take one more step when that
/// lands closer to pi/4; ties keep the smaller count.
enum class StepMode { kCapped, kNearest };

std::string_view to_string(StepMode mode);
/// Accepts "capped" or "nearest". Throws DomainError otherwise.
StepMode parse_step_mode(std::string_view text);

/// Initial angles within this distance above pi/4 are treated as pi/4.
inline constexpr double kQuarterPiSlack = 1e-9;

/// Distance below which -ln tan(theta0) / ln step snaps to an integer.
inline constexpr double kStepCountSnap = 1e-9;

/// arctan(step * tan(theta)). Throws DomainError unless 0 < theta < pi/2 and
/// step > 0.
double next_theta(double theta, double step);
double next_theta(double theta, const GateParams &params);

/// Number of gate applications for an initial angle 0 < theta0 <= pi/4.
/// Throws DomainError for theta0 outside that range or step <= 1.
std::size_t step_count(double theta0, double step, StepMode mode = StepMode::kNearest);
std::size_t step_count(double theta0, const GateParams &params, StepMode mode = StepMode::kNearest);

/// Fidelity with the Bell state after `steps` successful applications:
/// F = ½ (1 + t)² / (1 + t²) with t = tan(theta0) * step^steps.
double fidelity(double theta0, double step, std::size_t steps);
double fidelity(double theta0, const GateParams &params, std::size_t steps);

/// Worst-case fidelity over initial angles in nearest mode,
/// ½ (1 + sqrt(step))² / (1 + step). Throws DomainError if step < 1.
double f_min(double step);

/// Normalizing coefficient of the unnormalized iterated state
/// cos(theta0) (cos eta / cos xi)^T |11> + sin(theta0) (sin eta / sin xi)^T |00>,
/// computed in the equivalent form
/// ((cos²θ0 + step^{2T} sin²θ0) ((1 + tan²xi) / (1 + tan²eta))^T)^{-1/2}.
double normalization(double theta0, const GateParams &params, std::size_t steps);

/// The iterated state above multiplied by `normalization`.
ComplexVector concentrated_state(double theta0, const GateParams &params, std::size_t steps);

struct ConcentrationPlan {
    double theta0 = 0;
    GateParams params;
    StepMode mode = StepMode::kNearest;
    std::size_t steps = 0;
    /// theta_0 .. theta_T, so steps + 1 entries.
    std::vector<double> thetas;
    /// gamma_1 .. gamma_T with gamma_i = sin²θ_{i-1} / sin²θ_i.
    std::vector<double> step_probs;
    /// Product of step_probs, evaluated as sin²θ_0 / sin²θ_T.
    double total_prob = 1;
    double fidelity = 1;
    /// Canonical form of the final state. If theta_T > pi/4 (nearest mode
    /// overshoot) the angle is pi/2 - theta_T and both frames are Pauli X.
    SchmidtState final_state;

    double final_theta() const {
        return thetas.back();
    }
};

/// Throws DomainError unless 0 < theta0 <= pi/4. Throws std::logic_error if
/// the closed-form normalization fails to reproduce a unit vector.
ConcentrationPlan make_plan(double theta0, const GateParams &params, StepMode mode = StepMode::kNearest);

/// Flat view of a plan for CSV export.
struct PlanRecord {
    double theta0;
    double xi;
    double eta;
    double delta;
    double step;
    StepMode mode;
    std::size_t steps;
    double total_prob;
    double fidelity;
    double theta_final;
};

PlanRecord to_record(const ConcentrationPlan &plan);

/// "theta0,xi,eta,delta,step,mode,T,Gamma,F,theta_final"
std::string plan_csv_header();
/// Reals are printed with 17 significant digits.
std::string to_csv_row(const PlanRecord &record);

/// Formats a double with 17 significant digits ("%.17g").
std::string format_real(double value);

}  // namespace qecgate

#endif
