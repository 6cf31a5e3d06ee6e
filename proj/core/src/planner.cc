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

#include "qecgate/planner.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "qecgate/errors.h"

namespace qecgate {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4;

double canonical_theta0(double theta0) {
    if (!(theta0 > 0 && theta0 <= kQuarterPi + kQuarterPiSlack)) {
        throw DomainError("initial angle must satisfy 0 < theta0 <= pi/4, got " + format_real(theta0));
    }
    return std::min(theta0, kQuarterPi);
}

void check_step(double step) {
    if (!(step > 1) || !std::isfinite(step)) {
        throw DomainError("concentration step must be a finite number > 1, got " + format_real(step));
    }
}

double sin_squared(double theta) {
    double s = std::sin(theta);
    return s * s;
}

}  // namespace

std::string_view to_string(StepMode mode) {
    return mode == StepMode::kCapped ? "capped" : "nearest";
}

StepMode parse_step_mode(std::string_view text) {
    if (text == "capped") {
        return StepMode::kCapped;
    }
    if (text == "nearest") {
        return StepMode::kNearest;
    }
    throw DomainError("unknown step mode '" + std::string(text) + "' (expected capped or nearest)");
}

double next_theta(double theta, double step) {
    if (!(theta > 0 && theta < std::numbers::pi / 2)) {
        throw DomainError("next_theta needs 0 < theta < pi/2, got " + format_real(theta));
    }
    if (!(step > 0) || !std::isfinite(step)) {
        throw DomainError("next_theta needs a positive finite step, got " + format_real(step));
    }
    return std::atan(step * std::tan(theta));
}

double next_theta(double theta, const GateParams &params) {
    return next_theta(theta, params.step());
}

std::size_t step_count(double theta0, double step, StepMode mode) {
    theta0 = canonical_theta0(theta0);
    check_step(step);

    double tan0 = std::tan(theta0);
    double exact = -std::log(tan0) / std::log(step);
    double nearest_int = std::round(exact);
    if (std::abs(exact - nearest_int) < kStepCountSnap) {
        exact = nearest_int;
    }
    exact = std::max(exact, 0.0);
    auto capped = static_cast<std::size_t>(std::floor(exact));
    if (mode == StepMode::kCapped) {
        return capped;
    }

    // With theta_T <= pi/4 < theta_{T+1}, pi/4 - theta_T <= theta_{T+1} - pi/4
    // holds iff tan(theta_T) tan(theta_{T+1}) >= 1, i.e. iff the fractional part
    // of `exact` is at most 1/2. Ties (within the snap distance) keep T.
    double fraction = exact - static_cast<double>(capped);
    return fraction <= 0.5 + kStepCountSnap ? capped : capped + 1;
}

std::size_t step_count(double theta0, const GateParams &params, StepMode mode) {
    return step_count(theta0, params.step(), mode);
}

double fidelity(double theta0, double step, std::size_t steps) {
    if (!(theta0 >= 0 && theta0 < std::numbers::pi / 2)) {
        throw DomainError("fidelity needs 0 <= theta0 < pi/2, got " + format_real(theta0));
    }
    if (!(step > 0) || !std::isfinite(step)) {
        throw DomainError("fidelity needs a positive finite step, got " + format_real(step));
    }
    double t = std::tan(theta0) * std::pow(step, static_cast<double>(steps));
    if (t > 1) {
        // F(t) = F(1/t); keeps t² finite.
        t = 1 / t;
    }
    return std::min(1.0, 0.5 * (1 + t) * (1 + t) / (1 + t * t));
}

double fidelity(double theta0, const GateParams &params, std::size_t steps) {
    return fidelity(theta0, params.step(), steps);
}

double f_min(double step) {
    if (!(step >= 1) || !std::isfinite(step)) {
        throw DomainError("f_min needs a finite step >= 1, got " + format_real(step));
    }
    double r = std::sqrt(step);
    return 0.5 * (1 + r) * (1 + r) / (1 + step);
}

double normalization(double theta0, const GateParams &params, std::size_t steps) {
    double n = static_cast<double>(steps);
    double c = std::cos(theta0);
    double s = std::sin(theta0);
    double tx = std::tan(params.xi());
    double te = std::tan(params.eta());
    double amplified = c * c + std::pow(params.step(), 2 * n) * s * s;
    double shrink = std::pow((1 + tx * tx) / (1 + te * te), n);
    return 1 / std::sqrt(amplified * shrink);
}

ComplexVector concentrated_state(double theta0, const GateParams &params, std::size_t steps) {
    double n = static_cast<double>(steps);
    double a = normalization(theta0, params, steps);
    double c11 = std::cos(theta0) * std::pow(std::cos(params.eta()) / std::cos(params.xi()), n);
    double c00 = std::sin(theta0) * std::pow(std::sin(params.eta()) / std::sin(params.xi()), n);
    return ComplexVector{a * c00, 0.0, 0.0, a * c11};
}

ConcentrationPlan make_plan(double theta0, const GateParams &params, StepMode mode) {
    theta0 = canonical_theta0(theta0);
    std::size_t steps = step_count(theta0, params, mode);

    ConcentrationPlan plan{
        .theta0 = theta0,
        .params = params,
        .mode = mode,
        .steps = steps,
        .thetas = {},
        .step_probs = {},
        .total_prob = 1,
        .fidelity = 1,
        .final_state = {},
    };
    plan.thetas.reserve(steps + 1);
    plan.step_probs.reserve(steps);
    plan.thetas.push_back(theta0);
    for (std::size_t i = 0; i < steps; i++) {
        double prev = plan.thetas.back();
        double next = next_theta(prev, params);
        plan.thetas.push_back(next);
        plan.step_probs.push_back(sin_squared(prev) / sin_squared(next));
    }
    double final_theta = plan.thetas.back();
    plan.total_prob = sin_squared(theta0) / sin_squared(final_theta);
    plan.fidelity = fidelity(theta0, params, steps);

    if (final_theta <= kQuarterPi) {
        plan.final_state.theta = final_theta;
    } else {
        ComplexMatrix flip{{0, 1}, {1, 0}};
        plan.final_state = SchmidtState{std::numbers::pi / 2 - final_theta, flip, flip};
    }

    // A must normalize the unnormalized iterated state. Powers of rounded
    // ratios drift by about one ulp per step, hence the step-scaled bound.
    double n = static_cast<double>(steps);
    double c11 = std::cos(theta0) * std::pow(std::cos(params.eta()) / std::cos(params.xi()), n);
    double c00 = std::sin(theta0) * std::pow(std::sin(params.eta()) / std::sin(params.xi()), n);
    double residual = normalization(theta0, params, steps) * std::hypot(c11, c00) - 1;
    if (!(std::abs(residual) <= kDefaultTolerances.algebra * (1 + n))) {
        throw std::logic_error("normalization coefficient does not normalize the iterated state (residual " + format_real(residual) + ")");
    }
    return plan;
}

PlanRecord to_record(const ConcentrationPlan &plan) {
    return PlanRecord{
        .theta0 = plan.theta0,
        .xi = plan.params.xi(),
        .eta = plan.params.eta(),
        .delta = plan.params.delta(),
        .step = plan.params.step(),
        .mode = plan.mode,
        .steps = plan.steps,
        .total_prob = plan.total_prob,
        .fidelity = plan.fidelity,
        .theta_final = plan.final_theta(),
    };
}

std::string plan_csv_header() {
    return "theta0,xi,eta,delta,step,mode,T,Gamma,F,theta_final";
}

std::string to_csv_row(const PlanRecord &r) {
    std::string row;
    for (double v : {r.theta0, r.xi, r.eta, r.delta, r.step}) {
        row += format_real(v);
        row += ',';
    }
    row += to_string(r.mode);
    row += ',';
    row += std::to_string(r.steps);
    for (double v : {r.total_prob, r.fidelity, r.theta_final}) {
        row += ',';
        row += format_real(v);
    }
    return row;
}

std::string format_real(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

}  // namespace qecgate
