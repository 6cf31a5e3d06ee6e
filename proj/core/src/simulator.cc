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

#include "qecgate/simulator.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "qecgate/errors.h"
#include "qecgate/random.h"
#include "qecgate/states.h"

namespace qecgate {

namespace {

void check_initial_angle(double theta0) {
    if (!(theta0 >= 0 && theta0 <= std::numbers::pi / 4 + kQuarterPiSlack)) {
        throw DomainError("initial angle must satisfy 0 <= theta0 <= pi/4, got " + format_real(theta0));
    }
}

}  // namespace

ExactRun run_exact(double theta0, const GateParams &params, std::size_t steps) {
    check_initial_angle(theta0);
    ComplexMatrix gate = build_gate(params);

    ExactRun run;
    run.final_state = schmidt_form(theta0);
    run.thetas.push_back(theta0);
    run.branch_probs.reserve(steps);
    for (std::size_t i = 0; i < steps; i++) {
        auto branches = apply_postselect(gate, run.final_state);
        const BranchOutcome &success = branches[0];
        run.branch_probs.push_back(success.probability);
        run.final_state = success.state;
        // Amplitudes stay real and nonnegative on |00> and |11>.
        run.thetas.push_back(std::atan2(run.final_state[0].real(), run.final_state[3].real()));
    }
    return run;
}

double MultipartiteState::theta() const {
    return std::atan2(std::abs(c0), std::abs(c1));
}

MultipartiteRun run_multipartite(std::size_t parties, double theta0, const GateParams &params, std::size_t steps) {
    if (parties < 2) {
        throw DomainError("multipartite run needs at least 2 parties, got " + std::to_string(parties));
    }
    check_initial_angle(theta0);

    // Party 1 ⊗ probe, probe starting in P0: |0>|P0> is column 0, |1>|P0> column 2.
    // Only the P0 rows (0 and 2) feed the success branch.
    ComplexMatrix gate = build_gate(params);
    Complex keep0 = gate(0, 0);
    Complex keep1 = gate(2, 2);

    MultipartiteRun run;
    run.final_state = MultipartiteState{parties, std::cos(theta0), std::sin(theta0)};
    run.thetas.push_back(theta0);
    for (std::size_t i = 0; i < steps; i++) {
        MultipartiteState &s = run.final_state;
        Complex c0 = keep0 * s.c0;
        Complex c1 = keep1 * s.c1;
        double p = std::norm(c0) + std::norm(c1);
        double scale = 1 / std::sqrt(p);
        s.c0 = c0 * scale;
        s.c1 = c1 * scale;
        run.branch_probs.push_back(p);
        run.thetas.push_back(s.theta());
    }
    return run;
}

RunRecord run_monte_carlo(double theta0, const GateParams &params, StepMode mode, uint64_t trials, uint64_t seed, unsigned threads) {
    if (trials == 0) {
        throw DomainError("Monte Carlo needs at least one trial");
    }
    ConcentrationPlan plan = make_plan(theta0, params, mode);
    std::vector<double> probs = run_exact(plan.theta0, params, plan.steps).branch_probs;

    auto count_successes = [&](uint64_t begin, uint64_t end) {
        uint64_t successes = 0;
        for (uint64_t trial = begin; trial < end; trial++) {
            SplitMix64 rng = SplitMix64::substream(seed, trial);
            bool ok = std::all_of(probs.begin(), probs.end(), [&](double p) {
                return rng.uniform() < p;
            });
            successes += ok;
        }
        return successes;
    };

    uint64_t workers = std::clamp<uint64_t>(threads, 1, trials);
    std::vector<uint64_t> partial(workers, 0);
    if (workers == 1) {
        partial[0] = count_successes(0, trials);
    } else {
        std::vector<std::jthread> pool;
        for (uint64_t w = 0; w < workers; w++) {
            uint64_t begin = trials * w / workers;
            uint64_t end = trials * (w + 1) / workers;
            pool.emplace_back([&, w, begin, end] {
                partial[w] = count_successes(begin, end);
            });
        }
    }

    RunRecord record;
    record.seed = seed;
    record.trials = trials;
    for (uint64_t s : partial) {
        record.successes += s;
    }
    record.empirical_prob = static_cast<double>(record.successes) / static_cast<double>(trials);
    record.mean_steps_on_success = record.successes > 0 ? static_cast<double>(plan.steps) : 0.0;
    record.gamma_analytic = plan.total_prob;
    return record;
}

double z_score(const RunRecord &record) {
    double p = record.gamma_analytic;
    double sigma = std::sqrt(p * (1 - p) / static_cast<double>(record.trials));
    double diff = record.empirical_prob - p;
    if (sigma == 0) {
        return diff == 0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
    }
    return diff / sigma;
}

std::string run_csv_header() {
    return "seed,trials,successes,empirical_prob,gamma_analytic";
}

std::string to_csv_row(const RunRecord &r) {
    return std::to_string(r.seed) + "," + std::to_string(r.trials) + "," + std::to_string(r.successes) + "," +
           format_real(r.empirical_prob) + "," + format_real(r.gamma_analytic);
}

}  // namespace qecgate
