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

#ifndef QECGATE_SIMULATOR_H
#define QECGATE_SIMULATOR_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qecgate/gate.h"
#include "qecgate/linalg.h"
#include "qecgate/planner.h"

/// Exact and sampled simulation of repeated gate applications. Nothing here
/// uses the planner's closed forms for the state itself; the planner is
/// consulted only for step counts and the analytic probability being checked.
namespace qecgate {

struct ExactRun {
    /// Conditional state on A ⊗ B after every application succeeded.
    ComplexVector final_state;
    /// P0 probability of each application, in order.
    std::vector<double> branch_probs;
    /// Schmidt-form angle before the first and after each application,
    /// read back from the simulated amplitudes.
    std::vector<double> thetas;
};

/// Starts from cos(theta0)|11> + sin(theta0)|00> and applies the gate with
/// postselection `steps` times, following the P0 branch.
/// Throws DomainError unless 0 <= theta0 <= pi/4.
ExactRun run_exact(double theta0, const GateParams &params, std::size_t steps);

/// c1 |1...1> + c0 |0...0> over `parties` qubits.
struct MultipartiteState {
    std::size_t parties = 2;
    Complex c1 = 1.0;
    Complex c0 = 0.0;

    /// arctan(|c0| / |c1|).
    double theta() const;
};

struct MultipartiteRun {
    MultipartiteState final_state;
    std::vector<double> branch_probs;
    std::vector<double> thetas;
};

/// Same protocol as run_exact for an n-party state, with the gate acting on
/// the first party and the probe. Uses the two-amplitude form, which the
/// gate's success branch preserves, so `parties` is unbounded.
/// Throws DomainError if parties < 2.
MultipartiteRun run_multipartite(std::size_t parties, double theta0, const GateParams &params, std::size_t steps);

struct RunRecord {
    uint64_t seed = 0;
    uint64_t trials = 0;
    uint64_t successes = 0;
    double empirical_prob = 0;
    /// Applications per successful trial (every success takes all of them).
    double mean_steps_on_success = 0;
    /// Planner's total success probability for the same inputs.
    double gamma_analytic = 0;
};

/// Samples the probe readout of every application from the exact branch
/// probabilities. A trial succeeds iff every readout is P0; a failure leaves a
/// product state, so the trial stops there.
///
/// Trial k draws from SplitMix64::substream(seed, k), so the record depends
/// only on (inputs, seed) and not on `threads`.
/// Throws DomainError if trials == 0.
RunRecord run_monte_carlo(
    double theta0, const GateParams &params, StepMode mode, uint64_t trials, uint64_t seed, unsigned threads = 1);

/// (empirical - analytic) / sqrt(analytic (1 - analytic) / trials); 0 when the
/// binomial variance vanishes and the estimate is exact.
double z_score(const RunRecord &record);

/// "seed,trials,successes,empirical_prob,gamma_analytic"
std::string run_csv_header();
std::string to_csv_row(const RunRecord &record);

}  // namespace qecgate

#endif
