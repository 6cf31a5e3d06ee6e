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

#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "qecgate/errors.h"
#include "qecgate/gate.h"
#include "qecgate/planner.h"
#include "qecgate/simulator.h"
#include "qecgate/states.h"

namespace qecgate::cli {

namespace {

constexpr double kVerifyTolerance = 1e-9;

std::string format_complex(Complex c) {
    // Adding +0.0 turns -0.0 into +0.0.
    c = {c.real() + 0.0, c.imag() + 0.0};
    std::string s = format_real(c.real());
    s += std::signbit(c.imag()) ? '-' : '+';
    s += format_real(std::abs(c.imag()));
    s += 'j';
    return s;
}

std::string format_matrix(const ComplexMatrix &m) {
    std::string s = "[";
    for (std::size_t r = 0; r < m.rows(); r++) {
        s += r ? ", [" : "[";
        for (std::size_t c = 0; c < m.cols(); c++) {
            s += c ? ", " : "";
            s += format_complex(m(r, c));
        }
        s += "]";
    }
    return s + "]";
}

void write_file(const std::string &path, const std::string &content) {
    std::filesystem::path resolved = resolve_output_path(path);
    if (resolved.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(resolved.parent_path(), ec);
    }
    std::ofstream f(resolved, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open '" + resolved.string() + "' for writing");
    }
    f << content;
    f.flush();
    if (!f) {
        throw IoError("failed writing '" + resolved.string() + "'");
    }
}

double bell_fidelity(const ComplexVector &state) {
    double r = 1 / std::sqrt(2.0);
    return overlap(ComplexVector{r, 0, 0, r}, state);
}

struct PlanOptions {
    double theta0 = 0;
    double xi = 0;
    double eta = 0;
    std::string mode = "nearest";
    bool verify = false;
    std::string csv;
};

int cmd_plan(const PlanOptions &o, std::ostream &out, std::ostream &err) {
    GateParams params(o.xi, o.eta);
    ConcentrationPlan plan = make_plan(o.theta0, params, parse_step_mode(o.mode));

    out << "theta0 = " << format_real(plan.theta0) << "\n";
    out << "xi = " << format_real(params.xi()) << "\n";
    out << "eta = " << format_real(params.eta()) << "\n";
    out << "delta = " << format_real(params.delta()) << "\n";
    out << "step = " << format_real(params.step()) << "\n";
    out << "mode = " << to_string(plan.mode) << "\n";
    out << "T = " << plan.steps << "\n";
    out << "Gamma = " << format_real(plan.total_prob) << "\n";
    out << "F = " << format_real(plan.fidelity) << "\n";
    out << "i,theta,gamma\n";
    for (std::size_t i = 0; i < plan.thetas.size(); i++) {
        out << i << "," << format_real(plan.thetas[i]) << ",";
        if (i > 0) {
            out << format_real(plan.step_probs[i - 1]);
        }
        out << "\n";
    }

    if (!o.csv.empty()) {
        write_file(o.csv, plan_csv_header() + "\n" + to_csv_row(to_record(plan)) + "\n");
    }

    if (o.verify) {
        ExactRun run = run_exact(plan.theta0, params, plan.steps);
        double theta_diff = 0;
        double gamma_diff = 0;
        double product = 1;
        for (std::size_t i = 0; i < plan.steps; i++) {
            theta_diff = std::max(theta_diff, std::abs(run.thetas[i + 1] - plan.thetas[i + 1]));
            gamma_diff = std::max(gamma_diff, std::abs(run.branch_probs[i] - plan.step_probs[i]));
            product *= run.branch_probs[i];
        }
        double total_diff = std::abs(product - plan.total_prob);
        double fidelity_diff = std::abs(bell_fidelity(run.final_state) - plan.fidelity);
        double worst = std::max({theta_diff, gamma_diff, total_diff, fidelity_diff});
        out << "verify.max_theta_diff = " << format_real(theta_diff) << "\n";
        out << "verify.max_gamma_diff = " << format_real(gamma_diff) << "\n";
        out << "verify.Gamma_diff = " << format_real(total_diff) << "\n";
        out << "verify.F_diff = " << format_real(fidelity_diff) << "\n";
        if (!(worst <= kVerifyTolerance)) {
            err << "error: analytic and simulated results disagree by " << format_real(worst) << " (limit "
                << format_real(kVerifyTolerance) << ")\n";
            return kFailure;
        }
        out << "verify = ok\n";
    }
    return kOk;
}

struct SimulateOptions {
    double theta0 = 0;
    double xi = 0;
    double eta = 0;
    std::string mode = "nearest";
    uint64_t trials = 100000;
    uint64_t seed = 1;
    unsigned threads = 1;
    std::string csv;
};

int cmd_simulate(const SimulateOptions &o, std::ostream &out) {
    GateParams params(o.xi, o.eta);
    StepMode mode = parse_step_mode(o.mode);
    RunRecord r = run_monte_carlo(o.theta0, params, mode, o.trials, o.seed, o.threads);
    out << "seed = " << r.seed << "\n";
    out << "trials = " << r.trials << "\n";
    out << "successes = " << r.successes << "\n";
    out << "empirical_prob = " << format_real(r.empirical_prob) << "\n";
    out << "mean_steps_on_success = " << format_real(r.mean_steps_on_success) << "\n";
    out << "gamma_analytic = " << format_real(r.gamma_analytic) << "\n";
    out << "z = " << format_real(z_score(r)) << "\n";
    out << run_csv_header() << "\n" << to_csv_row(r) << "\n";
    if (!o.csv.empty()) {
        write_file(o.csv, run_csv_header() + "\n" + to_csv_row(r) + "\n");
    }
    return kOk;
}

int cmd_schmidt(const std::string &amplitudes, std::ostream &out) {
    ComplexVector psi = parse_amplitudes(amplitudes);
    SchmidtState s = schmidt_decompose(psi);
    out << "theta = " << format_real(s.theta) << "\n";
    out << "entropy = " << format_real(entanglement(s.theta).entropy) << "\n";
    out << "frame_a = " << format_matrix(s.frame_a) << "\n";
    out << "frame_b = " << format_matrix(s.frame_b) << "\n";
    out << "round_trip_overlap = " << format_real(overlap(reconstruct(s), psi.normalized())) << "\n";
    return kOk;
}

struct FminOptions {
    double step = 0;
    double xi = 0;
    double eta = 0;
};

int cmd_fmin(const FminOptions &o, bool have_step, bool have_gate, std::ostream &out) {
    if (have_step == have_gate) {
        throw DomainError("fmin needs either --step or both --xi and --eta");
    }
    double step = have_step ? o.step : GateParams(o.xi, o.eta).step();
    out << "step = " << format_real(step) << "\n";
    out << "f_min = " << format_real(f_min(step)) << "\n";
    return kOk;
}

struct MultiOptions {
    std::size_t parties = 3;
    double theta0 = 0;
    double xi = 0;
    double eta = 0;
    std::string mode = "nearest";
};

int cmd_multi(const MultiOptions &o, std::ostream &out) {
    GateParams params(o.xi, o.eta);
    std::size_t steps = step_count(o.theta0, params, parse_step_mode(o.mode));
    MultipartiteRun run = run_multipartite(o.parties, o.theta0, params, steps);
    ExactRun pair = run_exact(run.thetas.front(), params, steps);
    double deviation = 0;
    for (std::size_t i = 0; i < steps; i++) {
        deviation = std::max(deviation, std::abs(run.branch_probs[i] - pair.branch_probs[i]));
        deviation = std::max(deviation, std::abs(run.thetas[i + 1] - pair.thetas[i + 1]));
    }
    double total = 1;
    for (double p : run.branch_probs) {
        total *= p;
    }
    out << "parties = " << o.parties << "\n";
    out << "T = " << steps << "\n";
    out << "Gamma = " << format_real(total) << "\n";
    out << "c1 = " << format_complex(run.final_state.c1) << "\n";
    out << "c0 = " << format_complex(run.final_state.c0) << "\n";
    out << "i,theta,prob\n";
    for (std::size_t i = 0; i < run.thetas.size(); i++) {
        out << i << "," << format_real(run.thetas[i]) << ",";
        if (i > 0) {
            out << format_real(run.branch_probs[i - 1]);
        }
        out << "\n";
    }
    out << "max_deviation_from_bipartite = " << format_real(deviation) << "\n";
    return kOk;
}

}  // namespace

std::filesystem::path resolve_output_path(const std::string &path) {
    std::filesystem::path p(path);
    const char *dir = std::getenv(kOutputDirEnv);
    if (p.is_relative() && dir != nullptr && *dir != '\0') {
        return std::filesystem::path(dir) / p;
    }
    return p;
}

void validate(const SweepSpec &spec) {
    if (!(spec.start < spec.stop)) {
        throw DomainError("sweep requires start < stop");
    }
    if (spec.points < 2) {
        throw DomainError("sweep requires at least 2 points");
    }
    parse_step_mode(spec.mode);
    if (spec.variable == SweepSpec::Variable::kTheta0) {
        if (!(spec.start > 0 && spec.stop <= std::numbers::pi / 4 + kQuarterPiSlack)) {
            throw DomainError("theta0 sweep range must lie in (0, pi/4]");
        }
        GateParams(spec.xi, spec.eta);
    } else {
        if (!(spec.start > 1)) {
            throw DomainError("step sweep range must lie above 1");
        }
        if (!(spec.theta0 > 0 && spec.theta0 <= std::numbers::pi / 4 + kQuarterPiSlack)) {
            throw DomainError("step sweep requires 0 < theta0 <= pi/4");
        }
        if (!(spec.eta > 0 && spec.eta < std::numbers::pi / 4)) {
            throw DomainError("step sweep requires 0 < eta < pi/4");
        }
    }
}

std::string sweep_csv(const SweepSpec &spec) {
    validate(spec);
    StepMode mode = parse_step_mode(spec.mode);
    bool step_sweep = spec.variable == SweepSpec::Variable::kStep;

    auto row_at = [&](std::size_t k) {
        double value = k + 1 == spec.points
                           ? spec.stop
                           : spec.start + (spec.stop - spec.start) * static_cast<double>(k) / static_cast<double>(spec.points - 1);
        if (!step_sweep) {
            return to_csv_row(to_record(make_plan(value, GateParams(spec.xi, spec.eta), mode)));
        }
        GateParams params = GateParams::from_step(value, spec.eta);
        return to_csv_row(to_record(make_plan(spec.theta0, params, mode))) + "," + format_real(f_min(params.step()));
    };

    // Rows are computed independently and stored by grid index.
    std::vector<std::string> rows(spec.points);
    std::size_t workers = std::clamp<std::size_t>(spec.threads, 1, spec.points);
    std::vector<std::exception_ptr> failures(workers);
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; w++) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t k = w; k < spec.points; k += workers) {
                        rows[k] = row_at(k);
                    }
                } catch (...) {
                    failures[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto &f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }

    std::string csv = plan_csv_header() + (step_sweep ? ",f_min\n" : "\n");
    for (const auto &row : rows) {
        csv += row;
        csv += '\n';
    }
    return csv;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Simulation and analysis of iterated entanglement concentration gates", "qecgate"};
    app.require_subcommand(1);
    // Sweep settings can come from a TOML-style file with a [sweep] table.
    app.set_config("--config", "", "TOML-style settings file ([sweep] table)");
    app.fallthrough();
    const std::vector<std::string> modes{"capped", "nearest"};

    PlanOptions plan;
    CLI::App *plan_cmd = app.add_subcommand("plan", "Closed-form concentration plan for one initial state");
    plan_cmd->add_option("--theta0", plan.theta0, "Initial Schmidt angle in radians, in (0, pi/4]")->required();
    plan_cmd->add_option("--xi", plan.xi, "Gate parameter xi (radians)")->required();
    plan_cmd->add_option("--eta", plan.eta, "Gate parameter eta (radians), xi < eta < pi/4")->required();
    plan_cmd->add_option("--mode", plan.mode, "Step-count rule")->check(CLI::IsMember(modes))->capture_default_str();
    plan_cmd->add_flag("--verify", plan.verify, "Cross-check against exact state-vector simulation");
    plan_cmd->add_option("--csv", plan.csv, "Write the flat plan record to this CSV file");

    SweepSpec sweep;
    std::string variable = "theta0";
    std::string sweep_output;
    CLI::App *sweep_cmd = app.add_subcommand("sweep", "Tabulate plans over a grid of initial angles or steps");
    sweep_cmd->add_option("--variable", variable, "Swept quantity")
        ->check(CLI::IsMember({"theta0", "delta"}))
        ->capture_default_str();
    sweep_cmd->add_option("--start", sweep.start, "First grid value")->required();
    sweep_cmd->add_option("--stop", sweep.stop, "Last grid value")->required();
    sweep_cmd->add_option("--points", sweep.points, "Number of grid points (>= 2)")->required();
    sweep_cmd->add_option("--xi", sweep.xi, "Gate xi (theta0 sweeps)");
    sweep_cmd->add_option("--eta", sweep.eta, "Gate eta (both sweeps)");
    sweep_cmd->add_option("--theta0", sweep.theta0, "Initial angle (delta sweeps)");
    sweep_cmd->add_option("--mode", sweep.mode, "Step-count rule")->check(CLI::IsMember(modes))->capture_default_str();
    sweep_cmd->add_option("--threads", sweep.threads, "Worker threads")->capture_default_str();
    sweep_cmd->add_option("--output,-o", sweep_output, "CSV output path (default: standard output)");

    SimulateOptions sim;
    CLI::App *sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of the total success probability");
    sim_cmd->add_option("--theta0", sim.theta0, "Initial Schmidt angle in radians")->required();
    sim_cmd->add_option("--xi", sim.xi, "Gate parameter xi")->required();
    sim_cmd->add_option("--eta", sim.eta, "Gate parameter eta")->required();
    sim_cmd->add_option("--mode", sim.mode, "Step-count rule")->check(CLI::IsMember(modes))->capture_default_str();
    sim_cmd->add_option("--trials", sim.trials, "Number of trials (>= 1)")->capture_default_str();
    sim_cmd->add_option("--seed", sim.seed, "64-bit seed")->capture_default_str();
    sim_cmd->add_option("--threads", sim.threads, "Worker threads")->capture_default_str();
    sim_cmd->add_option("--csv", sim.csv, "Write the run record to this CSV file");

    std::string amplitudes;
    CLI::App *schmidt_cmd = app.add_subcommand("schmidt", "Schmidt decomposition of a two-qubit state");
    schmidt_cmd->add_option("amplitudes,--amplitudes", amplitudes, "Four amplitudes re+imj for |00>,|01>,|10>,|11>")
        ->required();

    FminOptions fmin;
    CLI::App *fmin_cmd = app.add_subcommand("fmin", "Worst-case fidelity for a concentration step");
    CLI::Option *step_opt = fmin_cmd->add_option("--step,--delta", fmin.step, "Concentration step tan(eta)/tan(xi)");
    CLI::Option *fxi = fmin_cmd->add_option("--xi", fmin.xi, "Gate parameter xi");
    CLI::Option *feta = fmin_cmd->add_option("--eta", fmin.eta, "Gate parameter eta");
    fxi->needs(feta);
    feta->needs(fxi);

    MultiOptions multi;
    CLI::App *multi_cmd = app.add_subcommand("multi", "Protocol on an n-party |1..1>, |0..0> state");
    multi_cmd->add_option("--parties,-n", multi.parties, "Number of parties (>= 2)")->capture_default_str();
    multi_cmd->add_option("--theta0", multi.theta0, "Initial angle in radians")->required();
    multi_cmd->add_option("--xi", multi.xi, "Gate parameter xi")->required();
    multi_cmd->add_option("--eta", multi.eta, "Gate parameter eta")->required();
    multi_cmd->add_option("--mode", multi.mode, "Step-count rule")->check(CLI::IsMember(modes))->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }

    try {
        if (*plan_cmd) {
            return cmd_plan(plan, out, err);
        }
        if (*sweep_cmd) {
            sweep.variable = variable == "delta" ? SweepSpec::Variable::kStep : SweepSpec::Variable::kTheta0;
            std::string csv = sweep_csv(sweep);
            if (sweep_output.empty()) {
                out << csv;
            } else {
                write_file(sweep_output, csv);
            }
            return kOk;
        }
        if (*sim_cmd) {
            return cmd_simulate(sim, out);
        }
        if (*schmidt_cmd) {
            return cmd_schmidt(amplitudes, out);
        }
        if (*fmin_cmd) {
            return cmd_fmin(fmin, step_opt->count() > 0, fxi->count() > 0, out);
        }
        if (*multi_cmd) {
            return cmd_multi(multi, out);
        }
    } catch (const DomainError &e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kDomainError;
}

}  // namespace qecgate::cli
