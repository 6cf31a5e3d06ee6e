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

#ifndef QECGATE_TOOLS_CLI_H
#define QECGATE_TOOLS_CLI_H

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace qecgate::cli {

enum ExitCode : int {
    kOk = 0,
    /// `plan --verify` disagreement or an unexpected internal failure.
    kFailure = 1,
    /// Invalid flags or values outside an operation's domain.
    kDomainError = 2,
    kIoError = 3,
};

/// Relative output paths are resolved against this directory when set.
inline constexpr const char *kOutputDirEnv = "QECGATE_OUTPUT_DIR";

class IoError : public std::runtime_error {
   public:
    explicit IoError(const std::string &what) : std::runtime_error(what) {
    }
};

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`. Returns an ExitCode.
///
/// Subcommands: plan, sweep, simulate, schmidt, fmin, multi.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

std::filesystem::path resolve_output_path(const std::string &path);

/// Grid sweep over the initial angle (gate fixed by xi, eta) or over the
/// concentration step (initial angle and eta fixed, xi = arctan(tan(eta) / step)).
struct SweepSpec {
    enum class Variable { kTheta0, kStep };

    Variable variable = Variable::kTheta0;
    double start = 0;
    double stop = 0;
    std::size_t points = 0;
    double xi = 0;
    double eta = 0;
    double theta0 = 0;
    std::string mode = "nearest";
    unsigned threads = 1;
};

/// Throws DomainError naming the violated constraint.
void validate(const SweepSpec &spec);

/// CSV text for the sweep: header plus one row per grid point in grid order.
/// Step sweeps carry an extra f_min column.
std::string sweep_csv(const SweepSpec &spec);

}  // namespace qecgate::cli

#endif
