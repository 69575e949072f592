// Copyright 2026 The betheprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace betheprep::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kInputError = 2,
};

struct Tolerances {
    double fidelity = 1e-8;
    double eigen_residual = 1e-4;
    double bethe_residual = 1e-4;
    double sz = 1e-10;
    double commutator = 1e-10;
};

struct RunConfig {
    std::string command;
    std::string problem_file;
    /// Empty means stdout.
    std::string out;
    std::string format = "qasm";
    bool prune = false;
    bool dump_state = false;
    Tolerances tolerances;
    std::uint64_t seed = 0;
};

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out` (or the --out file); diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace betheprep::cli
