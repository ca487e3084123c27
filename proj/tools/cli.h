// Copyright 2026 The colorz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef COLORZ_TOOLS_CLI_H
#define COLORZ_TOOLS_CLI_H

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "colorz/bit_matrix.h"
#include "colorz/estimator.h"
#include "colorz/qsim.h"

namespace colorz::cli {

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kFileNotFound = 3,
    kParse = 4,
    kValidation = 5,
    kCapExceeded = 6,
    kDomain = 7,
};

enum class Command { kGenerate, kValidate, kExact, kEstimate, kQsim, kCompare };

struct LatticeSource {
    enum class Kind { kNone, kHexagonal, kSquareOctagon, kFile } kind = Kind::kNone;
    size_t rows = 0;
    size_t cols = 0;
    std::filesystem::path path;
    std::string describe() const;
};

struct RunConfig {
    Command command = Command::kExact;
    LatticeSource lattice;
    std::vector<double> betas;  // one entry per output document
    bool beta_from_flag = false;
    std::optional<double> uniform_j;
    std::optional<std::filesystem::path> couplings_file;
    double epsilon = 0.1;
    double confidence = 0.95;
    std::optional<uint64_t> samples;
    uint64_t seed = 0;
    size_t threads = 1;
    SamplerKind sampler = SamplerKind::kCompiled;
    size_t enumeration_cap = kDefaultEnumerationCap;
    size_t qubit_cap = kDefaultQubitCap;
    std::optional<std::filesystem::path> output;
    bool timing = false;
};

// Parses argv-style arguments (without the program name). Returns the exit
// code to use when parsing did not produce a runnable config.
std::optional<RunConfig> parse_args(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
                                    int &exit_code);

int run(const RunConfig &config, std::ostream &out, std::ostream &err);

// parse_args followed by run.
int main_with_args(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace colorz::cli

#endif  // COLORZ_TOOLS_CLI_H
