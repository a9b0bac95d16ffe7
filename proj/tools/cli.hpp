// Copyright 2026 The sgad Authors
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


#pragma once

// Command-line front end: figure presets, sweeps and output formatting.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgad/bath.hpp"
#include "sgad/bloch_dynamics.hpp"
#include "sgad/capacity.hpp"

namespace sgad::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kCertificationFailure = 2 };

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Format { csv, json };
enum class CapacityMode { curve, surface, profile };

/// One bath configuration within a run; figure presets carry several.
struct Curve {
    BathSpec bath;
    std::optional<double> t;  ///< fixed time, used by the profile mode
};

struct RunConfig {
    std::string command;  ///< params | evolve | channel | capacity
    int figure = 0;       ///< 0 when no preset is used
    std::vector<Curve> curves;
    double t_start = 0.0;
    double t_end = 100.0;
    std::size_t n_points = 101;
    double t = 1.0;  ///< single time for channel and surface runs
    double theta0 = 0.0;
    double phi0 = 0.0;
    Picture picture = Picture::interaction;
    bool oracle = false;
    std::optional<double> oracle_dt;
    CapacityMode capacity_mode = CapacityMode::curve;
    CapacityConfig capacity;
    Format format = Format::csv;
    std::string out;  ///< empty for stdout
    std::size_t threads = 1;

    /// Throws ConfigError.
    void validate() const;
    std::vector<double> time_grid() const;
};

/// Parses argv into a resolved config: figure preset first, then explicit
/// flags on top. Throws ConfigError. Returns std::nullopt after printing
/// help.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Runs a resolved config, writing the result to `out`. Returns kOk or
/// kCertificationFailure.
int execute(const RunConfig& cfg, std::ostream& out);

/// parse_args + execute with the output file handling and error reporting
/// of the sgad binary.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sgad::cli
