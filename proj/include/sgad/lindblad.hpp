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

/**
 * @file lindblad.hpp
 * Direct numerical integration of the squeezed-bath master equation
 *
 *   d rho/dt = sum_j (2 R_j rho R_j^dag - R_j^dag R_j rho - rho R_j^dag R_j)
 *
 * with R_1 = sqrt(gamma0 (N_th+1)/2) R, R_2 = sqrt(gamma0 N_th/2) R^dag and
 * R = sigma_- cosh(r) + e^{i Phi} sigma_+ sinh(r), in the interaction
 * picture. Serves as an independent check of the closed-form solution.
 */

#include <cstddef>
#include <optional>

#include "sgad/bath.hpp"
#include "sgad/qubit.hpp"

namespace sgad {

inline constexpr double kTraceDriftLimit = 1e-6;

struct LindbladGenerator {
    BathSpec bath;
    double rate1 = 0.0;  ///< sqrt(gamma0 (N_th+1)/2)
    double rate2 = 0.0;  ///< sqrt(gamma0 N_th/2); exactly 0 at T = 0
    Matrix2 r1;          ///< rate1 R
    Matrix2 r2;          ///< rate2 R^dagger
};

LindbladGenerator build_generator(const BathSpec& bath);

/// Right-hand side of the master equation at rho.
Matrix2 rhs(const LindbladGenerator& gen, const Matrix2& rho);

/// min(1e-3, 1 / (100 gamma0 (2N+1+a))).
double default_step(const BathSpec& bath);

struct IntegrationResult {
    Matrix2 state;
    std::size_t steps = 0;
    double step = 0.0;         ///< the step actually used, t / steps
    double trace_drift = 0.0;  ///< |Tr rho(t) - 1|
    bool drift_exceeded = false;
};

/// Classical RK4 with ceil(t/dt) equal steps. The state is symmetrized
/// (rho + rho^dag)/2 after every step; the trace is never renormalized.
/// Throws std::invalid_argument for t < 0 or dt <= 0.
IntegrationResult integrate(const LindbladGenerator& gen, const DensityMatrix& rho0, double t,
                            std::optional<double> dt = std::nullopt);

}  // namespace sgad
