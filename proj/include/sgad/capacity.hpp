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
 * @file capacity.hpp
 * Holevo quantity of finite ensembles sent through a channel, and its
 * maximum over binary ensembles of orthogonal pure states
 * {(f, |theta0, phi0>), (1 - f, |theta0 + pi, phi0>)}.
 *
 * The maximum is reported as the restricted binary capacity: it is a lower
 * bound on the product-state classical capacity, not the capacity itself.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "sgad/kraus.hpp"
#include "sgad/qubit.hpp"

namespace sgad {

struct EnsembleMember {
    double probability = 0.0;
    DensityMatrix state = DensityMatrix::unchecked(Matrix2::identity() * 0.5);
};

struct Ensemble {
    std::vector<EnsembleMember> members;

    /// Throws std::invalid_argument on negative weights or a total weight
    /// differing from 1 by more than 1e-12.
    void validate() const;
};

/// Throws std::invalid_argument unless f lies in [0, 1].
Ensemble binary_orthogonal_ensemble(double theta0, double phi0, double f);

/// S(sum_j p_j E(rho_j)) - sum_j p_j S(E(rho_j)), in bits.
double holevo_chi(const Ensemble& e, const KrausSet& k);

struct SurfaceGrid {
    std::size_t n_theta = 61;  ///< nodes on [0, pi], endpoints included
    std::size_t n_phi = 121;   ///< nodes on [0, 2 pi], endpoints included
};

struct ChiSurface {
    std::vector<double> theta;
    std::vector<double> phi;
    std::vector<double> chi;  ///< row-major: chi[i * phi.size() + j]

    double at(std::size_t i, std::size_t j) const { return chi[i * phi.size() + j]; }
};

/// chi of binary_orthogonal_ensemble(theta_i, phi_j, f) at every node.
/// Rows are split across `threads` workers; the result does not depend on
/// the worker count. Throws std::invalid_argument for grids below 2x2.
ChiSurface chi_surface(const KrausSet& k, const SurfaceGrid& grid, double f,
                       std::size_t threads = 1);

struct CapacityConfig {
    SurfaceGrid grid;
    std::size_t refine_rounds = 3;
    double shrink = 10.0;
    std::size_t refine_samples = 21;  ///< per coordinate line search
    double f = 0.5;
    bool sweep_f = false;          ///< maximize over f as well
    std::size_t f_points = 21;     ///< nodes on [0, 1] when sweep_f is set
    bool keep_surface = false;     ///< return the coarse surface
    std::size_t threads = 1;

    void validate() const;
};

struct CapacityResult {
    double c = 0.0;  ///< bits
    double theta0 = 0.0;
    double phi0 = 0.0;
    double f = 0.5;
    std::optional<ChiSurface> surface;
};

/// Grid search followed by coordinate descent around the best node. Ties
/// within 1e-12 keep the first node in (theta0, phi0) lexicographic order.
CapacityResult classical_capacity(const KrausSet& k, const CapacityConfig& cfg = {});

}  // namespace sgad
