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
 * @file bloch_dynamics.hpp
 * Closed-form solution of the squeezed-thermal-bath qubit master equation.
 *
 * With x_a = gamma0 a t / 2 and x_n = gamma0 (2N+1) t / 2 the interaction
 * picture Bloch components are
 *
 *   x(t) = (K + cos(Phi) S) x0 - sin(Phi) S y0
 *   y(t) = (K - cos(Phi) S) y0 - sin(Phi) S x0
 *   z(t) = e^{-2 x_n} z0 - (1 - e^{-2 x_n}) / (2N+1)
 *
 * where K = cosh(x_a) e^{-x_n} and S = sinh(x_a) e^{-x_n}. K and S are
 * always formed from the combined exponents e^{+-x_a - x_n}, which stay
 * finite because 2N+1 > a.
 */

#include "sgad/bath.hpp"
#include "sgad/qubit.hpp"

namespace sgad {

enum class Picture { interaction, schroedinger };

/// Exponential factors shared by the analytic solution and the channel
/// synthesis, evaluated without overflow for any t >= 0.
struct DecayFactors {
    double x_a = 0.0;          ///< gamma0 a t / 2
    double x_n = 0.0;          ///< gamma0 (2N+1) t / 2
    double slow = 1.0;         ///< u = e^{x_a - x_n}
    double fast = 1.0;         ///< v = e^{-x_a - x_n}
    double cosh_term = 1.0;    ///< K = cosh(x_a) e^{-x_n}
    double sinh_term = 0.0;    ///< S = sinh(x_a) e^{-x_n}
    double population = 1.0;  ///< E = e^{-gamma0 (2N+1) t}
    double relaxed = 0.0;      ///< 1 - E, via expm1
};

/// Throws std::domain_error when 2N + 1 - a <= 0 (the slow mode would grow).
void check_decay_stability(const DerivedBath& d);

/// Throws std::invalid_argument for t < 0 or non-finite t.
DecayFactors decay_factors(const DerivedBath& d, double gamma0, double t);

struct EvolutionQuery {
    BlochVector initial;
    BathSpec bath;
    double t = 0.0;
    Picture picture = Picture::interaction;
};

/// Interaction-picture Bloch vector at time t. Rejects t < 0 and the
/// Schroedinger picture (the phase only exists at the matrix level).
BlochVector evolve_bloch(const EvolutionQuery& q);

/// Density matrix at time t; in the Schroedinger picture the coherence
/// picks up e^{-i omega t}.
DensityMatrix evolve_density(const DensityMatrix& rho0, const BathSpec& bath, double t,
                             Picture picture = Picture::interaction);

/// Fixed point diag(1 - q, q), q = (N+1)/(2N+1).
DensityMatrix asymptotic_state(const BathSpec& bath);

}  // namespace sgad
