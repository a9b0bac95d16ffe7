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
 * @file jaynes_cummings.hpp
 * Single-excitation dissipative Jaynes-Cummings atom in a lossy cavity with
 * a Lorentzian coupling spectrum of width kappa.
 *
 * All results go through the decay amplitude
 *
 *   G(t) = e^{-kappa t/2} [cosh(l t/2) + (kappa/l) sinh(l t/2)],
 *   l = sqrt(kappa^2 - 2 gamma0 kappa),
 *
 * which is real for every kappa even though l is imaginary when
 * kappa < 2 gamma0. The excited population decays as G^2 and the coherence
 * as G, so the evolution is the amplitude damping channel with
 * 1 - lambda = G^2.
 */

#include "sgad/bloch_dynamics.hpp"
#include "sgad/qubit.hpp"

namespace sgad {

struct JcSpec {
    double kappa = 0.2;   ///< spectral width of the coupling, > 0
    double gamma0 = 0.05; ///< > 0
    double omega0 = 1.0;  ///< atomic transition frequency, > 0

    /// Throws std::invalid_argument on non-positive or non-finite fields.
    void validate() const;
};

/// Below this |l| t the amplitude is taken from its Taylor series.
inline constexpr double kJcSeriesThreshold = 1e-6;

/// Largest tolerated imaginary residue or clamping magnitude.
inline constexpr double kJcRealTol = 1e-10;

/// G(t). Throws std::invalid_argument for t < 0.
double jc_amplitude(const JcSpec& spec, double t);

/// 1 - G(t)^2, clamped to [0, 1].
double jc_lambda(const JcSpec& spec, double t);

/// State at time t from pure_state(theta0, phi0). The Schroedinger picture
/// multiplies the coherence by e^{-i omega0 t}.
DensityMatrix jc_evolve(double theta0, double phi0, const JcSpec& spec, double t,
                        Picture picture = Picture::interaction);

namespace detail {
/// G(t) through complex l with no series branch. Exposed for tests.
double jc_amplitude_complex(const JcSpec& spec, double t);
/// G(t) from the Taylor series in (l t)^2. Exposed for tests.
double jc_amplitude_series(const JcSpec& spec, double t);
}  // namespace detail

}  // namespace sgad
