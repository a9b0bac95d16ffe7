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

#include "sgad/bloch_dynamics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sgad {

void check_decay_stability(const DerivedBath& d) {
    const double gap = d.two_n_plus_one() - d.a;
    if (!(gap > 0.0)) {
        std::ostringstream msg;
        msg << "unstable bath: 2N+1-a = " << gap << " (N = " << d.n_eff << ", a = " << d.a
            << ")";
        throw std::domain_error(msg.str());
    }
}

DecayFactors decay_factors(const DerivedBath& d, double gamma0, double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("evolution time must be finite and >= 0");
    }
    DecayFactors f;
    f.x_a = 0.5 * gamma0 * d.a * t;
    f.x_n = 0.5 * gamma0 * d.two_n_plus_one() * t;
    f.slow = std::exp(f.x_a - f.x_n);
    f.fast = std::exp(-f.x_a - f.x_n);
    f.cosh_term = 0.5 * (f.slow + f.fast);
    // sinh(x_a) e^{-x_n} = u (1 - e^{-2 x_a}) / 2 keeps small-t accuracy
    f.sinh_term = -0.5 * f.slow * std::expm1(-2.0 * f.x_a);
    f.population = std::exp(-2.0 * f.x_n);
    f.relaxed = -std::expm1(-2.0 * f.x_n);
    return f;
}

BlochVector evolve_bloch(const EvolutionQuery& q) {
    if (q.picture != Picture::interaction) {
        throw std::invalid_argument("evolve_bloch is defined in the interaction picture");
    }
    const DerivedBath d = derive_bath(q.bath);
    check_decay_stability(d);
    const DecayFactors f = decay_factors(d, q.bath.gamma0, q.t);
    const double c = std::cos(q.bath.phase);
    const double s = std::sin(q.bath.phase);
    const BlochVector& b0 = q.initial;
    return {(f.cosh_term + c * f.sinh_term) * b0.x - s * f.sinh_term * b0.y,
            (f.cosh_term - c * f.sinh_term) * b0.y - s * f.sinh_term * b0.x,
            f.population * b0.z - f.relaxed / d.two_n_plus_one()};
}

DensityMatrix evolve_density(const DensityMatrix& rho0, const BathSpec& bath, double t,
                             Picture picture) {
    const DerivedBath d = derive_bath(bath);
    check_decay_stability(d);
    const DecayFactors f = decay_factors(d, bath.gamma0, t);
    if (t == 0.0) return rho0;

    const Matrix2& m0 = rho0.matrix();
    const double z0 = (m0(0, 0) - m0(1, 1)).real();
    const Complex lowering0 = m0(0, 1);  // <sigma_-(0)>
    const Complex raising0 = m0(1, 0);   // <sigma_+(0)>

    const double pop = f.population * z0 - f.relaxed / d.two_n_plus_one();
    // [1 + (e^{2 x_a} - 1)/2] e^{-x_a - x_n} collapses to K
    Complex coherence =
        f.cosh_term * lowering0 + f.sinh_term * std::polar(1.0, bath.phase) * raising0;
    if (picture == Picture::schroedinger) {
        coherence *= std::polar(1.0, -bath.omega * t);
    }
    return DensityMatrix::unchecked(
        {0.5 * (1.0 + pop), coherence, std::conj(coherence), 0.5 * (1.0 - pop)});
}

DensityMatrix asymptotic_state(const BathSpec& bath) {
    const DerivedBath d = derive_bath(bath);
    const double q = (d.n_eff + 1.0) / d.two_n_plus_one();
    return DensityMatrix::unchecked(Matrix2::diag(1.0 - q, q));
}

}  // namespace sgad
