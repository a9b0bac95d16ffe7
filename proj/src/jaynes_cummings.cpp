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


#include "sgad/jaynes_cummings.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace sgad {

namespace {

void require_time(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("time must be finite and >= 0");
    }
}

double l_squared(const JcSpec& s) { return s.kappa * s.kappa - 2.0 * s.gamma0 * s.kappa; }

}  // namespace

void JcSpec::validate() const {
    if (!(std::isfinite(kappa) && kappa > 0.0)) throw std::invalid_argument("kappa must be > 0");
    if (!(std::isfinite(gamma0) && gamma0 > 0.0)) throw std::invalid_argument("gamma0 must be > 0");
    if (!(std::isfinite(omega0) && omega0 > 0.0)) throw std::invalid_argument("omega0 must be > 0");
}

namespace detail {

double jc_amplitude_complex(const JcSpec& spec, double t) {
    const std::complex<double> l = std::sqrt(std::complex<double>(l_squared(spec), 0.0));
    const std::complex<double> ratio = spec.kappa / l;
    // cosh and sinh expanded into exponentials so each carries its own
    // e^{-kappa t/2} and nothing overflows at large t
    const std::complex<double> g =
        0.5 * ((1.0 + ratio) * std::exp(0.5 * (l - spec.kappa) * t) +
               (1.0 - ratio) * std::exp(0.5 * (-l - spec.kappa) * t));
    if (std::abs(g.imag()) > kJcRealTol) {
        std::ostringstream msg;
        msg << "jc amplitude has imaginary residue " << g.imag();
        throw std::logic_error(msg.str());
    }
    return g.real();
}

double jc_amplitude_series(const JcSpec& spec, double t) {
    const double l2t2 = l_squared(spec) * t * t;
    const double half_kt = 0.5 * spec.kappa * t;
    const double cosh_part = 1.0 + l2t2 / 8.0 + l2t2 * l2t2 / 384.0;
    const double sinhc_part = 1.0 + l2t2 / 24.0 + l2t2 * l2t2 / 1920.0;
    return std::exp(-half_kt) * (cosh_part + half_kt * sinhc_part);
}

}  // namespace detail

double jc_amplitude(const JcSpec& spec, double t) {
    spec.validate();
    require_time(t);
    if (std::sqrt(std::abs(l_squared(spec))) * t < kJcSeriesThreshold) {
        return detail::jc_amplitude_series(spec, t);
    }
    return detail::jc_amplitude_complex(spec, t);
}

double jc_lambda(const JcSpec& spec, double t) {
    const double g = jc_amplitude(spec, t);
    const double raw = 1.0 - g * g;
    const double clamped = std::clamp(raw, 0.0, 1.0);
    if (std::abs(raw - clamped) > kJcRealTol) {
        std::ostringstream msg;
        msg << "jc_lambda out of range by " << std::abs(raw - clamped);
        throw std::logic_error(msg.str());
    }
    return clamped;
}

DensityMatrix jc_evolve(double theta0, double phi0, const JcSpec& spec, double t,
                        Picture picture) {
    const double g = jc_amplitude(spec, t);
    const DensityMatrix rho0 = pure_state(theta0, phi0);
    if (t == 0.0) return rho0;
    const double excited = rho0(0, 0).real() * g * g;
    Complex coherence = rho0(0, 1) * g;
    if (picture == Picture::schroedinger) coherence *= std::polar(1.0, -spec.omega0 * t);
    return DensityMatrix::unchecked({excited, coherence, std::conj(coherence), 1.0 - excited});
}

}  // namespace sgad
