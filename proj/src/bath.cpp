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

#include "sgad/bath.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sgad {

void BathSpec::validate() const {
    auto fail = [](const char* what, double value) {
        std::ostringstream msg;
        msg << "invalid bath: " << what << " (got " << value << ")";
        throw std::invalid_argument(msg.str());
    };
    if (!(std::isfinite(temperature) && temperature >= 0.0)) fail("T must be >= 0", temperature);
    if (!(std::isfinite(squeezing) && squeezing >= 0.0)) fail("r must be >= 0", squeezing);
    if (!std::isfinite(phase)) fail("Phi must be finite", phase);
    if (!(std::isfinite(gamma0) && gamma0 > 0.0)) fail("gamma0 must be > 0", gamma0);
    if (!(std::isfinite(omega) && omega > 0.0)) fail("omega must be > 0", omega);
}

double planck_occupation(double omega, double temperature) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw std::invalid_argument("planck_occupation: omega must be > 0");
    }
    if (!(temperature >= 0.0)) {
        throw std::invalid_argument("planck_occupation: T must be >= 0");
    }
    if (temperature == 0.0) return 0.0;
    const double x = omega / temperature;
    if (x > 700.0) return 0.0;
    return 1.0 / std::expm1(x);
}

DerivedBath derive_bath(const BathSpec& spec) {
    spec.validate();
    DerivedBath d;
    d.n_th = planck_occupation(spec.omega, spec.temperature);
    const double r = spec.squeezing;
    const double ch = std::cosh(r);
    const double sh = std::sinh(r);
    d.n_eff = d.n_th * (ch * ch + sh * sh) + sh * sh;
    const double two_nth_plus_one = 2.0 * d.n_th + 1.0;
    d.a = std::sinh(2.0 * r) * two_nth_plus_one;
    d.m = -0.5 * std::sinh(2.0 * r) * two_nth_plus_one * std::polar(1.0, spec.phase);
    return d;
}

}  // namespace sgad
