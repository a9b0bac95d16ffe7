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

#include <complex>

namespace sgad {

/// Squeezed thermal bath parameters, in units hbar = k_B = 1.
struct BathSpec {
    double temperature = 0.0;  ///< T >= 0
    double squeezing = 0.0;    ///< r >= 0
    double phase = 0.0;        ///< squeezing phase Phi, radians
    double gamma0 = 0.05;      ///< spontaneous emission rate, > 0
    double omega = 1.0;        ///< system transition frequency, > 0

    /// Throws std::invalid_argument unless T >= 0, r >= 0, gamma0 > 0,
    /// omega > 0 and every field is finite.
    void validate() const;
};

/// Quantities derived from a BathSpec.
struct DerivedBath {
    double n_th = 0.0;             ///< mean thermal photon number
    double n_eff = 0.0;            ///< effective photon number N
    std::complex<double> m{};      ///< squeezing correlation M
    double a = 0.0;                ///< sinh(2r)(2 n_th + 1)

    /// 2N + 1, the total damping multiplier.
    double two_n_plus_one() const { return 2.0 * n_eff + 1.0; }
};

/// 1/(e^{omega/T} - 1); exactly 0 at T = 0 and for omega/T > 700.
/// Throws std::invalid_argument for omega <= 0 or T < 0.
double planck_occupation(double omega, double temperature);

DerivedBath derive_bath(const BathSpec& spec);

}  // namespace sgad
