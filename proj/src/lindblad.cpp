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


#include "sgad/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sgad {

LindbladGenerator build_generator(const BathSpec& bath) {
    const DerivedBath d = derive_bath(bath);
    const Matrix2 r = std::cosh(bath.squeezing) * pauli::lowering() +
                      std::polar(std::sinh(bath.squeezing), bath.phase) * pauli::raising();
    LindbladGenerator g;
    g.bath = bath;
    g.rate1 = std::sqrt(0.5 * bath.gamma0 * (d.n_th + 1.0));
    g.rate2 = std::sqrt(0.5 * bath.gamma0 * d.n_th);
    g.r1 = g.rate1 * r;
    g.r2 = g.rate2 * r.adjoint();
    return g;
}

Matrix2 rhs(const LindbladGenerator& gen, const Matrix2& rho) {
    Matrix2 out;
    for (const Matrix2* op : {&gen.r1, &gen.r2}) {
        const Matrix2 dag = op->adjoint();
        const Matrix2 number = dag * *op;
        out += 2.0 * (*op * rho * dag) - number * rho - rho * number;
    }
    return out;
}

double default_step(const BathSpec& bath) {
    const DerivedBath d = derive_bath(bath);
    return std::min(1e-3, 1.0 / (100.0 * bath.gamma0 * (d.two_n_plus_one() + d.a)));
}

IntegrationResult integrate(const LindbladGenerator& gen, const DensityMatrix& rho0, double t,
                            std::optional<double> dt) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("integration time must be finite and >= 0");
    }
    const double requested = dt.value_or(default_step(gen.bath));
    if (!(requested > 0.0) || !std::isfinite(requested)) {
        throw std::invalid_argument("integration step must be > 0");
    }

    IntegrationResult out;
    out.state = rho0.matrix();
    // the small slack keeps t/dt = 5000.0000000001 from adding a step
    out.steps = static_cast<std::size_t>(std::ceil(t / requested - 1e-9));
    out.step = out.steps > 0 ? t / static_cast<double>(out.steps) : 0.0;
    const double h = out.step;

    Matrix2& y = out.state;
    for (std::size_t i = 0; i < out.steps; ++i) {
        const Matrix2 k1 = rhs(gen, y);
        const Matrix2 k2 = rhs(gen, y + (0.5 * h) * k1);
        const Matrix2 k3 = rhs(gen, y + (0.5 * h) * k2);
        const Matrix2 k4 = rhs(gen, y + h * k3);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        y = 0.5 * (y + y.adjoint());
    }
    out.trace_drift = std::abs(y.trace() - 1.0);
    out.drift_exceeded = out.trace_drift > kTraceDriftLimit;
    return out;
}

}  // namespace sgad
