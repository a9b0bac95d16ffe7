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


#include <cmath>
#include <numbers>

#include "catch_amalgamated.hpp"
#include "sampling.hpp"
#include "sgad/bloch_dynamics.hpp"
#include "sgad/lindblad.hpp"

using namespace sgad;
using Catch::Matchers::WithinAbs;

namespace {

constexpr double kPi = std::numbers::pi;

BathSpec bath(double T, double r, double phi = 0.0) {
    BathSpec b;
    b.temperature = T;
    b.squeezing = r;
    b.phase = phi;
    return b;
}

// The component formulas written out with plain cosh/sinh; fine for
// moderate gamma0 t.
BlochVector textbook(const BlochVector& b0, const BathSpec& b, double t) {
    const DerivedBath d = derive_bath(b);
    const double g = b.gamma0;
    const double damp = std::exp(-g * d.two_n_plus_one() * t / 2.0);
    const double ch = std::cosh(g * d.a * t / 2.0) * damp;
    const double sh = std::sinh(g * d.a * t / 2.0) * damp;
    return {(ch + std::cos(b.phase) * sh) * b0.x - std::sin(b.phase) * sh * b0.y,
            (ch - std::cos(b.phase) * sh) * b0.y - std::sin(b.phase) * sh * b0.x,
            std::exp(-g * d.two_n_plus_one() * t) * b0.z -
                (1.0 - std::exp(-g * d.two_n_plus_one() * t)) / d.two_n_plus_one()};
}

double distance(const BlochVector& a, const BlochVector& b) {
    return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

}  // namespace

TEST_CASE("evolve_bloch at t = 0 is the identity", "[bloch]") {
    const BlochVector b0{0.3, -0.4, 0.5};
    for (const BathSpec& b : {bath(0, 0), bath(3, 1.5, 2.0), bath(5, 2, kPi)}) {
        CHECK(evolve_bloch({b0, b, 0.0, Picture::interaction}) == b0);
    }
}

TEST_CASE("evolve_bloch amplitude damping example", "[bloch]") {
    const BlochVector b = evolve_bloch({{0, 0, 1}, bath(0, 0), 10.0, Picture::interaction});
    CHECK_THAT(b.z, WithinAbs(0.21306131942526685, 1e-15));
    CHECK(b.x == 0.0);
    CHECK(b.y == 0.0);
}

TEST_CASE("evolve_bloch matches the unfactored formulas", "[bloch]") {
    testing::Sampler s(5);
    for (int i = 0; i < 200; ++i) {
        const BathSpec b = s.bath();
        const double t = s.uniform(0.0, 30.0);
        const BlochVector b0 = s.ball_bloch();
        const BlochVector got = evolve_bloch({b0, b, t, Picture::interaction});
        CHECK(distance(got, textbook(b0, b, t)) <= 1e-12);
        CHECK(got.norm() <= 1.0 + 1e-10);
    }
}

TEST_CASE("evolve_bloch long-time limit", "[bloch]") {
    const BlochVector b0{0.6, 0.0, -0.8};
    SECTION("unsqueezed: gamma0 (2N+1) t > 50") {
        for (double T : {0.0, 1.0, 5.0}) {
            const BathSpec b = bath(T, 0.0);
            const DerivedBath d = derive_bath(b);
            const double t = 51.0 / (b.gamma0 * d.two_n_plus_one());
            const BlochVector got = evolve_bloch({b0, b, t, Picture::interaction});
            CHECK(distance(got, {0, 0, -1.0 / d.two_n_plus_one()}) <= 1e-10);
        }
    }
    SECTION("squeezed: the slow rate gamma0 (2N+1-a) sets the time scale") {
        for (double r : {0.5, 1.0, 2.0}) {
            const BathSpec b = bath(1.0, r, 0.3);
            const DerivedBath d = derive_bath(b);
            const double t = 51.0 / (b.gamma0 * (d.two_n_plus_one() - d.a));
            const BlochVector got = evolve_bloch({b0, b, t, Picture::interaction});
            CHECK(distance(got, {0, 0, -1.0 / d.two_n_plus_one()}) <= 1e-10);
        }
    }
    SECTION("no overflow at extreme times") {
        const BathSpec b = bath(5.0, 2.0, 1.0);
        const BlochVector got = evolve_bloch({b0, b, 1e7, Picture::interaction});
        CHECK(std::isfinite(got.x));
        CHECK(std::isfinite(got.y));
        CHECK(std::isfinite(got.z));
    }
}

TEST_CASE("evolve_bloch rejects bad queries", "[bloch]") {
    CHECK_THROWS_AS(evolve_bloch({{0, 0, 1}, bath(0, 0), -1.0, Picture::interaction}),
                    std::invalid_argument);
    CHECK_THROWS_AS(evolve_bloch({{0, 0, 1}, bath(0, 0), 1.0, Picture::schroedinger}),
                    std::invalid_argument);
    CHECK_THROWS_AS(evolve_density(pure_state(0, 0), bath(0, 0), -0.5), std::invalid_argument);
}

TEST_CASE("x and y decouple without squeezing", "[bloch]") {
    const BathSpec b = bath(2.0, 0.0, 1.3);
    const BlochVector only_x = evolve_bloch({{1, 0, 0}, b, 7.0, Picture::interaction});
    const BlochVector only_y = evolve_bloch({{0, 1, 0}, b, 7.0, Picture::interaction});
    CHECK(only_x.y == 0.0);
    CHECK(only_y.x == 0.0);
}

TEST_CASE("z relaxes monotonically toward the fixed point", "[bloch]") {
    const BathSpec b = bath(1.0, 1.0, 0.5);
    const double z_inf = -1.0 / derive_bath(b).two_n_plus_one();
    double prev = INFINITY;
    for (double t = 0.0; t <= 200.0; t += 2.5) {
        const double gap = std::abs(evolve_bloch({{0.2, 0.1, 0.9}, b, t, Picture::interaction}).z - z_inf);
        CHECK(gap <= prev);
        prev = gap;
    }
}

TEST_CASE("evolve_density", "[bloch]") {
    const DensityMatrix rho0 = pure_state(1.0, 2.0);
    const BathSpec b = bath(1.0, 1.0, kPi / 3.0);

    SECTION("t = 0 returns rho0") {
        CHECK(evolve_density(rho0, b, 0.0).matrix() == rho0.matrix());
        CHECK(evolve_density(rho0, b, 0.0, Picture::schroedinger).matrix() == rho0.matrix());
    }
    SECTION("agrees with evolve_bloch") {
        for (double t : {0.5, 5.0, 50.0}) {
            const BlochVector expected = evolve_bloch({density_to_bloch(rho0), b, t, Picture::interaction});
            CHECK(distance(density_to_bloch(evolve_density(rho0, b, t)), expected) <= 1e-15);
        }
    }
    SECTION("pictures differ by a phase only") {
        for (double t : {0.3, 3.0, 30.0}) {
            const DensityMatrix in = evolve_density(rho0, b, t, Picture::interaction);
            const DensityMatrix sc = evolve_density(rho0, b, t, Picture::schroedinger);
            const auto [i0, i1] = eigenvalues_hermitian2(in.matrix());
            const auto [s0, s1] = eigenvalues_hermitian2(sc.matrix());
            CHECK_THAT(i0, WithinAbs(s0, 1e-14));
            CHECK_THAT(i1, WithinAbs(s1, 1e-14));
            CHECK(std::abs(sc(0, 1) - in(0, 1) * std::polar(1.0, -b.omega * t)) < 1e-15);
        }
    }
    SECTION("outputs are valid states") {
        testing::Sampler s(9);
        for (int i = 0; i < 300; ++i) {
            const BathSpec rb = s.bath();
            const DensityReport rep =
                validate_density(evolve_density(s.pure(), rb, s.uniform(0.0, 200.0)).matrix());
            CHECK(rep.hermiticity_defect <= kHermiticityTol);
            CHECK(rep.trace_defect <= kTraceTol);
            CHECK(rep.min_eigenvalue >= -1e-10);
        }
    }
}

TEST_CASE("evolve_density against the RK4 oracle", "[bloch][oracle]") {
    const DensityMatrix mixed = bloch_to_density({0, 0, 0});
    const BathSpec b = bath(1.0, 1.0, 0.0);
    const Matrix2 rk = integrate(build_generator(b), mixed, 5.0).state;
    CHECK(max_abs_diff(rk, evolve_density(mixed, b, 5.0).matrix()) <= 1e-6);

    // continued integration t1 -> t1 + t2
    const DensityMatrix rho0 = pure_state(2.0, 0.4);
    const BathSpec c = bath(3.0, 0.5, kPi / 4.0);
    const LindbladGenerator gen = build_generator(c);
    const Matrix2 half = integrate(gen, rho0, 2.0).state;
    const Matrix2 full = integrate(gen, DensityMatrix::unchecked(half), 3.0).state;
    CHECK(max_abs_diff(full, evolve_density(rho0, c, 5.0).matrix()) <= 1e-6);
}

TEST_CASE("asymptotic_state", "[bloch]") {
    CHECK(max_abs_diff(asymptotic_state(bath(0, 0)).matrix(), Matrix2::diag(0.0, 1.0)) == 0.0);

    // N_th = 1 when omega / T = ln 2
    const BathSpec one = bath(1.0 / std::log(2.0), 0.0);
    CHECK_THAT(derive_bath(one).n_eff, WithinAbs(1.0, 1e-14));
    CHECK(max_abs_diff(asymptotic_state(one).matrix(), Matrix2::diag(1.0 / 3.0, 2.0 / 3.0)) <
          1e-14);

    testing::Sampler s(21);
    for (int i = 0; i < 100; ++i) {
        const BathSpec b = s.bath();
        const DensityMatrix late = evolve_density(s.mixed(), b, 1e4 / b.gamma0);
        CHECK(max_abs_diff(late.matrix(), asymptotic_state(b).matrix()) <= 1e-8);
    }
}

TEST_CASE("decay stability diagnostic", "[bloch]") {
    DerivedBath d;
    d.n_eff = 1.0;
    d.a = 3.0;
    CHECK_THROWS_AS(check_decay_stability(d), std::domain_error);
    d.a = 2.5;
    CHECK_NOTHROW(check_decay_stability(d));
    for (double r : {0.0, 1.0, 3.0, 6.0}) {
        CHECK_NOTHROW(check_decay_stability(derive_bath(bath(4.0, r))));
    }
}

TEST_CASE("decay_factors", "[bloch]") {
    const DerivedBath d = derive_bath(bath(2.0, 1.0));
    const DecayFactors f = decay_factors(d, 0.05, 3.0);
    const double xa = 0.05 * d.a * 1.5, xn = 0.05 * d.two_n_plus_one() * 1.5;
    CHECK_THAT(f.cosh_term, WithinAbs(std::cosh(xa) * std::exp(-xn), 1e-15));
    CHECK_THAT(f.sinh_term, WithinAbs(std::sinh(xa) * std::exp(-xn), 1e-15));
    CHECK_THAT(f.population + f.relaxed, WithinAbs(1.0, 1e-15));
    // tiny t keeps relative accuracy
    const DecayFactors g = decay_factors(d, 0.05, 1e-12);
    CHECK_THAT(g.sinh_term / (0.05 * d.a * 0.5e-12), WithinAbs(1.0, 1e-9));
}
