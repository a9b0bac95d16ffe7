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
#include "sgad/capacity.hpp"

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

KrausSet identity_channel() { return ad_kraus(0.0); }

CapacityConfig small_config() {
    CapacityConfig cfg;
    cfg.grid = {31, 61};
    return cfg;
}

}  // namespace

TEST_CASE("binary_orthogonal_ensemble", "[capacity]") {
    const Ensemble poles = binary_orthogonal_ensemble(0.0, 0.0, 0.5);
    REQUIRE(poles.members.size() == 2);
    CHECK(poles.members[0].probability == 0.5);
    CHECK(max_abs_diff(poles.members[0].state.matrix(), Matrix2::diag(1.0, 0.0)) <= 1e-16);
    CHECK(max_abs_diff(poles.members[1].state.matrix(), Matrix2::diag(0.0, 1.0)) <= 1e-16);

    const Ensemble equator = binary_orthogonal_ensemble(kPi / 2, 0.0, 0.5);
    const Matrix2 plus{0.5, 0.5, 0.5, 0.5};
    const Matrix2 minus{0.5, -0.5, -0.5, 0.5};
    CHECK(max_abs_diff(equator.members[0].state.matrix(), plus) <= 1e-15);
    CHECK(max_abs_diff(equator.members[1].state.matrix(), minus) <= 1e-15);

    for (double theta : {0.0, 0.4, 1.9, kPi}) {
        for (double phi : {0.0, 1.0, 5.0}) {
            const Ensemble e = binary_orthogonal_ensemble(theta, phi, 0.3);
            const Complex overlap = (e.members[0].state.matrix() * e.members[1].state.matrix()).trace();
            CHECK(std::abs(overlap) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(binary_orthogonal_ensemble(0.0, 0.0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(binary_orthogonal_ensemble(0.0, 0.0, -0.1), std::invalid_argument);
}

TEST_CASE("holevo_chi", "[capacity]") {
    CHECK_THAT(holevo_chi(binary_orthogonal_ensemble(1.0, 2.0, 0.5), identity_channel()),
               WithinAbs(1.0, 1e-12));

    const KrausSet k = synthesize_channel(bath(2, 1), 3.0).kraus;
    Ensemble single{{{1.0, pure_state(0.7, 0.1)}}};
    CHECK(holevo_chi(single, k) == 0.0);

    SECTION("relabeling") {
        const Ensemble e = binary_orthogonal_ensemble(0.9, 1.3, 0.3);
        Ensemble swapped{{e.members[1], e.members[0]}};
        CHECK_THAT(holevo_chi(swapped, k), WithinAbs(holevo_chi(e, k), 1e-15));
    }
    SECTION("bounds") {
        for (double t : {0.0, 1.0, 10.0, 100.0}) {
            const KrausSet c = synthesize_channel(bath(5, 2, 0.5), t).kraus;
            for (double theta = 0.0; theta <= kPi; theta += 0.3) {
                const double chi = holevo_chi(binary_orthogonal_ensemble(theta, 0.4, 0.5), c);
                CHECK(chi >= -1e-10);
                CHECK(chi <= 1.0 + 1e-10);
            }
        }
    }
    SECTION("constant channel carries nothing") {
        const double chi = holevo_chi(binary_orthogonal_ensemble(0.3, 0.0, 0.5), ad_kraus(1.0));
        CHECK_THAT(chi, WithinAbs(0.0, 1e-15));
    }
    Ensemble bad{{{0.7, pure_state(0, 0)}, {0.7, pure_state(kPi, 0)}}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("chi_surface", "[capacity]") {
    SECTION("identity channel is flat") {
        const ChiSurface s = chi_surface(identity_channel(), {5, 9}, 0.5);
        REQUIRE(s.chi.size() == 45);
        for (double v : s.chi) CHECK_THAT(v, WithinAbs(1.0, 1e-12));
        CHECK(s.theta.front() == 0.0);
        CHECK(s.theta.back() == kPi);
        CHECK(s.phi.back() == 2.0 * kPi);
    }
    SECTION("no azimuthal dependence without squeezing") {
        const ChiSurface s = chi_surface(synthesize_channel(bath(3, 0), 5.0).kraus, {13, 25}, 0.5);
        for (std::size_t i = 0; i < s.theta.size(); ++i) {
            for (std::size_t j = 0; j < s.phi.size(); ++j) {
                CHECK_THAT(s.at(i, j), WithinAbs(s.at(i, 0), 1e-10));
            }
        }
    }
    SECTION("thread count does not change the values") {
        const KrausSet k = synthesize_channel(bath(5, 1), 5.0).kraus;
        const ChiSurface one = chi_surface(k, {21, 41}, 0.5, 1);
        const ChiSurface four = chi_surface(k, {21, 41}, 0.5, 4);
        CHECK(one.chi == four.chi);
    }
}

TEST_CASE("classical_capacity", "[capacity]") {
    SECTION("identity channel") {
        const CapacityResult r = classical_capacity(identity_channel(), small_config());
        CHECK_THAT(r.c, WithinAbs(1.0, 1e-12));
        CHECK(r.theta0 == 0.0);
        CHECK(r.phi0 == 0.0);
    }
    SECTION("fully damped channel") {
        CHECK_THAT(classical_capacity(ad_kraus(1.0), small_config()).c, WithinAbs(0.0, 1e-15));
    }
    SECTION("squeezed bath optimum sits on the equator") {
        const CapacityResult r = classical_capacity(synthesize_channel(bath(5, 1), 5.0).kraus);
        CHECK_THAT(r.theta0, WithinAbs(kPi / 2, 0.01));
        const double to_axis = std::min({r.phi0, std::abs(r.phi0 - kPi), 2.0 * kPi - r.phi0});
        CHECK(to_axis <= 0.01);
        CHECK_THAT(r.c, WithinAbs(0.604947, 1e-6));
    }
    SECTION("reference capacities") {
        struct Row {
            double T, r, t, c;
        };
        const Row rows[] = {{5, 2, 1, 0.9766}, {5, 0, 1, 0.4977}, {0, 0, 1, 0.9062},
                            {5, 2, 8, 0.8697}, {5, 0, 8, 0.0131}, {0, 0, 8, 0.5979}};
        for (const Row& row : rows) {
            CAPTURE(row.T, row.r, row.t);
            const CapacityResult res =
                classical_capacity(synthesize_channel(bath(row.T, row.r), row.t).kraus, small_config());
            CHECK_THAT(res.c, WithinAbs(row.c, 5e-5));
        }
    }
    SECTION("f and 1 - f give the same capacity") {
        const KrausSet k = synthesize_channel(bath(2, 0.5, 0.7), 4.0).kraus;
        CapacityConfig lo = small_config();
        lo.f = 0.3;
        CapacityConfig hi = small_config();
        hi.f = 0.7;
        CHECK_THAT(classical_capacity(k, lo).c, WithinAbs(classical_capacity(k, hi).c, 1e-9));
    }
    SECTION("a final phase rotation leaves the capacity unchanged") {
        const BathSpec b = bath(5, 1);
        const double t = 5.0;
        const KrausSet k = synthesize_channel(b, t).kraus;
        KrausSet rotated = k;
        const Matrix2 u = Matrix2::diag(std::polar(1.0, -0.5 * b.omega * t), std::polar(1.0, 0.5 * b.omega * t));
        for (Matrix2& e : rotated.operators) e = u * e;
        CHECK_THAT(classical_capacity(rotated, small_config()).c,
                   WithinAbs(classical_capacity(k, small_config()).c, 1e-9));
    }
    SECTION("unsqueezed channels degrade over time") {
        for (double T : {0.0, 2.0}) {
            double prev = 1.0 + 1e-12;
            for (double t = 0.0; t <= 40.0; t += 4.0) {
                const double c = classical_capacity(synthesize_channel(bath(T, 0), t).kraus, small_config()).c;
                CHECK(c <= prev + 1e-12);
                prev = c;
            }
        }
    }
    SECTION("threads and f sweep") {
        const KrausSet k = synthesize_channel(bath(1, 1, 0.4), 3.0).kraus;
        CapacityConfig one = small_config();
        CapacityConfig many = small_config();
        many.threads = 3;
        const CapacityResult a = classical_capacity(k, one);
        const CapacityResult b = classical_capacity(k, many);
        CHECK(a.c == b.c);
        CHECK(a.theta0 == b.theta0);
        CHECK(a.phi0 == b.phi0);

        CapacityConfig sweep = small_config();
        sweep.sweep_f = true;
        sweep.f_points = 11;
        CHECK(classical_capacity(k, sweep).c >= a.c - 1e-12);
    }
    SECTION("configuration checks") {
        CapacityConfig cfg;
        cfg.grid = {1, 5};
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
        cfg = {};
        cfg.shrink = 1.0;
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
        cfg = {};
        cfg.f = 2.0;
        CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    }
}
