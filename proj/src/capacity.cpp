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


#include "sgad/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace sgad {

namespace {

constexpr double kTieTol = 1e-12;
constexpr double kPi = std::numbers::pi;

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

double binary_chi(const KrausSet& k, double theta0, double phi0, double f) {
    return holevo_chi(binary_orthogonal_ensemble(theta0, phi0, f), k);
}

struct Point {
    double theta;
    double phi;
    double chi;
};

// Line search on one coordinate over [center - half, center + half]; theta
// is clamped to [0, pi], phi is taken as periodic.
Point refine_line(const KrausSet& k, Point best, double half, std::size_t samples, double f,
                  bool along_theta) {
    const double center = along_theta ? best.theta : best.phi;
    for (double x : linspace(center - half, center + half, samples)) {
        Point p = best;
        if (along_theta) {
            p.theta = std::clamp(x, 0.0, kPi);
        } else {
            p.phi = x;
        }
        p.chi = binary_chi(k, p.theta, p.phi, f);
        if (p.chi > best.chi + kTieTol) best = p;
    }
    return best;
}

CapacityResult capacity_at(const KrausSet& k, const CapacityConfig& cfg, double f) {
    CapacityResult out;
    out.f = f;
    ChiSurface s = chi_surface(k, cfg.grid, f, cfg.threads);

    std::size_t best = 0;
    for (std::size_t i = 1; i < s.chi.size(); ++i) {
        if (s.chi[i] > s.chi[best] + kTieTol) best = i;
    }
    Point p{s.theta[best / s.phi.size()], s.phi[best % s.phi.size()], s.chi[best]};

    double half_theta = s.theta[1] - s.theta[0];
    double half_phi = s.phi[1] - s.phi[0];
    for (std::size_t round = 0; round < cfg.refine_rounds; ++round) {
        p = refine_line(k, p, half_theta, cfg.refine_samples, f, true);
        p = refine_line(k, p, half_phi, cfg.refine_samples, f, false);
        half_theta /= cfg.shrink;
        half_phi /= cfg.shrink;
    }
    p.phi = std::fmod(p.phi, 2.0 * kPi);
    if (p.phi < 0.0) p.phi += 2.0 * kPi;

    out.c = p.chi;
    out.theta0 = p.theta;
    out.phi0 = p.phi;
    if (cfg.keep_surface) out.surface = std::move(s);
    return out;
}

}  // namespace

void Ensemble::validate() const {
    double total = 0.0;
    for (const auto& m : members) {
        if (!(m.probability >= 0.0)) {
            throw std::invalid_argument("ensemble weights must be >= 0");
        }
        total += m.probability;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        std::ostringstream msg;
        msg << "ensemble weights sum to " << total;
        throw std::invalid_argument(msg.str());
    }
}

Ensemble binary_orthogonal_ensemble(double theta0, double phi0, double f) {
    if (!(f >= 0.0 && f <= 1.0)) {
        throw std::invalid_argument("ensemble weight f must lie in [0, 1]");
    }
    return {{{f, pure_state(theta0, phi0)}, {1.0 - f, pure_state(theta0 + kPi, phi0)}}};
}

double holevo_chi(const Ensemble& e, const KrausSet& k) {
    Matrix2 average;
    double conditional = 0.0;
    for (const auto& m : e.members) {
        const DensityMatrix out = apply_channel(k, m.state);
        average += m.probability * out.matrix();
        conditional += m.probability * von_neumann_entropy(out);
    }
    return von_neumann_entropy(DensityMatrix::unchecked(average)) - conditional;
}

ChiSurface chi_surface(const KrausSet& k, const SurfaceGrid& grid, double f,
                       std::size_t threads) {
    if (grid.n_theta < 2 || grid.n_phi < 2) {
        throw std::invalid_argument("chi surface grid must be at least 2x2");
    }
    ChiSurface s;
    s.theta = linspace(0.0, kPi, grid.n_theta);
    s.phi = linspace(0.0, 2.0 * kPi, grid.n_phi);
    s.chi.assign(grid.n_theta * grid.n_phi, 0.0);

    auto fill_rows = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < grid.n_theta; i += stride) {
            for (std::size_t j = 0; j < grid.n_phi; ++j) {
                s.chi[i * grid.n_phi + j] = binary_chi(k, s.theta[i], s.phi[j], f);
            }
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, grid.n_theta);
    if (workers == 1) {
        fill_rows(0, 1);
        return s;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(fill_rows, w, workers);
    pool.clear();  // joins
    return s;
}

void CapacityConfig::validate() const {
    if (grid.n_theta < 2 || grid.n_phi < 2) {
        throw std::invalid_argument("capacity grid must be at least 2x2");
    }
    if (!(shrink > 1.0)) throw std::invalid_argument("refinement shrink factor must be > 1");
    if (refine_samples < 3) throw std::invalid_argument("refinement needs >= 3 samples");
    if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("f must lie in [0, 1]");
    if (sweep_f && f_points < 2) throw std::invalid_argument("f sweep needs >= 2 points");
}

CapacityResult classical_capacity(const KrausSet& k, const CapacityConfig& cfg) {
    cfg.validate();
    if (!cfg.sweep_f) return capacity_at(k, cfg, cfg.f);
    std::optional<CapacityResult> best;
    for (double f : linspace(0.0, 1.0, cfg.f_points)) {
        CapacityResult r = capacity_at(k, cfg, f);
        if (!best || r.c > best->c + kTieTol) best = std::move(r);
    }
    return *best;
}

}  // namespace sgad
