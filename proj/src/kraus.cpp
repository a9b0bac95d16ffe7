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


#include "sgad/kraus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "sgad/bloch_dynamics.hpp"

namespace sgad {

namespace {

void require_time(double t) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("time must be finite and >= 0");
    }
}

void require_unit_interval(const char* name, double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        std::ostringstream msg;
        msg << name << " must lie in [0, 1] (got " << x << ")";
        throw std::invalid_argument(msg.str());
    }
}

double safe_sqrt(double x) { return std::sqrt(std::max(0.0, x)); }

bool in_range(double x) {
    return std::isfinite(x) && x >= -kParamRangeTol && x <= 1.0 + kParamRangeTol;
}

DerivedBath nondegenerate_bath(const BathSpec& bath) {
    const DerivedBath d = derive_bath(bath);
    if (d.n_eff == 0.0) {
        throw DegenerateChannel("N = 0 (T = 0 and r = 0): use the amplitude damping channel");
    }
    check_decay_stability(d);
    return d;
}

bool admissible(const SgadParams& p, const BathSpec& bath, double t) {
    for (double x : {p.p1, p.p2, p.alpha, p.mu, p.nu, p.one_minus_alpha, p.one_minus_mu,
                     p.one_minus_nu}) {
        if (!in_range(x)) return false;
    }
    if (!(p.p2 > 0.0)) return false;
    return sgad_residuals(p, bath, t).max_abs() <= kResidualTol;
}

}  // namespace

const char* to_string(SgadBranch b) { return b == SgadBranch::plus ? "plus" : "minus"; }

void SgadParams::validate() const {
    const std::pair<const char*, double> fields[] = {
        {"p1", p1},
        {"p2", p2},
        {"alpha", alpha},
        {"mu", mu},
        {"nu", nu},
        {"1-alpha", one_minus_alpha},
        {"1-mu", one_minus_mu},
        {"1-nu", one_minus_nu}};
    for (const auto& [name, value] : fields) {
        if (!in_range(value)) {
            std::ostringstream msg;
            msg << "SGAD parameter " << name << " out of range: " << value;
            throw std::invalid_argument(msg.str());
        }
    }
    if (!std::isfinite(theta)) throw std::invalid_argument("SGAD theta is not finite");
    const std::pair<const char*, double> sums[] = {{"p1 + p2", p1 + p2},
                                                   {"alpha + (1-alpha)", alpha + one_minus_alpha},
                                                   {"mu + (1-mu)", mu + one_minus_mu},
                                                   {"nu + (1-nu)", nu + one_minus_nu}};
    for (const auto& [name, value] : sums) {
        if (std::abs(value - 1.0) > kParamRangeTol) {
            std::ostringstream msg;
            msg << "SGAD parameters inconsistent: " << name << " = " << value;
            throw std::invalid_argument(msg.str());
        }
    }
}

double SgadResiduals::max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::isnan(v) ? INFINITY : std::abs(v));
    return m;
}

KrausSet ad_kraus(double lambda) {
    require_unit_interval("lambda", lambda);
    return {{Matrix2::diag(std::sqrt(1.0 - lambda), 1.0),
             Matrix2(0.0, 0.0, std::sqrt(lambda), 0.0)},
            "AD",
            std::nullopt};
}

KrausSet gad_kraus(double lambda, double p) {
    require_unit_interval("lambda", lambda);
    require_unit_interval("p", p);
    const double keep = std::sqrt(1.0 - lambda);
    const double jump = std::sqrt(lambda);
    const double sp = std::sqrt(p);
    const double sq = std::sqrt(1.0 - p);
    return {{sp * Matrix2::diag(keep, 1.0), sp * Matrix2(0.0, 0.0, jump, 0.0),
             sq * Matrix2::diag(1.0, keep), sq * Matrix2(0.0, jump, 0.0, 0.0)},
            "GAD",
            std::nullopt};
}

GadParams gad_params(const BathSpec& bath, double t) {
    if (bath.squeezing != 0.0) {
        throw std::invalid_argument("gad_params requires an unsqueezed bath (r = 0)");
    }
    require_time(t);
    const DerivedBath d = derive_bath(bath);
    const double rate = bath.gamma0 * (2.0 * d.n_th + 1.0);
    return {-std::expm1(-rate * t), (d.n_th + 1.0) / (2.0 * d.n_th + 1.0)};
}

SgadAuxiliary sgad_auxiliary(const BathSpec& bath, double t) {
    require_time(t);
    const DerivedBath d = nondegenerate_bath(bath);
    const DecayFactors f = decay_factors(d, bath.gamma0, t);
    const double n = d.n_eff;
    const double two_n1 = d.two_n_plus_one();
    SgadAuxiliary x;
    // (2N+1)/(2N) sinh^2(x_a) e^{-x_n} / sinh(x_n) = (2N+1) S^2 / (N (1 - E))
    x.A = f.relaxed > 0.0 ? two_n1 * f.sinh_term * f.sinh_term / (n * f.relaxed) : 0.0;
    x.B = n / two_n1 * f.relaxed;
    x.C = x.A + x.B + f.population;
    x.D = f.cosh_term * f.cosh_term;
    return x;
}

std::array<double, 2> sgad_p2_roots_expanded(const BathSpec& bath, double t) {
    const auto [A, B, C, D] = sgad_auxiliary(bath, t);
    const double base = A * A * B + C * C + A * (B * B - C - B * (1.0 + C) - D) -
                        (1.0 + B) * D - C * (B + D - 1.0);
    const double den = (A + B - C - 1.0) * (A + B - C - 1.0) - 4.0 * D;
    const double disc = D * (B - A * B + (A - 1.0) * C + D) * (A - A * B + (B - 1.0) * C + D);
    const double root = 2.0 * safe_sqrt(disc);
    const double r1 = (base + root) / den;
    const double r2 = (base - root) / den;
    return {std::max(r1, r2), std::min(r1, r2)};
}

SgadParams sgad_candidate(const BathSpec& bath, double t, SgadBranch branch) {
    require_time(t);
    const DerivedBath d = nondegenerate_bath(bath);
    const double n = d.n_eff;
    const double two_n1 = d.two_n_plus_one();

    SgadParams p;
    p.theta = bath.phase;
    p.branch = branch;
    if (bath.gamma0 * two_n1 * t < kSgadIdentityThreshold) {
        // Identity channel. p2 still needs a value; take the one just above
        // the threshold so it connects continuously to the sweep.
        const SgadParams edge =
            sgad_candidate(bath, 2.0 * kSgadIdentityThreshold / (bath.gamma0 * two_n1), branch);
        p.p1 = edge.p1;
        p.p2 = edge.p2;
        return p;
    }

    const DecayFactors f = decay_factors(d, bath.gamma0, t);
    const double S = f.sinh_term;
    const double e1 = f.relaxed;
    const double A = two_n1 * S * S / (n * e1);  // p2 mu
    const double B = n / two_n1 * e1;            // p2 nu

    // 1 - e^{-2(x_n - x_a)} and 1 - e^{-2(x_n + x_a)}
    const double slow_decay = -std::expm1(2.0 * (f.x_a - f.x_n));
    const double fast_decay = -std::expm1(-2.0 * (f.x_a + f.x_n));
    // Factored numerator shared by both roots; non-negative for physical baths.
    const double g = 4.0 * n * (n + 1.0) * slow_decay * fast_decay - 4.0 * S * S;

    if (branch == SgadBranch::plus) {
        p.p1 = g / (4.0 * n * two_n1 * e1 * fast_decay);
        p.alpha = fast_decay;
        p.one_minus_alpha = std::exp(-2.0 * (f.x_a + f.x_n));
    } else {
        p.p1 = g / (4.0 * n * two_n1 * e1 * slow_decay);
        p.alpha = slow_decay;
        p.one_minus_alpha = std::exp(2.0 * (f.x_a - f.x_n));
    }
    p.p2 = 1.0 - p.p1;
    p.mu = A / p.p2;
    p.nu = B / p.p2;

    // p2 (1-mu) = P and p2 (1-nu) = R obey P - R = B - A and
    // sqrt(P R) = K - p1 sqrt(1-alpha) =: Y. Solve for R without
    // subtracting nearly equal numbers.
    const double y = f.cosh_term - p.p1 * std::sqrt(p.one_minus_alpha);
    const double diff = B - A;
    const double h = std::hypot(diff, 2.0 * y);
    const double r = diff > 0.0 ? 2.0 * y * y / (diff + h) : 0.5 * (h - diff);
    p.one_minus_nu = r / p.p2;
    p.one_minus_mu = (r + diff) / p.p2;
    return p;
}

SgadParams sgad_params(const BathSpec& bath, double t) {
    require_time(t);
    const SgadParams plus = sgad_candidate(bath, t, SgadBranch::plus);
    if (admissible(plus, bath, t)) return plus;
    const SgadParams minus = sgad_candidate(bath, t, SgadBranch::minus);
    if (admissible(minus, bath, t)) return minus;
    std::ostringstream msg;
    msg << "no admissible SGAD root at T=" << bath.temperature << " r=" << bath.squeezing
        << " Phi=" << bath.phase << " t=" << t << " (plus: p2=" << plus.p2
        << ", residual=" << sgad_residuals(plus, bath, t).max_abs() << "; minus: p2=" << minus.p2
        << ", residual=" << sgad_residuals(minus, bath, t).max_abs() << ")";
    throw CertificationError(msg.str());
}

std::vector<SgadParams> sgad_sweep(const BathSpec& bath, std::span<const double> times) {
    std::vector<SgadParams> out;
    out.reserve(times.size());
    for (double t : times) {
        SgadParams p = sgad_params(bath, t);
        if (!out.empty() && out.back().branch != p.branch) {
            std::ostringstream msg;
            msg << "SGAD root changed from " << to_string(out.back().branch) << " to "
                << to_string(p.branch) << " at t=" << t;
            throw CertificationError(msg.str());
        }
        out.push_back(p);
    }
    return out;
}

SgadResiduals sgad_residuals(const SgadParams& p, const BathSpec& bath, double t) {
    const DerivedBath d = derive_bath(bath);
    const DecayFactors f = decay_factors(d, bath.gamma0, t);
    const double S = f.sinh_term;
    const double cross = p.p2 * safe_sqrt(p.mu * p.nu);
    SgadResiduals r;
    r.values[0] = p.p1 * safe_sqrt(p.one_minus_alpha) +
                  p.p2 * safe_sqrt(p.one_minus_mu * p.one_minus_nu) - f.cosh_term;
    r.values[1] = cross * std::cos(p.theta) - std::cos(bath.phase) * S;
    r.values[2] = cross * std::sin(p.theta) - std::sin(bath.phase) * S;
    r.values[3] = p.p1 * p.alpha + p.p2 * (p.mu - p.nu) - f.relaxed / d.two_n_plus_one();
    r.values[4] = 1.0 - p.p1 * p.alpha - p.p2 * (p.mu + p.nu) - f.population;
    return r;
}

KrausSet sgad_kraus(const SgadParams& q) {
    q.validate();
    const double s1 = safe_sqrt(q.p1);
    const double s2 = safe_sqrt(q.p2);
    return {{s1 * Matrix2::diag(safe_sqrt(q.one_minus_alpha), 1.0),
             s1 * Matrix2(0.0, 0.0, safe_sqrt(q.alpha), 0.0),
             s2 * Matrix2::diag(safe_sqrt(q.one_minus_mu), safe_sqrt(q.one_minus_nu)),
             s2 * Matrix2(0.0, safe_sqrt(q.nu), std::polar(safe_sqrt(q.mu), -q.theta), 0.0)},
            "SGAD",
            std::nullopt};
}

DensityMatrix apply_channel(const KrausSet& k, const DensityMatrix& rho) {
    Matrix2 out;
    for (const Matrix2& e : k.operators) out += e * rho.matrix() * e.adjoint();
    return DensityMatrix::unchecked(out);
}

double completeness_defect(const KrausSet& k) {
    Matrix2 sum;
    for (const Matrix2& e : k.operators) sum += e.adjoint() * e;
    return (sum - Matrix2::identity()).frobenius_norm();
}

ChoiMatrix choi_matrix(const KrausSet& k) {
    ChoiMatrix c;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            Matrix2 unit;
            unit(a, b) = 1.0;
            Matrix2 image;
            for (const Matrix2& e : k.operators) image += e * unit * e.adjoint();
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) c(2 * i + a, 2 * j + b) = image(i, j);
            }
        }
    }
    return c;
}

ChoiSpectrum choi_spectrum(const ChoiMatrix& c) {
    // H = X + iY is Hermitian iff [[X, -Y], [Y, X]] is real symmetric; the
    // real matrix has the same eigenvalues, each twice.
    constexpr int n = 8;
    double m[n][n];
    double v[n][n] = {};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const Complex h = 0.5 * (c(i, j) + std::conj(c(j, i)));
            m[i][j] = m[i + 4][j + 4] = h.real();
            m[i + 4][j] = h.imag();
            m[i][j + 4] = -h.imag();
        }
    }
    for (int i = 0; i < n; ++i) v[i][i] = 1.0;

    double scale = 0.0;
    for (auto& row : m)
        for (double x : row) scale = std::max(scale, std::abs(x));

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(m[p][q]));
        if (off <= 1e-300 || off <= 1e-17 * scale) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (m[p][q] == 0.0) continue;
                const double tau = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
                const double cs = 1.0 / std::hypot(1.0, t);
                const double sn = t * cs;
                for (int k = 0; k < n; ++k) {
                    const double mkp = m[k][p];
                    const double mkq = m[k][q];
                    m[k][p] = cs * mkp - sn * mkq;
                    m[k][q] = sn * mkp + cs * mkq;
                }
                for (int k = 0; k < n; ++k) {
                    const double mpk = m[p][k];
                    const double mqk = m[q][k];
                    m[p][k] = cs * mpk - sn * mqk;
                    m[q][k] = sn * mpk + cs * mqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v[k][p];
                    const double vkq = v[k][q];
                    v[k][p] = cs * vkp - sn * vkq;
                    v[k][q] = sn * vkp + cs * vkq;
                }
            }
        }
    }

    ChoiSpectrum out;
    std::array<double, n> lambda{};
    for (int k = 0; k < n; ++k) {
        lambda[k] = m[k][k];
        // eigenvector (u; w) of the real form is u + i w for H
        std::array<Complex, 4> vec;
        double norm = 0.0;
        for (int i = 0; i < 4; ++i) {
            vec[i] = Complex(v[i][k], v[i + 4][k]);
            norm += std::norm(vec[i]);
        }
        norm = std::sqrt(norm);
        double res = 0.0;
        for (int i = 0; i < 4; ++i) {
            Complex cv = -lambda[k] * vec[i];
            for (int j = 0; j < 4; ++j) cv += 0.5 * (c(i, j) + std::conj(c(j, i))) * vec[j];
            res += std::norm(cv);
        }
        out.max_residual = std::max(out.max_residual, std::sqrt(res) / norm);
    }
    if (!(out.max_residual <= kChoiResidualTol)) {
        std::ostringstream msg;
        msg << "Choi eigen-decomposition residual " << out.max_residual;
        throw CertificationError(msg.str());
    }
    std::sort(lambda.begin(), lambda.end());
    for (int k = 0; k < 4; ++k) out.eigenvalues[k] = lambda[2 * k];
    return out;
}

double cp_defect(const ChoiMatrix& c) {
    return std::max(0.0, -choi_spectrum(c).eigenvalues[0]);
}

ChannelSynthesis synthesize_channel(const BathSpec& bath, double t) {
    require_time(t);
    const DerivedBath d = derive_bath(bath);
    ChannelSynthesis out;
    if (d.n_eff == 0.0) {
        out.kraus = ad_kraus(-std::expm1(-bath.gamma0 * t));
        out.notice = "degenerate bath (N = 0): amplitude damping channel";
    } else {
        out.params = sgad_params(bath, t);
        out.kraus = sgad_kraus(*out.params);
    }
    out.kraus.source = ChannelSource{bath, t};
    return out;
}

}  // namespace sgad
