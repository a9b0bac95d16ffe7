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

#include "sgad/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sgad {

Matrix2 Matrix2::adjoint() const {
    return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
}

double Matrix2::frobenius_norm() const {
    double s = 0.0;
    for (const auto& c : m_) s += std::norm(c);
    return std::sqrt(s);
}

double Matrix2::max_abs() const {
    double best = 0.0;
    for (const auto& c : m_) best = std::max(best, std::abs(c));
    return best;
}

bool Matrix2::is_finite() const {
    return std::all_of(m_.begin(), m_.end(), [](const Complex& c) {
        return std::isfinite(c.real()) && std::isfinite(c.imag());
    });
}

Matrix2& Matrix2::operator+=(const Matrix2& o) {
    for (std::size_t i = 0; i < 4; ++i) m_[i] += o.m_[i];
    return *this;
}

Matrix2& Matrix2::operator-=(const Matrix2& o) {
    for (std::size_t i = 0; i < 4; ++i) m_[i] -= o.m_[i];
    return *this;
}

Matrix2& Matrix2::operator*=(Complex s) {
    for (auto& c : m_) c *= s;
    return *this;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
            a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

double max_abs_diff(const Matrix2& a, const Matrix2& b) { return (a - b).max_abs(); }

namespace pauli {
Matrix2 x() { return {0.0, 1.0, 1.0, 0.0}; }
Matrix2 y() { return {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}; }
Matrix2 z() { return {1.0, 0.0, 0.0, -1.0}; }
Matrix2 raising() { return {0.0, 1.0, 0.0, 0.0}; }
Matrix2 lowering() { return {0.0, 0.0, 1.0, 0.0}; }
}  // namespace pauli

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

DensityMatrix DensityMatrix::from_matrix(const Matrix2& m) {
    const DensityReport report = validate_density(m);
    if (!report.passed()) {
        std::ostringstream msg;
        msg << "not a density matrix: hermiticity defect " << report.hermiticity_defect
            << ", trace defect " << report.trace_defect << ", min eigenvalue "
            << report.min_eigenvalue;
        throw std::domain_error(msg.str());
    }
    return DensityMatrix(m);
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

DensityMatrix pure_state(double theta0, double phi0) {
    const double c = std::cos(0.5 * theta0);
    const double s = std::sin(0.5 * theta0);
    // amplitudes (c, e^{i phi0} s) in the (|1>, |0>) basis
    const Complex upper = c;
    const Complex lower = std::polar(s, phi0);
    return DensityMatrix::unchecked({upper * std::conj(upper), upper * std::conj(lower),
                                     lower * std::conj(upper), lower * std::conj(lower)});
}

DensityMatrix bloch_to_density(const BlochVector& b) {
    if (!(b.norm() <= 1.0 + kBlochNormTol)) {
        std::ostringstream msg;
        msg << "Bloch vector outside the unit ball: |b| = " << b.norm();
        throw std::domain_error(msg.str());
    }
    const Complex sigma_minus_expectation(0.5 * b.x, -0.5 * b.y);
    return DensityMatrix::unchecked({0.5 * (1.0 + b.z), sigma_minus_expectation,
                                     std::conj(sigma_minus_expectation), 0.5 * (1.0 - b.z)});
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
    const Matrix2& m = rho.matrix();
    // Tr(rho sigma_x) = 2 Re rho01, Tr(rho sigma_y) = -2 Im rho01
    const Complex off = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    return {2.0 * off.real(), -2.0 * off.imag(), (m(0, 0) - m(1, 1)).real()};
}

std::pair<double, double> eigenvalues_hermitian2(const Matrix2& m) {
    const double defect = (m - m.adjoint()).frobenius_norm();
    if (!(defect <= 1e-10)) {
        std::ostringstream msg;
        msg << "eigenvalues_hermitian2: matrix is not Hermitian (defect " << defect << ")";
        throw std::invalid_argument(msg.str());
    }
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const Complex off = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    const double tr = a + d;
    // Tr^2 - 4 det written as (a - d)^2 + 4|b|^2, which is never negative
    const double disc = std::max(0.0, (a - d) * (a - d) + 4.0 * std::norm(off));
    const double root = std::sqrt(disc);
    return {0.5 * (tr + root), 0.5 * (tr - root)};
}

double binary_entropy(double p) {
    p = std::clamp(p, 0.0, 1.0);
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const auto [l0, l1] = eigenvalues_hermitian2(rho.matrix());
    double s = 0.0;
    for (double l : {l0, l1}) {
        l = std::clamp(l, 0.0, 1.0);
        if (l > 0.0) s -= l * std::log2(l);
    }
    return std::clamp(s, 0.0, 1.0);
}

DensityReport validate_density(const Matrix2& m) {
    DensityReport r;
    r.finite = m.is_finite();
    if (!r.finite) {
        r.hermiticity_defect = r.trace_defect = std::numeric_limits<double>::infinity();
        r.min_eigenvalue = -std::numeric_limits<double>::infinity();
        return r;
    }
    r.hermiticity_defect = (m - m.adjoint()).frobenius_norm();
    r.trace_defect = std::abs(m.trace() - 1.0);
    const Matrix2 hermitian_part = 0.5 * (m + m.adjoint());
    r.min_eigenvalue = eigenvalues_hermitian2(hermitian_part).second;
    return r;
}

}  // namespace sgad
