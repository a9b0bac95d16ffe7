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

/**
 * @file qubit.hpp
 * Exact 2x2 complex linear algebra and single-qubit state primitives.
 *
 * Basis ordering is (|1>, |0>) everywhere: row/column 0 is the upper
 * (excited) state, so sigma_z = diag(1, -1), sigma_+ = |1><0| sits at (0,1)
 * and sigma_- = |0><1| sits at (1,0).
 */

#include <array>
#include <complex>
#include <utility>

namespace sgad {

using Complex = std::complex<double>;

/// Tolerances of the density-matrix invariants.
inline constexpr double kHermiticityTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-12;
inline constexpr double kBlochNormTol = 1e-12;

/// Dense 2x2 complex matrix, row-major.
class Matrix2 {
  public:
    constexpr Matrix2() = default;
    constexpr Matrix2(Complex a00, Complex a01, Complex a10, Complex a11)
        : m_{a00, a01, a10, a11} {}

    static constexpr Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Matrix2 zero() { return {}; }
    static constexpr Matrix2 diag(Complex d0, Complex d1) {
        return {d0, 0.0, 0.0, d1};
    }

    constexpr Complex& operator()(int row, int col) { return m_[2 * row + col]; }
    constexpr const Complex& operator()(int row, int col) const {
        return m_[2 * row + col];
    }

    const std::array<Complex, 4>& entries() const { return m_; }

    Matrix2 adjoint() const;
    Complex trace() const { return m_[0] + m_[3]; }
    Complex determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
    double frobenius_norm() const;
    /// Largest entrywise modulus.
    double max_abs() const;
    bool is_finite() const;

    Matrix2& operator+=(const Matrix2& o);
    Matrix2& operator-=(const Matrix2& o);
    Matrix2& operator*=(Complex s);

    friend Matrix2 operator+(Matrix2 a, const Matrix2& b) { return a += b; }
    friend Matrix2 operator-(Matrix2 a, const Matrix2& b) { return a -= b; }
    friend Matrix2 operator*(Matrix2 a, Complex s) { return a *= s; }
    friend Matrix2 operator*(Complex s, Matrix2 a) { return a *= s; }
    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
    friend bool operator==(const Matrix2&, const Matrix2&) = default;

  private:
    std::array<Complex, 4> m_{};
};

/// Largest entrywise modulus of a - b.
double max_abs_diff(const Matrix2& a, const Matrix2& b);

namespace pauli {
Matrix2 x();
Matrix2 y();
Matrix2 z();
/// sigma_+ = |1><0| = (sigma_x + i sigma_y) / 2.
Matrix2 raising();
/// sigma_- = |0><1| = (sigma_x - i sigma_y) / 2.
Matrix2 lowering();
}  // namespace pauli

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
    friend bool operator==(const BlochVector&, const BlochVector&) = default;
};

/// A 2x2 Hermitian, unit-trace, positive semidefinite matrix.
///
/// `from_matrix` validates against the invariant tolerances and throws
/// std::domain_error on violation. `unchecked` wraps library outputs whose
/// invariants hold by construction; callers that need a certificate run
/// validate_density on the result.
class DensityMatrix {
  public:
    static DensityMatrix from_matrix(const Matrix2& m);
    static DensityMatrix unchecked(const Matrix2& m) { return DensityMatrix(m); }

    const Matrix2& matrix() const { return m_; }
    Complex operator()(int row, int col) const { return m_(row, col); }

    /// Tr(rho^2).
    double purity() const;

  private:
    explicit DensityMatrix(const Matrix2& m) : m_(m) {}
    Matrix2 m_;
};

/// |psi><psi| for |psi> = cos(theta0/2)|1> + e^{i phi0} sin(theta0/2)|0>.
DensityMatrix pure_state(double theta0, double phi0);

/// (I + b.sigma)/2. Throws std::domain_error when |b| > 1 + 1e-12.
DensityMatrix bloch_to_density(const BlochVector& b);

/// Components Tr(rho sigma_i).
BlochVector density_to_bloch(const DensityMatrix& rho);

/// Eigenvalues of a Hermitian 2x2 matrix, descending. Throws
/// std::invalid_argument when |m - m^dagger| exceeds 1e-10.
std::pair<double, double> eigenvalues_hermitian2(const Matrix2& m);

/// Binary entropy h(p) in bits, with 0 log 0 = 0.
double binary_entropy(double p);

/// Von Neumann entropy in bits. Eigenvalues are clamped to [0, 1].
double von_neumann_entropy(const DensityMatrix& rho);

struct DensityReport {
    double hermiticity_defect = 0.0;  ///< Frobenius norm of rho - rho^dagger
    double trace_defect = 0.0;        ///< |Tr rho - 1|
    double min_eigenvalue = 0.0;      ///< of the Hermitian part
    bool finite = true;

    bool passed() const {
        return finite && hermiticity_defect <= kHermiticityTol &&
               trace_defect <= kTraceTol && min_eigenvalue >= -kPsdTol;
    }
};

/// Diagnostic check of the density-matrix invariants; never throws.
DensityReport validate_density(const Matrix2& m);

}  // namespace sgad
