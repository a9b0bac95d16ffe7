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
 * @file kraus.hpp
 * Kraus representations of the amplitude damping (AD), generalized
 * amplitude damping (GAD) and squeezed generalized amplitude damping (SGAD)
 * channels, plus channel application and certification.
 *
 * The SGAD family is
 *
 *   E0 = sqrt(p1) [[sqrt(1-alpha), 0], [0, 1]]
 *   E1 = sqrt(p1) [[0, 0], [sqrt(alpha), 0]]
 *   E2 = sqrt(p2) [[sqrt(1-mu), 0], [0, sqrt(1-nu)]]
 *   E3 = sqrt(p2) [[0, sqrt(nu)], [sqrt(mu) e^{-i theta}, 0]]
 *
 * in the (|1>, |0>) basis. sgad_params solves for (p1, p2, alpha, mu, nu,
 * theta) such that the channel reproduces the squeezed-bath evolution at a
 * given time, then certifies the solution by substituting it back into the
 * five matching conditions.
 */

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgad/bath.hpp"
#include "sgad/qubit.hpp"

namespace sgad {

inline constexpr double kCompletenessTol = 1e-10;
inline constexpr double kParamRangeTol = 1e-10;
inline constexpr double kResidualTol = 1e-8;
inline constexpr double kCpTol = 1e-10;
inline constexpr double kChoiResidualTol = 1e-9;

/// Below this value of gamma0 (2N+1) t the SGAD parameters are those of the
/// identity channel.
inline constexpr double kSgadIdentityThreshold = 1e-12;

/// Thrown by sgad_params when N = 0; the channel is amplitude damping.
class DegenerateChannel : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Thrown when a computed channel fails its own certification.
class CertificationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ChannelSource {
    BathSpec bath;
    double t = 0.0;
};

struct KrausSet {
    std::vector<Matrix2> operators;
    std::string label;  ///< "AD", "GAD", "SGAD" or free-form
    std::optional<ChannelSource> source;
};

/// Which root of the quadratic for p2 produced a parameter set.
enum class SgadBranch { plus, minus };

const char* to_string(SgadBranch b);

struct SgadParams {
    double p1 = 1.0;
    double p2 = 0.0;
    double alpha = 0.0;
    double mu = 0.0;
    double nu = 0.0;
    double theta = 0.0;
    // 1 - alpha etc., carried separately because they can be far smaller
    // than the rounding error of 1 - alpha
    double one_minus_alpha = 1.0;
    double one_minus_mu = 1.0;
    double one_minus_nu = 1.0;
    SgadBranch branch = SgadBranch::plus;

    /// Throws std::invalid_argument when p1 + p2 != 1, a parameter leaves
    /// [-1e-10, 1 + 1e-10], a complement is inconsistent, or a field is not
    /// finite.
    void validate() const;
};

struct SgadResiduals {
    std::array<double, 5> values{};
    double max_abs() const;
};

// Fixed-family constructors.
KrausSet ad_kraus(double lambda);
KrausSet gad_kraus(double lambda, double p);

struct GadParams {
    double lambda = 0.0;
    double p = 1.0;
};

/// lambda = 1 - e^{-gamma0 (2N_th+1) t}, p = (N_th+1)/(2N_th+1).
/// Throws std::invalid_argument unless r = 0 and t >= 0.
GadParams gad_params(const BathSpec& bath, double t);

/// Auxiliary quantities of the quadratic whose roots give p2.
struct SgadAuxiliary {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double D = 0.0;
};

SgadAuxiliary sgad_auxiliary(const BathSpec& bath, double t);

/// Both roots of the p2 quadratic, evaluated term by term from A, B, C, D,
/// larger first. Loses accuracy near t = 0 and r = 0; sgad_params uses a
/// factored form instead. Throws DegenerateChannel when N = 0.
std::array<double, 2> sgad_p2_roots_expanded(const BathSpec& bath, double t);

/// Parameters of the requested root, without certification.
SgadParams sgad_candidate(const BathSpec& bath, double t, SgadBranch branch);

/// Certified parameters. The plus root is used whenever it is admissible
/// (in range with residuals <= 1e-8), otherwise the minus root.
/// Throws DegenerateChannel (N = 0), std::invalid_argument (t < 0) or
/// CertificationError (no admissible root).
SgadParams sgad_params(const BathSpec& bath, double t);

/// Certified parameters along a time grid. Throws CertificationError if the
/// selected root changes between consecutive points.
std::vector<SgadParams> sgad_sweep(const BathSpec& bath, std::span<const double> times);

/// The five matching conditions evaluated at (bath, t):
///   p1 sqrt(1-alpha) + p2 sqrt((1-mu)(1-nu)) - K
///   p2 sqrt(mu nu) cos(theta) - cos(Phi) S
///   p2 sqrt(mu nu) sin(theta) - sin(Phi) S
///   p1 alpha + p2 (mu - nu) - (1 - e^{-gamma0 (2N+1) t}) / (2N+1)
///   1 - p1 alpha - p2 (mu + nu) - e^{-gamma0 (2N+1) t}
SgadResiduals sgad_residuals(const SgadParams& p, const BathSpec& bath, double t);

/// Throws std::invalid_argument via SgadParams::validate.
KrausSet sgad_kraus(const SgadParams& params);

/// sum_j E_j rho E_j^dagger.
DensityMatrix apply_channel(const KrausSet& k, const DensityMatrix& rho);

/// Frobenius norm of sum_j E_j^dagger E_j - I.
double completeness_defect(const KrausSet& k);

/// Unnormalized Choi matrix sum_{ab} E(|a><b|) (x) |a><b|, trace 2 for a
/// trace-preserving channel. Row index is 2 i + a.
class ChoiMatrix {
  public:
    ChoiMatrix() = default;
    explicit ChoiMatrix(const std::array<Complex, 16>& e) : m_(e) {}
    Complex& operator()(int row, int col) { return m_[4 * row + col]; }
    const Complex& operator()(int row, int col) const { return m_[4 * row + col]; }
    const std::array<Complex, 16>& entries() const { return m_; }

  private:
    std::array<Complex, 16> m_{};
};

ChoiMatrix choi_matrix(const KrausSet& k);

struct ChoiSpectrum {
    std::array<double, 4> eigenvalues{};  ///< ascending
    double max_residual = 0.0;            ///< max ||C v - lambda v||
};

/// Eigenvalues of the Hermitian part via Jacobi rotations on the equivalent
/// 8x8 real symmetric matrix. Throws CertificationError if an eigenpair
/// residual exceeds 1e-9.
ChoiSpectrum choi_spectrum(const ChoiMatrix& c);

/// max(0, -min eigenvalue).
double cp_defect(const ChoiMatrix& c);

/// Channel for a bath at time t: AD when N = 0, SGAD otherwise.
struct ChannelSynthesis {
    KrausSet kraus;
    std::optional<SgadParams> params;  ///< empty for the AD dispatch
    std::string notice;
};

ChannelSynthesis synthesize_channel(const BathSpec& bath, double t);

}  // namespace sgad
