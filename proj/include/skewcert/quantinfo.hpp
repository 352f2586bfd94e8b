// Copyright 2026 The skewcert Authors

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewcert/matcore.hpp"

namespace skewcert {

inline constexpr double kPsdTol = 1e-10;

/// Positive semidefinite, unit-trace Hermitian matrix with its
/// eigendecomposition cached at construction.
///
/// Eigenvalues in [-kPsdTol, 0) are clamped to zero and the spectrum is
/// renormalized to unit trace; the stored matrix is then rebuilt from the
/// repaired spectrum. Anything more negative, or a trace more than 1e-8 away
/// from one, is rejected with InvalidInput.
class DensityMatrix {
  public:
    explicit DensityMatrix(const Matrix &m);

    [[nodiscard]] static DensityMatrix maximally_mixed(std::size_t dim);

    [[nodiscard]] const HermitianMatrix &hermitian() const noexcept {
        return matrix_;
    }
    [[nodiscard]] const Matrix &matrix() const noexcept {
        return matrix_.matrix();
    }
    [[nodiscard]] const EigenDecomposition &eigen() const noexcept {
        return eigen_;
    }
    [[nodiscard]] std::size_t dim() const noexcept { return matrix_.dim(); }

    /// Tr(ρ X)
    [[nodiscard]] Complex expectation(const Matrix &x) const;

  private:
    HermitianMatrix matrix_;
    EigenDecomposition eigen_;
};

/// Hölder-conjugate exponents p, p* with 1/p + 1/p* = 1. Either may be
/// +infinity. Stored through the reciprocals, which are what enter ρ^{1/p}.
class HolderPair {
  public:
    /// p in [1, inf]; p* is derived.
    [[nodiscard]] static HolderPair from_p(double p);
    /// Validates 1/p + 1/p* = 1 within 1e-14.
    HolderPair(double p, double p_star);

    [[nodiscard]] double p() const noexcept { return p_; }
    [[nodiscard]] double p_star() const noexcept { return p_star_; }
    [[nodiscard]] double inv_p() const noexcept { return inv_p_; }
    [[nodiscard]] double inv_p_star() const noexcept { return inv_p_star_; }
    [[nodiscard]] HolderPair swapped() const { return {p_star_, p_}; }

  private:
    HolderPair() = default;
    double p_ = 2.0;
    double p_star_ = 2.0;
    double inv_p_ = 0.5;
    double inv_p_star_ = 0.5;
};

/// Parses a decimal or "inf" ("infinity", "+inf" accepted).
[[nodiscard]] double parse_exponent(const std::string &text);
[[nodiscard]] std::string format_exponent(double p);

class Epsilon {
  public:
    explicit Epsilon(double value);
    [[nodiscard]] double value() const noexcept { return value_; }

  private:
    double value_;
};

/// ρ^t for t in [0, 1], with x^0 := 1 so ρ^0 = I even for singular ρ.
[[nodiscard]] HermitianMatrix frac_power(const DensityMatrix &rho, double t);

/// X - Tr(ρX) I
[[nodiscard]] Matrix center(const DensityMatrix &rho, const Matrix &x);

/// Tr(ρ X̃ Ỹ)
[[nodiscard]] Complex covariance(const DensityMatrix &rho, const Matrix &x,
                                 const Matrix &y);

[[nodiscard]] double variance(const DensityMatrix &rho,
                              const HermitianMatrix &a);

/// Tr(ρXY) - Tr(ρ^{1/p} X ρ^{1/p*} Y), no centering.
[[nodiscard]] Complex ip_bilinear(const DensityMatrix &rho,
                                  const HolderPair &hp, const Matrix &x,
                                  const Matrix &y);

enum class WydForm { trace, commutator };

/// Wigner–Yanase–Dyson information I_p(ρ; A) of the matrix as given
/// (uncentered). The commutator form is -1/2 Tr([ρ^{1/p},A][ρ^{1/p*},A]).
[[nodiscard]] double wyd_information(const DensityMatrix &rho,
                                     const HolderPair &hp,
                                     const HermitianMatrix &a,
                                     WydForm form = WydForm::trace);

/// I(ρ; A) = I_2(ρ; A).
[[nodiscard]] double wy_skew_information(const DensityMatrix &rho,
                                         const HermitianMatrix &a);

/// φ_{p,ε}(ρ; X, Y) = ε Cov(X*, Y) + 1/2 I_p(ρ; (X*)~, Ỹ) + 1/2 I_p(ρ; Ỹ, (X*)~).
/// Conjugate-linear in X, linear in Y.
[[nodiscard]] Complex phi_form(const DensityMatrix &rho, const HolderPair &hp,
                               Epsilon eps, const Matrix &x, const Matrix &y);

[[nodiscard]] Complex gen_skew_correlation(const DensityMatrix &rho,
                                           const HolderPair &hp, Epsilon eps,
                                           const HermitianMatrix &a,
                                           const HermitianMatrix &b);

/// I_{p,ε}(ρ; A) = ε V_ρ(A) + I_p(ρ; Ã).
[[nodiscard]] double gen_skew_information(const DensityMatrix &rho,
                                          const HolderPair &hp, Epsilon eps,
                                          const HermitianMatrix &a);

/// Luo–Zhang correlation Tr(ρAB) - Tr(ρ^{1/2} A ρ^{1/2} B), uncentered.
[[nodiscard]] Complex lz_correlation(const DensityMatrix &rho,
                                     const HermitianMatrix &a,
                                     const HermitianMatrix &b);

struct QuantityReport {
    std::string name;
    Complex value;
    bool real = true; // value.imag() is zero by construction
    std::string inputs_fingerprint;
};

/// Every quantity for (ρ, A[, B]) at the given p and ε: expectations,
/// variances, covariance, I_p, I, I_{p,ε}, Corr_{p,ε}, the Luo–Zhang
/// correlation and Tr(ρ[A,B]). The fingerprint hashes the serialized inputs.
[[nodiscard]] std::vector<QuantityReport>
quantity_reports(const DensityMatrix &rho, const HolderPair &hp, Epsilon eps,
                 const HermitianMatrix &a,
                 const std::optional<HermitianMatrix> &b);

/// Returns z.real() after checking |Im z| <= 1e-12 max(1, scale); throws
/// ConsistencyError otherwise.
[[nodiscard]] double checked_real(Complex z, double scale, const char *what);

} // namespace skewcert
