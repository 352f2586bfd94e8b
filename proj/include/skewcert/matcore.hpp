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

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace skewcert {

using Complex = std::complex<double>;

// Construction and decomposition tolerances.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kReconTol = 1e-11;
inline constexpr double kUnitaryTol = 1e-11;
inline constexpr double kDomainTol = 1e-12;

/// Dense complex square matrix, row-major.
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(std::size_t dim);
    Matrix(std::size_t dim, std::vector<Complex> entries);

    static Matrix identity(std::size_t dim);
    static Matrix diagonal(std::span<const double> values);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] Complex &operator()(std::size_t i, std::size_t j) {
        return data_[i * dim_ + j];
    }
    [[nodiscard]] const Complex &operator()(std::size_t i,
                                            std::size_t j) const {
        return data_[i * dim_ + j];
    }
    [[nodiscard]] std::span<const Complex> entries() const noexcept {
        return data_;
    }

    [[nodiscard]] Matrix adjoint() const;
    [[nodiscard]] Complex trace() const;
    [[nodiscard]] double frobenius_norm() const;
    [[nodiscard]] bool all_finite() const;
    /// max_ij |m(i,j) - conj(m(j,i))|
    [[nodiscard]] double hermiticity_residual() const;

    Matrix &operator+=(const Matrix &rhs);
    Matrix &operator-=(const Matrix &rhs);
    Matrix &operator*=(Complex s);

    friend bool operator==(const Matrix &, const Matrix &) = default;

  private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

[[nodiscard]] Matrix operator+(Matrix lhs, const Matrix &rhs);
[[nodiscard]] Matrix operator-(Matrix lhs, const Matrix &rhs);
[[nodiscard]] Matrix operator*(const Matrix &lhs, const Matrix &rhs);
[[nodiscard]] Matrix operator*(Complex s, Matrix m);

/// Tr(lhs * rhs) without forming the product.
[[nodiscard]] Complex trace_of_product(const Matrix &lhs, const Matrix &rhs);

/// ‖lhs - rhs‖_F
[[nodiscard]] double frobenius_distance(const Matrix &lhs, const Matrix &rhs);

void require_same_dim(const Matrix &a, const Matrix &b, const char *what);

/// Selfadjoint matrix. Construction accepts inputs within kHermitianTol of
/// Hermitian and stores the exact symmetrization (M + M*)/2.
class HermitianMatrix {
  public:
    HermitianMatrix() = default;
    explicit HermitianMatrix(const Matrix &m, double tol = kHermitianTol);

    [[nodiscard]] const Matrix &matrix() const noexcept { return m_; }
    [[nodiscard]] std::size_t dim() const noexcept { return m_.dim(); }
    [[nodiscard]] const Complex &operator()(std::size_t i,
                                            std::size_t j) const {
        return m_(i, j);
    }
    [[nodiscard]] HermitianMatrix shifted(double c) const;

    operator const Matrix &() const noexcept { return m_; } // NOLINT

    friend bool operator==(const HermitianMatrix &,
                           const HermitianMatrix &) = default;

  private:
    Matrix m_;
};

struct EigenDecomposition {
    std::vector<double> values; // ascending
    Matrix vectors;             // columns are eigenvectors

    [[nodiscard]] Matrix reconstruct() const;
    /// V diag(w) V*
    [[nodiscard]] Matrix synthesize(std::span<const double> weights) const;
};

/// Cyclic Jacobi eigensolver for Hermitian matrices. Throws NoConvergence if
/// the off-diagonal norm stays above 1e-13 max(1, ‖H‖_F) after 100 sweeps.
[[nodiscard]] EigenDecomposition eig_hermitian(const HermitianMatrix &h);

[[nodiscard]] Matrix commutator(const Matrix &x, const Matrix &y);

struct BlockEmbedding {
    HermitianMatrix a_hat; // [[A, 0], [0, B]]
    HermitianMatrix x_hat; // [[0, X*], [X, 0]]
};

/// Lifts (A, B, X) on H to the selfadjoint pair on H ⊕ H.
[[nodiscard]] BlockEmbedding block_embed(const HermitianMatrix &a,
                                         const HermitianMatrix &b,
                                         const Matrix &x);

// Matrix JSON: {"dim": n, "re": [[...]], "im": [[...]]}, "im" optional.
[[nodiscard]] nlohmann::ordered_json to_json(const Matrix &m);
[[nodiscard]] Matrix matrix_from_json(const nlohmann::json &j);
[[nodiscard]] Matrix load_matrix(const std::string &path);

} // namespace skewcert
