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
#include "skewcert/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include "skewcert/errors.hpp"

namespace skewcert {

Matrix::Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

Matrix::Matrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim * dim) {
        throw DimMismatch("Matrix: expected " + std::to_string(dim * dim) +
                          " entries, got " + std::to_string(data_.size()));
    }
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
    Matrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

Complex Matrix::trace() const {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        sum += (*this)(i, i);
    }
    return sum;
}

double Matrix::frobenius_norm() const {
    double sum = 0.0;
    for (const auto &z : data_) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

bool Matrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(), [](const Complex &z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

double Matrix::hermiticity_residual() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            worst = std::max(
                worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return worst;
}

Matrix &Matrix::operator+=(const Matrix &rhs) {
    require_same_dim(*this, rhs, "operator+");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += rhs.data_[k];
    }
    return *this;
}

Matrix &Matrix::operator-=(const Matrix &rhs) {
    require_same_dim(*this, rhs, "operator-");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= rhs.data_[k];
    }
    return *this;
}

Matrix &Matrix::operator*=(Complex s) {
    for (auto &z : data_) {
        z *= s;
    }
    return *this;
}

Matrix operator+(Matrix lhs, const Matrix &rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix &rhs) { return lhs -= rhs; }
Matrix operator*(Complex s, Matrix m) { return m *= s; }

Matrix operator*(const Matrix &lhs, const Matrix &rhs) {
    require_same_dim(lhs, rhs, "operator*");
    const std::size_t n = lhs.dim();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += a * rhs(k, j);
            }
        }
    }
    return out;
}

Complex trace_of_product(const Matrix &lhs, const Matrix &rhs) {
    require_same_dim(lhs, rhs, "trace_of_product");
    const std::size_t n = lhs.dim();
    Complex sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            sum += lhs(i, k) * rhs(k, i);
        }
    }
    return sum;
}

double frobenius_distance(const Matrix &lhs, const Matrix &rhs) {
    return (lhs - rhs).frobenius_norm();
}

void require_same_dim(const Matrix &a, const Matrix &b, const char *what) {
    if (a.dim() != b.dim()) {
        throw DimMismatch(std::string(what) + ": dimension " +
                          std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()));
    }
}

HermitianMatrix::HermitianMatrix(const Matrix &m, double tol) : m_(m.dim()) {
    if (m.dim() == 0) {
        throw InvalidInput("HermitianMatrix: dimension must be >= 1");
    }
    if (!m.all_finite()) {
        throw InvalidInput("HermitianMatrix: non-finite entry");
    }
    const double residual = m.hermiticity_residual();
    if (residual > tol) {
        std::ostringstream msg;
        msg << "HermitianMatrix: hermiticity residual " << residual
            << " exceeds tolerance " << tol;
        throw InvalidInput(msg.str());
    }
    const std::size_t n = m.dim();
    for (std::size_t i = 0; i < n; ++i) {
        m_(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex sym = 0.5 * (m(i, j) + std::conj(m(j, i)));
            m_(i, j) = sym;
            m_(j, i) = std::conj(sym);
        }
    }
}

HermitianMatrix HermitianMatrix::shifted(double c) const {
    Matrix m = m_;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        m(i, i) += c;
    }
    return HermitianMatrix(m);
}

Matrix EigenDecomposition::reconstruct() const { return synthesize(values); }

Matrix EigenDecomposition::synthesize(std::span<const double> weights) const {
    const std::size_t n = vectors.dim();
    if (weights.size() != n) {
        throw DimMismatch("synthesize: weight count does not match dimension");
    }
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Complex sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                sum += vectors(i, k) * weights[k] * std::conj(vectors(j, k));
            }
            if (i == j) {
                out(i, i) = sum.real();
            } else {
                out(i, j) = sum;
                out(j, i) = std::conj(sum);
            }
        }
    }
    return out;
}

namespace {

constexpr double kJacobiRelTol = 1e-13;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Matrix &w) {
    double sum = 0.0;
    for (std::size_t i = 0; i < w.dim(); ++i) {
        for (std::size_t j = 0; j < w.dim(); ++j) {
            if (i != j) {
                sum += std::norm(w(i, j));
            }
        }
    }
    return std::sqrt(sum);
}

// Zeroes w(p,q) with the unitary G = diag(1, e^{-i phi}) R(c, s) acting on
// the (p,q) plane, where phi = arg w(p,q) and R is the real Jacobi rotation
// for the phase-stripped 2x2 block.
void rotate(Matrix &w, Matrix &v, std::size_t p, std::size_t q) {
    const Complex apq = w(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) {
        return;
    }
    const Complex phase = std::conj(apq) / r; // e^{-i phi}
    const double app = w(p, p).real();
    const double aqq = w(q, q).real();
    const double theta = (aqq - app) / (2.0 * r);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = (theta >= 0.0 ? 1.0 : -1.0) /
            (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    const Complex gpp = c;
    const Complex gpq = s;
    const Complex gqp = -s * phase;
    const Complex gqq = c * phase;

    const std::size_t n = w.dim();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex wkp = w(k, p);
        const Complex wkq = w(k, q);
        w(k, p) = wkp * gpp + wkq * gqp;
        w(k, q) = wkp * gpq + wkq * gqq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex wpk = w(p, k);
        const Complex wqk = w(q, k);
        w(p, k) = std::conj(gpp) * wpk + std::conj(gqp) * wqk;
        w(q, k) = std::conj(gpq) * wpk + std::conj(gqq) * wqk;
    }
    w(p, q) = 0.0;
    w(q, p) = 0.0;
    w(p, p) = w(p, p).real();
    w(q, q) = w(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * gpp + vkq * gqp;
        v(k, q) = vkp * gpq + vkq * gqq;
    }
}

} // namespace

EigenDecomposition eig_hermitian(const HermitianMatrix &h) {
    const std::size_t n = h.dim();
    Matrix w = h.matrix();
    Matrix v = Matrix::identity(n);
    const double threshold =
        kJacobiRelTol * std::max(1.0, h.matrix().frobenius_norm());

    bool converged = off_diagonal_norm(w) <= threshold;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                rotate(w, v, p, q);
            }
        }
        converged = off_diagonal_norm(w) <= threshold;
    }
    if (!converged) {
        throw NoConvergence("eig_hermitian: off-diagonal norm " +
                            std::to_string(off_diagonal_norm(w)) +
                            " above threshold after " +
                            std::to_string(kMaxSweeps) + " sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return w(a, a).real() < w(b, b).real();
                     });
    EigenDecomposition out{std::vector<double>(n), Matrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = w(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) {
            out.vectors(i, k) = v(i, order[k]);
        }
    }
    return out;
}

Matrix commutator(const Matrix &x, const Matrix &y) {
    require_same_dim(x, y, "commutator");
    return x * y - y * x;
}

BlockEmbedding block_embed(const HermitianMatrix &a, const HermitianMatrix &b,
                           const Matrix &x) {
    require_same_dim(a, b, "block_embed");
    require_same_dim(a, x, "block_embed");
    const std::size_t n = a.dim();
    Matrix a_hat(2 * n);
    Matrix x_hat(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a_hat(i, j) = a(i, j);
            a_hat(n + i, n + j) = b(i, j);
            x_hat(i, n + j) = std::conj(x(j, i));
            x_hat(n + i, j) = x(i, j);
        }
    }
    return {HermitianMatrix(a_hat), HermitianMatrix(x_hat)};
}

nlohmann::ordered_json to_json(const Matrix &m) {
    nlohmann::ordered_json re = nlohmann::ordered_json::array();
    nlohmann::ordered_json im = nlohmann::ordered_json::array();
    bool any_imag = false;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        nlohmann::ordered_json re_row = nlohmann::ordered_json::array();
        nlohmann::ordered_json im_row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            re_row.push_back(m(i, j).real());
            im_row.push_back(m(i, j).imag());
            any_imag = any_imag || m(i, j).imag() != 0.0;
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    nlohmann::ordered_json j;
    j["dim"] = m.dim();
    j["re"] = std::move(re);
    if (any_imag) {
        j["im"] = std::move(im);
    }
    return j;
}

namespace {

void read_part(const nlohmann::json &rows, std::size_t n, Matrix &m,
               bool imaginary, const char *key) {
    if (!rows.is_array() || rows.size() != n) {
        throw InvalidInput(std::string("matrix JSON: \"") + key +
                           "\" must be an array of " + std::to_string(n) +
                           " rows");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto &row = rows[i];
        if (!row.is_array() || row.size() != n) {
            throw InvalidInput(std::string("matrix JSON: row ") +
                               std::to_string(i) + " of \"" + key +
                               "\" must have " + std::to_string(n) +
                               " entries");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!row[j].is_number()) {
                throw InvalidInput(std::string("matrix JSON: non-numeric "
                                               "entry in \"") +
                                   key + "\"");
            }
            const double value = row[j].get<double>();
            if (imaginary) {
                m(i, j).imag(value);
            } else {
                m(i, j).real(value);
            }
        }
    }
}

} // namespace

Matrix matrix_from_json(const nlohmann::json &j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("re")) {
        throw InvalidInput("matrix JSON: expected object with \"dim\" and "
                           "\"re\"");
    }
    if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
        throw InvalidInput("matrix JSON: \"dim\" must be a positive integer");
    }
    const auto n = j["dim"].get<std::size_t>();
    Matrix m(n);
    read_part(j["re"], n, m, false, "re");
    if (j.contains("im")) {
        read_part(j["im"], n, m, true, "im");
    }
    if (!m.all_finite()) {
        throw InvalidInput("matrix JSON: non-finite entry");
    }
    return m;
}

Matrix load_matrix(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open matrix file: " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw InvalidInput("matrix file " + path + ": " + e.what());
    }
    return matrix_from_json(j);
}

} // namespace skewcert
