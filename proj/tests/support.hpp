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

#include <cmath>
#include <complex>
#include <initializer_list>
#include <vector>

#include "skewcert/explorer.hpp"
#include "skewcert/functions.hpp"
#include "skewcert/matcore.hpp"

namespace skewcert::testing {

inline const Complex kI{0.0, 1.0};

inline Matrix pauli_x() { return Matrix(2, {0.0, 1.0, 1.0, 0.0}); }
inline Matrix pauli_y() { return Matrix(2, {0.0, -kI, kI, 0.0}); }
inline Matrix pauli_z() { return Matrix(2, {1.0, 0.0, 0.0, -1.0}); }

inline Matrix diag(std::initializer_list<double> d) {
    const std::vector<double> v(d);
    return Matrix::diagonal(v);
}

inline double max_abs_diff(const Matrix &a, const Matrix &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
        }
    }
    return worst;
}

/// Observable commuting with ρ: a polynomial in ρ with random coefficients.
inline HermitianMatrix commuting_observable(const DensityMatrix &rho,
                                            Xoshiro256 &rng) {
    const double c0 = rng.normal();
    const double c1 = rng.normal();
    const double c2 = rng.normal();
    Matrix m = c0 * Matrix::identity(rho.dim());
    m += c1 * rho.matrix();
    m += c2 * (rho.matrix() * rho.matrix());
    return HermitianMatrix(m);
}

/// The function pairs exercised by the Lemma suites.
inline std::vector<ScalarFnPair> suite_pairs() {
    return {
        ScalarFnPair::make(power_fn(1.0), power_fn(1.0), PairClass::monotonic),
        ScalarFnPair::make(power_fn(0.5), power_fn(0.5), PairClass::monotonic),
        ScalarFnPair::make(power_fn(1.0 / 3.0), power_fn(2.0 / 3.0),
                           PairClass::monotonic),
        ScalarFnPair::make(power_fn(1.0), exp_fn(), PairClass::monotonic),
        ScalarFnPair::make(power_fn(1.0), neg_affine_fn(1.0),
                           PairClass::antimonotonic, Interval::closed(0.0, 1.0)),
        ScalarFnPair::make(power_fn(1.0), reciprocal_shift_fn(),
                           PairClass::antimonotonic),
    };
}

} // namespace skewcert::testing
