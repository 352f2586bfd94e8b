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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "skewcert/errors.hpp"
#include "skewcert/functions.hpp"
#include "skewcert/matcore.hpp"
#include "support.hpp"

using namespace skewcert;
using namespace skewcert::testing;

TEST_CASE("eig_hermitian on diagonal input") {
    const std::vector<double> d{0.75, 0.25};
    const auto e = eig_hermitian(HermitianMatrix(Matrix::diagonal(d)));
    CHECK(e.values[0] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(e.values[1] == doctest::Approx(0.75).epsilon(1e-15));
    // columns are a permutation of the identity
    CHECK(std::abs(e.vectors(1, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(e.vectors(0, 1)) == doctest::Approx(1.0));
    CHECK(std::abs(e.vectors(0, 0)) == 0.0);
}

TEST_CASE("eig_hermitian on Pauli matrices") {
    for (const Matrix &s : {pauli_x(), pauli_y(), pauli_z()}) {
        const auto e = eig_hermitian(HermitianMatrix(s));
        CHECK(e.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
        CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("eig_hermitian reconstruction and orthonormality") {
    Xoshiro256 rng(20240601);
    for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 16u, 32u}) {
        for (int rep = 0; rep < 10; ++rep) {
            const HermitianMatrix h =
                n == 1 ? HermitianMatrix(Matrix(1, {rng.normal()}))
                       : sample_hermitian(rng, n);
            const auto e = eig_hermitian(h);
            const double scale = std::max(1.0, h.matrix().frobenius_norm());
            CHECK(frobenius_distance(e.reconstruct(), h) <= kReconTol * scale);
            CHECK(frobenius_distance(e.vectors.adjoint() * e.vectors,
                                     Matrix::identity(n)) <= kUnitaryTol);
            CHECK(std::is_sorted(e.values.begin(), e.values.end()));
            if (n == 5) {
                CHECK(frobenius_distance(e.reconstruct(), h) <= 1e-12);
            }
        }
    }
}

TEST_CASE("eig_hermitian handles degenerate and widely scaled spectra") {
    Xoshiro256 rng(7);
    const auto basis = eig_hermitian(sample_hermitian(rng, 4));
    const std::vector<double> values{1e-12, 1e-12, 3.0, 1e6};
    const HermitianMatrix h(basis.synthesize(values));
    const auto e = eig_hermitian(h);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(std::abs(e.values[k] - values[k]) <= 1e-13 * 1e6);
    }
    CHECK(frobenius_distance(e.reconstruct(), h) <= kReconTol * 1e6);
}

TEST_CASE("HermitianMatrix construction tolerance") {
    Matrix m = pauli_y();
    m(0, 1) += Complex(5e-11, 0.0);
    const HermitianMatrix h(m);
    CHECK(h.matrix().hermiticity_residual() == 0.0);
    CHECK(h(0, 1) == std::conj(h(1, 0)));

    m(0, 1) += Complex(1e-9, 0.0);
    CHECK_THROWS_AS(HermitianMatrix{m}, InvalidInput);

    Matrix bad = Matrix::identity(2);
    bad(0, 0) = std::nan("");
    CHECK_THROWS_AS(HermitianMatrix{bad}, InvalidInput);
}

TEST_CASE("func_calc examples") {
    Xoshiro256 rng(11);
    const HermitianMatrix h = sample_hermitian(rng, 4);
    const ScalarFn identity("id", [](double x) { return x; },
                            Interval::real_line());
    CHECK(frobenius_distance(func_calc(h, identity), h) <= kReconTol);

    const ScalarFn square("sq", [](double x) { return x * x; },
                          Interval::real_line());
    CHECK(max_abs_diff(func_calc(h, square), h.matrix() * h.matrix()) <=
          1e-12);

    const std::vector<double> d{0.75, 0.25};
    const HermitianMatrix root =
        func_calc(HermitianMatrix(Matrix::diagonal(d)), power_fn(0.5));
    CHECK(root(0, 0).real() == doctest::Approx(std::sqrt(3.0) / 2.0));
    CHECK(root(1, 1).real() == doctest::Approx(0.5));
    CHECK(std::abs(root(0, 1)) == 0.0);
}

TEST_CASE("func_calc composition matches nested calls") {
    Xoshiro256 rng(12);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 2 + rep % 4;
        const Matrix g = ginibre(rng, n);
        const HermitianMatrix psd(g * g.adjoint());

        // power(2) ∘ power(0.5) = power(1)
        const auto nested =
            func_calc(func_calc(psd, power_fn(0.5)), power_fn(2.0));
        CHECK(frobenius_distance(nested, func_calc(psd, power_fn(1.0))) <=
              1e-10 * std::max(1.0, psd.matrix().frobenius_norm()));

        // exp ∘ neg_affine(1)
        const ScalarFn composed("exp(1-x)",
                                [](double x) { return std::exp(1.0 - x); },
                                Interval::real_line());
        const HermitianMatrix h = sample_hermitian(rng, n);
        CHECK(frobenius_distance(func_calc(h, composed),
                                 func_calc(func_calc(h, neg_affine_fn(1.0)),
                                           exp_fn())) <= 1e-10);
    }
}

TEST_CASE("func_calc domain handling") {
    const std::vector<double> neg{-0.5, 1.0};
    const HermitianMatrix h(Matrix::diagonal(neg));
    CHECK_THROWS_AS((void)func_calc(h, log_fn()), DomainViolation);
    CHECK_THROWS_AS((void)func_calc(h, power_fn(0.5)), DomainViolation);

    // rounding-level negatives snap to the boundary of a closed domain
    const std::vector<double> tiny{-1e-14, 1.0};
    const auto r = func_calc(HermitianMatrix(Matrix::diagonal(tiny)),
                             power_fn(0.5));
    CHECK(r(0, 0).real() == 0.0);

    // x^0 = 1 even at x = 0
    const std::vector<double> zero{0.0, 0.5};
    const auto one = func_calc(HermitianMatrix(Matrix::diagonal(zero)),
                               power_fn(0.0));
    CHECK(max_abs_diff(one, Matrix::identity(2)) == 0.0);
}

TEST_CASE("commutator examples") {
    Xoshiro256 rng(13);
    const Matrix x = ginibre(rng, 3);
    CHECK(commutator(x, x).frobenius_norm() == 0.0);
    CHECK(commutator(Matrix::identity(3), x).frobenius_norm() == 0.0);

    const Matrix a(2, {0.0, kI, -kI, 0.0});
    const Matrix b = pauli_x();
    const Matrix expected(2, {2.0 * kI, 0.0, 0.0, -2.0 * kI});
    CHECK(max_abs_diff(commutator(a, b), expected) == 0.0);

    CHECK_THROWS_AS((void)commutator(Matrix(2), Matrix(3)), DimMismatch);
}

TEST_CASE("commutator of Hermitian matrices is skew-adjoint") {
    Xoshiro256 rng(14);
    for (int rep = 0; rep < 50; ++rep) {
        const std::size_t n = 2 + rep % 5;
        const auto a = sample_hermitian(rng, n);
        const auto b = sample_hermitian(rng, n);
        const Matrix c = commutator(a, b);
        CHECK(max_abs_diff(c.adjoint(), -1.0 * c) <= 1e-14);
    }
}

TEST_CASE("block_embed examples") {
    const HermitianMatrix z(Matrix(3));
    const auto zero = block_embed(z, z, Matrix(3));
    CHECK(zero.a_hat.dim() == 6);
    CHECK(zero.a_hat.matrix().frobenius_norm() == 0.0);
    CHECK(zero.x_hat.matrix().frobenius_norm() == 0.0);

    const auto e = block_embed(HermitianMatrix(Matrix(1, {1.0})),
                               HermitianMatrix(Matrix(1, {2.0})),
                               Matrix(1, {3.0}));
    CHECK(e.a_hat.matrix() == Matrix(2, {1.0, 0.0, 0.0, 2.0}));
    CHECK(e.x_hat.matrix() == Matrix(2, {0.0, 3.0, 3.0, 0.0}));

    // X̂ = [[0, X*], [X, 0]] entry by entry
    Xoshiro256 rng(15);
    const Matrix x = ginibre(rng, 2);
    const auto g = block_embed(sample_hermitian(rng, 2),
                               sample_hermitian(rng, 2), x);
    CHECK(g.x_hat(0, 3) == std::conj(x(1, 0)));
    CHECK(g.x_hat(3, 0) == x(1, 0));
    CHECK(g.x_hat(2, 1) == x(0, 1));

    CHECK_THROWS_AS((void)block_embed(z, HermitianMatrix(Matrix(2)), Matrix(3)),
                    DimMismatch);
}

TEST_CASE("block_embed spectrum and trace identity") {
    Xoshiro256 rng(16);
    const ScalarFnPair pair = ScalarFnPair::make(
        power_fn(1.0 / 3.0), power_fn(2.0 / 3.0), PairClass::monotonic);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t n = 2 + rep % 4;
        const auto a = sample_in_domain(rng, n, pair.domain);
        const auto b = sample_in_domain(rng, n, pair.domain);
        const Matrix x = ginibre(rng, n);
        const auto emb = block_embed(a, b, x);

        auto spec = eig_hermitian(a).values;
        const auto sb = eig_hermitian(b).values;
        spec.insert(spec.end(), sb.begin(), sb.end());
        std::sort(spec.begin(), spec.end());
        const auto hat = eig_hermitian(emb.a_hat).values;
        for (std::size_t k = 0; k < spec.size(); ++k) {
            CHECK(std::abs(hat[k] - spec[k]) <= 1e-10);
        }

        const Matrix fa = func_calc(a, pair.f);
        const Matrix ga = func_calc(a, pair.g);
        const Matrix fb = func_calc(b, pair.f);
        const Matrix gb = func_calc(b, pair.g);
        const Matrix fh = func_calc(emb.a_hat, pair.f);
        const Matrix gh = func_calc(emb.a_hat, pair.g);
        const Complex lifted =
            trace_of_product(fh * emb.x_hat.matrix(), gh * emb.x_hat.matrix());
        const Complex direct =
            trace_of_product(fa * x.adjoint(), gb * x) +
            trace_of_product(fb * x, ga * x.adjoint());
        CHECK(std::abs(lifted - direct) <= 1e-10);
        if (n == 3) {
            CHECK(std::abs(lifted - direct) <= 1e-11);
        }
    }
}

TEST_CASE("pair classification validator") {
    const std::vector<std::vector<double>> spectra{{0.1, 0.7}};
    CHECK_FALSE(refute_classification(
        parse_pair("power:0.5,power:0.5"), spectra));
    CHECK_FALSE(refute_classification(
        parse_pair("power:1,neg_affine:1", {}, Interval::closed(0.0, 1.0)),
        spectra));
    CHECK(parse_pair("power:1,reciprocal_shift").classification ==
          PairClass::antimonotonic);
    CHECK(parse_pair("const:1,exp").classification == PairClass::monotonic);

    const auto wrong =
        parse_pair("power:1,neg_affine:1", PairClass::monotonic);
    const auto r = refute_classification(wrong, spectra);
    REQUIRE(r.has_value());
    CHECK(r->product < 0.0);

    CHECK_THROWS_AS((void)parse_scalar_fn("power:7"), InvalidInput);
    CHECK_THROWS_AS((void)parse_scalar_fn("cosh"), InvalidInput);
    CHECK_THROWS_AS((void)parse_scalar_fn("exp:2"), InvalidInput);
    CHECK_THROWS_AS((void)parse_pair("power:1"), InvalidInput);
}

TEST_CASE("matrix JSON") {
    Xoshiro256 rng(17);
    for (int rep = 0; rep < 10; ++rep) {
        const Matrix m = ginibre(rng, 1 + rep % 4);
        const auto text = to_json(m).dump();
        CHECK(matrix_from_json(nlohmann::json::parse(text)) == m);
    }
    const auto real = matrix_from_json(
        nlohmann::json::parse(R"({"dim":2,"re":[[1,2],[3,4]]})"));
    CHECK(real(1, 0) == Complex(3.0, 0.0));
    CHECK_FALSE(to_json(real).contains("im"));

    for (const char *bad :
         {R"({"dim":2,"re":[[1,2]]})", R"({"dim":0,"re":[]})",
          R"({"re":[[1]]})", R"({"dim":1,"re":[["a"]]})",
          R"({"dim":1,"re":[[1]],"im":[[1,2]]})", R"([1,2])"}) {
        CHECK_THROWS_AS((void)matrix_from_json(nlohmann::json::parse(bad)),
                        InvalidInput);
    }
}
