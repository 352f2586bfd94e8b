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
#include "skewcert/quantinfo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "skewcert/certificate.hpp"
#include "skewcert/errors.hpp"

namespace skewcert {

namespace {

constexpr double kTraceTol = 1e-8;
// Traces within this of 1 are left unnormalized.
constexpr double kTraceSnap = 1e-14;
constexpr double kImagTol = 1e-12;

} // namespace

DensityMatrix::DensityMatrix(const Matrix &m)
    : matrix_(m), eigen_(eig_hermitian(matrix_)) {
    double sum = 0.0;
    bool repaired = false;
    for (double &lambda : eigen_.values) {
        if (lambda < -kPsdTol) {
            std::ostringstream msg;
            msg << "DensityMatrix: eigenvalue " << lambda
                << " below -" << kPsdTol << " (not positive semidefinite)";
            throw InvalidInput(msg.str());
        }
        if (lambda < 0.0) {
            lambda = 0.0;
            repaired = true;
        }
        sum += lambda;
    }
    if (std::abs(sum - 1.0) > kTraceTol) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "DensityMatrix: trace " << sum << " is not 1";
        throw InvalidInput(msg.str());
    }
    if (repaired || std::abs(m.trace().real() - 1.0) > kTraceSnap) {
        for (double &lambda : eigen_.values) {
            lambda /= sum;
        }
        repaired = true;
    }
    if (repaired) {
        matrix_ = HermitianMatrix(eigen_.reconstruct());
    }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    Matrix m = Matrix::identity(dim);
    m *= 1.0 / static_cast<double>(dim);
    return DensityMatrix(m);
}

Complex DensityMatrix::expectation(const Matrix &x) const {
    return trace_of_product(matrix(), x);
}

HolderPair HolderPair::from_p(double p) {
    if (std::isnan(p) || p < 1.0) {
        throw InvalidInput("Hölder exponent p must lie in [1, inf]");
    }
    HolderPair hp;
    hp.p_ = p;
    if (std::isinf(p)) {
        hp.inv_p_ = 0.0;
        hp.p_star_ = 1.0;
    } else if (p == 1.0) {
        hp.inv_p_ = 1.0;
        hp.p_star_ = std::numeric_limits<double>::infinity();
    } else {
        hp.inv_p_ = 1.0 / p;
        hp.p_star_ = p / (p - 1.0);
    }
    hp.inv_p_star_ = 1.0 - hp.inv_p_;
    return hp;
}

HolderPair::HolderPair(double p, double p_star) {
    auto inv = [](double x) { return std::isinf(x) ? 0.0 : 1.0 / x; };
    if (std::isnan(p) || std::isnan(p_star) || p < 1.0 || p_star < 1.0 ||
        std::abs(inv(p) + inv(p_star) - 1.0) > 1e-14) {
        throw InvalidInput("HolderPair: 1/p + 1/p* must equal 1");
    }
    p_ = p;
    p_star_ = p_star;
    inv_p_ = inv(p);
    inv_p_star_ = inv(p_star);
}

double parse_exponent(const std::string &text) {
    if (text == "inf" || text == "+inf" || text == "infinity" ||
        text == "Inf" || text == "INF") {
        return std::numeric_limits<double>::infinity();
    }
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(value)) {
        throw InvalidInput("cannot parse exponent \"" + text + "\"");
    }
    return value;
}

std::string format_exponent(double p) {
    if (std::isinf(p)) {
        return "inf";
    }
    std::ostringstream s;
    s.precision(17);
    s << p;
    return s.str();
}

Epsilon::Epsilon(double value) : value_(value) {
    if (!std::isfinite(value) || value < 0.0) {
        throw InvalidInput("epsilon must be finite and >= 0");
    }
}

HermitianMatrix frac_power(const DensityMatrix &rho, double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw InvalidInput("frac_power: exponent must lie in [0, 1]");
    }
    if (t == 1.0) {
        return rho.hermitian();
    }
    std::vector<double> w(rho.dim());
    for (std::size_t k = 0; k < w.size(); ++k) {
        const double lambda = rho.eigen().values[k];
        w[k] = t == 0.0 ? 1.0 : std::pow(lambda, t);
    }
    return HermitianMatrix(rho.eigen().synthesize(w));
}

Matrix center(const DensityMatrix &rho, const Matrix &x) {
    require_same_dim(rho.matrix(), x, "center");
    Matrix out = x;
    const Complex mean = rho.expectation(x);
    for (std::size_t i = 0; i < out.dim(); ++i) {
        out(i, i) -= mean;
    }
    return out;
}

Complex covariance(const DensityMatrix &rho, const Matrix &x,
                   const Matrix &y) {
    require_same_dim(rho.matrix(), x, "covariance");
    require_same_dim(rho.matrix(), y, "covariance");
    return trace_of_product(rho.matrix() * center(rho, x), center(rho, y));
}

double checked_real(Complex z, double scale, const char *what) {
    if (std::abs(z.imag()) > kImagTol * std::max(1.0, scale)) {
        std::ostringstream msg;
        msg << what << ": imaginary residue " << z.imag()
            << " exceeds tolerance";
        throw ConsistencyError(msg.str());
    }
    return z.real();
}

double variance(const DensityMatrix &rho, const HermitianMatrix &a) {
    const double scale = std::pow(a.matrix().frobenius_norm(), 2);
    return checked_real(covariance(rho, a, a), scale, "variance");
}

namespace {

struct Powers {
    Matrix lo; // ρ^{1/p}
    Matrix hi; // ρ^{1/p*}
};

Powers powers(const DensityMatrix &rho, const HolderPair &hp) {
    return {frac_power(rho, hp.inv_p()).matrix(),
            frac_power(rho, hp.inv_p_star()).matrix()};
}

Complex ip_with(const DensityMatrix &rho, const Powers &pw, const Matrix &x,
                const Matrix &y) {
    return trace_of_product(rho.matrix() * x, y) -
           trace_of_product(pw.lo * x, pw.hi * y);
}

} // namespace

Complex ip_bilinear(const DensityMatrix &rho, const HolderPair &hp,
                    const Matrix &x, const Matrix &y) {
    require_same_dim(rho.matrix(), x, "ip_bilinear");
    require_same_dim(rho.matrix(), y, "ip_bilinear");
    return ip_with(rho, powers(rho, hp), x, y);
}

double wyd_information(const DensityMatrix &rho, const HolderPair &hp,
                       const HermitianMatrix &a, WydForm form) {
    require_same_dim(rho.matrix(), a, "wyd_information");
    const Powers pw = powers(rho, hp);
    const double scale = std::pow(a.matrix().frobenius_norm(), 2);
    if (form == WydForm::trace) {
        return checked_real(ip_with(rho, pw, a, a), scale, "wyd_information");
    }
    const Complex t = trace_of_product(commutator(pw.lo, a), commutator(pw.hi, a));
    return checked_real(-0.5 * t, scale, "wyd_information");
}

double wy_skew_information(const DensityMatrix &rho, const HermitianMatrix &a) {
    return wyd_information(rho, HolderPair::from_p(2.0), a);
}

Complex phi_form(const DensityMatrix &rho, const HolderPair &hp, Epsilon eps,
                 const Matrix &x, const Matrix &y) {
    require_same_dim(rho.matrix(), x, "phi_form");
    require_same_dim(rho.matrix(), y, "phi_form");
    const Matrix xs = center(rho, x.adjoint());
    const Matrix yt = center(rho, y);
    const Powers pw = powers(rho, hp);
    const Complex cov = trace_of_product(rho.matrix() * xs, yt);
    return eps.value() * cov + 0.5 * ip_with(rho, pw, xs, yt) +
           0.5 * ip_with(rho, pw, yt, xs);
}

Complex gen_skew_correlation(const DensityMatrix &rho, const HolderPair &hp,
                             Epsilon eps, const HermitianMatrix &a,
                             const HermitianMatrix &b) {
    return phi_form(rho, hp, eps, a, b);
}

double gen_skew_information(const DensityMatrix &rho, const HolderPair &hp,
                            Epsilon eps, const HermitianMatrix &a) {
    require_same_dim(rho.matrix(), a, "gen_skew_information");
    const Matrix centered = center(rho, a);
    const double scale = std::pow(centered.frobenius_norm(), 2);
    const Complex ip = ip_with(rho, powers(rho, hp), centered, centered);
    return eps.value() * variance(rho, a) +
           checked_real(ip, scale, "gen_skew_information");
}

Complex lz_correlation(const DensityMatrix &rho, const HermitianMatrix &a,
                       const HermitianMatrix &b) {
    require_same_dim(rho.matrix(), a, "lz_correlation");
    require_same_dim(rho.matrix(), b, "lz_correlation");
    return ip_bilinear(rho, HolderPair::from_p(2.0), a, b);
}

std::vector<QuantityReport>
quantity_reports(const DensityMatrix &rho, const HolderPair &hp, Epsilon eps,
                 const HermitianMatrix &a,
                 const std::optional<HermitianMatrix> &b) {
    nlohmann::ordered_json inputs;
    inputs["rho"] = to_json(rho.matrix());
    inputs["A"] = to_json(a.matrix());
    if (b) {
        inputs["B"] = to_json(b->matrix());
    }
    inputs["p"] = format_exponent(hp.p());
    inputs["epsilon"] = eps.value();
    const std::string fp = fnv1a_hex(inputs.dump());

    std::vector<QuantityReport> out;
    auto real = [&](std::string name, double v) {
        out.push_back({std::move(name), v, true, fp});
    };
    auto cplx = [&](std::string name, Complex v) {
        out.push_back({std::move(name), v, false, fp});
    };
    const Epsilon zero(0.0);
    auto single = [&](const HermitianMatrix &op, const std::string &tag) {
        cplx("expectation_" + tag, rho.expectation(op));
        real("variance_" + tag, variance(rho, op));
        real("wyd_information_" + tag, wyd_information(rho, hp, op));
        real("wy_skew_information_" + tag, wy_skew_information(rho, op));
        real("gen_skew_information_" + tag,
             gen_skew_information(rho, hp, eps, op));
        real("gen_skew_information_eps0_" + tag,
             gen_skew_information(rho, hp, zero, op));
    };
    single(a, "A");
    if (b) {
        single(*b, "B");
        cplx("covariance_AB", covariance(rho, a, *b));
        cplx("gen_skew_correlation_AB",
             gen_skew_correlation(rho, hp, eps, a, *b));
        cplx("lz_correlation_AB", lz_correlation(rho, a, *b));
        cplx("commutator_expectation_AB", rho.expectation(commutator(a, *b)));
        real("wy_skew_product_AB",
             wy_skew_information(rho, a) * wy_skew_information(rho, *b));
    }
    return out;
}

} // namespace skewcert
