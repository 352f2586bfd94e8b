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
#include "skewcert/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "skewcert/errors.hpp"

namespace skewcert {

using Details = std::vector<std::pair<std::string, double>>;
using ojson = nlohmann::ordered_json;

std::string to_string(InequalityId id) {
    switch (id) {
    case InequalityId::fujii:
        return "fujii";
    case InequalityId::gfujii:
        return "gfujii";
    case InequalityId::schrodinger:
        return "schrodinger";
    case InequalityId::generalized_ur:
        return "generalized_ur";
    case InequalityId::order1:
        return "order1";
    case InequalityId::order2:
        return "order2";
    case InequalityId::lz_theorem1:
        break;
    }
    return "lz_theorem1";
}

const std::vector<InequalityId> &all_inequalities() {
    static const std::vector<InequalityId> ids{
        InequalityId::fujii,          InequalityId::gfujii,
        InequalityId::schrodinger,    InequalityId::generalized_ur,
        InequalityId::order1,         InequalityId::order2,
        InequalityId::lz_theorem1};
    return ids;
}

InequalityId parse_inequality(const std::string &name) {
    for (InequalityId id : all_inequalities()) {
        if (to_string(id) == name) {
            return id;
        }
    }
    throw UnknownInequality("unknown inequality \"" + name + "\"");
}

bool is_proven(InequalityId id) { return id != InequalityId::lz_theorem1; }

bool uses_pair(InequalityId id) {
    return id == InequalityId::fujii || id == InequalityId::gfujii;
}

namespace {

ojson exponent_json(double p) {
    if (std::isinf(p)) {
        return p > 0 ? "inf" : "-inf";
    }
    return p;
}

double exponent_from_json(const nlohmann::json &j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "-inf") {
            return -std::numeric_limits<double>::infinity();
        }
        return parse_exponent(s);
    }
    if (!j.is_number()) {
        throw InvalidInput("expected number or \"inf\" in certificate inputs");
    }
    return j.get<double>();
}

ojson pair_json(const ScalarFnPair &pair) {
    ojson j;
    j["f"] = pair.f.id();
    j["g"] = pair.g.id();
    j["classification"] = to_string(pair.classification);
    j["domain"] = {{"lo", exponent_json(pair.domain.lo)},
                   {"hi", exponent_json(pair.domain.hi)},
                   {"lo_open", pair.domain.lo_open},
                   {"hi_open", pair.domain.hi_open}};
    return j;
}

ScalarFnPair pair_from_json(const nlohmann::json &j) {
    const auto &d = j.at("domain");
    Interval domain{exponent_from_json(d.at("lo")),
                    exponent_from_json(d.at("hi")), d.at("lo_open").get<bool>(),
                    d.at("hi_open").get<bool>()};
    return ScalarFnPair::make(parse_scalar_fn(j.at("f").get<std::string>()),
                              parse_scalar_fn(j.at("g").get<std::string>()),
                              parse_pair_class(
                                  j.at("classification").get<std::string>()),
                              domain);
}

ojson state_inputs(const DensityMatrix &rho, const HermitianMatrix &a,
                   const HermitianMatrix &b) {
    ojson j;
    j["rho"] = to_json(rho.matrix());
    j["A"] = to_json(a.matrix());
    j["B"] = to_json(b.matrix());
    return j;
}

void add_holder(ojson &j, const HolderPair &hp) {
    j["p"] = exponent_json(hp.p());
    j["p_star"] = exponent_json(hp.p_star());
}

double real_trace(Complex z, double scale, const char *what) {
    if (std::abs(z.imag()) > 1e-11 * std::max(1.0, scale)) {
        std::ostringstream msg;
        msg << what << ": imaginary part " << z.imag() << " of a real trace";
        throw ConsistencyError(msg.str());
    }
    return z.real();
}

/// Tr(ρ[A,B]), purely imaginary for Hermitian A, B.
Complex commutator_expectation(const DensityMatrix &rho,
                               const HermitianMatrix &a,
                               const HermitianMatrix &b) {
    return rho.expectation(commutator(a, b));
}

void require_classified(const ScalarFnPair &pair) {
    if (pair.classification == PairClass::unknown) {
        throw InvalidInput("pair " + pair.id() +
                           " has no monotonic/antimonotonic classification");
    }
}

// Orients (tr_fg_x2, tr_cross) so margin >= 0 is the lemma's direction.
std::pair<double, double> orient(PairClass c, double tr_product,
                                 double tr_cross) {
    return c == PairClass::monotonic ? std::pair{tr_product, tr_cross}
                                     : std::pair{tr_cross, tr_product};
}

void add_refutation(Details &details, const std::optional<PairRefutation> &r) {
    details.emplace_back("pair_refuted", r ? 1.0 : 0.0);
    if (r) {
        details.emplace_back("refutation_a", r->a);
        details.emplace_back("refutation_b", r->b);
        details.emplace_back("refutation_product", r->product);
    }
}

struct SchwarzSides {
    double i_a;
    double i_b;
    Complex corr_ab;
    Complex corr_ba;
};

SchwarzSides gen_sides(const DensityMatrix &rho, const HolderPair &hp,
                       Epsilon eps, const HermitianMatrix &a,
                       const HermitianMatrix &b) {
    return {gen_skew_information(rho, hp, eps, a),
            gen_skew_information(rho, hp, eps, b),
            gen_skew_correlation(rho, hp, eps, a, b),
            gen_skew_correlation(rho, hp, eps, b, a)};
}

} // namespace

Certificate check_fujii(const HermitianMatrix &a, const HermitianMatrix &x,
                        const ScalarFnPair &pair, double tolerance) {
    require_same_dim(a, x, "check_fujii");
    require_classified(pair);
    const EigenDecomposition eig = eig_hermitian(a);
    require_in_domain(eig.values, pair.domain, "check_fujii");
    const std::vector<std::vector<double>> spectra{eig.values};
    const auto refutation = refute_classification(pair, spectra);

    const Matrix fa = func_calc(eig, pair.f).matrix();
    const Matrix ga = func_calc(eig, pair.g).matrix();
    const Matrix &xm = x.matrix();
    const double scale = fa.frobenius_norm() * ga.frobenius_norm() *
                         std::pow(xm.frobenius_norm(), 2);
    const double tr_cross =
        real_trace(trace_of_product(fa * xm, ga * xm), scale, "check_fujii");
    const double tr_product =
        real_trace(trace_of_product(fa * ga, xm * xm), scale, "check_fujii");
    const auto [lhs, rhs] = orient(pair.classification, tr_product, tr_cross);

    Details details{{"tr_fg_x2", tr_product},
                    {"tr_fxgx", tr_cross},
                    {"raw_difference", tr_product - tr_cross}};
    add_refutation(details, refutation);

    ojson inputs;
    inputs["A"] = to_json(a.matrix());
    inputs["X"] = to_json(xm);
    inputs["pair"] = pair_json(pair);
    inputs["tolerance"] = tolerance;
    return make_certificate("fujii", lhs, rhs, tolerance, std::move(details),
                            std::move(inputs), refutation.has_value());
}

Certificate check_gfujii(const HermitianMatrix &a, const HermitianMatrix &b,
                         const Matrix &x, const ScalarFnPair &pair,
                         double tolerance) {
    require_same_dim(a, b, "check_gfujii");
    require_same_dim(a, x, "check_gfujii");
    require_classified(pair);
    const EigenDecomposition eig_a = eig_hermitian(a);
    const EigenDecomposition eig_b = eig_hermitian(b);
    require_in_domain(eig_a.values, pair.domain, "check_gfujii (A)");
    require_in_domain(eig_b.values, pair.domain, "check_gfujii (B)");
    const std::vector<std::vector<double>> spectra{eig_a.values, eig_b.values};
    const auto refutation = refute_classification(pair, spectra);

    const Matrix fa = func_calc(eig_a, pair.f).matrix();
    const Matrix ga = func_calc(eig_a, pair.g).matrix();
    const Matrix fb = func_calc(eig_b, pair.f).matrix();
    const Matrix gb = func_calc(eig_b, pair.g).matrix();
    const Matrix xs = x.adjoint();
    const double scale =
        std::max(fa.frobenius_norm(), fb.frobenius_norm()) *
        std::max(ga.frobenius_norm(), gb.frobenius_norm()) *
        std::pow(x.frobenius_norm(), 2);

    // Tr(f(A)X*g(B)X + f(B)Xg(A)X*)
    const double tr_cross = real_trace(trace_of_product(fa * xs, gb * x) +
                                           trace_of_product(fb * x, ga * xs),
                                       scale, "check_gfujii");
    // Tr(f(A)g(A)X*X + f(B)g(B)XX*)
    const double tr_product = real_trace(trace_of_product(fa * ga, xs * x) +
                                             trace_of_product(fb * gb, x * xs),
                                         scale, "check_gfujii");

    const BlockEmbedding emb = block_embed(a, b, x);
    const EigenDecomposition eig_hat = eig_hermitian(emb.a_hat);
    const Matrix f_hat = func_calc(eig_hat, pair.f).matrix();
    const Matrix g_hat = func_calc(eig_hat, pair.g).matrix();
    const Matrix &x_hat = emb.x_hat.matrix();
    const double block_cross = real_trace(
        trace_of_product(f_hat * x_hat, g_hat * x_hat), scale, "check_gfujii");
    const double block_product =
        real_trace(trace_of_product(f_hat * g_hat, x_hat * x_hat), scale,
                   "check_gfujii");

    const auto [lhs, rhs] = orient(pair.classification, tr_product, tr_cross);
    Details details{{"tr_cross", tr_cross},
                    {"tr_product", tr_product},
                    {"raw_difference", tr_product - tr_cross},
                    {"block_cross", block_cross},
                    {"block_product", block_product},
                    {"block_cross_residual", std::abs(block_cross - tr_cross)},
                    {"block_product_residual",
                     std::abs(block_product - tr_product)}};
    add_refutation(details, refutation);

    ojson inputs;
    inputs["A"] = to_json(a.matrix());
    inputs["B"] = to_json(b.matrix());
    inputs["X"] = to_json(x);
    inputs["pair"] = pair_json(pair);
    inputs["tolerance"] = tolerance;
    return make_certificate("gfujii", lhs, rhs, tolerance, std::move(details),
                            std::move(inputs), refutation.has_value());
}

Certificate check_schrodinger(const DensityMatrix &rho,
                              const HermitianMatrix &a,
                              const HermitianMatrix &b, double tolerance) {
    require_same_dim(rho.matrix(), a, "check_schrodinger");
    require_same_dim(rho.matrix(), b, "check_schrodinger");
    const double var_a = variance(rho, a);
    const double var_b = variance(rho, b);
    const Complex cov = covariance(rho, a, b);
    const Complex comm = commutator_expectation(rho, a, b);
    const double lhs = var_a * var_b - cov.real() * cov.real();
    const double rhs = 0.25 * std::norm(comm);

    ojson inputs = state_inputs(rho, a, b);
    inputs["tolerance"] = tolerance;
    return make_certificate("schrodinger", lhs, rhs, tolerance,
                            {{"var_a", var_a},
                             {"var_b", var_b},
                             {"cov_re", cov.real()},
                             {"cov_im", cov.imag()},
                             {"comm_re", comm.real()},
                             {"comm_im", comm.imag()}},
                            std::move(inputs));
}

Certificate check_generalized_ur(const DensityMatrix &rho,
                                 const HolderPair &hp, Epsilon eps,
                                 const HermitianMatrix &a,
                                 const HermitianMatrix &b, double tolerance) {
    require_same_dim(rho.matrix(), a, "check_generalized_ur");
    require_same_dim(rho.matrix(), b, "check_generalized_ur");
    const double e = eps.value();
    const SchwarzSides s = gen_sides(rho, hp, eps, a, b);
    const Complex comm = commutator_expectation(rho, a, b);
    const Matrix at = center(rho, a);
    const Matrix bt = center(rho, b);
    const Complex comm_centered = rho.expectation(commutator(at, bt));

    const double lhs = s.i_a * s.i_b - s.corr_ab.real() * s.corr_ab.real();
    const double rhs = 0.25 * e * e * std::norm(comm);
    const double diff_residual = std::abs(s.corr_ab - s.corr_ba - e * comm);
    const double diff_centered = std::abs(s.corr_ab - s.corr_ba - e * comm_centered);
    const double modulus_residual =
        std::abs(std::norm(s.corr_ab) -
                 (0.25 * e * e * std::norm(comm) +
                  s.corr_ab.real() * s.corr_ab.real()));

    ojson inputs = state_inputs(rho, a, b);
    add_holder(inputs, hp);
    inputs["epsilon"] = e;
    inputs["tolerance"] = tolerance;
    return make_certificate("generalized_ur", lhs, rhs, tolerance,
                            {{"i_a", s.i_a},
                             {"i_b", s.i_b},
                             {"corr_re", s.corr_ab.real()},
                             {"corr_im", s.corr_ab.imag()},
                             {"corr_ba_re", s.corr_ba.real()},
                             {"corr_ba_im", s.corr_ba.imag()},
                             {"comm_re", comm.real()},
                             {"comm_im", comm.imag()},
                             {"schwarz_margin",
                              s.i_a * s.i_b - std::norm(s.corr_ab)},
                             {"corr_difference_residual", diff_residual},
                             {"corr_difference_centered_residual", diff_centered},
                             {"modulus_residual", modulus_residual}},
                            std::move(inputs));
}

Certificate check_order1(const DensityMatrix &rho, const HolderPair &hp,
                         Epsilon eps, const HermitianMatrix &a,
                         const HermitianMatrix &b, double tolerance) {
    require_same_dim(rho.matrix(), a, "check_order1");
    require_same_dim(rho.matrix(), b, "check_order1");
    const double e = eps.value();
    const SchwarzSides s = gen_sides(rho, hp, eps, a, b);
    const double var_a = variance(rho, a);
    const double var_b = variance(rho, b);
    const Complex cov = covariance(rho, a, b);
    const double i0_a = gen_skew_information(rho, hp, Epsilon(0.0), a);
    const double i0_b = gen_skew_information(rho, hp, Epsilon(0.0), b);

    const double lhs = s.i_a * s.i_b - s.corr_ab.real() * s.corr_ab.real();
    const double rhs = e * e * (var_a * var_b - cov.real() * cov.real());
    const double root_gap = std::sqrt(std::max(0.0, var_a * i0_b)) -
                            std::sqrt(std::max(0.0, var_b * i0_a));
    const double chain_bound = e * root_gap * root_gap;

    ojson inputs = state_inputs(rho, a, b);
    add_holder(inputs, hp);
    inputs["epsilon"] = e;
    inputs["tolerance"] = tolerance;
    return make_certificate("order1", lhs, rhs, tolerance,
                            {{"i_a", s.i_a},
                             {"i_b", s.i_b},
                             {"corr_re", s.corr_ab.real()},
                             {"var_a", var_a},
                             {"var_b", var_b},
                             {"cov_re", cov.real()},
                             {"i0_a", i0_a},
                             {"i0_b", i0_b},
                             {"chain_bound", chain_bound}},
                            std::move(inputs));
}

SpectralTerms spectral_xi_eta(const DensityMatrix &rho, const HolderPair &hp,
                              const HermitianMatrix &a,
                              const HermitianMatrix &b) {
    require_same_dim(rho.matrix(), a, "spectral_xi_eta");
    require_same_dim(rho.matrix(), b, "spectral_xi_eta");
    const std::size_t n = rho.dim();
    const auto &lambda = rho.eigen().values;
    const Matrix &v = rho.eigen().vectors;
    const Matrix vs = v.adjoint();

    auto eigenbasis_centered = [&](const HermitianMatrix &op) {
        Matrix m = vs * op.matrix() * v;
        Complex mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            mean += lambda[i] * m(i, i);
        }
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) -= mean;
        }
        return m;
    };

    SpectralTerms t{eigenbasis_centered(a), eigenbasis_centered(b)};
    auto pw = [](double x, double e) { return e == 0.0 ? 1.0 : std::pow(x, e); };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double w = pw(lambda[i], hp.inv_p()) * pw(lambda[j], hp.inv_p_star());
            const double s = 0.5 * (lambda[i] + lambda[j]);
            const Complex aij = t.a(i, j);
            const Complex aji = t.a(j, i);
            const Complex bij = t.b(i, j);
            const Complex bji = t.b(j, i);
            t.var_a += s * (aij * aji).real();
            t.var_b += s * (bij * bji).real();
            t.cov_re += lambda[i] * (aij * bji).real();
            t.sum_aa += w * (aij * aji).real();
            t.sum_bb += w * (bij * bji).real();
            t.sum_ab += w * (aij * bji).real();
            t.sum_ba += w * (bij * aji).real();
        }
    }
    t.xi = t.var_a * t.sum_bb + t.var_b * t.sum_aa - t.sum_aa * t.sum_bb;
    const double cross = t.sum_ab + t.sum_ba;
    t.eta = t.cov_re * t.sum_ab + t.cov_re * t.sum_ba - 0.25 * cross * cross;
    return t;
}

Certificate check_order2(const DensityMatrix &rho, const HolderPair &hp,
                         const HermitianMatrix &a, const HermitianMatrix &b,
                         double tolerance) {
    require_same_dim(rho.matrix(), a, "check_order2");
    require_same_dim(rho.matrix(), b, "check_order2");
    const Epsilon zero(0.0);
    const double var_a = variance(rho, a);
    const double var_b = variance(rho, b);
    const Complex cov = covariance(rho, a, b);
    const double i0_a = gen_skew_information(rho, hp, zero, a);
    const double i0_b = gen_skew_information(rho, hp, zero, b);
    const Complex corr0 = gen_skew_correlation(rho, hp, zero, a, b);
    const SpectralTerms st = spectral_xi_eta(rho, hp, a, b);

    const double lhs = var_a * var_b - cov.real() * cov.real();
    const double rhs = i0_a * i0_b - corr0.real() * corr0.real();

    ojson inputs = state_inputs(rho, a, b);
    add_holder(inputs, hp);
    inputs["tolerance"] = tolerance;
    return make_certificate(
        "order2", lhs, rhs, tolerance,
        {{"var_a", var_a},
         {"var_b", var_b},
         {"cov_re", cov.real()},
         {"i0_a", i0_a},
         {"i0_b", i0_b},
         {"corr0_re", corr0.real()},
         {"corr0_im", corr0.imag()},
         {"xi", st.xi},
         {"eta", st.eta},
         {"reduction_residual", (lhs - rhs) - (st.xi - st.eta)},
         {"spectral_i0_a", st.ip0_a()},
         {"spectral_i0_b", st.ip0_b()}},
        std::move(inputs));
}

Certificate check_lz_theorem1(const DensityMatrix &rho,
                              const HermitianMatrix &a,
                              const HermitianMatrix &b, double tolerance) {
    require_same_dim(rho.matrix(), a, "check_lz_theorem1");
    require_same_dim(rho.matrix(), b, "check_lz_theorem1");
    const double i_a = wy_skew_information(rho, a);
    const double i_b = wy_skew_information(rho, b);
    const Complex corr = lz_correlation(rho, a, b);
    const Complex comm = commutator_expectation(rho, a, b);
    const double lhs = i_a * i_b - corr.real() * corr.real();
    const double rhs = 0.25 * std::norm(comm);

    const HermitianMatrix at(center(rho, a));
    const HermitianMatrix bt(center(rho, b));
    const double ic_a = wy_skew_information(rho, at);
    const double ic_b = wy_skew_information(rho, bt);
    const Complex corr_c = lz_correlation(rho, at, bt);
    const double lhs_c = ic_a * ic_b - corr_c.real() * corr_c.real();

    ojson inputs = state_inputs(rho, a, b);
    inputs["tolerance"] = tolerance;
    return make_certificate("lz_theorem1", lhs, rhs, tolerance,
                            {{"i_a", i_a},
                             {"i_b", i_b},
                             {"corr_re", corr.real()},
                             {"corr_im", corr.imag()},
                             {"comm_re", comm.real()},
                             {"comm_im", comm.imag()},
                             {"comm_abs2", std::norm(comm)},
                             {"lz_centered_lhs", lhs_c},
                             {"lz_centered_margin", lhs_c - rhs}},
                            std::move(inputs));
}

CounterexampleInstance counterexample_instance() {
    const Complex i{0.0, 1.0};
    Matrix rho(2, {0.75, 0.0, 0.0, 0.25});
    Matrix a(2, {0.0, i, -i, 0.0});
    Matrix b(2, {0.0, 1.0, 1.0, 0.0});
    return {DensityMatrix(rho), HermitianMatrix(a), HermitianMatrix(b)};
}

Certificate reproduce_counterexample() {
    const auto inst = counterexample_instance();
    return check_lz_theorem1(inst.rho, inst.a, inst.b);
}

std::vector<std::string> reproduction_failures(const Certificate &c) {
    std::vector<std::string> failures;
    auto expect = [&](const char *what, double got, double want, double tol) {
        if (!(std::abs(got - want) <= tol)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << what << ": got " << got << ", expected " << want
                << " within " << tol;
            failures.push_back(msg.str());
        }
    };
    expect("lhs = (7-4*sqrt(3))/4", c.lhs, (7.0 - 4.0 * std::sqrt(3.0)) / 4.0,
           1e-12);
    expect("rhs = 1/4", c.rhs, 0.25, 1e-15);
    expect("|Tr(rho[A,B])|^2 = 1", c.detail("comm_abs2"), 1.0, 1e-12);
    expect("Re Corr_rho(A,B) = 0", c.detail("corr_re"), 0.0, 1e-12);
    if (c.verdict != Verdict::violated) {
        failures.push_back("verdict: got " + to_string(c.verdict) +
                           ", expected violated");
    }
    return failures;
}

Certificate evaluate(InequalityId id, const Instance &in,
                     const CheckParams &params) {
    auto need = [&](bool ok, const char *slot) {
        if (!ok) {
            throw InvalidInput(to_string(id) + " requires input " + slot);
        }
    };
    const double tol = params.tolerance;
    switch (id) {
    case InequalityId::fujii:
        need(in.a.has_value(), "A");
        need(in.x.has_value(), "X");
        need(params.pair.has_value(), "pair");
        return check_fujii(*in.a, HermitianMatrix(*in.x), *params.pair, tol);
    case InequalityId::gfujii:
        need(in.a.has_value(), "A");
        need(in.b.has_value(), "B");
        need(in.x.has_value(), "X");
        need(params.pair.has_value(), "pair");
        return check_gfujii(*in.a, *in.b, *in.x, *params.pair, tol);
    default:
        break;
    }
    need(in.rho.has_value(), "rho");
    need(in.a.has_value(), "A");
    need(in.b.has_value(), "B");
    switch (id) {
    case InequalityId::schrodinger:
        return check_schrodinger(*in.rho, *in.a, *in.b, tol);
    case InequalityId::generalized_ur:
        return check_generalized_ur(*in.rho, params.hp, params.eps, *in.a,
                                    *in.b, tol);
    case InequalityId::order1:
        return check_order1(*in.rho, params.hp, params.eps, *in.a, *in.b, tol);
    case InequalityId::order2:
        return check_order2(*in.rho, params.hp, *in.a, *in.b, tol);
    default:
        return check_lz_theorem1(*in.rho, *in.a, *in.b, tol);
    }
}

Certificate recheck(const Certificate &c) {
    const InequalityId id = parse_inequality(c.inequality_id);
    const auto &j = c.inputs;
    Instance in;
    CheckParams params;
    if (j.contains("rho")) {
        in.rho.emplace(matrix_from_json(j["rho"]));
    }
    if (j.contains("A")) {
        in.a.emplace(matrix_from_json(j["A"]));
    }
    if (j.contains("B")) {
        in.b.emplace(matrix_from_json(j["B"]));
    }
    if (j.contains("X")) {
        in.x.emplace(matrix_from_json(j["X"]));
    }
    if (j.contains("p")) {
        params.hp = HolderPair::from_p(exponent_from_json(j["p"]));
    }
    if (j.contains("epsilon")) {
        params.eps = Epsilon(j["epsilon"].get<double>());
    }
    if (j.contains("pair")) {
        params.pair.emplace(pair_from_json(j["pair"]));
    }
    if (j.contains("tolerance")) {
        params.tolerance = j["tolerance"].get<double>();
    }
    return evaluate(id, in, params);
}

} // namespace skewcert
