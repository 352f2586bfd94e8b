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
#include "skewcert/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>
#include <ostream>
#include <string>
#include <thread>

#include "skewcert/errors.hpp"

namespace skewcert {

void SamplerConfig::validate() const {
    if (dim < 2 || dim > 32) {
        throw InvalidInput("sampler dimension must lie in [2, 32], got " +
                           std::to_string(dim));
    }
}

Matrix ginibre(Xoshiro256 &rng, std::size_t dim) {
    Matrix g(dim);
    const double scale = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(i, j) = Complex(re * scale, im * scale);
        }
    }
    return g;
}

DensityMatrix sample_density(Xoshiro256 &rng, std::size_t dim) {
    const Matrix g = ginibre(rng, dim);
    Matrix w = g * g.adjoint();
    w *= 1.0 / w.trace().real();
    return DensityMatrix(HermitianMatrix(w).matrix());
}

DensityMatrix sample_density(const SamplerConfig &cfg) {
    cfg.validate();
    Xoshiro256 rng(cfg.seed);
    return sample_density(rng, cfg.dim);
}

HermitianMatrix sample_hermitian(Xoshiro256 &rng, std::size_t dim) {
    const Matrix g = ginibre(rng, dim);
    Matrix h = g + g.adjoint();
    h *= 0.5;
    return HermitianMatrix(h);
}

HermitianMatrix sample_hermitian(const SamplerConfig &cfg) {
    cfg.validate();
    Xoshiro256 rng(cfg.seed);
    return sample_hermitian(rng, cfg.dim);
}

namespace {

std::pair<double, double> sampling_window(const Interval &d) {
    double lo = d.lo;
    double hi = d.hi;
    if (!std::isfinite(lo) && !std::isfinite(hi)) {
        return {-3.0, 3.0};
    }
    if (!std::isfinite(hi)) {
        hi = lo + 3.0;
    }
    if (!std::isfinite(lo)) {
        lo = hi - 3.0;
    }
    const double inset = 0.01 * (hi - lo);
    return {d.lo_open ? lo + inset : lo, d.hi_open ? hi - inset : hi};
}

} // namespace

HermitianMatrix sample_in_domain(Xoshiro256 &rng, std::size_t dim,
                                 const Interval &domain) {
    const EigenDecomposition basis = eig_hermitian(sample_hermitian(rng, dim));
    const auto [lo, hi] = sampling_window(domain);
    std::vector<double> values(dim);
    for (double &v : values) {
        v = lo + (hi - lo) * rng.uniform();
    }
    return HermitianMatrix(basis.synthesize(values));
}

Instance random_instance(InequalityId id, Xoshiro256 &rng, std::size_t dim,
                         const std::optional<ScalarFnPair> &pair) {
    Instance in;
    if (uses_pair(id)) {
        if (!pair) {
            throw InvalidInput(to_string(id) + " requires a function pair");
        }
        in.a = sample_in_domain(rng, dim, pair->domain);
        if (id == InequalityId::fujii) {
            in.x = sample_hermitian(rng, dim).matrix();
        } else {
            in.b = sample_in_domain(rng, dim, pair->domain);
            in.x = ginibre(rng, dim);
        }
        return in;
    }
    in.rho = sample_density(rng, dim);
    in.a = sample_hermitian(rng, dim);
    in.b = sample_hermitian(rng, dim);
    return in;
}

unsigned configured_threads() {
    const char *env = std::getenv("SKEWCERT_THREADS");
    if (env == nullptr) {
        return 1;
    }
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) {
        return 1;
    }
    return static_cast<unsigned>(std::min<long>(v, 256));
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)> &fn) {
    std::vector<std::exception_ptr> errors(count);
    auto run = [&](std::size_t i) {
        try {
            fn(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    const std::size_t workers =
        std::min<std::size_t>(std::max(1U, threads), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            run(i);
        }
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < count; i += workers) {
                    run(i);
                }
            });
        }
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t cell,
                       std::uint64_t trial) {
    return seed ^ mix64(mix64(cell) ^ trial);
}

namespace {

// Parameter vector layout for the search.
struct Layout {
    std::size_t n = 0;
    bool state = false;      // leading n(n+1) entries: factor L
    std::size_t hermitian = 0; // number of n² Hermitian blocks
    bool general_x = false; // trailing 2n² entries: complex X

    [[nodiscard]] std::size_t size() const {
        return (state ? n * (n + 1) : 0) + hermitian * n * n +
               (general_x ? 2 * n * n : 0);
    }
};

Layout layout_for(InequalityId id, std::size_t n) {
    switch (id) {
    case InequalityId::fujii:
        return {n, false, 2, false};
    case InequalityId::gfujii:
        return {n, false, 2, true};
    default:
        return {n, true, 2, false};
    }
}

void push_hermitian(std::vector<double> &out, const Matrix &h) {
    for (std::size_t i = 0; i < h.dim(); ++i) {
        for (std::size_t j = i; j < h.dim(); ++j) {
            out.push_back(h(i, j).real());
            if (j != i) {
                out.push_back(h(i, j).imag());
            }
        }
    }
}

Matrix read_hermitian(const double *&p, std::size_t n) {
    Matrix h(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (j == i) {
                h(i, i) = *p++;
            } else {
                const Complex z(p[0], p[1]);
                p += 2;
                h(i, j) = z;
                h(j, i) = std::conj(z);
            }
        }
    }
    return h;
}

Matrix cholesky_lower(const Matrix &m) {
    const std::size_t n = m.dim();
    Matrix l(n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = m(j, j).real();
        for (std::size_t k = 0; k < j; ++k) {
            d -= std::norm(l(j, k));
        }
        const double ljj = std::sqrt(std::max(d, 1e-300));
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            Complex s = m(i, j);
            for (std::size_t k = 0; k < j; ++k) {
                s -= l(i, k) * std::conj(l(j, k));
            }
            l(i, j) = s / ljj;
        }
    }
    return l;
}

Matrix normalized(Matrix m) {
    const double norm = m.frobenius_norm();
    if (norm > 1e-300) {
        m *= std::sqrt(static_cast<double>(m.dim())) / norm;
    }
    return m;
}

double map_to_domain(double h, const Interval &d) {
    const double sq = h * h;
    const bool lo_fin = std::isfinite(d.lo);
    const bool hi_fin = std::isfinite(d.hi);
    if (lo_fin && hi_fin) {
        const double inset = (d.lo_open || d.hi_open) ? 1e-6 : 0.0;
        const double width = (d.hi - d.lo) * (1.0 - 2.0 * inset);
        return d.lo + (d.hi - d.lo) * inset + width * sq / (1.0 + sq);
    }
    if (lo_fin) {
        return d.lo + (d.lo_open ? 1e-3 : 0.0) + sq;
    }
    if (hi_fin) {
        return d.hi - (d.hi_open ? 1e-3 : 0.0) - sq;
    }
    return h;
}

HermitianMatrix into_domain(const Matrix &raw, const Interval &d) {
    const EigenDecomposition e = eig_hermitian(HermitianMatrix(raw));
    std::vector<double> values(e.values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        values[k] = map_to_domain(e.values[k], d);
    }
    return HermitianMatrix(e.synthesize(values));
}

Instance decode(InequalityId id, const Layout &lay,
                const std::vector<double> &params,
                const std::optional<ScalarFnPair> &pair) {
    const std::size_t n = lay.n;
    const double *p = params.data();
    Instance in;
    if (lay.state) {
        Matrix l(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                l(i, j) = Complex(p[0], p[1]);
                p += 2;
            }
        }
        Matrix w = l * l.adjoint();
        const double tr = w.trace().real();
        if (!(tr > 0.0)) {
            throw InvalidInput("degenerate state factor");
        }
        w *= 1.0 / tr;
        in.rho.emplace(HermitianMatrix(w).matrix());
        in.a = HermitianMatrix(normalized(read_hermitian(p, n)));
        in.b = HermitianMatrix(normalized(read_hermitian(p, n)));
        return in;
    }
    const Matrix raw_a = read_hermitian(p, n);
    in.a = into_domain(raw_a, pair->domain);
    if (id == InequalityId::fujii) {
        in.x = normalized(read_hermitian(p, n));
        return in;
    }
    const Matrix raw_b = read_hermitian(p, n);
    in.b = into_domain(raw_b, pair->domain);
    Matrix x(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            x(i, j) = Complex(p[0], p[1]);
            p += 2;
        }
    }
    in.x = normalized(x);
    return in;
}

std::vector<double> restart_params(const Layout &lay, Xoshiro256 &rng) {
    std::vector<double> out;
    out.reserve(lay.size());
    const std::size_t n = lay.n;
    if (lay.state) {
        const Matrix l = cholesky_lower(sample_density(rng, n).matrix());
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                out.push_back(l(i, j).real());
                out.push_back(l(i, j).imag());
            }
        }
    }
    for (std::size_t k = 0; k < lay.hermitian; ++k) {
        push_hermitian(out, sample_hermitian(rng, n).matrix());
    }
    if (lay.general_x) {
        const Matrix g = ginibre(rng, n);
        for (const Complex &z : g.entries()) {
            out.push_back(z.real());
            out.push_back(z.imag());
        }
    }
    return out;
}

} // namespace

SearchResult falsify(InequalityId id, const FalsifyOptions &opt) {
    SamplerConfig{opt.dim, opt.seed, Ensemble::ginibre_state}.validate();
    if (opt.budget < 1) {
        throw InvalidInput("falsify: budget must be >= 1");
    }
    if (uses_pair(id) && !opt.params.pair) {
        throw InvalidInput(to_string(id) + " requires a function pair");
    }
    const Layout lay = layout_for(id, opt.dim);
    Xoshiro256 rng(opt.seed);

    SearchResult result{id, Certificate{}, 0, 0, {}, opt.seed, 0};
    double best = std::numeric_limits<double>::infinity();
    bool have_best = false;
    bool stop = false;

    auto eval = [&](const std::vector<double> &params) -> double {
        ++result.trials_used;
        try {
            Certificate c =
                evaluate(id, decode(id, lay, params, opt.params.pair),
                         opt.params);
            if (c.verdict == Verdict::inconclusive ||
                !std::isfinite(c.margin)) {
                ++result.failed_evaluations;
                return std::numeric_limits<double>::infinity();
            }
            const double m = c.margin;
            if (!have_best || m < best) {
                best = m;
                have_best = true;
                result.best_certificate = std::move(c);
                result.improvement_trace.emplace_back(result.trials_used, m);
                if (opt.stop_at_margin && m < *opt.stop_at_margin) {
                    stop = true;
                }
            }
            return m;
        } catch (const Error &) {
            ++result.failed_evaluations;
            return std::numeric_limits<double>::infinity();
        }
    };
    auto exhausted = [&] { return stop || result.trials_used >= opt.budget; };

    while (!exhausted()) {
        ++result.restarts;
        std::vector<double> params = restart_params(lay, rng);
        double current = eval(params);
        double sigma = 0.1;
        while (!exhausted() && sigma >= 1e-6) {
            bool improved = false;
            for (std::size_t k = 0; k < params.size() && !exhausted(); ++k) {
                const double saved = params[k];
                params[k] = saved + sigma;
                double m = eval(params);
                if (m < current) {
                    current = m;
                    improved = true;
                    continue;
                }
                if (exhausted()) {
                    params[k] = saved;
                    break;
                }
                params[k] = saved - sigma;
                m = eval(params);
                if (m < current) {
                    current = m;
                    improved = true;
                } else {
                    params[k] = saved;
                }
            }
            if (!improved) {
                sigma *= 0.5;
            }
        }
    }
    if (!have_best) {
        throw ConsistencyError("falsify: every evaluation failed");
    }
    return result;
}

std::vector<SweepRow> sweep(InequalityId id, const SweepOptions &opt) {
    SamplerConfig{opt.dim, opt.seed, Ensemble::ginibre_state}.validate();
    if (opt.p_grid.empty() || opt.eps_grid.empty()) {
        throw InvalidInput("sweep: grids must be nonempty");
    }
    if (uses_pair(id) && !opt.pair) {
        throw InvalidInput(to_string(id) + " requires a function pair");
    }
    std::vector<SweepRow> rows;
    std::uint64_t cell = 0;
    for (double p : opt.p_grid) {
        for (double e : opt.eps_grid) {
            CheckParams params{HolderPair::from_p(p), Epsilon(e), opt.pair,
                               opt.tolerance};
            std::vector<Certificate> certs(opt.trials_per_cell);
            parallel_for(certs.size(), opt.threads, [&](std::size_t t) {
                Xoshiro256 rng(sub_seed(opt.seed, cell, t));
                const Instance in = random_instance(id, rng, opt.dim, opt.pair);
                certs[t] = evaluate(id, in, params);
            });
            SweepRow row{p, e, 0.0, 0.0, 0, opt.trials_per_cell};
            if (certs.empty()) {
                row.min_margin = std::numeric_limits<double>::quiet_NaN();
                row.mean_margin = std::numeric_limits<double>::quiet_NaN();
            } else {
                double lo = std::numeric_limits<double>::infinity();
                double sum = 0.0;
                for (const auto &c : certs) {
                    lo = std::min(lo, c.margin);
                    sum += c.margin;
                    row.violations += c.verdict == Verdict::violated ? 1 : 0;
                }
                row.min_margin = lo;
                row.mean_margin = sum / static_cast<double>(certs.size());
            }
            rows.push_back(row);
            ++cell;
        }
    }
    return rows;
}

std::string format_g17(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    out << "p,epsilon,min_margin,mean_margin,violations\n";
    for (const auto &r : rows) {
        out << format_g17(r.p) << ',' << format_g17(r.epsilon) << ','
            << format_g17(r.min_margin) << ',' << format_g17(r.mean_margin)
            << ',' << r.violations << '\n';
    }
}

void write_trace_csv(std::ostream &out, const SearchResult &result) {
    out << "trial,margin\n";
    for (const auto &[trial, margin] : result.improvement_trace) {
        out << trial << ',' << format_g17(margin) << '\n';
    }
}

} // namespace skewcert
