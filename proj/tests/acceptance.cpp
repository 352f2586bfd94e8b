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
// Acceptance gate. One PASS/FAIL line per criterion; nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "skewcert/cli.hpp"
#include "skewcert/explorer.hpp"
#include "skewcert/inequalities.hpp"
#include "support.hpp"

using namespace skewcert;
using namespace skewcert::testing;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

// Pinned tolerances.
constexpr double kCertTol = 1e-9;
constexpr double kReproLhsTol = 1e-12;
constexpr double kReproRhsTol = 1e-15;
constexpr double kReproCommTol = 1e-12;
constexpr double kReproSeconds = 0.1;
constexpr double kTheoremSeconds = 60.0;
constexpr double kXiEtaTol = 1e-9;
constexpr double kBlockTol = 1e-10;
constexpr double kOracleTol = 1e-10;
constexpr double kIdentityTol = 1e-10;
constexpr double kCommRealTol = 1e-12;
constexpr double kLzMarginTarget = -0.15;
constexpr double kFalsifySeconds = 120.0;

constexpr std::uint64_t kTheoremTrials = 1000;
constexpr std::uint64_t kLemmaTrials = 500;
constexpr std::uint64_t kFalsifyBudget = 10000;

const std::vector<double> kPGrid{1.0, 1.5, 2.0, 3.0, 10.0, kInf};
const std::vector<double> kEpsGrid{0.0, 0.1, 1.0};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Gate {
    int failures = 0;
    void report(int id, const std::string &title, bool ok,
                const std::string &summary) {
        std::printf("[%s] criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", id,
                    title.c_str(), summary.c_str());
        std::fflush(stdout);
        if (!ok) {
            ++failures;
        }
    }
};

std::string fmt(const char *format, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, format, a);
    return buf;
}

double pow0(double x, double t) { return t == 0.0 ? 1.0 : std::pow(x, t); }

/// Eigenbasis double sum for the matrix as given.
double double_sum_wyd(const DensityMatrix &rho, const HolderPair &hp,
                      const Matrix &a) {
    const auto &e = rho.eigen();
    const Matrix m = e.vectors.adjoint() * a * e.vectors;
    double total = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            const double li = std::max(0.0, e.values[i]);
            const double lj = std::max(0.0, e.values[j]);
            total += (0.5 * (li + lj) -
                      pow0(li, hp.inv_p()) * pow0(lj, hp.inv_p_star())) *
                     std::norm(m(i, j));
        }
    }
    return total;
}

/// Worst deviations collected across the state-based suites.
struct Residuals {
    double oracle = 0.0;
    double shift = 0.0;
    double corr_diff = 0.0;
    double modulus = 0.0;
    double comm_re = 0.0;
    std::uint64_t instances = 0;

    void observe_oracles(const DensityMatrix &rho, const HolderPair &hp,
                         const HermitianMatrix &a) {
        const double tr = wyd_information(rho, hp, a);
        const double cm = wyd_information(rho, hp, a, WydForm::commutator);
        const double ds = double_sum_wyd(rho, hp, a);
        oracle = std::max({oracle, std::abs(tr - cm), std::abs(tr - ds)});
        for (double c : {-2.0, 5.0}) {
            shift = std::max(shift,
                             std::abs(tr - wyd_information(rho, hp, a.shifted(c))));
        }
    }
};

Xoshiro256 trial_rng(std::uint64_t seed, std::uint64_t cell, std::uint64_t t) {
    return Xoshiro256(sub_seed(seed, cell, t));
}

std::size_t suite_dim(std::uint64_t t, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(t % (hi - lo + 1));
}

// 1
void reproduction(Gate &gate) {
    const auto t0 = Clock::now();
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"reproduce", "--json"}, out, err);
    const auto c = reproduce_counterexample();
    const double elapsed = seconds_since(t0);

    const double lhs_err = std::abs(c.lhs - (7.0 - 4.0 * std::sqrt(3.0)) / 4.0);
    const double rhs_err = std::abs(c.rhs - 0.25);
    const double comm_err = std::abs(c.detail("comm_abs2") - 1.0);
    const bool ok = code == cli::kHolds && reproduction_failures(c).empty() &&
                    lhs_err <= kReproLhsTol && rhs_err <= kReproRhsTol &&
                    comm_err <= kReproCommTol && c.verdict == Verdict::violated &&
                    elapsed < kReproSeconds;
    std::ostringstream s;
    s.precision(17);
    s << "lhs=" << c.lhs << " rhs=" << c.rhs << " margin=" << c.margin
      << " verdict=" << to_string(c.verdict) << " exit=" << code
      << " time=" << elapsed << "s";
    gate.report(1, "counter-example reproduction", ok, s.str());
}

// 2, 3, 5, 6: one pass over the shared (p, eps) instance grid.
void state_suites(Gate &gate, Residuals &res) {
    const std::uint64_t seed = 20240101;
    std::uint64_t ur_viol = 0;
    std::uint64_t ur_total = 0;
    std::uint64_t o1_viol = 0;
    std::uint64_t o2_viol = 0;
    std::uint64_t o2_total = 0;
    std::uint64_t xi_eta_bad = 0;
    double ur_worst = kInf;
    double o1_worst = kInf;
    double o2_worst = kInf;
    double xi_eta_worst = kInf;

    const auto t0 = Clock::now();
    double ur_seconds = 0.0;
    std::uint64_t cell = 0;
    for (double p : kPGrid) {
        const auto hp = HolderPair::from_p(p);
        for (double e : kEpsGrid) {
            const Epsilon eps(e);
            for (std::uint64_t t = 0; t < kTheoremTrials; ++t) {
                auto rng = trial_rng(seed, cell, t);
                const std::size_t n = suite_dim(t, 2, 5);
                const auto rho = sample_density(rng, n);
                const auto a = sample_hermitian(rng, n);
                const auto b = sample_hermitian(rng, n);

                const auto t1 = Clock::now();
                const auto g = check_generalized_ur(rho, hp, eps, a, b, kCertTol);
                ur_seconds += seconds_since(t1);
                ++ur_total;
                ur_viol += g.verdict != Verdict::holds;
                ur_worst = std::min(ur_worst, g.margin);
                res.corr_diff = std::max(res.corr_diff, g.detail("corr_difference_residual"));
                res.modulus = std::max(res.modulus, g.detail("modulus_residual"));
                res.comm_re = std::max(res.comm_re, std::abs(g.detail("comm_re")));

                const auto o1 = check_order1(rho, hp, eps, a, b, kCertTol);
                o1_viol += o1.verdict != Verdict::holds;
                o1_worst = std::min(o1_worst, o1.margin);

                if (e == kEpsGrid.front()) {
                    const auto o2 = check_order2(rho, hp, a, b, kCertTol);
                    ++o2_total;
                    o2_viol += o2.verdict != Verdict::holds;
                    o2_worst = std::min(o2_worst, o2.margin);
                    const auto terms = spectral_xi_eta(rho, hp, a, b);
                    const double gap = terms.xi - terms.eta;
                    xi_eta_worst = std::min(xi_eta_worst, gap);
                    xi_eta_bad += gap < -kXiEtaTol;
                }

                res.observe_oracles(rho, hp, a);
                res.observe_oracles(rho, hp, b);
                ++res.instances;
            }
            ++cell;
        }
    }
    const double total = seconds_since(t0);

    gate.report(2, "generalized uncertainty relation suite",
                ur_viol == 0 && ur_total == 18 * kTheoremTrials &&
                    total < kTheoremSeconds,
                std::to_string(ur_total) + " instances, " +
                    std::to_string(ur_viol) + " not holding, worst margin " +
                    fmt("%.3e", ur_worst) + ", checker time " +
                    fmt("%.2f", ur_seconds) + "s, suite time " +
                    fmt("%.2f", total) + "s");
    gate.report(3, "order-1 and order-2 suites",
                o1_viol == 0 && o2_viol == 0 && xi_eta_bad == 0 &&
                    o2_total == 6 * kTheoremTrials,
                "order1 " + std::to_string(ur_total) + " instances worst " +
                    fmt("%.3e", o1_worst) + ", order2 " +
                    std::to_string(o2_total) + " instances worst " +
                    fmt("%.3e", o2_worst) + ", min(xi-eta) " +
                    fmt("%.3e", xi_eta_worst) + ", " +
                    std::to_string(o1_viol + o2_viol + xi_eta_bad) +
                    " failures, suite time " + fmt("%.2f", total) + "s");
}

// 4
void lemma_suites(Gate &gate) {
    const std::uint64_t seed = 777;
    std::uint64_t violations = 0;
    std::uint64_t total = 0;
    double worst = kInf;
    double block = 0.0;
    std::uint64_t cell = 0;
    for (const auto &pair : suite_pairs()) {
        for (auto id : {InequalityId::fujii, InequalityId::gfujii}) {
            CheckParams params{.pair = pair, .tolerance = kCertTol};
            for (std::uint64_t t = 0; t < kLemmaTrials; ++t) {
                auto rng = trial_rng(seed, cell, t);
                const auto in = random_instance(id, rng, suite_dim(t, 2, 6), pair);
                const auto c = evaluate(id, in, params);
                ++total;
                violations += c.verdict != Verdict::holds;
                worst = std::min(worst, c.margin);
                if (id == InequalityId::gfujii) {
                    block = std::max({block, c.detail("block_cross_residual"),
                                      c.detail("block_product_residual")});
                }
            }
            ++cell;
        }
    }
    gate.report(4, "trace inequality lemma suites",
                violations == 0 && block <= kBlockTol &&
                    total == suite_pairs().size() * 2 * kLemmaTrials,
                std::to_string(total) + " instances over " +
                    std::to_string(suite_pairs().size()) + " pairs, " +
                    std::to_string(violations) + " not holding, worst margin " +
                    fmt("%.3e", worst) + ", max block-embed residual " +
                    fmt("%.3e", block));
}

void oracle_and_identities(Gate &gate, const Residuals &res) {
    gate.report(5, "oracle equivalence and shift invariance",
                res.oracle <= kOracleTol && res.shift <= kOracleTol,
                std::to_string(2 * res.instances) +
                    " evaluations, max form/double-sum gap " +
                    fmt("%.3e", res.oracle) + ", max shift gap " +
                    fmt("%.3e", res.shift));
    gate.report(6, "identity residuals",
                res.corr_diff <= kIdentityTol && res.modulus <= kIdentityTol &&
                    res.comm_re <= kCommRealTol,
                "max correlation-difference residual " + fmt("%.3e", res.corr_diff) +
                    ", max modulus-decomposition residual " +
                    fmt("%.3e", res.modulus) + ", max |Re Tr(rho[A,B])| " +
                    fmt("%.3e", res.comm_re));
}

// 7
void falsification(Gate &gate) {
    const auto t0 = Clock::now();
    FalsifyOptions lz{.dim = 2, .budget = kFalsifyBudget, .seed = 1};
    lz.params.tolerance = kCertTol;
    const auto found = falsify(InequalityId::lz_theorem1, lz);
    const double lz_margin = found.best_certificate.margin;

    std::uint64_t runs = 0;
    std::uint64_t bad = 0;
    double worst = kInf;
    std::string worst_name;
    auto record = [&](const SearchResult &r, const std::string &name) {
        ++runs;
        const double m = r.best_certificate.margin;
        bad += m < -kCertTol || r.failed_evaluations > 0;
        if (m < worst) {
            worst = m;
            worst_name = name;
        }
    };
    for (std::size_t dim = 2; dim <= 4; ++dim) {
        for (auto id : all_inequalities()) {
            if (!is_proven(id)) {
                continue;
            }
            FalsifyOptions opt{.dim = dim, .budget = kFalsifyBudget, .seed = 1};
            opt.params.hp = HolderPair::from_p(3.0);
            opt.params.eps = Epsilon(0.1);
            opt.params.tolerance = kCertTol;
            const auto label = to_string(id) + "@" + std::to_string(dim);
            if (!uses_pair(id)) {
                record(falsify(id, opt), label);
                continue;
            }
            for (const auto &pair : suite_pairs()) {
                opt.params.pair = pair;
                record(falsify(id, opt), label + "[" + pair.id() + "]");
            }
        }
    }
    const double elapsed = seconds_since(t0);
    std::ostringstream s;
    s.precision(17);
    s << "lz best margin " << lz_margin << "; " << runs
      << " proven searches, worst " << worst << " (" << worst_name << "), "
      << bad << " below tolerance; time " << elapsed << "s";
    gate.report(7, "falsification", lz_margin <= kLzMarginTarget && bad == 0 &&
                                        elapsed < kFalsifySeconds,
                s.str());
}

// 8
void determinism(Gate &gate) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() /
                         ("skewcert_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto slurp = [](const fs::path &p) {
        std::ifstream f(p);
        std::stringstream ss;
        ss << f.rdbuf();
        return ss.str();
    };
    const std::string file = (dir / "out.csv").string();
    const std::vector<std::vector<std::string>> commands{
        {"verify", "generalized_ur", "--random", "200", "--dim", "3", "--seed",
         "7", "--p", "2", "--eps", "0.5", "--json"},
        {"verify", "gfujii", "--pair", "power:0.5,power:0.5", "--random", "100",
         "--dim", "4", "--seed", "3"},
        {"falsify", "lz_theorem1", "--dim", "2", "--budget", "3000", "--seed",
         "11", "--out", file},
        {"sweep", "order1", "--p-grid", "1,2,inf", "--eps-grid", "0,0.5",
         "--trials", "50", "--dim", "3", "--seed", "5", "--out", file},
        {"sweep", "lz_theorem1", "--trials", "100", "--seed", "5"},
    };
    int mismatches = 0;
    for (const auto &cmd : commands) {
        std::string outs[2];
        std::string files[2];
        int codes[2];
        for (int k = 0; k < 2; ++k) {
            std::ostringstream out;
            std::ostringstream err;
            std::error_code ec;
            fs::remove(file, ec);
            codes[k] = cli::run(cmd, out, err);
            outs[k] = out.str();
            files[k] = slurp(file);
        }
        mismatches += outs[0] != outs[1] || files[0] != files[1] ||
                      codes[0] != codes[1] || outs[0].empty() ||
                      codes[0] == cli::kInputError;
    }
    fs::remove_all(dir);
    gate.report(8, "byte-identical reruns", mismatches == 0,
                std::to_string(commands.size()) + " commands run twice, " +
                    std::to_string(mismatches) + " mismatches");
}

void guarded(Gate &gate, int id, const std::function<void()> &fn) {
    try {
        fn();
    } catch (const std::exception &e) {
        gate.report(id, "aborted", false, e.what());
    }
}

} // namespace

int main() {
    Gate gate;
    Residuals res;
    guarded(gate, 1, [&] { reproduction(gate); });
    guarded(gate, 2, [&] { state_suites(gate, res); });
    guarded(gate, 4, [&] { lemma_suites(gate); });
    guarded(gate, 5, [&] { oracle_and_identities(gate, res); });
    guarded(gate, 7, [&] { falsification(gate); });
    guarded(gate, 8, [&] { determinism(gate); });
    std::printf("%s: %d criterion failure(s)\n",
                gate.failures == 0 ? "ACCEPTED" : "REJECTED", gate.failures);
    return gate.failures == 0 ? 0 : 1;
}
