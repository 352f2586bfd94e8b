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
#include "skewcert/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewcert/errors.hpp"
#include "skewcert/explorer.hpp"
#include "skewcert/inequalities.hpp"
#include "skewcert/quantinfo.hpp"

#ifndef SKEWCERT_VERSION
#define SKEWCERT_VERSION "dev"
#endif

namespace skewcert::cli {

using ojson = nlohmann::ordered_json;

namespace {

struct CommonFlags {
    std::uint64_t seed = 0;
    double tolerance = kDefaultTolerance;
    std::string out;
    bool json = false; // compact single-line JSON
    std::string manifest;
};

struct PairFlags {
    std::string pair = "power:1,power:1";
    std::string pair_class;
    std::string domain;
};

struct InputFiles {
    std::string rho;
    std::string a;
    std::string b;
    std::string x;
};

void add_common(CLI::App *cmd, CommonFlags &c, bool with_seed) {
    if (with_seed) {
        cmd->add_option("--seed", c.seed, "64-bit PRNG seed");
    }
    cmd->add_option("--tolerance", c.tolerance,
                    "certificate tolerance (relative to max(1,|lhs|,|rhs|))");
    cmd->add_option("--out", c.out, "output file");
    cmd->add_flag("--json", c.json, "compact JSON on stdout");
    cmd->add_option("--manifest", c.manifest, "write a run manifest here");
}

void add_pair(CLI::App *cmd, PairFlags &p) {
    cmd->add_option("--pair", p.pair,
                    "function pair f,g (e.g. power:0.5,power:0.5)");
    cmd->add_option("--pair-class", p.pair_class,
                    "monotonic or antimonotonic (default: derived)");
    cmd->add_option("--domain", p.domain, "restrict pair domain, lo:hi");
}

std::optional<Interval> parse_domain(const std::string &text) {
    if (text.empty()) {
        return std::nullopt;
    }
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw InvalidInput("domain must be lo:hi, got \"" + text + "\"");
    }
    auto bound = [](const std::string &s) {
        if (s == "-inf") {
            return -std::numeric_limits<double>::infinity();
        }
        return parse_exponent(s);
    };
    return Interval::closed(bound(text.substr(0, colon)),
                            bound(text.substr(colon + 1)));
}

ScalarFnPair resolve_pair(const PairFlags &p) {
    std::optional<PairClass> cls;
    if (!p.pair_class.empty()) {
        cls = parse_pair_class(p.pair_class);
    }
    return parse_pair(p.pair, cls, parse_domain(p.domain));
}

std::vector<double> parse_grid(const std::string &text, bool exponent) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            throw InvalidInput("empty entry in grid \"" + text + "\"");
        }
        if (exponent) {
            out.push_back(parse_exponent(item));
            (void)HolderPair::from_p(out.back());
        } else {
            out.push_back(parse_exponent(item));
            (void)Epsilon(out.back());
        }
    }
    if (out.empty()) {
        throw InvalidInput("grid must be nonempty");
    }
    return out;
}

void emit(std::ostream &out, const ojson &j, bool compact) {
    out << (compact ? j.dump() : j.dump(2)) << '\n';
}

ojson exponent_value(double p) {
    if (std::isinf(p)) {
        return "inf";
    }
    return p;
}

ojson report_json(const QuantityReport &q) {
    ojson j;
    j["name"] = q.name;
    if (q.real) {
        j["value"] = q.value.real();
    } else {
        j["value"] = {{"re", q.value.real()}, {"im", q.value.imag()}};
    }
    j["inputs_fingerprint"] = q.inputs_fingerprint;
    return j;
}

void write_manifest(const std::string &path, const std::string &command,
                    const std::vector<std::string> &args, const ojson &normalized,
                    std::optional<std::uint64_t> seed,
                    const std::vector<std::string> &outputs) {
    ojson m;
    m["command"] = command;
    m["arguments"] = normalized;
    std::vector<std::string> argv;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--manifest") {
            ++i;
            continue;
        }
        if (args[i].rfind("--manifest=", 0) == 0) {
            continue;
        }
        argv.push_back(args[i]);
    }
    m["argv"] = argv;
    m["tool_version"] = SKEWCERT_VERSION;
    m["seed"] = seed ? ojson(*seed) : ojson(nullptr);
    m["outputs"] = outputs;
    std::ofstream f(path);
    if (!f) {
        throw InvalidInput("cannot write manifest " + path);
    }
    f << m.dump(2) << '\n';
}

std::ofstream open_out(const std::string &path) {
    std::ofstream f(path);
    if (!f) {
        throw InvalidInput("cannot open output file " + path);
    }
    return f;
}

Instance load_instance(const InputFiles &files) {
    Instance in;
    if (!files.rho.empty()) {
        in.rho.emplace(load_matrix(files.rho));
    }
    if (!files.a.empty()) {
        in.a.emplace(load_matrix(files.a));
    }
    if (!files.b.empty()) {
        in.b.emplace(load_matrix(files.b));
    }
    if (!files.x.empty()) {
        in.x.emplace(load_matrix(files.x));
    }
    return in;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
    CLI::App app{"skewcert: skew information quantities, certified trace "
                 "inequalities and counter-example search"};
    app.require_subcommand(1);
    app.set_version_flag("--version", SKEWCERT_VERSION);

    CommonFlags common;
    PairFlags pair_flags;
    InputFiles files;
    std::string p_text = "2";
    double eps_value = 0.0;
    std::string inequality;

    // compute
    auto *compute = app.add_subcommand("compute", "evaluate the quantities");
    compute->add_option("--rho", files.rho, "state matrix JSON")->required();
    compute->add_option("--A", files.a, "observable A")->required();
    compute->add_option("--B", files.b, "observable B");
    compute->add_option("--p", p_text, "Hölder exponent (decimal or inf)");
    compute->add_option("--eps", eps_value, "epsilon >= 0");
    add_common(compute, common, false);

    // verify
    std::uint64_t random_trials = 0;
    std::size_t dim = 2;
    auto *verify = app.add_subcommand("verify", "certify an inequality");
    verify->add_option("inequality", inequality)->required();
    verify->add_option("--rho", files.rho);
    verify->add_option("--A", files.a);
    verify->add_option("--B", files.b);
    verify->add_option("--X", files.x);
    verify->add_option("--random", random_trials,
                       "number of seeded random instances");
    verify->add_option("--dim", dim);
    verify->add_option("--p", p_text);
    verify->add_option("--eps", eps_value);
    add_pair(verify, pair_flags);
    add_common(verify, common, true);

    // reproduce
    auto *reproduce =
        app.add_subcommand("reproduce", "reproduce the 2x2 counter-example");
    add_common(reproduce, common, false);

    // falsify
    std::uint64_t budget = 10000;
    std::optional<double> stop_at;
    auto *falsify_cmd =
        app.add_subcommand("falsify", "search for a violating instance");
    falsify_cmd->add_option("inequality", inequality)->required();
    falsify_cmd->add_option("--dim", dim);
    falsify_cmd->add_option("--p", p_text);
    falsify_cmd->add_option("--eps", eps_value);
    falsify_cmd->add_option("--budget", budget);
    falsify_cmd->add_option("--stop-at-margin", stop_at);
    add_pair(falsify_cmd, pair_flags);
    add_common(falsify_cmd, common, true);

    // sweep
    std::string p_grid = "2";
    std::string eps_grid = "0";
    std::uint64_t trials = 100;
    auto *sweep_cmd = app.add_subcommand("sweep", "grid sweep over (p, eps)");
    sweep_cmd->add_option("inequality", inequality)->required();
    sweep_cmd->add_option("--p-grid", p_grid);
    sweep_cmd->add_option("--eps-grid", eps_grid);
    sweep_cmd->add_option("--dim", dim);
    sweep_cmd->add_option("--trials", trials);
    add_pair(sweep_cmd, pair_flags);
    add_common(sweep_cmd, common, true);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kHolds : kInputError;
    }

    try {
        std::vector<std::string> outputs;
        ojson normalized;
        std::string command;
        int code = kHolds;

        if (*compute) {
            command = "compute";
            const HolderPair hp = HolderPair::from_p(parse_exponent(p_text));
            const Epsilon eps(eps_value);
            const DensityMatrix rho(load_matrix(files.rho));
            const HermitianMatrix a(load_matrix(files.a));
            std::optional<HermitianMatrix> b;
            if (!files.b.empty()) {
                b.emplace(load_matrix(files.b));
            }
            ojson j;
            j["command"] = "compute";
            j["p"] = exponent_value(hp.p());
            j["p_star"] = exponent_value(hp.p_star());
            j["epsilon"] = eps.value();
            ojson reports = ojson::array();
            for (const auto &q : quantity_reports(rho, hp, eps, a, b)) {
                reports.push_back(report_json(q));
            }
            j["quantities"] = std::move(reports);
            emit(out, j, common.json);
            normalized = {{"rho", files.rho}, {"A", files.a}, {"B", files.b},
                          {"p", format_exponent(hp.p())},
                          {"epsilon", eps.value()}};
        } else if (*verify) {
            command = "verify";
            const InequalityId id = parse_inequality(inequality);
            CheckParams params{HolderPair::from_p(parse_exponent(p_text)),
                               Epsilon(eps_value), std::nullopt,
                               common.tolerance};
            if (uses_pair(id)) {
                params.pair = resolve_pair(pair_flags);
            }
            ojson j;
            if (random_trials == 0) {
                const Certificate c = evaluate(id, load_instance(files), params);
                j = to_json(c);
                code = c.verdict == Verdict::violated   ? kViolation
                       : c.verdict == Verdict::holds    ? kHolds
                                                        : kInputError;
            } else {
                SamplerConfig{dim, common.seed, Ensemble::ginibre_state}
                    .validate();
                std::vector<Certificate> certs(random_trials);
                parallel_for(certs.size(), configured_threads(),
                             [&](std::size_t t) {
                                 Xoshiro256 rng(sub_seed(common.seed, 0, t));
                                 certs[t] = evaluate(
                                     id,
                                     random_instance(id, rng, dim, params.pair),
                                     params);
                             });
                std::size_t worst = 0;
                std::uint64_t violated = 0;
                std::uint64_t inconclusive = 0;
                ojson violations = ojson::array();
                for (std::size_t t = 0; t < certs.size(); ++t) {
                    if (certs[t].margin < certs[worst].margin) {
                        worst = t;
                    }
                    if (certs[t].verdict == Verdict::violated) {
                        ++violated;
                        violations.push_back(to_json(certs[t]));
                    } else if (certs[t].verdict == Verdict::inconclusive) {
                        ++inconclusive;
                    }
                }
                j["inequality_id"] = to_string(id);
                j["trials"] = random_trials;
                j["dim"] = dim;
                j["seed"] = common.seed;
                j["violated"] = violated;
                j["inconclusive"] = inconclusive;
                j["min_margin"] = certs[worst].margin;
                j["worst"] = to_json(certs[worst]);
                j["violations"] = std::move(violations);
                code = violated > 0        ? kViolation
                       : inconclusive > 0 ? kInputError
                                          : kHolds;
            }
            emit(out, j, common.json);
            normalized = {{"inequality", to_string(id)},
                          {"rho", files.rho},
                          {"A", files.a},
                          {"B", files.b},
                          {"X", files.x},
                          {"random", random_trials},
                          {"dim", dim},
                          {"p", format_exponent(params.hp.p())},
                          {"epsilon", params.eps.value()},
                          {"pair", uses_pair(id) ? pair_flags.pair : ""},
                          {"tolerance", common.tolerance}};
        } else if (*reproduce) {
            command = "reproduce";
            const Certificate c = reproduce_counterexample();
            const auto failures = reproduction_failures(c);
            ojson j = to_json(c);
            j["reproduction_failures"] = failures;
            emit(out, j, common.json);
            code = failures.empty() ? kHolds : kReproductionFailure;
        } else if (*falsify_cmd) {
            command = "falsify";
            const InequalityId id = parse_inequality(inequality);
            FalsifyOptions opt;
            opt.dim = dim;
            opt.params = CheckParams{HolderPair::from_p(parse_exponent(p_text)),
                                     Epsilon(eps_value), std::nullopt,
                                     common.tolerance};
            if (uses_pair(id)) {
                opt.params.pair = resolve_pair(pair_flags);
            }
            opt.budget = budget;
            opt.seed = common.seed;
            opt.stop_at_margin = stop_at;
            const SearchResult r = falsify(id, opt);
            ojson j;
            j["inequality_id"] = to_string(r.inequality_id);
            j["seed"] = r.seed;
            j["trials_used"] = r.trials_used;
            j["restarts"] = r.restarts;
            j["failed_evaluations"] = r.failed_evaluations;
            j["best_margin"] = r.best_certificate.margin;
            ojson trace = ojson::array();
            for (const auto &[trial, margin] : r.improvement_trace) {
                trace.push_back({trial, margin});
            }
            j["improvement_trace"] = std::move(trace);
            j["best_certificate"] = to_json(r.best_certificate);
            emit(out, j, common.json);
            if (!common.out.empty()) {
                auto f = open_out(common.out);
                write_trace_csv(f, r);
                outputs.push_back(common.out);
            }
            code = r.best_certificate.verdict == Verdict::violated ? kViolation
                                                                   : kHolds;
            normalized = {{"inequality", to_string(id)},
                          {"dim", dim},
                          {"p", format_exponent(opt.params.hp.p())},
                          {"epsilon", opt.params.eps.value()},
                          {"budget", budget},
                          {"stop_at_margin",
                           stop_at ? ojson(*stop_at) : ojson(nullptr)},
                          {"pair", uses_pair(id) ? pair_flags.pair : ""},
                          {"tolerance", common.tolerance}};
        } else if (*sweep_cmd) {
            command = "sweep";
            const InequalityId id = parse_inequality(inequality);
            SweepOptions opt;
            opt.dim = dim;
            opt.p_grid = parse_grid(p_grid, true);
            opt.eps_grid = parse_grid(eps_grid, false);
            opt.trials_per_cell = trials;
            opt.seed = common.seed;
            opt.tolerance = common.tolerance;
            opt.threads = configured_threads();
            if (uses_pair(id)) {
                opt.pair = resolve_pair(pair_flags);
            }
            const auto rows = sweep(id, opt);
            ojson summary;
            summary["inequality_id"] = to_string(id);
            summary["cells"] = rows.size();
            ojson negative = ojson::array();
            ojson empty = ojson::array();
            std::uint64_t violations = 0;
            for (const auto &r : rows) {
                violations += r.violations;
                if (r.empty()) {
                    empty.push_back({{"p", exponent_value(r.p)},
                                     {"epsilon", r.epsilon}});
                } else if (r.min_margin < 0.0) {
                    negative.push_back({{"p", exponent_value(r.p)},
                                        {"epsilon", r.epsilon},
                                        {"min_margin", r.min_margin},
                                        {"violations", r.violations}});
                }
            }
            summary["violations"] = violations;
            summary["negative_cells"] = std::move(negative);
            summary["empty_cells"] = std::move(empty);
            if (common.out.empty()) {
                write_sweep_csv(out, rows);
                err << summary.dump() << '\n';
            } else {
                auto f = open_out(common.out);
                write_sweep_csv(f, rows);
                outputs.push_back(common.out);
                emit(out, summary, common.json);
            }
            code = violations > 0 ? kViolation : kHolds;
            normalized = {{"inequality", to_string(id)},
                          {"p_grid", p_grid},
                          {"eps_grid", eps_grid},
                          {"dim", dim},
                          {"trials", trials},
                          {"pair", uses_pair(id) ? pair_flags.pair : ""},
                          {"tolerance", common.tolerance}};
        }

        if (!common.manifest.empty()) {
            const bool seeded = command == "verify" || command == "falsify" ||
                                command == "sweep";
            write_manifest(common.manifest, command, args, normalized,
                           seeded ? std::optional(common.seed) : std::nullopt,
                           outputs);
        }
        return code;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const nlohmann::json::exception &e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

} // namespace skewcert::cli
