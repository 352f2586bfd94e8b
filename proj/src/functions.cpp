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
#include "skewcert/functions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "skewcert/errors.hpp"

namespace skewcert {

bool Interval::contains(double x) const {
    const bool above = lo_open ? x > lo : x >= lo;
    const bool below = hi_open ? x < hi : x <= hi;
    return above && below;
}

bool Interval::bounded() const { return std::isfinite(lo) && std::isfinite(hi); }

Interval Interval::intersect(const Interval &other) const {
    Interval out = *this;
    if (other.lo > lo || (other.lo == lo && other.lo_open)) {
        out.lo = other.lo;
        out.lo_open = other.lo_open;
    }
    if (other.hi < hi || (other.hi == hi && other.hi_open)) {
        out.hi = other.hi;
        out.hi_open = other.hi_open;
    }
    return out;
}

std::string Interval::to_string() const {
    std::ostringstream s;
    s << (lo_open || !std::isfinite(lo) ? '(' : '[') << lo << ", " << hi
      << (hi_open || !std::isfinite(hi) ? ')' : ']');
    return s.str();
}

ScalarFn::ScalarFn(std::string id, std::function<double(double)> fn,
                   Interval domain, Monotone direction)
    : id_(std::move(id)), fn_(std::move(fn)), domain_(domain),
      direction_(direction) {}

double ScalarFn::evaluate_checked(double x) const {
    if (domain_.contains(x)) {
        return fn_(x);
    }
    double snapped = x;
    if (x < domain_.lo && !domain_.lo_open && domain_.lo - x <= kDomainTol) {
        snapped = domain_.lo;
    } else if (x > domain_.hi && !domain_.hi_open &&
               x - domain_.hi <= kDomainTol) {
        snapped = domain_.hi;
    } else {
        std::ostringstream msg;
        msg << "value " << x << " outside domain " << domain_.to_string()
            << " of " << id_;
        throw DomainViolation(msg.str());
    }
    return fn_(snapped);
}

namespace {

std::string format_param(double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

} // namespace

ScalarFn power_fn(double t) {
    if (!(t >= 0.0 && t <= 4.0)) {
        throw InvalidInput("power: exponent must lie in [0, 4], got " +
                           format_param(t));
    }
    auto fn = [t](double x) { return t == 0.0 ? 1.0 : std::pow(x, t); };
    const Monotone dir = t == 0.0 ? Monotone::constant : Monotone::increasing;
    return {"power:" + format_param(t), fn, Interval::nonnegative(), dir};
}

ScalarFn neg_affine_fn(double c) {
    return {"neg_affine:" + format_param(c), [c](double x) { return c - x; },
            Interval::real_line(), Monotone::decreasing};
}

ScalarFn reciprocal_shift_fn() {
    return {"reciprocal_shift", [](double x) { return 1.0 / (1.0 + x); },
            Interval::nonnegative(), Monotone::decreasing};
}

ScalarFn exp_fn() {
    return {"exp", [](double x) { return std::exp(x); }, Interval::real_line(),
            Monotone::increasing};
}

ScalarFn log_fn() {
    return {"log", [](double x) { return std::log(x); }, Interval::positive(),
            Monotone::increasing};
}

ScalarFn const_fn(double c) {
    return {"const:" + format_param(c), [c](double) { return c; },
            Interval::real_line(), Monotone::constant};
}

ScalarFn parse_scalar_fn(const std::string &text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const bool has_param = colon != std::string::npos;
    double param = 0.0;
    if (has_param) {
        const std::string arg = text.substr(colon + 1);
        std::size_t used = 0;
        try {
            param = std::stod(arg, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != arg.size()) {
            throw InvalidInput("bad function parameter in \"" + text + "\"");
        }
    }
    auto need = [&](bool want) {
        if (want != has_param) {
            throw InvalidInput("function \"" + name + "\" " +
                               (want ? "requires" : "takes no") +
                               " parameter");
        }
    };
    if (name == "power") {
        need(true);
        return power_fn(param);
    }
    if (name == "identity") {
        need(false);
        return power_fn(1.0);
    }
    if (name == "neg_affine") {
        need(true);
        return neg_affine_fn(param);
    }
    if (name == "reciprocal_shift") {
        need(false);
        return reciprocal_shift_fn();
    }
    if (name == "exp") {
        need(false);
        return exp_fn();
    }
    if (name == "log") {
        need(false);
        return log_fn();
    }
    if (name == "const") {
        need(true);
        return const_fn(param);
    }
    throw InvalidInput("unknown function \"" + name + "\"");
}

std::string to_string(PairClass c) {
    switch (c) {
    case PairClass::monotonic:
        return "monotonic";
    case PairClass::antimonotonic:
        return "antimonotonic";
    case PairClass::unknown:
        break;
    }
    return "unknown";
}

PairClass parse_pair_class(const std::string &text) {
    if (text == "monotonic") {
        return PairClass::monotonic;
    }
    if (text == "antimonotonic") {
        return PairClass::antimonotonic;
    }
    if (text == "unknown") {
        return PairClass::unknown;
    }
    throw InvalidInput("unknown pair classification \"" + text + "\"");
}

ScalarFnPair ScalarFnPair::make(ScalarFn f, ScalarFn g,
                                PairClass classification,
                                std::optional<Interval> restrict) {
    Interval domain = f.domain().intersect(g.domain());
    if (restrict) {
        domain = domain.intersect(*restrict);
    }
    if (domain.lo > domain.hi ||
        (domain.lo == domain.hi && (domain.lo_open || domain.hi_open))) {
        throw InvalidInput("function pair has empty domain");
    }
    return {std::move(f), std::move(g), classification, domain};
}

PairClass derived_classification(const ScalarFn &f, const ScalarFn &g) {
    const Monotone a = f.direction();
    const Monotone b = g.direction();
    if (a == Monotone::unknown || b == Monotone::unknown) {
        return PairClass::unknown;
    }
    if (a == Monotone::constant || b == Monotone::constant || a == b) {
        return PairClass::monotonic;
    }
    return PairClass::antimonotonic;
}

ScalarFnPair parse_pair(const std::string &text,
                        std::optional<PairClass> classification,
                        std::optional<Interval> restrict) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw InvalidInput("pair must be \"f,g\", got \"" + text + "\"");
    }
    ScalarFn f = parse_scalar_fn(text.substr(0, comma));
    ScalarFn g = parse_scalar_fn(text.substr(comma + 1));
    const PairClass c = classification.value_or(derived_classification(f, g));
    return ScalarFnPair::make(std::move(f), std::move(g), c, restrict);
}

std::optional<PairRefutation>
refute_classification(const ScalarFnPair &pair,
                      std::span<const std::vector<double>> spectra) {
    if (pair.classification == PairClass::unknown) {
        return std::nullopt;
    }
    std::vector<double> points;
    double smin = std::numeric_limits<double>::infinity();
    double smax = -std::numeric_limits<double>::infinity();
    for (const auto &s : spectra) {
        for (double x : s) {
            points.push_back(x);
            smin = std::min(smin, x);
            smax = std::max(smax, x);
        }
    }
    const Interval &d = pair.domain;
    double lo = d.lo;
    double hi = d.hi;
    if (!std::isfinite(lo)) {
        lo = std::isfinite(smin) ? smin : (std::isfinite(hi) ? hi - 1.0 : -1.0);
        if (std::isfinite(hi)) {
            lo = std::min(lo, hi - 1.0);
        }
    }
    if (!std::isfinite(hi)) {
        hi = std::max(std::isfinite(smax) ? smax : lo, lo + 1.0);
    }
    constexpr int kGrid = 64;
    for (int k = 0; k < kGrid; ++k) {
        points.push_back(lo + (k + 0.5) * (hi - lo) / kGrid);
    }

    const double sign = pair.classification == PairClass::monotonic ? 1.0 : -1.0;
    constexpr double kSlack = 1e-12;
    std::vector<double> fv(points.size());
    std::vector<double> gv(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
        fv[k] = pair.f.evaluate_checked(points[k]);
        gv[k] = pair.g.evaluate_checked(points[k]);
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            const double prod = (fv[i] - fv[j]) * (gv[i] - gv[j]);
            if (sign * prod < -kSlack) {
                return PairRefutation{points[i], points[j], prod};
            }
        }
    }
    return std::nullopt;
}

void require_in_domain(std::span<const double> values, const Interval &domain,
                       const std::string &what) {
    for (double x : values) {
        if (domain.contains(x)) {
            continue;
        }
        const bool near_lo =
            !domain.lo_open && x < domain.lo && domain.lo - x <= kDomainTol;
        const bool near_hi =
            !domain.hi_open && x > domain.hi && x - domain.hi <= kDomainTol;
        if (!near_lo && !near_hi) {
            std::ostringstream msg;
            msg << what << ": eigenvalue " << x << " outside domain "
                << domain.to_string();
            throw DomainViolation(msg.str());
        }
    }
}

HermitianMatrix func_calc(const EigenDecomposition &eig, const ScalarFn &f) {
    std::vector<double> w(eig.values.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        w[k] = f.evaluate_checked(eig.values[k]);
        if (!std::isfinite(w[k])) {
            throw DomainViolation(f.id() + " is not finite at eigenvalue " +
                                  format_param(eig.values[k]));
        }
    }
    return HermitianMatrix(eig.synthesize(w));
}

HermitianMatrix func_calc(const HermitianMatrix &h, const ScalarFn &f) {
    return func_calc(eig_hermitian(h), f);
}

} // namespace skewcert
