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

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewcert/matcore.hpp"

namespace skewcert {

/// Real interval with optionally open or infinite endpoints.
struct Interval {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool lo_open = false;
    bool hi_open = false;

    [[nodiscard]] static Interval real_line() { return {}; }
    [[nodiscard]] static Interval closed(double lo, double hi) {
        return {lo, hi, false, false};
    }
    [[nodiscard]] static Interval nonnegative() {
        return {0.0, std::numeric_limits<double>::infinity(), false, false};
    }
    [[nodiscard]] static Interval positive() {
        return {0.0, std::numeric_limits<double>::infinity(), true, false};
    }

    [[nodiscard]] bool contains(double x) const;
    [[nodiscard]] bool bounded() const;
    [[nodiscard]] Interval intersect(const Interval &other) const;
    [[nodiscard]] std::string to_string() const;
};

/// Direction of a registry function, used to derive a default pair
/// classification.
enum class Monotone { increasing, decreasing, constant, unknown };

class ScalarFn {
  public:
    ScalarFn(std::string id, std::function<double(double)> fn, Interval domain,
             Monotone direction = Monotone::unknown);

    [[nodiscard]] double operator()(double x) const { return fn_(x); }
    [[nodiscard]] const std::string &id() const noexcept { return id_; }
    [[nodiscard]] const Interval &domain() const noexcept { return domain_; }
    [[nodiscard]] Monotone direction() const noexcept { return direction_; }

    /// Evaluates at x, snapping x into the closed domain when it sits within
    /// kDomainTol outside it. Throws DomainViolation otherwise.
    [[nodiscard]] double evaluate_checked(double x) const;

  private:
    std::string id_;
    std::function<double(double)> fn_;
    Interval domain_;
    Monotone direction_;
};

/// x^t on [0, inf), t in [0, 4], with x^0 := 1 (including at x = 0).
[[nodiscard]] ScalarFn power_fn(double t);
/// x -> c - x on the real line.
[[nodiscard]] ScalarFn neg_affine_fn(double c);
/// x -> 1 / (1 + x) on [0, inf).
[[nodiscard]] ScalarFn reciprocal_shift_fn();
[[nodiscard]] ScalarFn exp_fn();
/// log on (0, inf).
[[nodiscard]] ScalarFn log_fn();
[[nodiscard]] ScalarFn const_fn(double c);

/// Parses "power:0.5", "neg_affine:1", "reciprocal_shift", "exp", "log",
/// "const:2". Throws InvalidInput on unknown names or bad parameters.
[[nodiscard]] ScalarFn parse_scalar_fn(const std::string &text);

enum class PairClass { monotonic, antimonotonic, unknown };

[[nodiscard]] std::string to_string(PairClass c);
[[nodiscard]] PairClass parse_pair_class(const std::string &text);

struct ScalarFnPair {
    ScalarFn f;
    ScalarFn g;
    PairClass classification;
    Interval domain; // subset of f.domain() ∩ g.domain()

    /// Pair on f.domain() ∩ g.domain(), optionally narrowed further.
    [[nodiscard]] static ScalarFnPair make(ScalarFn f, ScalarFn g,
                                           PairClass classification,
                                           std::optional<Interval> restrict = {});

    [[nodiscard]] std::string id() const { return f.id() + "," + g.id(); }
};

/// Classification implied by the registry directions of f and g.
[[nodiscard]] PairClass derived_classification(const ScalarFn &f,
                                               const ScalarFn &g);

/// Parses "f_spec,g_spec" (see parse_scalar_fn). The classification is
/// derived from the function directions unless given.
[[nodiscard]] ScalarFnPair
parse_pair(const std::string &text,
           std::optional<PairClass> classification = {},
           std::optional<Interval> restrict = {});

struct PairRefutation {
    double a;
    double b;
    double product; // (f(a)-f(b))(g(a)-g(b))
};

/// Searches for an (a, b) contradicting the pair's classification over all
/// ordered pairs from the given spectra plus 64 grid points of the domain.
[[nodiscard]] std::optional<PairRefutation>
refute_classification(const ScalarFnPair &pair,
                      std::span<const std::vector<double>> spectra);

/// V diag(f(λ)) V*. Throws DomainViolation when an eigenvalue lies outside
/// f's domain by more than kDomainTol.
[[nodiscard]] HermitianMatrix func_calc(const EigenDecomposition &eig,
                                        const ScalarFn &f);
[[nodiscard]] HermitianMatrix func_calc(const HermitianMatrix &h,
                                        const ScalarFn &f);

/// Throws DomainViolation unless every value lies in the interval (within
/// kDomainTol for closed endpoints).
void require_in_domain(std::span<const double> values, const Interval &domain,
                       const std::string &what);

} // namespace skewcert
