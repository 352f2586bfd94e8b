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

#include <optional>
#include <string>
#include <vector>

#include "skewcert/certificate.hpp"
#include "skewcert/functions.hpp"
#include "skewcert/matcore.hpp"
#include "skewcert/quantinfo.hpp"

namespace skewcert {

/// Registered inequalities. All but lz_theorem1 are proven results.
enum class InequalityId {
    fujii,          // Tr(f(A)Xg(A)X) vs Tr(f(A)g(A)X²)
    gfujii,         // two-matrix version via the H ⊕ H embedding
    schrodinger,    // Schrödinger uncertainty relation
    generalized_ur, // I_{p,ε} uncertainty relation
    order1,         // I_{p,ε} side dominates ε² times the Schrödinger side
    order2,         // Schrödinger side dominates the I_{p,0} side
    lz_theorem1,    // Luo–Zhang claim; violable
};

[[nodiscard]] std::string to_string(InequalityId id);
/// Throws UnknownInequality.
[[nodiscard]] InequalityId parse_inequality(const std::string &name);
[[nodiscard]] const std::vector<InequalityId> &all_inequalities();
[[nodiscard]] bool is_proven(InequalityId id);
[[nodiscard]] bool uses_pair(InequalityId id);

[[nodiscard]] Certificate check_fujii(const HermitianMatrix &a,
                                      const HermitianMatrix &x,
                                      const ScalarFnPair &pair,
                                      double tolerance = kDefaultTolerance);

[[nodiscard]] Certificate check_gfujii(const HermitianMatrix &a,
                                       const HermitianMatrix &b,
                                       const Matrix &x,
                                       const ScalarFnPair &pair,
                                       double tolerance = kDefaultTolerance);

[[nodiscard]] Certificate check_schrodinger(const DensityMatrix &rho,
                                            const HermitianMatrix &a,
                                            const HermitianMatrix &b,
                                            double tolerance = kDefaultTolerance);

[[nodiscard]] Certificate
check_generalized_ur(const DensityMatrix &rho, const HolderPair &hp,
                     Epsilon eps, const HermitianMatrix &a,
                     const HermitianMatrix &b,
                     double tolerance = kDefaultTolerance);

[[nodiscard]] Certificate check_order1(const DensityMatrix &rho,
                                       const HolderPair &hp, Epsilon eps,
                                       const HermitianMatrix &a,
                                       const HermitianMatrix &b,
                                       double tolerance = kDefaultTolerance);

[[nodiscard]] Certificate check_order2(const DensityMatrix &rho,
                                       const HolderPair &hp,
                                       const HermitianMatrix &a,
                                       const HermitianMatrix &b,
                                       double tolerance = kDefaultTolerance);

[[nodiscard]] Certificate
check_lz_theorem1(const DensityMatrix &rho, const HermitianMatrix &a,
                  const HermitianMatrix &b,
                  double tolerance = kDefaultTolerance);

/// Eigenbasis matrix elements of the centered observables and the sums
/// entering ξ and η. Everything here is computed from ρ's eigenpairs only,
/// never from the trace-form quantities, so it serves as an oracle for them.
struct SpectralTerms {
    Matrix a;              // a_ij = <Ã φ_i | φ_j>
    Matrix b;              // b_ij = <B̃ φ_i | φ_j>
    double var_a = 0.0;    // 1/2 Σ (λ_i + λ_j) a_ij a_ji
    double var_b = 0.0;
    double cov_re = 0.0;   // Re Σ λ_i a_ij b_ji
    double sum_aa = 0.0;   // Σ λ_i^{1/p} λ_j^{1/p*} a_ij a_ji
    double sum_bb = 0.0;
    double sum_ab = 0.0;   // Σ λ_i^{1/p} λ_j^{1/p*} Re(a_ij b_ji)
    double sum_ba = 0.0;   // Σ λ_i^{1/p} λ_j^{1/p*} Re(b_ij a_ji)
    double xi = 0.0;
    double eta = 0.0;

    [[nodiscard]] double ip0_a() const { return var_a - sum_aa; }
    [[nodiscard]] double ip0_b() const { return var_b - sum_bb; }
    /// Re Corr_{p,0}(ρ; A, B)
    [[nodiscard]] double corr0_re() const {
        return cov_re - 0.5 * sum_ab - 0.5 * sum_ba;
    }
};

[[nodiscard]] SpectralTerms spectral_xi_eta(const DensityMatrix &rho,
                                            const HolderPair &hp,
                                            const HermitianMatrix &a,
                                            const HermitianMatrix &b);

/// The fixed 2×2 instance: ρ = diag(3,1)/4, A = [[0,i],[-i,0]],
/// B = [[0,1],[1,0]].
struct CounterexampleInstance {
    DensityMatrix rho;
    HermitianMatrix a;
    HermitianMatrix b;
};
[[nodiscard]] CounterexampleInstance counterexample_instance();

/// Runs check_lz_theorem1 on the fixed instance.
[[nodiscard]] Certificate reproduce_counterexample();

/// Exact-value assertions for the reproduction: lhs = (7-4√3)/4 within
/// 1e-12, rhs = 1/4 within 1e-15, |Tr(ρ[A,B])|² = 1 within 1e-12,
/// Re Corr_ρ(A,B) = 0 within 1e-12, verdict violated. Returns the list of
/// failed assertions (empty on success).
[[nodiscard]] std::vector<std::string>
reproduction_failures(const Certificate &c);

/// Inputs to a checker, owned. Unused slots stay empty.
struct Instance {
    std::optional<DensityMatrix> rho;
    std::optional<HermitianMatrix> a;
    std::optional<HermitianMatrix> b;
    std::optional<Matrix> x;
};

struct CheckParams {
    HolderPair hp = HolderPair::from_p(2.0);
    Epsilon eps = Epsilon(0.0);
    std::optional<ScalarFnPair> pair;
    double tolerance = kDefaultTolerance;
};

/// Dispatches to the checker for `id`. Throws InvalidInput when a required
/// slot of the instance (or the pair) is missing.
[[nodiscard]] Certificate evaluate(InequalityId id, const Instance &instance,
                                   const CheckParams &params);

/// Re-runs the checker named in the certificate from its stored inputs.
[[nodiscard]] Certificate recheck(const Certificate &c);

} // namespace skewcert
