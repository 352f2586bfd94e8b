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

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "skewcert/inequalities.hpp"
#include "skewcert/rng.hpp"

namespace skewcert {

enum class Ensemble { ginibre_state, gue_observable };

struct SamplerConfig {
    std::size_t dim = 2;
    std::uint64_t seed = 0;
    Ensemble ensemble = Ensemble::ginibre_state;

    /// Throws InvalidInput unless 2 <= dim <= 32.
    void validate() const;
};

/// n×n matrix of independent standard complex Gaussians (E|z|² = 1).
[[nodiscard]] Matrix ginibre(Xoshiro256 &rng, std::size_t dim);

/// GG*/Tr(GG*) for a Ginibre G.
[[nodiscard]] DensityMatrix sample_density(Xoshiro256 &rng, std::size_t dim);
[[nodiscard]] DensityMatrix sample_density(const SamplerConfig &cfg);

/// (G + G*)/2 for a Ginibre G.
[[nodiscard]] HermitianMatrix sample_hermitian(Xoshiro256 &rng,
                                               std::size_t dim);
[[nodiscard]] HermitianMatrix sample_hermitian(const SamplerConfig &cfg);

/// Hermitian matrix with Haar-like eigenvectors (from a GUE draw) and
/// eigenvalues uniform over a finite window of `domain`: the interval itself
/// when bounded, otherwise three units from the finite end (or [-3, 3]).
[[nodiscard]] HermitianMatrix sample_in_domain(Xoshiro256 &rng,
                                               std::size_t dim,
                                               const Interval &domain);

/// Random inputs for the given checker. `pair` is required for the Lemma
/// checkers (its domain shapes the spectra of A and B).
[[nodiscard]] Instance random_instance(InequalityId id, Xoshiro256 &rng,
                                       std::size_t dim,
                                       const std::optional<ScalarFnPair> &pair);

/// Worker count from SKEWCERT_THREADS (unset, 0, or unparsable = 1).
[[nodiscard]] unsigned configured_threads();

/// Runs fn(i) for i in [0, count) on up to `threads` workers. The first
/// exception (lowest index) is rethrown after all workers finish.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)> &fn);

/// Per-trial seed for sweep cell `cell`, trial `trial`:
/// seed ^ mix64(mix64(cell) ^ trial).
[[nodiscard]] std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t cell,
                                     std::uint64_t trial);

struct FalsifyOptions {
    std::size_t dim = 2;
    CheckParams params;
    std::uint64_t budget = 10000;
    std::uint64_t seed = 0;
    std::optional<double> stop_at_margin;
};

struct SearchResult {
    InequalityId inequality_id;
    Certificate best_certificate;
    std::uint64_t trials_used = 0;
    std::uint64_t failed_evaluations = 0;
    std::vector<std::pair<std::uint64_t, double>> improvement_trace;
    std::uint64_t seed = 0;
    std::uint64_t restarts = 0;
};

/// Minimizes the certificate margin of `id` by random restarts plus greedy
/// coordinate search.
///
/// ρ is parameterized by a lower-triangular complex factor L
/// (ρ = LL*/Tr(LL*)), observables by real Hermitian parameter vectors
/// (diagonal entry, then real and imaginary part of each upper entry,
/// row-major) normalized to ‖·‖_F = √dim. For the Lemma checkers A and B are
/// pushed into the pair's domain through a spectral map and X is normalized
/// likewise. Each restart draws from the samplers; each coordinate is tried at
/// +σ and -σ (σ starts at 0.1), a move is kept only if the margin decreases,
/// σ halves after a pass without improvement, and the chain restarts once
/// σ < 1e-6. One margin evaluation is one trial.
[[nodiscard]] SearchResult falsify(InequalityId id, const FalsifyOptions &opt);

struct SweepRow {
    double p = 2.0;
    double epsilon = 0.0;
    double min_margin = 0.0;  // NaN when the cell is empty
    double mean_margin = 0.0; // NaN when the cell is empty
    std::uint64_t violations = 0;
    std::uint64_t trials = 0;
    [[nodiscard]] bool empty() const { return trials == 0; }
};

struct SweepOptions {
    std::size_t dim = 2;
    std::vector<double> p_grid{2.0};
    std::vector<double> eps_grid{0.0};
    std::uint64_t trials_per_cell = 100;
    std::uint64_t seed = 0;
    std::optional<ScalarFnPair> pair;
    double tolerance = kDefaultTolerance;
    unsigned threads = 1;
};

/// One row per (p, ε) cell, p-major in grid order.
[[nodiscard]] std::vector<SweepRow> sweep(InequalityId id,
                                          const SweepOptions &opt);

/// Header p,epsilon,min_margin,mean_margin,violations; %.17g floats, "inf"
/// for infinite p, "nan" for empty cells.
void write_sweep_csv(std::ostream &out, const std::vector<SweepRow> &rows);

/// Header trial,margin.
void write_trace_csv(std::ostream &out, const SearchResult &result);

[[nodiscard]] std::string format_g17(double x);

} // namespace skewcert
