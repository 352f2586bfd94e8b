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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace skewcert {

inline constexpr double kDefaultTolerance = 1e-9;

enum class Verdict { holds, violated, inconclusive };

[[nodiscard]] std::string to_string(Verdict v);

/// Machine-checkable record of one inequality evaluation.
///
/// margin = lhs - rhs, oriented so that margin >= 0 means the stated
/// direction holds. `tolerance` is the effective absolute threshold
/// base * max(1, |lhs|, |rhs|); verdict is holds iff margin >= -tolerance
/// (unless the evaluation was inconclusive).
struct Certificate {
    std::string inequality_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double tolerance = 0.0;
    Verdict verdict = Verdict::holds;
    std::string fingerprint;
    std::vector<std::pair<std::string, double>> details;
    nlohmann::ordered_json inputs;

    /// Looks up a details entry; throws std::out_of_range when absent.
    [[nodiscard]] double detail(std::string_view name) const;
};

/// Builds a certificate, deriving margin, effective tolerance, verdict and
/// fingerprint. `inconclusive` forces that verdict.
[[nodiscard]] Certificate
make_certificate(std::string inequality_id, double lhs, double rhs,
                 double base_tolerance,
                 std::vector<std::pair<std::string, double>> details,
                 nlohmann::ordered_json inputs, bool inconclusive = false);

[[nodiscard]] nlohmann::ordered_json to_json(const Certificate &c);

/// 64-bit FNV-1a over the bytes, as 16 lowercase hex digits.
[[nodiscard]] std::string fnv1a_hex(std::string_view bytes);

} // namespace skewcert
