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
#include "skewcert/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>

namespace skewcert {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::holds:
        return "holds";
    case Verdict::violated:
        return "violated";
    case Verdict::inconclusive:
        break;
    }
    return "inconclusive";
}

double Certificate::detail(std::string_view name) const {
    for (const auto &[key, value] : details) {
        if (key == name) {
            return value;
        }
    }
    throw std::out_of_range("certificate has no detail \"" +
                            std::string(name) + "\"");
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

Certificate make_certificate(std::string inequality_id, double lhs, double rhs,
                             double base_tolerance,
                             std::vector<std::pair<std::string, double>> details,
                             nlohmann::ordered_json inputs, bool inconclusive) {
    Certificate c;
    c.inequality_id = std::move(inequality_id);
    c.lhs = lhs;
    c.rhs = rhs;
    c.margin = lhs - rhs;
    c.tolerance =
        base_tolerance * std::max({1.0, std::abs(lhs), std::abs(rhs)});
    if (inconclusive || !std::isfinite(c.margin)) {
        c.verdict = Verdict::inconclusive;
    } else {
        c.verdict =
            c.margin >= -c.tolerance ? Verdict::holds : Verdict::violated;
    }
    details.emplace_back("tolerance_base", base_tolerance);
    c.details = std::move(details);
    c.inputs = std::move(inputs);
    c.fingerprint = fnv1a_hex(c.inequality_id + "|" + c.inputs.dump());
    return c;
}

nlohmann::ordered_json to_json(const Certificate &c) {
    nlohmann::ordered_json j;
    j["inequality_id"] = c.inequality_id;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["margin"] = c.margin;
    j["tolerance"] = c.tolerance;
    j["verdict"] = to_string(c.verdict);
    j["fingerprint"] = c.fingerprint;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    for (const auto &[key, value] : c.details) {
        details[key] = value;
    }
    j["details"] = std::move(details);
    j["inputs"] = c.inputs;
    return j;
}

} // namespace skewcert
