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

namespace skewcert {

/// splitmix64 step: advances `state` and returns the mixed output.
[[nodiscard]] std::uint64_t splitmix64(std::uint64_t &state);
/// Stateless splitmix64 finalizer of a single value.
[[nodiscard]] std::uint64_t mix64(std::uint64_t x);

/// xoshiro256** 1.0, seeded by four successive splitmix64 outputs of the
/// 64-bit seed.
///
/// Derived streams used across the library:
///   uniform():  (next() >> 11) * 2^-53, in [0, 1)
///   normal():   Box–Muller, u1 = 1 - uniform(), u2 = uniform(),
///               r = sqrt(-2 ln u1), returns r cos(2π u2) then r sin(2π u2)
///   complex standard Gaussian: (normal(), normal()) / sqrt(2)
class Xoshiro256 {
  public:
    explicit Xoshiro256(std::uint64_t seed);

    std::uint64_t next();
    double uniform();
    double normal();

  private:
    std::uint64_t s_[4];
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace skewcert
