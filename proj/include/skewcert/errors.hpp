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

#include <stdexcept>
#include <string>

namespace skewcert {

/// Base class of every error raised by the library. Each subclass maps to a
/// distinct failure category so callers (the CLI in particular) can pick an
/// exit code without string matching.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimMismatch : public Error {
  public:
    using Error::Error;
};

/// Malformed or invariant-violating input (non-Hermitian matrix, negative
/// eigenvalue in a state, non-finite entry, bad JSON).
class InvalidInput : public Error {
  public:
    using Error::Error;
};

class NoConvergence : public Error {
  public:
    using Error::Error;
};

class DomainViolation : public Error {
  public:
    using Error::Error;
};

class UnknownInequality : public Error {
  public:
    using Error::Error;
};

/// An internal consistency check failed (e.g. a quantity that must be real
/// carried a large imaginary residue). Indicates a defect, not bad input.
class ConsistencyError : public Error {
  public:
    using Error::Error;
};

} // namespace skewcert
