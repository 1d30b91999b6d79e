// Copyright 2026 The cavity-dj Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace cavitydj {

/// Shape or index mismatch between a state, an operator and a target subsystem.
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical invariant (norm, unitarity, purity, Fock truncation) was violated.
class NumericInvariantError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The Fock basis is too small for the requested field state or evolution.
class TruncationError : public NumericInvariantError {
  public:
    using NumericInvariantError::NumericInvariantError;
};

/// A truth table that is neither constant nor balanced, or an oracle whose
/// size does not match the register it is applied to.
class OracleError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace cavitydj
