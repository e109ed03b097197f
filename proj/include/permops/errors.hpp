// Copyright 2026 The permops Authors
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

namespace permops {

/// Two operands live on different-sized domains (e.g. S_n vs S_m).
class SizeMismatchError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A request exceeds a configured enumeration or dense-matrix cap.
class ResourceLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Exact inversion requested for a singular matrix (n > d regime).
class SingularMatrixError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An internal numerical routine failed to meet its accuracy contract.
class NumericalFailureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A documented operation precondition does not hold.
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

} // namespace permops
