// Copyright 2026 The betheprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace betheprep {

using Complex = std::complex<double>;

/// Raised when arguments fall outside an operation's domain
/// (bad weights, out-of-range block indices, malformed inputs).
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when circuit synthesis meets an inconsistent amplitude table.
class SynthesisError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised when a request exceeds a configured resource cap.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace betheprep
