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

/**
 * @file
 * JSON problem definitions and the JSON dumps of tables and states.
 *
 * Problem files take one of three shapes:
 *
 *     {"L": 4, "M": 2, "boundary": "open", "delta": 0.5, "h": 0.1,
 *      "h_prime": 0.3, "roots": [[0.682741, 0], [1.38561, 0]]}
 *     {"L": 4, "M": 2, "source": "dicke"}
 *     {"source": "custom", "amplitudes": {"0011": [1, 0], ...}}
 *
 * Complex numbers are written as [re, im]; a bare number is accepted for a
 * real value.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "betheprep/coefficients.hpp"
#include "betheprep/simulator.hpp"

namespace betheprep {

struct Problem {
    int L = 0;
    int M = 0;
    TableSource source;

    /// Set for Bethe sources only.
    [[nodiscard]] std::optional<ChainSpec> chain() const;
    [[nodiscard]] std::optional<BetheRoots> roots() const;

    [[nodiscard]] AmplitudeTable table() const;
};

/// Throws DomainError; JSON syntax errors carry line/column positions.
Problem parse_problem(std::string_view text);

/// {"0011": [re, im], ...} in enumeration order.
std::string table_to_json(const AmplitudeTable &table);

/// [[re, im], ...] in basis-index order.
std::string state_to_json(const StateVector &state);

} // namespace betheprep
