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
 * Deterministic preparation circuit for fixed-weight superpositions.
 *
 * The circuit starts from 0^{L-M} 1^M (X gates on wires 0..M-1) and then
 * applies the blocks W_L, W_{L-1}, ..., W_2 in time order. Each W_m is
 * the sequence of I_{m,l} blocks for increasing l, and each I_{m,l} is
 *
 *     CNOT(L-m -> L-m+l), [multi-controlled u(m,l,b) on wire L-m for each
 *     suffix b of weight M-l], CNOT(L-m -> L-m+l).
 *
 * The u-gate for suffix b rotates |1> into G(0b)|0> + G(1b)|1>, so that
 * the full product reproduces f(w)/F({}) on every word w, including the
 * global phase.
 */

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "betheprep/coefficients.hpp"

namespace betheprep {

enum class GateKind { X, CNOT, CU };

struct UAngles {
    double theta = 0.0;
    double phi = 0.0;
    double lambda = 0.0;

    friend bool operator==(const UAngles &, const UAngles &) = default;
};

/// Provenance of a synthesized gate: block W_m, sub-block I_{m,l} and, for
/// u-gates, the suffix b that selects it.
struct GateLabel {
    int m = 0;
    int l = 0;
    std::optional<BitString> b;

    [[nodiscard]] std::string str() const;
    static GateLabel parse(std::string_view text);

    friend bool operator==(const GateLabel &, const GateLabel &) = default;
};

struct Gate {
    GateKind kind = GateKind::X;
    int target = 0;
    /// Positive controls, ascending.
    std::vector<int> controls;
    /// Only meaningful for CU.
    UAngles angles;
    std::optional<GateLabel> label;

    static Gate x(int target);
    static Gate cnot(int control, int target,
                     std::optional<GateLabel> label = std::nullopt);
    static Gate cu(int target, std::vector<int> controls, UAngles angles,
                   std::optional<GateLabel> label = std::nullopt);

    /// 2x2 action on the target, row-major.
    [[nodiscard]] std::array<Complex, 4> matrix() const;

    friend bool operator==(const Gate &, const Gate &) = default;
};

struct Circuit {
    int n_wires = 0;
    std::vector<Gate> gates;

    /// Throws DomainError on out-of-range wires, duplicated wires or a
    /// control arity that does not match the gate kind.
    void validate() const;

    friend bool operator==(const Circuit &, const Circuit &) = default;
};

struct GateCounts {
    std::size_t x = 0;
    std::size_t cnot = 0;
    std::size_t cu = 0;

    friend bool operator==(const GateCounts &, const GateCounts &) = default;
};

/// u(theta, phi, lambda) =
///   [cos(t/2), -e^{i lambda} sin(t/2); e^{i phi} sin(t/2),
///    e^{i(phi+lambda)} cos(t/2)].
std::array<Complex, 4> u_matrix(const UAngles &angles);

inline constexpr double kNormalizationTolerance = 1e-9;
inline constexpr double kIdentityTolerance = 1e-14;

/// Angles of the u-gate sending |1> to g0|0> + g1|1>. arg(0) is taken as 0.
/// Throws SynthesisError when |g0|^2 + |g1|^2 is not 1 within `tolerance`.
UAngles u_angles(Complex g0, Complex g1,
                 double tolerance = kNormalizationTolerance);

/// Inclusive range of l for which I_{m,l} exists; empty when first > second.
std::pair<int, int> l_bounds(int L, int M, int m);

struct SynthesisOptions {
    /// Drop u-gates that are the identity within kIdentityTolerance.
    bool prune = false;
    double normalization_tolerance = kNormalizationTolerance;
};

class Synthesizer {
  public:
    explicit Synthesizer(AmplitudeTable table, SynthesisOptions options = {});

    /// Gates of I_{m,l}; empty when every u-gate is omitted.
    [[nodiscard]] std::vector<Gate> build_I(int m, int l) const;
    [[nodiscard]] std::vector<Gate> build_W(int m) const;
    [[nodiscard]] Circuit build_full() const;

    [[nodiscard]] const AmplitudeTable &table() const noexcept {
        return table_;
    }
    [[nodiscard]] const TailStatistics &stats() const noexcept {
        return stats_;
    }

  private:
    AmplitudeTable table_;
    TailStatistics stats_;
    SynthesisOptions options_;
};

Circuit build_full(const AmplitudeTable &table, SynthesisOptions options = {});

GateCounts gate_counts(const Circuit &circuit);

/// Counts predicted for an unpruned circuit with no omitted gates.
GateCounts formula_counts(int L, int M);

enum class ExportFormat { Json, Qasm };

ExportFormat parse_export_format(std::string_view name);

std::string export_circuit(const Circuit &circuit, ExportFormat format);
std::string to_json(const Circuit &circuit);
std::string to_qasm(const Circuit &circuit);

/// Inverse of to_json. Throws DomainError on schema violations.
Circuit circuit_from_json(std::string_view text);

} // namespace betheprep
