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

#include "betheprep/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace betheprep {

namespace {

constexpr double kPi = std::numbers::pi;

double safe_arg(Complex z) { return z == Complex{0.0, 0.0} ? 0.0 : std::arg(z); }

std::string format_angle(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

const char *kind_name(GateKind kind) {
    switch (kind) {
    case GateKind::X:
        return "x";
    case GateKind::CNOT:
        return "cnot";
    case GateKind::CU:
        return "cu";
    }
    return "?";
}

int parse_int(std::string_view text, std::string_view whole) {
    int value = 0;
    if (text.empty()) {
        throw DomainError("malformed gate label '" + std::string(whole) + "'");
    }
    for (const char c : text) {
        if (c < '0' || c > '9') {
            throw DomainError("malformed gate label '" + std::string(whole) +
                              "'");
        }
        value = value * 10 + (c - '0');
    }
    return value;
}

} // namespace

std::string GateLabel::str() const {
    std::string out =
        "W_" + std::to_string(m) + "/I_{" + std::to_string(m) + "," +
        std::to_string(l) + "}";
    if (b) {
        out += "/" + (b->empty() ? std::string("{}") : b->str());
    }
    return out;
}

GateLabel GateLabel::parse(std::string_view text) {
    // W_<m>/I_{<m>,<l>}[/<b>]
    const auto bad = [&] {
        return DomainError("malformed gate label '" + std::string(text) + "'");
    };
    if (!text.starts_with("W_")) {
        throw bad();
    }
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        throw bad();
    }
    GateLabel label;
    label.m = parse_int(text.substr(2, slash - 2), text);
    std::string_view rest = text.substr(slash + 1);
    if (!rest.starts_with("I_{")) {
        throw bad();
    }
    const std::size_t comma = rest.find(',');
    const std::size_t close = rest.find('}');
    if (comma == std::string_view::npos || close == std::string_view::npos ||
        close < comma) {
        throw bad();
    }
    if (parse_int(rest.substr(3, comma - 3), text) != label.m) {
        throw bad();
    }
    label.l = parse_int(rest.substr(comma + 1, close - comma - 1), text);
    rest = rest.substr(close + 1);
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw bad();
        }
        label.b = BitString::parse(rest.substr(1));
    }
    return label;
}

Gate Gate::x(int target) {
    Gate g;
    g.kind = GateKind::X;
    g.target = target;
    return g;
}

Gate Gate::cnot(int control, int target, std::optional<GateLabel> label) {
    Gate g;
    g.kind = GateKind::CNOT;
    g.target = target;
    g.controls = {control};
    g.label = std::move(label);
    return g;
}

Gate Gate::cu(int target, std::vector<int> controls, UAngles angles,
              std::optional<GateLabel> label) {
    Gate g;
    g.kind = GateKind::CU;
    g.target = target;
    std::sort(controls.begin(), controls.end());
    g.controls = std::move(controls);
    g.angles = angles;
    g.label = std::move(label);
    return g;
}

std::array<Complex, 4> Gate::matrix() const {
    if (kind == GateKind::CU) {
        return u_matrix(angles);
    }
    return {Complex{0.0, 0.0}, Complex{1.0, 0.0}, Complex{1.0, 0.0},
            Complex{0.0, 0.0}};
}

void Circuit::validate() const {
    if (n_wires < 0) {
        throw DomainError("negative wire count");
    }
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate &g = gates[i];
        const std::string where = "gate " + std::to_string(i) + ": ";
        const auto in_range = [&](int w) { return w >= 0 && w < n_wires; };
        if (!in_range(g.target)) {
            throw DomainError(where + "target wire out of range");
        }
        for (const int c : g.controls) {
            if (!in_range(c)) {
                throw DomainError(where + "control wire out of range");
            }
            if (c == g.target) {
                throw DomainError(where + "target is also a control");
            }
        }
        std::vector<int> sorted = g.controls;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw DomainError(where + "repeated control wire");
        }
        if (g.kind == GateKind::X && !g.controls.empty()) {
            throw DomainError(where + "x gate with controls");
        }
        if (g.kind == GateKind::CNOT && g.controls.size() != 1) {
            throw DomainError(where + "cnot needs exactly one control");
        }
    }
}

std::array<Complex, 4> u_matrix(const UAngles &a) {
    const double c = std::cos(a.theta / 2.0);
    const double s = std::sin(a.theta / 2.0);
    return {Complex{c, 0.0}, -std::polar(s, a.lambda), std::polar(s, a.phi),
            std::polar(c, a.phi + a.lambda)};
}

UAngles u_angles(Complex g0, Complex g1, double tolerance) {
    const double norm = std::norm(g0) + std::norm(g1);
    if (!(std::abs(norm - 1.0) <= tolerance)) {
        throw SynthesisError("branch amplitudes not normalized: |G0|^2+|G1|^2 "
                             "= " +
                             format_angle(norm));
    }
    UAngles out;
    // Equals 2 acos|G1| for normalized input; atan2 stays accurate near the
    // poles where acos loses half the digits.
    out.theta = 2.0 * std::atan2(std::abs(g0), std::abs(g1));
    out.lambda = safe_arg(g0) - kPi;
    out.phi = safe_arg(g1) - out.lambda;
    return out;
}

std::pair<int, int> l_bounds(int L, int M, int m) {
    return {std::max(M + m - L, 1), std::min(m - 1, M)};
}

Synthesizer::Synthesizer(AmplitudeTable table, SynthesisOptions options)
    : table_(std::move(table)), stats_(table_), options_(options) {}

std::vector<Gate> Synthesizer::build_I(int m, int l) const {
    const int L = table_.L();
    const int M = table_.M();
    if (m < 2 || m > L) {
        throw DomainError("block index m=" + std::to_string(m) +
                          " outside [2, " + std::to_string(L) + "]");
    }
    const auto [lo, hi] = l_bounds(L, M, m);
    if (l < lo || l > hi) {
        throw DomainError("l=" + std::to_string(l) + " outside [" +
                          std::to_string(lo) + ", " + std::to_string(hi) +
                          "] for m=" + std::to_string(m));
    }

    const int target = L - m;
    const int partner = L - m + l;
    const std::vector<BitString> suffixes = enumerate(L - m, M - l);
    const bool unique_suffix = suffixes.size() == 1;

    std::vector<Gate> u_gates;
    for (const BitString &b : suffixes) {
        const auto g0 = stats_.G(0, b);
        const auto g1 = stats_.G(1, b);
        if (!g0 || !g1) {
            continue;
        }
        UAngles angles;
        try {
            angles = u_angles(*g0, *g1, options_.normalization_tolerance);
        } catch (const SynthesisError &e) {
            throw SynthesisError(std::string(e.what()) + " at (m=" +
                                 std::to_string(m) + ", l=" +
                                 std::to_string(l) + ", b=" +
                                 (b.empty() ? "{}" : b.str()) + ")");
        }
        if (options_.prune) {
            const auto u = u_matrix(angles);
            const std::array<Complex, 4> id{1.0, 0.0, 0.0, 1.0};
            bool identity = true;
            for (std::size_t i = 0; i < 4; ++i) {
                identity = identity && std::abs(u[i] - id[i]) <= kIdentityTolerance;
            }
            if (identity) {
                continue;
            }
        }
        std::vector<int> controls{partner};
        if (l > 1) {
            controls.push_back(partner - 1);
        }
        if (!unique_suffix) {
            for (const int p : ones_positions(b)) {
                controls.push_back(target - p);
            }
        }
        u_gates.push_back(
            Gate::cu(target, std::move(controls), angles, GateLabel{m, l, b}));
    }
    if (u_gates.empty()) {
        return {};
    }

    std::vector<Gate> gates;
    gates.reserve(u_gates.size() + 2);
    gates.push_back(Gate::cnot(target, partner, GateLabel{m, l, std::nullopt}));
    std::move(u_gates.begin(), u_gates.end(), std::back_inserter(gates));
    gates.push_back(Gate::cnot(target, partner, GateLabel{m, l, std::nullopt}));
    return gates;
}

std::vector<Gate> Synthesizer::build_W(int m) const {
    const auto [lo, hi] = l_bounds(table_.L(), table_.M(), m);
    std::vector<Gate> gates;
    for (int l = lo; l <= hi; ++l) {
        std::vector<Gate> block = build_I(m, l);
        std::move(block.begin(), block.end(), std::back_inserter(gates));
    }
    return gates;
}

Circuit Synthesizer::build_full() const {
    Circuit circuit;
    circuit.n_wires = table_.L();
    for (int wire = 0; wire < table_.M(); ++wire) {
        circuit.gates.push_back(Gate::x(wire));
    }
    // U_m = U_{m-1} W_m: W_L acts first on the reference state.
    for (int m = table_.L(); m >= 2; --m) {
        std::vector<Gate> block = build_W(m);
        std::move(block.begin(), block.end(),
                  std::back_inserter(circuit.gates));
    }
    return circuit;
}

Circuit build_full(const AmplitudeTable &table, SynthesisOptions options) {
    return Synthesizer(table, options).build_full();
}

GateCounts gate_counts(const Circuit &circuit) {
    GateCounts counts;
    for (const Gate &g : circuit.gates) {
        switch (g.kind) {
        case GateKind::X:
            ++counts.x;
            break;
        case GateKind::CNOT:
            ++counts.cnot;
            break;
        case GateKind::CU:
            ++counts.cu;
            break;
        }
    }
    return counts;
}

GateCounts formula_counts(int L, int M) {
    if (M <= 0 || M >= L) {
        return {static_cast<std::size_t>(std::max(M, 0)), 0, 0};
    }
    return {static_cast<std::size_t>(M),
            static_cast<std::size_t>(2 * M * (L - M)), binomial(L, M) - 1};
}

ExportFormat parse_export_format(std::string_view name) {
    if (name == "json") {
        return ExportFormat::Json;
    }
    if (name == "qasm" || name == "qasm-like") {
        return ExportFormat::Qasm;
    }
    throw DomainError("unknown export format '" + std::string(name) + "'");
}

std::string export_circuit(const Circuit &circuit, ExportFormat format) {
    switch (format) {
    case ExportFormat::Json:
        return to_json(circuit);
    case ExportFormat::Qasm:
        return to_qasm(circuit);
    }
    throw DomainError("unknown export format");
}

std::string to_json(const Circuit &circuit) {
    nlohmann::ordered_json gates = nlohmann::ordered_json::array();
    for (const Gate &g : circuit.gates) {
        nlohmann::ordered_json j;
        j["kind"] = kind_name(g.kind);
        j["target"] = g.target;
        j["controls"] = g.controls;
        if (g.kind == GateKind::CU) {
            j["theta"] = g.angles.theta;
            j["phi"] = g.angles.phi;
            j["lambda"] = g.angles.lambda;
        }
        if (g.label) {
            j["label"] = g.label->str();
        }
        gates.push_back(std::move(j));
    }
    nlohmann::ordered_json doc;
    doc["n_wires"] = circuit.n_wires;
    doc["gates"] = std::move(gates);
    return doc.dump(2) + "\n";
}

std::string to_qasm(const Circuit &circuit) {
    std::ostringstream out;
    out << "OPENQASM 3.0;\n";
    out << "include \"stdgates.inc\";\n";
    out << "qubit[" << circuit.n_wires << "] q;\n";
    int current_block = 0;
    for (const Gate &g : circuit.gates) {
        const int block = g.label ? g.label->m : 0;
        if (block != current_block) {
            out << "barrier q;\n";
            out << "// W_" << block << "\n";
            current_block = block;
        }
        switch (g.kind) {
        case GateKind::X:
            out << "x q[" << g.target << "];\n";
            break;
        case GateKind::CNOT:
            out << "cx q[" << g.controls.front() << "], q[" << g.target
                << "];\n";
            break;
        case GateKind::CU:
            out << "ctrl(" << g.controls.size() << ") @ U("
                << format_angle(g.angles.theta) << ", "
                << format_angle(g.angles.phi) << ", "
                << format_angle(g.angles.lambda) << ")";
            for (const int c : g.controls) {
                out << " q[" << c << "],";
            }
            out << " q[" << g.target << "];";
            if (g.label) {
                out << " // " << g.label->str();
            }
            out << "\n";
            break;
        }
    }
    return out.str();
}

Circuit circuit_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw DomainError(std::string("circuit JSON: ") + e.what());
    }
    try {
        Circuit circuit;
        circuit.n_wires = doc.at("n_wires").get<int>();
        for (const auto &j : doc.at("gates")) {
            const std::string kind = j.at("kind").get<std::string>();
            Gate g;
            if (kind == "x") {
                g.kind = GateKind::X;
            } else if (kind == "cnot") {
                g.kind = GateKind::CNOT;
            } else if (kind == "cu") {
                g.kind = GateKind::CU;
                g.angles = {j.at("theta").get<double>(),
                            j.at("phi").get<double>(),
                            j.at("lambda").get<double>()};
            } else {
                throw DomainError("unknown gate kind '" + kind + "'");
            }
            g.target = j.at("target").get<int>();
            g.controls = j.value("controls", std::vector<int>{});
            if (j.contains("label")) {
                g.label = GateLabel::parse(j.at("label").get<std::string>());
            }
            circuit.gates.push_back(std::move(g));
        }
        circuit.validate();
        return circuit;
    } catch (const nlohmann::json::exception &e) {
        throw DomainError(std::string("circuit JSON: ") + e.what());
    }
}

} // namespace betheprep
