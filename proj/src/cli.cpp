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

#include "betheprep/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "betheprep/bethe.hpp"
#include "betheprep/circuit.hpp"
#include "betheprep/hamiltonian.hpp"
#include "betheprep/problem.hpp"
#include "betheprep/simulator.hpp"

namespace betheprep::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::string read_input(const std::string &path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DomainError("cannot open problem file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const RunConfig &cfg, const std::string &text,
                  std::ostream &out) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
        throw DomainError("cannot open output file '" + cfg.out + "'");
    }
    file << text;
}

ojson complex_json(Complex z) { return ojson::array({z.real(), z.imag()}); }

OperatorMatrix hamiltonian_for(const ChainSpec &chain, int L) {
    if (chain.boundary == Boundary::Open) {
        return build_open(L, chain.delta, chain.h, chain.h_prime);
    }
    return build_closed(L, chain.delta);
}

/// Largest ||[H, S^z] v|| / ||v|| over a few seeded random vectors.
double commutator_defect(const OperatorMatrix &H, int L, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    const OperatorMatrix Sz = sz(L);
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        std::vector<Complex> amps(std::size_t{1} << L);
        for (Complex &a : amps) {
            a = {normal(rng), normal(rng)};
        }
        const StateVector v(L, std::move(amps));
        const StateVector hs = H.apply(Sz.apply(v));
        const StateVector sh = Sz.apply(H.apply(v));
        double diff = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            diff += std::norm(hs[i] - sh[i]);
        }
        worst = std::max(worst, std::sqrt(diff) / v.norm());
    }
    return worst;
}

int cmd_synth(const RunConfig &cfg, std::ostream &out) {
    const Problem problem = parse_problem(read_input(cfg.problem_file));
    const Circuit c = build_full(problem.table(), {cfg.prune});
    write_output(cfg, to_json(c), out);
    return kOk;
}

int cmd_export(const RunConfig &cfg, std::ostream &out) {
    const Problem problem = parse_problem(read_input(cfg.problem_file));
    const AmplitudeTable table = problem.table();
    if (cfg.format == "table") {
        write_output(cfg, table_to_json(table), out);
        return kOk;
    }
    const ExportFormat format = parse_export_format(cfg.format);
    write_output(cfg, export_circuit(build_full(table, {cfg.prune}), format),
                 out);
    return kOk;
}

int cmd_counts(const RunConfig &cfg, std::ostream &out) {
    const Problem problem = parse_problem(read_input(cfg.problem_file));
    const GateCounts counts =
        gate_counts(build_full(problem.table(), {cfg.prune}));
    const GateCounts formula = formula_counts(problem.L, problem.M);
    ojson doc;
    doc["L"] = problem.L;
    doc["M"] = problem.M;
    doc["x"] = counts.x;
    doc["cnot"] = counts.cnot;
    doc["cu"] = counts.cu;
    doc["formula"] = {{"x", formula.x},
                      {"cnot", formula.cnot},
                      {"cu", formula.cu}};
    write_output(cfg, doc.dump(2) + "\n", out);
    return kOk;
}

int cmd_run(const RunConfig &cfg, std::ostream &out) {
    const Problem problem = parse_problem(read_input(cfg.problem_file));
    const AmplitudeTable table = problem.table();
    const StateVector state =
        run(zero_state(table.L()), build_full(table, {cfg.prune}));
    if (cfg.dump_state) {
        write_output(cfg, state_to_json(state), out);
        return kOk;
    }
    std::size_t nonzero = 0;
    for (const Complex &a : state.amps()) {
        nonzero += std::abs(a) > 1e-12 ? 1 : 0;
    }
    ojson doc;
    doc["n_wires"] = state.n_wires();
    doc["norm"] = state.norm();
    doc["nonzero"] = nonzero;
    write_output(cfg, doc.dump(2) + "\n", out);
    return kOk;
}

int cmd_check_roots(const RunConfig &cfg, std::ostream &out) {
    const Problem problem = parse_problem(read_input(cfg.problem_file));
    const auto chain = problem.chain();
    const auto roots = problem.roots();
    if (!chain || !roots) {
        throw DomainError("check-roots needs a Bethe problem (closed or open)");
    }
    const ResidualReport report = bethe_residuals(*chain, *roots, problem.L);
    const EnergyReport e = energy(*roots, chain->delta);

    ojson residuals = ojson::array();
    for (const Complex &r : report.per_root) {
        residuals.push_back(std::isfinite(r.real()) ? complex_json(r)
                                                    : ojson(nullptr));
    }
    ojson doc;
    doc["residuals"] = std::move(residuals);
    doc["singular"] = report.singular;
    doc["max_abs"] =
        std::isfinite(report.max_abs) ? ojson(report.max_abs) : ojson(nullptr);
    doc["energy"] = e.is_real ? ojson(e.real()) : complex_json(e.value);
    doc["energy_is_real"] = e.is_real;
    doc["sz"] = sz_eigenvalue(problem.L, problem.M);
    doc["warnings"] = report.warnings;
    write_output(cfg, doc.dump(2) + "\n", out);
    return kOk;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
    const Problem problem = parse_problem(read_input(cfg.problem_file));
    const AmplitudeTable table = problem.table();
    const Tolerances &tol = cfg.tolerances;

    const StateVector prepared =
        run(zero_state(table.L()), build_full(table, {cfg.prune}));
    const Complex fidelity = overlap(target_state(table), prepared);
    const double sz_value = expectation(sz(table.L()), prepared).real();

    bool pass = std::abs(fidelity - 1.0) <= tol.fidelity &&
                std::abs(sz_value - sz_eigenvalue(table.L(), table.M())) <=
                    tol.sz;

    ojson doc;
    doc["fidelity_re"] = fidelity.real();
    doc["fidelity_im"] = fidelity.imag();
    doc["energy"] = nullptr;
    doc["eigen_residual"] = nullptr;
    doc["sz"] = sz_value;
    doc["bethe_residual_max"] = nullptr;

    if (const auto chain = problem.chain(); chain) {
        const BetheRoots roots = *problem.roots();
        const EnergyReport e = energy(roots, chain->delta);
        const OperatorMatrix H = hamiltonian_for(*chain, table.L());
        const double residual = eigen_residual(H, prepared, e.real());
        const ResidualReport bethe = bethe_residuals(*chain, roots, table.L());
        const double defect = commutator_defect(H, table.L(), cfg.seed);
        doc["energy"] = e.is_real ? ojson(e.real()) : complex_json(e.value);
        doc["eigen_residual"] = residual;
        doc["bethe_residual_max"] = std::isfinite(bethe.max_abs)
                                        ? ojson(bethe.max_abs)
                                        : ojson(nullptr);
        doc["commutator_defect"] = defect;
        pass = pass && e.is_real && residual <= tol.eigen_residual &&
               bethe.max_abs <= tol.bethe_residual &&
               defect <= tol.commutator;
    }
    doc["pass"] = pass;
    write_output(cfg, doc.dump(2) + "\n", out);
    return pass ? kOk : kVerificationFailed;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Deterministic preparation circuits for fixed-weight states "
                 "and XXZ Bethe states",
                 "betheprep"};
    app.require_subcommand(1);

    const auto add_common = [&](CLI::App *sub) {
        sub->add_option("problem", cfg.problem_file,
                        "Problem definition JSON ('-' for stdin)")
            ->required();
        sub->add_option("-o,--out", cfg.out, "Write the report to this file");
        sub->add_flag("--prune", cfg.prune,
                      "Drop u-gates equal to the identity");
        sub->add_option("--seed", cfg.seed,
                        "Seed for randomized spot checks");
    };

    CLI::App *synth = app.add_subcommand("synth", "Emit the circuit as JSON");
    CLI::App *run_cmd =
        app.add_subcommand("run", "Simulate the circuit from |0...0>");
    run_cmd->add_flag("--dump-state", cfg.dump_state,
                      "Print the output amplitudes as [[re, im], ...]");
    CLI::App *verify = app.add_subcommand(
        "verify", "Check fidelity, eigen-residual and Bethe residuals");
    verify
        ->add_option("--tol-fidelity", cfg.tolerances.fidelity,
                     "Bound on |<target|prepared> - 1|")
        ->check(CLI::PositiveNumber);
    verify
        ->add_option("--tol-eigen", cfg.tolerances.eigen_residual,
                     "Bound on ||H psi - E psi||")
        ->check(CLI::PositiveNumber);
    verify
        ->add_option("--tol-bethe", cfg.tolerances.bethe_residual,
                     "Bound on the largest Bethe-equation residual")
        ->check(CLI::PositiveNumber);
    CLI::App *counts = app.add_subcommand("counts", "Tally gates by kind");
    CLI::App *check_roots = app.add_subcommand(
        "check-roots", "Bethe-equation residuals, energy and S^z");
    CLI::App *exp = app.add_subcommand("export", "Serialize the circuit");
    exp->add_option("-f,--format", cfg.format, "qasm, json or table")
        ->check(CLI::IsMember({"qasm", "qasm-like", "json", "table"}));

    for (CLI::App *sub : {synth, run_cmd, verify, counts, check_roots, exp}) {
        add_common(sub);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        // Help and version requests exit 0 and print to `out`.
        return app.exit(e, out, err) == 0 ? kOk : kInputError;
    }

    const CLI::App *chosen = app.get_subcommands().front();
    cfg.command = chosen->get_name();
    try {
        if (cfg.command == "synth") {
            return cmd_synth(cfg, out);
        }
        if (cfg.command == "run") {
            return cmd_run(cfg, out);
        }
        if (cfg.command == "verify") {
            return cmd_verify(cfg, out);
        }
        if (cfg.command == "counts") {
            return cmd_counts(cfg, out);
        }
        if (cfg.command == "check-roots") {
            return cmd_check_roots(cfg, out);
        }
        return cmd_export(cfg, out);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

} // namespace betheprep::cli
