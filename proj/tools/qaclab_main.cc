// Copyright 2026 The qaclab Authors
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


// qaclab command line. Exit codes: 0 success / pass, 1 a negative answer (violation,
// invalid certificate, circuit that does not compute parity), 2 usage or input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qaclab/circuit/circuit.h"
#include "qaclab/circuit/circuit_io.h"
#include "qaclab/circuit/simplification.h"
#include "qaclab/errors.h"
#include "qaclab/harness/suite.h"
#include "qaclab/numerics/scalar_io.h"
#include "qaclab/parity/certificate.h"
#include "qaclab/parity/dense_operator.h"
#include "qaclab/parity/parity.h"
#include "qaclab/parity/refute.h"
#include "qaclab/state/state_io.h"

namespace {

using namespace qaclab;

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_output(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!(out << text)) {
        throw UsageError("cannot write " + path);
    }
}

Circuit load_circuit(const std::string &path) {
    return parse_circuit(read_file(path));
}

// |0...0> when no file is given.
StateVector load_ancilla(const Circuit &c, const std::string &path) {
    if (path.empty()) {
        return StateVector::basis(c.num_ancillas(), 0);
    }
    StateVector a = parse_state(read_file(path));
    if (a.num_qubits() != c.num_ancillas()) {
        throw UsageError("ancilla has " + std::to_string(a.num_qubits()) + " qubits, circuit has " +
                         std::to_string(c.num_ancillas()));
    }
    return a;
}

struct SimulateArgs {
    std::string circuit, input, ancilla;
    bool trace = false;
};

int cmd_simulate(const SimulateArgs &a) {
    const Circuit c = load_circuit(a.circuit);
    if (static_cast<int>(a.input.size()) != c.num_inputs() || a.input.find_first_not_of("01") != std::string::npos) {
        throw UsageError("input must be " + std::to_string(c.num_inputs()) + " bits of 0/1");
    }
    const uint64_t x = a.input.empty() ? 0 : std::stoull(a.input, nullptr, 2);
    std::vector<StateVector> trace;
    const StateVector out = simulate(c, initial_state(c, x, load_ancilla(c, a.ancilla)), a.trace ? &trace : nullptr);
    for (size_t i = 0; i < trace.size(); ++i) {
        std::cout << "# after layer " << layer_name(static_cast<int>(i) + 1) << "\n" << format_state(trace[i]);
    }
    if (a.trace) {
        std::cout << "# final\n";
    }
    std::cout << format_state(out);
    return 0;
}

int cmd_check_parity(const std::string &circuit, const std::string &ancilla) {
    const Circuit c = load_circuit(circuit);
    const FunctionCheck r = computes_parity_on_basis(c, load_ancilla(c, ancilla));
    if (r.computes) {
        std::cout << "computes parity: yes (worst residual " << format_real(r.worst_residual) << ")\n";
        return 0;
    }
    std::cout << "computes parity: no (input " << *r.counterexample << ", worst residual "
              << format_real(r.worst_residual) << ")\n";
    return 1;
}

int cmd_classify(const std::string &circuit, int layer, const std::string &state) {
    const Circuit c = load_circuit(circuit);
    if (layer < 1 || layer > c.depth()) {
        throw UsageError("layer must be a CZ layer 1.." + std::to_string(c.depth()));
    }
    StateVector psi = parse_state(read_file(state));
    if (psi.num_qubits() != c.num_qubits()) {
        throw UsageError("state has " + std::to_string(psi.num_qubits()) + " qubits, circuit has " +
                         std::to_string(c.num_qubits()));
    }
    apply_layers(c, 1, 2 * layer - 1, psi);
    for (const auto &g : c.multis(2 * layer)) {
        std::cout << g.to_string() << ": " << classify_simplification(g.qubits(), psi).to_string() << "\n";
    }
    return 0;
}

int cmd_reduce(const std::string &circuit, const std::string &out) {
    const Circuit c = load_circuit(circuit);
    write_output(out, serialize_circuit(depth_reduce(c)));
    return 0;
}

int cmd_kill_parity(const std::string &unitaries, int b, const std::string &out) {
    const auto ops = parse_operators(read_file(unitaries));
    if (ops.empty()) {
        throw UsageError("no operators in " + unitaries);
    }
    write_output(out, format_state(kill_parity_state(ops.front().num_qubits(), ops, b)));
    return 0;
}

int cmd_refute(const std::string &circuit, const std::string &ancilla, const std::string &out) {
    const Circuit c = load_circuit(circuit);
    const StateVector a = load_ancilla(c, ancilla);
    std::optional<RefutationCertificate> cert;
    if (c.depth() == 1) {
        cert = refute_depth1(c, a);
    } else if (c.depth() == 2) {
        cert = refute_depth2_structural(c, a);
    } else {
        throw UsageError("refute handles depth 1 and 2 circuits");
    }
    if (!cert) {
        std::cerr << "no structural refutation applies to this circuit\n";
        return 1;
    }
    write_output(out, format_certificate(*cert));
    return 0;
}

int cmd_verify_cert(const std::string &circuit, const std::string &cert) {
    const CertificateCheck r = verify_certificate(load_circuit(circuit), parse_certificate(read_file(cert)));
    if (r.valid) {
        std::cout << "valid\n";
        return 0;
    }
    std::cout << "invalid: " << r.reason << "\n";
    return 1;
}

struct VerifyArgs {
    std::string suite;
    std::optional<int> trials, qubits;
    std::optional<uint64_t> seed, replay;
    std::optional<double> abs_tol, rel_tol;
    std::string backend, report, format = "text";
    int jobs = 1;
};

SuiteConfig verify_config(const std::string &suite, const VerifyArgs &a) {
    SuiteConfig c = default_config(suite);
    if (a.trials) c.trials = *a.trials;
    if (a.qubits) c.max_qubits = *a.qubits;
    if (a.seed) c.seed = *a.seed;
    if (a.abs_tol) c.tol.abs_eps = *a.abs_tol;
    if (a.rel_tol) c.tol.rel_eps = *a.rel_tol;
    if (!a.backend.empty()) c.backend = parse_backend(a.backend);
    c.validate();
    return c;
}

int cmd_verify(const VerifyArgs &a) {
    const ReportFormat format = a.format == "machine" ? ReportFormat::Machine : ReportFormat::Text;
    std::vector<std::string> suites = a.suite == "all" ? suite_names() : std::vector<std::string>{a.suite};
    if (a.replay) {
        if (suites.size() != 1) {
            throw UsageError("--replay needs a single suite");
        }
        const InstanceResult r = run_instance(verify_config(a.suite, a), *a.replay);
        std::cout << a.suite << " instance " << *a.replay << ": "
                  << (r.violated ? "VIOLATION: " + r.detail : std::string("ok")) << "\n"
                  << r.dump;
        return r.violated ? 1 : 0;
    }
    std::vector<SuiteConfig> configs;
    for (const auto &s : suites) {
        configs.push_back(verify_config(s, a));
    }
    std::string doc;
    bool pass = true;
    for (const auto &c : configs) {
        const SuiteReport r = run_suite(c, a.jobs);
        const std::string one = emit_report(r, format);
        std::cout << one << std::flush;
        doc += one;
        pass = pass && r.passed();
    }
    if (!a.report.empty()) {
        write_output(a.report, doc);
    }
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qaclab: QAC circuits, entanglement lemmas and parity lower-bound tooling"};
    app.require_subcommand(1);
    std::function<int()> run;

    SimulateArgs sim;
    auto *simulate_cmd = app.add_subcommand("simulate", "Run a circuit on a classical input");
    simulate_cmd->add_option("-c,--circuit", sim.circuit, "Circuit file")->required();
    simulate_cmd->add_option("-i,--input", sim.input, "Input bits, input 1 first")->required();
    simulate_cmd->add_option("--ancilla", sim.ancilla, "Ancilla state file (default |0...0>)");
    simulate_cmd->add_flag("--trace", sim.trace, "Print the state after every layer");
    simulate_cmd->callback([&] { run = [&] { return cmd_simulate(sim); }; });

    std::string circuit, ancilla, out, state, cert_file, unitaries;
    int layer = 0, parity = 0;

    auto *check_cmd = app.add_subcommand("check-parity", "Check that a circuit computes parity on every input");
    check_cmd->add_option("-c,--circuit", circuit, "Circuit file")->required();
    check_cmd->add_option("--ancilla", ancilla, "Ancilla state file (default |0...0>)");
    check_cmd->callback([&] { run = [&] { return cmd_check_parity(circuit, ancilla); }; });

    auto *classify_cmd =
        app.add_subcommand("classify", "Classify each gate of a CZ layer on the state reached from --state");
    classify_cmd->add_option("-c,--circuit", circuit, "Circuit file")->required();
    classify_cmd->add_option("--layer", layer, "CZ layer index (integer)")->required();
    classify_cmd->add_option("--state", state, "Initial state of the whole register")->required();
    classify_cmd->callback([&] { run = [&] { return cmd_classify(circuit, layer, state); }; });

    auto *reduce_cmd = app.add_subcommand("reduce", "Remove the last CZ layer when the target allows it");
    reduce_cmd->add_option("-c,--circuit", circuit, "Circuit file")->required();
    reduce_cmd->add_option("-o,--output", out, "Output circuit file (default stdout)");
    reduce_cmd->callback([&] { run = [&] { return cmd_reduce(circuit, out); }; });

    auto *kill_cmd = app.add_subcommand("kill-parity", "Parity state that turns off <1..1| U_i for every operator");
    kill_cmd->add_option("--unitaries", unitaries, "Operator file")->required();
    kill_cmd->add_option("--parity", parity, "Parity b")->required()->check(CLI::Range(0, 1));
    kill_cmd->add_option("-o,--output", out, "Output state file (default stdout)");
    kill_cmd->callback([&] { run = [&] { return cmd_kill_parity(unitaries, parity, out); }; });

    auto *refute_cmd = app.add_subcommand("refute", "Certificate that a depth-1 or depth-2 circuit misses parity");
    refute_cmd->add_option("-c,--circuit", circuit, "Circuit file")->required();
    refute_cmd->add_option("--ancilla", ancilla, "Ancilla state file (default |0...0>)");
    refute_cmd->add_option("-o,--output", out, "Output certificate file (default stdout)");
    refute_cmd->callback([&] { run = [&] { return cmd_refute(circuit, ancilla, out); }; });

    auto *vcert_cmd = app.add_subcommand("verify-cert", "Re-check a refutation certificate");
    vcert_cmd->add_option("-c,--circuit", circuit, "Circuit file")->required();
    vcert_cmd->add_option("certificate", cert_file, "Certificate file")->required();
    vcert_cmd->callback([&] { run = [&] { return cmd_verify_cert(circuit, cert_file); }; });

    VerifyArgs ver;
    std::string suites_help = "Suite name or 'all':";
    for (const auto &n : suite_names()) {
        suites_help += " " + n;
    }
    auto *verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", ver.suite, suites_help)->required();
    verify_cmd->add_option("--trials", ver.trials, "Instances to run");
    verify_cmd->add_option("--qubits", ver.qubits, "Largest register an instance may use");
    verify_cmd->add_option("--seed", ver.seed, "Master seed");
    verify_cmd->add_option("--backend", ver.backend, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    verify_cmd->add_option("--abs-tol", ver.abs_tol, "Absolute tolerance");
    verify_cmd->add_option("--rel-tol", ver.rel_tol, "Relative tolerance");
    verify_cmd->add_option("--report", ver.report, "Also write the report to this file");
    verify_cmd->add_option("--format", ver.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    verify_cmd->add_option("--jobs", ver.jobs, "Worker threads")->check(CLI::Range(1, 256));
    verify_cmd->add_option("--replay", ver.replay, "Run only this instance and print its dump");
    verify_cmd->callback([&] { run = [&] { return cmd_verify(ver); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }
    try {
        return run();
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const QaclabError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
