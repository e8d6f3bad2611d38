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


#include "qaclab/parity/refute.h"

#include <cmath>

#include "qaclab/circuit/simplification.h"
#include "qaclab/errors.h"
#include "qaclab/parity/parity.h"

namespace qaclab {

namespace {

using Kind = RefutationCertificate::Kind;

void check_ancilla(const Circuit &c, const StateVector &ancilla) {
    if (ancilla.num_qubits() != c.num_ancillas()) {
        throw ShapeError("ancilla has " + std::to_string(ancilla.num_qubits()) + " qubits, circuit has " +
                         std::to_string(c.num_ancillas()));
    }
}

QubitSet target_gate(const Circuit &c, int twice) {
    auto g = c.gate_at(twice, 0);
    return g ? g->qubits() : QubitSet{0};
}

std::vector<int> inputs_in(const Circuit &c, const QubitSet &S) {
    std::vector<int> out;
    for (int q : S) {
        if (q >= 1 && q <= c.num_inputs()) {
            out.push_back(q);
        }
    }
    return out;
}

DenseOperator layer_gates(const Circuit &c, int twice, const std::vector<int> &qubits) {
    std::vector<OneQubitGate> gates;
    for (int q : qubits) {
        gates.push_back(c.single(twice, q));
    }
    return DenseOperator::kron(gates);
}

// Input register: `part` on the input qubits `at` (circuit labels, ascending), |0>
// elsewhere.
StateVector input_register(const Circuit &c, const StateVector &part, const std::vector<int> &at) {
    QubitSet positions;
    for (int q : at) {
        positions.insert(q - 1);
    }
    return tensor(part, StateVector::basis(c.num_inputs() - part.num_qubits(), 0), positions);
}

StateVector initial_for(const Circuit &c, const StateVector &input, const StateVector &ancilla) {
    QubitSet front;
    for (int q = 0; q < c.num_inputs(); ++q) {
        front.insert(q);
    }
    return tensor(StateVector::basis(1, 0), tensor(input, ancilla, front), {0});
}

Density2 final_target(const Circuit &c, const StateVector &input, const StateVector &ancilla) {
    return target_density(simulate(c, initial_for(c, input, ancilla)));
}

RefutationCertificate build(const Circuit &c, const StateVector &ancilla, Kind kind, std::string tactic,
                            std::optional<int> designated, std::array<StateVector, 2> inputs,
                            std::array<int, 2> parities) {
    RefutationCertificate cert;
    cert.kind = kind;
    cert.tactic = std::move(tactic);
    cert.designated = designated;
    cert.parities = parities;
    cert.ancilla = ancilla;
    for (int s = 0; s < 2; ++s) {
        cert.targets[s] = final_target(c, inputs[s], ancilla);
    }
    cert.inputs = std::move(inputs);
    return cert;
}

RefutationCertificate checked(const Circuit &c, RefutationCertificate cert, const Tolerance &tol) {
    CertificateCheck check = verify_certificate(c, cert, tol);
    if (!check.valid) {
        throw LemmaViolationError(cert.tactic + " certificate failed verification: " + check.reason);
    }
    return cert;
}

// Killer states on `pair` for both parities, other inputs |0>.
std::array<StateVector, 2> killer_inputs(const Circuit &c, const std::vector<int> &qubits,
                                         const std::vector<DenseOperator> &units, const Tolerance &tol) {
    const int r = static_cast<int>(qubits.size());
    return {input_register(c, kill_parity_state(r, units, 0, tol), qubits),
            input_register(c, kill_parity_state(r, units, 1, tol), qubits)};
}

// `part` on `at` and |v> on input j, for v = 0, 1.
RefutationCertificate independent_of(const Circuit &c, const StateVector &ancilla, const std::string &tactic,
                                     const StateVector &part, const std::vector<int> &at, int j, int parity) {
    StateVector flipped = input_register(c, part, at);
    StateVector base = flipped;
    flipped.apply_1q(OneQubitGate::X().matrix(), j - 1);
    return build(c, ancilla, Kind::TargetIndependence, tactic, j, {base, flipped}, {parity, parity ^ 1});
}

}  // namespace

RefutationCertificate refute_depth1(const Circuit &c, const StateVector &ancilla, const Tolerance &tol) {
    if (c.depth() != 1) {
        throw PreconditionError("refute_depth1 needs a depth-1 circuit, got depth " + std::to_string(c.depth()));
    }
    if (c.num_inputs() < 2) {
        throw PreconditionError("refute_depth1 needs at least 2 inputs");
    }
    check_ancilla(c, ancilla);
    const QubitSet T = target_gate(c, 2);
    for (int j = 1; j <= c.num_inputs(); ++j) {
        if (!T.count(j)) {
            return checked(c, independent_of(c, ancilla, "depth1-untouched-input", StateVector(), {}, j, 0), tol);
        }
    }
    const std::vector<int> pair{1, 2};
    auto inputs = killer_inputs(c, pair, {layer_gates(c, 1, pair)}, tol);
    return checked(c, build(c, ancilla, Kind::ParityMismatch, "depth1-kill", std::nullopt, std::move(inputs), {0, 1}),
                   tol);
}

std::optional<RefutationCertificate> refute_depth2_structural(const Circuit &c, const StateVector &ancilla,
                                                              const Tolerance &tol) {
    if (c.depth() != 2) {
        throw PreconditionError("refute_depth2_structural needs a depth-2 circuit, got depth " +
                                std::to_string(c.depth()));
    }
    check_ancilla(c, ancilla);
    const int n = c.num_inputs();
    const QubitSet S = target_gate(c, 4);

    // (i) a layer-1 gate on three or more inputs.
    if (n >= 3) {
        for (const auto &g : c.multis(2)) {
            const std::vector<int> ins = inputs_in(c, g.qubits());
            if (ins.size() < 3) {
                continue;
            }
            for (auto it = ins.rbegin(); it != ins.rend(); ++it) {
                const int j = *it;
                if (S.count(j)) {
                    continue;
                }
                std::vector<int> pair;
                for (int q : ins) {
                    if (q != j && pair.size() < 2) {
                        pair.push_back(q);
                    }
                }
                const StateVector psi = kill_parity_state(2, {layer_gates(c, 1, pair)}, 0, tol);
                return checked(c, independent_of(c, ancilla, "three-inputs-case1", psi, pair, j, 0), tol);
            }
            const std::vector<int> triple(ins.begin(), ins.begin() + 3);
            const DenseOperator U1 = layer_gates(c, 1, triple);
            const DenseOperator U2 = layer_gates(c, 3, triple) * U1;
            auto inputs = killer_inputs(c, triple, {U1, U2}, tol);
            return checked(
                c, build(c, ancilla, Kind::ParityMismatch, "three-inputs-case2", std::nullopt, std::move(inputs), {0, 1}),
                tol);
        }
    }

    // (ii) the target's layer-1 gate on two or more inputs.
    const std::vector<int> ins = inputs_in(c, target_gate(c, 2));
    if (ins.size() < 2) {
        return std::nullopt;
    }
    const std::vector<int> pair(ins.begin(), ins.begin() + 2);
    const DenseOperator U1 = layer_gates(c, 1, pair);
    std::array<StateVector, 2> killers{kill_parity_state(2, {U1}, 0, tol), kill_parity_state(2, {U1}, 1, tol)};
    std::array<StateVector, 2> inputs{input_register(c, killers[0], pair), input_register(c, killers[1], pair)};

    RefutationCertificate same =
        build(c, ancilla, Kind::ParityMismatch, "target-one-input-pair", std::nullopt, inputs, {0, 1});
    if (verify_certificate(c, same, tol).valid) {
        return same;
    }
    if (n < 3) {
        return std::nullopt;
    }
    // Prefer the parity on which the target's layer-2 gate disappears.
    std::vector<int> order{0, 1};
    if (S.size() > 1) {
        std::vector<StateVector> trace;
        std::array<bool, 2> gone{};
        for (int b = 0; b < 2; ++b) {
            simulate(c, initial_for(c, inputs[b], ancilla), &trace);
            gone[b] = classify_simplification(S, trace[2], tol).kind == SimplificationOutcome::Kind::Disappears;
        }
        if (gone[1] && !gone[0]) {
            order = {1, 0};
        }
    }
    for (int b : order) {
        for (int j = 1; j <= n; ++j) {
            if (j == pair[0] || j == pair[1]) {
                continue;
            }
            RefutationCertificate cert = independent_of(c, ancilla, "target-one-input-third", killers[b], pair, j, b);
            if (verify_certificate(c, cert, tol).valid) {
                return cert;
            }
        }
    }
    return std::nullopt;
}

}  // namespace qaclab
