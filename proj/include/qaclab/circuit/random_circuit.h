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


#ifndef QACLAB_CIRCUIT_RANDOM_CIRCUIT_H
#define QACLAB_CIRCUIT_RANDOM_CIRCUIT_H

#include <vector>

#include "qaclab/circuit/circuit.h"

namespace qaclab {

/// Random unitary e^{i g} [[a, -conj(b)], [b, conj(a)]] with (a, b) uniform on the
/// unit sphere. Float.
OneQubitGate random_one_qubit_gate(SeededRng &rng);

/// Random unit phase e^{i t} with t uniform in [0.1, 2 pi - 0.1], so eta != 1.
Scalar random_eta(SeededRng &rng);

/// Random disjoint groups of at least two qubits drawn from `qubits`; each qubit
/// joins some group with probability `coverage`.
std::vector<QubitSet> random_disjoint_groups(const QubitSet &qubits, double coverage, SeededRng &rng);

struct RandomCircuitOptions {
    /// Chance that a qubit gets an explicit gate on a 1-qubit layer.
    double single_density = 0.8;
    /// Chance that a qubit joins a multiqubit gate on a CZ layer.
    double coverage = 0.8;
    /// Chance that a multiqubit gate is G_eta rather than CZ.
    double geta_fraction = 0.0;
};

Circuit random_circuit(int num_inputs, int num_ancillas, int depth, SeededRng &rng,
                       const RandomCircuitOptions &opt = {});

}  // namespace qaclab

#endif
