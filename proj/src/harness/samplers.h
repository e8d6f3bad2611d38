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


#ifndef QACLAB_SRC_HARNESS_SAMPLERS_H
#define QACLAB_SRC_HARNESS_SAMPLERS_H

#include <string>

#include "qaclab/circuit/circuit.h"
#include "qaclab/harness/suite.h"
#include "qaclab/state/separability.h"

namespace qaclab::harness {

/// A unit phase other than 1. Exact draws come from {-1, +-i, (+-1 +- i)/sqrt2}.
Scalar random_phase(SeededRng &rng, Backend backend);

/// Float: random_one_qubit_gate. Exact: a product of one to three H and
/// diag(1, eta) factors with eta from random_phase.
OneQubitGate random_gate(SeededRng &rng, Backend backend);

/// r-qubit state in which each qubit is pinned to |0> or |1> with probability
/// `pin`; the other qubits get a random (generally entangled) state. Exact states
/// are built by random exact gates and CZs on a random basis state.
StateVector random_side_state(int r, double pin, SeededRng &rng, Backend backend);

/// Random bipartition of {0..r-1}, r >= 2.
Bipartition random_bipartition(int r, SeededRng &rng);

/// One qubit from each side of p plus every other qubit with probability 1/2.
QubitSet random_straddling_set(const Bipartition &p, SeededRng &rng);

/// Labels of S inside `side`, renumbered 0.. in label order.
QubitSet local_labels(const QubitSet &S, const QubitSet &side);

/// 1-qubit gates on every qubit of the 1-qubit layers drawn with random_gate, and
/// every G_eta replaced by one with a random_phase; CZ gates are kept.
Circuit redress(const Circuit &c, SeededRng &rng, Backend backend);

/// format_state, or a placeholder for the empty register.
std::string dump_state(const StateVector &psi);

/// Dump fragments: a "name: value" line and a "[name]" section.
std::string dump_line(const std::string &name, const std::string &value);
std::string dump_block(const std::string &name, const std::string &text);

}  // namespace qaclab::harness

#endif
