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


#ifndef QACLAB_CIRCUIT_CIRCUIT_H
#define QACLAB_CIRCUIT_CIRCUIT_H

#include <array>
#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qaclab/circuit/gates.h"

namespace qaclab {

/// A layered QAC circuit on 1 + n + m qubits: target 0, inputs 1..n, ancillas
/// n+1..n+m.
///
/// Layers are addressed by twice their index: odd values 1, 3, ..., 2d+1 are the
/// 1-qubit layers 0.5, 1.5, ..., d+0.5 and even values 2, 4, ..., 2d the CZ/G_eta
/// layers 1..d. A missing 1-qubit gate is I.
class Circuit {
   public:
    /// Throws PreconditionError on negative sizes or depth, and BudgetExceededError
    /// above kMaxQubits.
    Circuit(int num_inputs, int num_ancillas, int depth);

    int num_qubits() const {
        return 1 + n_ + m_;
    }
    int num_inputs() const {
        return n_;
    }
    int num_ancillas() const {
        return m_;
    }
    int depth() const {
        return static_cast<int>(multi_.size());
    }
    QubitSet inputs() const;
    QubitSet ancillas() const;

    /// G_q at 1-qubit layer `twice` (odd).
    const OneQubitGate &single(int twice, int qubit) const;
    void set_single(int twice, int qubit, const OneQubitGate &g);
    /// Explicitly placed gates of a 1-qubit layer, by qubit.
    const std::map<int, OneQubitGate> &singles(int twice) const;

    /// Gates of CZ layer `twice` (even), sorted by their smallest qubit.
    const std::vector<MultiQubitGate> &multis(int twice) const;
    /// Throws ShapeError ("layer disjointness violated") if g overlaps a gate already
    /// on the layer, PreconditionError on an empty or out-of-range qubit set.
    void add_multi(int twice, const MultiQubitGate &g);
    /// The gate of layer `twice` incident to `qubit`, if any.
    std::optional<MultiQubitGate> gate_at(int twice, int qubit) const;

    bool identical(const Circuit &o) const;

   private:
    void check_layer(int twice, bool odd) const;
    void check_qubit(int qubit) const;

    int n_;
    int m_;
    std::vector<std::map<int, OneQubitGate>> single_;  // index (twice - 1) / 2
    std::vector<std::vector<MultiQubitGate>> multi_;   // index twice / 2 - 1
};

/// "0.5", "1", "1.5", ...
std::string layer_name(int twice);

/// Applies the layers first..last (inclusive, in twice units) to psi.
void apply_layers(const Circuit &c, int first, int last, StateVector &psi);

/// Runs every layer on `initial`. With `trace`, records the state after each of
/// the 2d+1 layers. Throws ShapeError on a size mismatch.
StateVector simulate(const Circuit &c, const StateVector &initial, std::vector<StateVector> *trace = nullptr);

/// Row-major 2x2 density matrix of one qubit.
using Density2 = std::array<std::complex<double>, 4>;

/// Reduced state of qubit 0 (the target) of psi.
Density2 target_density(const StateVector &psi);

/// Largest entry of |a - b|.
double density_distance(const Density2 &a, const Density2 &b);

/// |0> (x) |x> (x) ancilla, where x is read with input 1 most significant.
StateVector initial_state(const Circuit &c, uint64_t x, const StateVector &ancilla);

/// Whether the target's final gate G_0^(d+1/2) is semiclassical.
bool target_is_pass_through(const Circuit &c, const Tolerance &tol = {});

/// Whether the target meets a gate on more than one qubit at the last CZ layer.
bool target_has_multiqubit_last_gate(const Circuit &c);

/// A depth-(d-1) circuit that leaves the target's final state unchanged.
///
/// Case 1 (no multiqubit gate on the target at layer d) drops everything after
/// layer d-1/2 and folds the target's layer d, d+1/2 gates into its layer d-1/2
/// gate. Case 2 (pass-through target) drops layer d and the non-target gates of
/// layer d+1/2 and folds G_0^(d+1/2) into G_0^(d-1/2). Case 1 is used when both
/// apply. Throws PreconditionError if d < 2 or neither case applies.
Circuit depth_reduce(const Circuit &c, const Tolerance &tol = {});

struct FunctionCheck {
    bool computes = false;
    /// First classical input on which the target is not |f(x)> (unentangled).
    std::optional<uint64_t> counterexample;
    /// Largest weight found on the wrong target value, relative to the state norm.
    double worst_residual = 0;
};

/// Whether c |alpha>-computes f on every classical input: the final state must lie
/// in the target = f(x) subspace (exactly for Exact states, within tol otherwise).
/// Throws ShapeError if the ancilla does not have m qubits.
FunctionCheck computes_function_on_basis(const Circuit &c, const StateVector &ancilla,
                                         const std::function<int(uint64_t)> &f, const Tolerance &tol = {});

/// computes_function_on_basis with f = parity of x.
FunctionCheck computes_parity_on_basis(const Circuit &c, const StateVector &ancilla, const Tolerance &tol = {});

/// The depth-2 circuit computing the parity of 3 inputs: H on 0 and 2; CZ{0,1},
/// CZ{2,3}; H on 2; CZ{0,2}; H on 0.
Circuit parity3_circuit();

}  // namespace qaclab

#endif
