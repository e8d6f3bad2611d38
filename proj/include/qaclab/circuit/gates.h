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


#ifndef QACLAB_CIRCUIT_GATES_H
#define QACLAB_CIRCUIT_GATES_H

#include <optional>
#include <string>
#include <string_view>

#include "qaclab/state/state_vector.h"

namespace qaclab {

/// A 1-qubit gate. Named gates keep their name for serialization; everything else
/// is an explicit matrix.
class OneQubitGate {
   public:
    enum class Name { I, X, Y, Z, H, Matrix };

    /// Identity.
    OneQubitGate() : OneQubitGate(Name::I) {}

    static OneQubitGate I() {
        return OneQubitGate(Name::I);
    }
    static OneQubitGate X() {
        return OneQubitGate(Name::X);
    }
    static OneQubitGate Y() {
        return OneQubitGate(Name::Y);
    }
    static OneQubitGate Z() {
        return OneQubitGate(Name::Z);
    }
    static OneQubitGate H() {
        return OneQubitGate(Name::H);
    }
    /// Looks up I, X, Y, Z or H. Returns nullopt for anything else.
    static std::optional<OneQubitGate> named(std::string_view name);
    /// Explicit matrix. Throws PreconditionError unless U U^* = I (exactly for Exact
    /// entries, within tol otherwise).
    static OneQubitGate from_matrix(const Matrix2 &m, const Tolerance &tol = {});

    Name name() const {
        return name_;
    }
    /// "I", "X", ... or "matrix".
    std::string name_string() const;
    const Matrix2 &matrix() const {
        return m_;
    }
    bool is_identity() const;

    OneQubitGate adjoint() const;
    /// this * o, i.e. o is applied first. Named when the product is exactly a
    /// named gate.
    OneQubitGate then_after(const OneQubitGate &o) const;

    bool identical(const OneQubitGate &o) const;

   private:
    explicit OneQubitGate(Name n);
    OneQubitGate(Name n, const Matrix2 &m) : name_(n), m_(m) {}

    Name name_;
    Matrix2 m_;
};

/// CZ_S or G_eta on S: multiplies the amplitude of basis states with 1s
/// throughout S by -1 (CZ) or eta (GEta). CZ on the empty set is -I.
class MultiQubitGate {
   public:
    enum class Kind { CZ, GEta };

    static MultiQubitGate cz(QubitSet qubits);
    /// Throws PreconditionError unless |eta| = 1 ("GEta modulus") and eta != 1.
    static MultiQubitGate geta(const Scalar &eta, QubitSet qubits, const Tolerance &tol = {});

    Kind kind() const {
        return kind_;
    }
    const QubitSet &qubits() const {
        return qubits_;
    }
    /// -1 for CZ, eta for GEta.
    const Scalar &phase() const {
        return phase_;
    }
    /// Same kind and phase on other qubits.
    MultiQubitGate on(QubitSet qubits) const;
    std::string to_string() const;
    bool identical(const MultiQubitGate &o) const;

   private:
    MultiQubitGate(Kind k, Scalar phase, QubitSet qubits)
        : kind_(k), phase_(std::move(phase)), qubits_(std::move(qubits)) {}

    Kind kind_;
    Scalar phase_;
    QubitSet qubits_;
};

void apply(const OneQubitGate &g, int qubit, StateVector &psi);
void apply(const MultiQubitGate &g, StateVector &psi);

/// Whether two entries of the matrix vanish, i.e. it is diagonal or antidiagonal
/// (exactly for Exact entries, within tol otherwise).
bool is_semiclassical(const OneQubitGate &g, const Tolerance &tol = {});

/// Classical reversible gates used only to state targets in tests; they are not
/// QAC gates.
void apply_cnot(int control, int target, StateVector &psi);
/// F_k: XORs the control into each target.
void apply_fanout(int control, const QubitSet &targets, StateVector &psi);
/// Parity gate: XORs the parity of the controls into the target.
void apply_parity(int target, const QubitSet &controls, StateVector &psi);

}  // namespace qaclab

#endif
