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


#ifndef QACLAB_CIRCUIT_CIRCUIT_IO_H
#define QACLAB_CIRCUIT_CIRCUIT_IO_H

#include <string>
#include <string_view>

#include "qaclab/circuit/circuit.h"
#include "qaclab/errors.h"

namespace qaclab {

enum class CircuitErrorKind {
    UnknownDirective,
    MissingHeader,
    DuplicateHeader,
    HeaderMismatch,
    RegisterTooLarge,
    BadNumber,
    BadLayerIndex,
    DuplicateLayer,
    LayerOrder,
    GateOutsideLayer,
    WrongLayerKind,
    Arity,
    UnknownGate,
    QubitOutOfRange,
    DuplicateQubit,
    DuplicateSingle,
    LayerDisjointness,
    NotUnitary,
    GEtaModulus,
    GEtaIdentity,
};

inline constexpr int kNumCircuitErrorKinds = 20;

/// Stable kebab-case name, e.g. "layer-disjointness".
std::string circuit_error_name(CircuitErrorKind k);

class CircuitParseError : public PreconditionError {
   public:
    CircuitParseError(CircuitErrorKind kind, size_t line, size_t column, const std::string &message);

    CircuitErrorKind kind() const {
        return kind_;
    }
    size_t line() const {
        return line_;
    }
    size_t column() const {
        return column_;
    }

   private:
    CircuitErrorKind kind_;
    size_t line_;
    size_t column_;
};

/// Reads the line-oriented circuit format:
///
///     qubits 4
///     inputs 3
///     ancillas 0
///     layer 0.5
///     u 0 H
///     u 1 matrix 0 0 1 0 1 0 0 0
///     layer 1
///     cz 0 1
///     geta -1 0 2 3
///
/// `#` starts a comment. The depth is the largest CZ layer implied by any layer
/// header. Throws CircuitParseError.
Circuit parse_circuit(std::string_view text);

/// Canonical text: headers, then every layer 0.5 .. d+0.5 in order, 1-qubit gates
/// by qubit and multiqubit gates by smallest qubit.
std::string serialize_circuit(const Circuit &c);

}  // namespace qaclab

#endif
