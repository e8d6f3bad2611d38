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


#ifndef QACLAB_PARITY_REFUTE_H
#define QACLAB_PARITY_REFUTE_H

#include <optional>

#include "qaclab/parity/certificate.h"

namespace qaclab {

/// Certificate that a depth-1 circuit does not weakly compute parity with this
/// ancilla.
///
/// If the target's layer-1 gate misses some input j, the certificate is
/// TargetIndependence on j for the inputs |0..0> and X_j|0..0>. Otherwise inputs 1
/// and 2 are set to kill_parity_state of their layer-0.5 gates (which turns the
/// target's gate off) and the rest to |0>, giving ParityMismatch.
///
/// Throws PreconditionError unless depth is 1 and n >= 2, ShapeError on an ancilla
/// of the wrong size, LemmaViolationError if the certificate fails verification.
RefutationCertificate refute_depth1(const Circuit &c, const StateVector &ancilla, const Tolerance &tol = {});

/// Structural refutation of a depth-2 circuit, or nullopt (not applicable).
///
/// (i) n >= 3 and a layer-1 gate touching three inputs: if the target's layer-2
/// gate misses one of them, a killer state on the other two makes the target
/// independent of it; otherwise a 3-qubit killer state turns off both gates. These
/// constructions are unconditional, so a failed verification throws
/// LemmaViolationError.
/// (ii) the target's layer-1 gate touching two inputs p, q: killer states on p, q
/// for both parities; certified if the final target states agree, or (n >= 3) if
/// the target ignores a third input for one of them. Tried in that order and
/// returned only when verification passes.
///
/// Throws PreconditionError unless depth is 2, ShapeError on an ancilla of the
/// wrong size.
std::optional<RefutationCertificate> refute_depth2_structural(const Circuit &c, const StateVector &ancilla,
                                                              const Tolerance &tol = {});

}  // namespace qaclab

#endif
