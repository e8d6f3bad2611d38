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


#ifndef QACLAB_CIRCUIT_SIMPLIFICATION_H
#define QACLAB_CIRCUIT_SIMPLIFICATION_H

#include <string>

#include "qaclab/state/state_vector.h"

namespace qaclab {

struct SimplificationOutcome {
    enum class Kind { Disappears, SimplifiesTo, NoSimplification };

    Kind kind = Kind::NoSimplification;
    /// The remaining qubits for SimplifiesTo. Empty T means a global phase (-I for CZ).
    QubitSet T;

    static SimplificationOutcome disappears() {
        return {Kind::Disappears, {}};
    }
    static SimplificationOutcome simplifies_to(QubitSet T) {
        return {Kind::SimplifiesTo, std::move(T)};
    }
    static SimplificationOutcome none() {
        return {};
    }

    std::string to_string() const;
    bool operator==(const SimplificationOutcome &) const = default;
};

/// How CZ_S (or G_eta on S) acts on psi.
///
/// Disappears iff psi has no weight on basis states with 1s throughout S.
/// Otherwise D is the set of qubits of S pinned to |1>; a nonempty D gives
/// SimplifiesTo(S \ D), the smallest T that works. Exact states are decided
/// exactly; Float states treat a projection as zero when its norm is within tol of
/// the norm of psi.
SimplificationOutcome classify_simplification(const QubitSet &S, const StateVector &psi, const Tolerance &tol = {});

}  // namespace qaclab

#endif
