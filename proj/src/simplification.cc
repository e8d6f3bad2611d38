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


#include "qaclab/circuit/simplification.h"

#include <cmath>

#include "qaclab/state/separability.h"

namespace qaclab {

std::string SimplificationOutcome::to_string() const {
    switch (kind) {
        case Kind::Disappears:
            return "disappears";
        case Kind::SimplifiesTo:
            return "simplifies-to " + qubits_to_string(T);
        case Kind::NoSimplification:
            break;
    }
    return "no-simplification";
}

SimplificationOutcome classify_simplification(const QubitSet &S, const StateVector &psi, const Tolerance &tol) {
    if (ones_projection_vanishes(psi, S, tol)) {
        return SimplificationOutcome::disappears();
    }
    const bool exact = psi.is_exact();
    const double limit = tol.threshold(psi.norm());
    QubitSet T;
    bool pinned_any = false;
    for (int j : S) {
        const uint64_t m = psi.mask_of({j});
        double zero_weight = 0;
        bool zero_exact = true;
        for (uint64_t i = 0; i < psi.dim(); ++i) {
            if (i & m) {
                continue;
            }
            zero_weight += psi.amp(i).norm();
            zero_exact = zero_exact && psi.amp(i).is_zero();
        }
        const bool pinned = exact ? zero_exact : std::sqrt(zero_weight) <= limit;
        if (pinned) {
            pinned_any = true;
        } else {
            T.insert(j);
        }
    }
    if (!pinned_any) {
        return SimplificationOutcome::none();
    }
    return SimplificationOutcome::simplifies_to(std::move(T));
}

}  // namespace qaclab
