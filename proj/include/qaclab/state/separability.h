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


#ifndef QACLAB_STATE_SEPARABILITY_H
#define QACLAB_STATE_SEPARABILITY_H

#include <optional>
#include <string>
#include <vector>

#include "qaclab/state/state_vector.h"

namespace qaclab {

struct Bipartition {
    QubitSet A;
    QubitSet B;

    /// Throws PreconditionError unless A and B are nonempty, disjoint and cover
    /// {0..r-1}.
    void validate(int r) const;
    Bipartition swapped() const {
        return {B, A};
    }
    std::string to_string() const;
    bool operator==(const Bipartition &) const = default;
};

/// Bipartitions of {0..r-1}, each unordered pair once, ordered by |A| and then
/// lexicographically by A. For |A| = |B| only the lexicographically smaller side
/// appears as A.
std::vector<Bipartition> enumerate_bipartitions(int r);

struct Separation {
    bool separable = false;
    /// On success psi = left (x) right, left on A and right on B in label order.
    /// `left` has unit norm and `right` carries the norm of psi.
    std::optional<StateVector> left;
    std::optional<StateVector> right;
};

/// Whether psi = psi_A (x) psi_B.
///
/// Exact states test rank <= 1 of the reshaped amplitude matrix exactly. Float
/// states use singular values: rank one iff s_2 <= rel_eps * s_1 + abs_eps.
Separation separates_at(const StateVector &psi, const Bipartition &p, const Tolerance &tol = {});

struct SSeparability {
    bool separable = false;
    /// First separating bipartition meeting S on both sides, in
    /// enumerate_bipartitions() order.
    std::optional<Bipartition> witness;
};

/// Whether psi separates at some {A, B} with A and B both meeting S. False means
/// psi is S-entangled. Throws PreconditionError if |S| < 2.
SSeparability is_S_separable(const StateVector &psi, const QubitSet &S, const Tolerance &tol = {});

/// l2 norm of the projection of psi onto basis states with 1s throughout S.
double ones_projection_norm(const StateVector &psi, const QubitSet &S);

/// Whether that projection vanishes: exactly for Exact states, otherwise within
/// tol relative to the norm of psi.
bool ones_projection_vanishes(const StateVector &psi, const QubitSet &S, const Tolerance &tol = {});

/// random_state(|A|) (x) random_state(|B|) placed at p.
StateVector random_product_state(const Bipartition &p, SeededRng &rng);

}  // namespace qaclab

#endif
