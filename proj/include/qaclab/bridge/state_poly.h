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


#ifndef QACLAB_BRIDGE_STATE_POLY_H
#define QACLAB_BRIDGE_STATE_POLY_H

#include <set>
#include <vector>

#include "qaclab/poly/multilinear_poly.h"
#include "qaclab/state/separability.h"

namespace qaclab {

struct BlockGroup {
    Block letter;
    QubitSet qubits;
};

/// Disjoint, nonempty qubit groups covering a register, one variable block each.
using BlockPartition = std::vector<BlockGroup>;

/// Tags the groups X, Y, Z, W in order. Throws PreconditionError on more than four.
BlockPartition make_block_partition(const std::vector<QubitSet> &groups);

/// Throws PreconditionError unless bp has 1 to 4 nonempty disjoint groups with
/// distinct lettered blocks covering {0..r-1}.
void validate_block_partition(const BlockPartition &bp, int r);

/// The linear map sending |s_1>|s_2>... (s_j the bits of group j in label order)
/// to the product of one variable per block, e.g. x_{s_1} z_{s_2}.
MultilinearPoly poly_of_state(const StateVector &psi, const BlockPartition &bp);

/// Inverse of poly_of_state on its image. Throws ShapeError if some monomial does
/// not have exactly one variable of the right width from every block.
StateVector state_of_poly(const MultilinearPoly &f, const BlockPartition &bp);

struct SeparabilityReport {
    Bipartition split;
    bool separable = false;
    /// The polynomial factors across the variables of the two block groups.
    bool rank_one = false;

    /// separable implies rank_one.
    bool implication_holds() const {
        return !separable || rank_one;
    }
    /// rank_one implies separable.
    bool converse_holds() const {
        return !rank_one || separable;
    }
};

/// Compares separates_at(psi, {A, B}) with bipartition_rank_oracle on poly_of_state,
/// where A is the union of the groups listed in `left` and B the rest. Throws
/// PreconditionError unless `left` is a nonempty proper subset of the group indices.
SeparabilityReport separability_decomposability_check(const StateVector &psi, const BlockPartition &bp,
                                                      const std::set<size_t> &left, const Tolerance &tol = {});

}  // namespace qaclab

#endif
