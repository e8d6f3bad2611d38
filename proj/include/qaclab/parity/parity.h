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


#ifndef QACLAB_PARITY_PARITY_H
#define QACLAB_PARITY_PARITY_H

#include <string>
#include <vector>

#include "qaclab/parity/dense_operator.h"
#include "qaclab/state/state_vector.h"

namespace qaclab {

/// Span of the r-qubit basis states whose bits XOR to b.
struct ParitySubspace {
    int r = 1;
    int b = 0;

    /// Throws PreconditionError unless 1 <= r <= kMaxQubits and b is a bit.
    void validate() const;
    uint64_t dimension() const {
        return uint64_t{1} << (r - 1);
    }
    /// Basis indices, ascending.
    std::vector<uint64_t> indices() const;
};

/// Bitstrings of parity b, sorted.
std::vector<std::string> parity_basis(int r, int b);

/// Norm of the part of psi outside the parity-b span.
double parity_residual(const StateVector &psi, int b);

/// psi lies in the parity-b span: exactly for Exact states, with residual at most
/// tol.threshold(|psi|) otherwise.
bool has_pure_parity(const StateVector &psi, int b, const Tolerance &tol = {});

/// A unit r-qubit state of parity b with <1^r| U_i |psi> = 0 for every operator.
///
/// Solves the k x 2^(r-1) system of rows <1^r| U_i restricted to the parity-b basis
/// by Gaussian elimination with partial pivoting; the last free column is set to 1
/// and the others to 0. Exact operators give Exact results where the ring allows.
/// The operators are not checked for unitarity.
///
/// Throws PreconditionError if k >= 2^(r-1) or b is not a bit, ShapeError if an
/// operator is not on r qubits, and NumericalDegeneracyError if a residual of the
/// result exceeds tol.
StateVector kill_parity_state(int r, const std::vector<DenseOperator> &units, int b, const Tolerance &tol = {});

}  // namespace qaclab

#endif
