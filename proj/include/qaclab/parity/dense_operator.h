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


#ifndef QACLAB_PARITY_DENSE_OPERATOR_H
#define QACLAB_PARITY_DENSE_OPERATOR_H

#include <string>
#include <string_view>
#include <vector>

#include "qaclab/circuit/gates.h"

namespace qaclab {

/// Largest register a DenseOperator may act on (4096 entries).
inline constexpr int kMaxOperatorQubits = 6;

/// A 2^r x 2^r matrix, row-major, in the basis order of StateVector.
class DenseOperator {
   public:
    DenseOperator() = default;
    /// Throws ShapeError unless entries.size() == 4^r, BudgetExceededError above
    /// kMaxOperatorQubits.
    DenseOperator(int r, std::vector<Scalar> entries);

    static DenseOperator identity(int r);
    /// gates[0] (x) gates[1] (x) ..., gates[0] on the most significant qubit.
    static DenseOperator kron(const std::vector<OneQubitGate> &gates);

    int num_qubits() const {
        return r_;
    }
    uint64_t dim() const {
        return uint64_t{1} << r_;
    }
    const Scalar &at(uint64_t row, uint64_t col) const {
        return m_[row * dim() + col];
    }
    const std::vector<Scalar> &entries() const {
        return m_;
    }

    /// U^dagger U = I within tol (exactly, for Exact entries).
    bool is_unitary(const Tolerance &tol = {}) const;
    bool identical(const DenseOperator &o) const;

    /// Throws ShapeError on mismatched sizes.
    friend DenseOperator operator*(const DenseOperator &a, const DenseOperator &b);

   private:
    int r_ = 0;
    std::vector<Scalar> m_{Scalar::one()};
};

/// Random unitary: three rounds of random 1-qubit gates on every qubit,
/// each followed by a random diagonal of unit phases. Float.
DenseOperator random_unitary(int r, SeededRng &rng);

/// U psi. Throws ShapeError on mismatched sizes.
StateVector apply(const DenseOperator &U, const StateVector &psi);

/// Operator list file:
///
///     qubits 2
///     kron H X          # tensor product of named gates
///     matrix            # followed by 2^r rows of 2^r `re im` pairs
///     1 0  0 0  0 0  0 0
///     ...
///
/// Throws PreconditionError ("line N: ...") on malformed input, including
/// non-unitary matrices.
std::vector<DenseOperator> parse_operators(std::string_view text);

/// `qubits r` and one `matrix` block per operator. Throws PreconditionError on an
/// empty list or mixed sizes.
std::string format_operators(const std::vector<DenseOperator> &ops);

}  // namespace qaclab

#endif
