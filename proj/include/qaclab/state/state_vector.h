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


#ifndef QACLAB_STATE_STATE_VECTOR_H
#define QACLAB_STATE_STATE_VECTOR_H

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qaclab/numerics/rng.h"
#include "qaclab/numerics/scalar.h"

namespace qaclab {

/// Qubit labels within a register.
using QubitSet = std::set<int>;

/// Largest register a state may have.
inline constexpr int kMaxQubits = 12;

/// Row-major 2x2 matrix acting on one qubit.
using Matrix2 = std::array<Scalar, 4>;

/// 2^r amplitudes over qubits 0..r-1. Qubit 0 is the most significant bit of a
/// basis index. Normalization is not enforced; see is_normalized().
class StateVector {
   public:
    StateVector() = default;
    /// Throws ShapeError unless amps.size() == 2^r, and BudgetExceededError above
    /// kMaxQubits.
    StateVector(int r, std::vector<Scalar> amps);

    /// |index> on r qubits, Exact.
    static StateVector basis(int r, uint64_t index);
    /// |bits> for a string of '0'/'1'. Throws PreconditionError on other characters.
    static StateVector from_bits(std::string_view bits);

    int num_qubits() const {
        return r_;
    }
    uint64_t dim() const {
        return amps_.size();
    }
    const std::vector<Scalar> &amps() const {
        return amps_;
    }
    const Scalar &amp(uint64_t index) const {
        return amps_[index];
    }
    bool is_exact() const;
    double norm() const;
    bool is_normalized(const Tolerance &tol = {}) const;

    /// Bit of `qubit` in basis index `index`.
    int bit(uint64_t index, int qubit) const {
        return static_cast<int>((index >> (r_ - 1 - qubit)) & 1);
    }
    /// Index mask selecting the qubits in S. Throws PreconditionError on a label
    /// outside the register.
    uint64_t mask_of(const QubitSet &S) const;

    /// U on `qubit`.
    void apply_1q(const Matrix2 &U, int qubit);
    /// Multiplies the amplitude of every basis state with 1s throughout S by
    /// `phase`. S = {} multiplies everything.
    void apply_phase_on_ones(const QubitSet &S, const Scalar &phase);
    void scale(const Scalar &s);

    /// Every amplitude approx_eq (exactly equal on Exact pairs).
    bool approx_eq(const StateVector &o, const Tolerance &tol = {}) const;
    bool identical(const StateVector &o) const;
    /// l2 distance.
    double distance(const StateVector &o) const;
    /// <this|o>.
    Scalar inner(const StateVector &o) const;

   private:
    int r_ = 0;
    std::vector<Scalar> amps_{Scalar::one()};
};

/// Places u on the qubits `placement` (u's qubit j goes to the j-th smallest label)
/// and v on the remaining qubits in increasing order. Throws ShapeError on size
/// mismatch.
StateVector tensor(const StateVector &u, const StateVector &v, const QubitSet &placement);

/// Same amplitudes on the Float backend.
StateVector to_float(const StateVector &psi);

/// |v| exactly, when |v|^2 is an even power of sqrt2.
std::optional<Scalar> exact_norm(const std::vector<Scalar> &v);

/// psi / |psi|. Stays Exact when exact_norm applies. Throws PreconditionError on
/// the zero vector.
StateVector normalized(const StateVector &psi);

/// The sorted complement of S in {0..r-1}.
QubitSet complement(const QubitSet &S, int r);

/// Normalized complex Gaussian amplitudes, Float. Throws BudgetExceededError above
/// kMaxQubits.
StateVector random_state(int r, SeededRng &rng);

std::string qubits_to_string(const QubitSet &S);

}  // namespace qaclab

#endif
