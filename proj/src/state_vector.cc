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


#include "qaclab/state/state_vector.h"

#include <cmath>

#include "qaclab/errors.h"

namespace qaclab {

StateVector::StateVector(int r, std::vector<Scalar> amps) : r_(r), amps_(std::move(amps)) {
    if (r < 0) {
        throw ShapeError("negative qubit count");
    }
    if (r > kMaxQubits) {
        throw BudgetExceededError("state on " + std::to_string(r) + " qubits exceeds the cap of " +
                                  std::to_string(kMaxQubits));
    }
    if (amps_.size() != (uint64_t{1} << r)) {
        throw ShapeError("state on " + std::to_string(r) + " qubits needs " +
                         std::to_string(uint64_t{1} << r) + " amplitudes, got " +
                         std::to_string(amps_.size()));
    }
}

StateVector StateVector::basis(int r, uint64_t index) {
    if (r < 0 || r > kMaxQubits) {
        throw BudgetExceededError("qubit count out of range");
    }
    if (index >> r) {
        throw PreconditionError("basis index out of range");
    }
    std::vector<Scalar> amps(uint64_t{1} << r);
    amps[index] = Scalar::one();
    return StateVector(r, std::move(amps));
}

StateVector StateVector::from_bits(std::string_view bits) {
    uint64_t index = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw PreconditionError("bitstring may only contain 0 and 1: " + std::string(bits));
        }
        index = (index << 1) | static_cast<uint64_t>(ch - '0');
    }
    return basis(static_cast<int>(bits.size()), index);
}

bool StateVector::is_exact() const {
    for (const auto &a : amps_) {
        if (!a.is_exact()) {
            return false;
        }
    }
    return true;
}

double StateVector::norm() const {
    double s = 0;
    for (const auto &a : amps_) {
        s += a.norm();
    }
    return std::sqrt(s);
}

bool StateVector::is_normalized(const Tolerance &tol) const {
    return std::abs(norm() - 1.0) <= tol.threshold(1.0);
}

uint64_t StateVector::mask_of(const QubitSet &S) const {
    uint64_t m = 0;
    for (int q : S) {
        if (q < 0 || q >= r_) {
            throw PreconditionError("qubit " + std::to_string(q) + " outside a register of " +
                                    std::to_string(r_));
        }
        m |= uint64_t{1} << (r_ - 1 - q);
    }
    return m;
}

void StateVector::apply_1q(const Matrix2 &U, int qubit) {
    const uint64_t m = mask_of({qubit});
    for (uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & m) {
            continue;
        }
        const Scalar a0 = amps_[i];
        const Scalar a1 = amps_[i | m];
        amps_[i] = U[0] * a0 + U[1] * a1;
        amps_[i | m] = U[2] * a0 + U[3] * a1;
    }
}

void StateVector::apply_phase_on_ones(const QubitSet &S, const Scalar &phase) {
    const uint64_t m = mask_of(S);
    for (uint64_t i = 0; i < amps_.size(); ++i) {
        if ((i & m) == m) {
            amps_[i] *= phase;
        }
    }
}

void StateVector::scale(const Scalar &s) {
    for (auto &a : amps_) {
        a *= s;
    }
}

bool StateVector::approx_eq(const StateVector &o, const Tolerance &tol) const {
    if (r_ != o.r_) {
        return false;
    }
    if (is_exact() && o.is_exact()) {
        return identical(o);
    }
    return distance(o) <= tol.threshold(std::max(norm(), o.norm()));
}

bool StateVector::identical(const StateVector &o) const {
    if (r_ != o.r_) {
        return false;
    }
    for (uint64_t i = 0; i < amps_.size(); ++i) {
        if (!amps_[i].identical(o.amps_[i])) {
            return false;
        }
    }
    return true;
}

double StateVector::distance(const StateVector &o) const {
    if (r_ != o.r_) {
        throw ShapeError("distance between states of different sizes");
    }
    double s = 0;
    for (uint64_t i = 0; i < amps_.size(); ++i) {
        s += std::norm(amps_[i].to_complex() - o.amps_[i].to_complex());
    }
    return std::sqrt(s);
}

Scalar StateVector::inner(const StateVector &o) const {
    if (r_ != o.r_) {
        throw ShapeError("inner product between states of different sizes");
    }
    Scalar s;
    for (uint64_t i = 0; i < amps_.size(); ++i) {
        s += amps_[i].conj() * o.amps_[i];
    }
    return s;
}

StateVector tensor(const StateVector &u, const StateVector &v, const QubitSet &placement) {
    const int r = u.num_qubits() + v.num_qubits();
    if (static_cast<int>(placement.size()) != u.num_qubits()) {
        throw ShapeError("placement names " + std::to_string(placement.size()) +
                         " qubits for a state on " + std::to_string(u.num_qubits()));
    }
    for (int q : placement) {
        if (q < 0 || q >= r) {
            throw ShapeError("placement label " + std::to_string(q) + " outside a register of " +
                             std::to_string(r));
        }
    }
    const QubitSet rest = complement(placement, r);
    // Bit position (from the least significant end) of each factor qubit.
    std::vector<int> u_pos, v_pos;
    for (int q : placement) {
        u_pos.push_back(r - 1 - q);
    }
    for (int q : rest) {
        v_pos.push_back(r - 1 - q);
    }
    std::vector<Scalar> amps(uint64_t{1} << r);
    for (uint64_t i = 0; i < u.dim(); ++i) {
        if (u.amp(i).is_zero()) {
            continue;
        }
        uint64_t base = 0;
        for (int j = 0; j < u.num_qubits(); ++j) {
            if ((i >> (u.num_qubits() - 1 - j)) & 1) {
                base |= uint64_t{1} << u_pos[j];
            }
        }
        for (uint64_t k = 0; k < v.dim(); ++k) {
            uint64_t idx = base;
            for (int j = 0; j < v.num_qubits(); ++j) {
                if ((k >> (v.num_qubits() - 1 - j)) & 1) {
                    idx |= uint64_t{1} << v_pos[j];
                }
            }
            amps[idx] = u.amp(i) * v.amp(k);
        }
    }
    return StateVector(r, std::move(amps));
}

StateVector to_float(const StateVector &psi) {
    std::vector<Scalar> amps;
    amps.reserve(psi.dim());
    for (const auto &a : psi.amps()) {
        amps.push_back(to_float(a));
    }
    return StateVector(psi.num_qubits(), std::move(amps));
}

std::optional<Scalar> exact_norm(const std::vector<Scalar> &v) {
    Scalar n2;
    for (const auto &x : v) {
        n2 += x * x.conj();
    }
    for (int e = -60; e <= 60; e += 2) {
        if (n2.identical(Scalar::sqrt2_pow(e))) {
            return Scalar::sqrt2_pow(e / 2);
        }
    }
    return std::nullopt;
}

StateVector normalized(const StateVector &psi) {
    const double n = psi.norm();
    if (n == 0) {
        throw PreconditionError("cannot normalize the zero vector");
    }
    StateVector out = psi;
    out.scale(Scalar::one() / exact_norm(psi.amps()).value_or(Scalar::from_float(n)));
    return out;
}

QubitSet complement(const QubitSet &S, int r) {
    QubitSet out;
    for (int q = 0; q < r; ++q) {
        if (!S.count(q)) {
            out.insert(q);
        }
    }
    return out;
}

StateVector random_state(int r, SeededRng &rng) {
    if (r < 0 || r > kMaxQubits) {
        throw BudgetExceededError("random_state on " + std::to_string(r) + " qubits exceeds the cap of " +
                                  std::to_string(kMaxQubits));
    }
    std::vector<std::complex<double>> z(uint64_t{1} << r);
    double s = 0;
    for (auto &c : z) {
        double re = rng.normal();
        double im = rng.normal();
        c = {re, im};
        s += std::norm(c);
    }
    s = std::sqrt(s);
    std::vector<Scalar> amps;
    amps.reserve(z.size());
    for (auto c : z) {
        amps.push_back(Scalar::from_complex(c / s));
    }
    return StateVector(r, std::move(amps));
}

std::string qubits_to_string(const QubitSet &S) {
    std::string out = "{";
    for (int q : S) {
        if (out.size() > 1) {
            out += ",";
        }
        out += std::to_string(q);
    }
    return out + "}";
}

}  // namespace qaclab
