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


#include "qaclab/circuit/gates.h"

#include <bit>

#include "qaclab/errors.h"
#include "qaclab/numerics/scalar_io.h"

namespace qaclab {

namespace {

Matrix2 named_matrix(OneQubitGate::Name n) {
    const Scalar o = Scalar::one(), z, i = Scalar::imag_unit(), h = Scalar::inv_sqrt2();
    switch (n) {
        case OneQubitGate::Name::I:
            return {o, z, z, o};
        case OneQubitGate::Name::X:
            return {z, o, o, z};
        case OneQubitGate::Name::Y:
            return {z, -i, i, z};
        case OneQubitGate::Name::Z:
            return {o, z, z, -o};
        case OneQubitGate::Name::H:
            return {h, h, h, -h};
        case OneQubitGate::Name::Matrix:
            break;
    }
    throw PreconditionError("no matrix for an unnamed gate");
}

Matrix2 multiply(const Matrix2 &a, const Matrix2 &b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

Matrix2 adjoint_of(const Matrix2 &a) {
    return {a[0].conj(), a[2].conj(), a[1].conj(), a[3].conj()};
}

bool negligible(const Scalar &s, const Tolerance &tol) {
    return s.is_exact() ? s.is_zero() : s.is_negligible(tol);
}

bool same_matrix(const Matrix2 &a, const Matrix2 &b) {
    for (int k = 0; k < 4; ++k) {
        if (!a[k].identical(b[k])) {
            return false;
        }
    }
    return true;
}

constexpr OneQubitGate::Name kNamed[] = {OneQubitGate::Name::I, OneQubitGate::Name::X, OneQubitGate::Name::Y,
                                         OneQubitGate::Name::Z, OneQubitGate::Name::H};

}  // namespace

OneQubitGate::OneQubitGate(Name n) : name_(n), m_(named_matrix(n)) {}

std::optional<OneQubitGate> OneQubitGate::named(std::string_view name) {
    for (Name n : kNamed) {
        OneQubitGate g(n);
        if (g.name_string() == name) {
            return g;
        }
    }
    return std::nullopt;
}

OneQubitGate OneQubitGate::from_matrix(const Matrix2 &m, const Tolerance &tol) {
    Matrix2 p = multiply(m, adjoint_of(m));
    for (int k = 0; k < 4; ++k) {
        Scalar expect = (k == 0 || k == 3) ? Scalar::one() : Scalar();
        bool ok = p[k].is_exact() ? p[k].identical(expect) : approx_eq(p[k], expect, tol);
        if (!ok) {
            throw PreconditionError("matrix is not unitary");
        }
    }
    return OneQubitGate(Name::Matrix, m);
}

std::string OneQubitGate::name_string() const {
    switch (name_) {
        case Name::I:
            return "I";
        case Name::X:
            return "X";
        case Name::Y:
            return "Y";
        case Name::Z:
            return "Z";
        case Name::H:
            return "H";
        case Name::Matrix:
            break;
    }
    return "matrix";
}

bool OneQubitGate::is_identity() const {
    return name_ == Name::I || same_matrix(m_, named_matrix(Name::I));
}

OneQubitGate OneQubitGate::adjoint() const {
    switch (name_) {
        case Name::I:
        case Name::X:
        case Name::Y:
        case Name::Z:
        case Name::H:
            return *this;
        case Name::Matrix:
            break;
    }
    return OneQubitGate(Name::Matrix, adjoint_of(m_));
}

OneQubitGate OneQubitGate::then_after(const OneQubitGate &o) const {
    Matrix2 p = multiply(m_, o.m_);
    for (Name n : kNamed) {
        if (same_matrix(p, named_matrix(n))) {
            return OneQubitGate(n);
        }
    }
    return OneQubitGate(Name::Matrix, p);
}

bool OneQubitGate::identical(const OneQubitGate &o) const {
    return name_ == o.name_ && same_matrix(m_, o.m_);
}

MultiQubitGate MultiQubitGate::cz(QubitSet qubits) {
    return MultiQubitGate(Kind::CZ, Scalar::integer(-1), std::move(qubits));
}

MultiQubitGate MultiQubitGate::geta(const Scalar &eta, QubitSet qubits, const Tolerance &tol) {
    Scalar mod2 = eta * eta.conj();
    bool unit = mod2.is_exact() ? mod2.identical(Scalar::one()) : approx_eq(mod2, Scalar::one(), tol);
    if (!unit) {
        throw PreconditionError("GEta modulus: |eta| must be 1, got " + format_scalar(eta));
    }
    Scalar diff = eta - Scalar::one();
    if (negligible(diff, tol)) {
        throw PreconditionError("GEta identity: eta must differ from 1");
    }
    return MultiQubitGate(Kind::GEta, eta, std::move(qubits));
}

MultiQubitGate MultiQubitGate::on(QubitSet qubits) const {
    return MultiQubitGate(kind_, phase_, std::move(qubits));
}

std::string MultiQubitGate::to_string() const {
    if (kind_ == Kind::CZ) {
        return "CZ" + qubits_to_string(qubits_);
    }
    return "G(" + format_scalar(phase_) + ")" + qubits_to_string(qubits_);
}

bool MultiQubitGate::identical(const MultiQubitGate &o) const {
    return kind_ == o.kind_ && phase_.identical(o.phase_) && qubits_ == o.qubits_;
}

void apply(const OneQubitGate &g, int qubit, StateVector &psi) {
    if (g.name() == OneQubitGate::Name::I) {
        psi.mask_of({qubit});
        return;
    }
    psi.apply_1q(g.matrix(), qubit);
}

void apply(const MultiQubitGate &g, StateVector &psi) {
    psi.apply_phase_on_ones(g.qubits(), g.phase());
}

bool is_semiclassical(const OneQubitGate &g, const Tolerance &tol) {
    const Matrix2 &m = g.matrix();
    bool diagonal = negligible(m[1], tol) && negligible(m[2], tol);
    bool antidiagonal = negligible(m[0], tol) && negligible(m[3], tol);
    return diagonal || antidiagonal;
}

namespace {

// Permutes basis states by `map`, which must be a bijection on indices.
template <typename F>
void permute(StateVector &psi, F map) {
    std::vector<Scalar> out(psi.dim());
    for (uint64_t i = 0; i < psi.dim(); ++i) {
        out[map(i)] = psi.amp(i);
    }
    psi = StateVector(psi.num_qubits(), std::move(out));
}

}  // namespace

void apply_cnot(int control, int target, StateVector &psi) {
    apply_fanout(control, {target}, psi);
}

void apply_fanout(int control, const QubitSet &targets, StateVector &psi) {
    if (targets.count(control)) {
        throw PreconditionError("fanout control is also a target");
    }
    const uint64_t c = psi.mask_of({control});
    const uint64_t t = psi.mask_of(targets);
    permute(psi, [&](uint64_t i) { return (i & c) ? i ^ t : i; });
}

void apply_parity(int target, const QubitSet &controls, StateVector &psi) {
    if (controls.count(target)) {
        throw PreconditionError("parity target is also a control");
    }
    const uint64_t t = psi.mask_of({target});
    const uint64_t c = psi.mask_of(controls);
    permute(psi, [&](uint64_t i) { return (std::popcount(i & c) & 1) ? i ^ t : i; });
}

}  // namespace qaclab
