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


#include "qaclab/circuit/circuit.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qaclab/errors.h"

namespace qaclab {

Circuit::Circuit(int num_inputs, int num_ancillas, int depth) : n_(num_inputs), m_(num_ancillas) {
    if (num_inputs < 0 || num_ancillas < 0 || depth < 0) {
        throw PreconditionError("circuit sizes and depth must be non-negative");
    }
    if (num_qubits() > kMaxQubits) {
        throw BudgetExceededError("circuit on " + std::to_string(num_qubits()) + " qubits exceeds the cap of " +
                                  std::to_string(kMaxQubits));
    }
    single_.resize(depth + 1);
    multi_.resize(depth);
}

QubitSet Circuit::inputs() const {
    QubitSet s;
    for (int q = 1; q <= n_; ++q) {
        s.insert(q);
    }
    return s;
}

QubitSet Circuit::ancillas() const {
    QubitSet s;
    for (int q = n_ + 1; q <= n_ + m_; ++q) {
        s.insert(q);
    }
    return s;
}

void Circuit::check_layer(int twice, bool odd) const {
    if (twice < 1 || twice > 2 * depth() + 1 || (twice % 2 == 1) != odd) {
        throw PreconditionError("no " + std::string(odd ? "1-qubit" : "CZ") + " layer " + layer_name(twice) +
                                " in a depth-" + std::to_string(depth()) + " circuit");
    }
}

void Circuit::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits()) {
        throw PreconditionError("qubit " + std::to_string(qubit) + " outside a register of " +
                                std::to_string(num_qubits()));
    }
}

const OneQubitGate &Circuit::single(int twice, int qubit) const {
    static const OneQubitGate kIdentity;
    check_layer(twice, true);
    check_qubit(qubit);
    const auto &layer = single_[(twice - 1) / 2];
    auto it = layer.find(qubit);
    return it == layer.end() ? kIdentity : it->second;
}

void Circuit::set_single(int twice, int qubit, const OneQubitGate &g) {
    check_layer(twice, true);
    check_qubit(qubit);
    single_[(twice - 1) / 2][qubit] = g;
}

const std::map<int, OneQubitGate> &Circuit::singles(int twice) const {
    check_layer(twice, true);
    return single_[(twice - 1) / 2];
}

const std::vector<MultiQubitGate> &Circuit::multis(int twice) const {
    check_layer(twice, false);
    return multi_[twice / 2 - 1];
}

void Circuit::add_multi(int twice, const MultiQubitGate &g) {
    check_layer(twice, false);
    if (g.qubits().empty()) {
        throw PreconditionError("a gate in a layer needs at least one qubit");
    }
    for (int q : g.qubits()) {
        check_qubit(q);
    }
    auto &layer = multi_[twice / 2 - 1];
    for (const auto &h : layer) {
        for (int q : g.qubits()) {
            if (h.qubits().count(q)) {
                throw ShapeError("layer disjointness violated: qubit " + std::to_string(q) + " is in " +
                                 h.to_string() + " and " + g.to_string() + " on layer " + layer_name(twice));
            }
        }
    }
    layer.push_back(g);
    std::sort(layer.begin(), layer.end(), [](const MultiQubitGate &a, const MultiQubitGate &b) {
        return *a.qubits().begin() < *b.qubits().begin();
    });
}

std::optional<MultiQubitGate> Circuit::gate_at(int twice, int qubit) const {
    for (const auto &g : multis(twice)) {
        if (g.qubits().count(qubit)) {
            return g;
        }
    }
    return std::nullopt;
}

bool Circuit::identical(const Circuit &o) const {
    if (n_ != o.n_ || m_ != o.m_ || depth() != o.depth()) {
        return false;
    }
    for (size_t k = 0; k < single_.size(); ++k) {
        const auto &a = single_[k], &b = o.single_[k];
        if (a.size() != b.size()) {
            return false;
        }
        for (const auto &[q, g] : a) {
            auto it = b.find(q);
            if (it == b.end() || !g.identical(it->second)) {
                return false;
            }
        }
    }
    for (size_t k = 0; k < multi_.size(); ++k) {
        if (multi_[k].size() != o.multi_[k].size()) {
            return false;
        }
        for (size_t j = 0; j < multi_[k].size(); ++j) {
            if (!multi_[k][j].identical(o.multi_[k][j])) {
                return false;
            }
        }
    }
    return true;
}

std::string layer_name(int twice) {
    return std::to_string(twice / 2) + (twice % 2 ? ".5" : "");
}

void apply_layers(const Circuit &c, int first, int last, StateVector &psi) {
    for (int t = first; t <= last; ++t) {
        if (t % 2) {
            for (const auto &[q, g] : c.singles(t)) {
                apply(g, q, psi);
            }
        } else {
            for (const auto &g : c.multis(t)) {
                apply(g, psi);
            }
        }
    }
}

StateVector simulate(const Circuit &c, const StateVector &initial, std::vector<StateVector> *trace) {
    if (initial.num_qubits() != c.num_qubits()) {
        throw ShapeError("initial state has " + std::to_string(initial.num_qubits()) + " qubits, circuit has " +
                         std::to_string(c.num_qubits()));
    }
    StateVector psi = initial;
    for (int t = 1; t <= 2 * c.depth() + 1; ++t) {
        apply_layers(c, t, t, psi);
        if (trace) {
            trace->push_back(psi);
        }
    }
    return psi;
}

StateVector initial_state(const Circuit &c, uint64_t x, const StateVector &ancilla) {
    if (ancilla.num_qubits() != c.num_ancillas()) {
        throw ShapeError("ancilla state has " + std::to_string(ancilla.num_qubits()) + " qubits, circuit has " +
                         std::to_string(c.num_ancillas()) + " ancillas");
    }
    if (x >> c.num_inputs()) {
        throw PreconditionError("input value has more than " + std::to_string(c.num_inputs()) + " bits");
    }
    QubitSet front;
    for (int q = 0; q <= c.num_inputs(); ++q) {
        front.insert(q);
    }
    return tensor(StateVector::basis(1 + c.num_inputs(), x), ancilla, front);
}

bool target_is_pass_through(const Circuit &c, const Tolerance &tol) {
    return is_semiclassical(c.single(2 * c.depth() + 1, 0), tol);
}

bool target_has_multiqubit_last_gate(const Circuit &c) {
    if (c.depth() == 0) {
        return false;
    }
    auto g = c.gate_at(2 * c.depth(), 0);
    return g && g->qubits().size() > 1;
}

Circuit depth_reduce(const Circuit &c, const Tolerance &tol) {
    const int d = c.depth();
    if (d < 2) {
        throw PreconditionError("depth_reduce needs depth >= 2, got " + std::to_string(d));
    }
    const bool case1 = !target_has_multiqubit_last_gate(c);
    if (!case1 && !target_is_pass_through(c, tol)) {
        throw PreconditionError(
            "depth_reduce: the target meets a multiqubit gate on the last layer and is not pass-through");
    }
    Circuit out(c.num_inputs(), c.num_ancillas(), d - 1);
    for (int t = 1; t <= 2 * d - 1; ++t) {
        if (t % 2) {
            for (const auto &[q, g] : c.singles(t)) {
                out.set_single(t, q, g);
            }
        } else {
            for (const auto &g : c.multis(t)) {
                out.add_multi(t, g);
            }
        }
    }
    OneQubitGate middle;
    if (case1) {
        if (auto g = c.gate_at(2 * d, 0)) {
            middle = OneQubitGate::from_matrix({Scalar::one(), Scalar(), Scalar(), g->phase()});
        }
    }
    OneQubitGate target =
        c.single(2 * d + 1, 0).then_after(middle).then_after(c.single(2 * d - 1, 0));
    out.set_single(2 * d - 1, 0, target);
    return out;
}

FunctionCheck computes_function_on_basis(const Circuit &c, const StateVector &ancilla,
                                         const std::function<int(uint64_t)> &f, const Tolerance &tol) {
    FunctionCheck out;
    out.computes = true;
    const uint64_t target = uint64_t{1} << (c.num_qubits() - 1);
    for (uint64_t x = 0; x < (uint64_t{1} << c.num_inputs()); ++x) {
        StateVector psi = simulate(c, initial_state(c, x, ancilla));
        const uint64_t wrong = f(x) ? 0 : target;
        double w = 0;
        bool exact_zero = true;
        for (uint64_t i = 0; i < psi.dim(); ++i) {
            if ((i & target) == wrong) {
                w += psi.amp(i).norm();
                exact_zero = exact_zero && psi.amp(i).is_zero();
            }
        }
        const double norm = psi.norm();
        out.worst_residual = std::max(out.worst_residual, std::sqrt(w) / norm);
        const bool ok = psi.is_exact() ? exact_zero : std::sqrt(w) <= tol.threshold(norm);
        if (!ok && out.computes) {
            out.computes = false;
            out.counterexample = x;
        }
    }
    return out;
}

FunctionCheck computes_parity_on_basis(const Circuit &c, const StateVector &ancilla, const Tolerance &tol) {
    return computes_function_on_basis(
        c, ancilla, [](uint64_t x) { return std::popcount(x) & 1; }, tol);
}

Density2 target_density(const StateVector &psi) {
    const uint64_t half = psi.dim() / 2;
    Density2 rho{};
    for (uint64_t k = 0; k < half; ++k) {
        const std::complex<double> a0 = psi.amp(k).to_complex(), a1 = psi.amp(half + k).to_complex();
        rho[0] += std::norm(a0);
        rho[1] += a0 * std::conj(a1);
        rho[2] += a1 * std::conj(a0);
        rho[3] += std::norm(a1);
    }
    return rho;
}

double density_distance(const Density2 &a, const Density2 &b) {
    double d = 0;
    for (int k = 0; k < 4; ++k) {
        d = std::max(d, std::abs(a[k] - b[k]));
    }
    return d;
}

Circuit parity3_circuit() {
    Circuit c(3, 0, 2);
    c.set_single(1, 0, OneQubitGate::H());
    c.set_single(1, 2, OneQubitGate::H());
    c.add_multi(2, MultiQubitGate::cz({0, 1}));
    c.add_multi(2, MultiQubitGate::cz({2, 3}));
    c.set_single(3, 2, OneQubitGate::H());
    c.add_multi(4, MultiQubitGate::cz({0, 2}));
    c.set_single(5, 0, OneQubitGate::H());
    return c;
}

}  // namespace qaclab
