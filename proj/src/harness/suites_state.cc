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


// Suites over the simplification lemmas of CZ / G_eta gates on product states.

#include <algorithm>

#include "qaclab/circuit/circuit.h"
#include "qaclab/circuit/circuit_io.h"
#include "qaclab/circuit/simplification.h"
#include "samplers.h"
#include "suites.h"

namespace qaclab::harness {

namespace {

using Kind = SimplificationOutcome::Kind;

struct ProductInstance {
    Bipartition p;
    QubitSet S;
    StateVector psi_a, psi_b;
    StateVector psi;
};

ProductInstance sample_product(Instance &in, double pin) {
    ProductInstance x;
    const int r = static_cast<int>(in.rng.uniform_int(2, in.cfg.max_qubits));
    x.p = random_bipartition(r, in.rng);
    x.S = random_straddling_set(x.p, in.rng);
    x.psi_a = random_side_state(static_cast<int>(x.p.A.size()), pin, in.rng, in.cfg.backend);
    x.psi_b = random_side_state(static_cast<int>(x.p.B.size()), pin, in.rng, in.cfg.backend);
    x.psi = tensor(x.psi_a, x.psi_b, x.p.A);
    return x;
}

void dump_product(Instance &in, const ProductInstance &x) {
    in.dump(dump_line("bipartition", x.p.to_string()) + dump_line("S", qubits_to_string(x.S)) +
            dump_block("psi", dump_state(x.psi)));
}

const char *kind_counter(Kind k) {
    switch (k) {
        case Kind::Disappears:
            return "disappears";
        case Kind::SimplifiesTo:
            return "simplifies";
        case Kind::NoSimplification:
            break;
    }
    return "no-simplification";
}

bool subset_of(const QubitSet &T, const QubitSet &side) {
    return std::includes(side.begin(), side.end(), T.begin(), T.end());
}

// Zeroes the component of psi with 1s throughout S (local labels).
StateVector without_ones(const StateVector &psi, const QubitSet &S, Backend backend) {
    const uint64_t m = psi.mask_of(S);
    std::vector<Scalar> amps = psi.amps();
    bool nonzero = false;
    for (uint64_t i = 0; i < amps.size(); ++i) {
        if ((i & m) == m) {
            amps[i] = Scalar::integer(0);
        } else if (!amps[i].is_zero()) {
            nonzero = true;
        }
    }
    if (!nonzero) {
        // psi lived entirely on the ones: keep a basis state with a 0 inside S.
        amps[0] = Scalar::one();
    }
    StateVector out(psi.num_qubits(), std::move(amps));
    return backend == Backend::Float ? normalized(out) : out;
}

}  // namespace

void entanglement_lemma(Instance &in) {
    ProductInstance x = sample_product(in, in.rng.coin() ? 0.0 : 0.3);
    std::vector<MultiQubitGate> gates{MultiQubitGate::cz(x.S)};
    for (int k = 0; k < 3; ++k) {
        gates.push_back(MultiQubitGate::geta(random_phase(in.rng, in.cfg.backend), x.S));
    }
    dump_product(in, x);
    const SimplificationOutcome o = classify_simplification(x.S, x.psi, in.cfg.tol);
    in.count(kind_counter(o.kind));
    if (o.kind != Kind::NoSimplification) {
        return;
    }
    for (const auto &g : gates) {
        StateVector phi = x.psi;
        apply(g, phi);
        in.count("gates-checked");
        SSeparability sep = is_S_separable(phi, x.S, in.cfg.tol);
        if (sep.separable) {
            in.fail(g.to_string() + " does not simplify, yet psi and the output both separate across S (output at " +
                    sep.witness->to_string() + ")");
        }
    }
}

void simplify_lemma(Instance &in) {
    ProductInstance x = sample_product(in, 0.4);
    const MultiQubitGate g = in.rng.coin() ? MultiQubitGate::cz(x.S)
                                           : MultiQubitGate::geta(random_phase(in.rng, in.cfg.backend), x.S);
    dump_product(in, x);
    in.dump(dump_line("gate", g.to_string()));
    const SimplificationOutcome o = classify_simplification(x.S, x.psi, in.cfg.tol);
    in.count(kind_counter(o.kind));
    StateVector phi = x.psi;
    apply(g, phi);
    const QubitSet &T = o.kind == Kind::SimplifiesTo ? o.T : x.S;
    for (const auto &cut : enumerate_bipartitions(phi.num_qubits())) {
        if (!separates_at(phi, cut, in.cfg.tol).separable) {
            continue;
        }
        in.count("separating-cuts");
        if (o.kind == Kind::Disappears) {
            continue;
        }
        if (!subset_of(T, x.p.A) && !subset_of(T, x.p.B) && !subset_of(T, cut.A) && !subset_of(T, cut.B)) {
            in.fail("output separates at " + cut.to_string() + " but the gate reduces to " + o.to_string() +
                    ", which lies in none of the four sides");
        }
    }
}

void no_zero_divisors(Instance &in) {
    const Backend be = in.cfg.backend;
    const int r = static_cast<int>(in.rng.uniform_int(2, in.cfg.max_qubits));
    const Bipartition p = random_bipartition(r, in.rng);
    const QubitSet S = random_straddling_set(p, in.rng);
    const QubitSet SA = local_labels(S, p.A), SB = local_labels(S, p.B);
    StateVector psi_a = random_side_state(static_cast<int>(p.A.size()), 0.2, in.rng, be);
    StateVector psi_b = random_side_state(static_cast<int>(p.B.size()), 0.2, in.rng, be);
    switch (in.rng.uniform_int(0, 2)) {
        case 0:
            psi_a = without_ones(psi_a, SA, be);
            break;
        case 1:
            psi_b = without_ones(psi_b, SB, be);
            break;
        default:
            break;
    }
    const StateVector psi = tensor(psi_a, psi_b, p.A);
    in.dump(dump_line("bipartition", p.to_string()) + dump_line("S", qubits_to_string(S)) +
            dump_block("psi_A", dump_state(psi_a)) + dump_block("psi_B", dump_state(psi_b)));
    const SimplificationOutcome o = classify_simplification(S, psi, in.cfg.tol);
    in.count(kind_counter(o.kind));
    if (o.kind != Kind::Disappears) {
        return;
    }
    const bool zero_a = ones_projection_norm(psi_a, SA) <= in.cfg.tol.threshold(psi_a.norm());
    const bool zero_b = ones_projection_norm(psi_b, SB) <= in.cfg.tol.threshold(psi_b.norm());
    if (!zero_a && !zero_b) {
        in.fail("the gate disappears on psi_A (x) psi_B but neither side has a vanishing ones component");
        return;
    }
    const QubitSet &zero_side = zero_a ? p.A : p.B;
    const QubitSet &other = zero_a ? p.B : p.A;
    const StateVector &zero_state = zero_a ? psi_a : psi_b;
    for (int k = 0; k < 50; ++k) {
        StateVector sigma = random_side_state(static_cast<int>(other.size()), 0.0, in.rng, be);
        StateVector partner = tensor(zero_state, sigma, zero_side);
        in.count("partners");
        if (classify_simplification(S, partner, in.cfg.tol).kind != Kind::Disappears) {
            in.fail("the zero side on " + qubits_to_string(zero_side) + " does not turn the gate off with partner\n" +
                    dump_state(sigma));
            return;
        }
    }
}

void topology_6qubit(Instance &in) {
    const Backend be = in.cfg.backend;
    Circuit c(5, 0, 3);
    c.add_multi(2, MultiQubitGate::cz({0, 1, 2}));
    c.add_multi(2, MultiQubitGate::cz({3, 4, 5}));
    const QubitSet middle{1, 2, 3};
    c.add_multi(4, MultiQubitGate::cz(middle));
    c.add_multi(6, MultiQubitGate::cz({0, 1}));
    c.add_multi(6, MultiQubitGate::cz({2, 3, 4}));
    for (int twice = 1; twice <= 7; twice += 2) {
        for (int q = 0; q < 6; ++q) {
            if (in.rng.coin(0.8)) {
                c.set_single(twice, q, random_gate(in.rng, be));
            }
        }
    }
    const uint64_t x = static_cast<uint64_t>(in.rng.uniform_int(0, 31));
    StateVector psi = initial_state(c, x, StateVector());
    if (be == Backend::Float) {
        psi = to_float(psi);
    }
    apply_layers(c, 1, 3, psi);
    in.dump(dump_line("input", std::to_string(x)) + dump_block("circuit", serialize_circuit(c)));

    const SimplificationOutcome o = classify_simplification(middle, psi, in.cfg.tol);
    StateVector phi = psi;
    apply(MultiQubitGate::cz(middle), phi);
    const bool right_separable = separates_at(phi, Bipartition{{0, 1}, {2, 3, 4, 5}}, in.cfg.tol).separable;
    in.count(kind_counter(o.kind));
    if (right_separable) {
        in.count("right-separable");
    }
    if (o.kind == Kind::NoSimplification && right_separable) {
        in.fail("middle gate does not simplify and its output separates at {0,1}|{2,3,4,5}");
    }
}

}  // namespace qaclab::harness
