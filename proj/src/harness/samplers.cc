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


#include "samplers.h"

#include "qaclab/circuit/random_circuit.h"
#include "qaclab/state/state_io.h"

namespace qaclab::harness {

Scalar random_phase(SeededRng &rng, Backend backend) {
    if (backend == Backend::Float) {
        return random_eta(rng);
    }
    switch (rng.uniform_int(0, 6)) {
        case 0:
            return Scalar::integer(-1);
        case 1:
            return Scalar::imag_unit();
        case 2:
            return Scalar::exact(0, 0, -1);
        default: {
            int64_t re = rng.coin() ? 1 : -1, im = rng.coin() ? 1 : -1;
            return Scalar::exact(re, 0, im, 0, 1);
        }
    }
}

OneQubitGate random_gate(SeededRng &rng, Backend backend) {
    if (backend == Backend::Float) {
        return random_one_qubit_gate(rng);
    }
    OneQubitGate g;
    for (int64_t f = rng.uniform_int(1, 3); f > 0; --f) {
        if (rng.coin()) {
            g = OneQubitGate::H().then_after(g);
        } else {
            Matrix2 d{Scalar::one(), Scalar::integer(0), Scalar::integer(0), random_phase(rng, backend)};
            g = OneQubitGate::from_matrix(d).then_after(g);
        }
    }
    return g;
}

StateVector random_side_state(int r, double pin, SeededRng &rng, Backend backend) {
    QubitSet pinned;
    std::string bits;
    for (int q = 0; q < r; ++q) {
        if (rng.coin(pin)) {
            pinned.insert(q);
            bits += rng.coin() ? '1' : '0';
        }
    }
    const int free = r - static_cast<int>(pinned.size());
    StateVector rest;
    if (backend == Backend::Float) {
        rest = random_state(free, rng);
    } else {
        rest = StateVector::basis(free, static_cast<uint64_t>(rng.uniform_int(0, (int64_t{1} << free) - 1)));
        for (int round = 0; round < 2; ++round) {
            for (int q = 0; q < free; ++q) {
                apply(random_gate(rng, backend), q, rest);
            }
            for (int q = 0; q + 1 < free; ++q) {
                if (rng.coin()) {
                    rest.apply_phase_on_ones({q, q + 1}, Scalar::integer(-1));
                }
            }
        }
    }
    if (pinned.empty()) {
        return rest;
    }
    StateVector fixed = StateVector::from_bits(bits);
    return free == 0 ? fixed : tensor(fixed, rest, pinned);
}

Bipartition random_bipartition(int r, SeededRng &rng) {
    for (;;) {
        Bipartition p;
        for (int q = 0; q < r; ++q) {
            (rng.coin() ? p.A : p.B).insert(q);
        }
        if (!p.A.empty() && !p.B.empty()) {
            return p;
        }
    }
}

QubitSet random_straddling_set(const Bipartition &p, SeededRng &rng) {
    auto pick = [&](const QubitSet &side) {
        auto it = side.begin();
        std::advance(it, rng.uniform_int(0, static_cast<int64_t>(side.size()) - 1));
        return *it;
    };
    QubitSet S{pick(p.A), pick(p.B)};
    for (const QubitSet *side : {&p.A, &p.B}) {
        for (int q : *side) {
            if (rng.coin()) {
                S.insert(q);
            }
        }
    }
    return S;
}

QubitSet local_labels(const QubitSet &S, const QubitSet &side) {
    QubitSet out;
    int j = 0;
    for (int q : side) {
        if (S.count(q)) {
            out.insert(j);
        }
        ++j;
    }
    return out;
}

Circuit redress(const Circuit &c, SeededRng &rng, Backend backend) {
    Circuit out(c.num_inputs(), c.num_ancillas(), c.depth());
    for (int twice = 1; twice <= 2 * c.depth() + 1; ++twice) {
        if (twice % 2 == 1) {
            for (int q = 0; q < c.num_qubits(); ++q) {
                out.set_single(twice, q, random_gate(rng, backend));
            }
            continue;
        }
        for (const auto &g : c.multis(twice)) {
            if (g.kind() == MultiQubitGate::Kind::CZ) {
                out.add_multi(twice, g);
            } else {
                out.add_multi(twice, MultiQubitGate::geta(random_phase(rng, backend), g.qubits()));
            }
        }
    }
    return out;
}

std::string dump_state(const StateVector &psi) {
    return psi.num_qubits() == 0 ? "(no qubits)\n" : format_state(psi);
}

std::string dump_line(const std::string &name, const std::string &value) {
    return name + ": " + value + "\n";
}

std::string dump_block(const std::string &name, const std::string &text) {
    return "[" + name + "]\n" + text + (text.empty() || text.back() == '\n' ? "" : "\n");
}

}  // namespace qaclab::harness
