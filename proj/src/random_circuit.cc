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


#include "qaclab/circuit/random_circuit.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qaclab {

OneQubitGate random_one_qubit_gate(SeededRng &rng) {
    std::complex<double> a(rng.normal(), rng.normal()), b(rng.normal(), rng.normal());
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    a /= n;
    b /= n;
    const std::complex<double> g = std::polar(1.0, 2 * std::numbers::pi * rng.uniform());
    return OneQubitGate::from_matrix({Scalar::from_complex(g * a), Scalar::from_complex(-g * std::conj(b)),
                                      Scalar::from_complex(g * b), Scalar::from_complex(g * std::conj(a))});
}

Scalar random_eta(SeededRng &rng) {
    const double t = 0.1 + (2 * std::numbers::pi - 0.2) * rng.uniform();
    return Scalar::from_complex(std::polar(1.0, t));
}

std::vector<QubitSet> random_disjoint_groups(const QubitSet &qubits, double coverage, SeededRng &rng) {
    std::vector<int> chosen;
    for (int q : qubits) {
        if (rng.coin(coverage)) {
            chosen.push_back(q);
        }
    }
    std::shuffle(chosen.begin(), chosen.end(), rng.engine());
    std::vector<QubitSet> out;
    size_t i = 0;
    while (chosen.size() - i >= 2) {
        const size_t size = static_cast<size_t>(rng.uniform_int(2, static_cast<int64_t>(chosen.size() - i)));
        out.emplace_back(chosen.begin() + i, chosen.begin() + i + size);
        i += size;
    }
    return out;
}

Circuit random_circuit(int num_inputs, int num_ancillas, int depth, SeededRng &rng, const RandomCircuitOptions &opt) {
    Circuit c(num_inputs, num_ancillas, depth);
    QubitSet all;
    for (int q = 0; q < c.num_qubits(); ++q) {
        all.insert(q);
    }
    for (int t = 1; t <= 2 * depth + 1; ++t) {
        if (t % 2) {
            for (int q : all) {
                if (rng.coin(opt.single_density)) {
                    c.set_single(t, q, random_one_qubit_gate(rng));
                }
            }
            continue;
        }
        for (auto &g : random_disjoint_groups(all, opt.coverage, rng)) {
            if (rng.coin(opt.geta_fraction)) {
                c.add_multi(t, MultiQubitGate::geta(random_eta(rng), std::move(g)));
            } else {
                c.add_multi(t, MultiQubitGate::cz(std::move(g)));
            }
        }
    }
    return c;
}

}  // namespace qaclab
