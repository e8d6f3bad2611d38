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


// Suites over circuits: gate killing, refutation, the parity-3 circuit and depth reduction.

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "qaclab/circuit/circuit_io.h"
#include "qaclab/circuit/random_circuit.h"
#include "qaclab/circuit/simplification.h"
#include "qaclab/errors.h"
#include "qaclab/numerics/scalar_io.h"
#include "qaclab/parity/certificate.h"
#include "qaclab/parity/dense_operator.h"
#include "qaclab/parity/parity.h"
#include "qaclab/parity/refute.h"
#include "samplers.h"
#include "suites.h"

namespace qaclab::harness {

namespace {

DenseOperator random_operator(int r, SeededRng &rng, Backend backend) {
    if (backend == Backend::Float) {
        return random_unitary(r, rng);
    }
    auto layer = [&] {
        std::vector<OneQubitGate> gates;
        for (int q = 0; q < r; ++q) {
            gates.push_back(random_gate(rng, backend));
        }
        return DenseOperator::kron(gates);
    };
    const uint64_t n = uint64_t{1} << r;
    std::vector<Scalar> diag(n * n, Scalar::integer(0));
    for (uint64_t i = 0; i < n; ++i) {
        diag[i * n + i] = rng.coin() ? Scalar::one() : random_phase(rng, backend);
    }
    return layer() * DenseOperator(r, std::move(diag)) * layer();
}

// `count` distinct labels of {0..n-1}, ascending.
QubitSet random_labels(int n, int count, SeededRng &rng) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng.engine());
    return QubitSet(all.begin(), all.begin() + count);
}

MultiQubitGate random_multi(QubitSet qubits, SeededRng &rng, Backend backend) {
    if (rng.coin(0.3)) {
        return MultiQubitGate::geta(random_phase(rng, backend), std::move(qubits));
    }
    return MultiQubitGate::cz(std::move(qubits));
}

OneQubitGate random_diagonal(SeededRng &rng, Backend backend) {
    Matrix2 m{random_phase(rng, backend), Scalar::integer(0), Scalar::integer(0), random_phase(rng, backend)};
    return OneQubitGate::from_matrix(m);
}

}  // namespace

void kill_parity(Instance &in) {
    const Backend be = in.cfg.backend;
    const Tolerance &tol = in.cfg.tol;
    const int r = static_cast<int>(in.rng.uniform_int(2, std::min(in.cfg.max_qubits, 5)));
    const int half = 1 << (r - 1);
    const int k = static_cast<int>(in.rng.uniform_int(1, half - 1));
    const int b = static_cast<int>(in.index % 2);
    std::vector<DenseOperator> ops;
    for (int i = 0; i < k; ++i) {
        ops.push_back(random_operator(r, in.rng, be));
    }
    in.dump(dump_line("parity", std::to_string(b)) + dump_block("operators", format_operators(ops)));

    const StateVector psi = kill_parity_state(r, ops, b, tol);
    in.dump(dump_block("psi", dump_state(psi)));
    in.count(psi.is_exact() ? "exact-results" : "float-results");
    double wrong = 0;
    for (uint64_t i = 0; i < psi.dim(); ++i) {
        if ((std::popcount(i) & 1) != b) {
            wrong += std::norm(psi.amp(i).to_complex());
        }
    }
    if (std::sqrt(wrong) > tol.threshold(1)) {
        in.fail("parity residual " + format_real(std::sqrt(wrong)));
    }
    if (std::abs(psi.norm() - 1) > tol.threshold(1)) {
        in.fail("norm " + format_real(psi.norm()));
    }
    const uint64_t ones = psi.dim() - 1;
    for (int i = 0; i < k; ++i) {
        std::complex<double> s = 0;
        for (uint64_t j = 0; j < psi.dim(); ++j) {
            s += ops[i].at(ones, j).to_complex() * psi.amp(j).to_complex();
        }
        if (std::abs(s) > tol.threshold(1)) {
            in.fail("constraint " + std::to_string(i) + " residual " + format_real(std::abs(s)));
        }
    }

    // One operator too many.
    std::vector<DenseOperator> padded = ops;
    while (static_cast<int>(padded.size()) < half) {
        padded.push_back(random_operator(r, in.rng, be));
    }
    try {
        kill_parity_state(r, padded, b, tol);
        in.fail("k = 2^(r-1) operators were accepted");
    } catch (const PreconditionError &) {
        in.count("precondition-rejections");
    }

    // U_i psi padded with other qubits turns off any gate covering the r qubits.
    const int extra = static_cast<int>(in.rng.uniform_int(0, std::min(2, kMaxQubits - r)));
    const int total = r + extra;
    const QubitSet placement = random_labels(total, r, in.rng);
    QubitSet S = placement;
    for (int q = 0; q < total; ++q) {
        if (in.rng.coin()) {
            S.insert(q);
        }
    }
    const int i = static_cast<int>(in.rng.uniform_int(0, k - 1));
    const StateVector sigma = random_side_state(extra, 0.0, in.rng, be);
    const StateVector ext = tensor(apply(ops[i], psi), sigma, placement);
    if (classify_simplification(S, ext, tol).kind != SimplificationOutcome::Kind::Disappears) {
        in.fail("gate on " + qubits_to_string(S) + " does not disappear on U_" + std::to_string(i) +
                " psi placed at " + qubits_to_string(placement));
    }
}

void depth1_refute(Instance &in) {
    const Backend be = in.cfg.backend;
    const int n = static_cast<int>(in.rng.uniform_int(2, std::min(3, in.cfg.max_qubits - 1)));
    const int m = static_cast<int>(in.rng.uniform_int(0, std::min(2, in.cfg.max_qubits - 1 - n)));
    RandomCircuitOptions opt;
    opt.geta_fraction = 0.3;
    Circuit c = random_circuit(n, m, 1, in.rng, opt);
    if (be == Backend::Exact) {
        c = redress(c, in.rng, be);
    }
    const StateVector ancilla = random_side_state(m, 0.3, in.rng, be);
    in.dump(dump_block("circuit", serialize_circuit(c)) + dump_block("ancilla", dump_state(ancilla)));

    const RefutationCertificate cert = refute_depth1(c, ancilla, in.cfg.tol);
    in.dump(dump_block("certificate", format_certificate(cert)));
    in.count(cert.tactic);
    const CertificateCheck check = verify_certificate(c, cert, in.cfg.tol);
    if (!check.valid) {
        in.fail("certificate rejected: " + check.reason);
        return;
    }
    const CertificateCheck again = verify_certificate(c, parse_certificate(format_certificate(cert)), in.cfg.tol);
    if (!again.valid) {
        in.fail("certificate rejected after a text round trip: " + again.reason);
    }
}

void tight_parity3(Instance &in) {
    const Circuit c = parity3_circuit();
    const uint64_t i = in.index;
    StateVector input = StateVector::basis(4, i);
    if (in.cfg.backend == Backend::Float) {
        input = to_float(input);
    }
    const StateVector out = simulate(c, input);
    // The CNOT form: target ^= x1, x2 ^= x3, target ^= x2.
    StateVector expected = StateVector::basis(4, i);
    apply_cnot(1, 0, expected);
    apply_cnot(3, 2, expected);
    apply_cnot(2, 0, expected);
    in.dump(dump_line("basis input", std::to_string(i)) + dump_block("output", dump_state(out)));

    if (!out.approx_eq(expected, in.cfg.tol)) {
        in.fail("output differs from the CNOT form by " + format_real(out.distance(expected)));
    }
    const int want = std::popcount(i) & 1;
    double wrong = 0;
    bool exact_zero = true;
    for (uint64_t j = 0; j < out.dim(); ++j) {
        if (out.bit(j, 0) != want) {
            wrong += std::norm(out.amp(j).to_complex());
            exact_zero = exact_zero && out.amp(j).is_zero();
        }
    }
    if (out.is_exact() ? !exact_zero : std::sqrt(wrong) > in.cfg.tol.threshold(1)) {
        in.fail("weight " + format_real(std::sqrt(wrong)) + " on the wrong target value");
    }
    if (!separates_at(out, Bipartition{{0}, {1, 2, 3}}, in.cfg.tol).separable) {
        in.fail("target is entangled with the inputs");
    }
    in.count(out.is_exact() ? "exact-outputs" : "float-outputs");
}

void depth_reduce(Instance &in) {
    const Backend be = in.cfg.backend;
    SeededRng &rng = in.rng;
    const bool case2 = in.index % 2 == 1;
    const int d = static_cast<int>(rng.uniform_int(3, 4));
    const int m = static_cast<int>(rng.uniform_int(0, std::min(2, in.cfg.max_qubits - 4)));
    const int n = 3;
    QubitSet ancillas, others;
    for (int q = 1; q <= n + m; ++q) {
        others.insert(q);
        if (q > n) {
            ancillas.insert(q);
        }
    }

    // The parity-3 circuit on layers 0.5..2.5, with ancilla gates that never reach the target.
    const Circuit base = parity3_circuit();
    Circuit c(n, m, d);
    for (int twice = 1; twice <= 5; ++twice) {
        if (twice % 2 == 1) {
            for (const auto &[q, g] : base.singles(twice)) {
                c.set_single(twice, q, g);
            }
            for (int q : ancillas) {
                c.set_single(twice, q, random_gate(rng, be));
            }
        } else {
            for (const auto &g : base.multis(twice)) {
                c.add_multi(twice, g);
            }
        }
    }
    for (const auto &g : random_disjoint_groups(ancillas, 0.7, rng)) {
        c.add_multi(2, random_multi(g, rng, be));
    }
    // Inputs 1 and 3 stay classical and are free on layer 2.
    QubitSet free2 = ancillas;
    free2.insert({1, 3});
    for (const auto &g : random_disjoint_groups(free2, 0.7, rng)) {
        c.add_multi(4, random_multi(g, rng, be));
    }

    // Layers 3..d. The target holds its parity value from here on, so it only
    // meets diagonal gates.
    for (int twice = 6; twice <= 2 * d; twice += 2) {
        std::vector<QubitSet> groups = random_disjoint_groups(others, 0.7, rng);
        const bool last = twice == 2 * d;
        const bool join = last ? case2 : rng.coin();
        if (join) {
            if (groups.empty()) {
                groups.push_back({static_cast<int>(rng.uniform_int(1, n + m))});
            }
            groups[rng.uniform_int(0, static_cast<int64_t>(groups.size()) - 1)].insert(0);
        } else if (last && rng.coin()) {
            groups.push_back({0});
        }
        for (const auto &g : groups) {
            c.add_multi(twice, random_multi(g, rng, be));
        }
        for (int q : others) {
            c.set_single(twice + 1, q, random_gate(rng, be));
        }
        c.set_single(twice + 1, 0, random_diagonal(rng, be));
    }
    const StateVector ancilla = random_side_state(m, 0.3, rng, be);
    in.dump(dump_line("case", case2 ? "2" : "1") + dump_block("circuit", serialize_circuit(c)) +
            dump_block("ancilla", dump_state(ancilla)));

    const FunctionCheck fixture = computes_parity_on_basis(c, ancilla, in.cfg.tol);
    if (!fixture.computes) {
        in.fail("fixture does not compute parity (input " + std::to_string(*fixture.counterexample) + ")");
        return;
    }
    if (target_has_multiqubit_last_gate(c) != case2 || (case2 && !target_is_pass_through(c, in.cfg.tol))) {
        in.fail("fixture does not match its case");
        return;
    }
    in.count(case2 ? "case2" : "case1");

    const Circuit reduced = depth_reduce(c, in.cfg.tol);
    in.dump(dump_block("reduced", serialize_circuit(reduced)));
    if (reduced.depth() != d - 1) {
        in.fail("reduced depth " + std::to_string(reduced.depth()));
    }
    for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
        const Density2 before = target_density(simulate(c, initial_state(c, x, ancilla)));
        const Density2 after = target_density(simulate(reduced, initial_state(reduced, x, ancilla)));
        const double gap = density_distance(before, after);
        if (gap > in.cfg.tol.threshold(1)) {
            in.fail("target state moved by " + format_real(gap) + " on input " + std::to_string(x));
        }
    }
    if (!computes_parity_on_basis(reduced, ancilla, in.cfg.tol).computes) {
        in.fail("reduced circuit does not compute parity");
    }
}

}  // namespace qaclab::harness
