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


#include <array>
#include <cmath>
#include <complex>
#include <fstream>
#include <gtest/gtest.h>
#include <sstream>

#include "qaclab/circuit/circuit.h"
#include "qaclab/circuit/circuit_io.h"
#include "qaclab/circuit/random_circuit.h"
#include "qaclab/circuit/simplification.h"
#include "qaclab/errors.h"
#include "qaclab/state/separability.h"

using namespace qaclab;

namespace {

using cd = std::complex<double>;
using Dense = std::vector<std::vector<cd>>;

Dense identity(size_t n) {
    Dense m(n, std::vector<cd>(n));
    for (size_t i = 0; i < n; ++i) {
        m[i][i] = 1;
    }
    return m;
}

Dense kron(const Dense &a, const Dense &b) {
    const size_t n = a.size(), k = b.size();
    Dense out(n * k, std::vector<cd>(n * k));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            for (size_t p = 0; p < k; ++p) {
                for (size_t q = 0; q < k; ++q) {
                    out[i * k + p][j * k + q] = a[i][j] * b[p][q];
                }
            }
        }
    }
    return out;
}

Dense matmul(const Dense &a, const Dense &b) {
    const size_t n = a.size();
    Dense out(n, std::vector<cd>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == cd(0)) {
                continue;
            }
            for (size_t j = 0; j < n; ++j) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

// Full-register unitary of a circuit built from Kronecker products and diagonal
// phase matrices, independent of the library's in-place simulator.
Dense dense_unitary(const Circuit &c) {
    const int r = c.num_qubits();
    const size_t dim = size_t{1} << r;
    Dense u = identity(dim);
    for (int t = 1; t <= 2 * c.depth() + 1; ++t) {
        Dense layer;
        if (t % 2) {
            layer = {{1}};
            for (int q = 0; q < r; ++q) {
                const Matrix2 &m = c.single(t, q).matrix();
                layer = kron(layer, {{m[0].to_complex(), m[1].to_complex()}, {m[2].to_complex(), m[3].to_complex()}});
            }
        } else {
            layer = identity(dim);
            for (const auto &g : c.multis(t)) {
                for (size_t i = 0; i < dim; ++i) {
                    bool ones = true;
                    for (int q : g.qubits()) {
                        ones = ones && ((i >> (r - 1 - q)) & 1);
                    }
                    if (ones) {
                        layer[i][i] *= g.phase().to_complex();
                    }
                }
            }
        }
        u = matmul(layer, u);
    }
    return u;
}

// 2x2 reduced density matrix of qubit 0.
std::array<cd, 4> target_rho(const StateVector &psi) {
    const uint64_t half = psi.dim() / 2;
    std::array<cd, 4> rho{};
    for (uint64_t k = 0; k < half; ++k) {
        cd a0 = psi.amp(k).to_complex(), a1 = psi.amp(half + k).to_complex();
        rho[0] += a0 * std::conj(a0);
        rho[1] += a0 * std::conj(a1);
        rho[2] += a1 * std::conj(a0);
        rho[3] += a1 * std::conj(a1);
    }
    return rho;
}

double rho_distance(const std::array<cd, 4> &a, const std::array<cd, 4> &b) {
    double d = 0;
    for (int k = 0; k < 4; ++k) {
        d = std::max(d, std::abs(a[k] - b[k]));
    }
    return d;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

StateVector plus() {
    return StateVector(1, {Scalar::inv_sqrt2(), Scalar::inv_sqrt2()});
}

// Proper subsets of S as sets.
std::vector<QubitSet> proper_subsets(const QubitSet &S) {
    std::vector<int> v(S.begin(), S.end());
    std::vector<QubitSet> out;
    for (uint32_t m = 0; m + 1 < (uint32_t{1} << v.size()); ++m) {
        QubitSet t;
        for (size_t i = 0; i < v.size(); ++i) {
            if ((m >> i) & 1) {
                t.insert(v[i]);
            }
        }
        out.push_back(t);
    }
    return out;
}

StateVector with_phase(StateVector psi, const QubitSet &S, const Scalar &phase) {
    psi.apply_phase_on_ones(S, phase);
    return psi;
}

// Product state where each qubit is |0>, |1> or random, drawn per qubit.
StateVector pinned_product(int r, SeededRng &rng) {
    StateVector psi(0, {Scalar::one()});
    for (int q = 0; q < r; ++q) {
        const int64_t pick = rng.uniform_int(0, 3);
        StateVector one = pick == 0 ? StateVector::from_bits("0")
                          : pick == 1 ? StateVector::from_bits("1")
                                      : random_state(1, rng);
        QubitSet front;
        for (int j = 0; j < q; ++j) {
            front.insert(j);
        }
        psi = tensor(psi, one, front);
    }
    return psi;
}

QubitSet random_subset(int r, SeededRng &rng) {
    QubitSet S;
    for (int q = 0; q < r; ++q) {
        if (rng.coin()) {
            S.insert(q);
        }
    }
    return S;
}

}  // namespace

TEST(gates, apply_examples) {
    StateVector s = StateVector::from_bits("11");
    apply(MultiQubitGate::cz({0, 1}), s);
    EXPECT_TRUE(s.identical(StateVector(2, {{}, {}, {}, Scalar::integer(-1)})));

    SeededRng rng(31);
    StateVector psi = random_state(3, rng), neg = psi;
    apply(MultiQubitGate::cz({}), neg);
    for (uint64_t i = 0; i < 8; ++i) {
        EXPECT_TRUE(neg.amp(i).identical(-psi.amp(i)));
    }

    StateVector h = StateVector::from_bits("0");
    apply(OneQubitGate::H(), 0, h);
    ASSERT_TRUE(h.is_exact());
    EXPECT_EQ(h.amp(0).exact_value(), (ExactValue{1, 0, 0, 0, 1}));
    EXPECT_EQ(h.amp(1).exact_value(), (ExactValue{1, 0, 0, 0, 1}));
    EXPECT_THROW(apply(OneQubitGate::X(), 3, h), PreconditionError);
}

TEST(gates, named_matrices_and_composition) {
    // H = (X + Z) / sqrt2 and H H = I, exactly.
    for (int k = 0; k < 4; ++k) {
        Scalar sum = (OneQubitGate::X().matrix()[k] + OneQubitGate::Z().matrix()[k]) * Scalar::inv_sqrt2();
        EXPECT_TRUE(sum.identical(OneQubitGate::H().matrix()[k]));
    }
    EXPECT_TRUE(OneQubitGate::H().then_after(OneQubitGate::H()).identical(OneQubitGate::I()));
    EXPECT_TRUE(OneQubitGate::X().then_after(OneQubitGate::Z()).name() == OneQubitGate::Name::Matrix);
    EXPECT_THROW(OneQubitGate::from_matrix({Scalar::one(), Scalar::one(), Scalar(), Scalar::one()}),
                 PreconditionError);
    EXPECT_THROW(MultiQubitGate::geta(Scalar::integer(2), {0}), PreconditionError);
    EXPECT_THROW(MultiQubitGate::geta(Scalar::one(), {0}), PreconditionError);
    EXPECT_NO_THROW(MultiQubitGate::geta(Scalar::imag_unit(), {0}));
}

TEST(gates, semiclassical) {
    EXPECT_TRUE(is_semiclassical(OneQubitGate::Z()));
    EXPECT_TRUE(is_semiclassical(OneQubitGate::X()));
    EXPECT_TRUE(is_semiclassical(OneQubitGate::I()));
    EXPECT_FALSE(is_semiclassical(OneQubitGate::H()));
    SeededRng rng(32);
    for (int i = 0; i < 100; ++i) {
        Scalar p = random_eta(rng);
        OneQubitGate px = OneQubitGate::from_matrix({Scalar(), p, p, Scalar()});
        EXPECT_TRUE(is_semiclassical(px));
        EXPECT_TRUE(is_semiclassical(px.adjoint()));
        OneQubitGate u = random_one_qubit_gate(rng);
        EXPECT_EQ(is_semiclassical(u), is_semiclassical(u.adjoint()));
        EXPECT_FALSE(is_semiclassical(u));
    }
}

TEST(circuit, layers_and_disjointness) {
    Circuit c(2, 1, 2);
    EXPECT_EQ(c.num_qubits(), 4);
    c.add_multi(2, MultiQubitGate::cz({0, 1}));
    try {
        c.add_multi(2, MultiQubitGate::cz({1, 2}));
        FAIL();
    } catch (const ShapeError &e) {
        EXPECT_NE(std::string(e.what()).find("layer disjointness violated"), std::string::npos);
    }
    EXPECT_THROW(c.add_multi(3, MultiQubitGate::cz({2, 3})), PreconditionError);
    EXPECT_THROW(c.add_multi(2, MultiQubitGate::cz({})), PreconditionError);
    EXPECT_THROW(c.set_single(2, 0, OneQubitGate::H()), PreconditionError);
    EXPECT_TRUE(c.single(5, 3).identical(OneQubitGate::I()));
    EXPECT_EQ(layer_name(1), "0.5");
    EXPECT_EQ(layer_name(4), "2");
    EXPECT_THROW(Circuit(12, 0, 1), BudgetExceededError);
}

TEST(circuit, empty_circuit_is_identity) {
    SeededRng rng(33);
    Circuit c(2, 1, 0);
    StateVector psi = random_state(4, rng);
    EXPECT_TRUE(simulate(c, psi).identical(psi));
    EXPECT_THROW(simulate(c, random_state(3, rng)), ShapeError);
}

TEST(circuit, parity3_computes_parity_exactly) {
    Circuit c = parity3_circuit();
    for (uint64_t x = 0; x < 8; ++x) {
        std::vector<StateVector> trace;
        StateVector out = simulate(c, initial_state(c, x, StateVector()), &trace);
        EXPECT_EQ(trace.size(), 5u);
        ASSERT_TRUE(out.is_exact());
        const int b = std::popcount(x) & 1;
        // Weight on the wrong target value is exactly zero.
        for (uint64_t i = 0; i < 16; ++i) {
            if (static_cast<int>(i >> 3) != b) {
                EXPECT_TRUE(out.amp(i).is_zero());
            }
        }
        Separation s = separates_at(out, {{0}, {1, 2, 3}});
        ASSERT_TRUE(s.separable);
        EXPECT_TRUE(s.left->identical(StateVector::basis(1, b)));
    }
    FunctionCheck check = computes_parity_on_basis(c, StateVector());
    EXPECT_TRUE(check.computes);
    EXPECT_EQ(check.worst_residual, 0);
}

TEST(circuit, parity3_equals_its_cnot_form) {
    Circuit c = parity3_circuit();
    for (uint64_t i = 0; i < 16; ++i) {
        StateVector a = simulate(c, StateVector::basis(4, i));
        StateVector b = StateVector::basis(4, i);
        apply_cnot(1, 0, b);
        apply_cnot(3, 2, b);
        apply_cnot(2, 0, b);
        EXPECT_TRUE(a.identical(b)) << i;
    }
}

TEST(circuit, computes_parity_counterexamples) {
    Circuit id(1, 0, 0);
    FunctionCheck a = computes_parity_on_basis(id, StateVector());
    EXPECT_FALSE(a.computes);
    EXPECT_EQ(a.counterexample, 1u);

    Circuit full = parity3_circuit();
    Circuit cut(3, 0, 2);
    for (int t = 1; t <= 5; ++t) {
        if (t % 2) {
            for (const auto &[q, g] : full.singles(t)) {
                cut.set_single(t, q, g);
            }
        } else if (t != 4) {
            for (const auto &g : full.multis(t)) {
                cut.add_multi(t, g);
            }
        }
    }
    EXPECT_FALSE(computes_parity_on_basis(cut, StateVector()).computes);
    EXPECT_THROW(computes_parity_on_basis(full, StateVector::from_bits("0")), ShapeError);
}

TEST(circuit, simulation_matches_dense_oracle_and_preserves_norm) {
    SeededRng rng(34);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(1, 3)), m = static_cast<int>(rng.uniform_int(0, 2));
        const int d = static_cast<int>(rng.uniform_int(0, 3));
        Circuit c = random_circuit(n, m, d, rng, {0.7, 0.8, 0.3});
        StateVector psi = random_state(c.num_qubits(), rng);
        StateVector out = simulate(c, psi);
        EXPECT_NEAR(out.norm(), psi.norm(), 1e-10);
        Dense u = dense_unitary(c);
        for (uint64_t i = 0; i < psi.dim(); ++i) {
            cd expect = 0;
            for (uint64_t j = 0; j < psi.dim(); ++j) {
                expect += u[i][j] * psi.amp(j).to_complex();
            }
            EXPECT_NEAR(std::abs(out.amp(i).to_complex() - expect), 0, 1e-10);
        }
    }
}

TEST(circuit, exact_simulation_is_exactly_unitary) {
    SeededRng rng(35);
    const OneQubitGate named[] = {OneQubitGate::I(), OneQubitGate::X(), OneQubitGate::Y(), OneQubitGate::Z(),
                                  OneQubitGate::H()};
    for (int trial = 0; trial < 30; ++trial) {
        Circuit c(2, 1, 2);
        for (int t = 1; t <= 5; t += 2) {
            for (int q = 0; q < 4; ++q) {
                c.set_single(t, q, named[rng.uniform_int(0, 4)]);
            }
        }
        for (int t = 2; t <= 4; t += 2) {
            for (auto &g : random_disjoint_groups({0, 1, 2, 3}, 0.8, rng)) {
                c.add_multi(t, MultiQubitGate::cz(g));
            }
        }
        StateVector out = simulate(c, StateVector::basis(4, rng.uniform_int(0, 15)));
        ASSERT_TRUE(out.is_exact());
        Scalar n2;
        for (const auto &a : out.amps()) {
            n2 += a * a.conj();
        }
        EXPECT_TRUE(n2.identical(Scalar::one()));
    }
}

TEST(simplification, examples) {
    SeededRng rng(36);
    StateVector a = tensor(StateVector::from_bits("0"), random_state(1, rng), {0});
    EXPECT_EQ(classify_simplification({0, 1}, a), SimplificationOutcome::disappears());
    StateVector b = tensor(StateVector::from_bits("1"), plus(), {0});
    EXPECT_EQ(classify_simplification({0, 1}, b), SimplificationOutcome::simplifies_to({1}));
    StateVector c = tensor(plus(), plus(), {0});
    EXPECT_EQ(classify_simplification({0, 1}, c), SimplificationOutcome::none());
    EXPECT_EQ(classify_simplification({0, 1}, StateVector::from_bits("11")), SimplificationOutcome::simplifies_to({}));
    EXPECT_EQ(classify_simplification({}, c), SimplificationOutcome::none());
}

TEST(simplification, sound_and_minimal_against_brute_force) {
    SeededRng rng(37);
    int counts[3] = {0, 0, 0};
    for (int trial = 0; trial < 1000; ++trial) {
        const int r = static_cast<int>(rng.uniform_int(1, 6));
        StateVector psi = trial % 4 == 0 ? random_state(r, rng) : pinned_product(r, rng);
        QubitSet S = random_subset(r, rng);
        const Scalar phase = trial % 2 ? Scalar::integer(-1) : random_eta(rng);
        SimplificationOutcome out = classify_simplification(S, psi);
        const StateVector target = with_phase(psi, S, phase);
        const double tol = 1e-9;
        const bool disappears = target.distance(psi) <= tol;
        ++counts[static_cast<int>(out.kind)];
        switch (out.kind) {
            case SimplificationOutcome::Kind::Disappears:
                EXPECT_TRUE(disappears);
                break;
            case SimplificationOutcome::Kind::SimplifiesTo: {
                EXPECT_FALSE(disappears);
                EXPECT_LE(with_phase(psi, out.T, phase).distance(target), tol);
                // No smaller T works.
                for (const auto &t : proper_subsets(out.T)) {
                    EXPECT_GT(with_phase(psi, t, phase).distance(target), tol);
                }
                break;
            }
            case SimplificationOutcome::Kind::NoSimplification:
                EXPECT_FALSE(disappears);
                for (const auto &t : proper_subsets(S)) {
                    EXPECT_GT(with_phase(psi, t, phase).distance(target), tol);
                }
                break;
        }
    }
    EXPECT_GT(counts[0], 50);
    EXPECT_GT(counts[1], 50);
    EXPECT_GT(counts[2], 50);
}

TEST(simplification, entanglement_lemma_on_sampled_product_states) {
    SeededRng rng(38);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int r = static_cast<int>(rng.uniform_int(2, 6));
        auto parts = enumerate_bipartitions(r);
        Bipartition p = parts[rng.uniform_int(0, parts.size() - 1)];
        QubitSet S{*std::next(p.A.begin(), rng.uniform_int(0, p.A.size() - 1)),
                   *std::next(p.B.begin(), rng.uniform_int(0, p.B.size() - 1))};
        for (int q = 0; q < r; ++q) {
            if (rng.coin(0.3)) {
                S.insert(q);
            }
        }
        StateVector psi = random_product_state(p, rng);
        if (classify_simplification(S, psi).kind != SimplificationOutcome::Kind::NoSimplification) {
            continue;
        }
        ++checked;
        StateVector phi = with_phase(psi, S, trial % 2 ? Scalar::integer(-1) : random_eta(rng));
        EXPECT_FALSE(is_S_separable(phi, S, {1e-8, 1e-8}).separable);
    }
    EXPECT_GT(checked, 250);
}

TEST(circuit, pass_through) {
    EXPECT_FALSE(target_is_pass_through(parity3_circuit()));
    Circuit c(1, 0, 1);
    EXPECT_TRUE(target_is_pass_through(c));
    c.set_single(3, 0, OneQubitGate::Z());
    EXPECT_TRUE(target_is_pass_through(c));
    c.set_single(3, 0, OneQubitGate::H());
    EXPECT_FALSE(target_is_pass_through(c));
}

TEST(circuit, depth_reduce_case_1) {
    // Target copies input 1; layer 2 never touches the target.
    Circuit c(1, 1, 2);
    c.set_single(1, 0, OneQubitGate::H());
    c.add_multi(2, MultiQubitGate::cz({0, 1}));
    c.set_single(3, 0, OneQubitGate::H());
    c.set_single(3, 2, OneQubitGate::H());
    c.add_multi(4, MultiQubitGate::cz({1, 2}));
    c.add_multi(4, MultiQubitGate::cz({0}));
    c.set_single(5, 0, OneQubitGate::X());
    c.set_single(5, 1, OneQubitGate::H());
    Circuit r = depth_reduce(c);
    EXPECT_EQ(r.depth(), 1);
    for (uint64_t x = 0; x < 2; ++x) {
        StateVector a = simulate(c, initial_state(c, x, StateVector::from_bits("0")));
        StateVector b = simulate(r, initial_state(r, x, StateVector::from_bits("0")));
        EXPECT_LE(rho_distance(target_rho(a), target_rho(b)), 1e-12);
    }
    auto f = [](uint64_t x) { return static_cast<int>(1 - x); };
    EXPECT_TRUE(computes_function_on_basis(c, StateVector::from_bits("0"), f).computes);
    EXPECT_TRUE(computes_function_on_basis(r, StateVector::from_bits("0"), f).computes);
}

TEST(circuit, depth_reduce_case_2) {
    // Pass-through target (final X) with a layer-2 CZ on the target.
    Circuit c(1, 1, 2);
    c.set_single(1, 0, OneQubitGate::H());
    c.set_single(1, 2, OneQubitGate::H());
    c.add_multi(2, MultiQubitGate::cz({0, 1}));
    c.set_single(3, 0, OneQubitGate::H());
    c.add_multi(4, MultiQubitGate::cz({0, 2}));
    c.set_single(5, 0, OneQubitGate::X());
    c.set_single(5, 2, OneQubitGate::H());
    ASSERT_TRUE(target_is_pass_through(c));
    Circuit r = depth_reduce(c);
    EXPECT_EQ(r.depth(), 1);
    auto f = [](uint64_t x) { return static_cast<int>(1 - x); };
    EXPECT_TRUE(computes_function_on_basis(c, StateVector::from_bits("0"), f).computes);
    EXPECT_TRUE(computes_function_on_basis(r, StateVector::from_bits("0"), f).computes);
    for (uint64_t x = 0; x < 2; ++x) {
        StateVector a = simulate(c, initial_state(c, x, StateVector::from_bits("0")));
        StateVector b = simulate(r, initial_state(r, x, StateVector::from_bits("0")));
        EXPECT_LE(rho_distance(target_rho(a), target_rho(b)), 1e-12);
    }
}

TEST(circuit, depth_reduce_rejects_parity3) {
    EXPECT_THROW(depth_reduce(parity3_circuit()), PreconditionError);
    EXPECT_THROW(depth_reduce(Circuit(1, 0, 1)), PreconditionError);
}

TEST(circuit_io, golden_round_trip) {
    const std::string text = read_file(std::string(QACLAB_FIXTURE_DIR) + "/parity3.qac");
    ASSERT_FALSE(text.empty());
    Circuit c = parse_circuit(text);
    EXPECT_EQ(serialize_circuit(c), text);
    EXPECT_TRUE(c.identical(parity3_circuit()));
    EXPECT_EQ(serialize_circuit(parity3_circuit()), text);
}

TEST(circuit_io, comments_and_implied_depth) {
    Circuit c = parse_circuit("# four qubits\nqubits 2\ninputs 1\nancillas 0\n\nlayer 2.5 # final\nu 0 Z\n");
    EXPECT_EQ(c.depth(), 2);
    EXPECT_EQ(serialize_circuit(c),
              "qubits 2\ninputs 1\nancillas 0\nlayer 0.5\nlayer 1\nlayer 1.5\nlayer 2\nlayer 2.5\nu 0 Z\n");
    Circuit g = parse_circuit("qubits 2\ninputs 1\nancillas 0\nlayer 1\ngeta -1 0 0 1\n");
    EXPECT_TRUE(g.multis(2)[0].phase().identical(Scalar::integer(-1)));
}

TEST(circuit_io, random_round_trip) {
    SeededRng rng(39);
    for (int trial = 0; trial < 50; ++trial) {
        Circuit c = random_circuit(static_cast<int>(rng.uniform_int(1, 4)), static_cast<int>(rng.uniform_int(0, 3)),
                                   static_cast<int>(rng.uniform_int(0, 3)), rng, {0.5, 0.7, 0.3});
        std::string text = serialize_circuit(c);
        Circuit back = parse_circuit(text);
        EXPECT_TRUE(back.identical(c));
        EXPECT_EQ(serialize_circuit(back), text);
    }
}

TEST(circuit_io, malformed_fixtures_report_their_error_class) {
    const std::string dir = std::string(QACLAB_FIXTURE_DIR) + "/malformed/";
    std::set<CircuitErrorKind> seen;
    for (int k = 0; k < kNumCircuitErrorKinds; ++k) {
        const auto kind = static_cast<CircuitErrorKind>(k);
        const std::string name = circuit_error_name(kind);
        const std::string text = read_file(dir + name + ".qac");
        ASSERT_FALSE(text.empty()) << name;
        ASSERT_EQ(text.rfind("# expect: " + name + "\n", 0), 0u) << name;
        try {
            parse_circuit(text);
            ADD_FAILURE() << name << " parsed";
        } catch (const CircuitParseError &e) {
            EXPECT_EQ(circuit_error_name(e.kind()), name) << e.what();
            EXPECT_GE(e.line(), 2u);
            EXPECT_GE(e.column(), 1u);
            seen.insert(e.kind());
        }
    }
    EXPECT_EQ(seen.size(), static_cast<size_t>(kNumCircuitErrorKinds));
}

TEST(circuit_io, error_positions_and_messages) {
    try {
        parse_circuit("qubits 3\ninputs 2\nancillas 0\nlayer 1\ncz 0 1\n  cz 1 2\n");
        FAIL();
    } catch (const CircuitParseError &e) {
        EXPECT_EQ(e.line(), 6u);
        EXPECT_EQ(e.column(), 6u);
        EXPECT_NE(std::string(e.what()).find("layer disjointness violated"), std::string::npos);
    }
    try {
        parse_circuit("qubits 3\ninputs 2\nancillas 0\nlayer 1\ngeta 0.5 0 0 1\n");
        FAIL();
    } catch (const CircuitParseError &e) {
        EXPECT_NE(std::string(e.what()).find("GEta modulus"), std::string::npos);
    }
}
