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


#include <bit>
#include <cmath>
#include <gtest/gtest.h>

#include "qaclab/circuit/random_circuit.h"
#include "qaclab/circuit/simplification.h"
#include "qaclab/errors.h"
#include "qaclab/parity/certificate.h"
#include "qaclab/parity/parity.h"
#include "qaclab/parity/refute.h"

using namespace qaclab;

namespace {

double off_parity_norm(const StateVector &psi, int b) {
    double w = 0;
    for (uint64_t x = 0; x < psi.dim(); ++x) {
        if ((std::popcount(x) & 1) != b) {
            w += psi.amp(x).norm();
        }
    }
    return std::sqrt(w);
}

QubitSet range(int lo, int hi) {
    QubitSet s;
    for (int q = lo; q < hi; ++q) {
        s.insert(q);
    }
    return s;
}

void dress(Circuit &c, SeededRng &rng) {
    for (int t = 1; t <= 2 * c.depth() + 1; t += 2) {
        for (int q = 0; q < c.num_qubits(); ++q) {
            c.set_single(t, q, random_one_qubit_gate(rng));
        }
    }
}

}  // namespace

TEST(parity, basis_examples_and_counts) {
    EXPECT_EQ(parity_basis(2, 0), (std::vector<std::string>{"00", "11"}));
    EXPECT_EQ(parity_basis(2, 1), (std::vector<std::string>{"01", "10"}));
    for (int r = 1; r <= 10; ++r) {
        for (int b = 0; b < 2; ++b) {
            auto basis = parity_basis(r, b);
            EXPECT_EQ(basis.size(), size_t{1} << (r - 1));
            EXPECT_TRUE(std::is_sorted(basis.begin(), basis.end()));
            for (const auto &s : basis) {
                EXPECT_EQ(std::count(s.begin(), s.end(), '1') % 2, b);
            }
        }
    }
    EXPECT_THROW(parity_basis(0, 0), PreconditionError);
    EXPECT_THROW(parity_basis(2, 2), PreconditionError);
}

TEST(parity, pure_parity_examples) {
    EXPECT_TRUE(has_pure_parity(StateVector::from_bits("00"), 0));
    EXPECT_FALSE(has_pure_parity(StateVector::from_bits("00"), 1));
    StateVector bell(2, {Scalar::inv_sqrt2(), {}, {}, Scalar::inv_sqrt2()});
    EXPECT_TRUE(has_pure_parity(bell, 0));
    StateVector plus0(2, {Scalar::inv_sqrt2(), {}, Scalar::inv_sqrt2(), {}});
    EXPECT_FALSE(has_pure_parity(plus0, 0));
    EXPECT_FALSE(has_pure_parity(plus0, 1));
    EXPECT_NEAR(parity_residual(plus0, 0), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(parity_residual(plus0, 1), 1 / std::sqrt(2.0), 1e-15);
}

TEST(dense_operator, kron_order_and_products) {
    DenseOperator xi = DenseOperator::kron({OneQubitGate::X(), OneQubitGate::I()});
    EXPECT_TRUE(apply(xi, StateVector::from_bits("00")).identical(StateVector::from_bits("10")));
    DenseOperator hh = DenseOperator::kron({OneQubitGate::H(), OneQubitGate::H()});
    EXPECT_TRUE((hh * hh).identical(DenseOperator::identity(2)));
    EXPECT_TRUE(hh.is_unitary());
    EXPECT_FALSE(DenseOperator(1, {Scalar::one(), Scalar::one(), Scalar(), Scalar::one()}).is_unitary());
    EXPECT_THROW(DenseOperator(2, std::vector<Scalar>(4)), ShapeError);
    EXPECT_THROW(xi * DenseOperator::identity(1), ShapeError);
}

TEST(dense_operator, file_round_trip_and_errors) {
    SeededRng rng(50);
    std::vector<DenseOperator> ops{random_unitary(2, rng), DenseOperator::kron({OneQubitGate::H(), OneQubitGate::X()})};
    auto back = parse_operators(format_operators(ops));
    ASSERT_EQ(back.size(), 2u);
    for (int k = 0; k < 2; ++k) {
        for (size_t i = 0; i < 16; ++i) {
            EXPECT_TRUE(approx_eq(back[k].entries()[i], ops[k].entries()[i], {1e-15, 1e-15}));
        }
    }
    auto named = parse_operators("qubits 2 # two\nkron H X\n");
    EXPECT_TRUE(named[0].identical(ops[1]));
    EXPECT_THROW(parse_operators("kron H X\n"), PreconditionError);
    EXPECT_THROW(parse_operators("qubits 2\nkron H\n"), PreconditionError);
    EXPECT_THROW(parse_operators("qubits 1\nmatrix\n1 0 1 0\n0 0 1 0\n"), PreconditionError);
    EXPECT_THROW(parse_operators("qubits 1\nmatrix\n1 0 0 0\n"), PreconditionError);
    try {
        parse_operators("qubits 1\nkron Q\n");
        FAIL();
    } catch (const PreconditionError &e) {
        EXPECT_EQ(std::string(e.what()).rfind("line 2:", 0), 0u);
    }
}

TEST(kill_parity, forced_examples) {
    StateVector a = kill_parity_state(2, {DenseOperator::identity(2)}, 0);
    EXPECT_TRUE(a.identical(StateVector::from_bits("00")));

    // <11|H(x)H maps |01> and |10> both to -1/2, so psi ~ |01> - |10>.
    DenseOperator hh = DenseOperator::kron({OneQubitGate::H(), OneQubitGate::H()});
    StateVector b = kill_parity_state(2, {hh}, 1);
    ASSERT_TRUE(b.is_exact());
    StateVector expect(2, {{}, Scalar::inv_sqrt2(), -Scalar::inv_sqrt2(), {}});
    EXPECT_DOUBLE_EQ(b.inner(expect).abs(), 1.0);
    // Last free column set to 1, then normalized.
    EXPECT_TRUE(b.identical(StateVector(2, {{}, -Scalar::inv_sqrt2(), Scalar::inv_sqrt2(), {}})));
    EXPECT_TRUE(apply(hh, b).amp(3).is_zero());
}

TEST(kill_parity, rejects_too_many_constraints) {
    std::vector<DenseOperator> two(2, DenseOperator::identity(2));
    EXPECT_THROW(kill_parity_state(2, two, 0), PreconditionError);
    EXPECT_NO_THROW(kill_parity_state(3, std::vector<DenseOperator>(3, DenseOperator::identity(3)), 0));
    EXPECT_THROW(kill_parity_state(3, std::vector<DenseOperator>(4, DenseOperator::identity(3)), 1),
                 PreconditionError);
    EXPECT_THROW(kill_parity_state(2, {DenseOperator::identity(3)}, 0), ShapeError);
    EXPECT_THROW(kill_parity_state(2, {}, 3), PreconditionError);
}

TEST(kill_parity, random_instances_satisfy_every_constraint) {
    SeededRng rng(51);
    for (int trial = 0; trial < 500; ++trial) {
        const int r = static_cast<int>(rng.uniform_int(2, 5));
        const int k = static_cast<int>(rng.uniform_int(0, (1 << (r - 1)) - 1));
        const int b = trial % 2;
        std::vector<DenseOperator> units;
        for (int i = 0; i < k; ++i) {
            units.push_back(random_unitary(r, rng));
        }
        StateVector psi = kill_parity_state(r, units, b);
        EXPECT_NEAR(psi.norm(), 1, 1e-12);
        EXPECT_LE(off_parity_norm(psi, b), 1e-10);
        for (const auto &U : units) {
            EXPECT_LE(apply(U, psi).amp(psi.dim() - 1).abs(), 1e-10);
        }
    }
}

TEST(kill_parity, killed_gates_disappear_on_any_extension) {
    SeededRng rng(52);
    for (int trial = 0; trial < 200; ++trial) {
        const int r = static_cast<int>(rng.uniform_int(2, 4));
        const int extra = static_cast<int>(rng.uniform_int(0, 3));
        std::vector<DenseOperator> units;
        for (int i = 0; i < (1 << (r - 1)) - 1; ++i) {
            units.push_back(random_unitary(r, rng));
        }
        StateVector psi = kill_parity_state(r, units, trial % 2);
        QubitSet S = range(0, r);
        for (int q = r; q < r + extra; ++q) {
            if (rng.coin()) {
                S.insert(q);
            }
        }
        for (const auto &U : units) {
            StateVector joint = tensor(apply(U, psi), random_state(extra, rng), range(0, r));
            EXPECT_EQ(classify_simplification(S, joint, {1e-10, 1e-10}), SimplificationOutcome::disappears());
        }
    }
}

TEST(refute, depth1_kill_example) {
    // CZ{0,1,2} with H everywhere.
    Circuit c(2, 0, 1);
    for (int t : {1, 3}) {
        for (int q = 0; q < 3; ++q) {
            c.set_single(t, q, OneQubitGate::H());
        }
    }
    c.add_multi(2, MultiQubitGate::cz({0, 1, 2}));
    RefutationCertificate cert = refute_depth1(c, StateVector());
    EXPECT_EQ(cert.kind, RefutationCertificate::Kind::ParityMismatch);
    EXPECT_TRUE(has_pure_parity(cert.inputs[0], 0));
    EXPECT_TRUE(has_pure_parity(cert.inputs[1], 1));
    // The target ends in H H |0> = |0> for both.
    for (int s = 0; s < 2; ++s) {
        EXPECT_NEAR(cert.targets[s][0].real(), 1, 1e-12);
        EXPECT_NEAR(std::abs(cert.targets[s][3]), 0, 1e-12);
    }
    EXPECT_TRUE(verify_certificate(c, cert).valid);
}

TEST(refute, depth1_untouched_input) {
    Circuit c(2, 0, 1);
    c.set_single(1, 0, OneQubitGate::H());
    c.add_multi(2, MultiQubitGate::cz({0, 1}));
    c.add_multi(2, MultiQubitGate::cz({2}));
    RefutationCertificate cert = refute_depth1(c, StateVector());
    EXPECT_EQ(cert.kind, RefutationCertificate::Kind::TargetIndependence);
    EXPECT_EQ(cert.designated, 2);
    EXPECT_TRUE(verify_certificate(c, cert).valid);
    EXPECT_THROW(refute_depth1(parity3_circuit(), StateVector()), PreconditionError);
    EXPECT_THROW(refute_depth1(Circuit(1, 0, 1), StateVector()), PreconditionError);
    EXPECT_THROW(refute_depth1(c, StateVector::from_bits("0")), ShapeError);
}

TEST(refute, depth1_random_circuits_always_refuted) {
    SeededRng rng(53);
    int kill = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(2, 3)), m = static_cast<int>(rng.uniform_int(0, 2));
        Circuit c = random_circuit(n, m, 1, rng, {0.9, trial % 3 ? 1.0 : 0.7, 0.2});
        StateVector alpha = random_state(m, rng);
        RefutationCertificate cert = refute_depth1(c, alpha);
        EXPECT_TRUE(verify_certificate(c, cert).valid);
        EXPECT_FALSE(computes_parity_on_basis(c, alpha).computes);
        kill += cert.kind == RefutationCertificate::Kind::ParityMismatch;
    }
    EXPECT_GT(kill, 10);
}

TEST(refute, tampered_certificates_fail) {
    SeededRng rng(54);
    Circuit c(3, 1, 1);
    dress(c, rng);
    c.add_multi(2, MultiQubitGate::cz({0, 1, 2, 3, 4}));
    const StateVector alpha = random_state(1, rng);
    const RefutationCertificate cert = refute_depth1(c, alpha);
    ASSERT_TRUE(verify_certificate(c, cert).valid);

    RefutationCertificate t = cert;
    t.targets[1][0] += 0.01;
    EXPECT_FALSE(verify_certificate(c, t).valid);
    t = cert;
    t.parities = {0, 0};
    EXPECT_FALSE(verify_certificate(c, t).valid);
    t = cert;
    t.inputs[1] = t.inputs[0];
    EXPECT_FALSE(verify_certificate(c, t).valid);
    t = cert;
    t.kind = RefutationCertificate::Kind::TargetIndependence;
    t.designated = 1;
    EXPECT_FALSE(verify_certificate(c, t).valid);
    // The killed gate isolates the target, so any ancilla is fine; a wrong size is not.
    t = cert;
    t.ancilla = StateVector::from_bits("1");
    EXPECT_TRUE(verify_certificate(c, t).valid);
    t.ancilla = StateVector::from_bits("10");
    EXPECT_FALSE(verify_certificate(c, t).valid);
    EXPECT_FALSE(verify_certificate(Circuit(3, 0, 1), cert).valid);
}

TEST(refute, certificate_text_round_trip) {
    SeededRng rng(55);
    for (int trial = 0; trial < 20; ++trial) {
        Circuit c = random_circuit(3, 1, 1, rng);
        RefutationCertificate cert = refute_depth1(c, random_state(1, rng));
        const std::string text = format_certificate(cert);
        EXPECT_NE(text.find("kind=" + kind_name(cert.kind) + "\n"), std::string::npos);
        RefutationCertificate back = parse_certificate(text);
        EXPECT_TRUE(verify_certificate(c, back).valid);
        EXPECT_EQ(format_certificate(back), text);
    }
    const std::string good = format_certificate(refute_depth1(random_circuit(2, 0, 1, rng), StateVector()));
    EXPECT_THROW(parse_certificate(good + "bogus=1\n"), PreconditionError);
    EXPECT_THROW(parse_certificate(good + "kind=parity-mismatch\n"), PreconditionError);
    EXPECT_THROW(parse_certificate(good.substr(good.find('\n') + 1)), PreconditionError);
    std::string short_input = good;
    short_input.replace(short_input.find("input0="), 7, "input0=1 0 ");
    EXPECT_THROW(parse_certificate(short_input), PreconditionError);
}

TEST(refute, depth2_three_inputs_case1) {
    SeededRng rng(56);
    Circuit c(3, 0, 2);
    dress(c, rng);
    c.add_multi(2, MultiQubitGate::cz({1, 2, 3}));
    c.add_multi(4, MultiQubitGate::cz({0, 1}));
    auto cert = refute_depth2_structural(c, StateVector());
    ASSERT_TRUE(cert);
    EXPECT_EQ(cert->kind, RefutationCertificate::Kind::TargetIndependence);
    EXPECT_EQ(cert->designated, 3);
    EXPECT_EQ(cert->tactic, "three-inputs-case1");
    EXPECT_TRUE(verify_certificate(c, *cert).valid);
}

TEST(refute, depth2_three_inputs_case2) {
    SeededRng rng(57);
    Circuit c(3, 1, 2);
    dress(c, rng);
    c.add_multi(2, MultiQubitGate::cz({1, 2, 3}));
    c.add_multi(2, MultiQubitGate::cz({0, 4}));
    c.add_multi(4, MultiQubitGate::cz({0, 1, 2, 3}));
    auto cert = refute_depth2_structural(c, random_state(1, rng));
    ASSERT_TRUE(cert);
    EXPECT_EQ(cert->kind, RefutationCertificate::Kind::ParityMismatch);
    EXPECT_EQ(cert->tactic, "three-inputs-case2");
    EXPECT_TRUE(verify_certificate(c, *cert).valid);
}

TEST(refute, depth2_target_gate_on_two_inputs) {
    // The layer-2 gate only reaches input 3, which the killer inputs leave at |0>.
    Circuit c(3, 0, 2);
    c.set_single(1, 0, OneQubitGate::H());
    c.set_single(1, 1, OneQubitGate::H());
    c.add_multi(2, MultiQubitGate::cz({0, 1, 2}));
    c.add_multi(4, MultiQubitGate::cz({0, 3}));
    c.set_single(5, 0, OneQubitGate::H());
    auto cert = refute_depth2_structural(c, StateVector());
    ASSERT_TRUE(cert);
    EXPECT_EQ(cert->tactic.rfind("target-one-input", 0), 0u);
    EXPECT_TRUE(verify_certificate(c, *cert).valid);
}

TEST(refute, depth2_parity3_is_not_applicable) {
    EXPECT_FALSE(refute_depth2_structural(parity3_circuit(), StateVector()));
    EXPECT_THROW(refute_depth2_structural(Circuit(3, 0, 1), StateVector()), PreconditionError);
}

TEST(refute, depth2_random_three_input_gates_always_refuted) {
    SeededRng rng(58);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(3, 4)), m = static_cast<int>(rng.uniform_int(0, 2));
        Circuit c(n, m, 2);
        dress(c, rng);
        QubitSet big{1, 2, 3};
        QubitSet rest;
        for (int q = 0; q < c.num_qubits(); ++q) {
            if (!big.count(q)) {
                (rng.coin(0.3) ? big : rest).insert(q);
            }
        }
        c.add_multi(2, MultiQubitGate::cz(big));
        for (const auto &g : random_disjoint_groups(rest, 0.8, rng)) {
            c.add_multi(2, MultiQubitGate::cz(g));
        }
        for (const auto &g : random_disjoint_groups(range(0, c.num_qubits()), 0.8, rng)) {
            c.add_multi(4, MultiQubitGate::cz(g));
        }
        StateVector alpha = random_state(m, rng);
        auto cert = refute_depth2_structural(c, alpha);
        ASSERT_TRUE(cert);
        EXPECT_EQ(cert->tactic.rfind("three-inputs", 0), 0u);
        EXPECT_TRUE(verify_certificate(c, *cert).valid);
    }
}

TEST(refute, depth2_random_circuits_return_only_valid_certificates) {
    SeededRng rng(59);
    int found = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Circuit c = random_circuit(static_cast<int>(rng.uniform_int(2, 4)), static_cast<int>(rng.uniform_int(0, 2)), 2,
                                   rng, {0.9, 0.9, 0.2});
        StateVector alpha = random_state(c.num_ancillas(), rng);
        auto cert = refute_depth2_structural(c, alpha);
        if (cert) {
            ++found;
            EXPECT_TRUE(verify_certificate(c, *cert).valid);
            EXPECT_FALSE(computes_parity_on_basis(c, alpha).computes);
        }
    }
    EXPECT_GT(found, 20);
}
