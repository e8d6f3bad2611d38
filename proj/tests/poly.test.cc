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

#include <complex>
#include <gtest/gtest.h>

#include "qaclab/errors.h"
#include "qaclab/poly/decomposition.h"
#include "qaclab/poly/family.h"
#include "qaclab/poly/packed_poly.h"
#include "qaclab/poly/poly_io.h"
#include "qaclab/poly/random_poly.h"

using namespace qaclab;

namespace {

VarId X(const char *bits) {
    return make_var(Block::X, bits);
}
VarId Z(const char *bits) {
    return make_var(Block::Z, bits);
}
VarId V(uint32_t i) {
    return generic_var(i);
}
Scalar I(int64_t v) {
    return Scalar::integer(v);
}

MultilinearPoly term(std::initializer_list<VarId> vars, Scalar c = Scalar::one()) {
    MultilinearPoly f;
    f.add_term(Monomial(vars), c);
    return f;
}

// x0 z0 + x0 z1 + x1 z0 - x1 z1
MultilinearPoly cz_poly() {
    return term({X("0"), Z("0")}) + term({X("0"), Z("1")}) + term({X("1"), Z("0")}) + term({X("1"), Z("1")}, I(-1));
}

// Plain complex evaluation written independently of the library evaluator.
std::complex<double> naive_eval(const MultilinearPoly &f, const std::map<VarId, std::complex<double>> &a) {
    std::complex<double> total = 0;
    for (const auto &[m, c] : f.terms()) {
        std::complex<double> t = c.to_complex();
        for (const auto &v : m) {
            t *= a.at(v);
        }
        total += t;
    }
    return total;
}

VarSet subset(const std::vector<VarId> &vars, uint32_t mask) {
    VarSet out;
    for (size_t i = 0; i < vars.size(); ++i) {
        if ((mask >> i) & 1) {
            out.insert(vars[i]);
        }
    }
    return out;
}

MultilinearPoly to_float_poly(const MultilinearPoly &f) {
    MultilinearPoly out;
    for (const auto &[m, c] : f.terms()) {
        out.add_term(m, to_float(c));
    }
    return out;
}

std::vector<VarId> var_list(const MultilinearPoly &f) {
    VarSet vs = variables_of(f);
    return {vs.begin(), vs.end()};
}

bool is_union_of_classes(const std::vector<VarSet> &classes, const VarSet &I) {
    for (const auto &cls : classes) {
        size_t hit = 0;
        for (const auto &v : cls) {
            hit += I.count(v);
        }
        if (hit != 0 && hit != cls.size()) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(poly, evaluate_examples) {
    Assignment ones{{X("0"), I(1)}, {Z("0"), I(1)}, {X("1"), I(1)}, {Z("1"), I(1)}};
    MultilinearPoly f = term({X("0"), Z("0")}) - term({X("1"), Z("1")});
    EXPECT_TRUE(evaluate(f, ones).is_zero());
    EXPECT_TRUE(evaluate(MultilinearPoly::constant(I(3)), {}).identical(I(3)));
    EXPECT_THROW(evaluate(f, {{X("0"), I(1)}}), MissingVariableError);

    Assignment a{{X("0"), I(1)}, {X("1"), I(2)}, {Z("0"), I(1)}, {Z("1"), Scalar::from_float(-0.6, 0.2)}};
    std::map<VarId, std::complex<double>> ac;
    for (const auto &[v, s] : a) {
        ac[v] = s.to_complex();
    }
    EXPECT_LE(std::abs(evaluate(cz_poly(), a).to_complex() - naive_eval(cz_poly(), ac)), 1e-12);
}

TEST(poly, evaluate_matches_naive_evaluator_on_random_inputs) {
    SeededRng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto vars = generic_vars(static_cast<int>(rng.uniform_int(1, 6)));
        MultilinearPoly f = random_sparse_poly(vars, 0.4, trial % 2 == 0, rng);
        Assignment a;
        std::map<VarId, std::complex<double>> ac;
        for (const auto &v : vars) {
            a[v] = random_scalar(rng);
            ac[v] = a[v].to_complex();
        }
        EXPECT_LE(std::abs(evaluate(f, a).to_complex() - naive_eval(f, ac)), 1e-9);
    }
}

TEST(poly, restrict_examples) {
    MultilinearPoly f = term({V(1), V(2)});
    EXPECT_TRUE(restrict(f, {V(1)}, {{V(1), I(1)}}).identical(term({V(2)})));
    EXPECT_TRUE(restrict(f, {V(1)}, {{V(1), I(0)}}).is_zero());
    EXPECT_THROW(restrict(f, {V(1)}, {}), MissingVariableError);
}

TEST(poly, restrict_in_two_steps_equals_one_step) {
    SeededRng rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        auto vars = generic_vars(6);
        MultilinearPoly f = random_sparse_poly(vars, 0.3, true, rng);
        Assignment a;
        for (const auto &v : vars) {
            a[v] = random_gaussian_integer(rng);
        }
        VarSet I, J;
        for (const auto &v : vars) {
            int64_t which = rng.uniform_int(0, 2);
            if (which == 0) I.insert(v);
            if (which == 1) J.insert(v);
        }
        VarSet both = I;
        both.insert(J.begin(), J.end());
        EXPECT_TRUE(restrict(restrict(f, I, a), J, a).identical(restrict(f, both, a)));
    }
}

TEST(poly, restrict_is_linear) {
    SeededRng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        auto vars = generic_vars(5);
        MultilinearPoly f = random_sparse_poly(vars, 0.4, true, rng);
        MultilinearPoly g = random_sparse_poly(vars, 0.4, true, rng);
        Assignment a;
        for (const auto &v : vars) {
            a[v] = random_gaussian_integer(rng);
        }
        VarSet I = subset(vars, static_cast<uint32_t>(rng.uniform_int(0, 31)));
        EXPECT_TRUE(restrict(f + g, I, a).identical(restrict(f, I, a) + restrict(g, I, a)));
    }
}

TEST(poly, variables_of_examples) {
    EXPECT_EQ(variables_of(term({V(1), V(2)}) + term({V(2)})), (VarSet{V(1), V(2)}));
    MultilinearPoly g = term({V(1)}) + term({V(2)}) - term({V(2)});
    EXPECT_EQ(variables_of(g), (VarSet{V(1)}));
}

TEST(poly, variables_of_matches_brute_force_dependence) {
    SeededRng rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        auto vars = generic_vars(6);
        // Build with cancellations so some listed variables drop out.
        MultilinearPoly f = random_sparse_poly(vars, 0.2, true, rng);
        MultilinearPoly g = f;
        g -= restrict(f, {vars[0]}, {{vars[0], I(0)}});  // the part of f that uses v0
        MultilinearPoly h = f - g;                       // f with v0 removed
        for (const auto *p : {&f, &h}) {
            VarSet depends;
            for (const auto &v : vars) {
                for (int k = 0; k < 3; ++k) {
                    Assignment a;
                    for (const auto &u : vars) {
                        a[u] = random_scalar(rng);
                    }
                    Assignment b = a;
                    b[v] = random_scalar(rng);
                    if (!approx_eq(evaluate(*p, a), evaluate(*p, b), Tolerance{1e-9, 1e-9})) {
                        depends.insert(v);
                        break;
                    }
                }
            }
            EXPECT_EQ(variables_of(*p), depends);
        }
        EXPECT_EQ(variables_of(h).count(vars[0]), 0u);
    }
}

TEST(poly, product_rejects_shared_variables) {
    EXPECT_THROW(term({V(1)}) * term({V(1), V(2)}), PreconditionError);
    MultilinearPoly f;
    EXPECT_THROW(f.add_term({V(1), V(1)}, I(1)), PreconditionError);
}

TEST(poly, justifying_examples) {
    MultilinearPoly f = term({V(1), V(2)});
    EXPECT_TRUE(is_justifying(f, {{V(1), I(1)}, {V(2), I(1)}}));
    EXPECT_FALSE(is_justifying(f, {{V(1), I(0)}, {V(2), I(0)}}));
    SeededRng rng(1);
    Assignment a = find_justifying_assignment(f, rng);
    EXPECT_TRUE(is_justifying(f, a));
    EXPECT_THROW(find_justifying_assignment(MultilinearPoly(), rng), PreconditionError);
    // A Float derivative at rounding level does not count.
    MultilinearPoly g = term({V(1), V(2)}) + term({V(1)}, Scalar::from_float(-1.0));
    EXPECT_FALSE(is_justifying(g, {{V(1), I(1)}, {V(2), Scalar::from_float(1.0 + 1e-17)}}));
}

TEST(poly, justifying_search_reports_not_found) {
    MultilinearPoly f = term({V(1), V(2)});
    SeededRng rng(2);
    EXPECT_NO_THROW(find_justifying_assignment(f, rng, 1));
    EXPECT_THROW(find_justifying_assignment(f, rng, 0), NotFoundError);
}

TEST(poly, sv_examples) {
    SeededRng rng(8);
    MultilinearPoly f = term({V(1), V(2)});
    Assignment a{{V(1), I(1)}, {V(2), I(1)}};
    EXPECT_TRUE(sv_partition_test(f, a, {V(1)}, 20, rng));

    MultilinearPoly g = term({V(1)}) + term({V(2)});
    EXPECT_FALSE(sv_partition_test(g, a, {V(1)}, 20, rng));
    EXPECT_THROW(sv_partition_test(f, {{V(1), I(0)}, {V(2), I(0)}}, {V(1)}, 20, rng), PreconditionError);

    // Float path agrees.
    Assignment af{{V(1), Scalar::from_float(0.3, 1)}, {V(2), Scalar::from_float(-1.2, 0.4)}};
    EXPECT_TRUE(sv_partition_test(f, af, {V(1)}, 20, rng));
    EXPECT_FALSE(sv_partition_test(g, af, {V(1)}, 20, rng));
}

TEST(poly, sv_rejects_every_nontrivial_split_of_the_cz_polynomial) {
    SeededRng rng(9);
    MultilinearPoly p = cz_poly();
    std::vector<VarId> vars = var_list(p);
    for (int rep = 0; rep < 5; ++rep) {
        Assignment a = find_justifying_assignment(p, rng);
        for (uint32_t mask = 1; mask + 1 < (1u << vars.size()); ++mask) {
            EXPECT_FALSE(sv_partition_test(p, a, subset(vars, mask), 20, rng));
            EXPECT_FALSE(bipartition_rank_oracle(p, subset(vars, mask)));
        }
    }
}

TEST(poly, zero_assignment_examples) {
    SeededRng rng(10);
    BlockSpec spec;  // k = m = 1
    std::vector<Scalar> c{I(1), I(1)}, d{I(1), I(1)};
    MultilinearPoly p = build_family_P(spec, c, d, I(2));
    auto w = two_zeros_witness(spec, c, d, I(2));
    ASSERT_TRUE(w);
    auto res = is_indecomposable_by_zero_assignment(p, rng, 0, {w->assignment});
    EXPECT_EQ(res.verdict, ZeroAssignmentVerdict::Indecomposable);

    EXPECT_EQ(is_indecomposable_by_zero_assignment(term({V(1), V(2)}), rng, 200).verdict,
              ZeroAssignmentVerdict::Unknown);

    MultilinearPoly s = term({V(1)}) + term({V(2)});
    Assignment hint{{V(1), I(1)}, {V(2), I(-1)}};
    EXPECT_EQ(is_indecomposable_by_zero_assignment(s, rng, 0, {hint}).verdict, ZeroAssignmentVerdict::Indecomposable);
    EXPECT_EQ(is_indecomposable_by_zero_assignment(s, rng, 10).verdict, ZeroAssignmentVerdict::Indecomposable);
    EXPECT_THROW(is_indecomposable_by_zero_assignment(MultilinearPoly::constant(I(2)), rng), PreconditionError);
}

TEST(poly, zero_assignment_is_sound) {
    SeededRng rng(12);
    int decomposable = 0;
    for (int trial = 0; trial < 150; ++trial) {
        auto vars = generic_vars(static_cast<int>(rng.uniform_int(2, 6)));
        MultilinearPoly f = random_product_poly(vars, 3, 0.5, trial % 2 == 0, rng);
        if (variables_of(f).empty()) {
            continue;
        }
        auto res = is_indecomposable_by_zero_assignment(f, rng, 40);
        bool splits = false;
        std::vector<VarId> fv = var_list(f);
        for (uint32_t mask = 1; mask + 1 < (1u << fv.size()); ++mask) {
            splits |= bipartition_rank_oracle(f, subset(fv, mask));
        }
        decomposable += splits;
        if (splits) {
            EXPECT_EQ(res.verdict, ZeroAssignmentVerdict::Unknown) << f.to_string();
        }
    }
    EXPECT_GT(decomposable, 20);
}

TEST(poly, rank_oracle_examples) {
    MultilinearPoly prod = (term({X("0")}) + term({X("1")})) * (term({Z("0")}) + term({Z("1")}));
    EXPECT_TRUE(bipartition_rank_oracle(prod, {X("0"), X("1")}));
    EXPECT_FALSE(bipartition_rank_oracle(cz_poly(), {X("0"), X("1")}));
    // Float path.
    MultilinearPoly prod_f = prod * Scalar::from_float(0.5, 0.25);
    EXPECT_TRUE(bipartition_rank_oracle(prod_f, {X("0"), X("1")}));
    EXPECT_FALSE(bipartition_rank_oracle(cz_poly() * Scalar::from_float(1.5), {X("0"), X("1")}));
    // Trivial bipartitions always split.
    EXPECT_TRUE(bipartition_rank_oracle(cz_poly(), {}));
}

TEST(poly, rank_oracle_handles_more_than_32_variables) {
    std::vector<VarId> left, right;
    MultilinearPoly ls, rs, diag;
    for (uint32_t i = 0; i < 17; ++i) {
        left.push_back(V(i));
        right.push_back(V(100 + i));
        ls += term({left[i]});
        rs += term({right[i]}, I(i + 1));
        diag += term({left[i], right[i]});
    }
    VarSet L(left.begin(), left.end());
    EXPECT_TRUE(bipartition_rank_oracle(ls * rs, L));
    EXPECT_TRUE(bipartition_rank_oracle(to_float_poly(ls * rs), L));
    EXPECT_FALSE(bipartition_rank_oracle(diag, L));
    EXPECT_FALSE(bipartition_rank_oracle(to_float_poly(diag), L));

    // Multiplying by a monomial in 17 fresh column variables keeps the rank, and
    // pushes the polynomial past the packed path.
    SeededRng rng(61);
    Monomial pad;
    for (uint32_t i = 0; i < 17; ++i) {
        pad.push_back(V(200 + i));
    }
    MultilinearPoly padm;
    padm.add_term(pad, Scalar::one());
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(2, 8));
        std::vector<VarId> vars = generic_vars(n);
        MultilinearPoly f = trial % 3 == 0 ? random_product_poly(vars, 3, 0.5, trial % 2 == 0, rng)
                                           : random_sparse_poly(vars, 0.5, trial % 2 == 0, rng);
        VarSet R = subset(vars, static_cast<uint32_t>(rng.uniform_int(1, (1 << n) - 2)));
        EXPECT_EQ(bipartition_rank_oracle(f * padm, R), bipartition_rank_oracle(f, R)) << f.to_string();
    }
}

TEST(poly, exact_rank_test_catches_a_missing_entry) {
    // [[1,1],[1,0]] has rank 2 although every present 2x2 product matches the pivot.
    MultilinearPoly f = term({X("0"), Z("0")}) + term({X("0"), Z("1")}) + term({X("1"), Z("0")});
    EXPECT_FALSE(bipartition_rank_oracle(f, {X("0"), X("1")}));
    EXPECT_FALSE(bipartition_rank_oracle(f * Scalar::from_float(1.0), {X("0"), X("1")}));
}

TEST(poly, decompose_examples) {
    MultilinearPoly prod = (term({X("0")}) + term({X("1")})) * (term({Z("0")}) + term({Z("1")}));
    auto factors = decompose(prod);
    ASSERT_EQ(factors.size(), 2u);
    EXPECT_EQ(variables_of(factors[0]), (VarSet{X("0"), X("1")}));
    EXPECT_EQ(variables_of(factors[1]), (VarSet{Z("0"), Z("1")}));
    EXPECT_TRUE((factors[0] * factors[1]).identical(prod));

    auto single = decompose(cz_poly());
    ASSERT_EQ(single.size(), 1u);
    EXPECT_TRUE(single[0].identical(cz_poly()));

    EXPECT_THROW(decompose(MultilinearPoly()), PreconditionError);
    std::vector<VarId> many = generic_vars(25);
    MultilinearPoly big;
    for (const auto &v : many) {
        big += term({v});
    }
    EXPECT_THROW(decompose(big), BudgetExceededError);
}

TEST(poly, decompose_normalizes_leading_coefficients) {
    MultilinearPoly g = term({V(0)}, I(2)) + term({V(1)}, I(4));
    MultilinearPoly h = term({V(2)}, I(3)) + MultilinearPoly::constant(I(6));
    auto factors = decompose(g * h);
    ASSERT_EQ(factors.size(), 2u);
    // Second factor is monic in its first monomial; the scalar sits on the first.
    EXPECT_TRUE(factors[1].terms().begin()->second.identical(Scalar::one()));
    EXPECT_TRUE(approx_eq(factors[0] * factors[1], g * h));
}

TEST(poly, decompose_round_trips_random_products) {
    SeededRng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        auto vars = generic_vars(static_cast<int>(rng.uniform_int(2, 9)));
        bool exact = trial % 2 == 0;
        MultilinearPoly f = random_product_poly(vars, 3, 0.5, exact, rng);
        auto factors = decompose(f, Tolerance{1e-10, 1e-8});
        MultilinearPoly back = MultilinearPoly::constant(Scalar::one());
        VarSet seen;
        for (const auto &g : factors) {
            VarSet gv = variables_of(g);
            for (const auto &v : gv) {
                EXPECT_EQ(seen.count(v), 0u);
            }
            seen.insert(gv.begin(), gv.end());
            back = back * g;
            // Each factor is indecomposable.
            std::vector<VarId> fv(gv.begin(), gv.end());
            for (uint32_t mask = 1; mask + 1 < (1u << fv.size()); ++mask) {
                EXPECT_FALSE(bipartition_rank_oracle(g, subset(fv, mask), Tolerance{1e-10, 1e-8}));
            }
        }
        EXPECT_EQ(seen, variables_of(f));
        double scale = 0;
        for (const auto &[m, c] : f.terms()) {
            scale = std::max(scale, c.abs());
        }
        EXPECT_TRUE(approx_eq(back, f, Tolerance{1e-8 * scale, 1e-8})) << f.to_string();
    }
}

TEST(poly, sv_agrees_with_exhaustive_decomposition) {
    SeededRng rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        auto vars = generic_vars(static_cast<int>(rng.uniform_int(2, 8)));
        bool exact = trial % 3 != 0;
        MultilinearPoly f = random_product_poly(vars, 3, 0.5, exact, rng);
        std::vector<VarId> fv = var_list(f);
        auto classes = variable_partition(f);
        Assignment a = find_justifying_assignment(f, rng);
        for (uint32_t mask = 0; mask < (1u << fv.size()); ++mask) {
            VarSet I = subset(fv, mask);
            bool expected = is_union_of_classes(classes, I);
            EXPECT_EQ(sv_partition_test(f, a, I, 20, rng), expected);
            EXPECT_EQ(bipartition_rank_oracle(f, I), expected);
        }
    }
}

TEST(poly, bipartition_scan_matches_per_subset_oracle) {
    SeededRng rng(16);
    for (int trial = 0; trial < 60; ++trial) {
        auto vars = generic_vars(static_cast<int>(rng.uniform_int(2, 8)));
        MultilinearPoly f = random_product_poly(vars, trial % 2 == 0 ? 1 : 3, 0.5, trial % 3 != 0, rng);
        std::vector<VarId> fv = var_list(f);
        BipartitionScan scan = scan_bipartitions(f);
        bool splits = variable_partition(f).size() > 1;
        EXPECT_EQ(scan.split.has_value(), splits) << f.to_string();
        if (scan.split) {
            EXPECT_TRUE(bipartition_rank_oracle(f, *scan.split));
            EXPECT_EQ(scan.split->count(fv.back()), 0u);
        } else {
            EXPECT_EQ(scan.tested, (uint64_t{1} << (fv.size() - 1)) - 1);
        }
    }
    MultilinearPoly wide;
    for (uint32_t i = 0; i < 25; ++i) {
        wide = wide + term({V(i)});
    }
    EXPECT_THROW(scan_bipartitions(wide), BudgetExceededError);
}

TEST(family, cz_example) {
    BlockSpec spec;
    MultilinearPoly p = build_family_P(spec, {I(1), I(1)}, {I(1), I(1)}, I(2));
    EXPECT_TRUE(p.identical(cz_poly()));
}

TEST(family, hypothesis_violation_example) {
    BlockSpec spec;
    std::vector<Scalar> c{I(0), I(1)}, d{I(0), I(1)};
    MultilinearPoly p = build_family_P(spec, c, d, I(2));
    EXPECT_TRUE(p.identical(term({X("1"), Z("1")}, I(-1))));
    HypothesisReport rep = check_family_hypotheses(spec, c, d);
    EXPECT_FALSE(rep.x_non_ones);
    EXPECT_FALSE(rep.z_non_ones);
    EXPECT_TRUE(rep.x_ones);
    EXPECT_FALSE(rep.all());
    EXPECT_THROW(two_zeros_assignment(spec, c, d, I(2), 0), PreconditionError);
}

TEST(family, four_block_instance_matches_direct_expansion) {
    BlockSpec spec{1, 0, 1, 0, 1, 0, 1, 0};
    std::vector<Scalar> c(4, I(1)), d(4, I(1));
    MultilinearPoly p = build_family_P(spec, c, d, I(2));
    auto var = [](Block b, int i) { return make_var(b, static_cast<uint32_t>(i), 1); };
    MultilinearPoly t1, t2;
    for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
            t1 += term({var(Block::X, s), var(Block::Y, t)});
            t2 += term({var(Block::Z, s), var(Block::W, t)});
        }
    }
    MultilinearPoly expect =
        t1 * t2 - term({var(Block::X, 1), var(Block::Y, 1), var(Block::Z, 1), var(Block::W, 1)}, I(2));
    EXPECT_TRUE(p.identical(expect));
    EXPECT_EQ(p.num_terms(), 16u);
    EXPECT_EQ(shape_of(spec), FamilyShape::AllContact);
}

TEST(family, shape_and_length_errors) {
    EXPECT_THROW(build_family_P(BlockSpec{}, {I(1)}, {I(1), I(1)}, I(2)), ShapeError);
    EXPECT_THROW(build_family_P(BlockSpec{}, {I(1), I(1)}, {I(1), I(1)}, I(0)), PreconditionError);
    BlockSpec y_without_w{1, 0, 1, 0, 1, 0, 0, 0};
    EXPECT_THROW(y_without_w.validate(), ShapeError);
    BlockSpec zero_k1{0, 1, 0, 0, 1, 0, 0, 0};
    EXPECT_THROW(zero_k1.validate(), ShapeError);
    BlockSpec zero_n1{1, 0, 0, 0, 1, 0, 0, 1};
    EXPECT_THROW(zero_n1.validate(), ShapeError);
    EXPECT_EQ(shape_of(BlockSpec{1, 1, 0, 0, 1, 0, 0, 0}), FamilyShape::MostGeneralTwoZeros);
    EXPECT_EQ(shape_of(BlockSpec{1, 0, 0, 0, 1, 0, 1, 0}), FamilyShape::AllContactOneZero);
    EXPECT_EQ(shape_of(BlockSpec{1, 0, 0, 0, 1, 0, 1, 1}), FamilyShape::MostGeneralOneZero);
    EXPECT_EQ(shape_of(BlockSpec{1, 0, 1, 1, 1, 0, 1, 0}), FamilyShape::MostGeneral);
}

TEST(family, gaussian_coefficients_satisfy_hypotheses) {
    SeededRng rng(15);
    for (int trial = 0; trial < 100; ++trial) {
        BlockSpec spec{1, static_cast<int>(rng.uniform_int(0, 1)), 1, static_cast<int>(rng.uniform_int(0, 1)),
                       1, static_cast<int>(rng.uniform_int(0, 1)), 1, 0};
        std::vector<Scalar> c(size_t{1} << (spec.k() + spec.l())), d(size_t{1} << (spec.m() + spec.n()));
        for (auto &x : c) x = random_scalar(rng);
        for (auto &x : d) x = random_scalar(rng);
        EXPECT_TRUE(check_family_hypotheses(spec, c, d).all());
    }
}

TEST(family, explicit_two_zeros_assignment) {
    BlockSpec spec;
    std::vector<Scalar> c{I(1), I(1)}, d{I(1), I(1)};
    MultilinearPoly p = build_family_P(spec, c, d, I(2));
    // A = 0 gives T2 = alpha d1 and A = 1 gives T1 = alpha c1; A = 2 is the first good choice.
    auto w = two_zeros_witness(spec, c, d, I(2));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->A, 2);
    EXPECT_NEAR(w->B.real(), -1.0 / 3, 1e-15);
    EXPECT_TRUE(is_justifying(p, w->assignment));
    EXPECT_LE(evaluate(p, w->assignment).abs(), 1e-12);
    for (int A : {0, 1}) {
        auto bad = two_zeros_assignment(spec, c, d, I(2), A);
        ASSERT_TRUE(bad);
        EXPECT_FALSE(is_justifying(p, bad->assignment));
    }
}

TEST(poly_io, round_trip) {
    MultilinearPoly f = cz_poly() + MultilinearPoly::constant(Scalar::from_float(0.5, -0.25));
    std::string text = format_poly(f);
    EXPECT_TRUE(parse_poly(text).identical(f));
    EXPECT_EQ(format_poly(cz_poly()), "1 0 : x[0],z[0]\n1 0 : x[0],z[1]\n1 0 : x[1],z[0]\n-1 0 : x[1],z[1]\n");
    MultilinearPoly g = parse_poly("# comment\n2 0 : v[3], v[1]\n\n 1 1 :\n");
    EXPECT_TRUE(g.identical(term({V(1), V(3)}, I(2)) + MultilinearPoly::constant(Scalar::exact(1, 0, 1))));
    EXPECT_THROW(parse_poly("1 0 x[0]"), PreconditionError);
    EXPECT_THROW(parse_poly("1 : x[0]"), PreconditionError);
    EXPECT_THROW(parse_poly("1 0 : q[0]"), PreconditionError);
    EXPECT_THROW(parse_poly("1 0 : x[0],x[0]"), PreconditionError);
}
