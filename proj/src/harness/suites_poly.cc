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


// Suites over multilinear polynomials: the irreducible family and the sv identity test.

#include "qaclab/numerics/scalar_io.h"
#include "qaclab/poly/decomposition.h"
#include "qaclab/poly/family.h"
#include "qaclab/poly/poly_io.h"
#include "qaclab/poly/random_poly.h"
#include "samplers.h"
#include "suites.h"

namespace qaclab::harness {

namespace {

// Exact instances run the exhaustive scan on the exact pivot test; Float ones on SVDs.
constexpr int kExactFamilyVars = 20;
constexpr int kFloatFamilyVars = 12;

BlockSpec sample_spec(FamilyShape shape, int max_vars, int max_qubits, SeededRng &rng) {
    const bool has_w = shape != FamilyShape::AllContactTwoZeros && shape != FamilyShape::MostGeneralTwoZeros;
    const bool has_y = shape == FamilyShape::AllContact || shape == FamilyShape::MostGeneral;
    const bool split = shape == FamilyShape::MostGeneralTwoZeros || shape == FamilyShape::MostGeneralOneZero ||
                       shape == FamilyShape::MostGeneral;
    auto len = [&](bool present, int lo, int hi) {
        return present ? static_cast<int>(rng.uniform_int(lo, hi)) : 0;
    };
    for (;;) {
        BlockSpec s;
        s.k1 = len(true, 1, 3);
        s.k2 = len(split, 0, 2);
        s.l1 = len(has_y, 1, 3);
        s.l2 = len(has_y && split, 0, 2);
        s.m1 = len(true, 1, 3);
        s.m2 = len(split, 0, 2);
        s.n1 = len(has_w, 1, 3);
        s.n2 = len(has_w && split, 0, 2);
        if (split && s.k2 + s.l2 + s.m2 + s.n2 == 0) {
            continue;
        }
        if (s.total_vars() <= max_vars && s.k() + s.l() + s.m() + s.n() <= max_qubits) {
            return s;
        }
    }
}

std::string spec_string(const BlockSpec &s) {
    return "k=" + std::to_string(s.k1) + "+" + std::to_string(s.k2) + " l=" + std::to_string(s.l1) + "+" +
           std::to_string(s.l2) + " m=" + std::to_string(s.m1) + "+" + std::to_string(s.m2) +
           " n=" + std::to_string(s.n1) + "+" + std::to_string(s.n2);
}

std::string scalars_string(const std::vector<Scalar> &v) {
    std::string out;
    for (const auto &x : v) {
        out += (out.empty() ? "" : "; ") + format_scalar(x);
    }
    return out;
}

std::vector<Scalar> sparse_coefficients(size_t n, bool exact, SeededRng &rng) {
    std::vector<Scalar> v(n, Scalar::integer(0));
    for (auto &x : v) {
        if (!rng.coin(0.3)) {
            x = random_coefficient(rng, exact);
        }
    }
    return v;
}

VarSet subset(const std::vector<VarId> &vars, uint64_t mask) {
    VarSet I;
    for (size_t i = 0; i < vars.size(); ++i) {
        if (mask >> i & 1) {
            I.insert(vars[i]);
        }
    }
    return I;
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

void irreducibility_family(Instance &in) {
    const bool exact = in.cfg.backend == Backend::Exact;
    const auto shape = static_cast<FamilyShape>(in.index % 6);
    const BlockSpec spec =
        sample_spec(shape, exact ? kExactFamilyVars : kFloatFamilyVars, in.cfg.max_qubits, in.rng);
    std::vector<Scalar> c, d;
    do {
        c = sparse_coefficients(size_t{1} << (spec.k() + spec.l()), exact, in.rng);
        d = sparse_coefficients(size_t{1} << (spec.m() + spec.n()), exact, in.rng);
    } while (!check_family_hypotheses(spec, c, d).all());
    // CZ gives alpha = 2, G_eta gives 1 - eta.
    const Scalar alpha = Scalar::one() - random_phase(in.rng, in.cfg.backend);
    const MultilinearPoly P = build_family_P(spec, c, d, alpha);
    in.dump(dump_line("shape", shape_name(shape)) + dump_line("blocks", spec_string(spec)) +
            dump_line("alpha", format_scalar(alpha)) + dump_line("c", scalars_string(c)) +
            dump_line("d", scalars_string(d)) + dump_block("P", format_poly(P)));
    in.count(std::string("shape.") + shape_name(shape));

    const BipartitionScan scan = scan_bipartitions(P, in.cfg.tol);
    in.count("bipartitions", scan.tested);
    if (scan.split) {
        std::string side;
        for (const auto &v : *scan.split) {
            side += (side.empty() ? "" : ",") + v.to_string();
        }
        in.fail("P splits at {" + side + "}");
        return;
    }
    const size_t factors = decompose(P, in.cfg.tol).size();
    if (factors != 1) {
        in.fail("decompose returned " + std::to_string(factors) + " factors");
    }
    if (shape != FamilyShape::AllContactTwoZeros) {
        return;
    }
    auto w = two_zeros_witness(spec, c, d, alpha, in.cfg.tol);
    if (!w) {
        in.fail("no A in {0,...,4} gives a justifying zero assignment");
        return;
    }
    in.count("witness.A=" + std::to_string(w->A));
    if (!is_justifying(P, w->assignment, in.cfg.tol)) {
        in.fail("witness for A=" + std::to_string(w->A) + " is not justifying");
    }
    const Scalar value = evaluate(P, w->assignment);
    if (!value.is_negligible(in.cfg.tol, 1.0)) {
        in.fail("P at the witness for A=" + std::to_string(w->A) + " is " + format_scalar(value));
    }
}

void sv_vs_rank(Instance &in) {
    const bool exact = in.cfg.backend == Backend::Exact;
    const int nv = static_cast<int>(in.rng.uniform_int(2, in.cfg.max_qubits));
    const MultilinearPoly f = random_product_poly(generic_vars(nv), 3, 0.5, exact, in.rng);
    in.dump(dump_block("f", format_poly(f)));
    const VarSet fvars = variables_of(f);
    const std::vector<VarId> vars(fvars.begin(), fvars.end());
    const auto classes = variable_partition(f, in.cfg.tol);
    in.count("classes", classes.size());
    const Assignment a = find_justifying_assignment(f, in.rng, 64, in.cfg.tol);
    for (uint64_t mask = 0; mask < (uint64_t{1} << vars.size()); ++mask) {
        const VarSet I = subset(vars, mask);
        const bool expected = is_union_of_classes(classes, I);
        const bool sv = sv_partition_test(f, a, I, 20, in.rng, in.cfg.tol);
        const bool rank = bipartition_rank_oracle(f, I, in.cfg.tol);
        in.count("subsets");
        if (sv != expected || rank != expected) {
            in.fail("subset mask " + std::to_string(mask) + ": partition says " + (expected ? "split" : "no split") +
                    ", sv_partition_test " + (sv ? "split" : "no split") + ", rank oracle " +
                    (rank ? "split" : "no split"));
        }
    }
}

}  // namespace qaclab::harness
