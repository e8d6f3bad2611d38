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

#include "qaclab/poly/family.h"

#include "qaclab/errors.h"
#include "qaclab/poly/decomposition.h"

namespace qaclab {

namespace {

bool leading_ones(uint32_t index, int len2, int len1) {
    uint32_t lead = index >> len2;
    return lead == (uint32_t{1} << len1) - 1;
}

void check_lengths(const BlockSpec &spec, const std::vector<Scalar> &c, const std::vector<Scalar> &d) {
    spec.validate();
    if (c.size() != (size_t{1} << (spec.k() + spec.l()))) {
        throw ShapeError("c must have 2^(k+l) = " + std::to_string(size_t{1} << (spec.k() + spec.l())) +
                         " entries, got " + std::to_string(c.size()));
    }
    if (d.size() != (size_t{1} << (spec.m() + spec.n()))) {
        throw ShapeError("d must have 2^(m+n) = " + std::to_string(size_t{1} << (spec.m() + spec.n())) +
                         " entries, got " + std::to_string(d.size()));
    }
}

}  // namespace

int BlockSpec::total_vars() const {
    int total = (1 << k()) + (1 << m());
    if (has_y()) {
        total += 1 << l();
    }
    if (has_w()) {
        total += 1 << n();
    }
    return total;
}

void BlockSpec::validate() const {
    for (int len : {k1, k2, l1, l2, m1, m2, n1, n2}) {
        if (len < 0 || len > 12) {
            throw ShapeError("block lengths must lie in [0, 12]");
        }
    }
    if (k1 < 1 || m1 < 1) {
        throw ShapeError("k1 and m1 must be at least 1");
    }
    if (has_y() && l1 < 1) {
        throw ShapeError("l1 must be at least 1 when the y block is present");
    }
    if (has_w() && n1 < 1) {
        throw ShapeError("n1 must be at least 1 when the w block is present");
    }
    if (has_y() && !has_w()) {
        throw ShapeError("a y block requires a w block");
    }
}

const char *shape_name(FamilyShape shape) {
    switch (shape) {
        case FamilyShape::AllContactTwoZeros:
            return "all-contact-two-zeros";
        case FamilyShape::AllContactOneZero:
            return "all-contact-one-zero";
        case FamilyShape::AllContact:
            return "all-contact";
        case FamilyShape::MostGeneralTwoZeros:
            return "most-general-two-zeros";
        case FamilyShape::MostGeneralOneZero:
            return "most-general-one-zero";
        case FamilyShape::MostGeneral:
            return "most-general";
    }
    return "?";
}

FamilyShape shape_of(const BlockSpec &spec) {
    spec.validate();
    bool split = spec.k2 > 0 || spec.l2 > 0 || spec.m2 > 0 || spec.n2 > 0;
    if (!spec.has_w()) {
        return split ? FamilyShape::MostGeneralTwoZeros : FamilyShape::AllContactTwoZeros;
    }
    if (!spec.has_y()) {
        return split ? FamilyShape::MostGeneralOneZero : FamilyShape::AllContactOneZero;
    }
    return split ? FamilyShape::MostGeneral : FamilyShape::AllContact;
}

MultilinearPoly build_family_P(const BlockSpec &spec, const std::vector<Scalar> &c, const std::vector<Scalar> &d,
                               const Scalar &alpha) {
    check_lengths(spec, c, d);
    if (alpha.is_zero()) {
        throw PreconditionError("alpha must be nonzero");
    }
    const uint32_t ny = uint32_t{1} << spec.l();
    const uint32_t nw = uint32_t{1} << spec.n();
    const Scalar one_minus_alpha = Scalar::one() - alpha;
    MultilinearPoly p;
    for (uint32_t ci = 0; ci < c.size(); ++ci) {
        if (c[ci].is_zero()) {
            continue;
        }
        uint32_t s = ci / ny;
        uint32_t t = ci % ny;
        bool ones1 = leading_ones(s, spec.k2, spec.k1) && (!spec.has_y() || leading_ones(t, spec.l2, spec.l1));
        for (uint32_t di = 0; di < d.size(); ++di) {
            if (d[di].is_zero()) {
                continue;
            }
            uint32_t u = di / nw;
            uint32_t v = di % nw;
            bool ones2 = leading_ones(u, spec.m2, spec.m1) && (!spec.has_w() || leading_ones(v, spec.n2, spec.n1));
            Monomial m{make_var(Block::X, s, static_cast<uint8_t>(spec.k()))};
            if (spec.has_y()) {
                m.push_back(make_var(Block::Y, t, static_cast<uint8_t>(spec.l())));
            }
            m.push_back(make_var(Block::Z, u, static_cast<uint8_t>(spec.m())));
            if (spec.has_w()) {
                m.push_back(make_var(Block::W, v, static_cast<uint8_t>(spec.n())));
            }
            Scalar coeff = c[ci] * d[di];
            if (ones1 && ones2) {
                coeff *= one_minus_alpha;
            }
            p.add_term(std::move(m), coeff);
        }
    }
    return p;
}

std::vector<std::string> HypothesisReport::failed() const {
    std::vector<std::string> out;
    if (!x_ones) out.push_back("x-ones");
    if (!x_non_ones) out.push_back("x-non-ones");
    if (!y_non_ones) out.push_back("y-non-ones");
    if (!z_ones) out.push_back("z-ones");
    if (!z_non_ones) out.push_back("z-non-ones");
    if (!w_non_ones) out.push_back("w-non-ones");
    return out;
}

HypothesisReport check_family_hypotheses(const BlockSpec &spec, const std::vector<Scalar> &c,
                                         const std::vector<Scalar> &d) {
    check_lengths(spec, c, d);
    HypothesisReport rep;
    rep.y_non_ones = !spec.has_y();
    rep.w_non_ones = !spec.has_w();
    const uint32_t ny = uint32_t{1} << spec.l();
    for (uint32_t ci = 0; ci < c.size(); ++ci) {
        if (c[ci].is_zero()) {
            continue;
        }
        bool s_ones = leading_ones(ci / ny, spec.k2, spec.k1);
        bool t_ones = !spec.has_y() || leading_ones(ci % ny, spec.l2, spec.l1);
        rep.x_ones |= s_ones && t_ones;
        rep.x_non_ones |= !s_ones;
        rep.y_non_ones |= !t_ones;
    }
    const uint32_t nw = uint32_t{1} << spec.n();
    for (uint32_t di = 0; di < d.size(); ++di) {
        if (d[di].is_zero()) {
            continue;
        }
        bool u_ones = leading_ones(di / nw, spec.m2, spec.m1);
        bool v_ones = !spec.has_w() || leading_ones(di % nw, spec.n2, spec.n1);
        rep.z_ones |= u_ones && v_ones;
        rep.z_non_ones |= !u_ones;
        rep.w_non_ones |= !v_ones;
    }
    return rep;
}

std::optional<TwoZerosWitness> two_zeros_assignment(const BlockSpec &spec, const std::vector<Scalar> &c,
                                                    const std::vector<Scalar> &d, const Scalar &alpha, int A) {
    if (shape_of(spec) != FamilyShape::AllContactTwoZeros) {
        throw ShapeError("the explicit zero assignment needs the two-block shape with k2 = m2 = 0");
    }
    HypothesisReport rep = check_family_hypotheses(spec, c, d);
    if (!rep.all()) {
        throw PreconditionError("family hypotheses fail: " + rep.failed().front());
    }
    const uint32_t ones_x = static_cast<uint32_t>(c.size()) - 1;
    const uint32_t ones_z = static_cast<uint32_t>(d.size()) - 1;
    uint32_t s0 = 0;
    while (s0 == ones_x || c[s0].is_zero()) {
        ++s0;
    }
    uint32_t u0 = 0;
    while (u0 == ones_z || d[u0].is_zero()) {
        ++u0;
    }
    const Scalar &c1 = c[ones_x];
    const Scalar &d1 = d[ones_z];
    Scalar t1 = c1 + c[s0] * Scalar::integer(A);
    if (t1.is_zero()) {
        return std::nullopt;
    }
    TwoZerosWitness w;
    w.A = A;
    w.B = alpha * c1 * d1 / (d[u0] * t1) - d1 / d[u0];
    const auto kx = static_cast<uint8_t>(spec.k());
    const auto kz = static_cast<uint8_t>(spec.m());
    for (uint32_t s = 0; s <= ones_x; ++s) {
        Scalar v = s == s0 ? Scalar::integer(A) : s == ones_x ? Scalar::one() : Scalar();
        w.assignment[make_var(Block::X, s, kx)] = v;
    }
    for (uint32_t u = 0; u <= ones_z; ++u) {
        Scalar v = u == u0 ? w.B : u == ones_z ? Scalar::one() : Scalar();
        w.assignment[make_var(Block::Z, u, kz)] = v;
    }
    return w;
}

std::optional<TwoZerosWitness> two_zeros_witness(const BlockSpec &spec, const std::vector<Scalar> &c,
                                                 const std::vector<Scalar> &d, const Scalar &alpha,
                                                 const Tolerance &tol) {
    MultilinearPoly p = build_family_P(spec, c, d, alpha);
    for (int A = 0; A <= 4; ++A) {
        auto w = two_zeros_assignment(spec, c, d, alpha, A);
        if (!w) {
            continue;
        }
        Scalar value = evaluate(p, w->assignment);
        bool vanishes = value.is_exact() ? value.is_zero()
                                         : value.abs() <= tol.threshold(abs_evaluate(p, w->assignment));
        if (vanishes && is_justifying(p, w->assignment, tol)) {
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace qaclab
