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

#include "qaclab/poly/decomposition.h"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include <Eigen/SVD>

#include "qaclab/errors.h"
#include "qaclab/poly/packed_poly.h"

namespace qaclab {

namespace {

std::vector<Scalar> point_of(const PackedPoly &p, const Assignment &a) {
    std::vector<Scalar> point;
    point.reserve(p.vars.size());
    for (const auto &v : p.vars) {
        auto it = a.find(v);
        if (it == a.end()) {
            throw MissingVariableError("assignment has no value for " + v.to_string());
        }
        point.push_back(it->second);
    }
    return point;
}

bool all_exact(const std::vector<Scalar> &point) {
    return std::all_of(point.begin(), point.end(), [](const Scalar &s) { return s.is_exact(); });
}

// Value and term magnitude of df/dv at `point`, where v is bit `bit`.
std::pair<Scalar, double> derivative_at(const PackedPoly &p, int bit, const std::vector<Scalar> &point) {
    Scalar value;
    double scale = 0;
    const uint32_t vbit = uint32_t{1} << bit;
    for (const auto &[mask, c] : p.terms) {
        if (!(mask & vbit)) {
            continue;
        }
        Scalar term = c;
        double mag = c.abs();
        for (uint32_t m = mask & ~vbit; m; m &= m - 1) {
            term *= point[std::countr_zero(m)];
            mag *= point[std::countr_zero(m)].abs();
        }
        value += term;
        scale += mag;
    }
    return {value, scale};
}

bool nonzero(const Scalar &value, double scale, const Tolerance &tol) {
    if (value.is_exact()) {
        return !value.is_zero();
    }
    return value.abs() > tol.threshold(scale);
}

bool packed_is_justifying(const PackedPoly &p, const std::vector<Scalar> &point, const Tolerance &tol) {
    for (size_t i = 0; i < p.vars.size(); ++i) {
        auto [value, scale] = derivative_at(p, static_cast<int>(i), point);
        if (!nonzero(value, scale, tol)) {
            return false;
        }
    }
    return true;
}

bool packed_vanishes_at(const PackedPoly &p, const std::vector<Scalar> &point, const Tolerance &tol) {
    Scalar value = packed_evaluate(p, point);
    return !nonzero(value, packed_abs_evaluate(p, point), tol);
}

Assignment assignment_of(const PackedPoly &p, const std::vector<Scalar> &point) {
    Assignment a;
    for (size_t i = 0; i < p.vars.size(); ++i) {
        a.emplace(p.vars[i], point[i]);
    }
    return a;
}

Scalar small_integer(SeededRng &rng, bool allow_negative) {
    int64_t v = rng.uniform_int(1, 7);
    if (allow_negative && rng.coin()) {
        v = -v;
    }
    return Scalar::integer(v);
}

}  // namespace

bool is_justifying(const MultilinearPoly &f, const Assignment &a, const Tolerance &tol) {
    PackedPoly p = PackedPoly::pack(f);
    return packed_is_justifying(p, point_of(p, a), tol);
}

Assignment find_justifying_assignment(const MultilinearPoly &f, SeededRng &rng, int attempts,
                                      const Tolerance &tol) {
    if (f.is_zero()) {
        throw PreconditionError("the zero polynomial has no justifying assignment");
    }
    PackedPoly p = PackedPoly::pack(f);
    std::vector<Scalar> point(p.vars.size());
    for (int attempt = 0; attempt < attempts; ++attempt) {
        bool integral = attempt < (attempts + 1) / 2;
        for (auto &x : point) {
            x = integral ? small_integer(rng, false) : random_scalar(rng);
        }
        if (packed_is_justifying(p, point, tol)) {
            return assignment_of(p, point);
        }
    }
    throw NotFoundError("no justifying assignment found in " + std::to_string(attempts) + " attempts");
}

bool sv_partition_test(const MultilinearPoly &f, const Assignment &a, const VarSet &I, int trials,
                       SeededRng &rng, const Tolerance &tol) {
    PackedPoly p = PackedPoly::pack(f);
    std::vector<Scalar> point = point_of(p, a);
    if (!packed_is_justifying(p, point, tol)) {
        throw PreconditionError("sv_partition_test needs a justifying assignment");
    }
    const uint32_t in = p.mask_of(I);
    const uint32_t out = p.full_mask() & ~in;
    Scalar fa = packed_evaluate(p, point);

    if (p.is_exact() && all_exact(point) && p.num_vars() <= 16) {
        PackedPoly lhs = p;
        for (auto &t : lhs.terms) {
            t.second *= fa;
        }
        lhs.normalize();
        PackedPoly rhs = packed_multiply(packed_restrict(p, in, point), packed_restrict(p, out, point));
        if (lhs.terms.size() != rhs.terms.size()) {
            return false;
        }
        for (size_t i = 0; i < lhs.terms.size(); ++i) {
            if (lhs.terms[i].first != rhs.terms[i].first || !lhs.terms[i].second.identical(rhs.terms[i].second)) {
                return false;
            }
        }
        return true;
    }

    const double fa_abs = packed_abs_evaluate(p, point);
    std::vector<Scalar> q(p.vars.size());
    std::vector<Scalar> q_in(p.vars.size());
    std::vector<Scalar> q_out(p.vars.size());
    for (int trial = 0; trial < trials; ++trial) {
        for (auto &x : q) {
            x = random_scalar(rng);
        }
        for (size_t i = 0; i < q.size(); ++i) {
            bool is_in = (in >> i) & 1;
            q_in[i] = is_in ? point[i] : q[i];
            q_out[i] = is_in ? q[i] : point[i];
        }
        Scalar lhs = fa * packed_evaluate(p, q);
        Scalar rhs = packed_evaluate(p, q_in) * packed_evaluate(p, q_out);
        double scale = fa_abs * packed_abs_evaluate(p, q) +
                       packed_abs_evaluate(p, q_in) * packed_abs_evaluate(p, q_out);
        if ((lhs - rhs).abs() > tol.threshold(scale)) {
            return false;
        }
    }
    return true;
}

ZeroAssignmentResult is_indecomposable_by_zero_assignment(const MultilinearPoly &f, SeededRng &rng, int attempts,
                                                          const std::vector<Assignment> &hints,
                                                          const Tolerance &tol) {
    PackedPoly p = PackedPoly::pack(f);
    if (p.num_vars() == 0) {
        throw PreconditionError("zero-assignment test needs a nonconstant polynomial");
    }
    for (const auto &hint : hints) {
        std::vector<Scalar> point;
        try {
            point = point_of(p, hint);
        } catch (const MissingVariableError &) {
            continue;
        }
        if (packed_vanishes_at(p, point, tol) && packed_is_justifying(p, point, tol)) {
            return {ZeroAssignmentVerdict::Indecomposable, assignment_of(p, point)};
        }
    }

    std::vector<Scalar> point(p.vars.size());
    for (int attempt = 0; attempt < attempts; ++attempt) {
        bool integral = attempt < (attempts + 1) / 2;
        for (auto &x : point) {
            x = integral ? small_integer(rng, true) : random_scalar(rng);
        }
        int bit = static_cast<int>(rng.uniform_int(0, static_cast<int64_t>(p.vars.size()) - 1));
        const uint32_t vbit = uint32_t{1} << bit;
        // f = x_v * d + f0 with d, f0 free of x_v.
        auto [d, d_scale] = derivative_at(p, bit, point);
        if (!nonzero(d, d_scale, tol)) {
            continue;
        }
        Scalar f0;
        for (const auto &[mask, c] : p.terms) {
            if (mask & vbit) {
                continue;
            }
            Scalar term = c;
            for (uint32_t m = mask; m; m &= m - 1) {
                term *= point[std::countr_zero(m)];
            }
            f0 += term;
        }
        point[bit] = -f0 / d;
        if (packed_vanishes_at(p, point, tol) && packed_is_justifying(p, point, tol)) {
            return {ZeroAssignmentVerdict::Indecomposable, assignment_of(p, point)};
        }
    }
    return {};
}

namespace {

// Rank test on the coefficient matrix keyed by monomials, for polynomials with too
// many variables to pack. Same criteria as packed_rank_at_most_one.
bool keyed_rank_at_most_one(const MultilinearPoly &f, const VarSet &I, const Tolerance &tol) {
    std::map<Monomial, size_t> rows, cols;
    std::map<std::pair<size_t, size_t>, Scalar> entries;
    for (const auto &[m, c] : f.terms()) {
        Monomial r, k;
        for (const auto &v : m) {
            (I.count(v) ? r : k).push_back(v);
        }
        size_t ri = rows.emplace(std::move(r), rows.size()).first->second;
        size_t ci = cols.emplace(std::move(k), cols.size()).first->second;
        entries.emplace(std::pair{ri, ci}, c);
    }
    if (rows.size() < 2 || cols.size() < 2) {
        return true;
    }
    if (f.is_exact()) {
        try {
            const auto &[rc, pivot] = *entries.begin();
            const auto [r0, c0] = rc;
            size_t in_col0 = 0, in_row0 = 0;
            for (const auto &[pos, v] : entries) {
                const auto [r, c] = pos;
                in_col0 += c == c0;
                in_row0 += r == r0;
                if (r == r0 || c == c0) {
                    continue;
                }
                auto a = entries.find({r, c0});
                auto b = entries.find({r0, c});
                if (a == entries.end() || b == entries.end() || !(v * pivot).identical(a->second * b->second)) {
                    return false;
                }
            }
            return in_col0 * in_row0 == entries.size();
        } catch (const std::overflow_error &) {
            // Decide with singular values instead.
        }
    }
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(rows.size(), cols.size());
    for (const auto &[pos, v] : entries) {
        mat(pos.first, pos.second) = v.to_complex();
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(mat);
    const auto &sv = svd.singularValues();
    return sv(1) <= tol.threshold(sv(0));
}

}  // namespace

bool bipartition_rank_oracle(const MultilinearPoly &f, const VarSet &I, const Tolerance &tol) {
    if (variables_of(f).size() > 32) {
        return keyed_rank_at_most_one(f, I, tol);
    }
    PackedPoly p = PackedPoly::pack(f);
    return packed_rank_at_most_one(p, p.mask_of(I), tol);
}

BipartitionScan scan_bipartitions(const MultilinearPoly &f, const Tolerance &tol) {
    const PackedPoly p = PackedPoly::pack(f);
    const size_t n = p.num_vars();
    if (n > kDecomposeMaxVars) {
        throw BudgetExceededError("bipartition scans are capped at " + std::to_string(kDecomposeMaxVars) +
                                  " variables");
    }
    BipartitionScan out;
    if (n < 2) {
        return out;
    }
    for (uint32_t rows = 1; rows < (uint32_t{1} << (n - 1)); ++rows) {
        ++out.tested;
        if (packed_rank_at_most_one(p, rows, tol)) {
            VarSet I;
            for (uint32_t m = rows; m; m &= m - 1) {
                I.insert(p.vars[std::countr_zero(m)]);
            }
            out.split = std::move(I);
            break;
        }
    }
    return out;
}

namespace {

uint32_t support_of(const PackedPoly &p) {
    uint32_t s = 0;
    for (const auto &t : p.terms) {
        s |= t.first;
    }
    return s;
}

// Smallest nonempty proper subset of `support` at which p splits, or 0. The
// smallest such set is a single class of the variable partition.
uint32_t smallest_split(const PackedPoly &p, uint32_t support, const Tolerance &tol) {
    std::vector<int> bits;
    for (uint32_t m = support; m; m &= m - 1) {
        bits.push_back(std::countr_zero(m));
    }
    const int n = static_cast<int>(bits.size());
    std::vector<int> idx;
    for (int size = 1; size <= n / 2; ++size) {
        idx.resize(size);
        for (int i = 0; i < size; ++i) {
            idx[i] = i;
        }
        while (true) {
            uint32_t mask = 0;
            for (int i : idx) {
                mask |= uint32_t{1} << bits[i];
            }
            if (packed_rank_at_most_one(p, mask, tol)) {
                return mask;
            }
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) {
                --i;
            }
            if (i < 0) {
                break;
            }
            ++idx[i];
            for (int j = i + 1; j < size; ++j) {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    return 0;
}

void split_recursive(const PackedPoly &p, const Tolerance &tol, std::vector<PackedPoly> &out) {
    uint32_t support = support_of(p);
    uint32_t cls = std::popcount(support) < 2 ? 0 : smallest_split(p, support, tol);
    if (cls == 0) {
        out.push_back(p);
        return;
    }
    // Column through the first term gives the class factor, its row the rest.
    const uint32_t r0 = p.terms[0].first & cls;
    const uint32_t c0 = p.terms[0].first & ~cls;
    PackedPoly g;
    PackedPoly h;
    g.vars = p.vars;
    h.vars = p.vars;
    for (const auto &[m, c] : p.terms) {
        if ((m & ~cls) == c0) {
            g.terms.emplace_back(m & cls, c);
        }
        if ((m & cls) == r0) {
            h.terms.emplace_back(m & ~cls, c);
        }
    }
    g.normalize();
    h.normalize();
    out.push_back(std::move(g));
    split_recursive(h, tol, out);
}

}  // namespace

std::vector<MultilinearPoly> decompose(const MultilinearPoly &f, const Tolerance &tol) {
    if (f.is_zero()) {
        throw PreconditionError("cannot decompose the zero polynomial");
    }
    PackedPoly p = PackedPoly::pack(f);
    if (p.num_vars() > kDecomposeMaxVars) {
        throw BudgetExceededError("decompose is capped at " + std::to_string(kDecomposeMaxVars) + " variables");
    }
    if (p.num_vars() == 0) {
        return {f};
    }
    std::vector<PackedPoly> raw;
    split_recursive(p, tol, raw);
    std::sort(raw.begin(), raw.end(), [](const PackedPoly &a, const PackedPoly &b) {
        return std::countr_zero(support_of(a)) < std::countr_zero(support_of(b));
    });

    std::vector<MultilinearPoly> factors;
    Monomial lead;
    for (const auto &r : raw) {
        MultilinearPoly raw_factor = r.unpack();
        const Scalar c = raw_factor.terms().begin()->second;
        lead = monomial_product(lead, raw_factor.terms().begin()->first);
        MultilinearPoly g;
        for (const auto &[m, v] : raw_factor.terms()) {
            g.add_term(m, v / c);
        }
        factors.push_back(std::move(g));
    }
    factors.front() *= f.coefficient(lead);
    return factors;
}

std::vector<VarSet> variable_partition(const MultilinearPoly &f, const Tolerance &tol) {
    std::vector<VarSet> out;
    for (const auto &g : decompose(f, tol)) {
        out.push_back(variables_of(g));
    }
    return out;
}

}  // namespace qaclab
