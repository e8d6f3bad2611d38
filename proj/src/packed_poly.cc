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

#include "qaclab/poly/packed_poly.h"

#include <algorithm>
#include <stdexcept>
#include <Eigen/Dense>

#include "qaclab/errors.h"

namespace qaclab {

PackedPoly PackedPoly::pack(const MultilinearPoly &f) {
    PackedPoly p;
    VarSet vs = variables_of(f);
    if (vs.size() > 32) {
        throw BudgetExceededError("more than 32 variables cannot be packed");
    }
    p.vars.assign(vs.begin(), vs.end());
    p.terms.reserve(f.num_terms());
    for (const auto &[m, c] : f.terms()) {
        uint32_t mask = 0;
        for (const auto &v : m) {
            auto it = std::lower_bound(p.vars.begin(), p.vars.end(), v);
            mask |= uint32_t{1} << (it - p.vars.begin());
        }
        p.terms.emplace_back(mask, c);
    }
    std::sort(p.terms.begin(), p.terms.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    return p;
}

MultilinearPoly PackedPoly::unpack() const {
    MultilinearPoly f;
    for (const auto &[mask, c] : terms) {
        Monomial m;
        for (size_t i = 0; i < vars.size(); ++i) {
            if ((mask >> i) & 1) {
                m.push_back(vars[i]);
            }
        }
        f.add_term(std::move(m), c);
    }
    return f;
}

bool PackedPoly::is_exact() const {
    return std::all_of(terms.begin(), terms.end(), [](const auto &t) { return t.second.is_exact(); });
}

uint32_t PackedPoly::mask_of(const VarSet &I) const {
    uint32_t mask = 0;
    for (size_t i = 0; i < vars.size(); ++i) {
        if (I.count(vars[i])) {
            mask |= uint32_t{1} << i;
        }
    }
    return mask;
}

const Scalar *PackedPoly::find(uint32_t mask) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), mask,
                               [](const auto &t, uint32_t m) { return t.first < m; });
    if (it == terms.end() || it->first != mask) {
        return nullptr;
    }
    return &it->second;
}

void PackedPoly::normalize() {
    std::sort(terms.begin(), terms.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    std::vector<std::pair<uint32_t, Scalar>> merged;
    merged.reserve(terms.size());
    for (auto &t : terms) {
        if (!merged.empty() && merged.back().first == t.first) {
            merged.back().second += t.second;
        } else {
            if (!merged.empty() && merged.back().second.is_zero()) {
                merged.pop_back();
            }
            merged.push_back(std::move(t));
        }
    }
    if (!merged.empty() && merged.back().second.is_zero()) {
        merged.pop_back();
    }
    terms = std::move(merged);
}

Scalar packed_evaluate(const PackedPoly &f, const std::vector<Scalar> &point) {
    Scalar total;
    for (const auto &[mask, c] : f.terms) {
        Scalar term = c;
        for (uint32_t m = mask; m; m &= m - 1) {
            term *= point[__builtin_ctz(m)];
        }
        total += term;
    }
    return total;
}

double packed_abs_evaluate(const PackedPoly &f, const std::vector<Scalar> &point) {
    double total = 0;
    for (const auto &[mask, c] : f.terms) {
        double term = c.abs();
        for (uint32_t m = mask; m; m &= m - 1) {
            term *= point[__builtin_ctz(m)].abs();
        }
        total += term;
    }
    return total;
}

PackedPoly packed_restrict(const PackedPoly &f, uint32_t mask, const std::vector<Scalar> &point) {
    PackedPoly out;
    out.vars = f.vars;
    out.terms.reserve(f.terms.size());
    for (const auto &[m, c] : f.terms) {
        Scalar coeff = c;
        for (uint32_t hit = m & mask; hit; hit &= hit - 1) {
            coeff *= point[__builtin_ctz(hit)];
        }
        out.terms.emplace_back(m & ~mask, coeff);
    }
    out.normalize();
    return out;
}

PackedPoly packed_multiply(const PackedPoly &f, const PackedPoly &g) {
    if (f.vars != g.vars) {
        throw PreconditionError("packed polynomials use different variable tables");
    }
    PackedPoly out;
    out.vars = f.vars;
    out.terms.reserve(f.terms.size() * g.terms.size());
    for (const auto &[mf, cf] : f.terms) {
        for (const auto &[mg, cg] : g.terms) {
            if (mf & mg) {
                throw PreconditionError("product is not multilinear");
            }
            out.terms.emplace_back(mf | mg, cf * cg);
        }
    }
    out.normalize();
    return out;
}

namespace {

// Rank <= 1 over the fraction field, through the pivot (r0, c0) of the first term:
// every entry must satisfy M[r][c] * M[r0][c0] == M[r][c0] * M[r0][c], and the
// support must fill the whole rectangle rows(c0) x cols(r0).
bool exact_rank_at_most_one(const PackedPoly &f, uint32_t rows) {
    const uint32_t cols = ~rows;
    const uint32_t r0 = f.terms[0].first & rows;
    const uint32_t c0 = f.terms[0].first & cols;
    const Scalar &pivot = f.terms[0].second;
    size_t in_col0 = 0;
    size_t in_row0 = 0;
    for (const auto &[m, v] : f.terms) {
        uint32_t r = m & rows;
        uint32_t c = m & cols;
        in_col0 += c == c0;
        in_row0 += r == r0;
        if (r == r0 || c == c0) {
            continue;
        }
        const Scalar *rc0 = f.find(r | c0);
        if (rc0 == nullptr) {
            return false;
        }
        const Scalar *r0c = f.find(r0 | c);
        if (r0c == nullptr) {
            return false;
        }
        if (!(v * pivot).identical(*rc0 * *r0c)) {
            return false;
        }
    }
    return in_col0 * in_row0 == f.terms.size();
}

bool float_rank_at_most_one(const PackedPoly &f, uint32_t rows, const Tolerance &tol) {
    std::vector<uint32_t> row_keys;
    std::vector<uint32_t> col_keys;
    for (const auto &[m, v] : f.terms) {
        row_keys.push_back(m & rows);
        col_keys.push_back(m & ~rows);
    }
    std::sort(row_keys.begin(), row_keys.end());
    row_keys.erase(std::unique(row_keys.begin(), row_keys.end()), row_keys.end());
    std::sort(col_keys.begin(), col_keys.end());
    col_keys.erase(std::unique(col_keys.begin(), col_keys.end()), col_keys.end());
    if (row_keys.size() < 2 || col_keys.size() < 2) {
        return true;
    }
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(row_keys.size(), col_keys.size());
    for (const auto &[m, v] : f.terms) {
        auto r = std::lower_bound(row_keys.begin(), row_keys.end(), m & rows) - row_keys.begin();
        auto c = std::lower_bound(col_keys.begin(), col_keys.end(), m & ~rows) - col_keys.begin();
        mat(r, c) = v.to_complex();
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(mat);
    const auto &s = svd.singularValues();
    return s(1) <= tol.threshold(s(0));
}

}  // namespace

bool packed_rank_at_most_one(const PackedPoly &f, uint32_t rows, const Tolerance &tol) {
    if (f.terms.size() < 2) {
        return true;
    }
    if (f.is_exact()) {
        try {
            return exact_rank_at_most_one(f, rows);
        } catch (const std::overflow_error &) {
            // Decide with singular values instead.
        }
    }
    return float_rank_at_most_one(f, rows, tol);
}

}  // namespace qaclab
