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

#ifndef QACLAB_POLY_PACKED_POLY_H
#define QACLAB_POLY_PACKED_POLY_H

#include <cstdint>
#include <utility>
#include <vector>

#include "qaclab/poly/multilinear_poly.h"

namespace qaclab {

/// A multilinear polynomial over at most 32 interned variables, with monomials
/// stored as bitmasks. Bit i stands for vars[i]. Terms are sorted by mask and
/// nonzero.
struct PackedPoly {
    std::vector<VarId> vars;
    std::vector<std::pair<uint32_t, Scalar>> terms;

    /// Interns variables_of(f) in sorted order. Throws BudgetExceededError above 32.
    static PackedPoly pack(const MultilinearPoly &f);
    MultilinearPoly unpack() const;

    size_t num_vars() const {
        return vars.size();
    }
    uint32_t full_mask() const {
        return vars.size() == 32 ? ~uint32_t{0} : ((uint32_t{1} << vars.size()) - 1);
    }
    bool is_exact() const;
    /// Bitmask of the members of I that are interned here.
    uint32_t mask_of(const VarSet &I) const;
    /// Coefficient of the monomial `mask` (zero if absent). Binary search.
    const Scalar *find(uint32_t mask) const;

    /// Sorts terms by mask, merges duplicates and drops zeros.
    void normalize();
};

/// Value at the point given per bit position.
Scalar packed_evaluate(const PackedPoly &f, const std::vector<Scalar> &point);
double packed_abs_evaluate(const PackedPoly &f, const std::vector<Scalar> &point);

/// Substitutes point[i] for every bit i set in `mask`. The result keeps the same
/// variable table.
PackedPoly packed_restrict(const PackedPoly &f, uint32_t mask, const std::vector<Scalar> &point);

/// Product of two polynomials over the same variable table whose monomials never
/// overlap. Throws PreconditionError otherwise.
PackedPoly packed_multiply(const PackedPoly &f, const PackedPoly &g);

/// Whether the coefficient matrix of f with rows indexed by monomials over the
/// variables in `rows` and columns by the rest has rank at most one.
///
/// Exact coefficients use an exact pivot test. Otherwise the singular values are
/// computed and s_i counts as zero iff s_i <= rel_eps * s_1 + abs_eps.
bool packed_rank_at_most_one(const PackedPoly &f, uint32_t rows, const Tolerance &tol = {});

}  // namespace qaclab

#endif
