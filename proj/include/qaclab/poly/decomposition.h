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

#ifndef QACLAB_POLY_DECOMPOSITION_H
#define QACLAB_POLY_DECOMPOSITION_H

#include <optional>
#include <vector>

#include "qaclab/numerics/rng.h"
#include "qaclab/poly/multilinear_poly.h"

namespace qaclab {

/// Whether `a` is a justifying assignment for f: for each v in var(f) the
/// univariate restriction of f to v is nonconstant, i.e. (df/dv)(a) != 0. For
/// Float data the derivative must exceed tol relative to its term magnitudes.
bool is_justifying(const MultilinearPoly &f, const Assignment &a, const Tolerance &tol = {});

/// Random search for a justifying assignment of f over var(f). The first half of
/// the attempts draws small positive integers, the rest Gaussian complex values.
/// Throws PreconditionError on f == 0 and NotFoundError when attempts run out.
Assignment find_justifying_assignment(const MultilinearPoly &f, SeededRng &rng, int attempts = 64,
                                      const Tolerance &tol = {});

/// Decides f(a) * f == f|_{I=a} * f|_{not I = a}.
///
/// Exact coefficients and values on at most 16 variables expand both sides. Other
/// inputs are compared at `trials` Gaussian points. Throws PreconditionError if a is
/// not justifying for f.
bool sv_partition_test(const MultilinearPoly &f, const Assignment &a, const VarSet &I, int trials,
                       SeededRng &rng, const Tolerance &tol = {});

enum class ZeroAssignmentVerdict { Indecomposable, Unknown };

struct ZeroAssignmentResult {
    ZeroAssignmentVerdict verdict = ZeroAssignmentVerdict::Unknown;
    /// A justifying assignment with f(a) = 0 when the verdict is Indecomposable.
    std::optional<Assignment> witness;
};

/// Looks for a justifying assignment a with f(a) = 0. `hints` are tried first;
/// after that each attempt samples all variables but one and solves for the last
/// (f is affine in it). Never answers "decomposable". Throws PreconditionError if f
/// is constant.
ZeroAssignmentResult is_indecomposable_by_zero_assignment(const MultilinearPoly &f, SeededRng &rng,
                                                          int attempts = 64,
                                                          const std::vector<Assignment> &hints = {},
                                                          const Tolerance &tol = {});

/// Whether f = g(I) * h(complement of I), decided by rank <= 1 of the coefficient
/// matrix with rows indexed by I-monomials and columns by the remaining monomials.
bool bipartition_rank_oracle(const MultilinearPoly &f, const VarSet &I, const Tolerance &tol = {});

struct BipartitionScan {
    /// Bipartitions tested.
    uint64_t tested = 0;
    /// The first side I at which f splits, if any.
    std::optional<VarSet> split;
};

/// bipartition_rank_oracle at every one of the 2^(|var f| - 1) - 1 nontrivial
/// bipartitions of var(f), stopping at the first split. I ranges over the subsets
/// that omit the largest variable. Packs f once. Throws BudgetExceededError above
/// kDecomposeMaxVars variables.
BipartitionScan scan_bipartitions(const MultilinearPoly &f, const Tolerance &tol = {});

/// Maximum number of variables decompose() accepts.
inline constexpr size_t kDecomposeMaxVars = 24;

/// Splits f into variable-disjoint indecomposable factors.
///
/// Every factor is scaled so the coefficient of its lexicographically first
/// monomial is 1, except the first factor, which carries the remaining scalar.
/// Factors are ordered by their smallest variable. A constant f yields {f}.
/// Throws PreconditionError on f == 0 and BudgetExceededError above
/// kDecomposeMaxVars variables.
std::vector<MultilinearPoly> decompose(const MultilinearPoly &f, const Tolerance &tol = {});

/// Variable sets of the factors of decompose(f), i.e. the variable partition.
std::vector<VarSet> variable_partition(const MultilinearPoly &f, const Tolerance &tol = {});

}  // namespace qaclab

#endif
