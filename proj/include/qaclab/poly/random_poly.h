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

#ifndef QACLAB_POLY_RANDOM_POLY_H
#define QACLAB_POLY_RANDOM_POLY_H

#include <vector>

#include "qaclab/numerics/rng.h"
#include "qaclab/poly/multilinear_poly.h"

namespace qaclab {

/// Nonzero Gaussian integer with parts in [-bound, bound], Exact backend.
Scalar random_gaussian_integer(SeededRng &rng, int bound = 3);

/// Random coefficient: random_gaussian_integer when `exact`, random_scalar otherwise.
Scalar random_coefficient(SeededRng &rng, bool exact);

/// Keeps each monomial over `vars` with probability `density`, then adds terms until
/// every variable occurs. Needs at most 16 variables.
MultilinearPoly random_sparse_poly(const std::vector<VarId> &vars, double density, bool exact, SeededRng &rng);

/// Splits `vars` into 1..max_parts random nonempty groups and multiplies one
/// random_sparse_poly per group.
MultilinearPoly random_product_poly(const std::vector<VarId> &vars, int max_parts, double density, bool exact,
                                    SeededRng &rng);

/// v[0], ..., v[n-1].
std::vector<VarId> generic_vars(int n);

}  // namespace qaclab

#endif
