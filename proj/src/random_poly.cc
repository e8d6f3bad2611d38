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

#include "qaclab/poly/random_poly.h"

#include <algorithm>

#include "qaclab/errors.h"

namespace qaclab {

Scalar random_gaussian_integer(SeededRng &rng, int bound) {
    while (true) {
        int64_t re = rng.uniform_int(-bound, bound);
        int64_t im = rng.uniform_int(-bound, bound);
        if (re != 0 || im != 0) {
            return Scalar::exact(re, 0, im);
        }
    }
}

Scalar random_coefficient(SeededRng &rng, bool exact) {
    return exact ? random_gaussian_integer(rng) : random_scalar(rng);
}

MultilinearPoly random_sparse_poly(const std::vector<VarId> &vars, double density, bool exact, SeededRng &rng) {
    if (vars.size() > 16) {
        throw BudgetExceededError("random_sparse_poly is capped at 16 variables");
    }
    const uint32_t n = static_cast<uint32_t>(vars.size());
    auto monomial = [&](uint32_t mask) {
        Monomial m;
        for (uint32_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1) {
                m.push_back(vars[i]);
            }
        }
        return m;
    };
    MultilinearPoly f;
    uint32_t seen = 0;
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
        if (rng.coin(density)) {
            f.add_term(monomial(mask), random_coefficient(rng, exact));
            seen |= mask;
        }
    }
    for (uint32_t i = 0; i < n; ++i) {
        if (!((seen >> i) & 1)) {
            uint32_t mask = (uint32_t{1} << i) | static_cast<uint32_t>(rng.uniform_int(0, (int64_t{1} << n) - 1));
            f.add_term(monomial(mask), random_coefficient(rng, exact));
            seen |= mask;
        }
    }
    if (f.is_zero()) {
        f.add_term({}, random_coefficient(rng, exact));
    }
    return f;
}

MultilinearPoly random_product_poly(const std::vector<VarId> &vars, int max_parts, double density, bool exact,
                                    SeededRng &rng) {
    int parts = static_cast<int>(rng.uniform_int(1, std::max<int64_t>(1, std::min<int64_t>(max_parts, vars.size()))));
    std::vector<VarId> shuffled = vars;
    std::shuffle(shuffled.begin(), shuffled.end(), rng.engine());
    // Cut points give nonempty consecutive groups.
    std::vector<size_t> cuts;
    for (size_t i = 1; i < shuffled.size(); ++i) {
        cuts.push_back(i);
    }
    std::shuffle(cuts.begin(), cuts.end(), rng.engine());
    cuts.resize(parts - 1);
    cuts.push_back(0);
    cuts.push_back(shuffled.size());
    std::sort(cuts.begin(), cuts.end());
    MultilinearPoly f = MultilinearPoly::constant(Scalar::one());
    for (size_t g = 0; g + 1 < cuts.size(); ++g) {
        std::vector<VarId> group(shuffled.begin() + cuts[g], shuffled.begin() + cuts[g + 1]);
        MultilinearPoly factor;
        do {
            factor = random_sparse_poly(group, density, exact, rng);
        } while (variables_of(factor).size() != group.size());
        f = f * factor;
    }
    return f;
}

std::vector<VarId> generic_vars(int n) {
    std::vector<VarId> out;
    for (int i = 0; i < n; ++i) {
        out.push_back(generic_var(static_cast<uint32_t>(i)));
    }
    return out;
}

}  // namespace qaclab
