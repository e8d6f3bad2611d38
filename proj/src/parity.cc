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


#include "qaclab/parity/parity.h"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qaclab/errors.h"
#include "qaclab/numerics/scalar_io.h"

namespace qaclab {

namespace {

int parity_of(uint64_t x) {
    return std::popcount(x) & 1;
}

void check_bit(int b) {
    if (b != 0 && b != 1) {
        throw PreconditionError("parity must be 0 or 1, got " + std::to_string(b));
    }
}

}  // namespace

void ParitySubspace::validate() const {
    if (r < 1 || r > kMaxQubits) {
        throw PreconditionError("parity subspaces need 1 <= r <= " + std::to_string(kMaxQubits));
    }
    check_bit(b);
}

std::vector<uint64_t> ParitySubspace::indices() const {
    validate();
    std::vector<uint64_t> out;
    out.reserve(dimension());
    for (uint64_t x = 0; x < (uint64_t{1} << r); ++x) {
        if (parity_of(x) == b) {
            out.push_back(x);
        }
    }
    return out;
}

std::vector<std::string> parity_basis(int r, int b) {
    std::vector<std::string> out;
    for (uint64_t x : ParitySubspace{r, b}.indices()) {
        std::string s(r, '0');
        for (int q = 0; q < r; ++q) {
            if ((x >> (r - 1 - q)) & 1) {
                s[q] = '1';
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

double parity_residual(const StateVector &psi, int b) {
    check_bit(b);
    double s = 0;
    for (uint64_t i = 0; i < psi.dim(); ++i) {
        if (parity_of(i) != b) {
            s += psi.amp(i).norm();
        }
    }
    return std::sqrt(s);
}

bool has_pure_parity(const StateVector &psi, int b, const Tolerance &tol) {
    check_bit(b);
    if (psi.is_exact()) {
        for (uint64_t i = 0; i < psi.dim(); ++i) {
            if (parity_of(i) != b && !psi.amp(i).is_zero()) {
                return false;
            }
        }
        return true;
    }
    return parity_residual(psi, b) <= tol.threshold(psi.norm());
}

namespace {

StateVector solve_kill(int r, const std::vector<DenseOperator> &units, int b, const Tolerance &tol) {
    const ParitySubspace space{r, b};
    space.validate();
    const uint64_t cols = space.dimension();
    if (units.size() >= cols) {
        throw PreconditionError("kill_parity_state needs fewer than 2^(r-1) = " + std::to_string(cols) +
                                " operators, got " + std::to_string(units.size()));
    }
    const std::vector<uint64_t> basis = space.indices();
    const uint64_t ones = (uint64_t{1} << r) - 1;

    // Rows <1^r| U_i on the parity-b basis.
    std::vector<std::vector<Scalar>> a;
    double scale = 0;
    for (const auto &U : units) {
        if (U.num_qubits() != r) {
            throw ShapeError("operator on " + std::to_string(U.num_qubits()) + " qubits, expected " +
                             std::to_string(r));
        }
        std::vector<Scalar> row;
        for (uint64_t x : basis) {
            row.push_back(U.at(ones, x));
            scale = std::max(scale, row.back().abs());
        }
        a.push_back(std::move(row));
    }
    auto negligible = [&](const Scalar &s) {
        return s.is_exact() ? s.is_zero() : s.abs() <= tol.threshold(scale);
    };

    // Reduced row echelon form.
    std::vector<int64_t> pivot_row_of(cols, -1);
    size_t next = 0;
    for (uint64_t c = 0; c < cols && next < a.size(); ++c) {
        size_t best = next;
        for (size_t i = next + 1; i < a.size(); ++i) {
            if (a[i][c].abs() > a[best][c].abs()) {
                best = i;
            }
        }
        if (negligible(a[best][c])) {
            continue;
        }
        std::swap(a[best], a[next]);
        const Scalar p = a[next][c];
        for (auto &x : a[next]) {
            x /= p;
        }
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == next || a[i][c].is_zero()) {
                continue;
            }
            const Scalar f = a[i][c];
            for (uint64_t j = c; j < cols; ++j) {
                a[i][j] -= f * a[next][j];
            }
        }
        pivot_row_of[c] = static_cast<int64_t>(next++);
    }

    uint64_t free_col = cols - 1;
    while (pivot_row_of[free_col] >= 0) {
        --free_col;  // rank < cols, so a free column exists
    }
    std::vector<Scalar> amps(uint64_t{1} << r);
    amps[basis[free_col]] = Scalar::one();
    for (uint64_t c = 0; c < cols; ++c) {
        if (pivot_row_of[c] >= 0) {
            amps[basis[c]] = -a[pivot_row_of[c]][free_col];
        }
    }
    StateVector psi = normalized(StateVector(r, std::move(amps)));

    for (size_t i = 0; i < units.size(); ++i) {
        Scalar s;
        for (uint64_t x : basis) {
            s += units[i].at(ones, x) * psi.amp(x);
        }
        if (s.is_exact() ? !s.is_zero() : s.abs() > tol.threshold(1)) {
            throw NumericalDegeneracyError("constraint " + std::to_string(i + 1) + " has residual " +
                                           format_real(s.abs()));
        }
    }
    if (!has_pure_parity(psi, b, tol)) {
        throw NumericalDegeneracyError("result leaves the parity subspace");
    }
    return psi;
}

}  // namespace

StateVector kill_parity_state(int r, const std::vector<DenseOperator> &units, int b, const Tolerance &tol) {
    try {
        return solve_kill(r, units, b, tol);
    } catch (const std::overflow_error &) {
        std::vector<DenseOperator> as_float;
        for (const auto &U : units) {
            std::vector<Scalar> m;
            for (const auto &x : U.entries()) {
                m.push_back(to_float(x));
            }
            as_float.emplace_back(U.num_qubits(), std::move(m));
        }
        return solve_kill(r, as_float, b, tol);
    }
}

}  // namespace qaclab
