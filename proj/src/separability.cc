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


#include "qaclab/state/separability.h"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "qaclab/errors.h"

namespace qaclab {

namespace {

// Index into the factor on `labels` of the basis state `index`.
uint64_t gather(const StateVector &psi, uint64_t index, const QubitSet &labels) {
    uint64_t out = 0;
    for (int q : labels) {
        out = (out << 1) | static_cast<uint64_t>(psi.bit(index, q));
    }
    return out;
}

struct Reshaped {
    uint64_t rows;
    uint64_t cols;
    std::vector<Scalar> m;  // row-major

    const Scalar &at(uint64_t r, uint64_t c) const {
        return m[r * cols + c];
    }
};

Reshaped reshape(const StateVector &psi, const Bipartition &p) {
    Reshaped out{uint64_t{1} << p.A.size(), uint64_t{1} << p.B.size(), {}};
    out.m.resize(out.rows * out.cols);
    for (uint64_t i = 0; i < psi.dim(); ++i) {
        out.m[gather(psi, i, p.A) * out.cols + gather(psi, i, p.B)] = psi.amp(i);
    }
    return out;
}

StateVector make_state(size_t r, std::vector<Scalar> amps) {
    return StateVector(static_cast<int>(r), std::move(amps));
}

// Rank <= 1 over the fraction field via the first nonzero entry as pivot.
// Throws std::overflow_error if exact arithmetic overflows.
Separation exact_separation(const Reshaped &M, const Bipartition &p) {
    uint64_t r0 = 0, c0 = 0;
    bool found = false;
    for (uint64_t k = 0; k < M.m.size() && !found; ++k) {
        if (!M.m[k].is_zero()) {
            r0 = k / M.cols;
            c0 = k % M.cols;
            found = true;
        }
    }
    if (!found) {
        throw PreconditionError("separates_at on the zero vector");
    }
    const Scalar &pivot = M.at(r0, c0);
    for (uint64_t r = 0; r < M.rows; ++r) {
        for (uint64_t c = 0; c < M.cols; ++c) {
            if (!(M.at(r, c) * pivot).identical(M.at(r, c0) * M.at(r0, c))) {
                return {};
            }
        }
    }
    std::vector<Scalar> col(M.rows), row(M.cols);
    for (uint64_t r = 0; r < M.rows; ++r) {
        col[r] = M.at(r, c0);
    }
    for (uint64_t c = 0; c < M.cols; ++c) {
        row[c] = M.at(r0, c);
    }
    Scalar n = exact_norm(col).value_or(Scalar::from_float(std::sqrt([&] {
        double s = 0;
        for (const auto &x : col) {
            s += x.norm();
        }
        return s;
    }())));
    for (auto &x : col) {
        x /= n;
    }
    const Scalar k = n / pivot;
    for (auto &x : row) {
        x *= k;
    }
    return {true, make_state(p.A.size(), std::move(col)), make_state(p.B.size(), std::move(row))};
}

Eigen::MatrixXcd to_eigen(const Reshaped &M) {
    Eigen::MatrixXcd out(M.rows, M.cols);
    for (uint64_t r = 0; r < M.rows; ++r) {
        for (uint64_t c = 0; c < M.cols; ++c) {
            out(r, c) = M.at(r, c).to_complex();
        }
    }
    return out;
}

Separation float_separation(const Reshaped &M, const Bipartition &p, const Tolerance &tol, bool want_factors) {
    Eigen::MatrixXcd mat = to_eigen(M);
    if (!want_factors) {
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(mat);
        const auto &s = svd.singularValues();
        return {s.size() < 2 || s(1) <= tol.threshold(s(0)), std::nullopt, std::nullopt};
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(mat, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto &s = svd.singularValues();
    if (s.size() >= 2 && s(1) > tol.threshold(s(0))) {
        return {};
    }
    // mat ~ s0 * u0 * v0^H, so psi ~ u0 (x) s0 * conj(v0).
    std::vector<Scalar> left(M.rows), right(M.cols);
    for (uint64_t r = 0; r < M.rows; ++r) {
        left[r] = Scalar::from_complex(svd.matrixU()(r, 0));
    }
    for (uint64_t c = 0; c < M.cols; ++c) {
        right[c] = Scalar::from_complex(s(0) * std::conj(svd.matrixV()(c, 0)));
    }
    return {true, make_state(p.A.size(), std::move(left)), make_state(p.B.size(), std::move(right))};
}

Separation separation(const StateVector &psi, const Bipartition &p, const Tolerance &tol, bool want_factors) {
    p.validate(psi.num_qubits());
    Reshaped M = reshape(psi, p);
    if (psi.is_exact()) {
        try {
            Separation s = exact_separation(M, p);
            if (!want_factors) {
                s.left.reset();
                s.right.reset();
            }
            return s;
        } catch (const std::overflow_error &) {
            // Fall through to the floating test.
        }
    }
    return float_separation(M, p, tol, want_factors);
}

}  // namespace

void Bipartition::validate(int r) const {
    if (A.empty() || B.empty()) {
        throw PreconditionError("bipartition " + to_string() + " has an empty side");
    }
    for (int q : A) {
        if (B.count(q)) {
            throw PreconditionError("bipartition " + to_string() + " is not disjoint");
        }
    }
    if (static_cast<int>(A.size() + B.size()) != r || *A.begin() < 0 || *B.begin() < 0 ||
        *A.rbegin() >= r || *B.rbegin() >= r) {
        throw PreconditionError("bipartition " + to_string() + " does not cover a register of " +
                                std::to_string(r));
    }
}

std::string Bipartition::to_string() const {
    return "{" + qubits_to_string(A) + "," + qubits_to_string(B) + "}";
}

std::vector<Bipartition> enumerate_bipartitions(int r) {
    std::vector<Bipartition> out;
    for (int size = 1; 2 * size <= r; ++size) {
        // Lexicographic combinations of `size` labels.
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) {
            idx[i] = i;
        }
        while (true) {
            QubitSet A(idx.begin(), idx.end());
            if (2 * size < r || A.count(0)) {
                out.push_back({A, complement(A, r)});
            }
            int i = size - 1;
            while (i >= 0 && idx[i] == r - size + i) {
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
    return out;
}

Separation separates_at(const StateVector &psi, const Bipartition &p, const Tolerance &tol) {
    return separation(psi, p, tol, true);
}

SSeparability is_S_separable(const StateVector &psi, const QubitSet &S, const Tolerance &tol) {
    if (S.size() < 2) {
        throw PreconditionError("S-separability needs |S| >= 2, got " + qubits_to_string(S));
    }
    psi.mask_of(S);
    for (const auto &p : enumerate_bipartitions(psi.num_qubits())) {
        bool meets_a = false, meets_b = false;
        for (int q : S) {
            (p.A.count(q) ? meets_a : meets_b) = true;
        }
        if (meets_a && meets_b && separation(psi, p, tol, false).separable) {
            return {true, p};
        }
    }
    return {};
}

double ones_projection_norm(const StateVector &psi, const QubitSet &S) {
    const uint64_t m = psi.mask_of(S);
    double s = 0;
    for (uint64_t i = 0; i < psi.dim(); ++i) {
        if ((i & m) == m) {
            s += psi.amp(i).norm();
        }
    }
    return std::sqrt(s);
}

bool ones_projection_vanishes(const StateVector &psi, const QubitSet &S, const Tolerance &tol) {
    if (psi.is_exact()) {
        const uint64_t m = psi.mask_of(S);
        for (uint64_t i = 0; i < psi.dim(); ++i) {
            if ((i & m) == m && !psi.amp(i).is_zero()) {
                return false;
            }
        }
        return true;
    }
    return ones_projection_norm(psi, S) <= tol.threshold(psi.norm());
}

StateVector random_product_state(const Bipartition &p, SeededRng &rng) {
    p.validate(static_cast<int>(p.A.size() + p.B.size()));
    StateVector a = random_state(static_cast<int>(p.A.size()), rng);
    StateVector b = random_state(static_cast<int>(p.B.size()), rng);
    return tensor(a, b, p.A);
}

}  // namespace qaclab
