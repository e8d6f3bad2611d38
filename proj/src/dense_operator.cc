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


#include "qaclab/parity/dense_operator.h"

#include "qaclab/circuit/random_circuit.h"
#include "qaclab/errors.h"
#include "qaclab/numerics/scalar_io.h"
#include "text_lines.h"

namespace qaclab {

DenseOperator::DenseOperator(int r, std::vector<Scalar> entries) : r_(r), m_(std::move(entries)) {
    if (r < 0) {
        throw ShapeError("negative operator size");
    }
    if (r > kMaxOperatorQubits) {
        throw BudgetExceededError("operators are limited to " + std::to_string(kMaxOperatorQubits) + " qubits");
    }
    if (m_.size() != dim() * dim()) {
        throw ShapeError("a " + std::to_string(r) + "-qubit operator needs " + std::to_string(dim() * dim()) +
                         " entries, got " + std::to_string(m_.size()));
    }
}

DenseOperator DenseOperator::identity(int r) {
    const uint64_t n = uint64_t{1} << r;
    std::vector<Scalar> m(n * n);
    for (uint64_t i = 0; i < n; ++i) {
        m[i * n + i] = Scalar::one();
    }
    return DenseOperator(r, std::move(m));
}

DenseOperator DenseOperator::kron(const std::vector<OneQubitGate> &gates) {
    DenseOperator out;
    for (const auto &g : gates) {
        const uint64_t n = out.dim(), k = 2 * n;
        std::vector<Scalar> m(k * k);
        for (uint64_t i = 0; i < n; ++i) {
            for (uint64_t j = 0; j < n; ++j) {
                if (out.at(i, j).is_zero()) {
                    continue;
                }
                for (int p = 0; p < 2; ++p) {
                    for (int q = 0; q < 2; ++q) {
                        m[(2 * i + p) * k + 2 * j + q] = out.at(i, j) * g.matrix()[2 * p + q];
                    }
                }
            }
        }
        out = DenseOperator(out.r_ + 1, std::move(m));
    }
    return out;
}

DenseOperator operator*(const DenseOperator &a, const DenseOperator &b) {
    if (a.r_ != b.r_) {
        throw ShapeError("operator sizes differ");
    }
    const uint64_t n = a.dim();
    std::vector<Scalar> m(n * n);
    for (uint64_t i = 0; i < n; ++i) {
        for (uint64_t k = 0; k < n; ++k) {
            const Scalar &x = a.at(i, k);
            if (x.is_zero()) {
                continue;
            }
            for (uint64_t j = 0; j < n; ++j) {
                m[i * n + j] += x * b.at(k, j);
            }
        }
    }
    return DenseOperator(a.r_, std::move(m));
}

bool DenseOperator::is_unitary(const Tolerance &tol) const {
    const uint64_t n = dim();
    for (uint64_t i = 0; i < n; ++i) {
        for (uint64_t j = 0; j < n; ++j) {
            Scalar s;
            for (uint64_t k = 0; k < n; ++k) {
                s += at(k, i).conj() * at(k, j);
            }
            if (!approx_eq(s, i == j ? Scalar::one() : Scalar(), tol)) {
                return false;
            }
        }
    }
    return true;
}

bool DenseOperator::identical(const DenseOperator &o) const {
    if (r_ != o.r_) {
        return false;
    }
    for (size_t i = 0; i < m_.size(); ++i) {
        if (!m_[i].identical(o.m_[i])) {
            return false;
        }
    }
    return true;
}

DenseOperator random_unitary(int r, SeededRng &rng) {
    DenseOperator u = DenseOperator::identity(r);
    const uint64_t n = u.dim();
    for (int round = 0; round < 3; ++round) {
        std::vector<OneQubitGate> gates;
        for (int q = 0; q < r; ++q) {
            gates.push_back(random_one_qubit_gate(rng));
        }
        std::vector<Scalar> diag(n * n);
        for (uint64_t i = 0; i < n; ++i) {
            diag[i * n + i] = random_eta(rng);
        }
        u = DenseOperator(r, std::move(diag)) * DenseOperator::kron(gates) * u;
    }
    return u;
}

StateVector apply(const DenseOperator &U, const StateVector &psi) {
    if (U.num_qubits() != psi.num_qubits()) {
        throw ShapeError("operator on " + std::to_string(U.num_qubits()) + " qubits applied to a " +
                         std::to_string(psi.num_qubits()) + "-qubit state");
    }
    std::vector<Scalar> out(psi.dim());
    for (uint64_t i = 0; i < psi.dim(); ++i) {
        for (uint64_t j = 0; j < psi.dim(); ++j) {
            if (!psi.amp(j).is_zero()) {
                out[i] += U.at(i, j) * psi.amp(j);
            }
        }
    }
    return StateVector(psi.num_qubits(), std::move(out));
}

std::vector<DenseOperator> parse_operators(std::string_view text) {
    const auto lines = detail::content_lines(text);
    std::vector<DenseOperator> ops;
    int r = -1;
    for (size_t li = 0; li < lines.size(); ++li) {
        const auto &l = lines[li];
        auto fail = [&](size_t line, const std::string &why) {
            throw PreconditionError("line " + std::to_string(line) + ": " + why);
        };
        const std::string_view head = l.tokens[0].text;
        if (head == "qubits") {
            if (r >= 0) {
                fail(l.number, "duplicate `qubits`");
            }
            if (l.tokens.size() != 2 || !is_integer_token(l.tokens[1].text)) {
                fail(l.number, "expected `qubits r`");
            }
            r = std::stoi(std::string(l.tokens[1].text));
            if (r < 1 || r > kMaxOperatorQubits) {
                fail(l.number, "qubit count must be in 1.." + std::to_string(kMaxOperatorQubits));
            }
            continue;
        }
        if (r < 0) {
            fail(l.number, "`qubits r` must come first");
        }
        if (head == "kron") {
            if (l.tokens.size() != static_cast<size_t>(r) + 1) {
                fail(l.number, "`kron` needs " + std::to_string(r) + " gate names");
            }
            std::vector<OneQubitGate> gates;
            for (size_t t = 1; t < l.tokens.size(); ++t) {
                auto g = OneQubitGate::named(l.tokens[t].text);
                if (!g) {
                    fail(l.number, "unknown gate `" + std::string(l.tokens[t].text) + "`");
                }
                gates.push_back(*g);
            }
            ops.push_back(DenseOperator::kron(gates));
        } else if (head == "matrix") {
            const uint64_t n = uint64_t{1} << r;
            std::vector<Scalar> m;
            for (uint64_t row = 0; row < n; ++row) {
                if (++li >= lines.size()) {
                    fail(l.number, "matrix ends after " + std::to_string(row) + " rows");
                }
                const auto &rl = lines[li];
                if (rl.tokens.size() != 2 * n) {
                    fail(rl.number, "expected " + std::to_string(n) + " `re im` pairs");
                }
                for (uint64_t c = 0; c < n; ++c) {
                    auto s = parse_scalar(rl.tokens[2 * c].text, rl.tokens[2 * c + 1].text);
                    if (!s) {
                        fail(rl.number, "bad number");
                    }
                    m.push_back(*s);
                }
            }
            DenseOperator U(r, std::move(m));
            if (!U.is_unitary()) {
                fail(l.number, "matrix is not unitary");
            }
            ops.push_back(std::move(U));
        } else {
            fail(l.number, "unknown directive `" + std::string(head) + "`");
        }
    }
    if (r < 0) {
        throw PreconditionError("missing `qubits r`");
    }
    return ops;
}

std::string format_operators(const std::vector<DenseOperator> &ops) {
    if (ops.empty()) {
        throw PreconditionError("no operators to write");
    }
    std::string out = "qubits " + std::to_string(ops[0].num_qubits()) + "\n";
    for (const auto &U : ops) {
        if (U.num_qubits() != ops[0].num_qubits()) {
            throw PreconditionError("operators of different sizes");
        }
        out += "matrix\n";
        for (uint64_t i = 0; i < U.dim(); ++i) {
            for (uint64_t j = 0; j < U.dim(); ++j) {
                out += (j ? "  " : "") + format_scalar(U.at(i, j));
            }
            out += "\n";
        }
    }
    return out;
}

}  // namespace qaclab
