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


#include "qaclab/bridge/state_poly.h"

#include "qaclab/errors.h"
#include "qaclab/poly/decomposition.h"

namespace qaclab {

namespace {

uint32_t group_index(const StateVector &psi, uint64_t index, const QubitSet &qubits) {
    uint32_t out = 0;
    for (int q : qubits) {
        out = (out << 1) | static_cast<uint32_t>(psi.bit(index, q));
    }
    return out;
}

int register_size(const BlockPartition &bp) {
    size_t r = 0;
    for (const auto &g : bp) {
        r += g.qubits.size();
    }
    return static_cast<int>(r);
}

}  // namespace

BlockPartition make_block_partition(const std::vector<QubitSet> &groups) {
    static constexpr Block kLetters[] = {Block::X, Block::Y, Block::Z, Block::W};
    if (groups.size() > 4) {
        throw PreconditionError("at most four blocks, got " + std::to_string(groups.size()));
    }
    BlockPartition bp;
    for (size_t i = 0; i < groups.size(); ++i) {
        bp.push_back({kLetters[i], groups[i]});
    }
    return bp;
}

void validate_block_partition(const BlockPartition &bp, int r) {
    if (bp.empty() || bp.size() > 4) {
        throw PreconditionError("a block partition has 1 to 4 groups, got " + std::to_string(bp.size()));
    }
    std::set<Block> letters;
    QubitSet seen;
    for (const auto &g : bp) {
        if (g.letter == Block::V || !letters.insert(g.letter).second) {
            throw PreconditionError("block letters must be distinct and one of x, y, z, w");
        }
        if (g.qubits.empty()) {
            throw PreconditionError("empty block group");
        }
        for (int q : g.qubits) {
            if (q < 0 || q >= r || !seen.insert(q).second) {
                throw PreconditionError("block groups must be disjoint labels in a register of " +
                                        std::to_string(r));
            }
        }
    }
    if (static_cast<int>(seen.size()) != r) {
        throw PreconditionError("block groups do not cover a register of " + std::to_string(r));
    }
}

MultilinearPoly poly_of_state(const StateVector &psi, const BlockPartition &bp) {
    validate_block_partition(bp, psi.num_qubits());
    MultilinearPoly f;
    for (uint64_t i = 0; i < psi.dim(); ++i) {
        if (psi.amp(i).is_zero()) {
            continue;
        }
        Monomial m;
        for (const auto &g : bp) {
            m.push_back(make_var(g.letter, group_index(psi, i, g.qubits), static_cast<uint8_t>(g.qubits.size())));
        }
        f.add_term(std::move(m), psi.amp(i));
    }
    return f;
}

StateVector state_of_poly(const MultilinearPoly &f, const BlockPartition &bp) {
    const int r = register_size(bp);
    validate_block_partition(bp, r);
    std::vector<Scalar> amps(uint64_t{1} << r);
    for (const auto &[m, c] : f.terms()) {
        if (m.size() != bp.size()) {
            throw ShapeError("monomial of degree " + std::to_string(m.size()) + " in a " +
                             std::to_string(bp.size()) + "-block image");
        }
        uint64_t index = 0;
        for (const auto &g : bp) {
            const VarId *hit = nullptr;
            for (const auto &v : m) {
                if (v.block == g.letter) {
                    hit = &v;
                }
            }
            if (!hit || hit->width != g.qubits.size()) {
                throw ShapeError(std::string("monomial lacks a width-") + std::to_string(g.qubits.size()) +
                                 " variable of block " + block_letter(g.letter));
            }
            int j = static_cast<int>(g.qubits.size()) - 1;
            for (int q : g.qubits) {
                if ((hit->index >> j) & 1) {
                    index |= uint64_t{1} << (r - 1 - q);
                }
                --j;
            }
        }
        amps[index] = c;
    }
    return StateVector(r, std::move(amps));
}

SeparabilityReport separability_decomposability_check(const StateVector &psi, const BlockPartition &bp,
                                                      const std::set<size_t> &left, const Tolerance &tol) {
    if (left.empty() || left.size() >= bp.size() || *left.rbegin() >= bp.size()) {
        throw PreconditionError("the left block group must be a nonempty proper subset");
    }
    MultilinearPoly f = poly_of_state(psi, bp);
    SeparabilityReport rep;
    VarSet I;
    for (size_t j = 0; j < bp.size(); ++j) {
        (left.count(j) ? rep.split.A : rep.split.B).insert(bp[j].qubits.begin(), bp[j].qubits.end());
    }
    for (const auto &v : variables_of(f)) {
        for (size_t j : left) {
            if (v.block == bp[j].letter) {
                I.insert(v);
            }
        }
    }
    rep.separable = separates_at(psi, rep.split, tol).separable;
    rep.rank_one = bipartition_rank_oracle(f, I, tol);
    return rep;
}

}  // namespace qaclab
