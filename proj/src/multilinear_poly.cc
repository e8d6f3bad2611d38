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

#include "qaclab/poly/multilinear_poly.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "qaclab/errors.h"

namespace qaclab {

char block_letter(Block b) {
    switch (b) {
        case Block::X:
            return 'x';
        case Block::Y:
            return 'y';
        case Block::Z:
            return 'z';
        case Block::W:
            return 'w';
        case Block::V:
            return 'v';
    }
    return '?';
}

std::string VarId::to_string() const {
    std::string out;
    out.push_back(block_letter(block));
    out.push_back('[');
    if (block == Block::V) {
        out += std::to_string(index);
    } else {
        for (int i = width - 1; i >= 0; --i) {
            out.push_back(((index >> i) & 1) ? '1' : '0');
        }
    }
    out.push_back(']');
    return out;
}

VarId make_var(Block b, std::string_view bits) {
    if (b == Block::V) {
        throw PreconditionError("generic variables take an integer index");
    }
    if (bits.size() > 24) {
        throw PreconditionError("variable index wider than 24 bits");
    }
    uint32_t index = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw PreconditionError("variable index must be a bitstring: " + std::string(bits));
        }
        index = (index << 1) | static_cast<uint32_t>(ch == '1');
    }
    return VarId{b, static_cast<uint8_t>(bits.size()), index};
}

VarId make_var(Block b, uint32_t index, uint8_t width) {
    if (b == Block::V || width > 24 || (width < 32 && (index >> width) != 0)) {
        throw PreconditionError("bad lettered variable index");
    }
    return VarId{b, width, index};
}

VarId generic_var(uint32_t i) {
    return VarId{Block::V, 0, i};
}

VarId parse_var(std::string_view text) {
    if (text.size() < 3 || text[1] != '[' || text.back() != ']') {
        throw PreconditionError("malformed variable: " + std::string(text));
    }
    std::string_view inner = text.substr(2, text.size() - 3);
    switch (text[0]) {
        case 'x':
            return make_var(Block::X, inner);
        case 'y':
            return make_var(Block::Y, inner);
        case 'z':
            return make_var(Block::Z, inner);
        case 'w':
            return make_var(Block::W, inner);
        case 'v': {
            uint32_t index = 0;
            auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), index);
            if (ec != std::errc() || ptr != inner.data() + inner.size() || inner.empty()) {
                throw PreconditionError("malformed variable: " + std::string(text));
            }
            return generic_var(index);
        }
        default:
            throw PreconditionError("unknown variable block: " + std::string(text));
    }
}

Monomial monomial_product(const Monomial &a, const Monomial &b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
        throw PreconditionError("product is not multilinear");
    }
    return out;
}

MultilinearPoly MultilinearPoly::constant(const Scalar &c) {
    MultilinearPoly p;
    p.add_term({}, c);
    return p;
}

MultilinearPoly MultilinearPoly::variable(const VarId &v) {
    MultilinearPoly p;
    p.add_term({v}, Scalar::one());
    return p;
}

void MultilinearPoly::add_term(Monomial m, const Scalar &c) {
    std::sort(m.begin(), m.end());
    if (std::adjacent_find(m.begin(), m.end()) != m.end()) {
        throw PreconditionError("monomial repeats a variable");
    }
    if (c.is_zero()) {
        return;
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

bool MultilinearPoly::is_exact() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto &t) { return t.second.is_exact(); });
}

Scalar MultilinearPoly::coefficient(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

MultilinearPoly &MultilinearPoly::operator+=(const MultilinearPoly &o) {
    for (const auto &[m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

MultilinearPoly &MultilinearPoly::operator-=(const MultilinearPoly &o) {
    for (const auto &[m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

MultilinearPoly &MultilinearPoly::operator*=(const Scalar &s) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= s;
        if (it->second.is_zero()) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
    return *this;
}

MultilinearPoly operator*(const MultilinearPoly &a, const MultilinearPoly &b) {
    MultilinearPoly out;
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            out.add_term(monomial_product(ma, mb), ca * cb);
        }
    }
    return out;
}

bool MultilinearPoly::identical(const MultilinearPoly &o) const {
    if (terms_.size() != o.terms_.size()) {
        return false;
    }
    auto it = o.terms_.begin();
    for (const auto &[m, c] : terms_) {
        if (m != it->first || !c.identical(it->second)) {
            return false;
        }
        ++it;
    }
    return true;
}

std::string MultilinearPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        out << c.to_string();
        for (const auto &v : m) {
            out << "*" << v.to_string();
        }
    }
    return out.str();
}

bool approx_eq(const MultilinearPoly &f, const MultilinearPoly &g, const Tolerance &tol) {
    auto fi = f.terms().begin();
    auto gi = g.terms().begin();
    Scalar zero;
    while (fi != f.terms().end() || gi != g.terms().end()) {
        if (gi == g.terms().end() || (fi != f.terms().end() && fi->first < gi->first)) {
            if (!approx_eq(fi->second, zero, tol)) {
                return false;
            }
            ++fi;
        } else if (fi == f.terms().end() || gi->first < fi->first) {
            if (!approx_eq(gi->second, zero, tol)) {
                return false;
            }
            ++gi;
        } else {
            if (!approx_eq(fi->second, gi->second, tol)) {
                return false;
            }
            ++fi;
            ++gi;
        }
    }
    return true;
}

namespace {

const Scalar &lookup(const Assignment &a, const VarId &v) {
    auto it = a.find(v);
    if (it == a.end()) {
        throw MissingVariableError("assignment has no value for " + v.to_string());
    }
    return it->second;
}

}  // namespace

Scalar evaluate(const MultilinearPoly &f, const Assignment &a) {
    Scalar total;
    for (const auto &[m, c] : f.terms()) {
        Scalar term = c;
        for (const auto &v : m) {
            term *= lookup(a, v);
        }
        total += term;
    }
    return total;
}

double abs_evaluate(const MultilinearPoly &f, const Assignment &a) {
    double total = 0;
    for (const auto &[m, c] : f.terms()) {
        double term = c.abs();
        for (const auto &v : m) {
            term *= lookup(a, v).abs();
        }
        total += term;
    }
    return total;
}

MultilinearPoly restrict(const MultilinearPoly &f, const VarSet &I, const Assignment &a) {
    MultilinearPoly out;
    for (const auto &[m, c] : f.terms()) {
        Scalar coeff = c;
        Monomial rest;
        for (const auto &v : m) {
            if (I.count(v)) {
                coeff *= lookup(a, v);
            } else {
                rest.push_back(v);
            }
        }
        out.add_term(std::move(rest), coeff);
    }
    return out;
}

VarSet variables_of(const MultilinearPoly &f) {
    VarSet out;
    for (const auto &[m, c] : f.terms()) {
        out.insert(m.begin(), m.end());
    }
    return out;
}

MultilinearPoly partial_derivative(const MultilinearPoly &f, const VarId &v) {
    MultilinearPoly out;
    for (const auto &[m, c] : f.terms()) {
        auto it = std::find(m.begin(), m.end(), v);
        if (it == m.end()) {
            continue;
        }
        Monomial rest = m;
        rest.erase(rest.begin() + (it - m.begin()));
        out.add_term(std::move(rest), c);
    }
    return out;
}

}  // namespace qaclab
