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

#ifndef QACLAB_POLY_MULTILINEAR_POLY_H
#define QACLAB_POLY_MULTILINEAR_POLY_H

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qaclab/numerics/scalar.h"

namespace qaclab {

/// Variable blocks. X, Y, Z, W carry bitstring indices of a fixed width; V is a
/// generic block indexed by a plain integer.
enum class Block : uint8_t { X = 0, Y = 1, Z = 2, W = 3, V = 4 };

char block_letter(Block b);

struct VarId {
    Block block = Block::V;
    /// Bitstring length for X/Y/Z/W; 0 for V.
    uint8_t width = 0;
    uint32_t index = 0;

    auto operator<=>(const VarId &) const = default;

    /// `x[0101]`, `z[1]`, or `v[3]`.
    std::string to_string() const;
};

/// Variable of a lettered block with bitstring index `bits` (most significant first).
VarId make_var(Block b, std::string_view bits);
/// Variable of a lettered block from an integer index of the given width.
VarId make_var(Block b, uint32_t index, uint8_t width);
/// Generic variable v[i].
VarId generic_var(uint32_t i);
/// Parses `x[0101]` / `v[3]`. Throws PreconditionError on malformed input.
VarId parse_var(std::string_view text);

/// Sorted, duplicate-free list of variables.
using Monomial = std::vector<VarId>;
using Assignment = std::map<VarId, Scalar>;
using VarSet = std::set<VarId>;

/// Product of two monomials. Throws PreconditionError if they share a variable.
Monomial monomial_product(const Monomial &a, const Monomial &b);

/// Sparse multilinear polynomial. Zero coefficients are never stored.
class MultilinearPoly {
   public:
    MultilinearPoly() = default;

    static MultilinearPoly constant(const Scalar &c);
    static MultilinearPoly variable(const VarId &v);

    /// Adds c * m, sorting m. Throws PreconditionError if m repeats a variable.
    void add_term(Monomial m, const Scalar &c);

    const std::map<Monomial, Scalar> &terms() const {
        return terms_;
    }
    size_t num_terms() const {
        return terms_.size();
    }
    bool is_zero() const {
        return terms_.empty();
    }
    /// True when every coefficient uses the Exact backend.
    bool is_exact() const;
    /// Coefficient of m (zero if absent).
    Scalar coefficient(const Monomial &m) const;

    MultilinearPoly &operator+=(const MultilinearPoly &o);
    MultilinearPoly &operator-=(const MultilinearPoly &o);
    MultilinearPoly &operator*=(const Scalar &s);
    friend MultilinearPoly operator+(MultilinearPoly a, const MultilinearPoly &b) {
        return a += b;
    }
    friend MultilinearPoly operator-(MultilinearPoly a, const MultilinearPoly &b) {
        return a -= b;
    }
    friend MultilinearPoly operator*(MultilinearPoly a, const Scalar &s) {
        return a *= s;
    }
    friend MultilinearPoly operator*(const Scalar &s, MultilinearPoly a) {
        return a *= s;
    }
    /// Product of polynomials. Throws PreconditionError if a product monomial would
    /// repeat a variable.
    friend MultilinearPoly operator*(const MultilinearPoly &a, const MultilinearPoly &b);

    /// Same monomials with identical coefficients.
    bool identical(const MultilinearPoly &o) const;

    std::string to_string() const;

   private:
    std::map<Monomial, Scalar> terms_;
};

/// Coefficient-wise approximate equality (exact for Exact-vs-Exact coefficients).
bool approx_eq(const MultilinearPoly &f, const MultilinearPoly &g, const Tolerance &tol = {});

/// Sum over monomials of coefficient times the product of assigned values.
/// Throws MissingVariableError if `a` misses a variable of f.
Scalar evaluate(const MultilinearPoly &f, const Assignment &a);

/// Sum over monomials of |coefficient| times the product of |assigned values|.
/// The natural magnitude of evaluate(f, a), used to scale tolerances.
double abs_evaluate(const MultilinearPoly &f, const Assignment &a);

/// Substitutes a(v) for every v in I. Throws MissingVariableError if `a` misses a
/// variable of I that occurs in f.
MultilinearPoly restrict(const MultilinearPoly &f, const VarSet &I, const Assignment &a);

/// Variables occurring in some monomial.
VarSet variables_of(const MultilinearPoly &f);

/// d f / d v.
MultilinearPoly partial_derivative(const MultilinearPoly &f, const VarId &v);

}  // namespace qaclab

#endif
