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

#ifndef QACLAB_NUMERICS_SCALAR_H
#define QACLAB_NUMERICS_SCALAR_H

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace qaclab {

/// Comparison policy for floating values: |x - y| <= abs_eps + rel_eps * max(|x|, |y|).
struct Tolerance {
    double abs_eps = 1e-10;
    double rel_eps = 1e-9;

    /// Throws PreconditionError unless both fields are finite and non-negative.
    void validate() const;
    /// Threshold for a quantity whose natural magnitude is `scale`.
    double threshold(double scale) const {
        return abs_eps + rel_eps * scale;
    }
};

/// An element (a + b*sqrt2 + i*(c + d*sqrt2)) / sqrt2^k of Z[i, 1/sqrt2].
///
/// Always canonical: k is minimal, so two values are equal iff their fields are.
struct ExactValue {
    int64_t a = 0;
    int64_t b = 0;
    int64_t c = 0;
    int64_t d = 0;
    int32_t k = 0;

    bool operator==(const ExactValue &) const = default;
};

/// Puts `v` in canonical form. Idempotent.
ExactValue canonicalize(ExactValue v);

/// x / y if the quotient lies in Z[i, 1/sqrt2] (and fits in 64-bit fields), else nullopt.
/// y must be nonzero.
std::optional<ExactValue> exact_quotient(const ExactValue &x, const ExactValue &y);

/// Complex scalar with two backends.
///
/// Exact values live in Z[i, 1/sqrt2], which contains every entry of H, X, Y, Z,
/// CZ and G_{-1}. Ring operations on two Exact values stay Exact. Anything that
/// touches a Float value produces a Float value.
class Scalar {
   public:
    /// Exact zero.
    Scalar() = default;

    static Scalar exact(int64_t a, int64_t b = 0, int64_t c = 0, int64_t d = 0, int32_t k = 0);
    static Scalar exact(const ExactValue &v);
    static Scalar integer(int64_t v) {
        return exact(v);
    }
    static Scalar from_float(double re, double im = 0.0);
    static Scalar from_complex(std::complex<double> z) {
        return from_float(z.real(), z.imag());
    }
    static Scalar one() {
        return integer(1);
    }
    static Scalar imag_unit() {
        return exact(0, 0, 1);
    }
    static Scalar inv_sqrt2() {
        return exact(1, 0, 0, 0, 1);
    }
    /// sqrt2^e for any integer e, exactly.
    static Scalar sqrt2_pow(int32_t e);

    bool is_exact() const {
        return exact_;
    }
    /// Throws PreconditionError on a Float value.
    const ExactValue &exact_value() const;

    std::complex<double> to_complex() const;
    double real() const {
        return to_complex().real();
    }
    double imag() const {
        return to_complex().imag();
    }
    double abs() const {
        return std::abs(to_complex());
    }
    /// |x|^2.
    double norm() const {
        return std::norm(to_complex());
    }

    /// Exact: structurally zero. Float: both parts are exactly 0.0.
    bool is_zero() const;
    /// Exact values: is_zero(). Float values: |x| <= tol.threshold(scale), where `scale`
    /// is the natural magnitude of the computation that produced x.
    bool is_negligible(const Tolerance &tol, double scale = 1.0) const;
    /// True when the value is an integer (Exact only).
    bool is_exact_integer() const;

    Scalar conj() const;
    Scalar operator-() const;
    Scalar &operator+=(const Scalar &o);
    Scalar &operator-=(const Scalar &o);
    Scalar &operator*=(const Scalar &o);
    Scalar &operator/=(const Scalar &o);

    friend Scalar operator+(Scalar x, const Scalar &y) {
        return x += y;
    }
    friend Scalar operator-(Scalar x, const Scalar &y) {
        return x -= y;
    }
    friend Scalar operator*(Scalar x, const Scalar &y) {
        return x *= y;
    }
    /// Exact when both operands are Exact and the quotient lies in Z[i, 1/sqrt2],
    /// Float otherwise.
    /// Throws PreconditionError on division by an exact zero.
    friend Scalar operator/(Scalar x, const Scalar &y) {
        return x /= y;
    }

    /// Same backend and same value.
    bool identical(const Scalar &o) const;

    std::string to_string() const;

   private:
    bool exact_ = true;
    ExactValue e_{};
    std::complex<double> f_{};
};

/// Converts to the Float backend (identity on Float values).
Scalar to_float(const Scalar &s);

/// Exact-vs-Exact compares exactly; otherwise |x-y| <= abs_eps + rel_eps*max(|x|,|y|).
bool approx_eq(const Scalar &x, const Scalar &y, const Tolerance &tol = {});

}  // namespace qaclab

#endif
