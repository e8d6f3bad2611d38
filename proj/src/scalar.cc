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

#include "qaclab/numerics/scalar.h"

#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>

#include "qaclab/errors.h"

namespace qaclab {

namespace {

int64_t checked_add(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_add_overflow(x, y, &r)) {
        throw std::overflow_error("exact scalar overflow in addition");
    }
    return r;
}

int64_t checked_mul(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) {
        throw std::overflow_error("exact scalar overflow in multiplication");
    }
    return r;
}

int64_t checked_neg(int64_t x) {
    return checked_mul(x, -1);
}

// Multiplies the numerator by sqrt2: (a + b*sqrt2) * sqrt2 = 2b + a*sqrt2.
ExactValue raise_k(ExactValue v) {
    return ExactValue{checked_mul(2, v.b), v.a, checked_mul(2, v.d), v.c, v.k + 1};
}

// (x1 + y1*sqrt2)(x2 + y2*sqrt2)
std::pair<int64_t, int64_t> mul_root2(int64_t x1, int64_t y1, int64_t x2, int64_t y2) {
    return {checked_add(checked_mul(x1, x2), checked_mul(2, checked_mul(y1, y2))),
            checked_add(checked_mul(x1, y2), checked_mul(y1, x2))};
}

}  // namespace

// x / y when the quotient lies in the ring. With y = (p + i q) / sqrt2^k,
// y * conj(y) = (a + b sqrt2) / sqrt2^k and multiplying by (a - b sqrt2) leaves the
// integer n = a^2 - 2 b^2 over sqrt2^k. So x / y = x conj(y) (a - b sqrt2) sqrt2^k / n,
// which is in the ring iff every numerator field is divisible by the odd part of n.
std::optional<ExactValue> exact_quotient(const ExactValue &x, const ExactValue &y) {
    try {
        Scalar sx = Scalar::exact(x);
        Scalar sy = Scalar::exact(y);
        Scalar norm = sy * sy.conj();
        const ExactValue &nv = norm.exact_value();
        Scalar galois = Scalar::exact(nv.a, checked_neg(nv.b));
        Scalar n_scaled = norm * galois;  // n / sqrt2^k', an integer over a power of sqrt2
        const ExactValue &n = n_scaled.exact_value();
        int64_t odd = n.a;
        int32_t twos = 0;
        while (odd % 2 == 0) {
            odd /= 2;
            ++twos;
        }
        Scalar num = sx * sy.conj() * galois * Scalar::sqrt2_pow(n.k - 2 * twos);
        ExactValue v = num.exact_value();
        if (v.a % odd != 0 || v.b % odd != 0 || v.c % odd != 0 || v.d % odd != 0) {
            return std::nullopt;
        }
        return canonicalize(ExactValue{v.a / odd, v.b / odd, v.c / odd, v.d / odd, v.k});
    } catch (const std::overflow_error &) {
        return std::nullopt;
    }
}

void Tolerance::validate() const {
    if (!std::isfinite(abs_eps) || !std::isfinite(rel_eps) || abs_eps < 0 || rel_eps < 0) {
        throw PreconditionError("tolerance fields must be finite and non-negative");
    }
}

ExactValue canonicalize(ExactValue v) {
    if (v.k < 0) {
        throw PreconditionError("exact scalar with negative k");
    }
    while (v.k > 0 && v.a % 2 == 0 && v.c % 2 == 0) {
        v = ExactValue{v.b, v.a / 2, v.d, v.c / 2, v.k - 1};
    }
    return v;
}

Scalar Scalar::exact(int64_t a, int64_t b, int64_t c, int64_t d, int32_t k) {
    return exact(ExactValue{a, b, c, d, k});
}

Scalar Scalar::exact(const ExactValue &v) {
    Scalar s;
    s.exact_ = true;
    s.e_ = canonicalize(v);
    return s;
}

Scalar Scalar::from_float(double re, double im) {
    Scalar s;
    s.exact_ = false;
    s.f_ = {re, im};
    return s;
}

Scalar Scalar::sqrt2_pow(int32_t e) {
    if (e < 0) {
        return exact(1, 0, 0, 0, -e);
    }
    if (e >= 124) {
        throw std::overflow_error("exact scalar overflow in sqrt2 power");
    }
    int64_t p = int64_t{1} << (e / 2);
    return e % 2 == 0 ? exact(p) : exact(0, p);
}

const ExactValue &Scalar::exact_value() const {
    if (!exact_) {
        throw PreconditionError("exact_value() called on a Float scalar");
    }
    return e_;
}

std::complex<double> Scalar::to_complex() const {
    if (!exact_) {
        return f_;
    }
    double scale = std::pow(M_SQRT1_2, e_.k);
    double re = (static_cast<double>(e_.a) + static_cast<double>(e_.b) * M_SQRT2) * scale;
    double im = (static_cast<double>(e_.c) + static_cast<double>(e_.d) * M_SQRT2) * scale;
    return {re, im};
}

bool Scalar::is_zero() const {
    if (exact_) {
        return e_.a == 0 && e_.b == 0 && e_.c == 0 && e_.d == 0;
    }
    return f_.real() == 0.0 && f_.imag() == 0.0;
}

bool Scalar::is_negligible(const Tolerance &tol, double scale) const {
    if (exact_) {
        return is_zero();
    }
    return std::abs(f_) <= tol.threshold(scale);
}

bool Scalar::is_exact_integer() const {
    return exact_ && e_.k == 0 && e_.b == 0 && e_.c == 0 && e_.d == 0;
}

Scalar Scalar::conj() const {
    if (exact_) {
        return exact(e_.a, e_.b, checked_neg(e_.c), checked_neg(e_.d), e_.k);
    }
    return from_complex(std::conj(f_));
}

Scalar Scalar::operator-() const {
    if (exact_) {
        return exact(checked_neg(e_.a), checked_neg(e_.b), checked_neg(e_.c), checked_neg(e_.d), e_.k);
    }
    return from_complex(-f_);
}

Scalar &Scalar::operator+=(const Scalar &o) {
    if (exact_ && o.exact_) {
        ExactValue x = e_;
        ExactValue y = o.e_;
        while (x.k < y.k) {
            x = raise_k(x);
        }
        while (y.k < x.k) {
            y = raise_k(y);
        }
        e_ = canonicalize(
            ExactValue{checked_add(x.a, y.a), checked_add(x.b, y.b), checked_add(x.c, y.c), checked_add(x.d, y.d), x.k});
        return *this;
    }
    *this = from_complex(to_complex() + o.to_complex());
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) {
    return *this += -o;
}

Scalar &Scalar::operator*=(const Scalar &o) {
    if (exact_ && o.exact_) {
        // (p + iq)(r + is) with p, q, r, s in Z[sqrt2].
        auto pr = mul_root2(e_.a, e_.b, o.e_.a, o.e_.b);
        auto qs = mul_root2(e_.c, e_.d, o.e_.c, o.e_.d);
        auto ps = mul_root2(e_.a, e_.b, o.e_.c, o.e_.d);
        auto qr = mul_root2(e_.c, e_.d, o.e_.a, o.e_.b);
        e_ = canonicalize(ExactValue{checked_add(pr.first, checked_neg(qs.first)),
                                     checked_add(pr.second, checked_neg(qs.second)),
                                     checked_add(ps.first, qr.first), checked_add(ps.second, qr.second),
                                     e_.k + o.e_.k});
        return *this;
    }
    *this = from_complex(to_complex() * o.to_complex());
    return *this;
}

Scalar &Scalar::operator/=(const Scalar &o) {
    if (o.exact_ && o.is_zero()) {
        throw PreconditionError("division by exact zero");
    }
    if (exact_ && o.exact_) {
        if (auto q = exact_quotient(e_, o.e_)) {
            e_ = *q;
            return *this;
        }
    }
    *this = from_complex(to_complex() / o.to_complex());
    return *this;
}

bool Scalar::identical(const Scalar &o) const {
    if (exact_ != o.exact_) {
        return false;
    }
    return exact_ ? e_ == o.e_ : f_ == o.f_;
}

std::string Scalar::to_string() const {
    std::ostringstream out;
    if (exact_) {
        out << "Exact(" << e_.a << "," << e_.b << "," << e_.c << "," << e_.d << ",k=" << e_.k << ")";
    } else {
        out << std::setprecision(17) << "Float(" << f_.real() << "," << f_.imag() << ")";
    }
    return out.str();
}

Scalar to_float(const Scalar &s) {
    return Scalar::from_complex(s.to_complex());
}

bool approx_eq(const Scalar &x, const Scalar &y, const Tolerance &tol) {
    if (x.is_exact() && y.is_exact()) {
        return x.identical(y);
    }
    std::complex<double> a = x.to_complex();
    std::complex<double> b = y.to_complex();
    return std::abs(a - b) <= tol.threshold(std::max(std::abs(a), std::abs(b)));
}

}  // namespace qaclab
