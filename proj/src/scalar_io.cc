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

#include "qaclab/numerics/scalar_io.h"

#include <charconv>
#include <cmath>

namespace qaclab {

std::optional<double> parse_real(std::string_view token) {
    if (token.empty()) {
        return std::nullopt;
    }
    // from_chars rejects a leading '+'.
    if (token.front() == '+') {
        token.remove_prefix(1);
    }
    double v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

bool is_integer_token(std::string_view token) {
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
    }
    int64_t v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    return !token.empty() && ec == std::errc() && ptr == token.data() + token.size();
}

namespace {

int64_t to_int(std::string_view token) {
    if (token.front() == '+') {
        token.remove_prefix(1);
    }
    int64_t v = 0;
    std::from_chars(token.data(), token.data() + token.size(), v);
    return v;
}

}  // namespace

std::optional<Scalar> parse_scalar(std::string_view re, std::string_view im) {
    if (is_integer_token(re) && is_integer_token(im)) {
        return Scalar::exact(to_int(re), 0, to_int(im), 0, 0);
    }
    auto r = parse_real(re);
    auto i = parse_real(im);
    if (!r || !i) {
        return std::nullopt;
    }
    return Scalar::from_float(*r, *i);
}

std::string format_real(double v) {
    if (v == 0) {
        v = 0;  // drop the sign of -0.0
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string format_scalar(const Scalar &s) {
    if (s.is_exact()) {
        const ExactValue &e = s.exact_value();
        if (e.k == 0 && e.b == 0 && e.d == 0) {
            return std::to_string(e.a) + " " + std::to_string(e.c);
        }
    }
    return format_real(s.real()) + " " + format_real(s.imag());
}

}  // namespace qaclab
