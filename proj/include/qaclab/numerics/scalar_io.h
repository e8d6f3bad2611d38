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

#ifndef QACLAB_NUMERICS_SCALAR_IO_H
#define QACLAB_NUMERICS_SCALAR_IO_H

#include <optional>
#include <string>
#include <string_view>

#include "qaclab/numerics/scalar.h"

namespace qaclab {

/// Parses a decimal number. Returns nullopt unless the whole token is a finite number.
std::optional<double> parse_real(std::string_view token);

/// True for an optionally signed run of decimal digits that fits in int64.
bool is_integer_token(std::string_view token);

/// Reads `re im`. Two integer tokens give an Exact Gaussian integer, anything else a
/// Float. Returns nullopt if either token is not a number.
std::optional<Scalar> parse_scalar(std::string_view re, std::string_view im);

/// Writes `re im`. Exact Gaussian integers are written as integers, everything else
/// in shortest round-trip decimal form.
std::string format_scalar(const Scalar &s);

/// Shortest-round-trip decimal form of a double.
std::string format_real(double v);

}  // namespace qaclab

#endif
