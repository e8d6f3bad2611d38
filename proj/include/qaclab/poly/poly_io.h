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

#ifndef QACLAB_POLY_POLY_IO_H
#define QACLAB_POLY_POLY_IO_H

#include <string>
#include <string_view>

#include "qaclab/poly/multilinear_poly.h"

namespace qaclab {

/// Reads one term per line: `re im : var,var,...`. An empty variable list is the
/// constant term, `#` starts a comment, blank lines are skipped. Repeated monomials
/// add up. Throws PreconditionError naming the line on malformed input.
MultilinearPoly parse_poly(std::string_view text);

/// Writes the terms in monomial order in the format read by parse_poly.
std::string format_poly(const MultilinearPoly &f);

}  // namespace qaclab

#endif
