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


#ifndef QACLAB_STATE_STATE_IO_H
#define QACLAB_STATE_STATE_IO_H

#include <string>
#include <string_view>

#include "qaclab/state/state_vector.h"

namespace qaclab {

/// One line `bitstring re im` per nonzero amplitude, sorted by bitstring.
std::string format_state(const StateVector &psi);

/// Inverse of format_state. `#` starts a comment. All bitstrings must have the same
/// length; missing ones are zero. Throws PreconditionError with the line number on
/// malformed input.
StateVector parse_state(std::string_view text);

}  // namespace qaclab

#endif
