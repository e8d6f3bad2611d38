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


#include "qaclab/state/state_io.h"

#include <map>

#include "qaclab/errors.h"
#include "qaclab/numerics/scalar_io.h"
#include "text_lines.h"

namespace qaclab {

std::string format_state(const StateVector &psi) {
    if (psi.num_qubits() == 0) {
        throw PreconditionError("cannot write a state on zero qubits");
    }
    std::string out;
    for (uint64_t i = 0; i < psi.dim(); ++i) {
        if (psi.amp(i).is_zero()) {
            continue;
        }
        for (int q = 0; q < psi.num_qubits(); ++q) {
            out.push_back(static_cast<char>('0' + psi.bit(i, q)));
        }
        out += " " + format_scalar(psi.amp(i)) + "\n";
    }
    return out;
}

StateVector parse_state(std::string_view text) {
    std::map<uint64_t, Scalar> amps;
    int r = -1;
    for (const auto &l : detail::content_lines(text)) {
        auto fail = [&](const std::string &why) {
            throw PreconditionError("line " + std::to_string(l.number) + ": " + why);
        };
        if (l.tokens.size() != 3) {
            fail("expected `bitstring re im`");
        }
        std::string_view bits = l.tokens[0].text;
        if (r < 0) {
            r = static_cast<int>(bits.size());
            if (r > kMaxQubits) {
                fail("more than " + std::to_string(kMaxQubits) + " qubits");
            }
        } else if (static_cast<int>(bits.size()) != r) {
            fail("bitstring length " + std::to_string(bits.size()) + " differs from " + std::to_string(r));
        }
        uint64_t index = 0;
        for (char ch : bits) {
            if (ch != '0' && ch != '1') {
                fail("bad bitstring `" + std::string(bits) + "`");
            }
            index = (index << 1) | static_cast<uint64_t>(ch - '0');
        }
        auto c = parse_scalar(l.tokens[1].text, l.tokens[2].text);
        if (!c) {
            fail("bad amplitude");
        }
        if (!amps.emplace(index, *c).second) {
            fail("duplicate bitstring `" + std::string(bits) + "`");
        }
    }
    if (r < 0) {
        throw PreconditionError("no amplitudes");
    }
    std::vector<Scalar> v(uint64_t{1} << r);
    for (const auto &[i, c] : amps) {
        v[i] = c;
    }
    return StateVector(r, std::move(v));
}

}  // namespace qaclab
