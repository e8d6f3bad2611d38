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


#ifndef QACLAB_PARITY_CERTIFICATE_H
#define QACLAB_PARITY_CERTIFICATE_H

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include "qaclab/circuit/circuit.h"

namespace qaclab {

/// Evidence that a circuit does not weakly compute parity with a given ancilla:
/// two input-register states of different pure parity on which the final target
/// state is the same.
struct RefutationCertificate {
    enum class Kind { TargetIndependence, ParityMismatch };

    Kind kind = Kind::ParityMismatch;
    /// Free-form label of the construction that produced it.
    std::string tactic;
    /// TargetIndependence: inputs[1] is inputs[0] with this input qubit flipped.
    std::optional<int> designated;
    /// States of the n input qubits (register positions 1..n).
    std::array<StateVector, 2> inputs;
    std::array<int, 2> parities{0, 1};
    StateVector ancilla;
    /// Final reduced state of the target for each input.
    std::array<Density2, 2> targets{};
};

std::string kind_name(RefutationCertificate::Kind kind);

struct CertificateCheck {
    bool valid = false;
    /// Why the check failed; empty when valid.
    std::string reason;
};

/// Re-checks a certificate against c by simulating both initial states: sizes
/// match, the inputs have the recorded different pure parities, the final target
/// states agree with each other and with the record within tol, and for
/// TargetIndependence inputs[1] = X_designated inputs[0].
CertificateCheck verify_certificate(const Circuit &c, const RefutationCertificate &cert, const Tolerance &tol = {});

/// Key/value text, one `key=value` per line in a fixed order.
std::string format_certificate(const RefutationCertificate &cert);

/// Inverse of format_certificate. Throws PreconditionError ("line N: ...") on
/// unknown, duplicate, missing or malformed keys.
RefutationCertificate parse_certificate(std::string_view text);

}  // namespace qaclab

#endif
