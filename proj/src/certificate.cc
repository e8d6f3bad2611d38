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


#include "qaclab/parity/certificate.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>

#include "qaclab/errors.h"
#include "qaclab/numerics/scalar_io.h"
#include "text_lines.h"

namespace qaclab {

// The verifier below deliberately rebuilds initial states, parities and reduced
// target states by hand; only `simulate` is shared with the refuters.

namespace {

std::vector<std::complex<double>> dense(const StateVector &psi) {
    std::vector<std::complex<double>> out;
    for (const auto &a : psi.amps()) {
        out.push_back(a.to_complex());
    }
    return out;
}

Density2 target_density(const std::vector<std::complex<double>> &amps) {
    const size_t half = amps.size() / 2;
    Density2 rho{};
    for (size_t k = 0; k < half; ++k) {
        const std::complex<double> v[2] = {amps[k], amps[half + k]};
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                rho[2 * i + j] += v[i] * std::conj(v[j]);
            }
        }
    }
    return rho;
}

double max_diff(const Density2 &a, const Density2 &b) {
    double d = 0;
    for (int k = 0; k < 4; ++k) {
        d = std::max(d, std::abs(a[k] - b[k]));
    }
    return d;
}

// Weight outside parity b, squared.
double off_parity_weight(const std::vector<std::complex<double>> &amps, int b) {
    double w = 0;
    for (size_t x = 0; x < amps.size(); ++x) {
        if ((std::popcount(x) & 1) != b) {
            w += std::norm(amps[x]);
        }
    }
    return w;
}

}  // namespace

std::string kind_name(RefutationCertificate::Kind kind) {
    return kind == RefutationCertificate::Kind::ParityMismatch ? "parity-mismatch" : "target-independence";
}

CertificateCheck verify_certificate(const Circuit &c, const RefutationCertificate &cert, const Tolerance &tol) {
    auto fail = [](std::string why) { return CertificateCheck{false, std::move(why)}; };
    const int n = c.num_inputs(), m = c.num_ancillas();
    if (cert.ancilla.num_qubits() != m) {
        return fail("ancilla has " + std::to_string(cert.ancilla.num_qubits()) + " qubits, circuit has " +
                    std::to_string(m));
    }
    const auto anc = dense(cert.ancilla);
    std::array<std::vector<std::complex<double>>, 2> in;
    for (int s = 0; s < 2; ++s) {
        if (cert.inputs[s].num_qubits() != n) {
            return fail("input " + std::to_string(s) + " has " + std::to_string(cert.inputs[s].num_qubits()) +
                        " qubits, circuit has " + std::to_string(n));
        }
        in[s] = dense(cert.inputs[s]);
    }
    if (cert.parities[0] == cert.parities[1] || (cert.parities[0] | cert.parities[1]) > 1 ||
        std::min(cert.parities[0], cert.parities[1]) < 0) {
        return fail("recorded parities must be 0 and 1");
    }

    std::array<Density2, 2> rho;
    for (int s = 0; s < 2; ++s) {
        double norm2 = 0;
        for (const auto &v : in[s]) {
            norm2 += std::norm(v);
        }
        if (std::abs(norm2 - 1) > tol.threshold(1)) {
            return fail("input " + std::to_string(s) + " is not a unit vector");
        }
        if (std::sqrt(off_parity_weight(in[s], cert.parities[s])) > tol.threshold(1)) {
            return fail("input " + std::to_string(s) + " does not have pure parity " +
                        std::to_string(cert.parities[s]));
        }
        // |0> (x) input (x) ancilla: the target bit is the most significant.
        std::vector<Scalar> amps(size_t{2} << (n + m));
        for (size_t x = 0; x < in[s].size(); ++x) {
            for (size_t a = 0; a < anc.size(); ++a) {
                amps[(x << m) | a] = Scalar::from_complex(in[s][x] * anc[a]);
            }
        }
        rho[s] = target_density(dense(simulate(c, StateVector(c.num_qubits(), std::move(amps)))));
    }

    if (cert.kind == RefutationCertificate::Kind::TargetIndependence) {
        if (!cert.designated || *cert.designated < 1 || *cert.designated > n) {
            return fail("target-independence needs a designated input qubit in 1.." + std::to_string(n));
        }
        const size_t flip = size_t{1} << (n - *cert.designated);
        for (size_t x = 0; x < in[0].size(); ++x) {
            if (std::abs(in[1][x ^ flip] - in[0][x]) > tol.threshold(1)) {
                return fail("input 1 is not input 0 with qubit " + std::to_string(*cert.designated) + " flipped");
            }
        }
    }
    const double spread = max_diff(rho[0], rho[1]);
    if (spread > tol.threshold(1)) {
        std::ostringstream os;
        os << "final target states differ by " << spread;
        return fail(os.str());
    }
    for (int s = 0; s < 2; ++s) {
        if (max_diff(rho[s], cert.targets[s]) > tol.threshold(1)) {
            return fail("recorded target state " + std::to_string(s) + " does not match simulation");
        }
    }
    return {true, ""};
}

namespace {

constexpr const char *kKeys[] = {"certificate", "kind",   "tactic", "inputs",  "ancillas", "designated", "parity0",
                                 "parity1",     "input0", "input1", "ancilla", "target0",  "target1"};

std::string amps_value(const std::vector<Scalar> &amps) {
    std::string out;
    for (size_t i = 0; i < amps.size(); ++i) {
        out += (i ? " " : "") + format_scalar(amps[i]);
    }
    return out;
}

std::string density_value(const Density2 &rho) {
    std::vector<Scalar> v;
    for (const auto &z : rho) {
        v.push_back(Scalar::from_complex(z));
    }
    return amps_value(v);
}

}  // namespace

std::string format_certificate(const RefutationCertificate &cert) {
    std::string out;
    auto put = [&](const char *key, const std::string &value) { out += std::string(key) + "=" + value + "\n"; };
    put("certificate", "refutation");
    put("kind", kind_name(cert.kind));
    put("tactic", cert.tactic);
    put("inputs", std::to_string(cert.inputs[0].num_qubits()));
    put("ancillas", std::to_string(cert.ancilla.num_qubits()));
    put("designated", cert.designated ? std::to_string(*cert.designated) : "none");
    put("parity0", std::to_string(cert.parities[0]));
    put("parity1", std::to_string(cert.parities[1]));
    put("input0", amps_value(cert.inputs[0].amps()));
    put("input1", amps_value(cert.inputs[1].amps()));
    put("ancilla", amps_value(cert.ancilla.amps()));
    put("target0", density_value(cert.targets[0]));
    put("target1", density_value(cert.targets[1]));
    return out;
}

RefutationCertificate parse_certificate(std::string_view text) {
    std::map<std::string, std::pair<std::string, size_t>> kv;
    size_t number = 0;
    while (!text.empty()) {
        ++number;
        const size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = detail::trim(line);
        if (line.empty()) {
            continue;
        }
        const size_t eq = line.find('=');
        auto fail = [&](const std::string &why) {
            throw PreconditionError("line " + std::to_string(number) + ": " + why);
        };
        if (eq == std::string_view::npos) {
            fail("expected key=value");
        }
        std::string key(detail::trim(line.substr(0, eq)));
        if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
            fail("unknown key `" + key + "`");
        }
        if (!kv.emplace(key, std::pair{std::string(detail::trim(line.substr(eq + 1))), number}).second) {
            fail("duplicate key `" + key + "`");
        }
    }
    for (const char *key : kKeys) {
        if (!kv.count(key)) {
            throw PreconditionError(std::string("missing key `") + key + "`");
        }
    }
    auto fail_at = [&](const char *key, const std::string &why) {
        throw PreconditionError("line " + std::to_string(kv[key].second) + ": " + key + ": " + why);
    };
    auto integer = [&](const char *key, int lo, int hi) {
        const std::string &v = kv[key].first;
        if (!is_integer_token(v) || std::stoll(v) < lo || std::stoll(v) > hi) {
            fail_at(key, "expected an integer in " + std::to_string(lo) + ".." + std::to_string(hi));
        }
        return std::stoi(v);
    };
    auto scalars = [&](const char *key, size_t count) {
        std::istringstream is(kv[key].first);
        std::vector<Scalar> out;
        std::string re, im;
        while (is >> re) {
            if (!(is >> im)) {
                fail_at(key, "odd number of reals");
            }
            auto s = parse_scalar(re, im);
            if (!s) {
                fail_at(key, "bad number");
            }
            out.push_back(*s);
        }
        if (out.size() != count) {
            fail_at(key, "expected " + std::to_string(count) + " values, got " + std::to_string(out.size()));
        }
        return out;
    };

    if (kv["certificate"].first != "refutation") {
        fail_at("certificate", "expected `refutation`");
    }
    RefutationCertificate cert;
    const std::string &kind = kv["kind"].first;
    if (kind == "parity-mismatch") {
        cert.kind = RefutationCertificate::Kind::ParityMismatch;
    } else if (kind == "target-independence") {
        cert.kind = RefutationCertificate::Kind::TargetIndependence;
    } else {
        fail_at("kind", "unknown kind `" + kind + "`");
    }
    cert.tactic = kv["tactic"].first;
    const int n = integer("inputs", 0, kMaxQubits - 1);
    const int m = integer("ancillas", 0, kMaxQubits - 1 - n);
    if (kv["designated"].first != "none") {
        cert.designated = integer("designated", 1, n);
    }
    cert.parities = {integer("parity0", 0, 1), integer("parity1", 0, 1)};
    cert.inputs[0] = StateVector(n, scalars("input0", size_t{1} << n));
    cert.inputs[1] = StateVector(n, scalars("input1", size_t{1} << n));
    cert.ancilla = StateVector(m, scalars("ancilla", size_t{1} << m));
    for (int s = 0; s < 2; ++s) {
        auto v = scalars(s ? "target1" : "target0", 4);
        for (int k = 0; k < 4; ++k) {
            cert.targets[s][k] = v[k].to_complex();
        }
    }
    return cert;
}

}  // namespace qaclab
