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


#include "qaclab/circuit/circuit_io.h"

#include <cmath>
#include <map>
#include <optional>

#include "qaclab/numerics/scalar_io.h"
#include "text_lines.h"

namespace qaclab {

namespace {

using Kind = CircuitErrorKind;
using detail::Token;

struct PendingLayer {
    int twice;
    std::map<int, OneQubitGate> singles;
    std::vector<MultiQubitGate> multis;
    QubitSet used;
};

class Parser {
   public:
    Circuit run(std::string_view text) {
        size_t last_line = 0;
        for (const auto &l : detail::content_lines(text)) {
            last_line = l.number;
            line_ = l.number;
            handle(l.tokens);
        }
        if (!headers_complete()) {
            fail(Kind::MissingHeader, last_line + 1, 1, "missing " + missing_header() + " header");
        }
        int depth = 0;
        for (const auto &p : layers_) {
            depth = std::max(depth, p.twice / 2);
        }
        Circuit c(*inputs_, *ancillas_, depth);
        for (const auto &p : layers_) {
            for (const auto &[q, g] : p.singles) {
                c.set_single(p.twice, q, g);
            }
            for (const auto &g : p.multis) {
                c.add_multi(p.twice, g);
            }
        }
        return c;
    }

   private:
    [[noreturn]] void fail(Kind k, size_t line, size_t column, const std::string &msg) {
        throw CircuitParseError(k, line, column, msg);
    }
    [[noreturn]] void fail(Kind k, const Token &t, const std::string &msg) {
        fail(k, line_, t.column, msg);
    }

    bool headers_complete() const {
        return qubits_ && inputs_ && ancillas_;
    }
    std::string missing_header() const {
        return !qubits_ ? "qubits" : !inputs_ ? "inputs" : "ancillas";
    }

    int count(const Token &t) {
        if (!is_integer_token(t.text) || t.text[0] == '-') {
            fail(Kind::BadNumber, t, "expected a non-negative integer, got `" + std::string(t.text) + "`");
        }
        auto v = parse_real(t.text);
        if (!v || *v > 1e6) {
            fail(Kind::BadNumber, t, "integer out of range: `" + std::string(t.text) + "`");
        }
        return static_cast<int>(*v);
    }

    int qubit(const Token &t) {
        int q = count(t);
        if (q >= *qubits_) {
            fail(Kind::QubitOutOfRange, t,
                 "qubit " + std::to_string(q) + " outside a register of " + std::to_string(*qubits_));
        }
        return q;
    }

    Scalar number_pair(const Token &re, const Token &im) {
        auto s = parse_scalar(re.text, im.text);
        if (!s) {
            const Token &bad = parse_real(re.text) ? im : re;
            fail(Kind::BadNumber, bad, "expected a number, got `" + std::string(bad.text) + "`");
        }
        return *s;
    }

    void arity(const std::vector<Token> &tokens, bool ok, const std::string &usage) {
        if (!ok) {
            const Token &at = tokens.back();
            fail(Kind::Arity, at, "wrong number of fields; expected `" + usage + "`");
        }
    }

    void header(std::optional<int> &slot, const std::vector<Token> &tokens) {
        arity(tokens, tokens.size() == 2, std::string(tokens[0].text) + " <count>");
        if (slot) {
            fail(Kind::DuplicateHeader, tokens[0], "duplicate `" + std::string(tokens[0].text) + "` header");
        }
        if (!layers_.empty()) {
            fail(Kind::DuplicateHeader, tokens[0], "header after the first layer");
        }
        slot = count(tokens[1]);
        if (&slot == &qubits_ && *slot > kMaxQubits) {
            fail(Kind::RegisterTooLarge, tokens[1],
                 std::to_string(*slot) + " qubits exceeds the cap of " + std::to_string(kMaxQubits));
        }
        if (headers_complete() && *qubits_ != 1 + *inputs_ + *ancillas_) {
            fail(Kind::HeaderMismatch, tokens[0],
                 "qubits " + std::to_string(*qubits_) + " != 1 + inputs " + std::to_string(*inputs_) +
                     " + ancillas " + std::to_string(*ancillas_));
        }
    }

    void require_headers(const Token &t) {
        if (!headers_complete()) {
            fail(Kind::MissingHeader, t, "missing " + missing_header() + " header before `" + std::string(t.text) + "`");
        }
    }

    void layer(const std::vector<Token> &tokens) {
        require_headers(tokens[0]);
        arity(tokens, tokens.size() == 2, "layer <index>");
        auto v = parse_real(tokens[1].text);
        if (!v || *v < 0.5 || *v > 64 || std::floor(2 * *v) != 2 * *v) {
            fail(Kind::BadLayerIndex, tokens[1],
                 "layer index must be a positive multiple of 0.5, got `" + std::string(tokens[1].text) + "`");
        }
        const int twice = static_cast<int>(2 * *v);
        for (const auto &p : layers_) {
            if (p.twice == twice) {
                fail(Kind::DuplicateLayer, tokens[1], "layer " + layer_name(twice) + " appears twice");
            }
        }
        if (!layers_.empty() && layers_.back().twice > twice) {
            fail(Kind::LayerOrder, tokens[1],
                 "layer " + layer_name(twice) + " after layer " + layer_name(layers_.back().twice));
        }
        layers_.push_back({twice, {}, {}, {}});
    }

    PendingLayer &current(const Token &t, bool odd) {
        require_headers(t);
        if (layers_.empty()) {
            fail(Kind::GateOutsideLayer, t, "gate before any `layer` line");
        }
        PendingLayer &p = layers_.back();
        if ((p.twice % 2 == 1) != odd) {
            fail(Kind::WrongLayerKind, t,
                 std::string(odd ? "1-qubit gate on CZ layer " : "multiqubit gate on 1-qubit layer ") +
                     layer_name(p.twice));
        }
        return p;
    }

    void single(const std::vector<Token> &tokens) {
        PendingLayer &p = current(tokens[0], true);
        arity(tokens, tokens.size() >= 3, "u <qubit> <H|X|Y|Z|I> | u <qubit> matrix <8 numbers>");
        const int q = qubit(tokens[1]);
        std::optional<OneQubitGate> g;
        if (tokens[2].text == "matrix") {
            arity(tokens, tokens.size() == 11, "u <qubit> matrix <re im re im re im re im>");
            Matrix2 m;
            for (int k = 0; k < 4; ++k) {
                m[k] = number_pair(tokens[3 + 2 * k], tokens[4 + 2 * k]);
            }
            try {
                g = OneQubitGate::from_matrix(m);
            } catch (const PreconditionError &e) {
                fail(Kind::NotUnitary, tokens[2], e.what());
            }
        } else {
            g = OneQubitGate::named(tokens[2].text);
            if (!g) {
                fail(Kind::UnknownGate, tokens[2], "unknown 1-qubit gate `" + std::string(tokens[2].text) + "`");
            }
            arity(tokens, tokens.size() == 3, "u <qubit> <H|X|Y|Z|I>");
        }
        if (!p.singles.emplace(q, *g).second) {
            fail(Kind::DuplicateSingle, tokens[1],
                 "second 1-qubit gate on qubit " + std::to_string(q) + " in layer " + layer_name(p.twice));
        }
    }

    QubitSet qubit_list(const std::vector<Token> &tokens, size_t from, PendingLayer &p) {
        QubitSet s;
        for (size_t k = from; k < tokens.size(); ++k) {
            const int q = qubit(tokens[k]);
            if (!s.insert(q).second) {
                fail(Kind::DuplicateQubit, tokens[k], "qubit " + std::to_string(q) + " repeated in one gate");
            }
            if (p.used.count(q)) {
                fail(Kind::LayerDisjointness, tokens[k],
                     "layer disjointness violated: qubit " + std::to_string(q) + " already used in layer " +
                         layer_name(p.twice));
            }
        }
        p.used.insert(s.begin(), s.end());
        return s;
    }

    void cz(const std::vector<Token> &tokens) {
        PendingLayer &p = current(tokens[0], false);
        arity(tokens, tokens.size() >= 2, "cz <q1> <q2> ...");
        p.multis.push_back(MultiQubitGate::cz(qubit_list(tokens, 1, p)));
    }

    void geta(const std::vector<Token> &tokens) {
        PendingLayer &p = current(tokens[0], false);
        arity(tokens, tokens.size() >= 4, "geta <re> <im> <q1> ...");
        Scalar eta = number_pair(tokens[1], tokens[2]);
        try {
            MultiQubitGate::geta(eta, {});
        } catch (const PreconditionError &e) {
            const bool modulus = std::string_view(e.what()).starts_with("GEta modulus");
            fail(modulus ? Kind::GEtaModulus : Kind::GEtaIdentity, tokens[1], e.what());
        }
        p.multis.push_back(MultiQubitGate::geta(eta, qubit_list(tokens, 3, p)));
    }

    void handle(const std::vector<Token> &tokens) {
        const std::string_view word = tokens[0].text;
        if (word == "qubits") {
            header(qubits_, tokens);
        } else if (word == "inputs") {
            header(inputs_, tokens);
        } else if (word == "ancillas") {
            header(ancillas_, tokens);
        } else if (word == "layer") {
            layer(tokens);
        } else if (word == "u") {
            single(tokens);
        } else if (word == "cz") {
            cz(tokens);
        } else if (word == "geta") {
            geta(tokens);
        } else {
            fail(Kind::UnknownDirective, tokens[0], "unknown directive `" + std::string(word) + "`");
        }
    }

    size_t line_ = 0;
    std::optional<int> qubits_, inputs_, ancillas_;
    std::vector<PendingLayer> layers_;
};

}  // namespace

std::string circuit_error_name(CircuitErrorKind k) {
    switch (k) {
        case Kind::UnknownDirective:
            return "unknown-directive";
        case Kind::MissingHeader:
            return "missing-header";
        case Kind::DuplicateHeader:
            return "duplicate-header";
        case Kind::HeaderMismatch:
            return "header-mismatch";
        case Kind::RegisterTooLarge:
            return "register-too-large";
        case Kind::BadNumber:
            return "bad-number";
        case Kind::BadLayerIndex:
            return "bad-layer-index";
        case Kind::DuplicateLayer:
            return "duplicate-layer";
        case Kind::LayerOrder:
            return "layer-order";
        case Kind::GateOutsideLayer:
            return "gate-outside-layer";
        case Kind::WrongLayerKind:
            return "wrong-layer-kind";
        case Kind::Arity:
            return "arity";
        case Kind::UnknownGate:
            return "unknown-gate";
        case Kind::QubitOutOfRange:
            return "qubit-out-of-range";
        case Kind::DuplicateQubit:
            return "duplicate-qubit";
        case Kind::DuplicateSingle:
            return "duplicate-single";
        case Kind::LayerDisjointness:
            return "layer-disjointness";
        case Kind::NotUnitary:
            return "not-unitary";
        case Kind::GEtaModulus:
            return "geta-modulus";
        case Kind::GEtaIdentity:
            return "geta-identity";
    }
    return "unknown";
}

CircuitParseError::CircuitParseError(CircuitErrorKind kind, size_t line, size_t column, const std::string &message)
    : PreconditionError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                        circuit_error_name(kind) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

Circuit parse_circuit(std::string_view text) {
    return Parser().run(text);
}

std::string serialize_circuit(const Circuit &c) {
    std::string out = "qubits " + std::to_string(c.num_qubits()) + "\ninputs " + std::to_string(c.num_inputs()) +
                      "\nancillas " + std::to_string(c.num_ancillas()) + "\n";
    for (int t = 1; t <= 2 * c.depth() + 1; ++t) {
        out += "layer " + layer_name(t) + "\n";
        if (t % 2) {
            for (const auto &[q, g] : c.singles(t)) {
                out += "u " + std::to_string(q) + " " + g.name_string();
                if (g.name() == OneQubitGate::Name::Matrix) {
                    for (const auto &e : g.matrix()) {
                        out += " " + format_scalar(e);
                    }
                }
                out += "\n";
            }
            continue;
        }
        for (const auto &g : c.multis(t)) {
            out += g.kind() == MultiQubitGate::Kind::CZ ? "cz" : "geta " + format_scalar(g.phase());
            for (int q : g.qubits()) {
                out += " " + std::to_string(q);
            }
            out += "\n";
        }
    }
    return out;
}

}  // namespace qaclab
