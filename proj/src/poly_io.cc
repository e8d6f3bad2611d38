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

#include "qaclab/poly/poly_io.h"

#include <sstream>

#include "qaclab/errors.h"
#include "qaclab/numerics/scalar_io.h"
#include "text_lines.h"

namespace qaclab {

using detail::trim;

MultilinearPoly parse_poly(std::string_view text) {
    MultilinearPoly f;
    for (const auto &l : detail::content_lines(text)) {
        const size_t line_no = l.number;
        const std::string_view line = trim(l.text);
        auto fail = [&](const std::string &why) {
            throw PreconditionError("line " + std::to_string(line_no) + ": " + why);
        };
        size_t colon = line.find(':');
        if (colon == std::string_view::npos) {
            fail("expected `re im : vars`");
        }
        std::istringstream coeff{std::string(line.substr(0, colon))};
        std::string re, im, extra;
        if (!(coeff >> re >> im) || (coeff >> extra)) {
            fail("expected two numbers before ':'");
        }
        auto c = parse_scalar(re, im);
        if (!c) {
            fail("bad number");
        }
        Monomial m;
        std::string_view vars = trim(line.substr(colon + 1));
        while (!vars.empty()) {
            size_t comma = vars.find(',');
            std::string_view tok = trim(vars.substr(0, comma));
            vars = comma == std::string_view::npos ? std::string_view{} : trim(vars.substr(comma + 1));
            try {
                m.push_back(parse_var(tok));
            } catch (const PreconditionError &e) {
                fail(e.what());
            }
        }
        try {
            f.add_term(std::move(m), *c);
        } catch (const PreconditionError &e) {
            fail(e.what());
        }
    }
    return f;
}

std::string format_poly(const MultilinearPoly &f) {
    std::string out;
    for (const auto &[m, c] : f.terms()) {
        out += format_scalar(c);
        out += " :";
        for (size_t i = 0; i < m.size(); ++i) {
            out += i == 0 ? " " : ",";
            out += m[i].to_string();
        }
        out += "\n";
    }
    return out;
}

}  // namespace qaclab
