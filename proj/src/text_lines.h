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


#ifndef QACLAB_SRC_TEXT_LINES_H
#define QACLAB_SRC_TEXT_LINES_H

#include <string_view>
#include <vector>

namespace qaclab::detail {

struct Token {
    std::string_view text;
    /// 1-based column in the original line.
    size_t column;
};

struct Line {
    /// 1-based.
    size_t number;
    /// Content before any `#`, right-trimmed. Leading whitespace is kept so columns
    /// stay meaningful.
    std::string_view text;
    std::vector<Token> tokens;
};

inline std::string_view trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

/// Non-blank lines with comments removed, split on whitespace.
inline std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    size_t number = 0;
    while (!text.empty()) {
        ++number;
        size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        size_t end = line.find_last_not_of(" \t\r");
        if (end == std::string_view::npos) {
            continue;
        }
        line = line.substr(0, end + 1);
        Line l{number, line, {}};
        size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
                ++i;
                continue;
            }
            size_t j = line.find_first_of(" \t\r", i);
            if (j == std::string_view::npos) {
                j = line.size();
            }
            l.tokens.push_back({line.substr(i, j - i), i + 1});
            i = j;
        }
        out.push_back(std::move(l));
    }
    return out;
}

}  // namespace qaclab::detail

#endif
