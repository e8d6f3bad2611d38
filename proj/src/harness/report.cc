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


#include <cstdio>
#include <optional>

#include "qaclab/errors.h"
#include "qaclab/harness/suite.h"
#include "qaclab/numerics/scalar_io.h"

namespace qaclab {

namespace {

std::string escape(std::string_view s) {
    std::string out;
    for (char ch : s) {
        if (ch == '\\') {
            out += "\\\\";
        } else if (ch == '\n') {
            out += "\\n";
        } else {
            out += ch;
        }
    }
    return out;
}

std::optional<std::string> unescape(std::string_view s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '\\') {
            out += s[i];
            continue;
        }
        if (++i == s.size()) {
            return std::nullopt;
        }
        if (s[i] == 'n') {
            out += '\n';
        } else if (s[i] == '\\') {
            out += '\\';
        } else {
            return std::nullopt;
        }
    }
    return out;
}

std::string emit_machine(const SuiteReport &r) {
    const SuiteConfig &c = r.config;
    std::string out;
    auto kv = [&](const std::string &k, const std::string &v) {
        out += k + "=" + v + "\n";
    };
    kv("suite", c.suite);
    kv("trials", std::to_string(c.trials));
    kv("max_qubits", std::to_string(c.max_qubits));
    kv("seed", std::to_string(c.seed));
    kv("backend", backend_name(c.backend));
    kv("abs_tol", format_real(c.tol.abs_eps));
    kv("rel_tol", format_real(c.tol.rel_eps));
    kv("instances", std::to_string(r.instances));
    for (const auto &[name, v] : r.counters) {
        kv("count." + name, std::to_string(v));
    }
    kv("violations", std::to_string(r.violations.size()));
    for (size_t k = 0; k < r.violations.size(); ++k) {
        const Violation &v = r.violations[k];
        const std::string p = "violation." + std::to_string(k) + ".";
        kv(p + "instance", std::to_string(v.instance));
        kv(p + "seed", std::to_string(v.instance_seed));
        kv(p + "detail", escape(v.detail));
        kv(p + "replay", replay_command(c, v.instance));
        kv(p + "dump", escape(v.dump));
    }
    kv("status", r.passed() ? "pass" : "fail");
    return out;
}

std::string emit_text(const SuiteReport &r) {
    const SuiteConfig &c = r.config;
    char wall[32];
    std::snprintf(wall, sizeof(wall), "%.2f", r.wall_seconds);
    std::string out = c.suite + ": " + (r.passed() ? "PASS" : "FAIL") + " (" + std::to_string(r.instances) +
                      " instances, " + std::to_string(r.violations.size()) + " violations, " + wall + " s)\n";
    out += "  config: trials=" + std::to_string(c.trials) + " max_qubits=" + std::to_string(c.max_qubits) +
           " seed=" + std::to_string(c.seed) + " backend=" + backend_name(c.backend) +
           " tol=" + format_real(c.tol.abs_eps) + "/" + format_real(c.tol.rel_eps) + "\n";
    for (const auto &[name, v] : r.counters) {
        out += "  " + name + ": " + std::to_string(v) + "\n";
    }
    for (const Violation &v : r.violations) {
        out += "  violation at instance " + std::to_string(v.instance) + ": " + v.detail + "\n";
        out += "    replay: " + replay_command(c, v.instance) + "\n";
        size_t pos = 0;
        while (pos < v.dump.size()) {
            size_t nl = v.dump.find('\n', pos);
            if (nl == std::string::npos) {
                nl = v.dump.size();
            }
            out += "    | " + v.dump.substr(pos, nl - pos) + "\n";
            pos = nl + 1;
        }
    }
    return out;
}

// Reads the machine format front to back; every key must come in its place.
class Reader {
   public:
    // Blank lines are skipped; nothing else is trimmed, so detail text survives as is.
    explicit Reader(std::string_view text) {
        size_t number = 0;
        while (!text.empty()) {
            ++number;
            size_t nl = text.find('\n');
            std::string_view line = text.substr(0, nl);
            text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
            if (!line.empty() && line.back() == '\r') {
                line.remove_suffix(1);
            }
            if (!line.empty()) {
                lines_.push_back({number, line});
            }
        }
    }

    std::string take(const std::string &key) {
        auto v = take_if(key);
        if (!v) {
            fail(at_end() ? "missing key '" + key + "'" : "expected key '" + key + "'");
        }
        return *v;
    }
    std::optional<std::string> take_if(const std::string &key) {
        if (at_end()) {
            return std::nullopt;
        }
        std::string_view line = lines_[pos_].text;
        size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            fail("expected key=value");
        }
        if (line.substr(0, eq) != key) {
            return std::nullopt;
        }
        last_ = lines_[pos_++].number;
        return std::string(line.substr(eq + 1));
    }
    // A count.NAME line, if next.
    std::optional<std::pair<std::string, std::string>> take_counter() {
        if (at_end() || lines_[pos_].text.rfind("count.", 0) != 0) {
            return std::nullopt;
        }
        std::string_view line = lines_[pos_].text;
        size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            fail("expected key=value");
        }
        last_ = lines_[pos_++].number;
        return std::pair{std::string(line.substr(6, eq - 6)), std::string(line.substr(eq + 1))};
    }
    uint64_t number(const std::string &key) {
        return parse_u64(take(key));
    }
    uint64_t parse_u64(const std::string &v) {
        if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos || v.size() > 20) {
            fail_last("bad number '" + v + "'");
        }
        try {
            return std::stoull(v);
        } catch (const std::out_of_range &) {
            fail_last("number out of range '" + v + "'");
        }
    }
    double real(const std::string &key) {
        std::string v = take(key);
        auto x = parse_real(v);
        if (!x) {
            fail_last("bad number '" + v + "'");
        }
        return *x;
    }
    bool at_end() const {
        return pos_ == lines_.size();
    }
    [[noreturn]] void fail(const std::string &why) const {
        // Past the end, blame the last line.
        size_t line = at_end() ? (lines_.empty() ? 1 : lines_.back().number) : lines_[pos_].number;
        throw PreconditionError("line " + std::to_string(line) + ": " + why);
    }

    // Errors in the value of the line just read.
    [[noreturn]] void fail_last(const std::string &why) const {
        throw PreconditionError("line " + std::to_string(last_) + ": " + why);
    }

   private:
    struct Line {
        size_t number;
        std::string_view text;
    };
    std::vector<Line> lines_;
    size_t pos_ = 0;
    size_t last_ = 1;
};

}  // namespace

std::string emit_report(const SuiteReport &r, ReportFormat format) {
    return format == ReportFormat::Machine ? emit_machine(r) : emit_text(r);
}

SuiteReport parse_machine_report(std::string_view text) {
    Reader in(text);
    SuiteReport r;
    SuiteConfig &c = r.config;
    c.suite = in.take("suite");
    const uint64_t trials = in.number("trials");
    const uint64_t max_qubits = in.number("max_qubits");
    if (trials > INT32_MAX || max_qubits > INT32_MAX) {
        in.fail_last("trials or max_qubits out of range");
    }
    c.trials = static_cast<int>(trials);
    c.max_qubits = static_cast<int>(max_qubits);
    c.seed = in.number("seed");
    try {
        c.backend = parse_backend(in.take("backend"));
    } catch (const PreconditionError &e) {
        in.fail_last(e.what());
    }
    c.tol.abs_eps = in.real("abs_tol");
    c.tol.rel_eps = in.real("rel_tol");
    r.instances = in.number("instances");
    while (auto counter = in.take_counter()) {
        if (r.counters.count(counter->first)) {
            in.fail_last("duplicate counter '" + counter->first + "'");
        }
        r.counters[counter->first] = in.parse_u64(counter->second);
    }
    const uint64_t violations = in.number("violations");
    for (uint64_t k = 0; k < violations; ++k) {
        const std::string p = "violation." + std::to_string(k) + ".";
        Violation v;
        v.instance = in.number(p + "instance");
        v.instance_seed = in.number(p + "seed");
        auto text = [&](const std::string &key) {
            auto s = unescape(in.take(key));
            if (!s) {
                in.fail_last("bad escape sequence");
            }
            return *s;
        };
        v.detail = text(p + "detail");
        in.take(p + "replay");
        v.dump = text(p + "dump");
        r.violations.push_back(std::move(v));
    }
    const std::string status = in.take("status");
    if (status != (r.passed() ? "pass" : "fail")) {
        in.fail_last("status '" + status + "' contradicts the violation count");
    }
    if (!in.at_end()) {
        in.fail("unexpected trailing key");
    }
    return r;
}

}  // namespace qaclab
