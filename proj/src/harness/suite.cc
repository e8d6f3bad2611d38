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


#include "qaclab/harness/suite.h"

#include <atomic>
#include <chrono>
#include <thread>

#include "qaclab/errors.h"
#include "qaclab/numerics/rng.h"
#include "qaclab/numerics/scalar_io.h"
#include "qaclab/state/state_vector.h"
#include "suites.h"

namespace qaclab {

using harness::Instance;
using harness::SuiteBody;

namespace {

struct SuiteEntry {
    const char *name;
    SuiteBody body;
    SuiteConfig defaults;
    /// Smallest max_qubits the suite can sample from.
    int min_qubits;
};

SuiteConfig config(const char *name, int trials, int max_qubits, Tolerance tol, Backend backend) {
    SuiteConfig c;
    c.suite = name;
    c.trials = trials;
    c.max_qubits = max_qubits;
    c.tol = tol;
    c.backend = backend;
    return c;
}

const std::vector<SuiteEntry> &registry() {
    constexpr Tolerance loose{1e-8, 1e-8};
    constexpr Tolerance tight{1e-10, 0};
    static const std::vector<SuiteEntry> entries{
        {"entanglement-lemma", harness::entanglement_lemma,
         config("entanglement-lemma", 1000, 6, loose, Backend::Float), 2},
        {"simplify-lemma", harness::simplify_lemma, config("simplify-lemma", 500, 6, loose, Backend::Float), 2},
        {"no-zero-divisors", harness::no_zero_divisors, config("no-zero-divisors", 500, 6, loose, Backend::Float),
         2},
        // max_qubits bounds k + l + m + n, the register behind the polynomial.
        {"irreducibility-family", harness::irreducibility_family,
         config("irreducibility-family", 200, 8, Tolerance{}, Backend::Exact), 5},
        // max_qubits is the variable count here.
        {"sv-vs-rank", harness::sv_vs_rank, config("sv-vs-rank", 500, 8, Tolerance{}, Backend::Exact), 2},
        {"kill-parity", harness::kill_parity, config("kill-parity", 500, 5, tight, Backend::Float), 2},
        {"depth1-refute", harness::depth1_refute, config("depth1-refute", 100, 6, Tolerance{}, Backend::Float), 3},
        {"tight-parity3", harness::tight_parity3, config("tight-parity3", 16, 4, Tolerance{}, Backend::Exact), 4},
        {"topology-6qubit", harness::topology_6qubit,
         config("topology-6qubit", 200, 6, Tolerance{}, Backend::Float), 6},
        {"depth-reduce", harness::depth_reduce, config("depth-reduce", 50, 6, tight, Backend::Float), 4},
    };
    return entries;
}

const SuiteEntry &entry(std::string_view name) {
    for (const auto &e : registry()) {
        if (e.name == name) {
            return e;
        }
    }
    throw PreconditionError("unknown suite '" + std::string(name) + "'");
}

uint64_t instance_count(const SuiteConfig &cfg) {
    if (cfg.suite == "tight-parity3") {
        return 16;
    }
    if (cfg.suite == "irreducibility-family") {
        return 6 * static_cast<uint64_t>(cfg.trials);
    }
    return static_cast<uint64_t>(cfg.trials);
}

}  // namespace

std::string backend_name(Backend b) {
    return b == Backend::Exact ? "exact" : "float";
}

Backend parse_backend(std::string_view name) {
    if (name == "exact") {
        return Backend::Exact;
    }
    if (name == "float") {
        return Backend::Float;
    }
    throw PreconditionError("unknown backend '" + std::string(name) + "' (expected exact or float)");
}

void SuiteConfig::validate() const {
    const SuiteEntry &e = entry(suite);
    if (trials < 1) {
        throw PreconditionError("trials must be at least 1");
    }
    if (max_qubits > kMaxQubits) {
        throw BudgetExceededError("max_qubits " + std::to_string(max_qubits) + " exceeds the cap of " +
                                  std::to_string(kMaxQubits));
    }
    if (max_qubits < e.min_qubits) {
        throw PreconditionError(suite + " needs max_qubits >= " + std::to_string(e.min_qubits));
    }
    tol.validate();
}

bool SuiteConfig::operator==(const SuiteConfig &o) const {
    return suite == o.suite && trials == o.trials && max_qubits == o.max_qubits && seed == o.seed &&
           tol.abs_eps == o.tol.abs_eps && tol.rel_eps == o.tol.rel_eps && backend == o.backend;
}

bool SuiteReport::operator==(const SuiteReport &o) const {
    return config == o.config && instances == o.instances && counters == o.counters && violations == o.violations;
}

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &e : registry()) {
            out.emplace_back(e.name);
        }
        return out;
    }();
    return names;
}

SuiteConfig default_config(std::string_view suite) {
    return entry(suite).defaults;
}

InstanceResult run_instance(const SuiteConfig &cfg, uint64_t index) {
    const SuiteEntry &e = entry(cfg.suite);
    Instance in{cfg, index, SeededRng(mix_seed(cfg.seed, index)), {}};
    try {
        e.body(in);
    } catch (const std::exception &ex) {
        in.fail(std::string("exception: ") + ex.what());
    }
    return std::move(in.result);
}

SuiteReport run_suite(const SuiteConfig &cfg, int jobs) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    const uint64_t n = instance_count(cfg);
    std::vector<InstanceResult> results(n);
    std::atomic<uint64_t> next{0};
    auto worker = [&] {
        for (uint64_t i = next++; i < n; i = next++) {
            results[i] = run_instance(cfg, i);
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &t : pool) {
        t.join();
    }

    SuiteReport report;
    report.config = cfg;
    report.instances = n;
    for (uint64_t i = 0; i < n; ++i) {
        for (const auto &[name, v] : results[i].counters) {
            report.counters[name] += v;
        }
        if (results[i].violated) {
            report.violations.push_back({i, mix_seed(cfg.seed, i), results[i].detail, results[i].dump});
        }
    }
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string replay_command(const SuiteConfig &cfg, uint64_t instance) {
    return "qaclab verify " + cfg.suite + " --trials " + std::to_string(cfg.trials) + " --qubits " +
           std::to_string(cfg.max_qubits) + " --seed " + std::to_string(cfg.seed) + " --backend " +
           backend_name(cfg.backend) + " --abs-tol " + format_real(cfg.tol.abs_eps) + " --rel-tol " +
           format_real(cfg.tol.rel_eps) + " --replay " + std::to_string(instance);
}

}  // namespace qaclab
