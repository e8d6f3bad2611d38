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


#ifndef QACLAB_HARNESS_SUITE_H
#define QACLAB_HARNESS_SUITE_H

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qaclab/numerics/scalar.h"

namespace qaclab {

enum class Backend { Exact, Float };

std::string backend_name(Backend b);
/// Throws PreconditionError on anything but "exact" or "float".
Backend parse_backend(std::string_view name);

struct SuiteConfig {
    std::string suite;
    /// Instances to run. For irreducibility-family this is per family shape;
    /// tight-parity3 always runs its 16 basis inputs.
    int trials = 1;
    /// Largest register (or, for sv-vs-rank, variable count) an instance may use.
    int max_qubits = 6;
    uint64_t seed = 1;
    Tolerance tol;
    Backend backend = Backend::Float;

    /// Throws PreconditionError on an unknown suite, trials < 1, or a max_qubits the
    /// suite cannot work with; BudgetExceededError above kMaxQubits.
    void validate() const;
    bool operator==(const SuiteConfig &o) const;
};

/// All suite names, in a fixed order.
const std::vector<std::string> &suite_names();

/// The acceptance-level configuration of a suite. Throws PreconditionError on an
/// unknown name.
SuiteConfig default_config(std::string_view suite);

struct Violation {
    uint64_t instance = 0;
    /// Seed of the instance's own random stream.
    uint64_t instance_seed = 0;
    std::string detail;
    /// Human-readable serialization of the instance (states, circuits, ...).
    std::string dump;

    bool operator==(const Violation &) const = default;
};

struct SuiteReport {
    SuiteConfig config;
    uint64_t instances = 0;
    /// Per-suite tallies, e.g. how many instances reached the interesting branch.
    std::map<std::string, uint64_t> counters;
    std::vector<Violation> violations;
    /// Not part of the machine format or of equality.
    double wall_seconds = 0;

    bool passed() const {
        return violations.empty();
    }
    /// Compares everything except wall_seconds.
    bool operator==(const SuiteReport &o) const;
};

/// Outcome of a single instance.
struct InstanceResult {
    bool violated = false;
    std::string detail;
    std::string dump;
    std::map<std::string, uint64_t> counters;
};

/// Instance `index` of a suite. Its randomness comes only from
/// mix_seed(cfg.seed, index), so any instance can be replayed alone. Exceptions
/// raised by the code under test are reported as violations.
InstanceResult run_instance(const SuiteConfig &cfg, uint64_t index);

/// Runs every instance, spread over `jobs` threads. The result does not depend on
/// `jobs`. Validates cfg first.
SuiteReport run_suite(const SuiteConfig &cfg, int jobs = 1);

/// Command line that re-runs one instance.
std::string replay_command(const SuiteConfig &cfg, uint64_t instance);

enum class ReportFormat { Text, Machine };

/// Machine format: `key=value` lines in a fixed order, no wall time. Text format:
/// a readable summary that includes the wall time.
std::string emit_report(const SuiteReport &r, ReportFormat format);

/// Inverse of the machine format. Throws PreconditionError ("line N: ...").
SuiteReport parse_machine_report(std::string_view text);

}  // namespace qaclab

#endif
