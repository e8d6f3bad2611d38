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


#ifndef QACLAB_SRC_HARNESS_SUITES_H
#define QACLAB_SRC_HARNESS_SUITES_H

#include <string>

#include "qaclab/harness/suite.h"
#include "qaclab/numerics/rng.h"

namespace qaclab::harness {

/// State of one running instance.
struct Instance {
    const SuiteConfig &cfg;
    uint64_t index;
    SeededRng rng;
    InstanceResult result;

    /// Records the first violation; later ones only bump the counter.
    void fail(const std::string &detail) {
        if (!result.violated) {
            result.violated = true;
            result.detail = detail;
        }
        count("failed-checks");
    }
    void count(const std::string &name, uint64_t by = 1) {
        result.counters[name] += by;
    }
    void dump(const std::string &text) {
        result.dump += text;
    }
};

using SuiteBody = void (*)(Instance &);

void entanglement_lemma(Instance &in);
void simplify_lemma(Instance &in);
void no_zero_divisors(Instance &in);
void topology_6qubit(Instance &in);

void irreducibility_family(Instance &in);
void sv_vs_rank(Instance &in);

void kill_parity(Instance &in);
void depth1_refute(Instance &in);
void tight_parity3(Instance &in);
void depth_reduce(Instance &in);

}  // namespace qaclab::harness

#endif
