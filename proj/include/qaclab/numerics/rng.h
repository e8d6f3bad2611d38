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

#ifndef QACLAB_NUMERICS_RNG_H
#define QACLAB_NUMERICS_RNG_H

#include <cstdint>
#include <random>

#include "qaclab/numerics/scalar.h"

namespace qaclab {

/// Seeded pseudo random source. Owned by the caller; not thread safe.
class SeededRng {
   public:
    explicit SeededRng(uint64_t seed);

    uint64_t seed() const {
        return seed_;
    }
    double normal();
    /// Uniform in [0, 1).
    double uniform();
    /// Uniform in [lo, hi].
    int64_t uniform_int(int64_t lo, int64_t hi);
    bool coin(double p = 0.5);

    /// Independent child stream; depends only on (seed, stream).
    SeededRng split(uint64_t stream) const;

    std::mt19937_64 &engine() {
        return engine_;
    }

   private:
    uint64_t seed_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_;
    std::uniform_real_distribution<double> uniform_;
};

/// splitmix64 finalizer.
uint64_t mix_seed(uint64_t seed, uint64_t stream);

/// re + i*im with independent standard normal parts.
Scalar random_scalar(SeededRng &rng);

}  // namespace qaclab

#endif
