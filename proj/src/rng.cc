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

#include "qaclab/numerics/rng.h"

namespace qaclab {

uint64_t mix_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SeededRng::SeededRng(uint64_t seed) : seed_(seed), engine_(seed), normal_(0.0, 1.0), uniform_(0.0, 1.0) {
}

double SeededRng::normal() {
    return normal_(engine_);
}

double SeededRng::uniform() {
    return uniform_(engine_);
}

int64_t SeededRng::uniform_int(int64_t lo, int64_t hi) {
    return std::uniform_int_distribution<int64_t>(lo, hi)(engine_);
}

bool SeededRng::coin(double p) {
    return uniform() < p;
}

SeededRng SeededRng::split(uint64_t stream) const {
    return SeededRng(mix_seed(seed_, stream));
}

Scalar random_scalar(SeededRng &rng) {
    double re = rng.normal();
    double im = rng.normal();
    return Scalar::from_float(re, im);
}

}  // namespace qaclab
