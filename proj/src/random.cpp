// Copyright 2026 The witgeom Authors
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

#include "witgeom/random.hpp"

#include <cmath>

namespace witgeom {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

CVector random_unit_vector(int d, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    for (;;) {
        CVector v(static_cast<std::size_t>(d));
        double n2 = 0;
        for (auto &z : v) {
            z = cplx(normal(rng), normal(rng));
            n2 += std::norm(z);
        }
        if (n2 > 1e-300) {
            const double inv = 1.0 / std::sqrt(n2);
            for (auto &z : v) {
                z *= inv;
            }
            return v;
        }
    }
}

}  // namespace witgeom
