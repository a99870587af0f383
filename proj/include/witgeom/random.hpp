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

#pragma once

#include <cstdint>
#include <random>

#include "witgeom/matrix.hpp"

namespace witgeom {

/// splitmix64 finalizer over (seed, stream); derives independent substreams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform on the complex unit sphere in C^d.
CVector random_unit_vector(int d, std::mt19937_64 &rng);

}  // namespace witgeom
