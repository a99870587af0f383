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

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "witgeom/matrix.hpp"
#include "witgeom/random.hpp"
#include "witgeom/states.hpp"

namespace witgeom::testing {

inline CMatrix random_matrix(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    CMatrix a(n);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            a(r, c) = cplx(g(rng), g(rng));
        }
    }
    return a;
}

inline CMatrix random_hermitian(std::size_t n, std::mt19937_64 &rng) {
    CMatrix a = random_matrix(n, rng);
    return (a + a.adjoint()) * 0.5;
}

/// G G^dagger / Tr, full rank with probability one.
inline DensityState random_density(const SystemShape &shape, std::mt19937_64 &rng) {
    CMatrix g = random_matrix(shape.total(), rng);
    CMatrix p = g * g.adjoint();
    p *= 1.0 / p.trace().real();
    return DensityState((p + p.adjoint()) * 0.5, shape);
}

inline ProductProjection random_product(const SystemShape &shape, std::mt19937_64 &rng) {
    std::vector<CVector> locals;
    for (int d : shape.dims()) {
        locals.push_back(random_unit_vector(d, rng));
    }
    return ProductProjection(std::move(locals));
}

inline DensityState as_density(const ProductProjection &p) { return DensityState(p.matrix(), p.shape()); }

/// exp(i H) for a random Hermitian H.
inline CMatrix random_unitary(std::size_t n, std::mt19937_64 &rng) {
    const EigenSystem es = hermitian_eigen(random_hermitian(n, rng));
    CMatrix u(n);
    for (std::size_t k = 0; k < n; k++) {
        const CVector &v = es.vectors[k];
        u += CMatrix::outer(v, v) * std::exp(cplx(0, es.values[k]));
    }
    return u;
}

inline CMatrix pauli_x() { return pauli(1); }
inline CMatrix pauli_y() { return pauli(2); }
inline CMatrix pauli_z() { return pauli(3); }

}  // namespace witgeom::testing
