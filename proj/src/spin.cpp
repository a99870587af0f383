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

#include "witgeom/spin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace witgeom {

namespace {

long long mod(long long a, long long d) {
    long long r = a % d;
    return r < 0 ? r + d : r;
}

CMatrix matrix_power(const CMatrix &a, int m) {
    CMatrix out = CMatrix::identity(a.dim());
    for (int i = 0; i < m; i++) {
        out = out * a;
    }
    return out;
}

}  // namespace

SpinIndex::SpinIndex(int d_, int j_, int k_) : d(d_), j(0), k(0) {
    if (d < 2) {
        throw InputError("SpinIndex: d must be >= 2, got " + std::to_string(d));
    }
    j = static_cast<int>(mod(j_, d));
    k = static_cast<int>(mod(k_, d));
}

SpinIndex SpinIndex::scaled(long long m) const {
    return SpinIndex(d, static_cast<int>(mod(m * j, d)), static_cast<int>(mod(m * k, d)));
}

bool is_prime(int n) {
    if (n < 2) {
        return false;
    }
    for (int f = 2; f * f <= n; f++) {
        if (n % f == 0) {
            return false;
        }
    }
    return true;
}

cplx eta_power(int d, long long e) {
    const long long r = mod(e, d);
    if (r == 0) {
        return 1.0;
    }
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(d);
    return std::polar(1.0, angle);
}

CMatrix spin_matrix(const SpinIndex &u) {
    CMatrix s(static_cast<std::size_t>(u.d));
    for (int r = 0; r < u.d; r++) {
        s(static_cast<std::size_t>(r), static_cast<std::size_t>((r + u.k) % u.d)) =
            eta_power(u.d, static_cast<long long>(u.j) * r);
    }
    return s;
}

SpinCoefficients::SpinCoefficients(int d, std::vector<cplx> values) : d_(d), values_(std::move(values)) {
    if (values_.size() != static_cast<std::size_t>(d * d)) {
        throw InputError("SpinCoefficients: expected d^2 values");
    }
}

SpinCoefficients spin_expand(const CMatrix &alpha, int d) {
    if (d < 2 || alpha.dim() != static_cast<std::size_t>(d)) {
        throw InputError("spin_expand: matrix dimension " + std::to_string(alpha.dim()) + " does not match d=" +
                         std::to_string(d));
    }
    std::vector<cplx> values(static_cast<std::size_t>(d * d));
    for (int j = 0; j < d; j++) {
        for (int k = 0; k < d; k++) {
            // s_u = sum_r eta^{-jr} alpha_{r, r+k}
            cplx acc = 0;
            for (int r = 0; r < d; r++) {
                acc += eta_power(d, -static_cast<long long>(j) * r) *
                       alpha(static_cast<std::size_t>(r), static_cast<std::size_t>((r + k) % d));
            }
            values[static_cast<std::size_t>(j * d + k)] = acc;
        }
    }
    return SpinCoefficients(d, std::move(values));
}

CMatrix spin_reconstruct(const SpinCoefficients &s) {
    const int d = s.d();
    CMatrix out(static_cast<std::size_t>(d));
    for (int j = 0; j < d; j++) {
        for (int k = 0; k < d; k++) {
            out += spin_matrix(SpinIndex(d, j, k)) * s.at(j, k);
        }
    }
    return out * (1.0 / d);
}

CMatrix projection_P(const SpinIndex &u, int r) {
    const int d = u.d;
    if (u.is_identity()) {
        throw InputError("projection_P: u must differ from (0,0)");
    }
    if (!is_prime(d)) {
        throw InputError("projection_P: d=" + std::to_string(d) + " is not prime");
    }
    if (d == 2 && (u.j * u.k) % 2 == 1) {
        throw InputError("projection_P: d=2 with j and k both odd is unsupported");
    }
    CMatrix out(static_cast<std::size_t>(d));
    const long long jk = static_cast<long long>(u.j) * u.k;
    for (long long m = 0; m < d; m++) {
        const long long exponent = m * r + jk * (m * (m - 1) / 2);
        out += spin_matrix(u.scaled(m)) * eta_power(d, exponent);
    }
    return out * (1.0 / d);
}

double SpinRelationsReport::max_deviation() const {
    return std::max({orthogonality, commutation, generation, power, adjoint, unitarity});
}

SpinRelationsReport spin_relations_check(int d) {
    SpinRelationsReport rep;
    rep.d = d;
    const auto n = static_cast<std::size_t>(d);
    const CMatrix s10 = spin_matrix(SpinIndex(d, 1, 0));
    const CMatrix s01 = spin_matrix(SpinIndex(d, 0, 1));
    const CMatrix id = CMatrix::identity(n);

    rep.commutation = max_abs_diff(s01 * s10, s10 * s01 * eta_power(d, 1));

    std::vector<CMatrix> all;
    for (int j = 0; j < d; j++) {
        for (int k = 0; k < d; k++) {
            all.push_back(spin_matrix(SpinIndex(d, j, k)));
        }
    }
    for (std::size_t a = 0; a < all.size(); a++) {
        for (std::size_t b = 0; b < all.size(); b++) {
            const cplx expected = a == b ? cplx(d) : cplx(0);
            rep.orthogonality = std::max(rep.orthogonality, std::abs(hs_inner(all[a], all[b]) - expected));
        }
    }

    for (int j = 0; j < d; j++) {
        for (int k = 0; k < d; k++) {
            const SpinIndex u(d, j, k);
            const CMatrix &s = all[static_cast<std::size_t>(j * d + k)];
            rep.unitarity = std::max(rep.unitarity, max_abs_diff(s.adjoint() * s, id));
            rep.generation = std::max(rep.generation, max_abs_diff(s, matrix_power(s10, j) * matrix_power(s01, k)));
            const CMatrix adj = spin_matrix(SpinIndex(d, d - j, d - k)) * eta_power(d, static_cast<long long>(j) * k);
            rep.adjoint = std::max(rep.adjoint, max_abs_diff(s.adjoint(), adj));
            CMatrix pw = id;
            for (long long m = 0; m < d; m++) {
                const long long e = static_cast<long long>(j) * k * (m * (m - 1) / 2);
                rep.power = std::max(rep.power, max_abs_diff(pw, spin_matrix(u.scaled(m)) * eta_power(d, e)));
                pw = pw * s;
            }
        }
    }
    return rep;
}

}  // namespace witgeom
