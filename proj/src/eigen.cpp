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

// Cyclic Jacobi diagonalization of a complex Hermitian matrix.
//
// Each rotation first removes the phase of the pivot a_pq with
// D = diag(1, e^{-i arg a_pq}) and then applies the real symmetric Jacobi
// rotation to the resulting real 2x2 block. Sweeps visit (p, q) in row order.

#include <algorithm>
#include <cmath>
#include <numeric>

#include "witgeom/matrix.hpp"

namespace witgeom {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm2(const CMatrix &a) {
    double s = 0;
    for (std::size_t i = 0; i < a.dim(); i++) {
        for (std::size_t j = 0; j < a.dim(); j++) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return s;
}

}  // namespace

EigenSystem hermitian_eigen(const CMatrix &input) {
    if (!is_hermitian(input, tol::herm)) {
        throw InputError("hermitian_eigen: input is not Hermitian");
    }
    const std::size_t n = input.dim();
    CMatrix a = input;
    for (std::size_t i = 0; i < n; i++) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; j++) {
            cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }
    CMatrix v = CMatrix::identity(n);

    double total = 0;
    for (const auto &z : a.entries()) {
        total += std::norm(z);
    }
    const double stop = 1e-30 * std::max(total, 1e-300);

    for (int sweep = 0; sweep < kMaxSweeps; sweep++) {
        if (off_diagonal_norm2(a) <= stop) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) {
                    continue;
                }
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Skip pivots that no longer affect the diagonal at working precision.
                if (sweep > 3 && std::abs(app) + 100 * mag == std::abs(app) &&
                    std::abs(aqq) + 100 * mag == std::abs(aqq)) {
                    a(p, q) = 0;
                    a(q, p) = 0;
                    continue;
                }
                const cplx phase = apq / mag;
                const double theta = (aqq - app) / (2.0 * mag);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0) {
                    t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // U restricted to (p, q): [[c, s], [-s e^{-i phi}, c e^{-i phi}]].
                const cplx u00 = c;
                const cplx u01 = s;
                const cplx u10 = -s * std::conj(phase);
                const cplx u11 = c * std::conj(phase);

                for (std::size_t k = 0; k < n; k++) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = akp * u00 + akq * u10;
                    a(k, q) = akp * u01 + akq * u11;
                }
                for (std::size_t k = 0; k < n; k++) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = std::conj(u00) * apk + std::conj(u10) * aqk;
                    a(q, k) = std::conj(u01) * apk + std::conj(u11) * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; k++) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = vkp * u00 + vkq * u10;
                    v(k, q) = vkp * u01 + vkq * u11;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    EigenSystem out;
    out.values.reserve(n);
    out.vectors.reserve(n);
    for (std::size_t idx : order) {
        out.values.push_back(a(idx, idx).real());
        CVector col(n);
        for (std::size_t k = 0; k < n; k++) {
            col[k] = v(k, idx);
        }
        out.vectors.push_back(std::move(col));
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const CMatrix &a) { return hermitian_eigen(a).values; }

double min_eigenvalue(const CMatrix &a) { return hermitian_eigen(a).values.front(); }

int numerical_rank(const CMatrix &a, double threshold) {
    const auto values = hermitian_eigenvalues(a);
    return static_cast<int>(std::count_if(values.begin(), values.end(), [&](double x) { return x > threshold; }));
}

}  // namespace witgeom
