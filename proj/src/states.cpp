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

#include "witgeom/states.hpp"

#include <cmath>
#include <random>
#include <string>

namespace witgeom {

namespace {

constexpr double kEighth = 0.125;

/// Eigenvector of X (axis 1) or Y (axis 2) with eigenvalue s.
CVector pauli_eigenvector(int axis, int s) {
    const double h = 1.0 / std::sqrt(2.0);
    if (axis == 1) {
        return {h, s * h};
    }
    return {h, cplx(0, s * h)};
}

void check_close(const CMatrix &a, const CMatrix &b, double tolerance, const std::string &what) {
    const double diff = max_abs_diff(a, b);
    if (diff > tolerance) {
        throw ConsistencyError(what + ": routes disagree by " + std::to_string(diff));
    }
}

}  // namespace

ProductProjection::ProductProjection(std::vector<CVector> locals_) : locals(std::move(locals_)) {
    if (locals.empty()) {
        throw InputError("ProductProjection: no parties");
    }
    for (auto &v : locals) {
        double n2 = 0;
        for (const auto &z : v) {
            n2 += std::norm(z);
        }
        if (v.size() < 2 || n2 <= 0) {
            throw InputError("ProductProjection: local vectors must be nonzero with dimension >= 2");
        }
        const double inv = 1.0 / std::sqrt(n2);
        for (auto &z : v) {
            z *= inv;
        }
    }
}

CVector ProductProjection::vector() const { return tensor(std::span<const CVector>(locals)); }

CMatrix ProductProjection::matrix() const { return CMatrix::projector(vector()); }

SystemShape ProductProjection::shape() const {
    std::vector<int> dims;
    for (const auto &v : locals) {
        dims.push_back(static_cast<int>(v.size()));
    }
    return SystemShape(std::move(dims));
}

DensityState max_entangled(int d) {
    std::vector<double> a(static_cast<std::size_t>(d), 1.0 / std::sqrt(static_cast<double>(d)));
    return psi_a(d, a);
}

DensityState psi_a(int d, std::span<const double> a) {
    if (d < 2) {
        throw InputError("psi_a: d must be >= 2");
    }
    if (a.size() != static_cast<std::size_t>(d)) {
        throw InputError("psi_a: expected " + std::to_string(d) + " amplitudes");
    }
    double n2 = 0;
    for (double x : a) {
        n2 += x * x;
    }
    if (std::abs(n2 - 1.0) > 1e-10) {
        throw InputError("psi_a: amplitudes are not normalized (sum of squares " + std::to_string(n2) + ")");
    }
    const auto n = static_cast<std::size_t>(d);
    CVector psi(n * n);
    for (std::size_t k = 0; k < n; k++) {
        psi[k * n + k] = a[k];
    }
    return DensityState::pure(psi, SystemShape::bipartite(d));
}

DensityState noisy_mixture(double p, const DensityState &rho_a, const DensityState &sigma) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InputError("noisy_mixture: p must lie in [0, 1]");
    }
    if (rho_a.shape() != sigma.shape()) {
        throw InputError("noisy_mixture: shape mismatch");
    }
    return DensityState(rho_a.mat() * p + sigma.mat() * (1.0 - p), rho_a.shape());
}

DensityState noise_ball(const SystemShape &shape, double delta, std::uint64_t seed) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw InputError("noise_ball: delta must lie in (0, 1)");
    }
    const std::size_t n = shape.total();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix h(n);
    for (std::size_t i = 0; i < n; i++) {
        h(i, i) = normal(rng);
        for (std::size_t j = i + 1; j < n; j++) {
            const double re = normal(rng);
            const double im = normal(rng);
            h(i, j) = cplx(re, im);
            h(j, i) = cplx(re, -im);
        }
    }
    const cplx shift = h.trace() / static_cast<double>(n);
    for (std::size_t i = 0; i < n; i++) {
        h(i, i) -= shift;
    }
    h *= 1.0 / hs_norm(h);

    const CMatrix d0 = CMatrix::identity(n) * (1.0 / static_cast<double>(n));
    double scale = 0.9 * delta;
    for (;;) {
        CMatrix sigma = d0 + h * scale;
        if (min_eigenvalue(sigma) >= 0.0) {
            return DensityState(std::move(sigma), shape);
        }
        scale *= 0.5;
    }
}

DensityState tau0_closed_form(int d) {
    const DensityState rho0 = max_entangled(d);
    const auto n = static_cast<std::size_t>(d * d);
    const double w = 1.0 / (d + 1.0);
    CMatrix tau = CMatrix::identity(n) * (d * w / static_cast<double>(n)) + rho0.mat() * w;
    return DensityState(std::move(tau), rho0.shape());
}

DensityState ghz(int n) {
    if (n < 2) {
        throw InputError("ghz: n must be >= 2");
    }
    const SystemShape shape = SystemShape::qubits(n);
    CVector psi(shape.total());
    psi.front() = 1.0 / std::sqrt(2.0);
    psi.back() = 1.0 / std::sqrt(2.0);
    return DensityState::pure(psi, shape);
}

DeltaQ delta_and_q(int n) {
    if (n < 2) {
        throw InputError("delta_and_q: n must be >= 2");
    }
    const SystemShape shape = SystemShape::qubits(n);
    const std::size_t big = shape.total();
    CMatrix delta(big);
    delta(0, 0) = 0.5;
    delta(big - 1, big - 1) = 0.5;
    const double inv = 1.0 / static_cast<double>(big);
    CMatrix q = CMatrix::identity(big) * inv;
    q(0, big - 1) = inv;
    q(big - 1, 0) = inv;
    return {DensityState(std::move(delta), shape), DensityState(std::move(q), shape)};
}

double ghz_s0(int n) {
    if (n < 2) {
        throw InputError("ghz_s0: n must be >= 2");
    }
    return 1.0 / (std::ldexp(1.0, n - 1) + 1.0);
}

DensityState tau_tilde_ghz(int n) {
    const double s0 = ghz_s0(n);
    const DensityState rho0 = ghz(n);
    const auto [delta, q] = delta_and_q(n);
    const DensityState d0 = DensityState::maximally_mixed(rho0.shape());
    CMatrix segment = d0.mat() * (1.0 - s0) + rho0.mat() * s0;
    const CMatrix face = delta.mat() * s0 + q.mat() * (1.0 - s0);
    check_close(segment, face, 1e-12, "tau_tilde_ghz");
    return DensityState(std::move(segment), rho0.shape());
}

CMatrix FourVector::matrix() const {
    CMatrix m = CMatrix::identity(8) * kEighth;
    for (std::size_t i = 0; i < 4; i++) {
        const std::size_t row = 3 - i;
        m(row, 7 - row) = v[i];
        m(7 - row, row) = v[i];
    }
    return m;
}

CMatrix pauli(int axis) {
    switch (axis) {
        case 0:
            return CMatrix::identity(2);
        case 1:
            return CMatrix(2, {0, 1, 1, 0});
        case 2:
            return CMatrix(2, {0, cplx(0, -1), cplx(0, 1), 0});
        case 3:
            return CMatrix(2, {1, 0, 0, -1});
        default:
            throw InputError("pauli: axis must be 0..3");
    }
}

PauliCombo pauli_combo(int j, int k, int l, int sign) {
    for (int axis : {j, k, l}) {
        if (axis != 1 && axis != 2) {
            throw InputError("pauli_combo: indices must be 1 (X) or 2 (Y)");
        }
    }
    if (sign != 1 && sign != -1) {
        throw InputError("pauli_combo: sign must be +1 or -1");
    }
    const std::array<CMatrix, 3> sig{pauli(j), pauli(k), pauli(l)};
    CMatrix density = CMatrix::identity(8) + tensor(sig) * static_cast<double>(sign);
    density *= kEighth;

    std::vector<ProductProjection> products;
    for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
            products.emplace_back(std::vector<CVector>{pauli_eigenvector(j, s1), pauli_eigenvector(k, s2),
                                                       pauli_eigenvector(l, sign * s1 * s2)});
        }
    }
    return {std::move(density), std::move(products)};
}

DensityState rho_mt(double m, double t) { return rho_cd(m + t, m - t); }

DensityState rho_cd(double c, double d) {
    constexpr double slack = 1e-15;
    if (std::abs(c) > kEighth + slack || std::abs(d) > kEighth + slack) {
        throw InputError("rho_cd: parameters must satisfy -1/8 <= c, d <= 1/8");
    }
    CMatrix direct = FourVector{{d, c, kEighth, kEighth}}.matrix();

    const double m = 0.5 * (c + d);
    const double t = 0.5 * (c - d);
    const CMatrix d0 = CMatrix::identity(8) * kEighth;
    const CMatrix via_p = pauli_combo(1, 1, 1, 1).density * (0.5 + 4 * m) +
                          pauli_combo(2, 2, 1, -1).density * (0.5 - 4 * m) +
                          (pauli_combo(2, 1, 2, -1).density + pauli_combo(1, 2, 2, 1).density) * (4 * t) -
                          d0 * (8 * t);
    check_close(direct, via_p, 1e-12, "rho_cd");
    return DensityState(std::move(direct), SystemShape::qubits(3));
}

ThreeQubitCandidates tau_candidates_3q(double m, double t) {
    if (!(t > 0.0)) {
        throw InputError("tau_candidates_3q: t must be positive (apply the c <-> d symmetry first)");
    }
    const DensityState rho = rho_mt(m, t);
    const FourVector fv{{m - t / 2, m + t / 2, kEighth - t / 2, kEighth - t / 2}};
    for (double x : fv.v) {
        if (std::abs(x) > kEighth + 1e-15) {
            throw InputError("tau_candidates_3q: anti-diagonal entry exceeds 1/8");
        }
    }
    DensityState tau0(fv.matrix(), rho.shape());
    CMatrix tilde = (rho.mat() + CMatrix::identity(8) * (t)) * (1.0 / (1.0 + 8 * t));
    return {std::move(tau0), DensityState(std::move(tilde), rho.shape())};
}

CMatrix three_qubit_swap_unitary() {
    const std::array<CMatrix, 3> f{pauli(0), pauli(0), pauli(1)};
    return tensor(f);
}

}  // namespace witgeom
