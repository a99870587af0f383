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

#include "witgeom/separability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "witgeom/random.hpp"

namespace witgeom {

double PptReport::min() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto &c : cuts) {
        m = std::min(m, c.min_eigenvalue);
    }
    return m;
}

PptReport ppt_report(const DensityState &rho) {
    PptReport rep;
    const int n = rho.shape().parties();
    // Subsets of {1, .., n-1}; the complement of each contains party 0.
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); mask++) {
        std::vector<int> parties;
        for (int p = 1; p < n; p++) {
            if (mask & (std::uint64_t{1} << (p - 1))) {
                parties.push_back(p);
            }
        }
        rep.cuts.push_back({parties, min_eigenvalue(partial_transpose(rho, parties))});
    }
    return rep;
}

namespace {

/// <Psi_i | H | Psi_j> with Psi_i = psi_1 x .. x e_i (slot `party`) x .. x psi_n.
CMatrix effective_operator(const CMatrix &h, const std::vector<CVector> &locals, int party) {
    const int d = static_cast<int>(locals[static_cast<std::size_t>(party)].size());
    std::vector<CVector> embedded;
    embedded.reserve(static_cast<std::size_t>(d));
    auto factors = locals;
    for (int i = 0; i < d; i++) {
        CVector e(static_cast<std::size_t>(d));
        e[static_cast<std::size_t>(i)] = 1.0;
        factors[static_cast<std::size_t>(party)] = e;
        embedded.push_back(tensor(std::span<const CVector>(factors)));
    }
    CMatrix out(static_cast<std::size_t>(d));
    for (int j = 0; j < d; j++) {
        const CVector hj = h.apply(embedded[static_cast<std::size_t>(j)]);
        for (int i = 0; i < d; i++) {
            cplx acc = 0;
            const auto &ei = embedded[static_cast<std::size_t>(i)];
            for (std::size_t x = 0; x < ei.size(); x++) {
                acc += std::conj(ei[x]) * hj[x];
            }
            out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = acc;
        }
    }
    // Remove rounding asymmetry before the Hermitian eigensolve.
    return (out + out.adjoint()) * 0.5;
}

double product_value(const CMatrix &h, const std::vector<CVector> &locals) {
    const CVector psi = tensor(std::span<const CVector>(locals));
    const CVector hpsi = h.apply(psi);
    cplx acc = 0;
    for (std::size_t x = 0; x < psi.size(); x++) {
        acc += std::conj(psi[x]) * hpsi[x];
    }
    return acc.real();
}

}  // namespace

SeeSawResult min_over_products(const CMatrix &h, const SystemShape &shape, const SeeSawConfig &cfg) {
    if (cfg.restarts < 1 || !(cfg.tol > 0.0) || cfg.max_sweeps < 1) {
        throw InputError("min_over_products: restarts >= 1, max_sweeps >= 1 and tol > 0 required");
    }
    if (h.dim() != shape.total()) {
        throw InputError("min_over_products: operator dimension does not match shape");
    }
    if (!is_hermitian(h)) {
        throw InputError("min_over_products: operator is not Hermitian");
    }
    const double slack = 1e-12 * std::max(1.0, h.max_abs());
    bool monotone = true;
    std::vector<double> finals;
    std::vector<std::vector<CVector>> argmins;
    for (int r = 0; r < cfg.restarts; r++) {
        std::mt19937_64 rng(mix_seed(cfg.seed, static_cast<std::uint64_t>(r)));
        std::vector<CVector> locals;
        for (int d : shape.dims()) {
            locals.push_back(random_unit_vector(d, rng));
        }
        double value = product_value(h, locals);
        for (int sweep = 0; sweep < cfg.max_sweeps; sweep++) {
            const double before = value;
            for (int p = 0; p < shape.parties(); p++) {
                auto eig = hermitian_eigen(effective_operator(h, locals, p));
                locals[static_cast<std::size_t>(p)] = std::move(eig.vectors.front());
                const double next = eig.values.front();
                if (next > value + slack) {
                    monotone = false;
                }
                value = next;
            }
            if (before - value < cfg.tol) {
                break;
            }
        }
        finals.push_back(product_value(h, locals));
        argmins.push_back(std::move(locals));
    }
    // Ties resolve to the lowest restart index.
    std::size_t best = 0;
    for (std::size_t r = 1; r < finals.size(); r++) {
        if (finals[r] < finals[best]) {
            best = r;
        }
    }
    const int consensus = static_cast<int>(
        std::count_if(finals.begin(), finals.end(), [&](double v) { return v <= finals[best] + 1e-9; }));
    return SeeSawResult{finals[best], ProductProjection(argmins[best]), consensus, cfg.restarts, monotone,
                        std::move(finals)};
}

double bell_c(const std::array<double, 3> &phi) {
    const auto [a, b, c] = phi;
    return std::cos(a + b + c) + std::cos(a + b - c) + std::cos(a - b + c) - std::cos(a - b - c);
}

double bell_objective(const std::array<double, 3> &theta, const std::array<double, 3> &phi) {
    return std::sin(2 * theta[0]) * std::sin(2 * theta[1]) * std::sin(2 * theta[2]) * bell_c(phi);
}

CMatrix three_qubit_integer_witness() {
    CMatrix w = CMatrix::identity(8);
    const double anti[4] = {2, -2, -2, -2};  // (3,4), (2,5), (1,6), (0,7)
    for (std::size_t i = 0; i < 4; i++) {
        const std::size_t row = 3 - i;
        w(row, 7 - row) = anti[i];
        w(7 - row, row) = anti[i];
    }
    return w;
}

BellBoundResult bell_bound_3q(int restarts, std::uint64_t seed) {
    if (restarts < 1) {
        throw InputError("bell_bound_3q: restarts must be >= 1");
    }
    BellBoundResult best{-std::numeric_limits<double>::infinity(), {}, {}, restarts};
    for (int r = 0; r < restarts; r++) {
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
        std::uniform_real_distribution<double> th(0.0, std::numbers::pi / 2);
        std::uniform_real_distribution<double> ph(-std::numbers::pi, std::numbers::pi);
        std::array<double, 6> x{th(rng), th(rng), th(rng), ph(rng), ph(rng), ph(rng)};
        auto f = [](const std::array<double, 6> &v) {
            return bell_objective({v[0], v[1], v[2]}, {v[3], v[4], v[5]});
        };
        auto grad = [](const std::array<double, 6> &v) {
            const double s0 = std::sin(2 * v[0]), s1 = std::sin(2 * v[1]), s2 = std::sin(2 * v[2]);
            const double c = bell_c({v[3], v[4], v[5]});
            const double sa = std::sin(v[3] + v[4] + v[5]);
            const double sb = std::sin(v[3] + v[4] - v[5]);
            const double sd = std::sin(v[3] - v[4] + v[5]);
            const double se = std::sin(v[3] - v[4] - v[5]);
            const double amp = s0 * s1 * s2;
            return std::array<double, 6>{2 * std::cos(2 * v[0]) * s1 * s2 * c, 2 * std::cos(2 * v[1]) * s0 * s2 * c,
                                         2 * std::cos(2 * v[2]) * s0 * s1 * c, amp * (-sa - sb - sd + se),
                                         amp * (-sa - sb + sd - se), amp * (-sa + sb - sd - se)};
        };
        double fx = f(x);
        double step = 0.5;
        for (int it = 0; it < 20000; it++) {
            const auto g = grad(x);
            double g2 = 0;
            for (double gi : g) {
                g2 += gi * gi;
            }
            if (g2 < 1e-28) {
                break;
            }
            bool moved = false;
            while (step > 1e-16) {
                auto y = x;
                for (std::size_t i = 0; i < 6; i++) {
                    y[i] += step * g[i];
                }
                const double fy = f(y);
                if (fy >= fx + 0.25 * step * g2) {
                    x = y;
                    fx = fy;
                    moved = true;
                    step *= 2;
                    break;
                }
                step *= 0.5;
            }
            if (!moved) {
                break;
            }
        }
        if (fx > best.max) {
            best.max = fx;
            best.theta = {x[0], x[1], x[2]};
            best.phi = {x[3], x[4], x[5]};
        }
    }
    return best;
}

}  // namespace witgeom
