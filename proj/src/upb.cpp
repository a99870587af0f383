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

#include "witgeom/upb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace witgeom {

namespace {

CVector unit(std::initializer_list<cplx> v) {
    CVector out(v);
    double n2 = 0;
    for (const auto &z : out) {
        n2 += std::norm(z);
    }
    for (auto &z : out) {
        z /= std::sqrt(n2);
    }
    return out;
}

/// Orthonormal basis of C^d whose first element is v.
std::vector<CVector> complete_basis(const CVector &v) {
    const std::size_t d = v.size();
    std::vector<CVector> basis{v};
    for (std::size_t e = 0; e < d && basis.size() < d; e++) {
        CVector cand(d);
        cand[e] = 1.0;
        for (const auto &b : basis) {
            cplx ov = 0;
            for (std::size_t x = 0; x < d; x++) {
                ov += std::conj(b[x]) * cand[x];
            }
            for (std::size_t x = 0; x < d; x++) {
                cand[x] -= ov * b[x];
            }
        }
        double n2 = 0;
        for (const auto &z : cand) {
            n2 += std::norm(z);
        }
        if (n2 > 1e-6) {
            for (auto &z : cand) {
                z /= std::sqrt(n2);
            }
            basis.push_back(std::move(cand));
        }
    }
    return basis;
}

}  // namespace

UpbSet::UpbSet(SystemShape shape, std::vector<ProductProjection> vectors)
    : shape_(std::move(shape)), vectors_(std::move(vectors)) {
    if (vectors_.empty()) {
        throw InputError("UpbSet: empty family");
    }
    for (const auto &v : vectors_) {
        if (v.shape() != shape_) {
            throw InputError("UpbSet: product vector factors do not match the shape");
        }
    }
    if (vectors_.size() >= shape_.total()) {
        throw InputError("UpbSet: m must be smaller than N");
    }
    const CMatrix g = gram();
    if (max_abs_diff(g, CMatrix::identity(g.dim())) > 1e-10) {
        throw InputError("UpbSet: vectors are not orthonormal");
    }
}

CMatrix UpbSet::gram() const {
    const std::size_t m = vectors_.size();
    std::vector<CVector> full;
    for (const auto &v : vectors_) {
        full.push_back(v.vector());
    }
    CMatrix g(m);
    for (std::size_t i = 0; i < m; i++) {
        for (std::size_t j = 0; j < m; j++) {
            cplx acc = 0;
            for (std::size_t x = 0; x < full[i].size(); x++) {
                acc += std::conj(full[i][x]) * full[j][x];
            }
            g(i, j) = acc;
        }
    }
    return g;
}

UpbSet upb_tiles() {
    const CVector k0{1, 0, 0};
    const CVector k2{0, 0, 1};
    const CVector m01 = unit({1, -1, 0});
    const CVector m12 = unit({0, 1, -1});
    const CVector stop = unit({1, 1, 1});
    std::vector<ProductProjection> v;
    v.emplace_back(std::vector<CVector>{k0, m01});
    v.emplace_back(std::vector<CVector>{k2, m12});
    v.emplace_back(std::vector<CVector>{m01, k2});
    v.emplace_back(std::vector<CVector>{m12, k0});
    v.emplace_back(std::vector<CVector>{stop, stop});
    return UpbSet(SystemShape::bipartite(3), std::move(v));
}

DensityState mu0(const UpbSet &upb) {
    CMatrix acc(upb.shape().total());
    for (const auto &v : upb.vectors()) {
        acc += v.matrix();
    }
    return DensityState(acc * (1.0 / upb.m()), upb.shape());
}

DensityState bound_entangled(const UpbSet &upb) {
    const double n = upb.n_total();
    const double m = upb.m();
    const CMatrix rho = CMatrix::identity(upb.shape().total()) * (1.0 / (n - m)) - mu0(upb).mat() * (m / (n - m));
    return DensityState(rho, upb.shape());
}

double EpsilonEstimate::s0() const { return 1.0 - epsilon * n_total / m; }

EpsilonEstimate estimate_epsilon(const DensityState &mu, int m, const SeeSawConfig &cfg) {
    if (m < 1 || static_cast<std::size_t>(m) >= mu.dim()) {
        throw InputError("estimate_epsilon: m must satisfy 1 <= m < N");
    }
    auto res = min_over_products(mu.mat(), mu.shape(), cfg);
    if (res.value <= 1e-12) {
        throw InputError("estimate_epsilon: minimum " + std::to_string(res.value) +
                         " over product states vanishes; the family is extendible");
    }
    const double eps = m * res.value;
    const auto n = static_cast<double>(mu.dim());
    if (eps >= m / n) {
        throw InputError("estimate_epsilon: eps >= m/N, inconsistent with an unextendible family");
    }
    return EpsilonEstimate{eps, res.value, std::move(res.argmin), res.consensus, res.restarts, m,
                           static_cast<int>(mu.dim())};
}

Witness farface_witness(const DensityState &mu, double eps, int m) {
    const auto n = static_cast<double>(mu.dim());
    if (!(eps > 0.0 && eps < m / n)) {
        throw InputError("farface_witness: eps must lie in (0, m/N)");
    }
    const CMatrix id = CMatrix::identity(mu.dim());
    CMatrix w = (mu.mat() - id * (eps / m)) * (eps * n / (n - m));

    DensityState rho0(id * (1.0 / (n - m)) - mu.mat() * (m / (n - m)), mu.shape());
    const double s0 = 1.0 - eps * n / m;
    DensityState tau0(id * ((1.0 - s0) / n) + rho0.mat() * s0, mu.shape());
    Witness via_segment = nearest_witness(rho0, tau0);
    const double dev = max_abs_diff(w, via_segment.w);
    if (dev > 1e-10) {
        throw ConsistencyError("farface_witness: closed form differs from the segment construction by " +
                               std::to_string(dev));
    }
    return Witness{std::move(w), via_segment.c0, std::move(rho0), tau0, s0, tau0};
}

WitnessDecomposition farface_decomposition(const UpbSet &upb, double eps) {
    const double n = upb.n_total();
    const double m = upb.m();
    if (!(eps > 0.0 && eps < m / n)) {
        throw InputError("farface_decomposition: eps must lie in (0, m/N)");
    }
    const double scale = eps * n / (n - m);
    WitnessDecomposition dec{upb.shape(), -scale * eps / m, {}};
    for (std::size_t k = 0; k < upb.vectors().size(); k++) {
        std::vector<std::vector<CVector>> bases;
        for (const auto &local : upb.vectors()[k].locals) {
            bases.push_back(complete_basis(local));
        }
        std::vector<double> weights(upb.shape().total(), 0.0);
        weights.front() = 1.0;
        dec.settings.push_back(
            {"phi_" + std::to_string(k + 1), scale / m, MeasurementSetting::from_vectors(bases, weights)});
    }
    return dec;
}

double rho_b_parameter(std::span<const double> p) {
    if (p.empty()) {
        throw InputError("rho_b_parameter: empty weights");
    }
    const double top = *std::max_element(p.begin(), p.end());
    if (!(top > 0.0)) {
        throw InputError("rho_b_parameter: largest weight must be positive");
    }
    return 1.0 / top;
}

DensityState rho_b(const UpbSet &upb, std::span<const double> p) {
    if (p.size() != upb.vectors().size()) {
        throw InputError("rho_b: expected one weight per UPB member");
    }
    for (double x : p) {
        if (x < 0.0) {
            throw InputError("rho_b: weights must be nonnegative");
        }
    }
    if (std::abs(std::accumulate(p.begin(), p.end(), 0.0) - 1.0) > 1e-12) {
        throw InputError("rho_b: weights must sum to 1");
    }
    const double b = rho_b_parameter(p);
    const double n = upb.n_total();
    CMatrix mu_b(upb.shape().total());
    for (std::size_t k = 0; k < p.size(); k++) {
        mu_b += upb.vectors()[k].matrix() * p[k];
    }
    CMatrix rho = (CMatrix::identity(upb.shape().total()) - mu_b * b) * (1.0 / (n - b));
    return DensityState(std::move(rho), upb.shape());
}

}  // namespace witgeom
