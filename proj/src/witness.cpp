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

#include "witgeom/witness.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace witgeom {

Witness nearest_witness(const DensityState &rho0, const DensityState &tau0) {
    if (rho0.shape() != tau0.shape()) {
        throw InputError("nearest_witness: shape mismatch");
    }
    const CMatrix diff = rho0.mat() - tau0.mat();
    const double dist2 = hs_inner(diff, diff).real();
    if (std::sqrt(dist2) <= 1e-12) {
        throw InputError("nearest_witness: rho0 coincides with tau0");
    }
    const double c0 = hs_inner(tau0.mat(), diff).real();
    CMatrix w = tau0.mat() + CMatrix::identity(rho0.dim()) * c0 - rho0.mat();

    const double at_target = evaluate(w, rho0);
    if (std::abs(at_target + dist2) > 1e-10) {
        throw ConsistencyError("nearest_witness: Tr(W rho0) = " + std::to_string(at_target) +
                               " differs from -||rho0 - tau0||^2");
    }
    return Witness{std::move(w), c0, rho0, tau0, std::nullopt, std::nullopt};
}

Witness segment_witness(const DensityState &rho0, const DensityState &tau0, double s0) {
    if (!(s0 > 0.0 && s0 < 1.0)) {
        throw InputError("segment_witness: s0 must lie in (0, 1)");
    }
    if (rho0.shape() != tau0.shape()) {
        throw InputError("segment_witness: shape mismatch");
    }
    const auto n = static_cast<double>(rho0.dim());
    const CMatrix id = CMatrix::identity(rho0.dim());
    DensityState tilde(id * ((1.0 - s0) / n) + rho0.mat() * s0, rho0.shape());
    const double c0 = hs_inner(tau0.mat(), rho0.mat() - tau0.mat()).real();
    CMatrix w = id * (c0 + (1.0 - s0) / (n * s0)) + tau0.mat() - tilde.mat() * (1.0 / s0);
    return Witness{std::move(w), c0, rho0, tau0, s0, std::move(tilde)};
}

double evaluate(const CMatrix &w, const DensityState &rho) {
    if (w.dim() != rho.dim()) {
        throw InputError("evaluate: dimension mismatch");
    }
    return expectation(w, rho);
}

double evaluate(const Witness &w, const DensityState &rho) {
    if (w.rho0.shape() != rho.shape()) {
        throw InputError("evaluate: shape mismatch");
    }
    return evaluate(w.w, rho);
}

double lemma1_threshold(double a, double b, double delta) {
    if (!(a >= 0.0 && b >= 0.0) || std::abs(a * a + b * b - 1.0) > 1e-10) {
        throw InputError("lemma1_threshold: requires a, b >= 0 with a^2 + b^2 = 1");
    }
    if (!(delta >= 0.0)) {
        throw InputError("lemma1_threshold: delta must be nonnegative");
    }
    return (1.0 + 4.0 * delta) / (4.0 * a * b + 1.0 + 4.0 * delta);
}

bool lemma2_predicate(int d, std::span<const double> a, double p, double delta) {
    if (a.size() != static_cast<std::size_t>(d) || d < 2) {
        throw InputError("lemma2_predicate: expected d amplitudes");
    }
    if (!(p > 0.0 && p <= 1.0)) {
        throw InputError("lemma2_predicate: p must lie in (0, 1]");
    }
    const double n2 = std::inner_product(a.begin(), a.end(), a.begin(), 0.0);
    if (std::abs(n2 - 1.0) > 1e-10) {
        throw InputError("lemma2_predicate: amplitudes are not normalized");
    }
    const double sum = std::accumulate(a.begin(), a.end(), 0.0);
    const double lhs = (1.0 - p) / p * (1.0 - 1.0 / d + delta * std::sqrt(2.0 * d * (d - 1.0)));
    return lhs < sum * sum - 1.0;
}

bool frustum_predicate(double p, double delta, int n_total, int m, double b, double eps) {
    if (!(b > 0.0 && b <= m && m < n_total) || !(eps > 0.0)) {
        throw InputError("frustum_predicate: requires 0 < b <= m < N and eps > 0");
    }
    const double lhs = p * (m - b) / (n_total - b) + (1.0 - p) / n_total + (1.0 - p) * delta / std::sqrt(m);
    return lhs < eps / m;
}

}  // namespace witgeom
