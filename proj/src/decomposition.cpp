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

#include "witgeom/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "witgeom/random.hpp"
#include "witgeom/spin.hpp"

namespace witgeom {

namespace {

constexpr double kBasisTol = 1e-10;

std::vector<CMatrix> projectors(const std::vector<CVector> &vectors) {
    std::vector<CMatrix> out;
    out.reserve(vectors.size());
    for (const auto &v : vectors) {
        out.push_back(CMatrix::projector(v));
    }
    return out;
}

CVector qubit_state(double phi) {
    const double h = 1.0 / std::sqrt(2.0);
    return {h, std::polar(h, phi)};
}

std::vector<CVector> pauli_basis(int axis) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (axis) {
        case 1:
            return {{h, h}, {h, -h}};
        case 2:
            return {{h, cplx(0, h)}, {h, cplx(0, -h)}};
        case 3:
            return {{1, 0}, {0, 1}};
        default:
            throw InputError("pauli_basis: axis must be 1..3");
    }
}

}  // namespace

MeasurementSetting::MeasurementSetting(std::vector<std::vector<CMatrix>> party_bases, std::vector<double> weights)
    : party_bases_(std::move(party_bases)), weights_(std::move(weights)) {
    if (party_bases_.empty()) {
        throw InputError("MeasurementSetting: no parties");
    }
    std::size_t outcomes = 1;
    for (const auto &basis : party_bases_) {
        if (basis.empty()) {
            throw InputError("MeasurementSetting: empty party basis");
        }
        const std::size_t d = basis.front().dim();
        if (basis.size() != d) {
            throw InputError("MeasurementSetting: a party basis needs exactly d projections");
        }
        CMatrix sum(d);
        for (std::size_t r = 0; r < basis.size(); r++) {
            if (basis[r].dim() != d) {
                throw InputError("MeasurementSetting: projection dimensions differ within a party");
            }
            sum += basis[r];
            for (std::size_t s = 0; s < basis.size(); s++) {
                const CMatrix prod = basis[r] * basis[s];
                const double dev = r == s ? max_abs_diff(prod, basis[r]) : prod.max_abs();
                if (dev > kBasisTol) {
                    throw InputError("MeasurementSetting: projections are not orthogonal idempotents");
                }
            }
        }
        if (max_abs_diff(sum, CMatrix::identity(d)) > kBasisTol) {
            throw InputError("MeasurementSetting: party basis is not complete");
        }
        outcomes *= d;
    }
    if (weights_.size() != outcomes) {
        throw InputError("MeasurementSetting: expected " + std::to_string(outcomes) + " outcome weights");
    }
}

MeasurementSetting MeasurementSetting::from_vectors(const std::vector<std::vector<CVector>> &party_vectors,
                                                    std::vector<double> weights) {
    std::vector<std::vector<CMatrix>> bases;
    bases.reserve(party_vectors.size());
    for (const auto &vs : party_vectors) {
        bases.push_back(projectors(vs));
    }
    return MeasurementSetting(std::move(bases), std::move(weights));
}

SystemShape MeasurementSetting::shape() const {
    std::vector<int> dims;
    for (const auto &basis : party_bases_) {
        dims.push_back(static_cast<int>(basis.size()));
    }
    return SystemShape(std::move(dims));
}

std::vector<int> MeasurementSetting::outcome_digits(std::size_t outcome) const { return shape().digits(outcome); }

CMatrix MeasurementSetting::outcome_projector(std::size_t outcome) const {
    const auto digits = outcome_digits(outcome);
    std::vector<CMatrix> factors;
    factors.reserve(digits.size());
    for (std::size_t k = 0; k < digits.size(); k++) {
        factors.push_back(party_bases_[k][static_cast<std::size_t>(digits[k])]);
    }
    return tensor(std::span<const CMatrix>(factors));
}

CMatrix MeasurementSetting::observable() const {
    CMatrix out(shape().total());
    for (std::size_t o = 0; o < weights_.size(); o++) {
        if (weights_[o] != 0.0) {
            out += outcome_projector(o) * weights_[o];
        }
    }
    return out;
}

std::vector<double> MeasurementSetting::probabilities(const DensityState &rho) const {
    if (rho.dim() != shape().total()) {
        throw InputError("MeasurementSetting::probabilities: dimension mismatch");
    }
    std::vector<double> p(weights_.size());
    for (std::size_t o = 0; o < p.size(); o++) {
        p[o] = expectation(outcome_projector(o), rho);
    }
    return p;
}

CMatrix WitnessDecomposition::reconstruct() const {
    CMatrix out = CMatrix::identity(shape.total()) * identity_coeff;
    for (const auto &ws : settings) {
        out += ws.setting.observable() * ws.weight;
    }
    return out;
}

double WitnessDecomposition::exact_value(const DensityState &rho) const { return evaluate(reconstruct(), rho); }

WitnessDecomposition two_qubit_decomposition() {
    WitnessDecomposition dec{SystemShape::bipartite(2), 2.0 / 3.0, {}};
    const std::vector<double> equal{0.5, 0, 0, 0.5};
    const std::vector<double> opposite{0, 0.5, 0.5, 0};
    dec.settings.push_back({"z", -2.0 / 3.0, MeasurementSetting::from_vectors({pauli_basis(3), pauli_basis(3)}, equal)});
    dec.settings.push_back({"x", -2.0 / 3.0, MeasurementSetting::from_vectors({pauli_basis(1), pauli_basis(1)}, equal)});
    dec.settings.push_back(
        {"y", -2.0 / 3.0, MeasurementSetting::from_vectors({pauli_basis(2), pauli_basis(2)}, opposite)});
    return dec;
}

namespace {

void require_odd_prime(int d, const char *what) {
    if (d == 2 || !is_prime(d)) {
        throw InputError(std::string(what) + ": d=" + std::to_string(d) + " must be an odd prime");
    }
}

std::pair<SpinIndex, SpinIndex> qudit_setting_labels(int d, int j) {
    if (j < 0 || j > d) {
        throw InputError("qudit setting index out of range");
    }
    if (j == d) {
        return {SpinIndex(d, 1, 0), SpinIndex(d, d - 1, 0)};
    }
    return {SpinIndex(d, j, 1), SpinIndex(d, d - j, 1)};
}

}  // namespace

CMatrix qudit_setting_projections(int d, int j) {
    require_odd_prime(d, "qudit_setting_projections");
    const auto [u, v] = qudit_setting_labels(d, j);
    const auto n = static_cast<std::size_t>(d);
    CMatrix out(n * n);
    for (int r = 0; r < d; r++) {
        out += tensor(projection_P(u, r), projection_P(v, (d - r) % d));
    }
    return out * (1.0 / d);
}

CMatrix qudit_setting_spin_sum(int d, int j) {
    require_odd_prime(d, "qudit_setting_spin_sum");
    const auto n = static_cast<std::size_t>(d);
    CMatrix out(n * n);
    for (int k = 0; k < d; k++) {
        if (j == d) {
            out += tensor(spin_matrix(SpinIndex(d, k, 0)), spin_matrix(SpinIndex(d, d - k, 0)));
        } else {
            out += tensor(spin_matrix(SpinIndex(d, k * j, k)), spin_matrix(SpinIndex(d, k * d - k * j, k)));
        }
    }
    return out * (1.0 / (static_cast<double>(d) * d));
}

CMatrix qudit_tau0_spin_form(int d) {
    require_odd_prime(d, "qudit_tau0_spin_form");
    const auto n = static_cast<std::size_t>(d);
    CMatrix out(n * n);
    for (int j = 0; j <= d; j++) {
        out += qudit_setting_spin_sum(d, j);
    }
    return out * (1.0 / (d + 1.0));
}

WitnessDecomposition qudit_decomposition(int d) {
    require_odd_prime(d, "qudit_decomposition");
    WitnessDecomposition dec{SystemShape::bipartite(d), 2.0 / (1.0 + d), {}};
    const auto n = static_cast<std::size_t>(d);
    std::vector<double> weights(n * n, 0.0);
    for (int r = 0; r < d; r++) {
        weights[static_cast<std::size_t>(r) * n + static_cast<std::size_t>((d - r) % d)] = 1.0 / d;
    }
    const double setting_weight = -static_cast<double>(d) / (d + 1.0);
    // x-type setting first, then u_j = (j,1), v_j = (d-j,1).
    for (int idx = 0; idx <= d; idx++) {
        const int j = idx == 0 ? d : idx - 1;
        const auto [u, v] = qudit_setting_labels(d, j);
        std::vector<CMatrix> bu;
        std::vector<CMatrix> bv;
        for (int r = 0; r < d; r++) {
            bu.push_back(projection_P(u, r));
            bv.push_back(projection_P(v, r));
        }
        std::string label = "u=(" + std::to_string(u.j) + "," + std::to_string(u.k) + ") v=(" + std::to_string(v.j) +
                            "," + std::to_string(v.k) + ")";
        dec.settings.push_back({std::move(label), setting_weight, MeasurementSetting({bu, bv}, weights)});
    }
    return dec;
}

WitnessDecomposition three_qubit_decomposition(double t) {
    if (!(t > 0.0)) {
        throw InputError("three_qubit_decomposition: t must be positive");
    }
    struct Pattern {
        int j, k, l, sign;
        const char *label;
    };
    const Pattern patterns[] = {{1, 1, 1, 1, "P+_111"}, {2, 2, 1, -1, "P-_221"}, {2, 1, 2, -1, "P-_212"},
                                {1, 2, 2, 1, "P+_122"}};
    WitnessDecomposition dec{SystemShape::qubits(3), 1.25 * t, {}};
    for (const auto &p : patterns) {
        // Outcome 0 <-> eigenvalue +1. The four products in P^sign_jkl have
        // third-party eigenvalue sign * s1 * s2.
        std::vector<double> weights(8, 0.0);
        for (int o = 0; o < 8; o++) {
            const int s1 = (o & 4) ? -1 : 1;
            const int s2 = (o & 2) ? -1 : 1;
            const int s3 = (o & 1) ? -1 : 1;
            if (s3 == p.sign * s1 * s2) {
                weights[static_cast<std::size_t>(o)] = 0.25;
            }
        }
        dec.settings.push_back(
            {p.label, -2.0 * t,
             MeasurementSetting::from_vectors({pauli_basis(p.j), pauli_basis(p.k), pauli_basis(p.l)}, weights)});
    }
    return dec;
}

std::vector<ProductProjection> ghz_q_terms(int n) {
    if (n < 2) {
        throw InputError("ghz_q_terms: n must be >= 2");
    }
    // Phases pi (k + n b_j) / n with a common k in [0, n) and k + sum b even.
    std::vector<ProductProjection> terms;
    for (int k = 0; k < n; k++) {
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); bits++) {
            if ((k + std::popcount(bits)) % 2 != 0) {
                continue;
            }
            std::vector<CVector> locals;
            for (int party = 0; party < n; party++) {
                const int b = static_cast<int>((bits >> (n - 1 - party)) & 1U);
                locals.push_back(qubit_state(std::numbers::pi * (k + n * b) / n));
            }
            terms.emplace_back(std::move(locals));
        }
    }
    const auto [delta, q] = delta_and_q(n);
    CMatrix avg(q.dim());
    for (const auto &t : terms) {
        avg += t.matrix();
    }
    avg *= 1.0 / static_cast<double>(terms.size());
    const double dev = max_abs_diff(avg, q.mat());
    if (dev > 1e-12) {
        throw ConsistencyError("ghz_q_terms: product average differs from Q by " + std::to_string(dev));
    }
    return terms;
}

WitnessDecomposition conjugate_party(const WitnessDecomposition &dec, int party, const CMatrix &u) {
    if (party < 0 || party >= dec.shape.parties() || static_cast<int>(u.dim()) != dec.shape.dim(party)) {
        throw InputError("conjugate_party: party index or unitary dimension does not match");
    }
    if (max_abs_diff(u * u.adjoint(), CMatrix::identity(u.dim())) > 1e-12) {
        throw InputError("conjugate_party: matrix is not unitary");
    }
    WitnessDecomposition out{dec.shape, dec.identity_coeff, {}};
    for (const auto &ws : dec.settings) {
        auto bases = ws.setting.party_bases();
        for (auto &p : bases[static_cast<std::size_t>(party)]) {
            p = u * p * u.adjoint();
        }
        out.settings.push_back({ws.label, ws.weight, MeasurementSetting(std::move(bases), ws.setting.weights())});
    }
    return out;
}

GhzDecomposition ghz_decomposition(int n) {
    const DensityState rho0 = ghz(n);
    const auto [delta, q] = delta_and_q(n);
    const CMatrix to_delta = delta.mat() - q.mat();
    const CMatrix to_rho = rho0.mat() - q.mat();

    // ||rho0 - Q - x (Delta - Q)||^2 is a parabola in x.
    const double curvature = hs_inner(to_delta, to_delta).real();
    const double vertex = std::clamp(hs_inner(to_delta, to_rho).real() / curvature, 0.0, 1.0);
    auto objective = [&](double x) { return hs_norm(to_rho - to_delta * x); };
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.0;
    double hi = 1.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = objective(x1);
    double f2 = objective(x2);
    while (hi - lo > 1e-12) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = objective(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = objective(x2);
        }
    }
    const double golden = 0.5 * (lo + hi);
    if (std::abs(golden - vertex) > 1e-7) {
        throw ConsistencyError("ghz_decomposition: golden-section minimizer " + std::to_string(golden) +
                               " disagrees with parabola vertex " + std::to_string(vertex));
    }

    const double x = vertex;
    DensityState tau0(delta.mat() * x + q.mat() * (1.0 - x), rho0.shape());
    Witness witness = nearest_witness(rho0, tau0);

    // rho0 = Delta + 2^{n-1} Q - I/2, so tau0 + c0 I - rho0 collapses onto {I, Delta, Q}.
    const double half_n = std::ldexp(1.0, n - 1);
    const double a = witness.c0 + 0.5;
    const double b = 1.0 - x;
    const double c = half_n - 1.0 + x;
    const CMatrix abc = CMatrix::identity(rho0.dim()) * a - delta.mat() * b - q.mat() * c;
    const double dev = max_abs_diff(abc, witness.w);
    if (dev > 1e-10) {
        throw ConsistencyError("ghz_decomposition: a I - b Delta - c Q differs from the nearest-point witness by " +
                               std::to_string(dev));
    }

    WitnessDecomposition dec{rho0.shape(), a, {}};
    const auto big = static_cast<std::size_t>(std::ldexp(1.0, n));
    std::vector<double> corners(big, 0.0);
    corners.front() = 0.5;
    corners.back() = 0.5;
    std::vector<std::vector<CVector>> zbases(static_cast<std::size_t>(n), pauli_basis(3));
    dec.settings.push_back({"Delta:z", -b, MeasurementSetting::from_vectors(zbases, corners)});

    ghz_q_terms(n);  // certifies the product expansion of Q
    for (int k = 0; k < n; k++) {
        const double phi = std::numbers::pi * k / n;
        std::vector<std::vector<CVector>> bases(static_cast<std::size_t>(n),
                                                std::vector<CVector>{qubit_state(phi), qubit_state(phi + std::numbers::pi)});
        std::vector<double> weights(big, 0.0);
        for (std::size_t o = 0; o < big; o++) {
            if ((k + std::popcount(o)) % 2 == 0) {
                weights[o] = 1.0 / half_n;
            }
        }
        dec.settings.push_back({"Q:phi=" + std::to_string(k) + "pi/" + std::to_string(n), -c / n,
                                MeasurementSetting::from_vectors(bases, weights)});
    }
    const double rdev = max_abs_diff(dec.reconstruct(), witness.w);
    if (rdev > 1e-10) {
        throw ConsistencyError("ghz_decomposition: reconstruction residual " + std::to_string(rdev));
    }
    return GhzDecomposition{a, b, c, x, golden, std::move(witness), std::move(dec)};
}

ShotEstimate shot_estimate(const WitnessDecomposition &dec, const DensityState &rho, long shots_per_setting,
                           std::uint64_t seed) {
    if (shots_per_setting < 1) {
        throw InputError("shot_estimate: shots must be >= 1");
    }
    if (rho.shape() != dec.shape) {
        throw InputError("shot_estimate: state shape does not match decomposition");
    }
    ShotEstimate out;
    out.shots_per_setting = shots_per_setting;
    out.estimate = dec.identity_coeff;
    double variance = 0;
    for (std::size_t s = 0; s < dec.settings.size(); s++) {
        const auto &ws = dec.settings[s];
        const auto probs = ws.setting.probabilities(rho);
        std::vector<double> cdf(probs.size());
        double total = 0;
        for (std::size_t o = 0; o < probs.size(); o++) {
            if (probs[o] < -1e-10) {
                throw ConsistencyError("shot_estimate: negative outcome probability in setting " + ws.label);
            }
            total += std::max(0.0, probs[o]);
            cdf[o] = total;
        }
        if (std::abs(total - 1.0) > 1e-8) {
            throw ConsistencyError("shot_estimate: probabilities of setting " + ws.label + " sum to " +
                                   std::to_string(total));
        }
        std::mt19937_64 rng(mix_seed(seed, s));
        const auto &w = ws.setting.weights();
        double sum = 0;
        double sum2 = 0;
        for (long i = 0; i < shots_per_setting; i++) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
            auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            if (it == cdf.end()) {
                --it;
            }
            const double value = w[static_cast<std::size_t>(it - cdf.begin())];
            sum += value;
            sum2 += value * value;
        }
        const auto count = static_cast<double>(shots_per_setting);
        const double mean = sum / count;
        const double sample_var = shots_per_setting > 1 ? std::max(0.0, (sum2 - count * mean * mean) / (count - 1)) : 0;
        out.setting_means.push_back(mean);
        out.estimate += ws.weight * mean;
        variance += ws.weight * ws.weight * sample_var / count;
    }
    out.stderr_ = std::sqrt(variance);
    return out;
}

}  // namespace witgeom
