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

// Acceptance gate: one PASS/FAIL line per criterion. With an argument N only
// criterion N runs; the exit status is nonzero when any selected criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "support.hpp"
#include "witgeom/decomposition.hpp"
#include "witgeom/separability.hpp"
#include "witgeom/spin.hpp"
#include "witgeom/states.hpp"
#include "witgeom/upb.hpp"
#include "witgeom/witness.hpp"

using namespace witgeom;
using witgeom::testing::as_density;
using witgeom::testing::random_density;
using witgeom::testing::random_product;

namespace {

class Criterion {
   public:
    void expect(bool ok, const std::string &what, double value, double bound) {
        if (!ok) {
            char buf[64];
            std::snprintf(buf, sizeof buf, " (got %.10g, bound %.3g)", value, bound);
            failures_.push_back(what + buf);
        }
    }
    /// |value - target| <= tol
    void near(const std::string &what, double value, double target, double tol) {
        if (std::abs(value - target) > tol) {
            char buf[96];
            std::snprintf(buf, sizeof buf, " (got %.10g, target %.10g, tolerance %.3g)", value, target, tol);
            failures_.push_back(what + buf);
        }
    }
    void at_most(const std::string &what, double value, double bound) { expect(value <= bound, what, value, bound); }
    void at_least(const std::string &what, double value, double bound) { expect(value >= bound, what, value, bound); }
    void note(std::string text) { notes_.push_back(std::move(text)); }

    bool passed() const { return failures_.empty(); }
    const std::vector<std::string> &failures() const { return failures_; }
    const std::vector<std::string> &notes() const { return notes_; }

   private:
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

SeeSawConfig seesaw(int restarts, std::uint64_t seed) {
    SeeSawConfig cfg;
    cfg.restarts = restarts;
    cfg.seed = seed;
    return cfg;
}

CMatrix bell_witness_matrix() {
    const double t = 1.0 / 3;
    CMatrix w(4);
    w(0, 3) = w(3, 0) = -t;
    w(1, 1) = w(2, 2) = t;
    return w;
}

CMatrix bell_tau0_matrix() {
    CMatrix t(4);
    t(0, 0) = t(3, 3) = 1.0 / 3;
    t(1, 1) = t(2, 2) = 1.0 / 6;
    t(0, 3) = t(3, 0) = 1.0 / 6;
    return t;
}

double identity_residual(const Witness &w, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const CMatrix diff = w.rho0.mat() - w.tau0.mat();
    double worst = 0;
    for (int k = 0; k < samples; k++) {
        const DensityState rho = random_density(w.rho0.shape(), rng);
        worst = std::max(worst, std::abs(evaluate(w, rho) + hs_inner(diff, rho.mat() - w.tau0.mat()).real()));
    }
    return worst;
}

void criterion1(Criterion &c) {
    const Witness w = nearest_witness(max_entangled(2), tau0_closed_form(2));
    c.near("c0 = 1/6", w.c0, 1.0 / 6, 1e-12);
    c.at_most("W0 entrywise vs closed matrix", max_abs_diff(w.w, bell_witness_matrix()), 1e-12);
    c.near("Tr(W0 rho0) = -1/3", evaluate(w, w.rho0), -1.0 / 3, 1e-12);
}

void criterion2(Criterion &c) {
    const WitnessDecomposition dec = two_qubit_decomposition();
    c.expect(dec.settings.size() == 3, "exactly 3 settings", static_cast<double>(dec.settings.size()), 3);
    CMatrix settings_sum(4);
    for (const auto &ws : dec.settings) {
        settings_sum += ws.setting.observable() * ws.weight;
    }
    // sum_s weight_s O_s = -2 tau0
    c.at_most("reassembled tau0 vs closed matrix", max_abs_diff(settings_sum * -0.5, bell_tau0_matrix()), 1e-12);
    c.near("identity coefficient 2/3", dec.identity_coeff, 2.0 / 3, 1e-15);
    const Witness w = nearest_witness(max_entangled(2), tau0_closed_form(2));
    std::mt19937_64 rng(2002);
    double worst = 0;
    for (int k = 0; k < 100; k++) {
        const DensityState rho = random_density(SystemShape::qubits(2), rng);
        const double via_tau = 2.0 / 3 - 2 * expectation(bell_tau0_matrix(), rho);
        worst = std::max({worst, std::abs(evaluate(w, rho) - via_tau), std::abs(dec.exact_value(rho) - via_tau)});
    }
    c.at_most("Tr(W0 rho) = 2/3 - 2 Tr(tau0 rho), 100 random rho", worst, 1e-10);
}

void criterion3(Criterion &c) {
    for (int d : {3, 5, 7}) {
        const std::string tag = "d=" + std::to_string(d) + ": ";
        const Witness w = nearest_witness(max_entangled(d), tau0_closed_form(d));
        c.near(tag + "c0 = (d-1)/(d(d+1))", w.c0, (d - 1.0) / (d * (d + 1.0)), 1e-12);
        c.at_most(tag + "closed tau0 vs spin expansion",
                  max_abs_diff(tau0_closed_form(d).mat(), qudit_tau0_spin_form(d)), 1e-10);
        const WitnessDecomposition dec = qudit_decomposition(d);
        c.expect(dec.settings.size() == static_cast<std::size_t>(d + 1), tag + "d+1 settings",
                 static_cast<double>(dec.settings.size()), d + 1);
        c.at_most(tag + "decomposition reconstructs W0", max_abs_diff(dec.reconstruct(), w.w), 1e-10);
        double worst = 0;
        for (int j = 0; j <= d; j++) {
            worst = std::max(worst, max_abs_diff(qudit_setting_projections(d, j), qudit_setting_spin_sum(d, j)));
        }
        c.at_most(tag + "per-setting projection sum = spin sum", worst, 1e-10);
    }
}

void criterion4(Criterion &c) {
    for (int d : {3, 5, 7}) {
        double herm = 0;
        double idem = 0;
        double trace = 0;
        double orth = 0;
        double complete = 0;
        for (int j = 0; j < d; j++) {
            for (int k = 0; k < d; k++) {
                if (!j && !k) {
                    continue;
                }
                std::vector<CMatrix> ps;
                CMatrix sum(d);
                for (int r = 0; r < d; r++) {
                    ps.push_back(projection_P({d, j, k}, r));
                    const CMatrix &p = ps.back();
                    sum += p;
                    herm = std::max(herm, max_abs_diff(p, p.adjoint()));
                    idem = std::max(idem, max_abs_diff(p * p, p));
                    trace = std::max(trace, std::abs(p.trace() - 1.0));
                }
                for (int r = 0; r < d; r++) {
                    for (int q = 0; q < d; q++) {
                        if (r != q) {
                            orth = std::max(orth, (ps[r] * ps[q]).max_abs());
                        }
                    }
                }
                complete = std::max(complete, max_abs_diff(sum, CMatrix::identity(d)));
            }
        }
        const std::string tag = "d=" + std::to_string(d) + ": ";
        c.at_most(tag + "Hermitian", herm, 1e-10);
        c.at_most(tag + "idempotent", idem, 1e-10);
        c.at_most(tag + "trace one", trace, 1e-10);
        c.at_most(tag + "pairwise orthogonal", orth, 1e-10);
        c.at_most(tag + "complete", complete, 1e-10);
    }
    for (int d : {2, 3, 5, 7}) {
        const SpinRelationsReport r = spin_relations_check(d);
        const std::string tag = "spin relations d=" + std::to_string(d) + ": ";
        c.at_most(tag + "orthogonality", r.orthogonality, 1e-10);
        c.at_most(tag + "power", r.power, 1e-10);
        c.at_most(tag + "adjoint", r.adjoint, 1e-10);
        c.at_most(tag + "eta-commutation", r.commutation, 1e-10);
    }
}

void criterion5(Criterion &c) {
    const double h = 1.0 / std::sqrt(2.0);
    c.near("lemma1 threshold at a=b=1/sqrt2, delta=0", lemma1_threshold(h, h, 0), 1.0 / 3, 1e-15);
    const Witness w = nearest_witness(max_entangled(2), tau0_closed_form(2));
    const SystemShape shape = SystemShape::qubits(2);
    int cases = 0;
    int detected = 0;
    for (double a : {0.5, 0.6, h, 0.8}) {
        const double b = std::sqrt(1 - a * a);
        const double amp[] = {a, b};
        const DensityState rho_a = psi_a(2, amp);
        for (double delta : {0.0, 0.01, 0.05, 0.1}) {
            const double p = lemma1_threshold(a, b, delta) + 0.02;
            for (std::uint64_t seed = 0; seed < 50; seed++) {
                const DensityState sigma =
                    delta > 0 ? noise_ball(shape, delta, 1000 * seed + 7) : DensityState::maximally_mixed(shape);
                cases++;
                detected += detects(evaluate(w, noisy_mixture(p, rho_a, sigma)));
            }
        }
    }
    c.expect(detected == cases, "Monte-Carlo detection rate 100%", detected, cases);
    c.note(std::to_string(detected) + "/" + std::to_string(cases) + " noisy mixtures detected");
    std::mt19937_64 rng(505);
    std::uniform_real_distribution<double> u(0, 1);
    int agree = 0;
    for (int k = 0; k < 100; k++) {
        const double angle = u(rng) * M_PI / 2;
        const double a[] = {std::cos(angle), std::sin(angle)};
        const double delta = 0.25 * u(rng);
        const double p = 0.01 + 0.99 * u(rng);
        agree += lemma2_predicate(2, a, p, delta) == (p > lemma1_threshold(a[0], a[1], delta));
    }
    c.expect(agree == 100, "lemma2 at d=2 agrees with lemma1 on 100 draws", agree, 100);
}

void criterion6(Criterion &c) {
    double ppt_min = 1;
    for (int i = 0; i < 9; i++) {
        for (int j = 0; j < 9; j++) {
            ppt_min = std::min(ppt_min, ppt_report(rho_cd(-0.125 + i / 32.0, -0.125 + j / 32.0)).min());
        }
    }
    c.at_least("PPT over 9x9 (c,d) grid, all cuts", ppt_min, -1e-10);

    for (double t : {1.0 / 32, 1.0 / 16, 1.0 / 8}) {
        const Witness w = nearest_witness(rho_mt(0, t), tau_candidates_3q(0, t).tau0);
        c.near("c0(0,t) = t/4 at t=" + std::to_string(t), w.c0, t / 4, 1e-12);
        double worst = 0;
        for (int k = 0; k <= 8; k++) {
            const double m = -0.125 + t + k * (0.25 - 2 * t) / 8;
            worst = std::max(worst, std::abs(evaluate(w, rho_mt(m, t)) + 2 * t * t));
        }
        c.at_most("Tr(W0(0,t) rho(m,t)) = -2t^2 over m grid at t=" + std::to_string(t), worst, 1e-10);
    }

    const CMatrix w_int = three_qubit_integer_witness();
    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> angle(0, 2 * M_PI);
    double worst = 0;
    for (int k = 0; k < 100; k++) {
        std::array<double, 3> theta{};
        std::array<double, 3> phi{};
        std::vector<CVector> locals;
        for (int q = 0; q < 3; q++) {
            theta[q] = angle(rng) / 4;
            phi[q] = angle(rng);
            locals.push_back({std::cos(theta[q]), std::polar(std::sin(theta[q]), phi[q])});
        }
        const double lhs = 2 * expectation(w_int, as_density(ProductProjection(locals)));
        worst = std::max(worst, std::abs(lhs - (2 - bell_objective(theta, phi))));
    }
    c.at_most("2 Tr(W0 mu) = 2 - sin sin sin C on 100 random products", worst, 1e-10);

    const BellBoundResult bound = bell_bound_3q(32, 6);
    c.near("Bell bound max = 2", bound.max, 2.0, 1e-6);
    c.note("Bell bound max found: " + std::to_string(bound.max) + " (2 sqrt 2 = " + std::to_string(2 * std::sqrt(2.0)) +
           ")");

    const double t = 1.0 / 8;
    const Witness w = nearest_witness(rho_mt(0, t), tau_candidates_3q(0, t).tau0);
    const SeeSawResult r = min_over_products(w.w, SystemShape::qubits(3), seesaw(32, 66));
    c.at_least("see-saw min of Tr(W0 pi) at t=1/8", r.value, -1e-8);
    c.expect(r.consensus >= 8, "see-saw consensus >= 8/32", r.consensus, 8);
    c.note("see-saw min " + std::to_string(r.value) + " with consensus " + std::to_string(r.consensus) + "/32; " +
           "(t/4)(1 - sqrt 2) = " + std::to_string(t / 4 * (1 - std::sqrt(2.0))));
}

void criterion7(Criterion &c) {
    for (int n = 2; n <= 6; n++) {
        const double s0 = ghz_s0(n);
        c.near("s0 = 1/(2^{n-1}+1) at n=" + std::to_string(n), s0, 1.0 / (std::ldexp(1.0, n - 1) + 1), 1e-15);
        const CMatrix d0 = CMatrix::identity(std::size_t{1} << n) * std::ldexp(1.0, -n);
        const CMatrix seg = d0 * (1 - s0) + ghz(n).mat() * s0;
        const DeltaQ dq = delta_and_q(n);
        const CMatrix faces = dq.delta.mat() * s0 + dq.q.mat() * (1 - s0);
        c.at_most("segment form = Delta/Q form at n=" + std::to_string(n), max_abs_diff(seg, faces), 1e-12);
        c.at_most("tau_tilde_ghz at n=" + std::to_string(n), max_abs_diff(tau_tilde_ghz(n).mat(), seg), 1e-12);
    }
    const GhzDecomposition g2 = ghz_decomposition(2);
    c.near("n=2 a", g2.a, 2.0 / 3, 1e-10);
    c.near("n=2 b", g2.b, 2.0 / 3, 1e-10);
    c.near("n=2 c", g2.c, 4.0 / 3, 1e-10);
    const DeltaQ dq2 = delta_and_q(2);
    const CMatrix abc = CMatrix::identity(4) * g2.a - dq2.delta.mat() * g2.b - dq2.q.mat() * g2.c;
    c.at_most("n=2 aI - bDelta - cQ vs two-qubit witness", max_abs_diff(abc, bell_witness_matrix()), 1e-10);
    for (int n : {3, 4}) {
        const std::string tag = "n=" + std::to_string(n) + ": ";
        const GhzDecomposition g = ghz_decomposition(n);
        c.at_least(tag + "min(a,b,c) > 0", std::min({g.a, g.b, g.c}), 1e-300);
        c.at_most(tag + "Tr(W0 rho0) < -1e-6", evaluate(g.witness, ghz(n)), -1e-6);
        const SeeSawResult r = min_over_products(g.witness.w, SystemShape::qubits(n), seesaw(32, 70 + n));
        c.at_least(tag + "see-saw positivity", r.value, -1e-8);
        char buf[160];
        std::snprintf(buf, sizeof buf, "n=%d: (a,b,c) = (%.12g, %.12g, %.12g), see-saw min %.3g (%d/32)", n, g.a, g.b,
                      g.c, r.value, r.consensus);
        c.note(buf);
    }
}

void criterion8(Criterion &c) {
    const UpbSet upb = upb_tiles();
    const int m = upb.m();
    const int n = upb.n_total();
    c.at_most("Gram matrix = identity", max_abs_diff(upb.gram(), CMatrix::identity(5)), 1e-12);
    const DensityState mu = mu0(upb);
    const DensityState rho0 = bound_entangled(upb);
    c.at_least("rho0 PSD", min_eigenvalue(rho0.mat()), -1e-10);
    c.expect(numerical_rank(rho0.mat()) == 4, "rho0 rank 4", numerical_rank(rho0.mat()), 4);
    for (int party : {0, 1}) {
        const int cut[] = {party};
        c.at_least("PPT, transpose party " + std::to_string(party), min_eigenvalue(partial_transpose(rho0, cut)),
                   -1e-10);
    }
    c.at_most("Tr(mu0 rho0) = 0", std::abs(expectation(mu.mat(), rho0)), 1e-10);

    const EpsilonEstimate est = estimate_epsilon(mu, m, seesaw(64, 1));
    c.at_least("eps > 1e-3", est.epsilon, 1e-3 + 1e-300);
    c.expect(est.consensus >= 8, "restart consensus >= 8/64", est.consensus, 8);
    double spread = 0;
    for (std::uint64_t seed : {2, 3}) {
        spread = std::max(spread, std::abs(estimate_epsilon(mu, m, seesaw(64, seed)).epsilon - est.epsilon));
    }
    c.at_most("eps seed stability", spread, 1e-8);

    const Witness w = farface_witness(mu, est.epsilon, m);
    const double eps = est.epsilon;
    c.near("Tr(W0 rho0) = -eps^2 N/(m(N-m))", evaluate(w, rho0), -eps * eps * n / (m * (n - static_cast<double>(m))), 1e-9);
    const double s0 = 1 - eps * n / m;
    const CMatrix tau0 = CMatrix::identity(9) * ((1 - s0) / n) + rho0.mat() * s0;
    const Witness segment = nearest_witness(rho0, DensityState(tau0, rho0.shape()));
    c.at_most("closed form vs nearest-point construction", max_abs_diff(w.w, segment.w), 1e-10);

    std::mt19937_64 rng(808);
    double worst = 1;
    for (int k = 0; k < 10000; k++) {
        worst = std::min(worst, expectation(w.w, as_density(random_product(upb.shape(), rng))));
    }
    c.at_least("W0 on 1e4 sampled product states", worst, -1e-8);
    char buf[160];
    std::snprintf(buf, sizeof buf, "eps = %.12g (consensus %d/64), s0 = %.12g, min sampled value %.3g", eps,
                  est.consensus, s0, worst);
    c.note(buf);
}

void criterion9(Criterion &c) {
    const WitnessDecomposition dec = two_qubit_decomposition();
    const ShotEstimate bell = shot_estimate(dec, max_entangled(2), 100000, 909);
    c.expect(std::abs(bell.estimate + 1.0 / 3) <= 5 * bell.stderr_ + 1e-12, "|estimate + 1/3| <= 5 stderr",
             bell.estimate + 1.0 / 3, 5 * bell.stderr_);
    c.note("bell2/rho0 at 1e5 shots: estimate " + std::to_string(bell.estimate) + ", stderr " +
           std::to_string(bell.stderr_) + " (every setting is deterministic on rho0)");

    // rho0 has zero shot variance, so the stderr ladder is taken on D0.
    const DensityState mixed = DensityState::maximally_mixed(SystemShape::qubits(2));
    const double lo = shot_estimate(dec, mixed, 1000, 910).stderr_;
    const double mid = shot_estimate(dec, mixed, 10000, 910).stderr_;
    const double hi = shot_estimate(dec, mixed, 100000, 910).stderr_;
    const double slope = (std::log10(hi) - std::log10(lo)) / 2;
    c.near("stderr slope over {1e3,1e4,1e5}", slope, -0.5, 0.1);
    c.expect(lo > mid && mid > hi, "stderr decreasing", mid, lo);

    const ShotEstimate again = shot_estimate(dec, max_entangled(2), 100000, 909);
    c.expect(again.estimate == bell.estimate && again.stderr_ == bell.stderr_, "bit-exact reproducibility",
             again.estimate - bell.estimate, 0);
    const ShotEstimate m1 = shot_estimate(dec, mixed, 5000, 911);
    const ShotEstimate m2 = shot_estimate(dec, mixed, 5000, 911);
    c.expect(m1.setting_means == m2.setting_means, "bit-exact reproducibility on D0", m1.estimate - m2.estimate, 0);
}

void criterion10(Criterion &c) {
    std::vector<std::pair<std::string, Witness>> pairs;
    for (int d : {2, 3, 5, 7}) {
        pairs.emplace_back("max_entangled d=" + std::to_string(d),
                           nearest_witness(max_entangled(d), tau0_closed_form(d)));
    }
    for (double t : {1.0 / 32, 1.0 / 8}) {
        for (double m : {0.0, 0.125 - t}) {
            pairs.emplace_back("threeq m=" + std::to_string(m) + " t=" + std::to_string(t),
                               nearest_witness(rho_mt(m, t), tau_candidates_3q(m, t).tau0));
        }
    }
    for (int n = 2; n <= 6; n++) {
        pairs.emplace_back("ghz n=" + std::to_string(n), ghz_decomposition(n).witness);
    }
    const UpbSet upb = upb_tiles();
    const EpsilonEstimate est = estimate_epsilon(mu0(upb), upb.m(), seesaw(64, 1));
    pairs.emplace_back("upb tiles", farface_witness(mu0(upb), est.epsilon, upb.m()));
    std::uint64_t seed = 1000;
    for (const auto &[name, w] : pairs) {
        c.at_most("identity for " + name, identity_residual(w, 100, seed++), 1e-10);
    }
    c.note(std::to_string(pairs.size()) + " (rho0, tau0) pairs x 100 random states");
}

struct Entry {
    const char *title;
    std::function<void(Criterion &)> body;
};

}  // namespace

int main(int argc, char **argv) {
    const std::vector<Entry> entries{
        {"two-qubit closed forms", criterion1},
        {"two-qubit three-setting decomposition", criterion2},
        {"qudit witness and d+1 settings", criterion3},
        {"projection families and spin relations", criterion4},
        {"noise thresholds", criterion5},
        {"three-qubit PPT family", criterion6},
        {"GHZ witnesses", criterion7},
        {"UPB far face (TILES)", criterion8},
        {"shot estimator", criterion9},
        {"global identity for every constructed pair", criterion10},
    };
    int only = 0;
    if (argc > 1) {
        only = std::atoi(argv[1]);
        if (only < 1 || only > static_cast<int>(entries.size())) {
            std::fprintf(stderr, "usage: %s [criterion 1-%zu]\n", argv[0], entries.size());
            return 2;
        }
    }
    int failed = 0;
    for (std::size_t i = 0; i < entries.size(); i++) {
        if (only && static_cast<int>(i + 1) != only) {
            continue;
        }
        Criterion c;
        std::string crash;
        try {
            entries[i].body(c);
        } catch (const std::exception &e) {
            crash = e.what();
        }
        const bool ok = c.passed() && crash.empty();
        failed += !ok;
        std::printf("criterion %2zu: %s  %s\n", i + 1, ok ? "PASS" : "FAIL", entries[i].title);
        for (const auto &f : c.failures()) {
            std::printf("    failed: %s\n", f.c_str());
        }
        if (!crash.empty()) {
            std::printf("    exception: %s\n", crash.c_str());
        }
        for (const auto &n : c.notes()) {
            std::printf("    %s\n", n.c_str());
        }
    }
    return failed ? 1 : 0;
}
