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

#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>

#include "witgeom/decomposition.hpp"
#include "witgeom/io.hpp"
#include "witgeom/random.hpp"
#include "witgeom/separability.hpp"
#include "witgeom/spin.hpp"
#include "witgeom/states.hpp"
#include "witgeom/upb.hpp"
#include "witgeom/witness.hpp"

namespace witgeom::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kClosedFormTol = 1e-12;
constexpr double kIdentityTol = 1e-10;
constexpr double kOracleTol = 1e-8;

struct Options {
    std::vector<std::string> target;
    std::optional<std::uint64_t> seed;
    long shots = 100000;
    int restarts = 0;
    std::string format = "json";
    std::string out_dir;
    std::string state = "rho0";
    bool quiet = false;
};

/// Collects one run's document. Scalars always travel with a tolerance or
/// a standard error.
class Report {
   public:
    explicit Report(const std::string &command) { doc_["command"] = command; }

    void input(const std::string &key, json value) { doc_["inputs"][key] = std::move(value); }

    void output(const std::string &key, double value, double tolerance, const std::string &note = "") {
        json entry{{"value", value}, {"tolerance", tolerance}};
        if (!note.empty()) {
            entry["note"] = note;
        }
        doc_["outputs"][key] = std::move(entry);
    }
    void output_stderr(const std::string &key, double value, double stderr_value) {
        doc_["outputs"][key] = json{{"value", value}, {"stderr", stderr_value}};
    }
    void output_count(const std::string &key, long value) {
        doc_["outputs"][key] = json{{"value", value}, {"tolerance", 0}};
    }
    void output_flag(const std::string &key, bool value) { doc_["outputs"][key] = json{{"value", value}}; }
    void output_file(const std::string &key, const std::string &path) { doc_["outputs"][key] = json{{"file", path}}; }
    void output_json(const std::string &key, json value) { doc_["outputs"][key] = std::move(value); }

    void residual(const std::string &key, double value, double tolerance) {
        doc_["residuals"][key] = json{{"value", value}, {"tolerance", tolerance}};
    }

    void oracle(const std::string &key, const SeeSawResult &r) {
        doc_["oracle"][key] = json{{"value", r.value},
                                   {"tolerance", kOracleTol},
                                   {"consensus", std::to_string(r.consensus) + "/" + std::to_string(r.restarts)},
                                   {"monotone", r.monotone},
                                   {"note", "upper bound with restart consensus"}};
    }

    void check(const std::string &name, bool pass, double value, double bound, const std::string &relation) {
        doc_["checks"][name] = json{{"pass", pass}, {"value", value}, {"bound", bound}, {"relation", relation}};
        if (!pass) {
            failures_.push_back(name);
        }
    }

    void headline(std::string text) { headline_ = std::move(text); }
    const std::string &headline() const { return headline_; }
    const std::vector<std::string> &failures() const { return failures_; }

    json finish(std::optional<std::uint64_t> seed, double wall_seconds) {
        doc_["status"] = failures_.empty() ? "pass" : "fail";
        doc_["failures"] = failures_;
        doc_["seed"] = seed ? json(*seed) : json(nullptr);
        doc_["wall_time_s"] = json{{"value", wall_seconds}, {"tolerance", 1e-3}};
        return doc_;
    }

   private:
    json doc_;
    std::vector<std::string> failures_;
    std::string headline_;
};

std::string to_text(double x) { return io::format_double(x); }

long parse_int(const std::string &s, const std::string &what) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != s.size() || s.empty()) {
        throw InputError(what + ": expected an integer, got '" + s + "'");
    }
    return v;
}

double parse_real(const std::string &s, const std::string &what) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != s.size() || s.empty() || !std::isfinite(v)) {
        throw InputError(what + ": expected a real number, got '" + s + "'");
    }
    return v;
}

std::uint64_t require_seed(const Options &o, const std::string &why) {
    if (!o.seed) {
        throw InputError(why + " is randomized and requires an explicit --seed");
    }
    return *o.seed;
}

void expect_args(const std::vector<std::string> &t, std::size_t n, const std::string &usage) {
    if (t.size() != n) {
        throw InputError("usage: " + usage);
    }
}

struct Target {
    std::string name;
    Witness witness;
    WitnessDecomposition dec;
    bool expect_ppt = false;
    std::optional<GhzDecomposition> ghz;
    std::optional<EpsilonEstimate> eps;
    std::optional<UpbSet> upb;
};

/// Attaches s0 and tau_tilde from the segment form after checking that the
/// segment formula reproduces the same operator.
Witness with_segment(Witness w, double s0) {
    const Witness seg = segment_witness(w.rho0, w.tau0, s0);
    const double dev = max_abs_diff(seg.w, w.w);
    if (dev > kClosedFormTol) {
        throw ConsistencyError("segment form of the witness differs by " + to_text(dev));
    }
    w.s0 = s0;
    w.tau_tilde = seg.tau_tilde;
    return w;
}

Target bipartite_target(const std::string &name, int d) {
    Witness w = with_segment(nearest_witness(max_entangled(d), tau0_closed_form(d)), 1.0 / (d + 1));
    WitnessDecomposition dec = d == 2 ? two_qubit_decomposition() : qudit_decomposition(d);
    return Target{name, std::move(w), std::move(dec), false, std::nullopt, std::nullopt, std::nullopt};
}

Target threeq_target(double m, double t) {
    if (t == 0.0) {
        throw InputError("separable target, no witness: t = 0 makes rho(m, t) completely separable");
    }
    const double a = std::abs(t);
    if (std::abs(m) + a > 0.125 + 1e-15) {
        throw InputError("threeq: need |m| + |t| <= 1/8 so that c = m + t and d = m - t lie in [-1/8, 1/8]");
    }
    const ThreeQubitCandidates cand = tau_candidates_3q(m, a);
    Witness w = nearest_witness(rho_mt(m, a), cand.tau0);
    const double s0 = 1.0 / (1.0 + 8.0 * a);
    if (max_abs_diff(cand.tau_tilde.mat(), (w.rho0.mat() * s0 + CMatrix::identity(8) * ((1 - s0) / 8))) > 1e-14) {
        throw ConsistencyError("threeq: tau_tilde does not lie on the segment from D0");
    }
    w.s0 = s0;
    w.tau_tilde = cand.tau_tilde;
    WitnessDecomposition dec = three_qubit_decomposition(a);
    if (t < 0) {
        const CMatrix u = three_qubit_swap_unitary();
        auto conj = [&](const DensityState &s) { return DensityState(u * s.mat() * u.adjoint(), s.shape()); };
        const DensityState rho = rho_mt(m, t);
        if (max_abs_diff(conj(w.rho0).mat(), rho.mat()) > 1e-15) {
            throw ConsistencyError("threeq: local flip does not map rho(m, |t|) to rho(m, t)");
        }
        Witness flipped = nearest_witness(rho, conj(w.tau0));
        flipped.s0 = s0;
        flipped.tau_tilde = conj(*w.tau_tilde);
        w = std::move(flipped);
        dec = conjugate_party(dec, 2, pauli(1));
    }
    return Target{"threeq", std::move(w), std::move(dec), true, std::nullopt, std::nullopt, std::nullopt};
}

Target build_target(const Options &o, Report &report) {
    const auto &t = o.target;
    if (t.empty()) {
        throw InputError("missing target: bell2 | qudit D | ghz N | threeq M T | upb FILE|tiles");
    }
    const std::string &kind = t[0];
    report.input("target", kind);
    if (kind == "bell2") {
        expect_args(t, 1, "bell2");
        return bipartite_target("bell2", 2);
    }
    if (kind == "qudit") {
        expect_args(t, 2, "qudit D");
        const long d = parse_int(t[1], "qudit D");
        if (d < 2 || d > 11 || !is_prime(static_cast<int>(d))) {
            throw InputError("qudit: D must be a prime in [2, 11]");
        }
        report.input("d", d);
        return bipartite_target("qudit", static_cast<int>(d));
    }
    if (kind == "ghz") {
        expect_args(t, 2, "ghz N");
        const long n = parse_int(t[1], "ghz N");
        if (n < 2 || n > 7) {
            throw InputError("ghz: N must lie in [2, 7]");
        }
        report.input("n", n);
        GhzDecomposition g = ghz_decomposition(static_cast<int>(n));
        Witness w = g.witness;
        w.s0 = ghz_s0(static_cast<int>(n));
        w.tau_tilde = tau_tilde_ghz(static_cast<int>(n));
        WitnessDecomposition dec = g.decomposition;
        return Target{"ghz", std::move(w), std::move(dec), false, std::move(g), std::nullopt, std::nullopt};
    }
    if (kind == "threeq") {
        expect_args(t, 3, "threeq M T");
        const double m = parse_real(t[1], "threeq M");
        const double tt = parse_real(t[2], "threeq T");
        report.input("m", m);
        report.input("t", tt);
        return threeq_target(m, tt);
    }
    if (kind == "upb") {
        expect_args(t, 2, "upb FILE|tiles");
        report.input("upb", t[1]);
        UpbSet upb = t[1] == "tiles" ? upb_tiles() : io::upb_from_json(io::read_file(t[1]));
        SeeSawConfig cfg;
        cfg.restarts = o.restarts > 0 ? o.restarts : 64;
        cfg.seed = require_seed(o, "upb epsilon estimation");
        report.input("restarts", cfg.restarts);
        const DensityState mu = mu0(upb);
        EpsilonEstimate est = estimate_epsilon(mu, upb.m(), cfg);
        Witness w = farface_witness(mu, est.epsilon, upb.m());
        WitnessDecomposition dec = farface_decomposition(upb, est.epsilon);
        return Target{"upb", std::move(w), std::move(dec), true, std::nullopt, std::move(est), std::move(upb)};
    }
    throw InputError("unknown target '" + kind + "'");
}

void report_target_scalars(const Target &tg, Report &report) {
    const Witness &w = tg.witness;
    report.output("c0", w.c0, kClosedFormTol);
    if (w.s0) {
        report.output("s0", *w.s0, tg.eps ? kOracleTol : kClosedFormTol);
    }
    if (tg.eps) {
        const auto &e = *tg.eps;
        report.output("epsilon", e.epsilon, kOracleTol, "upper bound with restart consensus");
        report.output_json("epsilon_consensus",
                           json{{"value", std::to_string(e.consensus) + "/" + std::to_string(e.restarts)}});
        report.output_count("m", e.m);
        report.output_count("N", e.n_total);
    }
    if (tg.ghz) {
        report.output("a", tg.ghz->a, kIdentityTol);
        report.output("b", tg.ghz->b, kIdentityTol);
        report.output("c", tg.ghz->c, kIdentityTol);
        report.output("x", tg.ghz->x, kClosedFormTol, "tau0 = x Delta + (1 - x) Q");
    }
    const double dist2 = std::pow(hs_distance(w.rho0.mat(), w.tau0.mat()), 2);
    report.output("distance_sq", dist2, kClosedFormTol);
    report.output("value_at_rho0", evaluate(w, w.rho0), kIdentityTol);
    report.residual("identity_at_rho0", std::abs(evaluate(w, w.rho0) + dist2), kIdentityTol);
}

std::string witness_document(const Witness &w) {
    std::string body = io::matrix_to_json(w.w, w.rho0.shape());
    // Append the metadata block inside the matrix object.
    body.erase(body.find_last_of('}'));
    return body + ", \"c0\": " + to_text(w.c0) + ", \"s0\": " + (w.s0 ? to_text(*w.s0) : "null") + "}\n";
}

std::string write_matrix_files(const Options &o, const Target &tg, Report &report) {
    if (o.out_dir.empty()) {
        return "";
    }
    std::filesystem::create_directories(o.out_dir);
    const std::filesystem::path dir(o.out_dir);
    const Witness &w = tg.witness;
    const auto put = [&](const std::string &key, const std::string &file, const std::string &contents) {
        const std::string path = (dir / file).string();
        io::write_file(path, contents);
        report.output_file(key, path);
    };
    put("W0", "W0.json", witness_document(w));
    put("tau0", "tau0.json", io::matrix_to_json(w.tau0.mat(), w.tau0.shape()));
    put("rho0", "rho0.json", io::matrix_to_json(w.rho0.mat(), w.rho0.shape()));
    if (w.tau_tilde) {
        put("tau_tilde", "tau_tilde.json", io::matrix_to_json(w.tau_tilde->mat(), w.tau_tilde->shape()));
    }
    return dir.string();
}

void cmd_witness(const Options &o, Report &report) {
    const Target tg = build_target(o, report);
    report_target_scalars(tg, report);
    write_matrix_files(o, tg, report);
    report.headline(to_text(tg.witness.c0));
}

void cmd_decompose(const Options &o, Report &report) {
    const Target tg = build_target(o, report);
    const WitnessDecomposition &dec = tg.dec;
    report.output_count("settings", static_cast<long>(dec.settings.size()));
    report.output("identity_coeff", dec.identity_coeff, kIdentityTol);
    json weights = json::array();
    for (const auto &ws : dec.settings) {
        weights.push_back(json{{"label", ws.label}, {"weight", ws.weight}, {"tolerance", kIdentityTol}});
    }
    report.output_json("setting_weights", std::move(weights));
    if (tg.ghz) {
        report.output("a", tg.ghz->a, kIdentityTol);
        report.output("b", tg.ghz->b, kIdentityTol);
        report.output("c", tg.ghz->c, kIdentityTol);
    }
    const double residual = max_abs_diff(dec.reconstruct(), tg.witness.w);
    report.residual("reconstruction", residual, kIdentityTol);
    report.check("reconstruction", residual <= kIdentityTol, residual, kIdentityTol, "<=");
    if (!o.out_dir.empty()) {
        std::filesystem::create_directories(o.out_dir);
        const std::string path = (std::filesystem::path(o.out_dir) / "decomposition.json").string();
        io::write_file(path, io::decomposition_to_json(dec));
        report.output_file("decomposition", path);
    }
    report.headline(std::to_string(dec.settings.size()));
    if (!report.failures().empty()) {
        throw ConsistencyError("decomposition does not reconstruct the witness: residual " + to_text(residual));
    }
}

void cmd_verify(const Options &o, Report &report) {
    const std::uint64_t seed = require_seed(o, "verify");
    const Target tg = build_target(o, report);
    const Witness &w = tg.witness;
    report_target_scalars(tg, report);

    report.check("witness_hermitian", is_hermitian(w.w), max_abs_diff(w.w, w.w.adjoint()), tol::herm, "<=");
    const double dist2 = std::pow(hs_distance(w.rho0.mat(), w.tau0.mat()), 2);
    const double at_rho0 = evaluate(w, w.rho0);
    report.check("identity_at_rho0", std::abs(at_rho0 + dist2) <= kIdentityTol, std::abs(at_rho0 + dist2), kIdentityTol,
                 "<=");
    report.check("detects_rho0", detects(at_rho0), at_rho0, -tol::detect, "<");

    std::mt19937_64 rng(mix_seed(seed, 1));
    std::normal_distribution<double> g;
    double worst = 0;
    const std::size_t n = w.rho0.dim();
    const CMatrix diff = w.rho0.mat() - w.tau0.mat();
    for (int k = 0; k < 100; k++) {
        CMatrix a(n);
        for (std::size_t r = 0; r < n; r++) {
            for (std::size_t c = 0; c < n; c++) {
                a(r, c) = cplx(g(rng), g(rng));
            }
        }
        CMatrix p = a * a.adjoint();
        p *= 1.0 / p.trace().real();
        const DensityState rho((p + p.adjoint()) * 0.5, w.rho0.shape());
        worst = std::max(worst, std::abs(evaluate(w, rho) + hs_inner(diff, rho.mat() - w.tau0.mat()).real()));
    }
    report.check("global_identity", worst <= kIdentityTol, worst, kIdentityTol, "<=");

    if (w.s0) {
        const double dev = max_abs_diff(segment_witness(w.rho0, w.tau0, *w.s0).w, w.w);
        report.check("segment_form_agreement", dev <= kClosedFormTol, dev, kClosedFormTol, "<=");
    }
    const double residual = max_abs_diff(tg.dec.reconstruct(), w.w);
    report.check("reconstruction", residual <= kIdentityTol, residual, kIdentityTol, "<=");

    const PptReport ppt = ppt_report(w.rho0);
    json cuts = json::array();
    for (const auto &cut : ppt.cuts) {
        cuts.push_back(json{{"parties", cut.parties}, {"min_eigenvalue", cut.min_eigenvalue}, {"tolerance", tol::eig}});
    }
    report.output_json("ppt_cuts", std::move(cuts));
    if (tg.expect_ppt) {
        report.check("rho0_ppt", ppt.min() >= -kIdentityTol, ppt.min(), -kIdentityTol, ">=");
    } else {
        report.check("rho0_npt", ppt.min() < -kIdentityTol, ppt.min(), -kIdentityTol, "<");
    }

    SeeSawConfig cfg;
    cfg.restarts = o.restarts > 0 ? o.restarts : 32;
    cfg.seed = mix_seed(seed, 2);
    const SeeSawResult pos = min_over_products(w.w, w.rho0.shape(), cfg);
    report.oracle("witness_min_over_products", pos);
    report.check("oracle_positivity", pos.value >= -kOracleTol, pos.value, -kOracleTol, ">=");

    if (tg.ghz) {
        const double smallest = std::min({tg.ghz->a, tg.ghz->b, tg.ghz->c});
        report.check("abc_positive", smallest > 0, smallest, 0, ">");
    }
    if (tg.name == "threeq") {
        const BellBoundResult bound = bell_bound_3q(cfg.restarts, mix_seed(seed, 3));
        report.output("bell_bound_max", bound.max, 1e-6, "multistart maximum of sin sin sin C");
        report.check("bell_bound_equals_2", std::abs(bound.max - 2.0) <= 1e-6, bound.max, 2.0, "== within 1e-6");
    }
    if (tg.eps) {
        const auto &e = *tg.eps;
        report.check("epsilon_positive", e.epsilon > 1e-12, e.epsilon, 1e-12, ">");
        const double bracket = static_cast<double>(e.m) / e.n_total;
        report.check("epsilon_below_m_over_N", e.epsilon < bracket, e.epsilon, bracket, "<");
        const double expect = -e.epsilon * e.epsilon * e.n_total / (e.m * (e.n_total - e.m));
        report.check("farface_value_at_rho0", std::abs(at_rho0 - expect) <= 1e-9, at_rho0, expect, "== within 1e-9");
    }
    report.headline(report.failures().empty() ? "pass" : "fail");
}

void cmd_estimate(const Options &o, Report &report) {
    const std::uint64_t seed = require_seed(o, "estimate");
    if (o.shots < 1) {
        throw InputError("--shots must be >= 1");
    }
    const Target tg = build_target(o, report);
    const Witness &w = tg.witness;
    const DensityState rho = o.state == "tau0"    ? w.tau0
                             : o.state == "mixed" ? DensityState::maximally_mixed(w.rho0.shape())
                                                  : w.rho0;
    report.input("state", o.state);
    report.input("shots_per_setting", o.shots);
    const ShotEstimate est = shot_estimate(tg.dec, rho, o.shots, seed);
    const double exact = evaluate(w, rho);
    const double err = est.estimate - exact;
    report.output_stderr("estimate", est.estimate, est.stderr_);
    report.output("exact", exact, kIdentityTol);
    if (est.stderr_ > 0) {
        report.output("z_score", err / est.stderr_, 0.0);
    } else {
        // Zero sample variance: the estimate is exact whenever err vanishes.
        report.output("z_score", std::abs(err) <= kClosedFormTol ? 0.0 : std::copysign(HUGE_VAL, err), 0.0,
                      "zero sample variance");
    }
    report.output_count("settings", static_cast<long>(tg.dec.settings.size()));
    report.headline(to_text(est.estimate));
}

void cmd_threshold(const Options &o, Report &report) {
    const auto &t = o.target;
    if (t.empty()) {
        throw InputError("missing threshold kind: lemma1 A B DELTA | lemma2 D A_FILE P DELTA | frustum P DELTA N M B EPS");
    }
    report.input("kind", t[0]);
    if (t[0] == "lemma1") {
        expect_args(t, 4, "lemma1 A B DELTA");
        const double a = parse_real(t[1], "A");
        const double b = parse_real(t[2], "B");
        const double delta = parse_real(t[3], "DELTA");
        report.input("a", a);
        report.input("b", b);
        report.input("delta", delta);
        // Accept amplitudes rounded to a few digits by renormalizing.
        const double norm = std::hypot(a, b);
        if (!(norm > 0) || std::abs(norm - 1.0) > 1e-3) {
            throw InputError("lemma1: a^2 + b^2 must equal 1");
        }
        const double p = lemma1_threshold(a / norm, b / norm, delta);
        report.output("p_star", p, kClosedFormTol);
        report.headline(to_text(p));
        return;
    }
    if (t[0] == "lemma2") {
        expect_args(t, 5, "lemma2 D A_FILE P DELTA");
        const long d = parse_int(t[1], "D");
        const json amps = json::parse(io::read_file(t[2]), nullptr, false);
        if (!amps.is_array()) {
            throw InputError("lemma2: amplitude file must hold a JSON list of reals");
        }
        std::vector<double> a;
        for (const auto &x : amps) {
            if (!x.is_number()) {
                throw InputError("lemma2: amplitude file must hold a JSON list of reals");
            }
            a.push_back(x.get<double>());
        }
        const double p = parse_real(t[3], "P");
        const double delta = parse_real(t[4], "DELTA");
        report.input("d", d);
        report.input("a", a);
        report.input("p", p);
        report.input("delta", delta);
        const bool verdict = lemma2_predicate(static_cast<int>(d), a, p, delta);
        report.output_flag("inseparable", verdict);
        if (d == 2) {
            const double p_star = lemma1_threshold(std::abs(a[0]), std::abs(a[1]), delta);
            report.output("lemma1_p_star", p_star, kClosedFormTol);
            report.output_flag("lemma1_agreement", verdict == (p > p_star));
        }
        report.headline(verdict ? "true" : "false");
        return;
    }
    if (t[0] == "frustum") {
        expect_args(t, 7, "frustum P DELTA N M B EPS");
        const double p = parse_real(t[1], "P");
        const double delta = parse_real(t[2], "DELTA");
        const long n = parse_int(t[3], "N");
        const long m = parse_int(t[4], "M");
        const double b = parse_real(t[5], "B");
        const double eps = parse_real(t[6], "EPS");
        report.input("p", p);
        report.input("delta", delta);
        report.input("N", n);
        report.input("m", m);
        report.input("b", b);
        report.input("eps", eps);
        const bool verdict = frustum_predicate(p, delta, static_cast<int>(n), static_cast<int>(m), b, eps);
        report.output_flag("inside_frustum", verdict);
        report.headline(verdict ? "true" : "false");
        return;
    }
    throw InputError("unknown threshold kind '" + t[0] + "'");
}

void emit_csv(const json &doc, std::ostream &out) {
    out << "section,key,value,tolerance\n";
    const auto cell = [](const json &v) {
        std::string s = v.is_string() ? v.get<std::string>() : v.dump();
        if (s.find_first_of(",\"") != std::string::npos) {
            std::string quoted = "\"";
            for (char c : s) {
                quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
            }
            return quoted + "\"";
        }
        return s;
    };
    for (const auto &[section, body] : doc.items()) {
        if (!body.is_object()) {
            out << "run," << section << "," << cell(body) << ",\n";
            continue;
        }
        if (body.contains("value")) {
            out << "run," << section << "," << cell(body["value"]) << "," << cell(body["tolerance"]) << "\n";
            continue;
        }
        for (const auto &[key, v] : body.items()) {
            if (v.is_object() && v.contains("value")) {
                const json tol = v.contains("tolerance") ? v["tolerance"] : v.contains("stderr") ? v["stderr"] : json("");
                out << section << "," << key << "," << cell(v["value"]) << "," << cell(tol) << "\n";
            } else if (v.is_object() && v.contains("pass")) {
                out << section << "," << key << "," << cell(v["pass"]) << "," << cell(v["bound"]) << "\n";
            } else {
                out << section << "," << key << "," << cell(v) << ",\n";
            }
        }
    }
}

std::string join(const std::vector<std::string> &args) {
    std::string s;
    for (const auto &a : args) {
        s += (s.empty() ? "" : " ") + a;
    }
    return s;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"witgeom: entanglement witnesses from separable-set geometry"};
    app.require_subcommand(1);
    Options o;
    const auto add_common = [&](CLI::App *sub, bool with_target) {
        if (with_target) {
            sub->add_option("target", o.target, "target and its parameters")->required();
        }
        sub->add_option("--seed", o.seed, "seed for randomized steps");
        sub->add_option("--shots", o.shots, "shots per measurement setting");
        sub->add_option("--restarts", o.restarts, "see-saw restarts");
        sub->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", o.out_dir, "directory for matrix files and report.json");
        sub->add_flag("--quiet", o.quiet, "print only the headline scalar");
    };
    CLI::App *witness = app.add_subcommand("witness", "construct W0, tau0, c0");
    CLI::App *decompose = app.add_subcommand("decompose", "identity plus local measurement settings");
    CLI::App *verify = app.add_subcommand("verify", "run the invariant suite for a target");
    CLI::App *estimate = app.add_subcommand("estimate", "finite-shot estimate of Tr(W rho)");
    CLI::App *threshold = app.add_subcommand("threshold", "lemma1 | lemma2 | frustum predicates");
    for (CLI::App *sub : {witness, decompose, verify, estimate, threshold}) {
        add_common(sub, true);
    }
    estimate->add_option("--state", o.state, "state to measure")->check(CLI::IsMember({"rho0", "tau0", "mixed"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kBadInput;
    }

    const auto start = std::chrono::steady_clock::now();
    Report report(join(args));
    int code = kPass;
    try {
        if (witness->parsed()) {
            cmd_witness(o, report);
        } else if (decompose->parsed()) {
            cmd_decompose(o, report);
        } else if (verify->parsed()) {
            cmd_verify(o, report);
        } else if (estimate->parsed()) {
            cmd_estimate(o, report);
        } else {
            cmd_threshold(o, report);
        }
        if (!report.failures().empty()) {
            code = kVerificationFailure;
        }
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const ConsistencyError &e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return kInconsistency;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kInconsistency;
    }

    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json doc = report.finish(o.seed, wall);
    doc["exit_code"] = code;
    if (!o.out_dir.empty()) {
        std::filesystem::create_directories(o.out_dir);
        io::write_file((std::filesystem::path(o.out_dir) / "report.json").string(), doc.dump(2) + "\n");
    }
    if (o.quiet) {
        out << report.headline() << "\n";
    } else if (o.format == "csv") {
        emit_csv(doc, out);
    } else {
        out << doc.dump(2) << "\n";
    }
    if (code == kVerificationFailure) {
        err << "verification failed:";
        for (const auto &f : report.failures()) {
            err << " " << f;
        }
        err << "\n";
    }
    return code;
}

}  // namespace witgeom::cli
