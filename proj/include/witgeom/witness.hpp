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

#include <optional>
#include <span>

#include "witgeom/matrix.hpp"

namespace witgeom {

/// Hermitian observable W0 = tau0 + c0 I - rho0 with its construction data.
struct Witness {
    CMatrix w;
    double c0;
    DensityState rho0;
    DensityState tau0;
    std::optional<double> s0;
    std::optional<DensityState> tau_tilde;
};

/// W0 = tau0 + c0 I - rho0 with c0 = Tr(tau0 (rho0 - tau0)).
///
/// Checks Tr(W0 rho0) = -||rho0 - tau0||^2 and throws ConsistencyError if
/// it does not hold; throws InputError when rho0 and tau0 coincide.
Witness nearest_witness(const DensityState &rho0, const DensityState &tau0);

/// I (c0 + (1 - s0)/(N s0)) + tau0 - tau_tilde / s0 with
/// tau_tilde = (1 - s0) D0 + s0 rho0.
Witness segment_witness(const DensityState &rho0, const DensityState &tau0, double s0);

/// Tr(W rho).
double evaluate(const CMatrix &w, const DensityState &rho);
double evaluate(const Witness &w, const DensityState &rho);

/// True when the witness value is below -tol::detect.
inline bool detects(double value) { return value < -tol::detect; }

/// Smallest mixing weight p above which p rho_a + (1 - p) sigma is detected
/// for every sigma within delta of I/4, for rho_a = a|00> + b|11>.
double lemma1_threshold(double a, double b, double delta);

/// Sufficient inseparability condition for p rho_a + (1 - p) sigma on d x d.
bool lemma2_predicate(int d, std::span<const double> a, double p, double delta);

/// Whether (1 - p) sigma + p rho_b lies on the rho0 side of the far-face
/// hyperplane: p(m-b)/(N-b) + (1-p)/N + (1-p) delta / sqrt(m) < eps / m.
bool frustum_predicate(double p, double delta, int n_total, int m, double b, double eps);

}  // namespace witgeom
