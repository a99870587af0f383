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

#include <array>
#include <cstdint>
#include <vector>

#include "witgeom/matrix.hpp"
#include "witgeom/states.hpp"

namespace witgeom {

struct PptCut {
    std::vector<int> parties;  ///< 0-based party indices transposed
    double min_eigenvalue;
};

/// Minimum partial-transpose eigenvalue for every bipartite cut. Cuts are
/// listed once per complementary pair: subsets that exclude party 0.
struct PptReport {
    std::vector<PptCut> cuts;

    double min() const;
    bool is_ppt(double tolerance = 1e-10) const { return min() >= -tolerance; }
};

PptReport ppt_report(const DensityState &rho);

struct SeeSawConfig {
    int restarts = 32;
    int max_sweeps = 200;
    double tol = 1e-11;
    std::uint64_t seed = 0;
};

struct SeeSawResult {
    /// Best value found; an upper bound on the true minimum over product states.
    double value;
    ProductProjection argmin;
    /// Restarts whose final value lies within 1e-9 of the best.
    int consensus;
    int restarts;
    /// Every sweep of every restart was non-increasing.
    bool monotone;
    std::vector<double> restart_values;
};

/// Minimizes Tr(H pi) over product projections pi by alternating local
/// minimum-eigenvector updates, restarted from random product states.
SeeSawResult min_over_products(const CMatrix &h, const SystemShape &shape, const SeeSawConfig &cfg);

/// C(phi1, phi2, phi3) of the three-qubit product-state computation.
double bell_c(const std::array<double, 3> &phi);
/// sin(2 theta1) sin(2 theta2) sin(2 theta3) C(phi).
double bell_objective(const std::array<double, 3> &theta, const std::array<double, 3> &phi);

/// Unnormalized three-qubit witness: unit diagonal and anti-diagonal
/// <2, -2, -2, -2>, so that W0(0, t) = (t/4) of this matrix.
CMatrix three_qubit_integer_witness();

struct BellBoundResult {
    double max;
    std::array<double, 3> theta;
    std::array<double, 3> phi;
    int restarts;
};

/// Multistart gradient ascent of bell_objective over all six angles.
BellBoundResult bell_bound_3q(int restarts, std::uint64_t seed);

}  // namespace witgeom
