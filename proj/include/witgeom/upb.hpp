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

#include <span>
#include <vector>

#include "witgeom/decomposition.hpp"
#include "witgeom/separability.hpp"
#include "witgeom/states.hpp"
#include "witgeom/witness.hpp"

namespace witgeom {

/// Orthonormal family of m < N product vectors, stored factored.
class UpbSet {
   public:
    /// Throws InputError when factors do not match the shape, the family is
    /// not orthonormal within 1e-10, or m >= N.
    UpbSet(SystemShape shape, std::vector<ProductProjection> vectors);

    const SystemShape &shape() const { return shape_; }
    const std::vector<ProductProjection> &vectors() const { return vectors_; }
    int m() const { return static_cast<int>(vectors_.size()); }
    int n_total() const { return static_cast<int>(shape_.total()); }
    /// Matrix of inner products <phi_i|phi_j>, m x m.
    CMatrix gram() const;

   private:
    SystemShape shape_;
    std::vector<ProductProjection> vectors_;
};

/// The five-state two-qutrit TILES family.
UpbSet upb_tiles();

/// (1/m) sum_k |phi_k><phi_k|
DensityState mu0(const UpbSet &upb);
/// (N/(N-m)) D0 - (m/(N-m)) mu0
DensityState bound_entangled(const UpbSet &upb);

struct EpsilonEstimate {
    double epsilon;    ///< m * (best product-state value of Tr(mu0 pi))
    double min_value;  ///< best value of Tr(mu0 pi)
    ProductProjection argmin;
    int consensus;
    int restarts;
    double s0() const;
    int m;
    int n_total;
};

/// Estimates eps/m = inf over separable states of Tr(mu0 sigma) with the
/// see-saw oracle. Throws InputError when the minimum vanishes (the family
/// is extendible) or when eps >= m/N.
EpsilonEstimate estimate_epsilon(const DensityState &mu0, int m, const SeeSawConfig &cfg);

/// (eps N/(N-m)) (mu0 - (eps/m) I), checked against the nearest-point
/// construction through tau0 = (1 - s0) D0 + s0 rho0, s0 = 1 - eps N/m.
Witness farface_witness(const DensityState &mu0, double eps, int m);

/// The far-face witness as identity plus one setting per UPB member. Each
/// setting measures complete local bases that contain the member's factors.
WitnessDecomposition farface_decomposition(const UpbSet &upb, double eps);

/// 1 / max_k p_k
double rho_b_parameter(std::span<const double> p);
/// (N D0 - b mu_b)/(N - b), mu_b = sum_k p_k |phi_k><phi_k|.
DensityState rho_b(const UpbSet &upb, std::span<const double> p);

}  // namespace witgeom
