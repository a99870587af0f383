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

namespace witgeom {

/// Rank-one product operator |psi_1><psi_1| x ... x |psi_n><psi_n|.
struct ProductProjection {
    std::vector<CVector> locals;

    /// Normalizes every local vector; throws InputError on a zero vector.
    explicit ProductProjection(std::vector<CVector> locals);

    CVector vector() const;
    CMatrix matrix() const;
    SystemShape shape() const;
};

// ---- bipartite d x d -------------------------------------------------------

/// sum_k |kk> / sqrt(d), as a density on (d, d).
DensityState max_entangled(int d);
/// |psi_a> = sum_k a_k |kk>; requires sum a_k^2 = 1.
DensityState psi_a(int d, std::span<const double> a);
/// p rho_a + (1 - p) sigma.
DensityState noisy_mixture(double p, const DensityState &rho_a, const DensityState &sigma);
/// Random density within Hilbert-Schmidt distance delta of I/N, deterministic in seed.
DensityState noise_ball(const SystemShape &shape, double delta, std::uint64_t seed);
/// d/(d+1) D0 + 1/(d+1) rho0: the nearest separable state to max_entangled(d).
DensityState tau0_closed_form(int d);

// ---- n-qubit GHZ ------------------------------------------------------------

DensityState ghz(int n);

struct DeltaQ {
    DensityState delta;  ///< (|0..0><0..0| + |1..1><1..1|) / 2
    DensityState q;      ///< D0 + 2^-n (|0..0><1..1| + h.c.)
};
DeltaQ delta_and_q(int n);

/// 1 / (2^{n-1} + 1)
double ghz_s0(int n);
/// (1 - s0) D0 + s0 rho0, cross-checked against s0 Delta + (1 - s0) Q.
DensityState tau_tilde_ghz(int n);

// ---- three qubits -----------------------------------------------------------

/// Anti-diagonal parameters of an 8x8 density with 1/8 on the diagonal.
/// v[0] sits at (3,4), v[1] at (2,5), v[2] at (1,6), v[3] at (0,7).
struct FourVector {
    std::array<double, 4> v;

    CMatrix matrix() const;
};

enum class PauliAxis { X = 1, Y = 2 };

CMatrix pauli(int axis);  // 0 = I, 1 = X, 2 = Y, 3 = Z

struct PauliCombo {
    CMatrix density;                          ///< (1/8)[I + sign s_j s_k s_l]
    std::vector<ProductProjection> products;  ///< four rank-one terms averaging to density
};

/// P^{+/-}_{jkl} with j, k, l in {1 = X, 2 = Y}; sign is +1 or -1.
PauliCombo pauli_combo(int j, int k, int l, int sign);

/// The three-qubit family with anti-diagonal <d, c, 1/8, 1/8>.
DensityState rho_cd(double c, double d);
/// Same family in m = (c + d)/2, t = (c - d)/2 coordinates.
DensityState rho_mt(double m, double t);

struct ThreeQubitCandidates {
    DensityState tau0;
    DensityState tau_tilde;
};
/// Candidate nearest separable states for rho(m, t), t > 0.
ThreeQubitCandidates tau_candidates_3q(double m, double t);

/// Local unitary I x I x X, which maps rho(c, d) to rho(d, c).
CMatrix three_qubit_swap_unitary();

}  // namespace witgeom
