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

#include <vector>

#include "witgeom/matrix.hpp"

namespace witgeom {

/// Label (j, k) of the d-level spin matrix S_(j,k) = sum_r eta^{jr} |r><r+k|.
struct SpinIndex {
    int d;
    int j;
    int k;

    /// Reduces j and k modulo d; throws InputError when d < 2.
    SpinIndex(int d, int j, int k);

    bool is_identity() const { return j == 0 && k == 0; }
    /// (m j, m k) reduced modulo d.
    SpinIndex scaled(long long m) const;

    friend bool operator==(const SpinIndex &, const SpinIndex &) = default;
};

bool is_prime(int n);

/// exp(2 pi i e / d), with e reduced modulo d before the exponential.
cplx eta_power(int d, long long e);

CMatrix spin_matrix(const SpinIndex &u);

/// Coefficients s_u = Tr[S_u^dagger alpha], stored at j*d + k.
class SpinCoefficients {
   public:
    SpinCoefficients(int d, std::vector<cplx> values);

    int d() const { return d_; }
    cplx at(int j, int k) const { return values_.at(static_cast<std::size_t>(j * d_ + k)); }
    const std::vector<cplx> &values() const { return values_; }

   private:
    int d_;
    std::vector<cplx> values_;
};

SpinCoefficients spin_expand(const CMatrix &alpha, int d);
/// alpha = (1/d) sum_u s_u S_u.
CMatrix spin_reconstruct(const SpinCoefficients &s);

/// P_u(r) = (1/d) sum_m (eta^r S_u)^m, a rank-one projection for prime d.
///
/// Requires u != e and d prime. For d = 2 only j*k even is accepted, since
/// the adjoint of the sum picks up a factor -1 when j and k are both odd.
CMatrix projection_P(const SpinIndex &u, int r);

/// Maximum residuals of the standard spin-matrix identities over all indices.
struct SpinRelationsReport {
    int d = 0;
    double orthogonality = 0;  ///< Tr[S_u^dagger S_v] - d [u=v]
    double commutation = 0;    ///< S_01 S_10 - eta S_10 S_01
    double generation = 0;     ///< S_jk - S_10^j S_01^k
    double power = 0;          ///< S_jk^m - eta^{jk m(m-1)/2} S_{mj,mk}
    double adjoint = 0;        ///< S_jk^dagger - eta^{jk} S_{d-j,d-k}
    double unitarity = 0;      ///< S_u^dagger S_u - I

    double max_deviation() const;
    bool passed(double tolerance = 1e-10) const { return max_deviation() <= tolerance; }
};

SpinRelationsReport spin_relations_check(int d);

}  // namespace witgeom
