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

#include <cstdint>
#include <string>
#include <vector>

#include "witgeom/matrix.hpp"
#include "witgeom/states.hpp"
#include "witgeom/witness.hpp"

namespace witgeom {

/// One complete local projective measurement per party, plus a real weight
/// attached to every joint outcome. Outcomes are indexed big-endian over the
/// parties' basis sizes.
class MeasurementSetting {
   public:
    /// Throws InputError unless every party basis is complete and orthogonal
    /// within 1e-10 and there is one weight per joint outcome.
    MeasurementSetting(std::vector<std::vector<CMatrix>> party_bases, std::vector<double> weights);

    /// Bases given by orthonormal vectors, one list per party.
    static MeasurementSetting from_vectors(const std::vector<std::vector<CVector>> &party_vectors,
                                           std::vector<double> weights);

    const std::vector<std::vector<CMatrix>> &party_bases() const { return party_bases_; }
    const std::vector<double> &weights() const { return weights_; }
    std::size_t outcome_count() const { return weights_.size(); }
    SystemShape shape() const;
    std::vector<int> outcome_digits(std::size_t outcome) const;

    CMatrix outcome_projector(std::size_t outcome) const;
    /// sum over outcomes of weight x (tensor of outcome projections).
    CMatrix observable() const;
    /// Born probabilities of every joint outcome.
    std::vector<double> probabilities(const DensityState &rho) const;

   private:
    std::vector<std::vector<CMatrix>> party_bases_;
    std::vector<double> weights_;
};

struct WeightedSetting {
    std::string label;
    double weight;
    MeasurementSetting setting;
};

/// identity_coeff I + sum_s weight_s observable_s.
struct WitnessDecomposition {
    SystemShape shape;
    double identity_coeff = 0;
    std::vector<WeightedSetting> settings;

    CMatrix reconstruct() const;
    double exact_value(const DensityState &rho) const;
};

/// W0 = (2/3) I - 2 tau0 measured along z, x and y on both qubits.
WitnessDecomposition two_qubit_decomposition();

/// W0 = (2/(d+1)) I - d tau0 for odd prime d with d + 1 settings built from
/// the projection families P_u(r) x P_v(d - r).
WitnessDecomposition qudit_decomposition(int d);

/// (1/d) sum_r P_u(r) x P_v(d - r) for setting j in [0, d); j == d selects
/// the u = (1,0), v = (d-1,0) setting.
CMatrix qudit_setting_projections(int d, int j);
/// The matching spin-matrix sum (1/d^2) sum_k S_u^k x S_v^k in index form.
CMatrix qudit_setting_spin_sum(int d, int j);
/// tau0 assembled from the spin-matrix sums of all d + 1 settings.
CMatrix qudit_tau0_spin_form(int d);

/// t [(5/4) I - 2 (P+_111 + P-_221 + P-_212 + P+_122)].
WitnessDecomposition three_qubit_decomposition(double t);

/// Separable product states whose uniform average is Q for n qubits.
std::vector<ProductProjection> ghz_q_terms(int n);

struct GhzDecomposition {
    double a = 0;
    double b = 0;
    double c = 0;
    /// tau0 = x Delta + (1 - x) Q.
    double x = 0;
    double x_golden = 0;
    Witness witness;
    WitnessDecomposition decomposition;
};

/// W0 = a I - b Delta - c Q for the n-qubit GHZ state.
GhzDecomposition ghz_decomposition(int n);

/// Conjugates party `party`'s projections by the unitary u, so the result
/// decomposes U W U^dagger with U = u acting on that party.
WitnessDecomposition conjugate_party(const WitnessDecomposition &dec, int party, const CMatrix &u);

struct ShotEstimate {
    double estimate = 0;
    double stderr_ = 0;
    long shots_per_setting = 0;
    std::vector<double> setting_means;
};

/// Samples every setting's joint outcome distribution and returns the plug-in
/// estimate of Tr(W rho). Each setting draws from its own substream derived
/// from (seed, setting index).
ShotEstimate shot_estimate(const WitnessDecomposition &dec, const DensityState &rho, long shots_per_setting,
                           std::uint64_t seed);

}  // namespace witgeom
