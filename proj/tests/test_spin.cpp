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

#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "witgeom/spin.hpp"
#include "witgeom/states.hpp"

using namespace witgeom;

TEST(spin_matrix, identity_element) {
    for (int d : {2, 3, 4, 5, 7}) {
        EXPECT_LE(max_abs_diff(spin_matrix({d, 0, 0}), CMatrix::identity(d)), 0.0);
    }
}

TEST(spin_matrix, qubit_paulis) {
    EXPECT_LE(max_abs_diff(spin_matrix({2, 0, 1}), pauli(1)), 1e-15);
    EXPECT_LE(max_abs_diff(spin_matrix({2, 1, 0}), pauli(3)), 1e-15);
}

TEST(spin_matrix, traces_and_orthogonality_d3) {
    const CMatrix s12 = spin_matrix({3, 1, 2});
    const CMatrix s21 = spin_matrix({3, 2, 1});
    EXPECT_NEAR(hs_inner(s12, s12).real(), 3.0, 1e-14);
    EXPECT_LE(std::abs(hs_inner(s12, s21)), 1e-14);
    for (int j = 0; j < 3; j++) {
        for (int k = 0; k < 3; k++) {
            if (j || k) {
                EXPECT_LE(std::abs(spin_matrix({3, j, k}).trace()), 1e-14);
            }
        }
    }
}

TEST(spin_matrix, unitary_and_orthogonal) {
    for (int d : {2, 3, 5, 7}) {
        for (int j1 = 0; j1 < d; j1++) {
            for (int k1 = 0; k1 < d; k1++) {
                const CMatrix s = spin_matrix({d, j1, k1});
                EXPECT_LE(max_abs_diff(s.adjoint() * s, CMatrix::identity(d)), 1e-12);
                for (int j2 = 0; j2 < d; j2++) {
                    for (int k2 = 0; k2 < d; k2++) {
                        const double expect = (j1 == j2 && k1 == k2) ? d : 0.0;
                        EXPECT_LE(std::abs(hs_inner(s, spin_matrix({d, j2, k2})) - expect), 1e-12);
                    }
                }
            }
        }
    }
}

TEST(spin_index, reduces_modulo_d) {
    const SpinIndex u(5, 7, -1);
    EXPECT_EQ(u.j, 2);
    EXPECT_EQ(u.k, 4);
    EXPECT_EQ(u.scaled(3), SpinIndex(5, 1, 2));
    EXPECT_THROW(SpinIndex(1, 0, 0), InputError);
}

TEST(spin_expand, maximally_mixed) {
    const SpinCoefficients s = spin_expand(CMatrix::identity(4) * 0.25, 4);
    for (int j = 0; j < 4; j++) {
        for (int k = 0; k < 4; k++) {
            EXPECT_LE(std::abs(s.at(j, k) - (j == 0 && k == 0 ? 1.0 : 0.0)), 1e-15);
        }
    }
}

TEST(spin_expand, basis_element) {
    const SpinCoefficients s = spin_expand(spin_matrix({3, 1, 1}), 3);
    for (int j = 0; j < 3; j++) {
        for (int k = 0; k < 3; k++) {
            EXPECT_LE(std::abs(s.at(j, k) - (j == 1 && k == 1 ? 3.0 : 0.0)), 1e-14);
        }
    }
}

TEST(spin_expand, round_trip) {
    std::mt19937_64 rng(21);
    for (int d : {2, 3, 5, 6}) {
        const CMatrix a = witgeom::testing::random_hermitian(d, rng);
        EXPECT_LE(max_abs_diff(spin_reconstruct(spin_expand(a, d)), a), 1e-10);
        const CMatrix g = witgeom::testing::random_matrix(d, rng);
        EXPECT_LE(max_abs_diff(spin_reconstruct(spin_expand(g, d)), g), 1e-10);
    }
    EXPECT_THROW(spin_expand(CMatrix::identity(3), 4), InputError);
}

TEST(projection_P, qubit_x) {
    const CMatrix p = projection_P({2, 0, 1}, 0);
    EXPECT_LE(max_abs_diff(p, (CMatrix::identity(2) + pauli(1)) * 0.5), 1e-15);
}

TEST(projection_P, rejects_bad_inputs) {
    EXPECT_THROW(projection_P({3, 0, 0}, 0), InputError);
    EXPECT_THROW(projection_P({2, 1, 1}, 0), InputError);
    EXPECT_THROW(projection_P({4, 1, 0}, 0), InputError);
    EXPECT_THROW(projection_P({9, 1, 1}, 0), InputError);
}

TEST(projection_P, d3_u11) {
    for (int r = 0; r < 3; r++) {
        const CMatrix p = projection_P({3, 1, 1}, r);
        EXPECT_LE(max_abs_diff(p * p, p), 1e-12);
        EXPECT_NEAR(p.trace().real(), 1.0, 1e-12);
    }
}

class ProjectionFamily : public ::testing::TestWithParam<int> {};

TEST_P(ProjectionFamily, projector_properties) {
    const int d = GetParam();
    for (int j = 0; j < d; j++) {
        for (int k = 0; k < d; k++) {
            if (!j && !k) {
                continue;
            }
            const SpinIndex u(d, j, k);
            const CMatrix s = spin_matrix(u);
            std::vector<CMatrix> ps;
            CMatrix sum(d);
            for (int r = 0; r < d; r++) {
                ps.push_back(projection_P(u, r));
                sum += ps.back();
                EXPECT_TRUE(is_hermitian(ps.back(), 1e-12));
                EXPECT_LE(max_abs_diff(ps.back() * s, s * ps.back()), 1e-10);
            }
            EXPECT_LE(max_abs_diff(sum, CMatrix::identity(d)), 1e-10);
            for (int r = 0; r < d; r++) {
                for (int q = 0; q < d; q++) {
                    const CMatrix expect = r == q ? ps[r] : CMatrix(d);
                    EXPECT_LE(max_abs_diff(ps[r] * ps[q], expect), 1e-10);
                }
            }
        }
    }
}

INSTANTIATE_TEST_SUITE_P(primes, ProjectionFamily, ::testing::Values(3, 5, 7));

TEST(spin_relations, small_dims) {
    EXPECT_LE(spin_relations_check(2).max_deviation(), 1e-12);
    EXPECT_LE(spin_relations_check(3).max_deviation(), 1e-12);
    EXPECT_LE(spin_relations_check(5).max_deviation(), 1e-10);
    const SpinRelationsReport r7 = spin_relations_check(7);
    EXPECT_TRUE(r7.passed());
    EXPECT_LE(r7.power, 1e-10);
}
