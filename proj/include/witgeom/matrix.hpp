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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "witgeom/errors.hpp"

namespace witgeom {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

namespace tol {
inline constexpr double herm = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double psd = 1e-9;
inline constexpr double eig = 1e-9;
/// A witness value counts as a detection only below -detect.
inline constexpr double detect = 1e-10;
}  // namespace tol

/// Dense square complex matrix, row-major.
class CMatrix {
   public:
    explicit CMatrix(std::size_t dim);
    CMatrix(std::size_t dim, std::vector<cplx> entries);

    static CMatrix identity(std::size_t dim);
    /// |v><v|
    static CMatrix projector(std::span<const cplx> v);
    /// |a><b|
    static CMatrix outer(std::span<const cplx> a, std::span<const cplx> b);

    std::size_t dim() const { return dim_; }
    cplx &operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
    const cplx &operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    std::span<const cplx> entries() const { return data_; }

    CMatrix adjoint() const;
    CMatrix transpose() const;
    cplx trace() const;
    /// Largest entry modulus.
    double max_abs() const;
    CVector apply(std::span<const cplx> v) const;

    CMatrix &operator+=(const CMatrix &o);
    CMatrix &operator-=(const CMatrix &o);
    CMatrix &operator*=(cplx s);

    friend CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
    friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(double s, CMatrix a) { return a *= cplx(s); }
    friend CMatrix operator*(CMatrix a, double s) { return a *= cplx(s); }
    friend CMatrix operator*(const CMatrix &a, const CMatrix &b);

   private:
    std::size_t dim_;
    std::vector<cplx> data_;
};

double max_abs_diff(const CMatrix &a, const CMatrix &b);
bool is_hermitian(const CMatrix &a, double tolerance = tol::herm);

/// Kronecker product, first argument most significant.
CMatrix tensor(const CMatrix &a, const CMatrix &b);
CMatrix tensor(std::span<const CMatrix> factors);
CVector tensor(std::span<const CVector> factors);

/// Tr[a^dagger b].
cplx hs_inner(const CMatrix &a, const CMatrix &b);
double hs_norm(const CMatrix &a);
double hs_distance(const CMatrix &a, const CMatrix &b);

/// Local dimensions of a multipartite system; N is their product.
class SystemShape {
   public:
    explicit SystemShape(std::vector<int> dims);
    static SystemShape qubits(int n);
    static SystemShape bipartite(int d) { return SystemShape({d, d}); }

    const std::vector<int> &dims() const { return dims_; }
    int parties() const { return static_cast<int>(dims_.size()); }
    int dim(int party) const { return dims_.at(static_cast<std::size_t>(party)); }
    std::size_t total() const { return total_; }

    /// Mixed-radix digits of a global index, party 0 most significant.
    std::vector<int> digits(std::size_t index) const;
    std::size_t index(std::span<const int> digits) const;

    friend bool operator==(const SystemShape &, const SystemShape &) = default;

   private:
    std::vector<int> dims_;
    std::size_t total_ = 1;
};

/// Transposes the tensor indices of the listed parties (0-based).
CMatrix partial_transpose(const CMatrix &a, const SystemShape &shape, std::span<const int> parties);

struct EigenSystem {
    /// Ascending.
    std::vector<double> values;
    /// vectors[k] belongs to values[k].
    std::vector<CVector> vectors;
};

/// Cyclic complex Jacobi; throws InputError when `a` is not Hermitian.
EigenSystem hermitian_eigen(const CMatrix &a);
std::vector<double> hermitian_eigenvalues(const CMatrix &a);
double min_eigenvalue(const CMatrix &a);
/// Number of eigenvalues above `threshold`.
int numerical_rank(const CMatrix &a, double threshold = 1e-9);

/// A certified density matrix together with its tensor-factor shape.
class DensityState {
   public:
    /// Validates Hermiticity, unit trace and positivity; throws InputError otherwise.
    DensityState(CMatrix mat, SystemShape shape);

    static DensityState maximally_mixed(const SystemShape &shape);
    /// |v><v| for a unit vector v.
    static DensityState pure(std::span<const cplx> v, const SystemShape &shape);

    const CMatrix &mat() const { return mat_; }
    const SystemShape &shape() const { return shape_; }
    std::size_t dim() const { return mat_.dim(); }
    double purity() const;

   private:
    CMatrix mat_;
    SystemShape shape_;
};

CMatrix partial_transpose(const DensityState &rho, std::span<const int> parties);

/// Real part of Tr[a b] for Hermitian arguments.
double expectation(const CMatrix &observable, const DensityState &rho);

}  // namespace witgeom
