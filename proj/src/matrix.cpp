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

#include "witgeom/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace witgeom {

CMatrix::CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim == 0) {
        throw InputError("CMatrix: dimension must be positive");
    }
}

CMatrix::CMatrix(std::size_t dim, std::vector<cplx> entries) : dim_(dim), data_(std::move(entries)) {
    if (dim == 0) {
        throw InputError("CMatrix: dimension must be positive");
    }
    if (data_.size() != dim * dim) {
        throw InputError("CMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
                         std::to_string(data_.size()));
    }
}

CMatrix CMatrix::identity(std::size_t dim) {
    CMatrix m(dim);
    for (std::size_t i = 0; i < dim; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

CMatrix CMatrix::projector(std::span<const cplx> v) { return outer(v, v); }

CMatrix CMatrix::outer(std::span<const cplx> a, std::span<const cplx> b) {
    if (a.size() != b.size()) {
        throw InputError("outer: vector lengths differ");
    }
    CMatrix m(a.size());
    for (std::size_t i = 0; i < a.size(); i++) {
        for (std::size_t j = 0; j < b.size(); j++) {
            m(i, j) = a[i] * std::conj(b[j]);
        }
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; i++) {
        for (std::size_t j = 0; j < dim_; j++) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

CMatrix CMatrix::transpose() const {
    CMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; i++) {
        for (std::size_t j = 0; j < dim_; j++) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

cplx CMatrix::trace() const {
    cplx t = 0;
    for (std::size_t i = 0; i < dim_; i++) {
        t += (*this)(i, i);
    }
    return t;
}

double CMatrix::max_abs() const {
    double m = 0;
    for (const auto &z : data_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

CVector CMatrix::apply(std::span<const cplx> v) const {
    if (v.size() != dim_) {
        throw InputError("apply: dimension mismatch");
    }
    CVector out(dim_);
    for (std::size_t i = 0; i < dim_; i++) {
        cplx acc = 0;
        const cplx *row = &data_[i * dim_];
        for (std::size_t j = 0; j < dim_; j++) {
            acc += row[j] * v[j];
        }
        out[i] = acc;
    }
    return out;
}

static void require_same_dim(const CMatrix &a, const CMatrix &b, const char *what) {
    if (a.dim() != b.dim()) {
        throw InputError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()) + ")");
    }
}

CMatrix &CMatrix::operator+=(const CMatrix &o) {
    require_same_dim(*this, o, "operator+");
    for (std::size_t i = 0; i < data_.size(); i++) {
        data_[i] += o.data_[i];
    }
    return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &o) {
    require_same_dim(*this, o, "operator-");
    for (std::size_t i = 0; i < data_.size(); i++) {
        data_[i] -= o.data_[i];
    }
    return *this;
}

CMatrix &CMatrix::operator*=(cplx s) {
    for (auto &z : data_) {
        z *= s;
    }
    return *this;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    require_same_dim(a, b, "operator*");
    const std::size_t n = a.dim();
    CMatrix out(n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t k = 0; k < n; k++) {
            const cplx aik = a(i, k);
            if (aik == cplx(0)) {
                continue;
            }
            for (std::size_t j = 0; j < n; j++) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double m = 0;
    for (std::size_t i = 0; i < a.entries().size(); i++) {
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return m;
}

bool is_hermitian(const CMatrix &a, double tolerance) {
    const double scale = std::max(1.0, a.max_abs());
    for (std::size_t i = 0; i < a.dim(); i++) {
        for (std::size_t j = i; j < a.dim(); j++) {
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tolerance * scale) {
                return false;
            }
        }
    }
    return true;
}

CMatrix tensor(const CMatrix &a, const CMatrix &b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    CMatrix out(na * nb);
    for (std::size_t i1 = 0; i1 < na; i1++) {
        for (std::size_t j1 = 0; j1 < na; j1++) {
            const cplx x = a(i1, j1);
            if (x == cplx(0)) {
                continue;
            }
            for (std::size_t i2 = 0; i2 < nb; i2++) {
                for (std::size_t j2 = 0; j2 < nb; j2++) {
                    out(i1 * nb + i2, j1 * nb + j2) = x * b(i2, j2);
                }
            }
        }
    }
    return out;
}

CMatrix tensor(std::span<const CMatrix> factors) {
    if (factors.empty()) {
        throw InputError("tensor: no factors");
    }
    CMatrix out = factors[0];
    for (std::size_t k = 1; k < factors.size(); k++) {
        out = tensor(out, factors[k]);
    }
    return out;
}

CVector tensor(std::span<const CVector> factors) {
    CVector out{1.0};
    for (const auto &f : factors) {
        CVector next;
        next.reserve(out.size() * f.size());
        for (const auto &x : out) {
            for (const auto &y : f) {
                next.push_back(x * y);
            }
        }
        out = std::move(next);
    }
    return out;
}

cplx hs_inner(const CMatrix &a, const CMatrix &b) {
    require_same_dim(a, b, "hs_inner");
    cplx acc = 0;
    for (std::size_t i = 0; i < a.entries().size(); i++) {
        acc += std::conj(a.entries()[i]) * b.entries()[i];
    }
    return acc;
}

double hs_norm(const CMatrix &a) { return std::sqrt(std::max(0.0, hs_inner(a, a).real())); }

double hs_distance(const CMatrix &a, const CMatrix &b) {
    require_same_dim(a, b, "hs_distance");
    return hs_norm(a - b);
}

SystemShape::SystemShape(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) {
        throw InputError("SystemShape: at least one party required");
    }
    for (int d : dims_) {
        if (d < 2) {
            throw InputError("SystemShape: local dimensions must be >= 2");
        }
        total_ *= static_cast<std::size_t>(d);
    }
}

SystemShape SystemShape::qubits(int n) {
    if (n < 1) {
        throw InputError("SystemShape::qubits: n must be >= 1");
    }
    return SystemShape(std::vector<int>(static_cast<std::size_t>(n), 2));
}

std::vector<int> SystemShape::digits(std::size_t index) const {
    std::vector<int> out(dims_.size());
    for (std::size_t k = dims_.size(); k-- > 0;) {
        out[k] = static_cast<int>(index % static_cast<std::size_t>(dims_[k]));
        index /= static_cast<std::size_t>(dims_[k]);
    }
    return out;
}

std::size_t SystemShape::index(std::span<const int> digits) const {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < dims_.size(); k++) {
        idx = idx * static_cast<std::size_t>(dims_[k]) + static_cast<std::size_t>(digits[k]);
    }
    return idx;
}

CMatrix partial_transpose(const CMatrix &a, const SystemShape &shape, std::span<const int> parties) {
    if (a.dim() != shape.total()) {
        throw InputError("partial_transpose: matrix dimension does not match shape");
    }
    if (parties.empty()) {
        throw InputError("partial_transpose: empty party set");
    }
    std::vector<bool> flip(static_cast<std::size_t>(shape.parties()), false);
    for (int p : parties) {
        if (p < 0 || p >= shape.parties()) {
            throw InputError("partial_transpose: invalid party index " + std::to_string(p));
        }
        flip[static_cast<std::size_t>(p)] = true;
    }
    const std::size_t n = a.dim();
    CMatrix out(n);
    for (std::size_t r = 0; r < n; r++) {
        auto rd = shape.digits(r);
        for (std::size_t c = 0; c < n; c++) {
            auto cd = shape.digits(c);
            auto rr = rd;
            for (std::size_t k = 0; k < flip.size(); k++) {
                if (flip[k]) {
                    std::swap(rr[k], cd[k]);
                }
            }
            out(shape.index(rr), shape.index(cd)) = a(r, c);
        }
    }
    return out;
}

DensityState::DensityState(CMatrix mat, SystemShape shape) : mat_(std::move(mat)), shape_(std::move(shape)) {
    if (mat_.dim() != shape_.total()) {
        throw InputError("DensityState: matrix dimension " + std::to_string(mat_.dim()) + " does not match shape N=" +
                         std::to_string(shape_.total()));
    }
    if (!is_hermitian(mat_, tol::herm)) {
        throw InputError("DensityState: matrix is not Hermitian");
    }
    const cplx tr = mat_.trace();
    if (std::abs(tr - cplx(1.0)) > tol::trace) {
        throw InputError("DensityState: trace " + std::to_string(tr.real()) + " differs from 1");
    }
    const double lo = min_eigenvalue(mat_);
    if (lo < -tol::psd) {
        throw NotPsdError("DensityState: minimum eigenvalue " + std::to_string(lo) + " is negative");
    }
}

DensityState DensityState::maximally_mixed(const SystemShape &shape) {
    return DensityState(CMatrix::identity(shape.total()) * (1.0 / static_cast<double>(shape.total())), shape);
}

DensityState DensityState::pure(std::span<const cplx> v, const SystemShape &shape) {
    return DensityState(CMatrix::projector(v), shape);
}

double DensityState::purity() const { return hs_inner(mat_, mat_).real(); }

CMatrix partial_transpose(const DensityState &rho, std::span<const int> parties) {
    return partial_transpose(rho.mat(), rho.shape(), parties);
}

double expectation(const CMatrix &observable, const DensityState &rho) {
    // Tr[A rho] = <A^dagger, rho> for Hermitian A.
    return hs_inner(observable.adjoint(), rho.mat()).real();
}

}  // namespace witgeom
