// Copyright (c) 2026 the seirs authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seirs/linalg.hpp"

#include <cmath>
#include <stdexcept>

#include "seirs/errors.hpp"

namespace seirs {

Matrix::Matrix(int n) : n_(n)
{
    if (n < 1 || n > kMaxDim) throw std::invalid_argument("Matrix: dimension must be 1..4");
}

Matrix Matrix::identity(int n)
{
    Matrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    Matrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(i, j) = (*this)(i, j) + o(i, j);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    Matrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(i, j) = (*this)(i, j) - o(i, j);
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    Matrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            double s = 0.0;
            for (int k = 0; k < n_; ++k) s += (*this)(i, k) * o(k, j);
            r(i, j) = s;
        }
    return r;
}

Matrix Matrix::scaled(double s) const
{
    Matrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(i, j) = (*this)(i, j) * s;
    return r;
}

double Matrix::det() const
{
    // Elimination with partial pivoting on a local copy.
    Matrix m = *this;
    double d = 1.0;
    for (int col = 0; col < n_; ++col) {
        int piv = col;
        for (int r = col + 1; r < n_; ++r)
            if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
        if (m(piv, col) == 0.0) return 0.0;
        if (piv != col) {
            for (int j = 0; j < n_; ++j) std::swap(m(piv, j), m(col, j));
            d = -d;
        }
        d *= m(col, col);
        for (int r = col + 1; r < n_; ++r) {
            double f = m(r, col) / m(col, col);
            for (int j = col; j < n_; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return d;
}

double Matrix::frobenius_norm() const
{
    double s = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) s += (*this)(i, j) * (*this)(i, j);
    return std::sqrt(s);
}

double Matrix::max_abs() const
{
    double s = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) s = std::max(s, std::abs((*this)(i, j)));
    return s;
}

namespace {

double trace(const Matrix& m)
{
    double t = 0.0;
    for (int i = 0; i < m.dim(); ++i) t += m(i, i);
    return t;
}

// Coefficients of the monic characteristic polynomial
// lambda^n - c[0] lambda^(n-1) - c[1] lambda^(n-2) - ... - c[n-1]
// via the Faddeev-LeVerrier recursion.
std::vector<double> char_poly(const Matrix& a)
{
    const int n = a.dim();
    std::vector<double> c(n);
    Matrix m = a;
    c[0] = trace(m);
    for (int k = 1; k < n; ++k) {
        Matrix shifted = m;
        for (int i = 0; i < n; ++i) shifted(i, i) -= c[k - 1];
        m = a * shifted;
        c[k] = trace(m) / (k + 1);
    }
    return c;
}

// Durand-Kerner simultaneous iteration for all roots of a monic
// polynomial.  Dimension is at most 4, so convergence is quick.
std::vector<std::complex<double>> poly_roots(const std::vector<double>& c)
{
    using cplx = std::complex<double>;
    const int n = static_cast<int>(c.size());

    auto eval = [&](cplx z) {
        cplx v = 1.0;
        for (int k = 0; k < n; ++k) v = v * z - c[k];
        return v;
    };

    double bound = 1.0;
    for (double ck : c) bound = std::max(bound, 1.0 + std::abs(ck));

    std::vector<cplx> z(n);
    const cplx seed(0.4, 0.9);
    cplx p = 1.0;
    for (int i = 0; i < n; ++i) {
        p *= seed;
        z[i] = p * bound;
    }

    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            cplx denom = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= z[i] - z[j];
            if (denom == cplx(0.0, 0.0)) {
                z[i] += cplx(1e-8, 1e-8);
                denom = 1.0;
                for (int j = 0; j < n; ++j)
                    if (j != i) denom *= z[i] - z[j];
            }
            cplx step = eval(z[i]) / denom;
            z[i] -= step;
            worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        if (worst < 1e-12) break;
    }
    return z;
}

} // namespace

std::vector<std::complex<double>> eigenvalues(const Matrix& m)
{
    using cplx = std::complex<double>;
    const int n = m.dim();
    if (n == 1) return {cplx(m(0, 0), 0.0)};
    if (n == 2) {
        double tr = m(0, 0) + m(1, 1);
        double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        double disc = tr * tr - 4.0 * det;
        if (disc >= 0.0) {
            double s = std::sqrt(disc);
            return {cplx((tr + s) / 2.0, 0.0), cplx((tr - s) / 2.0, 0.0)};
        }
        double s = std::sqrt(-disc);
        return {cplx(tr / 2.0, s / 2.0), cplx(tr / 2.0, -s / 2.0)};
    }
    return poly_roots(char_poly(m));
}

double spectral_radius(const Matrix& m)
{
    double r = 0.0;
    for (const auto& lam : eigenvalues(m)) r = std::max(r, std::abs(lam));
    return r;
}

std::vector<double> solve_linear(Matrix m, std::vector<double> rhs)
{
    const int n = m.dim();
    if (static_cast<int>(rhs.size()) != n)
        throw std::invalid_argument("solve_linear: size mismatch");
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
        if (std::abs(m(piv, col)) < 1e-300)
            throw SingularJacobian("solve_linear: pivot collapsed");
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
            std::swap(rhs[piv], rhs[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            double f = m(r, col) / m(col, col);
            for (int j = col; j < n; ++j) m(r, j) -= f * m(col, j);
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<double> x(n);
    for (int i = n - 1; i >= 0; --i) {
        double s = rhs[i];
        for (int j = i + 1; j < n; ++j) s -= m(i, j) * x[j];
        x[i] = s / m(i, i);
    }
    return x;
}

} // namespace seirs
