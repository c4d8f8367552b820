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

#ifndef SEIRS_LINALG_HPP
#define SEIRS_LINALG_HPP

#include <array>
#include <complex>
#include <vector>

namespace seirs {

/// Dense square matrix of dimension 1..4.  Everything in this project is
/// a 2x2 infection block or a 4x4 state Jacobian, so a fixed small
/// storage avoids pulling in a general linear algebra dependency.
class Matrix {
  public:
    static constexpr int kMaxDim = 4;

    Matrix() = default;
    explicit Matrix(int n);
    static Matrix identity(int n);

    int dim() const { return n_; }

    double& operator()(int i, int j) { return a_[i * kMaxDim + j]; }
    double operator()(int i, int j) const { return a_[i * kMaxDim + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(double s) const;

    double det() const;
    double frobenius_norm() const;
    double max_abs() const;

  private:
    int n_ = 0;
    std::array<double, kMaxDim * kMaxDim> a_{};
};

/// All eigenvalues: closed form for n <= 2, Faddeev-LeVerrier
/// characteristic polynomial plus Durand-Kerner simultaneous root
/// iteration (1e-12 convergence) for n = 3, 4.
std::vector<std::complex<double>> eigenvalues(const Matrix& m);

/// Largest eigenvalue modulus.
double spectral_radius(const Matrix& m);

/// Solve m * x = rhs by Gaussian elimination with partial pivoting.
/// Throws SingularJacobian when a pivot collapses.
std::vector<double> solve_linear(Matrix m, std::vector<double> rhs);

} // namespace seirs

#endif
